#include "bnconv/expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace bnconv {

ExprPtr Expr::integer(long v) { return std::make_shared<const Expr>(Expr{Kind::Int, v, nullptr, nullptr}); }
ExprPtr Expr::atom(Kind k) { return std::make_shared<const Expr>(Expr{k, 0, nullptr, nullptr}); }
ExprPtr Expr::indexed(Kind k, long arg) { return std::make_shared<const Expr>(Expr{k, arg, nullptr, nullptr}); }
ExprPtr Expr::dual(ExprPtr e) { return std::make_shared<const Expr>(Expr{Kind::Dual, 0, std::move(e), nullptr}); }
ExprPtr Expr::binary(Kind k, ExprPtr l, ExprPtr r) {
  return std::make_shared<const Expr>(Expr{k, 0, std::move(l), std::move(r)});
}

bool equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value) return false;
  if ((a.lhs == nullptr) != (b.lhs == nullptr) || (a.rhs == nullptr) != (b.rhs == nullptr)) return false;
  if (a.lhs && !equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !equal(*a.rhs, *b.rhs)) return false;
  return true;
}

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
  std::string s;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) s += ", ";
    s += expected[i];
  }
  return s;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected one of {" +
                         describe_expected(expected) + "}, found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

const std::vector<std::string>& factor_starts() {
  static const std::vector<std::string> v{"integer", "'theta'", "'sky'",  "'std'",
                                          "'delta'", "'lambda'", "'dual'", "'('"};
  return v;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != src_.size()) fail({"'+'", "'-'", "'*'", "end of input"});
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found = pos_ < src_.size() ? "'" + std::string(1, src_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, std::move(expected), found);
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  long integer_literal() {
    skip_ws();
    const char* first = src_.data() + pos_;
    const char* last = src_.data() + src_.size();
    long v = 0;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ptr == first || v < 0) fail({"integer"});
    if (ec == std::errc::result_out_of_range) throw ParseError(pos_, {"integer"}, "integer out of range");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (accept('+')) e = Expr::binary(Expr::Kind::Add, e, term());
      else if (accept('-')) e = Expr::binary(Expr::Kind::Sub, e, term());
      else return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (accept('*')) e = Expr::binary(Expr::Kind::Mul, e, factor());
    return e;
  }

  ExprPtr factor() {
    skip_ws();
    if (pos_ >= src_.size()) fail(factor_starts());
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr::integer(integer_literal());
    if (accept('(')) {
      ExprPtr e = expr();
      expect(')');
      return e;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(factor_starts());

    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    const std::string_view word = src_.substr(start, pos_ - start);
    if (word == "theta") return Expr::atom(Expr::Kind::Theta);
    if (word == "sky") return Expr::atom(Expr::Kind::Sky);
    if (word == "std") return Expr::atom(Expr::Kind::Std);
    if (word == "delta" || word == "lambda") {
      expect('(');
      const long arg = integer_literal();
      expect(')');
      return Expr::indexed(word == "delta" ? Expr::Kind::Delta : Expr::Kind::Lambda, arg);
    }
    if (word == "dual") {
      expect('(');
      ExprPtr e = expr();
      expect(')');
      return Expr::dual(std::move(e));
    }
    pos_ = start;
    throw ParseError(start, factor_starts(), "'" + std::string(word) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Mul:
      return 2;
    default:
      return 3;
  }
}

void print_to(const Expr& e, std::string& out) {
  auto child = [&](const Expr& c, bool parens) {
    if (parens) out += '(';
    print_to(c, out);
    if (parens) out += ')';
  };
  switch (e.kind) {
    case Expr::Kind::Int:
      out += std::to_string(e.value);
      return;
    case Expr::Kind::Theta:
      out += "theta";
      return;
    case Expr::Kind::Sky:
      out += "sky";
      return;
    case Expr::Kind::Std:
      out += "std";
      return;
    case Expr::Kind::Delta:
      out += "delta(" + std::to_string(e.value) + ")";
      return;
    case Expr::Kind::Lambda:
      out += "lambda(" + std::to_string(e.value) + ")";
      return;
    case Expr::Kind::Dual:
      out += "dual(";
      print_to(*e.lhs, out);
      out += ")";
      return;
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul: {
      const int p = precedence(e);
      child(*e.lhs, precedence(*e.lhs) < p);
      out += e.kind == Expr::Kind::Add ? " + " : e.kind == Expr::Kind::Sub ? " - " : " * ";
      // Operators are parsed left-associatively.
      child(*e.rhs, precedence(*e.rhs) <= p);
      return;
    }
  }
}

}  // namespace

ExprPtr parse(std::string_view input) { return Parser(input).parse_all(); }

std::string print(const Expr& e) {
  std::string out;
  print_to(e, out);
  return out;
}

BNClass eval(const Expr& e, const CurveContext& ctx) {
  auto guarded = [&](auto&& f) -> BNClass {
    try {
      return f();
    } catch (const EvalError&) {
      throw;
    } catch (const std::exception& ex) {
      throw EvalError("in '" + print(e) + "': " + ex.what());
    }
  };
  switch (e.kind) {
    case Expr::Kind::Int: {
      if (e.value > std::numeric_limits<std::int64_t>::max()) throw EvalError("integer literal too large");
      RepElement r = RepElement(IrrepLabel::trivial(ctx.group()), e.value);
      return BNClass(ctx, std::move(r));
    }
    case Expr::Kind::Theta:
      return theta_class(ctx);
    case Expr::Kind::Sky:
      return skyscraper_class(ctx);
    case Expr::Kind::Std:
      return curve_class(ctx);
    case Expr::Kind::Delta:
      return guarded([&] { return delta_r(ctx, static_cast<int>(std::min<long>(e.value, 1L << 20))); });
    case Expr::Kind::Lambda:
      return guarded([&] {
        return BNClass(ctx, exterior_power_class(ctx.group(), static_cast<int>(std::min<long>(e.value, 1L << 20))));
      });
    case Expr::Kind::Dual:
      return dual_class(eval(*e.lhs, ctx));
    case Expr::Kind::Add:
      return eval(*e.lhs, ctx) + eval(*e.rhs, ctx);
    case Expr::Kind::Sub:
      return eval(*e.lhs, ctx) - eval(*e.rhs, ctx);
    case Expr::Kind::Mul: {
      BNClass l = eval(*e.lhs, ctx);
      BNClass r = eval(*e.rhs, ctx);
      return guarded([&] { return convolve(l, r); });
    }
  }
  throw EvalError("unknown expression node");
}

}  // namespace bnconv
