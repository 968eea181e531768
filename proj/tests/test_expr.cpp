#include "bnconv/expr.hpp"

#include "doctest.h"

#include <random>

using namespace bnconv;
using K = Expr::Kind;

namespace {

ExprPtr random_expr(std::mt19937& rng, int depth, int max_index) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 5);
  std::uniform_int_distribution<int> idx(0, max_index);
  switch (pick(rng)) {
    case 0: return Expr::integer(idx(rng));
    case 1: return Expr::atom(K::Theta);
    case 2: return Expr::atom(K::Sky);
    case 3: return Expr::atom(K::Std);
    case 4: return Expr::indexed(K::Delta, idx(rng));
    case 5: return Expr::indexed(K::Lambda, idx(rng));
    case 6: return Expr::dual(random_expr(rng, depth - 1, max_index));
    case 7: return Expr::binary(K::Add, random_expr(rng, depth - 1, max_index), random_expr(rng, depth - 1, max_index));
    case 8: return Expr::binary(K::Sub, random_expr(rng, depth - 1, max_index), random_expr(rng, depth - 1, max_index));
    default: return Expr::binary(K::Mul, random_expr(rng, depth - 1, max_index), random_expr(rng, depth - 1, max_index));
  }
}

}  // namespace

TEST_CASE("parse examples") {
  CHECK(equal(*parse("theta * theta"), *Expr::binary(K::Mul, Expr::atom(K::Theta), Expr::atom(K::Theta))));
  const ExprPtr e = parse("delta(3) * delta(1) - sky");
  CHECK(equal(*e, *Expr::binary(K::Sub,
                                Expr::binary(K::Mul, Expr::indexed(K::Delta, 3), Expr::indexed(K::Delta, 1)),
                                Expr::atom(K::Sky))));
  CHECK(equal(*parse("  theta*theta "), *parse("theta * theta")));
  CHECK(equal(*parse("2*std + dual(lambda(2))"),
              *Expr::binary(K::Add, Expr::binary(K::Mul, Expr::integer(2), Expr::atom(K::Std)),
                            Expr::dual(Expr::indexed(K::Lambda, 2)))));
  // left associativity
  CHECK(equal(*parse("sky - sky - sky"),
              *Expr::binary(K::Sub, Expr::binary(K::Sub, Expr::atom(K::Sky), Expr::atom(K::Sky)), Expr::atom(K::Sky))));
}

TEST_CASE("parse errors report offset and expected tokens") {
  try {
    parse("theta *");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 7);
    CHECK(e.expected().size() == 8);
    CHECK(std::string(e.what()).find("offset 7") != std::string::npos);
    CHECK(std::string(e.what()).find("end of input") != std::string::npos);
  }
  try {
    parse("delta(3");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 7);
    CHECK(e.expected() == std::vector<std::string>{"')'"});
  }
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("theta theta"), ParseError);
  CHECK_THROWS_AS(parse("thetas"), ParseError);
  CHECK_THROWS_AS(parse("delta(x)"), ParseError);
  CHECK_THROWS_AS(parse("99999999999999999999999"), ParseError);
}

TEST_CASE("print uses minimal parentheses") {
  CHECK(print(*parse("(theta * theta)")) == "theta * theta");
  CHECK(print(*parse("(sky + std) * theta")) == "(sky + std) * theta");
  CHECK(print(*parse("sky - (std - theta)")) == "sky - (std - theta)");
  CHECK(print(*parse("(sky - std) - theta")) == "sky - std - theta");
  CHECK(print(*parse("dual( delta(2) )")) == "dual(delta(2))");
}

TEST_CASE("parse(print(e)) == e on random trees") {
  std::mt19937 rng(2718);
  for (int i = 0; i < 500; ++i) {
    const ExprPtr e = random_expr(rng, 4, 12);
    const std::string text = print(*e);
    CAPTURE(text);
    const ExprPtr back = parse(text);
    CHECK(equal(*back, *e));
    CHECK(print(*back) == text);
  }
}

TEST_CASE("eval examples") {
  const CurveContext c3(3);
  const BNClass sq = eval(*parse("theta * theta"), c3);
  REQUIRE(sq.terms().size() == 3);
  CHECK(sq.terms()[0].dim == 1);
  CHECK(sq.terms()[1].dim == 15);
  CHECK(sq.terms()[2].dim == 20);
  CHECK(eval(*parse("sky * theta"), c3) == theta_class(c3));
  CHECK(eval(*parse("sky * theta"), CurveContext(4, true)) == theta_class(CurveContext(4, true)));

  const BNClass adj = eval(*parse("delta(3)*delta(1) - sky"), c3);
  CHECK(adj.rep() == RepElement(adjoint_label(c3.group())));

  CHECK(eval(*parse("std"), c3) == curve_class(c3));
  CHECK(eval(*parse("lambda(2)"), c3) == delta_r(c3, 2));
  CHECK(eval(*parse("dual(std)"), c3) == kappa_minus_curve_class(c3));
  CHECK(eval(*parse("3"), c3).rep() == RepElement(IrrepLabel::trivial(c3.group()), 3));
}

TEST_CASE("eval errors carry expression context") {
  const CurveContext c3(3);
  try {
    eval(*parse("theta + delta(9)"), c3);
    FAIL("expected a range error");
  } catch (const EvalError& e) {
    CHECK(std::string(e.what()).find("delta(9)") != std::string::npos);
  }
  CHECK_THROWS_AS(eval(*parse("lambda(5)"), c3), EvalError);
}

TEST_CASE("eval respects ring laws on random small expressions") {
  std::mt19937 rng(161);
  const CurveContext ctx(3);
  for (int i = 0; i < 100; ++i) {
    const std::string a = print(*random_expr(rng, 1, 4));
    const std::string b = print(*random_expr(rng, 1, 4));
    const std::string c = print(*random_expr(rng, 1, 4));
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(c);
    CHECK(eval(*parse("(" + a + ")*((" + b + ")+(" + c + "))"), ctx) ==
          eval(*parse("(" + a + ")*(" + b + ") + (" + a + ")*(" + c + ")"), ctx));
    CHECK(eval(*parse("(" + a + ")*(" + b + ")"), ctx) == eval(*parse("(" + b + ")*(" + a + ")"), ctx));
    CHECK(eval(*parse("dual((" + a + ")*(" + b + "))"), ctx) == eval(*parse("dual(" + a + ")*dual(" + b + ")"), ctx));
  }
}
