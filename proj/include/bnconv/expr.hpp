#pragma once

// Small expression language over convolution-ring classes:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | 'theta' | 'sky' | 'std'
//           | 'delta' '(' INT ')' | 'lambda' '(' INT ')' | 'dual' '(' expr ')'
//           | '(' expr ')'
//
// An integer literal n denotes n copies of the unit class.

#include "bnconv/bn_ring.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bnconv {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Int, Theta, Sky, Std, Delta, Lambda, Dual, Add, Sub, Mul };

  Kind kind;
  long value = 0;  // Int literal, or the argument of delta/lambda
  ExprPtr lhs;     // operand of dual, left operand of binary operators
  ExprPtr rhs;

  static ExprPtr integer(long v);
  static ExprPtr atom(Kind k);
  static ExprPtr indexed(Kind k, long arg);
  static ExprPtr dual(ExprPtr e);
  static ExprPtr binary(Kind k, ExprPtr l, ExprPtr r);
};

bool equal(const Expr& a, const Expr& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

ExprPtr parse(std::string_view input);

/// Canonical text with minimal parentheses; parse(print(e)) is structurally e.
std::string print(const Expr& e);

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BNClass eval(const Expr& e, const CurveContext& ctx);

}  // namespace bnconv
