#pragma once

// Classes in the convolution ring of the Jacobian modulo constants, realized
// through the tensor equivalence with Rep(SL(2g-2)) or Rep(Sp(2g-2)).
//
// Dictionary for a non-hyperelliptic curve (n = 2g-2):
//   delta_r        <-> V(w_r)            (w_0 = w_n = 0)
//   delta_{r,s}    <-> V(w_r + w_s)
//   skyscraper(k)  <-> V(0)
//   delta_{k+C-C}  <-> adjoint V(w_1 + w_{n-1})
// Tate twists are not tracked.

#include "bnconv/curve.hpp"
#include "bnconv/rep_ring.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bnconv {

class BNClass {
 public:
  BNClass(const CurveContext& ctx, RepElement rep);

  const CurveContext& context() const { return ctx_; }
  const RepElement& rep() const { return rep_; }

  /// Geometric name of an irreducible summand, if the dictionary assigns one.
  std::optional<std::string> name_of(const IrrepLabel& label) const;

  struct Term {
    IrrepLabel label;
    BigInt dim;
    std::int64_t mult;
    std::optional<std::string> name;
  };
  /// Summands sorted by dimension, then weight.
  std::vector<Term> terms() const;

  BNClass& operator+=(const BNClass& o);
  BNClass& operator-=(const BNClass& o);
  friend BNClass operator+(BNClass a, const BNClass& b) { return a += b; }
  friend BNClass operator-(BNClass a, const BNClass& b) { return a -= b; }
  friend bool operator==(const BNClass& a, const BNClass& b) { return a.ctx_ == b.ctx_ && a.rep_ == b.rep_; }

 private:
  void check_context(const BNClass& o) const;

  CurveContext ctx_;
  RepElement rep_;
};

/// Geometric name from the dictionary table (non-hyperelliptic only).
std::optional<std::string> dictionary_name(const CurveContext& ctx, const IrrepLabel& label);

/// Class of the pushforward of the constant sheaf on C^{(r)}, 0 <= r <= 2g-2.
BNClass delta_r(const CurveContext& ctx, int r);
BNClass theta_class(const CurveContext& ctx);
/// Unit of the convolution product.
BNClass skyscraper_class(const CurveContext& ctx);
BNClass curve_class(const CurveContext& ctx);

BNClass convolve(const BNClass& a, const BNClass& b);
BNClass dual_class(const BNClass& a);
/// delta_{kappa - C}, defined as the dual of delta_C.
BNClass kappa_minus_curve_class(const CurveContext& ctx);

/// (r, s) pairs with delta_i * delta_j = (+) delta_{r,s}: [(i+j-v, v) for v = 0..j].
std::vector<std::pair<int, int>> conv_delta_formula(const CurveContext& ctx, int i, int j);

/// V(w_r + w_s) for the pairs returned by conv_delta_formula.
RepElement delta_rs_rep(const CurveContext& ctx, int r, int s);

/// True iff the pair list for (i, j) matches convolve(delta_i, delta_j) with
/// every multiplicity 1.
bool check_conv_delta_formula(const CurveContext& ctx, int i, int j);

/// delta_{2g-3} * delta_1 embeds in delta_Theta * delta_Theta.
bool check_embedding_step1(const CurveContext& ctx);

/// True if every summand of `sub` occurs in `whole` with at least its multiplicity.
bool contains(const RepElement& whole, const RepElement& sub);

}  // namespace bnconv
