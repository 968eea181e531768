#pragma once

// Cohomology of a curve, its symmetric products, Brill-Noether loci, and the
// signed Poincare polynomials used for projective-bundle identities.

#include "bnconv/graded.hpp"

#include <string>

namespace bnconv {

struct GroupType;

/// Genus and hyperelliptic flag of the curve. The Riemann constant is a named
/// basepoint ("kappa") and carries no coordinates.
class CurveContext {
 public:
  CurveContext(int genus, bool hyperelliptic = false);

  int genus() const { return genus_; }
  bool hyperelliptic() const { return hyperelliptic_; }
  /// SL(2g-2) for non-hyperelliptic curves, Sp(2g-2) otherwise.
  GroupType group() const;

  /// Throws std::invalid_argument unless genus >= 3.
  void require_theorem_range() const;

  friend bool operator==(const CurveContext&, const CurveContext&) = default;

 private:
  int genus_;
  bool hyperelliptic_;
};

/// H^*(C): dims 1, 2g, 1 in degrees 0, 1, 2.
GradedDim curve_cohomology(const CurveContext& ctx);

/// H^*(C^{(d)}) from the generating function
///   sum_d P(C^{(d)}) x^d = (1 + x t)^{2g} / ((1 - x)(1 - x t^2)).
GradedDim sym_product_cohomology(const CurveContext& ctx, int d);

/// IH^*(W_d) in absolute degree, from
///   IH^{d+*}(W_d) = (+)_{a+b=d} Sym^a(H^0(C)[1] + H^2(C)[-1]) (x) Lambda^b(H^1(C)).
/// Requires 1 <= d <= g-1 and a non-hyperelliptic curve.
GradedDim ih_brill_noether(const CurveContext& ctx, int d);

/// Spaces with a known signed Poincare polynomial.
struct Space {
  enum class Kind { Curve, Jacobian, Projective, SymProduct };
  Kind kind;
  int param = 0;  // k for Projective(k), d for SymProduct(d)

  static Space curve() { return {Kind::Curve, 0}; }
  static Space jacobian() { return {Kind::Jacobian, 0}; }
  static Space projective(int k) { return {Kind::Projective, k}; }
  static Space sym_product(int d) { return {Kind::SymProduct, d}; }
};

/// sum_k (-1)^k b_k t^k.
LaurentPoly signed_poincare(const Space& space, const CurveContext& ctx);

struct FibrationCheck {
  LaurentPoly lhs_2g3, rhs_2g3;  // C^{(2g-3)} over kappa - C and its complement
  LaurentPoly lhs_2g2, rhs_2g2;  // C^{(2g-2)} over {kappa} and its complement
  bool holds() const { return lhs_2g3 == rhs_2g3 && lhs_2g2 == rhs_2g2; }
};

/// Both sides of
///   S(C^{(2g-3)}) = S(X) S(P^{g-3}) + S(C) t^{2(g-2)}
///   S(C^{(2g-2)}) = S(X) S(P^{g-2}) + t^{2(g-1)}.
FibrationCheck rr_fibration_identities(const CurveContext& ctx);
bool check_rr_fibration_identities(const CurveContext& ctx);

}  // namespace bnconv
