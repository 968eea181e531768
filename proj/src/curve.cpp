#include "bnconv/curve.hpp"

#include "bnconv/rep_ring.hpp"

#include <stdexcept>
#include <string>

namespace bnconv {

CurveContext::CurveContext(int genus, bool hyperelliptic) : genus_(genus), hyperelliptic_(hyperelliptic) {
  if (genus < 2) throw std::invalid_argument("genus must be >= 2, got " + std::to_string(genus));
}

GroupType CurveContext::group() const {
  return hyperelliptic_ ? GroupType::Sp(2 * genus_ - 2) : GroupType::SL(2 * genus_ - 2);
}

void CurveContext::require_theorem_range() const {
  if (genus_ < 3)
    throw std::invalid_argument("the unique-summand theorem needs genus g >= 3, got g = " +
                                std::to_string(genus_));
}

GradedDim curve_cohomology(const CurveContext& ctx) {
  return GradedDim{{0, 1}, {1, 2 * ctx.genus()}, {2, 1}};
}

GradedDim sym_product_cohomology(const CurveContext& ctx, int d) {
  if (d < 0) throw std::invalid_argument("symmetric product index must be >= 0");
  const int two_g = 2 * ctx.genus();
  std::map<int, BigInt> dims;
  // x^b t^b from (1+xt)^{2g}; the remaining x^{d-b} from 1/((1-x)(1-xt^2))
  // contributes 1 + t^2 + ... + t^{2(d-b)}.
  for (int b = 0; b <= std::min(d, two_g); ++b) {
    const BigInt c = binomial(two_g, b);
    for (int i = 0; i <= d - b; ++i) dims[b + 2 * i] += c;
  }
  return GradedDim(std::move(dims));
}

GradedDim ih_brill_noether(const CurveContext& ctx, int d) {
  if (ctx.hyperelliptic())
    throw std::invalid_argument("ih_brill_noether: hyperelliptic W_d is not a small image; not modelled");
  if (d < 1 || d > ctx.genus() - 1)
    throw std::invalid_argument("ih_brill_noether: need 1 <= d <= g-1, got d = " + std::to_string(d));

  const GradedDim h = curve_cohomology(ctx);
  // Perverse shift [1]: H^0 -> degree -1 and H^2 -> degree +1 (both even),
  // H^1 -> degree 0 (odd).
  const GradedDim shifted = h.shifted(1);
  const GradedDim even_part(std::map<int, BigInt>{{-1, shifted.dim(-1)}, {1, shifted.dim(1)}}, 1);
  const GradedDim odd_part(std::map<int, BigInt>{{0, shifted.dim(0)}}, 1);

  GradedDim relative;
  for (int a = 0; a <= d; ++a) {
    relative += graded_sym_power(even_part, a) * graded_ext_power(odd_part, d - a);
  }
  return relative.shifted(-d);
}

LaurentPoly signed_poincare(const Space& space, const CurveContext& ctx) {
  GradedDim betti;
  const int g = ctx.genus();
  switch (space.kind) {
    case Space::Kind::Curve:
      betti = curve_cohomology(ctx);
      break;
    case Space::Kind::Jacobian: {
      std::map<int, BigInt> dims;
      for (int i = 0; i <= 2 * g; ++i) dims[i] = binomial(2 * g, i);
      betti = GradedDim(std::move(dims));
      break;
    }
    case Space::Kind::Projective: {
      if (space.param < 0) throw std::invalid_argument("projective space of negative dimension");
      std::map<int, BigInt> dims;
      for (int i = 0; i <= space.param; ++i) dims[2 * i] = 1;
      betti = GradedDim(std::move(dims));
      break;
    }
    case Space::Kind::SymProduct:
      betti = sym_product_cohomology(ctx, space.param);
      break;
  }
  LaurentPoly p;
  for (const auto& [k, b] : betti.dims()) p += LaurentPoly::t_power(k, (k % 2 == 0) ? b : BigInt(-b));
  return p;
}

FibrationCheck rr_fibration_identities(const CurveContext& ctx) {
  ctx.require_theorem_range();
  const int g = ctx.genus();
  const LaurentPoly x = signed_poincare(Space::jacobian(), ctx);
  const LaurentPoly c = signed_poincare(Space::curve(), ctx);

  FibrationCheck r;
  r.lhs_2g3 = signed_poincare(Space::sym_product(2 * g - 3), ctx);
  r.rhs_2g3 = x * signed_poincare(Space::projective(g - 3), ctx) + c * LaurentPoly::t_power(2 * (g - 2));
  r.lhs_2g2 = signed_poincare(Space::sym_product(2 * g - 2), ctx);
  r.rhs_2g2 = x * signed_poincare(Space::projective(g - 2), ctx) + LaurentPoly::t_power(2 * (g - 1));
  return r;
}

bool check_rr_fibration_identities(const CurveContext& ctx) { return rr_fibration_identities(ctx).holds(); }

}  // namespace bnconv
