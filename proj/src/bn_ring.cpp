#include "bnconv/bn_ring.hpp"

#include <algorithm>
#include <stdexcept>

namespace bnconv {

namespace {

void require_group(const CurveContext& ctx, const RepElement& rep) {
  if (rep.group() != ctx.group())
    throw std::invalid_argument("class over " + rep.group().to_string() + " does not belong to a genus-" +
                                std::to_string(ctx.genus()) + " curve (" + ctx.group().to_string() + ")");
}

void require_non_hyperelliptic(const CurveContext& ctx, const char* what) {
  if (ctx.hyperelliptic()) throw std::invalid_argument(std::string(what) + ": needs a non-hyperelliptic curve");
}

}  // namespace

BNClass::BNClass(const CurveContext& ctx, RepElement rep) : ctx_(ctx), rep_(std::move(rep)) {
  require_group(ctx_, rep_);
}

void BNClass::check_context(const BNClass& o) const {
  if (!(ctx_ == o.ctx_)) throw std::invalid_argument("classes belong to different curves");
}

std::optional<std::string> BNClass::name_of(const IrrepLabel& label) const { return dictionary_name(ctx_, label); }

std::vector<BNClass::Term> BNClass::terms() const {
  std::vector<Term> out;
  for (const auto& [w, m] : rep_.terms()) {
    IrrepLabel label(rep_.group(), w);
    BigInt dim = weyl_dim(label);
    auto name = name_of(label);
    out.push_back(Term{std::move(label), std::move(dim), m, std::move(name)});
  }
  std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.label.weight() < b.label.weight();
  });
  return out;
}

BNClass& BNClass::operator+=(const BNClass& o) {
  check_context(o);
  rep_ += o.rep_;
  return *this;
}

BNClass& BNClass::operator-=(const BNClass& o) {
  check_context(o);
  rep_ -= o.rep_;
  return *this;
}

std::optional<std::string> dictionary_name(const CurveContext& ctx, const IrrepLabel& label) {
  if (ctx.hyperelliptic() || label.group() != ctx.group()) return std::nullopt;
  const int n = label.group().n;
  const int g = ctx.genus();
  // Positions of the nonzero fundamental coefficients, with repetition.
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(label.weight().size()); ++i)
    for (int c = 0; c < label.weight()[i]; ++c) idx.push_back(i + 1);

  if (idx.empty()) return "skyscraper(κ)";
  if (label == adjoint_label(label.group())) return "delta_{κ+C-C}";
  if (idx.size() == 1) {
    const int r = idx[0];
    if (r == 1) return "delta_C";
    if (r == n - 1) return "delta_{κ-C}";
    if (r <= g - 1) return "delta_{W_" + std::to_string(r) + "}";
    return "delta_" + std::to_string(r);
  }
  if (idx.size() == 2) {
    const int r = std::max(idx[0], idx[1]);
    const int s = std::min(idx[0], idx[1]);
    return "delta_{" + std::to_string(r) + "," + std::to_string(s) + "}";
  }
  return std::nullopt;
}

BNClass delta_r(const CurveContext& ctx, int r) {
  const int top = 2 * ctx.genus() - 2;
  if (r < 0 || r > top)
    throw std::out_of_range("delta(" + std::to_string(r) + ") out of range 0.." + std::to_string(top));
  return {ctx, exterior_power_class(ctx.group(), r)};
}

BNClass theta_class(const CurveContext& ctx) {
  const int g = ctx.genus();
  if (!ctx.hyperelliptic()) return delta_r(ctx, g - 1);
  // delta_{g-1} - delta_{g-3}; the difference telescopes to V(w_{g-1}).
  BNClass theta = delta_r(ctx, g - 1);
  if (g >= 3) theta -= delta_r(ctx, g - 3);
  return theta;
}

BNClass skyscraper_class(const CurveContext& ctx) { return {ctx, RepElement(IrrepLabel::trivial(ctx.group()))}; }

BNClass curve_class(const CurveContext& ctx) { return delta_r(ctx, 1); }

BNClass convolve(const BNClass& a, const BNClass& b) {
  if (!(a.context() == b.context())) throw std::invalid_argument("convolution of classes on different curves");
  return {a.context(), tensor(a.rep(), b.rep())};
}

BNClass dual_class(const BNClass& a) { return {a.context(), dual(a.rep())}; }

BNClass kappa_minus_curve_class(const CurveContext& ctx) { return dual_class(curve_class(ctx)); }

std::vector<std::pair<int, int>> conv_delta_formula(const CurveContext& ctx, int i, int j) {
  require_non_hyperelliptic(ctx, "conv_delta_formula");
  if (j < 0 || i < j) throw std::invalid_argument("conv_delta_formula: need i >= j >= 0");
  if (i + j > 2 * ctx.genus() - 2) throw std::invalid_argument("conv_delta_formula: need i + j <= 2g-2");
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v <= j; ++v) out.emplace_back(i + j - v, v);
  return out;
}

RepElement delta_rs_rep(const CurveContext& ctx, int r, int s) {
  const GroupType g = ctx.group();
  const IrrepLabel a = IrrepLabel::fundamental(g, r);
  const IrrepLabel b = IrrepLabel::fundamental(g, s);
  Weight w = a.weight();
  for (std::size_t k = 0; k < w.size(); ++k) w[k] += b.weight()[k];
  return RepElement(IrrepLabel(g, std::move(w)));
}

bool check_conv_delta_formula(const CurveContext& ctx, int i, int j) {
  RepElement expected(ctx.group());
  for (const auto& [r, s] : conv_delta_formula(ctx, i, j)) expected += delta_rs_rep(ctx, r, s);
  const RepElement actual = convolve(delta_r(ctx, i), delta_r(ctx, j)).rep();
  return actual == expected &&
         std::all_of(actual.terms().begin(), actual.terms().end(), [](const auto& t) { return t.second == 1; });
}

bool contains(const RepElement& whole, const RepElement& sub) {
  for (const auto& [w, m] : sub.terms()) {
    if (m <= 0) continue;
    auto it = whole.terms().find(w);
    if (it == whole.terms().end() || it->second < m) return false;
  }
  return true;
}

bool check_embedding_step1(const CurveContext& ctx) {
  ctx.require_theorem_range();
  require_non_hyperelliptic(ctx, "check_embedding_step1");
  const int g = ctx.genus();
  const BNClass theta = theta_class(ctx);
  const RepElement square = convolve(theta, theta).rep();
  const RepElement sub = convolve(delta_r(ctx, 2 * g - 3), delta_r(ctx, 1)).rep();
  return contains(square, sub);
}

}  // namespace bnconv
