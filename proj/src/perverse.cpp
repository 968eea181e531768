#include "bnconv/perverse.hpp"

#include <algorithm>
#include <sstream>

namespace bnconv {

LedgerMismatch::LedgerMismatch(std::string identity, std::string lhs, std::string rhs)
    : std::runtime_error("ledger mismatch in " + identity + ": " + lhs + " != " + rhs),
      identity_(std::move(identity)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

StalkTable::StalkTable(int support_dim, std::vector<StalkRow> rows) : support_dim_(support_dim), rows_(std::move(rows)) {
  int open_count = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Stratum& s = rows_[i].stratum;
    if (s.dim < 0 || s.dim > support_dim_)
      throw std::invalid_argument("stratum " + s.name + " has dimension outside [0, support dim]");
    if (s.open) ++open_count;
    for (std::size_t j = 0; j < i; ++j)
      if (rows_[j].stratum.name == s.name) throw std::invalid_argument("duplicate stratum " + s.name);
  }
  if (open_count > 1) throw std::invalid_argument("at most one open stratum per table");
}

const GradedDim& StalkTable::stalk(const std::string& stratum) const {
  for (const auto& r : rows_)
    if (r.stratum.name == stratum) return r.stalk;
  throw std::out_of_range("no stratum named " + stratum);
}

StalkTable operator+(const StalkTable& a, const StalkTable& b) {
  if (a.rows_.size() != b.rows_.size()) throw std::invalid_argument("stalk tables over different stratifications");
  std::vector<StalkRow> rows;
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].stratum.name != b.rows_[i].stratum.name)
      throw std::invalid_argument("stalk tables over different stratifications");
    rows.push_back({a.rows_[i].stratum, a.rows_[i].stalk + b.rows_[i].stalk});
  }
  return {std::max(a.support_dim_, b.support_dim_), std::move(rows)};
}

bool operator==(const StalkTable& a, const StalkTable& b) {
  if (a.rows_.size() != b.rows_.size()) return false;
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    const auto& x = a.rows_[i];
    const auto& y = b.rows_[i];
    if (x.stratum.name != y.stratum.name || x.stratum.dim != y.stratum.dim || !(x.stalk == y.stalk)) return false;
  }
  return true;
}

bool check_support_condition(const StalkTable& t) {
  for (const auto& row : t.rows())
    for (const auto& [deg, d] : row.stalk.dims())
      if (d != 0 && row.stratum.dim > -deg) return false;
  return true;
}

bool check_ic_support_condition(const StalkTable& t) {
  if (!check_support_condition(t)) return false;
  for (const auto& row : t.rows()) {
    if (row.stratum.open) continue;
    for (const auto& [deg, d] : row.stalk.dims())
      if (d != 0 && row.stratum.dim >= -deg) return false;
  }
  return true;
}

SemismallSplit semismall_cc_decomposition(const CurveContext& ctx) {
  ctx.require_theorem_range();
  if (ctx.hyperelliptic())
    throw std::invalid_argument("semismall_cc_decomposition: hyperelliptic case is not stalk-modelled");

  const Stratum point{kKappaStratum, 0, false};
  const Stratum open{kOpenStratum, 2, true};
  const int surface_dim = 2;

  // delta_C [x] delta_C is the constant sheaf on C x C in degree -2. Over kappa
  // the fibre is the diagonal (a copy of C); over the open stratum it is a point.
  const GradedDim over_point = curve_cohomology(ctx).shifted(surface_dim);
  const GradedDim over_open{{-surface_dim, 1}};
  StalkTable raw(surface_dim, {{point, over_point}, {open, over_open}});

  // A summand supported at kappa can only take the degree-0 stalk there; the
  // IC class of the surface must vanish in degrees >= 0 on the point stratum.
  const BigInt sky_mult = over_point.dim(0);
  StalkTable sky(surface_dim, {{point, GradedDim{{0, sky_mult}}}, {open, GradedDim{}}});

  std::map<int, BigInt> rest;
  for (const auto& [deg, d] : over_point.dims())
    if (deg != 0) rest.emplace(deg, d);
  StalkTable diff(surface_dim, {{point, GradedDim(std::move(rest))}, {open, over_open}});

  if (!(sky + diff == raw)) throw LedgerMismatch("semismall split", "skyscraper + IC(kappa+C-C)", "pushforward");
  if (!check_ic_support_condition(diff))
    throw LedgerMismatch("IC support condition for delta_{kappa+C-C}", "violated", "satisfied");
  return {std::move(raw), std::move(sky), std::move(diff)};
}

std::int64_t h_minus_one_theta_square(const CurveContext& ctx) {
  ctx.require_theorem_range();
  if (ctx.hyperelliptic())
    throw std::invalid_argument("h_minus_one_theta_square: hyperelliptic intersection cohomology is not modelled");
  const int d = ctx.genus() - 1;
  const BigInt via_ih = ih_brill_noether(ctx, d).dim(2 * d - 1);
  const BigInt via_sym = sym_product_cohomology(ctx, d).dim(2 * d - 1);
  if (via_ih != via_sym)
    throw LedgerMismatch("IH^{2d-1}(W_d) = H^{2d-1}(C^(d))", via_ih.get_str(), via_sym.get_str());
  return via_ih.get_si();
}

namespace {

std::string str(std::int64_t v) { return std::to_string(v); }

SummandSearch hyperelliptic_search(const CurveContext& ctx) {
  const BNClass theta = theta_class(ctx);
  const RepElement square = convolve(theta, theta).rep();
  const IrrepLabel adj = adjoint_label(ctx.group());
  if (square.multiplicity(adj) != 1)
    throw LedgerMismatch("adjoint multiplicity in theta*theta", str(square.multiplicity(adj)), "1");
  const RepElement split = hyperelliptic_three_way_split(ctx);
  if (split.multiplicity(adj) != 1)
    throw LedgerMismatch("adjoint multiplicity in st*st", str(split.multiplicity(adj)), "1");
  return SummandSearch{adj, std::nullopt, std::nullopt, std::nullopt, {}, square};
}

}  // namespace

SummandSearch unique_summand_search(const CurveContext& ctx) {
  ctx.require_theorem_range();
  if (ctx.hyperelliptic()) return hyperelliptic_search(ctx);

  const int g = ctx.genus();
  const GroupType group = ctx.group();

  const std::int64_t budget = h_minus_one_theta_square(ctx);
  if (budget != 2 * g) throw LedgerMismatch("dim H^{-1}(theta*theta) = dim H^1(X)", str(budget), str(2 * g));

  if (!check_embedding_step1(ctx))
    throw LedgerMismatch("delta_{2g-3}*delta_1 embeds in theta*theta", "false", "true");

  const BNClass d_top = delta_r(ctx, 2 * g - 3);
  const BNClass d_dual = kappa_minus_curve_class(ctx);
  if (!(d_top == d_dual))
    throw LedgerMismatch("delta_{2g-3} = delta_{kappa-C}", d_top.rep().to_string(), d_dual.rep().to_string());

  // delta_C * delta_{kappa-C} = skyscraper + one more irreducible summand.
  const RepElement chain = convolve(curve_class(ctx), d_dual).rep();
  const IrrepLabel trivial = IrrepLabel::trivial(group);
  RepElement rest = chain - RepElement(trivial);
  if (chain.multiplicity(trivial) != 1 || rest.size() != 1 || rest.terms().begin()->second != 1)
    throw LedgerMismatch("delta_C * delta_{kappa-C} = skyscraper + A", chain.to_string(),
                         "V(0) + one irreducible");
  const IrrepLabel candidate = rest.labels().front();

  const SemismallSplit split = semismall_cc_decomposition(ctx);
  const std::int64_t consumed = split.difference.stalk(kKappaStratum).dim(-1).get_si();
  const std::int64_t sky_part = split.skyscraper.stalk(kKappaStratum).dim(-1).get_si();
  if (sky_part != 0) throw LedgerMismatch("H^{-1}(skyscraper)", str(sky_part), "0");

  const std::int64_t remaining = budget - consumed;
  if (remaining != 0)
    throw LedgerMismatch("H^{-1} budget after removing delta_{kappa+C-C}", str(remaining), "0");

  if (!(candidate == adjoint_label(group)))
    throw LedgerMismatch("A is the adjoint representation", candidate.to_string(),
                         adjoint_label(group).to_string());

  const RepElement square = convolve(theta_class(ctx), theta_class(ctx)).rep();
  if (square.multiplicity(candidate) != 1)
    throw LedgerMismatch("multiplicity of A in theta*theta", str(square.multiplicity(candidate)), "1");

  // Contributions are nonnegative and sum to the budget, so every summand
  // other than A contributes zero.
  SummandSearch out{candidate, budget, consumed, remaining, {}, square};
  for (const IrrepLabel& l : square.labels()) out.contributions.emplace_back(l, l == candidate ? consumed : 0);
  return out;
}

RepElement hyperelliptic_three_way_split(const CurveContext& ctx) {
  ctx.require_theorem_range();
  if (!ctx.hyperelliptic())
    throw std::invalid_argument("hyperelliptic_three_way_split: curve is not hyperelliptic (two summands there)");
  const GroupType group = ctx.group();
  const IrrepLabel st = IrrepLabel::fundamental(group, 1);
  RepElement split = klimyk_tensor(st, st);
  const bool ok = split.size() == 3 &&
                  std::all_of(split.terms().begin(), split.terms().end(), [](const auto& t) { return t.second == 1; }) &&
                  split.multiplicity(adjoint_label(group)) == 1;
  if (!ok) throw LedgerMismatch("st*st over " + group.to_string(), split.to_string(), "three multiplicity-one summands");
  return split;
}

}  // namespace bnconv
