#include "bnconv/rep_ring.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <regex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace bnconv {

// ---------------------------------------------------------------------------
// GroupType / IrrepLabel / RepElement

GroupType GroupType::SL(int n) {
  if (n < 2) throw std::invalid_argument("SL(n) needs n >= 2");
  return {Family::A, n};
}

GroupType GroupType::Sp(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("Sp(n) needs even n >= 2");
  return {Family::C, n};
}

std::string GroupType::to_string() const {
  return (family == Family::A ? "SL(" : "Sp(") + std::to_string(n) + ")";
}

GroupType GroupType::parse(const std::string& s) {
  static const std::regex re(R"((SL|Sp)\((\d+)\))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad group name: " + s);
  const int n = std::stoi(m[2]);
  return m[1] == "SL" ? SL(n) : Sp(n);
}

IrrepLabel::IrrepLabel(GroupType group, Weight weight) : group_(group), weight_(std::move(weight)) {
  if (static_cast<int>(weight_.size()) != group_.rank())
    throw std::invalid_argument("weight length " + std::to_string(weight_.size()) + " does not match rank of " +
                                group_.to_string());
  for (int c : weight_)
    if (c < 0) throw std::invalid_argument("highest weight must be dominant");
}

IrrepLabel IrrepLabel::trivial(GroupType group) { return {group, Weight(group.rank(), 0)}; }

IrrepLabel IrrepLabel::fundamental(GroupType group, int i) {
  const int r = group.rank();
  Weight w(r, 0);
  if (i < 0 || i > (group.family == Family::A ? group.n : r))
    throw std::out_of_range("fundamental weight index " + std::to_string(i) + " out of range for " +
                            group.to_string());
  if (i >= 1 && i <= r) w[i - 1] = 1;
  return {group, std::move(w)};
}

bool IrrepLabel::is_trivial() const {
  return std::all_of(weight_.begin(), weight_.end(), [](int c) { return c == 0; });
}

std::string IrrepLabel::to_string() const {
  std::ostringstream os;
  os << "V(";
  bool any = false;
  for (std::size_t i = 0; i < weight_.size(); ++i) {
    if (weight_[i] == 0) continue;
    if (any) os << '+';
    if (weight_[i] != 1) os << weight_[i];
    os << 'w' << i + 1;
    any = true;
  }
  if (!any) os << '0';
  os << ')';
  return os.str();
}

RepElement::RepElement(const IrrepLabel& label, std::int64_t mult) : group_(label.group()) { add(label, mult); }

void RepElement::check_group(const GroupType& g) const {
  if (g != group_)
    throw std::invalid_argument("group mismatch: " + group_.to_string() + " vs " + g.to_string());
}

std::int64_t RepElement::multiplicity(const IrrepLabel& label) const {
  check_group(label.group());
  auto it = terms_.find(label.weight());
  return it == terms_.end() ? 0 : it->second;
}

bool RepElement::is_effective() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

void RepElement::add(const IrrepLabel& label, std::int64_t mult) {
  check_group(label.group());
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(label.weight(), mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<IrrepLabel> RepElement::labels() const {
  std::vector<IrrepLabel> out;
  out.reserve(terms_.size());
  for (const auto& [w, m] : terms_) out.emplace_back(group_, w);
  return out;
}

BigInt RepElement::dimension() const {
  BigInt d = 0;
  for (const auto& [w, m] : terms_) d += BigInt(static_cast<long>(m)) * weyl_dim(IrrepLabel(group_, w));
  return d;
}

RepElement& RepElement::operator+=(const RepElement& o) {
  check_group(o.group_);
  for (const auto& [w, m] : o.terms_) add(IrrepLabel(group_, w), m);
  return *this;
}

RepElement& RepElement::operator-=(const RepElement& o) {
  check_group(o.group_);
  for (const auto& [w, m] : o.terms_) add(IrrepLabel(group_, w), -m);
  return *this;
}

RepElement& RepElement::operator*=(std::int64_t s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, m] : terms_) m *= s;
  return *this;
}

std::string RepElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, m] : terms_) {
    if (!first) os << (m < 0 ? " - " : " + ");
    else if (m < 0) os << '-';
    const auto mag = m < 0 ? -m : m;
    if (mag != 1) os << mag << '*';
    os << IrrepLabel(group_, w).to_string();
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Root-system helpers in epsilon coordinates

namespace {

using Eps = std::vector<int>;

struct EpsHash {
  std::size_t operator()(const Eps& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 0x100000001b3ULL;
    return h;
  }
};

int eps_size(const GroupType& g) { return g.family == Family::A ? g.n : g.n / 2; }

Eps to_eps(const GroupType& g, const Weight& w) {
  Eps x(eps_size(g), 0);
  int s = 0;
  for (int i = g.rank() - 1; i >= 0; --i) {
    s += w[i];
    x[i] = s;
  }
  return x;
}

Weight from_eps(const GroupType& g, const Eps& x) {
  const int r = g.rank();
  Weight w(r);
  for (int i = 0; i < r; ++i) w[i] = x[i] - (i + 1 < static_cast<int>(x.size()) ? x[i + 1] : 0);
  return w;
}

Eps rho(const GroupType& g) {
  const int k = eps_size(g);
  Eps r(k);
  for (int i = 0; i < k; ++i) r[i] = g.family == Family::A ? k - 1 - i : k - i;
  return r;
}

std::vector<Eps> positive_roots(const GroupType& g) {
  const int k = eps_size(g);
  std::vector<Eps> roots;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Eps a(k, 0);
      a[i] = 1;
      a[j] = -1;
      roots.push_back(a);
      if (g.family == Family::C) {
        a[j] = 1;
        roots.push_back(a);
      }
    }
  if (g.family == Family::C)
    for (int i = 0; i < k; ++i) {
      Eps a(k, 0);
      a[i] = 2;
      roots.push_back(a);
    }
  return roots;
}

long dot(const Eps& a, const Eps& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
  return s;
}

Eps add(Eps a, const Eps& b, int scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

// Dominant representative of the Weyl orbit of x.
Eps dominant_rep(const GroupType& g, Eps x) {
  if (g.family == Family::C)
    for (int& c : x) c = c < 0 ? -c : c;
  std::sort(x.begin(), x.end(), std::greater<>());
  return x;
}

// Moves x into the dominant chamber. Returns the determinant of the Weyl
// element used, or 0 if x lies on a wall (nontrivial stabilizer).
int reflect_to_dominant(const GroupType& g, Eps& x) {
  int parity = 0;
  if (g.family == Family::C) {
    for (int& c : x) {
      if (c == 0) return 0;
      if (c < 0) {
        c = -c;
        ++parity;
      }
    }
  }
  const std::size_t k = x.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      if (x[i] == x[j]) return 0;
      if (x[i] < x[j]) ++parity;
    }
  std::sort(x.begin(), x.end(), std::greater<>());
  return parity % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Freudenthal

struct WeightTable {
  std::vector<std::pair<Eps, std::int64_t>> weights;  // every weight, epsilon coordinates
  std::unordered_map<Eps, std::int64_t, EpsHash> dominant;
};

// Dominant mu <= lambda, paired with the height of lambda - mu.
std::vector<std::pair<Eps, long>> dominant_weights_below(const GroupType& g, const Eps& lam) {
  const int k = static_cast<int>(lam.size());
  std::vector<long> lam_prefix(k);
  std::partial_sum(lam.begin(), lam.end(), lam_prefix.begin(), [](long a, long b) { return a + b; });
  const long total = lam_prefix.back();

  std::vector<std::pair<Eps, long>> out;
  Eps x(k, 0);
  auto rec = [&](auto&& self, int pos, int prev, long prefix, long level) -> void {
    if (pos == k) {
      const long slack = lam_prefix[k - 1] - prefix;
      if (g.family == Family::A) {
        if (slack != 0) return;
      } else {
        if (slack % 2 != 0) return;
        level += slack / 2;
      }
      out.emplace_back(x, level);
      return;
    }
    const long cap = std::min<long>(prev, lam_prefix[pos] - prefix);
    for (long v = cap; v >= 0; --v) {
      if (g.family == Family::A && total - prefix - v > v * (k - pos - 1)) break;
      x[pos] = static_cast<int>(v);
      const long p = prefix + v;
      self(self, pos + 1, static_cast<int>(v), p, pos + 1 < k ? level + (lam_prefix[pos] - p) : level);
    }
  };
  // The level sums the first k-1 partial-sum gaps (type A) or those plus half
  // the last gap (type C, where the last simple root is 2e_m).
  rec(rec, 0, lam.empty() ? 0 : lam[0], 0, 0);
  return out;
}

void expand_orbit(const GroupType& g, const Eps& dom, std::int64_t mult, std::vector<std::pair<Eps, std::int64_t>>& out) {
  Eps p = dom;
  std::sort(p.begin(), p.end());
  do {
    if (g.family == Family::A) {
      out.emplace_back(p, mult);
      continue;
    }
    std::vector<int> nz;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] != 0) nz.push_back(static_cast<int>(i));
    for (unsigned mask = 0; mask < (1u << nz.size()); ++mask) {
      Eps s = p;
      for (std::size_t b = 0; b < nz.size(); ++b)
        if (mask & (1u << b)) s[nz[b]] = -s[nz[b]];
      out.emplace_back(std::move(s), mult);
    }
  } while (std::next_permutation(p.begin(), p.end()));
}

std::shared_ptr<const WeightTable> compute_table(const IrrepLabel& label) {
  const GroupType& g = label.group();
  const Eps lam = to_eps(g, label.weight());
  const Eps r = rho(g);
  const auto roots = positive_roots(g);

  auto doms = dominant_weights_below(g, lam);
  std::stable_sort(doms.begin(), doms.end(), [](const auto& a, const auto& b) { return a.second < b.second; });

  auto table = std::make_shared<WeightTable>();
  const Eps lam_rho = add(lam, r);
  const long lam_norm = dot(lam_rho, lam_rho);
  for (const auto& [mu, level] : doms) {
    if (level == 0) {
      table->dominant.emplace(mu, 1);
      continue;
    }
    long sum = 0;
    for (const Eps& alpha : roots) {
      for (int k = 1;; ++k) {
        Eps nu = add(mu, alpha, k);
        auto it = table->dominant.find(dominant_rep(g, nu));
        if (it == table->dominant.end()) break;
        sum += it->second * dot(nu, alpha);
      }
    }
    const Eps mu_rho = add(mu, r);
    const long denom = lam_norm - dot(mu_rho, mu_rho);
    if (denom <= 0 || (2 * sum) % denom != 0)
      throw std::logic_error("Freudenthal recursion: non-integral multiplicity at " + label.to_string());
    const std::int64_t m = 2 * sum / denom;
    if (m <= 0) throw std::logic_error("Freudenthal recursion: dominant weight with zero multiplicity");
    table->dominant.emplace(mu, m);
  }
  for (const auto& [mu, level] : doms) expand_orbit(g, mu, table->dominant.at(mu), table->weights);
  return table;
}

class TableCache {
 public:
  std::shared_ptr<const WeightTable> get(const IrrepLabel& label) {
    {
      std::shared_lock lock(mutex_);
      auto it = tables_.find(label);
      if (it != tables_.end()) return it->second;
    }
    auto table = compute_table(label);
    std::unique_lock lock(mutex_);
    return tables_.try_emplace(label, std::move(table)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return tables_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<IrrepLabel, std::shared_ptr<const WeightTable>> tables_;
};

TableCache& cache() {
  static TableCache c;
  return c;
}

void require_same_group(const IrrepLabel& a, const IrrepLabel& b) {
  if (a.group() != b.group())
    throw std::invalid_argument("tensor product across groups: " + a.group().to_string() + " vs " +
                                b.group().to_string());
}

}  // namespace

std::size_t detail::freudenthal_cache_size() { return cache().size(); }

// ---------------------------------------------------------------------------
// Public operations

BigInt weyl_dim(const IrrepLabel& label) {
  const GroupType& g = label.group();
  const Eps r = rho(g);
  const Eps lr = add(to_eps(g, label.weight()), r);
  BigInt num = 1, den = 1;
  for (const Eps& alpha : positive_roots(g)) {
    num *= dot(lr, alpha);
    den *= dot(r, alpha);
  }
  return num / den;
}

std::map<Weight, std::int64_t> freudenthal_multiplicities(const IrrepLabel& label) {
  const auto table = cache().get(label);
  std::map<Weight, std::int64_t> out;
  for (const auto& [x, m] : table->weights) out.emplace(from_eps(label.group(), x), m);
  return out;
}

RepElement klimyk_tensor(const IrrepLabel& a, const IrrepLabel& b) {
  require_same_group(a, b);
  const GroupType& g = a.group();
  const bool a_small = weyl_dim(a) <= weyl_dim(b);
  const IrrepLabel& small = a_small ? a : b;
  const IrrepLabel& big = a_small ? b : a;

  const auto table = cache().get(small);
  const Eps shift = add(to_eps(g, big.weight()), rho(g));
  const Eps r = rho(g);

  std::map<Weight, std::int64_t> acc;
  for (const auto& [nu, m] : table->weights) {
    Eps y = add(shift, nu);
    const int sign = reflect_to_dominant(g, y);
    if (sign == 0) continue;
    acc[from_eps(g, add(y, r, -1))] += sign * m;
  }

  RepElement out(g);
  for (const auto& [w, m] : acc) {
    if (m < 0) throw std::logic_error("Klimyk: negative multiplicity in " + a.to_string() + " x " + b.to_string());
    if (m > 0) out.add(IrrepLabel(g, w), m);
  }
  return out;
}

RepElement lr_tensor_typeA(const IrrepLabel& a, const IrrepLabel& b) {
  require_same_group(a, b);
  const GroupType& g = a.group();
  if (g.family != Family::A) throw std::invalid_argument("Littlewood-Richardson oracle is for SL(n) only");
  const int n = g.n;
  // Partitions with at most n rows; the last row is 0.
  const std::vector<int> lambda = to_eps(g, a.weight());
  std::vector<int> mu = to_eps(g, b.weight());
  while (!mu.empty() && mu.back() == 0) mu.pop_back();

  std::map<std::vector<int>, std::int64_t> shapes;
  std::vector<int> counts(n, 0);

  // Adds the boxes labelled k as a horizontal strip, row by row, subject to the
  // lattice-word condition against label k-1 (`prev` = its row counts).
  auto place_label = [&](auto&& self, std::size_t k, const std::vector<int>& shape,
                         const std::vector<int>& prev) -> void {
    if (k == mu.size()) {
      ++shapes[shape];
      return;
    }
    std::vector<int> cur(n, 0);
    auto rows = [&](auto&& rows_self, int r, int remaining, int cum_k, int cum_prev) -> void {
      if (r == n) {
        if (remaining != 0) return;
        std::vector<int> next = shape;
        for (int i = 0; i < n; ++i) next[i] += cur[i];
        self(self, k + 1, next, cur);
        return;
      }
      int max_c = remaining;
      if (r > 0) max_c = std::min(max_c, shape[r - 1] - shape[r]);
      if (k > 0) max_c = std::min(max_c, cum_prev - cum_k);
      for (int c = 0; c <= max_c; ++c) {
        cur[r] = c;
        rows_self(rows_self, r + 1, remaining - c, cum_k + c, cum_prev + (k > 0 ? prev[r] : 0));
      }
      cur[r] = 0;
    };
    rows(rows, 0, mu[k], 0, 0);
  };
  place_label(place_label, 0, lambda, counts);

  RepElement out(g);
  for (const auto& [shape, m] : shapes) {
    Weight w(n - 1);
    for (int i = 0; i + 1 < n; ++i) w[i] = shape[i] - shape[i + 1];
    out.add(IrrepLabel(g, std::move(w)), m);
  }
  return out;
}

RepElement tensor(const RepElement& a, const RepElement& b) {
  if (a.group() != b.group())
    throw std::invalid_argument("tensor product across groups: " + a.group().to_string() + " vs " +
                                b.group().to_string());
  RepElement out(a.group());
  for (const auto& [wa, ma] : a.terms())
    for (const auto& [wb, mb] : b.terms()) {
      RepElement t = klimyk_tensor(IrrepLabel(a.group(), wa), IrrepLabel(b.group(), wb));
      out += (ma * mb) * t;
    }
  return out;
}

RepElement exterior_power_class(const GroupType& group, int k) {
  if (k < 0 || k > group.n)
    throw std::out_of_range("exterior power " + std::to_string(k) + " out of range for " + group.to_string());
  if (group.family == Family::A) return RepElement(IrrepLabel::fundamental(group, k));
  const int m = group.rank();
  if (k > m) k = group.n - k;
  RepElement out(group);
  for (int j = k; j >= 0; j -= 2) out.add(IrrepLabel::fundamental(group, j), 1);
  return out;
}

IrrepLabel adjoint_label(const GroupType& group) {
  Weight w(group.rank(), 0);
  if (group.family == Family::A) {
    w.front() += 1;
    w.back() += 1;
  } else {
    w.front() = 2;
  }
  return {group, std::move(w)};
}

IrrepLabel dual_label(const IrrepLabel& a) {
  if (a.group().family == Family::C) return a;
  Weight w = a.weight();
  std::reverse(w.begin(), w.end());
  return {a.group(), std::move(w)};
}

RepElement dual(const RepElement& a) {
  RepElement out(a.group());
  for (const auto& [w, m] : a.terms()) out.add(dual_label(IrrepLabel(a.group(), w)), m);
  return out;
}

}  // namespace bnconv
