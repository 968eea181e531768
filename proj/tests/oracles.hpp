#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

struct Basis {
  int degree;
  int parity;  // 0 even, 1 odd
};

// Dimensions per degree of the image of the (anti)symmetrizer on V^{(x)k},
// computed by applying every permutation to every basis tensor and taking the
// rank of the resulting vectors (mod a large prime).
//   koszul = true:  sum_sigma koszul_sign(sigma) sigma   (super-symmetric power)
//   koszul = false: sum_sigma sgn(sigma) sigma            (plain exterior power)
inline std::map<int, long> tensor_power_image(const std::vector<Basis>& basis, int k, bool koszul) {
  constexpr std::int64_t p = 1'000'000'007;
  const int n = static_cast<int>(basis.size());
  std::map<int, long> out;
  if (k == 0) {
    out[0] = 1;
    return out;
  }
  if (n == 0) return out;

  std::vector<int> perm(k);
  std::vector<std::vector<int>> perms;
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  // Rows grouped by total degree; each row maps a tensor index tuple to a coefficient.
  std::map<int, std::vector<std::map<std::vector<int>, std::int64_t>>> rows;
  std::vector<int> idx(k, 0);
  for (;;) {
    if (std::is_sorted(idx.begin(), idx.end())) {
      std::map<std::vector<int>, std::int64_t> v;
      for (const auto& s : perms) {
        // sigma moves the factor in position i to position s[i]
        std::vector<int> img(k);
        int sign = 1;
        for (int i = 0; i < k; ++i) img[s[i]] = idx[i];
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j)
            if (s[i] > s[j]) {
              const int swap_sign = koszul ? ((basis[idx[i]].parity & basis[idx[j]].parity) ? -1 : 1) : -1;
              sign *= swap_sign;
            }
        auto& c = v[img];
        c = ((c + sign) % p + p) % p;
      }
      std::erase_if(v, [](const auto& e) { return e.second == 0; });
      int deg = 0;
      for (int i : idx) deg += basis[i].degree;
      if (!v.empty()) rows[deg].push_back(std::move(v));
    }
    int pos = k - 1;
    while (pos >= 0 && ++idx[pos] == n) idx[pos--] = 0;
    if (pos < 0) break;
  }

  auto inv = [&](std::int64_t a) {
    std::int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
      if (e & 1) r = r * a % p;
      a = a * a % p;
      e >>= 1;
    }
    return r;
  };

  for (auto& [deg, vs] : rows) {
    // Gaussian elimination on sparse rows, pivoting on the smallest key.
    std::map<std::vector<int>, std::map<std::vector<int>, std::int64_t>> pivots;
    for (auto v : vs) {
      for (;;) {
        if (v.empty()) break;
        auto lead = v.begin();
        auto it = pivots.find(lead->first);
        if (it == pivots.end()) {
          const std::int64_t s = inv(lead->second);
          for (auto& [key, c] : v) c = c * s % p;
          pivots.emplace(lead->first, std::move(v));
          break;
        }
        const std::int64_t f = lead->second;
        for (const auto& [key, c] : it->second) {
          auto& t = v[key];
          t = ((t - f * c) % p + p) % p;
        }
        std::erase_if(v, [](const auto& e) { return e.second == 0; });
      }
    }
    if (!pivots.empty()) out[deg] = static_cast<long>(pivots.size());
  }
  return out;
}

// Weight multisets in epsilon coordinates, converted to the fundamental basis
// by differences of consecutive coordinates (type A drops the overall trace).
using Weight = std::vector<int>;
using Character = std::map<Weight, long>;

inline Weight eps_to_fundamental(const std::vector<int>& x, bool type_c) {
  const int r = type_c ? static_cast<int>(x.size()) : static_cast<int>(x.size()) - 1;
  Weight w(r);
  for (int i = 0; i < r; ++i) w[i] = x[i] - (i + 1 < static_cast<int>(x.size()) ? x[i + 1] : 0);
  return w;
}

// Weights of the standard representation: e_i (SL(n)) or +-e_i (Sp(2m)).
inline std::vector<std::vector<int>> standard_weights(bool type_c, int n) {
  std::vector<std::vector<int>> out;
  const int k = type_c ? n / 2 : n;
  for (int i = 0; i < k; ++i) {
    std::vector<int> e(k, 0);
    e[i] = 1;
    out.push_back(e);
    if (type_c) {
      e[i] = -1;
      out.push_back(e);
    }
  }
  return out;
}

// Character of Lambda^k (strict = true) or Sym^k (strict = false) of the
// standard representation, by enumerating index subsets / multisets.
inline Character power_of_standard(bool type_c, int n, int k, bool strict) {
  const auto st = standard_weights(type_c, n);
  const int N = static_cast<int>(st.size());
  Character ch;
  std::vector<int> idx;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(idx.size()) == k) {
      std::vector<int> s(st[0].size(), 0);
      for (int i : idx)
        for (std::size_t c = 0; c < s.size(); ++c) s[c] += st[i][c];
      ++ch[eps_to_fundamental(s, type_c)];
      return;
    }
    for (int i = start; i < N; ++i) {
      idx.push_back(i);
      self(self, strict ? i + 1 : i);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return ch;
}

inline Character multiply(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      Weight w(wa.size());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = wa[i] + wb[i];
      out[w] += ma * mb;
    }
  return out;
}

inline Character add(Character a, const Character& b, long scale = 1) {
  for (const auto& [w, m] : b) {
    a[w] += scale * m;
    if (a[w] == 0) a.erase(w);
  }
  return a;
}

// Cartan matrix A_ij = <alpha_i^vee, alpha_j>; simple root alpha_i in the
// fundamental basis is row i.
inline std::vector<std::vector<int>> cartan_matrix(bool type_c, int rank) {
  std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) {
    a[i][i] = 2;
    if (i + 1 < rank) a[i][i + 1] = a[i + 1][i] = -1;
  }
  if (type_c && rank >= 2) a[rank - 1][rank - 2] = -2;
  return a;
}

// Simple reflection s_i(mu) = mu - mu_i alpha_i.
inline Weight reflect(const Weight& mu, int i, const std::vector<std::vector<int>>& cartan) {
  Weight out = mu;
  for (std::size_t j = 0; j < mu.size(); ++j) out[j] -= mu[i] * cartan[i][j];
  return out;
}

}  // namespace oracle
