#include "bnconv/graded.hpp"

#include "doctest.h"
#include "oracles.hpp"

#include <random>

using namespace bnconv;

namespace {

std::vector<oracle::Basis> basis_of(const GradedDim& v) {
  std::vector<oracle::Basis> b;
  for (const auto& [deg, n] : v.dims())
    for (long i = 0; i < n.get_si(); ++i) b.push_back({deg, v.parity(deg)});
  return b;
}

GradedDim from_map(const std::map<int, long>& m, int parity_offset = 0) {
  std::map<int, BigInt> d;
  for (const auto& [k, v] : m) d[k] = v;
  return GradedDim(std::move(d), parity_offset);
}

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-4, 4), coef(-5, 5), len(0, 4);
  LaurentPoly p;
  for (int i = len(rng); i > 0; --i) p += LaurentPoly::monomial(exp(rng), coef(rng));
  return p;
}

GradedDim random_space(std::mt19937& rng, int max_total) {
  std::uniform_int_distribution<int> deg(-2, 3), parity(0, 1);
  std::uniform_int_distribution<int> total(1, max_total);
  std::map<int, BigInt> d;
  const int t = total(rng);
  for (int i = 0; i < t; ++i) d[deg(rng)] += 1;
  return GradedDim(std::move(d), parity(rng));
}

}  // namespace

TEST_CASE("lp_add") {
  CHECK(lp_add(LaurentPoly::monomial(2), LaurentPoly::monomial(2, -1)).is_zero());
  const LaurentPoly one_plus_q{{0, 1}, {1, 1}};
  CHECK(lp_add(one_plus_q, one_plus_q) == LaurentPoly{{0, 2}, {1, 2}});
  const LaurentPoly pc{{0, 1}, {2, 6}, {4, 1}};  // P(C), g = 3
  CHECK(lp_add(pc, pc) == LaurentPoly{{0, 2}, {2, 12}, {4, 2}});
}

TEST_CASE("lp_mul") {
  const LaurentPoly x{{-3, 2}, {1, -7}};
  CHECK(lp_mul(x, LaurentPoly::constant(1)) == x);
  CHECK(lp_mul(LaurentPoly{{0, 1}, {1, 1}}, LaurentPoly{{0, 1}, {1, -1}}) == LaurentPoly{{0, 1}, {2, -1}});
  const LaurentPoly p1{{0, 1}, {2, 1}};  // P(P^1)
  CHECK(lp_mul(p1, p1) == LaurentPoly{{0, 1}, {2, 2}, {4, 1}});
}

TEST_CASE("LaurentPoly never stores zero coefficients") {
  LaurentPoly p{{3, 0}, {1, 2}};
  CHECK(p.terms().size() == 1);
  p -= LaurentPoly::monomial(1, 2);
  CHECK(p.is_zero());
  CHECK(p.to_string() == "0");
}

TEST_CASE("LaurentPoly rendering is ascending c*t^{k/2}") {
  const LaurentPoly p{{2, -6}, {0, 1}, {4, 1}};
  CHECK(p.to_string() == "1*t^{0/2} - 6*t^{2/2} + 1*t^{4/2}");
  CHECK(LaurentPoly::monomial(-1, -3).to_string() == "-3*t^{-1/2}");
}

TEST_CASE("LaurentPoly coefficients are arbitrary precision") {
  LaurentPoly p = LaurentPoly::constant(BigInt("9223372036854775807"));
  p = p * p;
  CHECK(p.coeff(0) == BigInt("85070591730234615847396907784232501249"));
}

TEST_CASE("LaurentPoly ring axioms on random inputs") {
  std::mt19937 rng(20261015);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) == (b + a));
    CHECK((a * b) == (b * a));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("GradedDim basics") {
  const GradedDim h{{0, 1}, {1, 4}, {2, 1}};
  CHECK(h.total_dim() == 6);
  CHECK(h.parity(1) == 1);
  const GradedDim s = h.shifted(1);
  CHECK(s.dim(-1) == 1);
  CHECK(s.dim(0) == 4);
  CHECK(s.parity(0) == 1);  // parity survives the shift
  CHECK(s.parity(-1) == 0);
  CHECK(h.to_laurent() == LaurentPoly{{0, 1}, {2, 4}, {4, 1}});
  CHECK_THROWS_AS(GradedDim(std::map<int, BigInt>{{0, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(h + s, std::invalid_argument);
}

TEST_CASE("GradedDim to LaurentPoly is injective on random spaces") {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    const GradedDim a = random_space(rng, 6), b = random_space(rng, 6);
    CHECK((a.to_laurent() == b.to_laurent()) == (a.dims() == b.dims()));
  }
}

TEST_CASE("graded_sym_power examples") {
  const GradedDim h_c2{{0, 1}, {1, 4}, {2, 1}};
  CHECK(graded_sym_power(h_c2, 0) == GradedDim::unit());

  // H^0(C)[1] + H^2(C)[-1]: degrees -1 and +1, both even.
  const GradedDim shifted_even(std::map<int, BigInt>{{-1, 1}, {1, 1}}, 1);
  CHECK(graded_sym_power(shifted_even, 2).dims() == GradedDim{{-2, 1}, {0, 1}, {2, 1}}.dims());

  // Frozen from the brute-force Koszul symmetrizer on H^*(C) (x) H^*(C), g = 2.
  const std::map<int, long> frozen{{0, 1}, {1, 4}, {2, 7}, {3, 4}, {4, 1}};
  CHECK(oracle::tensor_power_image(basis_of(h_c2), 2, true) == frozen);
  CHECK(graded_sym_power(h_c2, 2) == from_map(frozen));
}

TEST_CASE("graded_ext_power examples") {
  const GradedDim v{{-1, 2}, {3, 1}};
  CHECK(graded_ext_power(v, 1) == v);
  const GradedDim h1_g3{{1, 6}};
  CHECK(graded_ext_power(h1_g3, 2) == GradedDim{{2, 15}});
  const GradedDim even{{2, 3}};
  CHECK(graded_ext_power(even, 4).is_zero());
}

TEST_CASE("Sym and Lambda agree with tensor-space brute force (dim <= 5, power <= 4)") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const GradedDim v = random_space(rng, 5);
    const auto basis = basis_of(v);
    for (int k = 0; k <= 4; ++k) {
      CAPTURE(trial);
      CAPTURE(k);
      CHECK(graded_sym_power(v, k) == from_map(oracle::tensor_power_image(basis, k, true), k * v.parity_offset()));
      CHECK(graded_ext_power(v, k) == from_map(oracle::tensor_power_image(basis, k, false), k * v.parity_offset()));
    }
  }
}

TEST_CASE("super-dimension generating identity for Sym (dim <= 6, k <= 6)") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 4; ++trial) {
    const GradedDim v = random_space(rng, 6);
    const int K = 6;
    // prod_{even d} (1 - x t^d)^{-n} prod_{odd d} (1 + x t^d)^{n}, expanded to x^K
    std::vector<std::map<int, long>> series(K + 1);
    series[0][0] = 1;
    for (const auto& [deg, n] : v.dims()) {
      for (long c = 0; c < n.get_si(); ++c) {
        std::vector<std::map<int, long>> next(K + 1);
        for (int j = 0; j <= K; ++j)
          for (const auto& [t, coef] : series[j]) {
            if (v.parity(deg) == 0) {
              for (int i = 0; j + i <= K; ++i) next[j + i][t + i * deg] += coef;
            } else {
              next[j][t] += coef;
              if (j + 1 <= K) next[j + 1][t + deg] += coef;
            }
          }
        series = std::move(next);
      }
    }
    const auto basis = basis_of(v);
    for (int k = 0; k <= K; ++k) {
      std::erase_if(series[k], [](const auto& e) { return e.second == 0; });
      const auto brute = oracle::tensor_power_image(basis, k, true);
      CAPTURE(trial);
      CAPTURE(k);
      CHECK(brute == series[k]);
      CHECK(graded_sym_power(v, k) == from_map(brute, k * v.parity_offset()));
    }
  }
}
