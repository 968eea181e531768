#pragma once

// Exact graded bookkeeping: Laurent polynomials in q = t^{1/2} and graded
// dimension vectors with a super-parity.

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace bnconv {

using BigInt = mpz_class;

/// Integer Laurent polynomial in q = t^{1/2}. Zero coefficients are never
/// stored, so the zero polynomial is the empty map.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::initializer_list<std::pair<const int, BigInt>> terms);

  static LaurentPoly constant(const BigInt& c) { return monomial(0, c); }
  static LaurentPoly monomial(int q_exponent, const BigInt& c = 1);
  /// c * t^k, i.e. q^{2k}.
  static LaurentPoly t_power(int k, const BigInt& c = 1) { return monomial(2 * k, c); }

  BigInt coeff(int q_exponent) const;
  const std::map<int, BigInt>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Terms "c*t^{k/2}" in ascending exponent order, "0" for zero.
  std::string to_string() const;

 private:
  void add_term(int e, const BigInt& c);

  std::map<int, BigInt> coeffs_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Graded vector space dimensions. Each component has a super-parity equal to
/// (degree + parity_offset) mod 2; shifting the grading moves degrees but keeps
/// parity, so H^*(C)[1] still has its H^1 part odd.
class GradedDim {
 public:
  GradedDim() = default;
  explicit GradedDim(std::map<int, BigInt> dims, int parity_offset = 0);
  GradedDim(std::initializer_list<std::pair<const int, BigInt>> dims);

  /// One-dimensional space in degree 0 (the unit for tensor product).
  static GradedDim unit() { return GradedDim{{0, 1}}; }

  BigInt dim(int degree) const;
  BigInt total_dim() const;
  const std::map<int, BigInt>& dims() const { return dims_; }
  int parity_offset() const { return parity_offset_; }
  /// 0 = even (polynomial under Sym), 1 = odd (exterior under Sym).
  int parity(int degree) const;
  bool is_zero() const { return dims_.empty(); }

  /// Shift [s]: degree k moves to k - s, parity preserved.
  GradedDim shifted(int s) const;

  /// Direct sum; both sides must use the same parity convention.
  GradedDim& operator+=(const GradedDim& o);
  friend GradedDim operator+(GradedDim a, const GradedDim& b) { return a += b; }
  /// Graded tensor product.
  friend GradedDim operator*(const GradedDim& a, const GradedDim& b);
  friend bool operator==(const GradedDim& a, const GradedDim& b) {
    return a.dims_ == b.dims_ && (a.dims_.empty() || a.parity_offset_ == b.parity_offset_);
  }

  /// Degree k maps to q^{2k}.
  LaurentPoly to_laurent() const;

 private:
  std::map<int, BigInt> dims_;
  int parity_offset_ = 0;
};

/// Super symmetric power: even components polynomial, odd components exterior.
GradedDim graded_sym_power(const GradedDim& v, int a);

/// Plain exterior power: every basis vector anticommutes regardless of parity.
GradedDim graded_ext_power(const GradedDim& v, int b);

/// Binomial coefficient, zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

}  // namespace bnconv
