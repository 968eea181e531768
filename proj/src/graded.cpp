#include "bnconv/graded.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace bnconv {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, BigInt>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int q_exponent, const BigInt& c) {
  LaurentPoly p;
  p.add_term(q_exponent, c);
  return p;
}

void LaurentPoly::add_term(int e, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BigInt LaurentPoly::coeff(int q_exponent) const {
  auto it = coeffs_.find(q_exponent);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

std::string LaurentPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    BigInt mag = abs(c);
    os << mag << "*t^{" << e << "/2}";
    first = false;
  }
  return os.str();
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

// ---------------------------------------------------------------------------
// GradedDim

GradedDim::GradedDim(std::map<int, BigInt> dims, int parity_offset)
    : parity_offset_(((parity_offset % 2) + 2) % 2) {
  for (auto& [k, d] : dims) {
    if (d < 0) throw std::invalid_argument("GradedDim: negative dimension");
    if (d != 0) dims_.emplace(k, std::move(d));
  }
}

GradedDim::GradedDim(std::initializer_list<std::pair<const int, BigInt>> dims)
    : GradedDim(std::map<int, BigInt>(dims)) {}

BigInt GradedDim::dim(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? BigInt(0) : it->second;
}

BigInt GradedDim::total_dim() const {
  BigInt s = 0;
  for (const auto& [k, d] : dims_) s += d;
  return s;
}

int GradedDim::parity(int degree) const { return (((degree + parity_offset_) % 2) + 2) % 2; }

GradedDim GradedDim::shifted(int s) const {
  std::map<int, BigInt> out;
  for (const auto& [k, d] : dims_) out.emplace(k - s, d);
  return GradedDim(std::move(out), parity_offset_ + s);
}

GradedDim& GradedDim::operator+=(const GradedDim& o) {
  if (o.dims_.empty()) return *this;
  if (dims_.empty()) {
    parity_offset_ = o.parity_offset_;
  } else if (parity_offset_ != o.parity_offset_) {
    throw std::invalid_argument("GradedDim: direct sum of spaces with different parity conventions");
  }
  for (const auto& [k, d] : o.dims_) dims_[k] += d;
  return *this;
}

GradedDim operator*(const GradedDim& a, const GradedDim& b) {
  std::map<int, BigInt> out;
  for (const auto& [ka, da] : a.dims_)
    for (const auto& [kb, db] : b.dims_) out[ka + kb] += da * db;
  return GradedDim(std::move(out), a.parity_offset_ + b.parity_offset_);
}

LaurentPoly GradedDim::to_laurent() const {
  LaurentPoly p;
  for (const auto& [k, d] : dims_) p += LaurentPoly::t_power(k, d);
  return p;
}

namespace {

// Coefficient of x^a in the product over components of the per-component
// series, where `piece(n, j)` is the dimension of the j-th power of an
// n-dimensional space concentrated in one degree.
template <class Piece>
GradedDim power_series_coeff(const GradedDim& v, int a, Piece piece) {
  if (a < 0) throw std::invalid_argument("graded power: negative exponent");
  // acc[j] = graded dims of the x^j coefficient so far
  std::vector<std::map<int, BigInt>> acc(a + 1);
  acc[0][0] = 1;
  for (const auto& [deg, n] : v.dims()) {
    const bool odd = v.parity(deg) == 1;
    std::vector<std::map<int, BigInt>> next(a + 1);
    for (int j = 0; j <= a; ++j) {
      for (const auto& [k, c] : acc[j]) {
        for (int i = 0; j + i <= a; ++i) {
          BigInt m = piece(n, i, odd);
          if (m == 0) break;
          next[j + i][k + i * deg] += c * m;
        }
      }
    }
    acc = std::move(next);
  }
  return GradedDim(std::move(acc[a]), a * v.parity_offset());
}

}  // namespace

GradedDim graded_sym_power(const GradedDim& v, int a) {
  return power_series_coeff(v, a, [](const BigInt& n, int i, bool odd) {
    const long nn = n.get_si();
    return odd ? binomial(nn, i) : binomial(nn + i - 1, i);
  });
}

GradedDim graded_ext_power(const GradedDim& v, int b) {
  return power_series_coeff(v, b, [](const BigInt& n, int i, bool) { return binomial(n.get_si(), i); });
}

}  // namespace bnconv
