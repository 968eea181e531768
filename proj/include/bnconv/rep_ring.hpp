#pragma once

// Representation rings of SL(n) (type A_{n-1}) and Sp(n) (type C_{n/2}).
//
// Highest weights are stored in the fundamental-weight basis. Internally the
// algorithms work in orthogonal epsilon coordinates, where the Weyl group acts
// by (signed) permutations and all inner products are integral:
//   A_{n-1}: x in Z^n with x_i - x_{i+1} = a_i, x_n = 0, rho = (n-1, ..., 0)
//   C_m:     x in Z^m with x_i - x_{i+1} = a_i, x_m = a_m, rho = (m, ..., 1)

#include "bnconv/graded.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bnconv {

enum class Family { A, C };

struct GroupType {
  Family family;
  int n;  // SL(n) or Sp(n)

  static GroupType SL(int n);
  static GroupType Sp(int n);

  int rank() const { return family == Family::A ? n - 1 : n / 2; }
  /// "SL(n)" / "Sp(n)".
  std::string to_string() const;
  /// Inverse of to_string; throws std::invalid_argument.
  static GroupType parse(const std::string& s);

  friend auto operator<=>(const GroupType&, const GroupType&) = default;
};

/// Weight in the fundamental-weight basis; entries may be negative for
/// non-dominant weights.
using Weight = std::vector<int>;

/// Dominant highest weight of an irreducible representation.
class IrrepLabel {
 public:
  IrrepLabel(GroupType group, Weight weight);

  static IrrepLabel trivial(GroupType group);
  /// omega_i; i = 0 (and i = n for SL(n)) gives the trivial weight.
  static IrrepLabel fundamental(GroupType group, int i);

  const GroupType& group() const { return group_; }
  const Weight& weight() const { return weight_; }
  bool is_trivial() const;

  /// "V(0)", "V(w2)", "V(w1+w3)", "V(2w1)".
  std::string to_string() const;

  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
  friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;

 private:
  GroupType group_;
  Weight weight_;
};

/// Virtual representation: integer combination of irreducibles of one group.
class RepElement {
 public:
  explicit RepElement(GroupType group) : group_(group) {}
  RepElement(const IrrepLabel& label, std::int64_t mult = 1);

  const GroupType& group() const { return group_; }
  const std::map<Weight, std::int64_t>& terms() const { return terms_; }
  std::int64_t multiplicity(const IrrepLabel& label) const;
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True if every multiplicity is positive.
  bool is_effective() const;

  void add(const IrrepLabel& label, std::int64_t mult);
  std::vector<IrrepLabel> labels() const;
  /// sum of mult * dim.
  BigInt dimension() const;

  RepElement& operator+=(const RepElement& o);
  RepElement& operator-=(const RepElement& o);
  RepElement& operator*=(std::int64_t s);
  friend RepElement operator+(RepElement a, const RepElement& b) { return a += b; }
  friend RepElement operator-(RepElement a, const RepElement& b) { return a -= b; }
  friend RepElement operator*(std::int64_t s, RepElement a) { return a *= s; }
  friend bool operator==(const RepElement&, const RepElement&) = default;

  std::string to_string() const;

 private:
  void check_group(const GroupType& g) const;

  GroupType group_;
  std::map<Weight, std::int64_t> terms_;
};

/// Weyl dimension formula.
BigInt weyl_dim(const IrrepLabel& label);

/// Full weight-multiplicity table (fundamental-weight basis) by Freudenthal's
/// recursion on dominant weights, expanded over Weyl orbits.
std::map<Weight, std::int64_t> freudenthal_multiplicities(const IrrepLabel& label);

/// Brauer-Klimyk decomposition of V(a) (x) V(b).
RepElement klimyk_tensor(const IrrepLabel& a, const IrrepLabel& b);

/// Littlewood-Richardson decomposition for SL(n); independent of the
/// weight-multiplicity machinery. Throws std::invalid_argument for type C.
RepElement lr_tensor_typeA(const IrrepLabel& a, const IrrepLabel& b);

/// Bilinear extension of klimyk_tensor.
RepElement tensor(const RepElement& a, const RepElement& b);

/// Lambda^k of the standard representation, 0 <= k <= n.
RepElement exterior_power_class(const GroupType& group, int k);

IrrepLabel adjoint_label(const GroupType& group);
IrrepLabel dual_label(const IrrepLabel& a);
RepElement dual(const RepElement& a);

namespace detail {
/// Number of entries in the Freudenthal cache (for tests).
std::size_t freudenthal_cache_size();
}  // namespace detail

}  // namespace bnconv
