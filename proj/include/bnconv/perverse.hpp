#pragma once

// Stalk-table bookkeeping for decomposition-theorem arguments.
//
// Convention: the IC class of a d-dimensional Y has its generic stalk in
// degree -d, so stalks of perverse objects live in degrees <= 0.

#include "bnconv/bn_ring.hpp"
#include "bnconv/curve.hpp"
#include "bnconv/graded.hpp"
#include "bnconv/rep_ring.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bnconv {

/// Raised when two sides of a bookkeeping identity disagree.
class LedgerMismatch : public std::runtime_error {
 public:
  LedgerMismatch(std::string identity, std::string lhs, std::string rhs);
  const std::string& identity() const { return identity_; }
  const std::string& lhs() const { return lhs_; }
  const std::string& rhs() const { return rhs_; }

 private:
  std::string identity_, lhs_, rhs_;
};

struct Stratum {
  std::string name;
  int dim = 0;
  bool open = false;
};

struct StalkRow {
  Stratum stratum;
  GradedDim stalk;
};

class StalkTable {
 public:
  StalkTable(int support_dim, std::vector<StalkRow> rows);

  int support_dim() const { return support_dim_; }
  const std::vector<StalkRow>& rows() const { return rows_; }
  /// Stalk on the named stratum; throws std::out_of_range.
  const GradedDim& stalk(const std::string& stratum) const;

  /// Row-wise sum over identical strata.
  friend StalkTable operator+(const StalkTable& a, const StalkTable& b);
  friend bool operator==(const StalkTable& a, const StalkTable& b);

 private:
  int support_dim_;
  std::vector<StalkRow> rows_;
};

/// Support half of middle perversity: degree -k occurs only on strata of
/// dimension <= k.
bool check_support_condition(const StalkTable& t);

/// Strict form for IC classes: on non-open strata, degree -k occurs only on
/// strata of dimension < k.
bool check_ic_support_condition(const StalkTable& t);

struct SemismallSplit {
  StalkTable pushforward;  // Rf_*(delta_C [x] delta_C) for f(x, y) = kappa + x - y
  StalkTable skyscraper;   // delta_{kappa}
  StalkTable difference;   // delta_{kappa+C-C}
};

/// Pushforward along C x C -> kappa + C - C, which contracts the diagonal to
/// kappa and is an isomorphism elsewhere, split into the skyscraper at kappa
/// and the IC class of kappa + C - C. Non-hyperelliptic, g >= 3.
SemismallSplit semismall_cc_decomposition(const CurveContext& ctx);

inline const char* kKappaStratum = "kappa";
inline const char* kOpenStratum = "kappa+C-C minus kappa";

/// dim H^{-1}(delta_Theta * delta_Theta) at kappa, as the degree-(2d-1) piece
/// of IH^*(W_d) with d = g-1. Cross-checked against H^*(C^{(d)}).
std::int64_t h_minus_one_theta_square(const CurveContext& ctx);

struct SummandSearch {
  IrrepLabel summand;
  /// Empty for hyperelliptic curves, where the stalk side is not modelled.
  std::optional<std::int64_t> budget;
  std::optional<std::int64_t> consumed;
  std::optional<std::int64_t> remaining;
  /// H^{-1} contribution per summand of theta * theta (non-hyperelliptic).
  std::vector<std::pair<IrrepLabel, std::int64_t>> contributions;
  RepElement theta_square;
};

/// Identifies the unique summand A of theta * theta with non-constant H^{-1}.
/// Throws LedgerMismatch if any step of the accounting fails.
SummandSearch unique_summand_search(const CurveContext& ctx);

/// st (x) st over Sp(2g-2): trivial + V(w_2) + adjoint. Hyperelliptic, g >= 3.
RepElement hyperelliptic_three_way_split(const CurveContext& ctx);

}  // namespace bnconv
