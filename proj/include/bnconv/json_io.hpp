#pragma once

// JSON encodings shared by the CLI and the verification report.

#include "bnconv/bn_ring.hpp"
#include "bnconv/graded.hpp"
#include "bnconv/perverse.hpp"
#include "bnconv/rep_ring.hpp"

#include "json.hpp"

namespace bnconv {

inline constexpr const char* kSchemaVersion = "bnconv/1";

/// Integer if it fits in int64, decimal string otherwise.
nlohmann::json big_to_json(const BigInt& v);

/// {"render": "c*t^{k/2} ...", "coeffs": {"k": c}} keyed by q-exponent.
nlohmann::json to_json(const LaurentPoly& p);
/// {"degree": dim}
nlohmann::json to_json(const GradedDim& v);
/// Array of fundamental-weight coefficients.
nlohmann::json to_json(const IrrepLabel& l);
/// [{weight, dim, mult, name?}] sorted by dimension, then weight.
nlohmann::json to_json(const BNClass& c);
/// [{stratum, dim, stalk: {degree: dim}}]
nlohmann::json to_json(const StalkTable& t);
nlohmann::json to_json(const RepElement& r);

}  // namespace bnconv
