#pragma once

// One-shot harness running the whole chain of checks for a curve context.

#include "bnconv/curve.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace bnconv {

enum class StepStatus { Pass, Fail, Skipped };

std::string to_string(StepStatus s);

struct StepResult {
  std::string id;
  std::string title;
  StepStatus status;
  nlohmann::json details;
};

struct VerifyReport {
  int genus;
  bool hyperelliptic;
  std::vector<StepResult> steps;

  bool passed() const;
};

/// Runs, in order: the step-1 dictionary and embedding checks, the step-3
/// duality and fibration identities, the step-2 semismall split, the step-4
/// H^{-1} count, the unique-summand search and, for hyperelliptic curves, the
/// three-way split. Requires g >= 3.
VerifyReport verify_all(const CurveContext& ctx);

}  // namespace bnconv
