#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmreg/homology.hpp"

namespace cmreg {

enum class Direction { kAtMost, kLessThan, kAtLeast, kEqual };
enum class CheckStatus { kPass, kFail, kSkipped };

// One evaluated inequality (or identity). The margin is the slack in the
// direction of the check: rhs - lhs for upper bounds and identities,
// lhs - rhs for lower bounds; negative slack (or zero for strict bounds)
// means failure.
struct BoundCheck {
  std::string id;
  std::string ref;
  std::string lhs_name;
  ExtendedInt lhs;
  std::string rhs_name;
  ExtendedInt rhs;
  Direction direction = Direction::kAtMost;
  CheckStatus status = CheckStatus::kSkipped;
  std::string note;

  ExtendedInt margin() const;
  bool passed() const { return status == CheckStatus::kPass; }
  bool failed() const { return status == CheckStatus::kFail; }
  bool skipped() const { return status == CheckStatus::kSkipped; }
};

BoundCheck evaluate_check(std::string id, std::string ref, std::string lhs_name,
                          ExtendedInt lhs, std::string rhs_name, ExtendedInt rhs,
                          Direction direction);
BoundCheck skipped_check(std::string id, std::string ref, std::string reason);

// Ambient module U = coker(ambient) and the submodule M generated by the
// columns of `submodule` (a matrix into the target of `ambient`).
struct ModulePair {
  GradedPresentation ambient;
  GradedMatrix submodule;
  // U = R and M is an ideal; enables the ideal-only corollaries.
  bool ideal_case = false;
};

// Caps (x_0..x_{d-1}; y) for the diagonal-bound corollary.
// U = R and M = the ideal generated by `generators`.
ModulePair ideal_pair(const RingPtr& ring, const std::vector<Polynomial>& generators);

struct DiagonalCaps {
  std::vector<mpz_class> x;
  mpz_class y;
};

struct VerifyInput {
  std::string description;
  GradedPresentation module;
  std::optional<ModulePair> pair;
};

struct VerifyOptions {
  // Check families to run; empty means all.
  std::set<std::string> families;
  std::optional<DiagonalCaps> caps;
  std::optional<long> r_override;
  std::optional<std::pair<int, int>> window;
  int search_budget = 4;
};

// All check family names, in report order.
const std::vector<std::string>& check_families();

struct Report {
  std::string description;
  std::shared_ptr<const CohomologyProfile> profile;
  std::pair<int, int> window;
  std::vector<BoundCheck> checks;
  // Linear form used by the filter-regular checks, if one was found.
  std::string filter_regular_form;
  double wall_time_ms = 0;

  bool any_failure() const;
};

// Throws std::invalid_argument for an unknown check family or a submodule
// that does not live in the ambient module's free cover.
Report verify(const VerifyInput& input, const VerifyOptions& options = {});

}  // namespace cmreg
