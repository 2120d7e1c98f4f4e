#pragma once

// Acceptance checks, one per criterion id (1..16), plus the reference tables
// they compare against.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "robinsq/nodal.hpp"
#include "robinsq/spectrum2d.hpp"

namespace robinsq {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct VerifyOptions {
  /// Criterion ids ("4") or tags ("crossings"); empty runs everything.
  std::vector<std::string> only;
  int resolution = kDefaultResolution;
  /// Fault injection: coarse alpha-solver bracket width for the whole run.
  std::optional<double> alpha_tolerance;
};

inline constexpr int kCriterionCount = 16;

/// Short name of a criterion, e.g. "crossing-h9".
std::string criterion_name(int id);

/// Ids selected by ids/tags, ascending and unique. Throws std::invalid_argument
/// for an unknown token.
std::vector<int> select_criteria(const std::vector<std::string>& only);

CriterionResult run_criterion(int id, const VerifyOptions& options = {});
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

/// {"passed": bool, "criteria": [{id, name, passed, detail, seconds}]}
std::string criteria_json(const std::vector<CriterionResult>& results);

/// Reference Neumann and Dirichlet tables for k <= 129 as printed, CSV with
/// header m,n,value,k_min,k_max.
std::string_view reference_neumann_csv();
std::string_view reference_dirichlet_csv();

struct TableCorrection {
  TableRow printed;
  TableRow corrected;
};

/// Printed Dirichlet rows whose k-range disagrees with the cluster arithmetic.
const std::vector<TableCorrection>& dirichlet_corrections();

}  // namespace robinsq
