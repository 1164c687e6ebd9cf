#pragma once

// Cross-checks between the independent computations of the library.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "halphen/fixtures.hpp"
#include "halphen/halphen.hpp"

namespace halphen {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Free rows equal the affine marks in appendix column order.
CheckResult check_marks(const NamedGrading& g);

/// hilbert coefficient == polytope count for every twist and free degree <= bound.
CheckResult check_series_vs_count(const NamedGrading& g, std::int64_t bound);

/// Isomorphism (f, t) -> (sigma f, A t + B f) between two presentations of
/// the same class group, under which the polytope counts agree for every free
/// degree <= bound. sigma permutes components of equal type.
struct PresentationMatch {
  std::vector<std::size_t> component_map;
  /// Columns of A: image in b's torsion coordinates of each torsion generator of a.
  std::vector<IntVector> torsion_images;
  /// Columns of B: torsion shift attached to each free coordinate of a.
  std::vector<IntVector> free_shift;
};
std::optional<PresentationMatch> match_presentations(const GradingMatrix& a, const GradingMatrix& b, std::int64_t bound);

/// Reconstructs the model of `seq` and checks it against the fixture grading
/// of the same type: structure, class group, projection independence,
/// lifting count and presentation match.
std::vector<CheckResult> check_model(const std::string& name, const CharacteristicSequence& seq,
                                     const GradingMatrix& fixture, std::int64_t bound);

}  // namespace halphen
