#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "halphen/root_data.hpp"

namespace halphen {

/// Lattice point of Delta(delta): one nonnegative entry per grading column.
using IntersectionVector = IntVector;

/// Nonnegative solutions of weights . x = target, lexicographic.
std::vector<IntVector> knapsack_solutions(const IntVector& weights, std::int64_t target);

/// {e >= 0 : Q e = delta}, lexicographic. Throws ShapeError on a shape mismatch.
std::vector<IntersectionVector> enumerate(const GradingMatrix& q, const ClassGroupElement& delta);

/// |enumerate(q, delta)|, computed per block and convolved over the torsion group.
std::uint64_t count(const GradingMatrix& q, const ClassGroupElement& delta);

nlohmann::json points_to_json(const std::vector<IntersectionVector>& points);
/// One row per point; header labels "F<k>:<type>:<node>" with k the 1-based component.
std::string points_to_csv(const GradingMatrix& q, const std::vector<IntersectionVector>& points);

}  // namespace halphen
