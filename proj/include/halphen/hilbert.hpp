#pragma once

// Coefficients of the multigraded Hilbert series prod_j 1 / (1 - t^{deg col_j})
// of the Cox ring, with exponents in Z^r + T and truncation at a free bound.

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "halphen/root_data.hpp"

namespace halphen {

/// Dense table over free degrees 0 <= f <= bound, each cell holding one
/// coefficient per torsion element.
class SeriesTable {
 public:
  SeriesTable(IntVector bound, IntVector moduli);

  const IntVector& bound() const { return bound_; }
  const IntVector& moduli() const { return moduli_; }

  /// Coefficient at delta; zero outside the table's free range.
  std::uint64_t at(const ClassGroupElement& delta) const;
  std::uint64_t& cell(std::size_t free_index, std::size_t torsion_index) {
    return data_[free_index * torsion_count_ + torsion_index];
  }

  /// (degree, coefficient) pairs ordered by free degree, then torsion.
  std::vector<std::pair<ClassGroupElement, std::uint64_t>> entries() const;

  std::size_t free_cells() const { return free_cells_; }
  std::size_t torsion_count() const { return torsion_count_; }
  IntVector free_degree(std::size_t free_index) const;
  std::size_t free_index(const IntVector& free) const;

 private:
  IntVector bound_;
  IntVector moduli_;
  std::size_t free_cells_ = 1;
  std::size_t torsion_count_ = 1;
  std::vector<std::uint64_t> data_;
};

SeriesTable series_table(const GradingMatrix& q, const IntVector& bound);
std::uint64_t coefficient(const GradingMatrix& q, const ClassGroupElement& delta);

nlohmann::json to_json(const SeriesTable& table);

}  // namespace halphen
