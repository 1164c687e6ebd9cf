#include "halphen/hilbert.hpp"

#include "halphen/abelian.hpp"
#include "halphen/error.hpp"

namespace halphen {

SeriesTable::SeriesTable(IntVector bound, IntVector moduli) : bound_(std::move(bound)), moduli_(std::move(moduli)) {
  for (auto b : bound_) {
    if (b < 0) throw DomainError("series bound must be nonnegative");
    free_cells_ *= static_cast<std::size_t>(b + 1);
  }
  for (auto m : moduli_) torsion_count_ *= static_cast<std::size_t>(m);
  data_.assign(free_cells_ * torsion_count_, 0);
}

IntVector SeriesTable::free_degree(std::size_t idx) const {
  IntVector f(bound_.size());
  for (std::size_t i = bound_.size(); i-- > 0;) {
    const auto radix = static_cast<std::size_t>(bound_[i] + 1);
    f[i] = static_cast<std::int64_t>(idx % radix);
    idx /= radix;
  }
  return f;
}

std::size_t SeriesTable::free_index(const IntVector& free) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < bound_.size(); ++i) idx = idx * static_cast<std::size_t>(bound_[i] + 1) + static_cast<std::size_t>(free[i]);
  return idx;
}

std::uint64_t SeriesTable::at(const ClassGroupElement& delta) const {
  if (delta.free.size() != bound_.size() || delta.torsion.size() != moduli_.size())
    throw ShapeError("series table: degree shape mismatch");
  for (std::size_t i = 0; i < bound_.size(); ++i)
    if (delta.free[i] < 0 || delta.free[i] > bound_[i]) return 0;
  return data_[free_index(delta.free) * torsion_count_ + residue_index(delta.torsion, moduli_)];
}

std::vector<std::pair<ClassGroupElement, std::uint64_t>> SeriesTable::entries() const {
  std::vector<std::pair<ClassGroupElement, std::uint64_t>> out;
  const auto tors = residue_tuples(moduli_);
  for (std::size_t f = 0; f < free_cells_; ++f)
    for (std::size_t t = 0; t < torsion_count_; ++t)
      out.push_back({ClassGroupElement{free_degree(f), tors[t]}, data_[f * torsion_count_ + t]});
  return out;
}

SeriesTable series_table(const GradingMatrix& q, const IntVector& bound) {
  if (bound.size() != q.free_rank()) throw ShapeError("series bound must have one entry per free row");
  SeriesTable table(bound, q.torsion_moduli());
  const IntVector& moduli = table.moduli();
  const auto tors = residue_tuples(moduli);
  table.cell(0, 0) = 1;

  for (std::size_t j = 0; j < q.columns(); ++j) {
    const ClassGroupElement w = q.column_degree(j);
    // multiply by 1 / (1 - t^w): in increasing order, c[x] += c[x - w]
    for (std::size_t f = 0; f < table.free_cells(); ++f) {
      IntVector src = table.free_degree(f);
      bool inside = true;
      for (std::size_t i = 0; i < src.size(); ++i) {
        src[i] -= w.free[i];
        if (src[i] < 0) inside = false;
      }
      if (!inside) continue;
      const std::size_t sf = table.free_index(src);
      for (std::size_t t = 0; t < tors.size(); ++t) {
        IntVector st = tors[t];
        for (std::size_t k = 0; k < st.size(); ++k) st[k] -= w.torsion[k];
        table.cell(f, t) += table.cell(sf, residue_index(st, moduli));
      }
    }
  }
  return table;
}

std::uint64_t coefficient(const GradingMatrix& q, const ClassGroupElement& delta_in) {
  const ClassGroupElement delta = q.reduce(delta_in);
  for (auto f : delta.free)
    if (f < 0) return 0;
  return series_table(q, delta.free).at(delta);
}

nlohmann::json to_json(const SeriesTable& table) {
  auto out = nlohmann::json::array();
  for (const auto& [deg, c] : table.entries()) out.push_back({{"degree", deg}, {"coeff", c}});
  return out;
}

}  // namespace halphen
