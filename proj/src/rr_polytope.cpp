#include "halphen/rr_polytope.hpp"

#include <algorithm>
#include <sstream>

#include "halphen/abelian.hpp"
#include "halphen/checked.hpp"

namespace halphen {

namespace {

void knapsack(const IntVector& w, std::size_t i, std::int64_t remaining, IntVector& cur, std::vector<IntVector>& out) {
  if (i == w.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (std::int64_t x = 0; checked::mul(x, w[i]) <= remaining; ++x) {
    cur[i] = x;
    knapsack(w, i + 1, remaining - x * w[i], cur, out);
  }
  cur[i] = 0;
}

struct BlockPoint {
  IntVector values;     // entries on the block columns
  std::size_t torsion;  // index of its torsion degree
};

std::vector<std::vector<BlockPoint>> block_points(const GradingMatrix& q, const ClassGroupElement& delta) {
  const IntVector moduli = q.torsion_moduli();
  std::vector<std::vector<BlockPoint>> out;
  for (std::size_t b = 0; b < q.blocks().size(); ++b) {
    const auto& cols = q.blocks()[b];
    std::vector<BlockPoint> pts;
    for (auto& sol : knapsack_solutions(q.block_marks(b), delta.free[b])) {
      IntVector tors(moduli.size(), 0);
      for (std::size_t t = 0; t < moduli.size(); ++t) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < cols.size(); ++k) s = checked::fma(s, q.torsion_rows()[t].row[cols[k]], sol[k]);
        tors[t] = checked::mod(s, moduli[t]);
      }
      pts.push_back({std::move(sol), residue_index(tors, moduli)});
    }
    out.push_back(std::move(pts));
  }
  return out;
}

// Index of the sum of two residue tuples given by their indices.
std::size_t add_index(std::size_t a, std::size_t b, const IntVector& moduli) {
  std::size_t out = 0, scale = 1;
  for (std::size_t t = moduli.size(); t-- > 0;) {
    const auto m = static_cast<std::size_t>(moduli[t]);
    out += ((a % m + b % m) % m) * scale;
    a /= m;
    b /= m;
    scale *= m;
  }
  return out;
}

}  // namespace

std::vector<IntVector> knapsack_solutions(const IntVector& weights, std::int64_t target) {
  std::vector<IntVector> out;
  if (target < 0) return out;
  for (auto w : weights)
    if (w < 1) throw DomainError("knapsack weights must be positive");
  IntVector cur(weights.size(), 0);
  knapsack(weights, 0, target, cur, out);
  return out;
}

std::vector<IntersectionVector> enumerate(const GradingMatrix& q, const ClassGroupElement& delta_in) {
  const ClassGroupElement delta = q.reduce(delta_in);
  const IntVector moduli = q.torsion_moduli();
  const std::size_t target = residue_index(delta.torsion, moduli);
  const auto blocks = block_points(q, delta);

  std::vector<IntersectionVector> out;
  IntersectionVector cur(q.columns(), 0);
  auto rec = [&](auto&& self, std::size_t b, std::size_t tors) -> void {
    if (b == blocks.size()) {
      if (tors == target) out.push_back(cur);
      return;
    }
    const auto& cols = q.blocks()[b];
    for (const auto& p : blocks[b]) {
      for (std::size_t k = 0; k < cols.size(); ++k) cur[cols[k]] = p.values[k];
      self(self, b + 1, add_index(tors, p.torsion, moduli));
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count(const GradingMatrix& q, const ClassGroupElement& delta_in) {
  const ClassGroupElement delta = q.reduce(delta_in);
  const IntVector moduli = q.torsion_moduli();
  std::size_t order = 1;
  for (auto m : moduli) order *= static_cast<std::size_t>(m);

  std::vector<std::uint64_t> acc(order, 0);
  acc[0] = 1;
  for (const auto& pts : block_points(q, delta)) {
    std::vector<std::uint64_t> per(order, 0);
    for (const auto& p : pts) ++per[p.torsion];
    std::vector<std::uint64_t> next(order, 0);
    for (std::size_t a = 0; a < order; ++a)
      if (acc[a])
        for (std::size_t b = 0; b < order; ++b)
          if (per[b]) next[add_index(a, b, moduli)] += acc[a] * per[b];
    acc = std::move(next);
  }
  return acc[residue_index(delta.torsion, moduli)];
}

nlohmann::json points_to_json(const std::vector<IntersectionVector>& points) { return points; }

std::string points_to_csv(const GradingMatrix& q, const std::vector<IntersectionVector>& points) {
  std::vector<std::string> labels(q.columns());
  const auto types = q.component_types();
  for (std::size_t b = 0; b < q.blocks().size(); ++b) {
    const auto order = appendix_node_order(types[b]);
    for (std::size_t k = 0; k < q.blocks()[b].size(); ++k)
      labels[q.blocks()[b][k]] = "F" + std::to_string(b + 1) + ":" + types[b].name() + ":" + std::to_string(order[k]);
  }
  std::ostringstream os;
  for (std::size_t c = 0; c < labels.size(); ++c) os << (c ? "," : "") << labels[c];
  os << '\n';
  for (const auto& p : points) {
    for (std::size_t c = 0; c < p.size(); ++c) os << (c ? "," : "") << p[c];
    os << '\n';
  }
  return os.str();
}

}  // namespace halphen
