#include "halphen/root_data.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "halphen/abelian.hpp"
#include "halphen/checked.hpp"
#include "halphen/error.hpp"
#include "halphen/picard.hpp"

namespace halphen {

AdeType::AdeType(Family f, int r) : family(f), rank(r) {
  const bool ok = (f == Family::A && r >= 1) || (f == Family::D && r >= 4) || (f == Family::E && r >= 6 && r <= 8);
  if (!ok) throw DomainError("invalid ADE type " + name());
}

AdeType AdeType::parse(std::string_view name) {
  if (name.size() < 2) throw ParseError("bad ADE type name '" + std::string(name) + "'");
  Family f;
  switch (name[0]) {
    case 'A': f = Family::A; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    default: throw ParseError("bad ADE type name '" + std::string(name) + "'");
  }
  int r = 0;
  for (char ch : name.substr(1)) {
    if (ch < '0' || ch > '9') throw ParseError("bad ADE type name '" + std::string(name) + "'");
    r = r * 10 + (ch - '0');
  }
  try {
    return AdeType(f, r);
  } catch (const DomainError&) {
    throw ParseError("bad ADE type name '" + std::string(name) + "'");
  }
}

std::string AdeType::name() const {
  const char letter = family == Family::A ? 'A' : family == Family::D ? 'D' : 'E';
  return letter + std::to_string(rank);
}

bool canonical_before(const AdeType& a, const AdeType& b) {
  auto key = [](const AdeType& t) {
    const int fam = t.family == Family::E ? 0 : t.family == Family::D ? 1 : 2;
    return std::pair{fam, -t.rank};
  };
  return key(a) < key(b);
}

std::vector<AdeType> ade_types_up_to(int max_rank) {
  std::vector<AdeType> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back(Family::A, r);
  for (int r = 4; r <= max_rank; ++r) out.emplace_back(Family::D, r);
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.emplace_back(Family::E, r);
  return out;
}

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

// Edges of the affine diagram in the affine-first Bourbaki labelling.
std::vector<Edge> affine_edges(const AdeType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<Edge> e;
  switch (t.family) {
    case Family::A:
      if (n == 1) return {{0, 1}};  // doubled edge, handled by the caller
      for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n, 0);
      break;
    case Family::D:
      e = {{0, 2}, {1, 2}};
      for (std::size_t i = 2; i + 1 <= n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 2, n - 1);
      e.emplace_back(n - 2, n);
      break;
    case Family::E:
      e = {{1, 3}, {2, 4}};
      for (std::size_t i = 3; i < n; ++i) e.emplace_back(i, i + 1);
      if (n == 6) e.emplace_back(0, 2);
      if (n == 7) e.emplace_back(0, 1);
      if (n == 8) e.emplace_back(0, 8);
      break;
  }
  return e;
}

}  // namespace

IntMatrix extended_cartan_matrix(const AdeType& t) {
  const std::size_t n = t.affine_nodes();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  if (t.family == Family::A && t.rank == 1) {
    c(0, 1) = c(1, 0) = -2;
    return c;
  }
  for (auto [a, b] : affine_edges(t)) c(a, b) = c(b, a) = -1;
  return c;
}

IntMatrix cartan_matrix(const AdeType& t) {
  const IntMatrix ext = extended_cartan_matrix(t);
  std::vector<std::size_t> finite(static_cast<std::size_t>(t.rank));
  std::iota(finite.begin(), finite.end(), 1);
  IntMatrix c = ext.submatrix(finite, finite);
  if (t.family == Family::A && t.rank == 1) c(0, 0) = 2;
  return c;
}

Marks marks(const AdeType& t) {
  const auto kernel = integer_kernel(extended_cartan_matrix(t));
  if (kernel.size() != 1) throw PostconditionError("extended Cartan matrix of " + t.name() + " has corank != 1");
  IntVector v = kernel.front();
  if (v.front() < 0)
    for (auto& x : v) x = -x;
  return {v};
}

std::vector<std::size_t> appendix_node_order(const AdeType& t) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<std::size_t> order;
  switch (t.family) {
    case Family::A:
      order.resize(n + 1);
      std::iota(order.begin(), order.end(), 0);
      break;
    case Family::D:
      order = {0, 1, n - 1, n};
      for (std::size_t i = 2; i <= n - 2; ++i) order.push_back(i);
      break;
    case Family::E:
      if (n == 6) order = {1, 3, 4, 5, 6, 2, 0};
      if (n == 7) order = {0, 1, 3, 4, 5, 6, 7, 2};
      if (n == 8) order = {0, 8, 7, 6, 5, 4, 3, 2, 1};
      break;
  }
  return order;
}

std::optional<AdeType> identify_marks(const IntVector& row) {
  if (row.size() < 2 || row.size() > 64) return std::nullopt;
  IntVector sorted = row;
  std::sort(sorted.begin(), sorted.end());
  const int rank = static_cast<int>(row.size()) - 1;
  std::vector<AdeType> candidates{AdeType(Family::A, rank)};
  if (rank >= 4) candidates.emplace_back(Family::D, rank);
  if (rank >= 6 && rank <= 8) candidates.emplace_back(Family::E, rank);
  for (const auto& t : candidates) {
    IntVector m = marks(t).values;
    std::sort(m.begin(), m.end());
    if (m == sorted) return t;
  }
  return std::nullopt;
}

namespace {

// Neighbours in the simple graph given by positive off-diagonal entries.
std::vector<std::vector<std::size_t>> adjacency(const IntMatrix& g) {
  std::vector<std::vector<std::size_t>> adj(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (i != j && g(i, j) != 0) adj[i].push_back(j);
  return adj;
}

// Nodes of the arm starting at `first`, walking away from `from`.
std::vector<std::size_t> walk_arm(const std::vector<std::vector<std::size_t>>& adj, std::size_t from, std::size_t first) {
  std::vector<std::size_t> arm{first};
  std::size_t prev = from, cur = first;
  for (;;) {
    std::optional<std::size_t> next;
    for (std::size_t nb : adj[cur])
      if (nb != prev) next = nb;
    if (!next || adj[cur].size() != 2) break;
    arm.push_back(*next);
    prev = cur;
    cur = *next;
  }
  return arm;
}

std::optional<AffineLabeling> label_diagram(const IntMatrix& g) {
  const std::size_t n = g.rows();
  if (n == 2) {
    if (g(0, 1) != 2) return std::nullopt;
    return AffineLabeling{AdeType(Family::A, 1), {0, 1}};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g(i, j) != 0 && g(i, j) != 1) return std::nullopt;

  const auto adj = adjacency(g);
  std::size_t edges = 0;
  for (const auto& a : adj) edges += a.size();
  edges /= 2;

  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i)
    if (adj[i].size() >= 3) branch.push_back(i);

  if (branch.empty()) {
    if (edges != n) return std::nullopt;
    // cycle: start at row 0, step to the smaller neighbour
    std::vector<std::size_t> order{0};
    std::size_t prev = 0, cur = std::min(adj[0][0], adj[0][1]);
    while (cur != 0) {
      order.push_back(cur);
      const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      if (order.size() > n) return std::nullopt;
    }
    if (order.size() != n) return std::nullopt;
    return AffineLabeling{AdeType(Family::A, static_cast<int>(n) - 1), order};
  }
  if (edges != n - 1) return std::nullopt;

  auto leaves_of = [&](std::size_t b) {
    std::vector<std::size_t> leaves;
    for (std::size_t nb : adj[b])
      if (adj[nb].size() == 1) leaves.push_back(nb);
    std::sort(leaves.begin(), leaves.end());
    return leaves;
  };

  if (branch.size() == 1 && adj[branch[0]].size() == 4) {
    if (n != 5) return std::nullopt;
    const auto l = leaves_of(branch[0]);
    if (l.size() != 4) return std::nullopt;
    return AffineLabeling{AdeType(Family::D, 4), {l[0], l[1], branch[0], l[2], l[3]}};
  }

  if (branch.size() == 2) {
    if (n < 6) return std::nullopt;
    auto la = leaves_of(branch[0]);
    auto lb = leaves_of(branch[1]);
    if (la.size() != 2 || lb.size() != 2) return std::nullopt;
    std::size_t head = branch[0], tail = branch[1];
    if (lb.front() < la.front()) {
      std::swap(head, tail);
      std::swap(la, lb);
    }
    std::vector<std::size_t> order{la[0], la[1], head};
    // walk the chain from head to tail
    std::size_t prev = head;
    std::size_t cur = head;
    while (cur != tail) {
      std::optional<std::size_t> next;
      for (std::size_t nb : adj[cur])
        if (nb != prev && adj[nb].size() != 1) next = nb;
      if (!next) return std::nullopt;
      prev = cur;
      cur = *next;
      order.push_back(cur);
    }
    order.push_back(lb[0]);
    order.push_back(lb[1]);
    if (order.size() != n) return std::nullopt;
    return AffineLabeling{AdeType(Family::D, static_cast<int>(n) - 1), order};
  }

  if (branch.size() != 1 || adj[branch[0]].size() != 3) return std::nullopt;
  const std::size_t center = branch[0];
  std::vector<std::vector<std::size_t>> arms;
  for (std::size_t nb : adj[center]) arms.push_back(walk_arm(adj, center, nb));
  std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  const std::size_t a0 = arms[0].size(), a1 = arms[1].size(), a2 = arms[2].size();
  std::vector<std::size_t> order(n);
  if (a0 == 2 && a1 == 2 && a2 == 2) {  // E6: arms (3,1), (5,6), (2,0)
    order[4] = center;
    order[3] = arms[0][0], order[1] = arms[0][1];
    order[5] = arms[1][0], order[6] = arms[1][1];
    order[2] = arms[2][0], order[0] = arms[2][1];
    return AffineLabeling{AdeType(Family::E, 6), order};
  }
  if (a0 == 1 && a1 == 3 && a2 == 3) {  // E7: arms (2), (3,1,0), (5,6,7)
    order[4] = center;
    order[2] = arms[0][0];
    order[3] = arms[1][0], order[1] = arms[1][1], order[0] = arms[1][2];
    order[5] = arms[2][0], order[6] = arms[2][1], order[7] = arms[2][2];
    return AffineLabeling{AdeType(Family::E, 7), order};
  }
  if (a0 == 1 && a1 == 2 && a2 == 5) {  // E8: arms (2), (3,1), (5,6,7,8,0)
    order[4] = center;
    order[2] = arms[0][0];
    order[3] = arms[1][0], order[1] = arms[1][1];
    order[5] = arms[2][0], order[6] = arms[2][1], order[7] = arms[2][2], order[8] = arms[2][3], order[0] = arms[2][4];
    return AffineLabeling{AdeType(Family::E, 8), order};
  }
  return std::nullopt;
}

}  // namespace

std::optional<AffineLabeling> recognize_affine_diagram(const IntMatrix& gram) {
  if (gram.rows() != gram.cols() || gram.rows() < 2) return std::nullopt;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    if (gram(i, i) != -2) return std::nullopt;
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (gram(i, j) != gram(j, i)) return std::nullopt;
  }
  auto labeling = label_diagram(gram);
  if (!labeling) return std::nullopt;
  const IntMatrix ext = extended_cartan_matrix(labeling->type);
  const auto& idx = labeling->node_index;
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      if (-gram(idx[a], idx[b]) != ext(a, b)) return std::nullopt;
  return labeling;
}

// ---- configurations --------------------------------------------------------

FiberConfiguration FiberConfiguration::parse(std::string_view name) {
  FiberConfiguration cfg;
  std::size_t pos = 0;
  while (pos <= name.size()) {
    const std::size_t plus = name.find('+', pos);
    std::string_view term = name.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    int mult = 0;
    std::size_t k = 0;
    while (k < term.size() && term[k] >= '0' && term[k] <= '9') mult = mult * 10 + (term[k++] - '0');
    if (k == 0) mult = 1;
    if (mult == 0 || k == term.size()) throw ParseError("bad configuration name '" + std::string(name) + "'");
    const AdeType t = AdeType::parse(term.substr(k));
    for (int i = 0; i < mult; ++i) cfg.components.push_back(t);
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  if (cfg.total_rank() > 8) throw ParseError("configuration '" + std::string(name) + "' has rank > 8");
  return cfg;
}

std::string FiberConfiguration::name() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < components.size();) {
    std::size_t j = i;
    while (j < components.size() && components[j] == components[i]) ++j;
    if (i) os << '+';
    if (j - i > 1) os << (j - i);
    os << components[i].name();
    i = j;
  }
  return os.str();
}

int FiberConfiguration::total_rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

std::size_t FiberConfiguration::total_nodes() const {
  std::size_t s = 0;
  for (const auto& c : components) s += c.affine_nodes();
  return s;
}

FiberConfiguration FiberConfiguration::canonical() const {
  FiberConfiguration c = *this;
  std::stable_sort(c.components.begin(), c.components.end(), canonical_before);
  return c;
}

std::int64_t ClassGroup::torsion_order() const {
  std::int64_t n = 1;
  for (auto d : invariant_factors) n = checked::mul(n, d);
  return n;
}

std::string ClassGroup::to_string() const {
  std::ostringstream os;
  if (free_rank > 0) os << 'Z';
  if (free_rank > 1) os << '^' << free_rank;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (free_rank > 0 || i > 0) os << " + ";
    os << "Z/" << invariant_factors[i];
  }
  if (free_rank == 0 && invariant_factors.empty()) os << '0';
  return os.str();
}

// ---- grading matrices ------------------------------------------------------

GradingMatrix::GradingMatrix(std::vector<IntVector> free_rows, std::vector<TorsionRow> torsion_rows,
                             std::vector<std::vector<std::size_t>> blocks)
    : free_rows_(std::move(free_rows)), torsion_rows_(std::move(torsion_rows)), blocks_(std::move(blocks)) {
  if (free_rows_.empty()) throw ShapeError("grading matrix needs at least one free row");
  columns_ = free_rows_.front().size();
  if (blocks_.size() != free_rows_.size()) throw ShapeError("grading matrix: one block per free row required");
  for (const auto& r : free_rows_)
    if (r.size() != columns_) throw ShapeError("grading matrix: ragged free rows");
  for (const auto& t : torsion_rows_) {
    if (t.row.size() != columns_) throw ShapeError("grading matrix: torsion row length mismatch");
    if (t.modulus < 2) throw DomainError("grading matrix: torsion modulus must be >= 2");
    for (auto v : t.row)
      if (v < 0 || v >= t.modulus) throw DomainError("grading matrix: torsion residue out of range");
  }
  std::vector<int> owner(columns_, -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b)
    for (std::size_t c : blocks_[b]) {
      if (c >= columns_ || owner[c] != -1) throw ShapeError("grading matrix: blocks must partition the columns");
      owner[c] = static_cast<int>(b);
    }
  for (std::size_t c = 0; c < columns_; ++c)
    if (owner[c] == -1) throw ShapeError("grading matrix: column " + std::to_string(c) + " is in no block");
  for (std::size_t i = 0; i < free_rows_.size(); ++i) {
    for (std::size_t c = 0; c < columns_; ++c) {
      const bool inside = owner[c] == static_cast<int>(i);
      if (inside && free_rows_[i][c] < 1)
        throw DomainError("grading matrix: column " + std::to_string(c) + " has non-positive free degree");
      if (!inside && free_rows_[i][c] != 0)
        throw DomainError("grading matrix: free row " + std::to_string(i) + " is nonzero outside its block");
    }
    if (!identify_marks(block_marks(i)))
      throw DomainError("grading matrix: free row " + std::to_string(i) + " is not a row of affine marks");
  }
}

IntVector GradingMatrix::torsion_moduli() const {
  IntVector m;
  for (const auto& t : torsion_rows_) m.push_back(t.modulus);
  return m;
}

ClassGroup GradingMatrix::class_group() const { return {free_rows_.size(), normalize_invariants(torsion_moduli())}; }

IntVector GradingMatrix::block_marks(std::size_t i) const {
  IntVector m;
  for (std::size_t c : blocks_.at(i)) m.push_back(free_rows_[i][c]);
  return m;
}

std::vector<AdeType> GradingMatrix::component_types() const {
  std::vector<AdeType> out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(*identify_marks(block_marks(i)));
  return out;
}

ClassGroupElement GradingMatrix::degree(std::span<const std::int64_t> e) const {
  if (e.size() != columns_) throw ShapeError("grading: vector length != number of columns");
  ClassGroupElement d;
  for (const auto& r : free_rows_) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < columns_; ++c) s = checked::fma(s, r[c], e[c]);
    d.free.push_back(s);
  }
  for (const auto& t : torsion_rows_) {
    std::int64_t s = 0;
    for (std::size_t c = 0; c < columns_; ++c) s = checked::mod(checked::fma(s, t.row[c], e[c]), t.modulus);
    d.torsion.push_back(s);
  }
  return d;
}

ClassGroupElement GradingMatrix::column_degree(std::size_t j) const {
  IntVector e(columns_, 0);
  e.at(j) = 1;
  return degree(e);
}

void GradingMatrix::check_compatible(const ClassGroupElement& delta) const {
  if (delta.free.size() != free_rows_.size() || delta.torsion.size() != torsion_rows_.size())
    throw ShapeError("degree has shape (" + std::to_string(delta.free.size()) + ", " +
                     std::to_string(delta.torsion.size()) + ") but the grading expects (" +
                     std::to_string(free_rows_.size()) + ", " + std::to_string(torsion_rows_.size()) + ")");
}

ClassGroupElement GradingMatrix::reduce(ClassGroupElement delta) const {
  check_compatible(delta);
  for (std::size_t i = 0; i < torsion_rows_.size(); ++i)
    delta.torsion[i] = checked::mod(delta.torsion[i], torsion_rows_[i].modulus);
  return delta;
}

GradingMatrix GradingMatrix::free_only() const { return GradingMatrix(free_rows_, {}, blocks_); }

void to_json(nlohmann::json& j, const GradingMatrix& q) {
  j = nlohmann::json::object();
  j["free"] = q.free_rows();
  auto tors = nlohmann::json::array();
  for (const auto& t : q.torsion_rows()) tors.push_back({{"mod", t.modulus}, {"row", t.row}});
  j["torsion"] = tors;
  j["blocks"] = q.blocks();
}

void from_json(const nlohmann::json& j, GradingMatrix& q) {
  try {
    std::vector<TorsionRow> tors;
    for (const auto& t : j.at("torsion")) tors.push_back({t.at("mod").get<std::int64_t>(), t.at("row").get<IntVector>()});
    q = GradingMatrix(j.at("free").get<std::vector<IntVector>>(), std::move(tors),
                      j.at("blocks").get<std::vector<std::vector<std::size_t>>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("grading matrix JSON: ") + e.what());
  }
}

void to_json(nlohmann::json& j, const ClassGroupElement& g) { j = {{"free", g.free}, {"torsion", g.torsion}}; }

void from_json(const nlohmann::json& j, ClassGroupElement& g) {
  try {
    g.free = j.at("free").get<IntVector>();
    g.torsion = j.at("torsion").get<IntVector>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("class group element JSON: ") + e.what());
  }
}

IntVector delta_free_part(const FiberConfiguration& cfg, std::int64_t m, std::optional<std::size_t> multiple_fiber) {
  if (m < 1) throw DomainError("Halphen index must be positive");
  IntVector out(cfg.components.size(), m);
  if (multiple_fiber) {
    if (*multiple_fiber < 1 || *multiple_fiber > out.size())
      throw DomainError("multiple fibre index " + std::to_string(*multiple_fiber) + " out of range 1.." +
                        std::to_string(out.size()));
    out[*multiple_fiber - 1] = 1;
  }
  return out;
}

std::vector<IntVector> torsion_elements(const ClassGroup& g) { return residue_tuples(g.invariant_factors); }

EmbeddingGrading grading_from_embedding(const IntMatrix& cl_matrix) {
  if (cl_matrix.rows() != 8) throw ShapeError("embedding matrix must have 8 rows (E8 coordinates)");
  const std::size_t s = cl_matrix.cols();
  const IntMatrix dual = cl_matrix.transposed();  // P^*: E8^* -> E, s x 8
  const SmithForm snf = smith_normal_form(dual);
  if (snf.rank < 8)
    throw UnsupportedError("unsupported configuration: column span has rank " + std::to_string(snf.rank) + " < 8");

  // Blocks: connected components of the Gram graph, ordered by first column.
  IntMatrix gram_e8(8, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) gram_e8(i, j) = e8_gram_matrix()[i][j];
  const IntMatrix gram = dual * gram_e8 * cl_matrix;
  std::vector<int> comp(s, -1);
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t start = 0; start < s; ++start) {
    if (comp[start] != -1) continue;
    std::vector<std::size_t> block, stack{start};
    comp[start] = static_cast<int>(blocks.size());
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (std::size_t w = 0; w < s; ++w)
        if (w != v && gram(v, w) != 0 && comp[w] == -1) {
          comp[w] = static_cast<int>(blocks.size());
          stack.push_back(w);
        }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  if (blocks.size() != s - 8)
    throw UnsupportedError("unsupported configuration: " + std::to_string(blocks.size()) + " components but kernel rank " +
                           std::to_string(s - 8));

  std::vector<IntVector> free_rows;
  for (const auto& block : blocks) {
    std::vector<std::size_t> all_rows(8);
    std::iota(all_rows.begin(), all_rows.end(), 0);
    const auto kernel = integer_kernel(cl_matrix.submatrix(all_rows, block));
    if (kernel.size() != 1) throw UnsupportedError("unsupported configuration: component is not an affine diagram");
    IntVector k = kernel.front();
    if (k.front() < 0)
      for (auto& x : k) x = -x;
    IntVector row(s, 0);
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (k[i] <= 0) throw UnsupportedError("unsupported configuration: component relation is not positive");
      row[block[i]] = k[i];
    }
    free_rows.push_back(std::move(row));
  }

  std::vector<TorsionRow> torsion;
  IntVector factors;
  for (std::size_t i = 0; i < snf.rank; ++i) {
    const std::int64_t d = snf.diagonal(i, i);
    if (d == 1) continue;
    TorsionRow t{d, IntVector(s)};
    for (std::size_t c = 0; c < s; ++c) t.row[c] = checked::mod(snf.left(i, c), d);
    torsion.push_back(std::move(t));
    factors.push_back(d);
  }
  GradingMatrix q(std::move(free_rows), std::move(torsion), std::move(blocks));
  return {q, ClassGroup{q.free_rank(), factors}};
}

IntVector quotient_torsion(const GradingMatrix& q, const ClassGroupElement& delta) {
  q.check_compatible(delta);
  const std::size_t r = q.free_rank(), t = q.torsion_rows().size();
  IntMatrix rel(t + 1, r + t);
  for (std::size_t i = 0; i < t; ++i) rel(i, r + i) = q.torsion_rows()[i].modulus;
  for (std::size_t i = 0; i < r; ++i) rel(t, i) = delta.free[i];
  for (std::size_t i = 0; i < t; ++i) rel(t, r + i) = delta.torsion[i];
  return torsion_invariants(rel);
}

}  // namespace halphen
