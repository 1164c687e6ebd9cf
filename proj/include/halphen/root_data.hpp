#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "halphen/int_matrix.hpp"

namespace halphen {

enum class Family { A, D, E };

/// Irreducible simply-laced root system. Valid ranks: A >= 1, D >= 4, E in {6, 7, 8}.
struct AdeType {
  Family family = Family::A;
  int rank = 1;

  AdeType() = default;
  AdeType(Family f, int r);

  /// "A4", "D8", "E7".
  static AdeType parse(std::string_view name);
  std::string name() const;
  std::size_t affine_nodes() const { return static_cast<std::size_t>(rank) + 1; }

  friend bool operator==(const AdeType&, const AdeType&) = default;
};

/// Order used for configuration names: E before D before A, larger rank first.
bool canonical_before(const AdeType& a, const AdeType& b);

/// Every valid type of rank <= max_rank.
std::vector<AdeType> ade_types_up_to(int max_rank);

// Node numbering follows Bourbaki for the finite nodes 1..rank; the affine
// node is 0 and comes first in every extended object.
IntMatrix cartan_matrix(const AdeType& t);
IntMatrix extended_cartan_matrix(const AdeType& t);

/// Coefficients of the unique primitive positive relation among the affine
/// nodes (the null vector of the extended Cartan matrix), affine node first.
struct Marks {
  IntVector values;
};

Marks marks(const AdeType& t);

/// Column order of the appendix tables: position k holds affine node order[k].
std::vector<std::size_t> appendix_node_order(const AdeType& t);

/// Type whose marks, as a multiset, equal `row` (any node order), if any.
std::optional<AdeType> identify_marks(const IntVector& row);

/// Recognition of an affine Dynkin diagram from an intersection matrix of
/// (-2)-classes. node_index[k] is the row of `gram` labelled as affine node k;
/// then -gram relabelled equals extended_cartan_matrix(type).
struct AffineLabeling {
  AdeType type;
  std::vector<std::size_t> node_index;
};

std::optional<AffineLabeling> recognize_affine_diagram(const IntMatrix& gram);

/// Ordered list of irreducible components (one reducible fibre each).
struct FiberConfiguration {
  std::vector<AdeType> components;

  /// "E7+A1", "2A3+2A1", "4A2".
  static FiberConfiguration parse(std::string_view name);
  std::string name() const;
  int total_rank() const;
  /// Sum of (rank + 1) over components.
  std::size_t total_nodes() const;
  FiberConfiguration canonical() const;

  friend bool operator==(const FiberConfiguration&, const FiberConfiguration&) = default;
};

struct ClassGroup {
  std::size_t free_rank = 0;
  IntVector invariant_factors;

  std::int64_t torsion_order() const;
  /// "Z^2 + Z/2", "Z".
  std::string to_string() const;

  friend bool operator==(const ClassGroup&, const ClassGroup&) = default;
};

/// Degree in Z^r + T. Torsion residues are given per torsion row of the
/// grading matrix they refer to.
struct ClassGroupElement {
  IntVector free;
  IntVector torsion;

  friend auto operator<=>(const ClassGroupElement&, const ClassGroupElement&) = default;
  friend bool operator==(const ClassGroupElement&, const ClassGroupElement&) = default;
};

struct TorsionRow {
  std::int64_t modulus = 1;
  IntVector row;

  friend bool operator==(const TorsionRow&, const TorsionRow&) = default;
};

/// Map Q: E -> Cl(Z) in block form: one free row per component holding that
/// component's marks, followed by torsion rows read modulo their modulus.
class GradingMatrix {
 public:
  GradingMatrix() = default;
  /// Validates the block structure; throws ShapeError / DomainError.
  GradingMatrix(std::vector<IntVector> free_rows, std::vector<TorsionRow> torsion_rows,
                std::vector<std::vector<std::size_t>> blocks);

  std::size_t columns() const { return columns_; }
  std::size_t free_rank() const { return free_rows_.size(); }
  const std::vector<IntVector>& free_rows() const { return free_rows_; }
  const std::vector<TorsionRow>& torsion_rows() const { return torsion_rows_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

  IntVector torsion_moduli() const;
  ClassGroup class_group() const;
  std::vector<AdeType> component_types() const;
  FiberConfiguration configuration() const { return {component_types()}; }
  /// Marks of block i in block column order.
  IntVector block_marks(std::size_t i) const;

  ClassGroupElement degree(std::span<const std::int64_t> e) const;
  ClassGroupElement column_degree(std::size_t j) const;
  /// Throws ShapeError unless delta has r free and one residue per torsion row.
  void check_compatible(const ClassGroupElement& delta) const;
  ClassGroupElement reduce(ClassGroupElement delta) const;
  GradingMatrix free_only() const;

  friend bool operator==(const GradingMatrix&, const GradingMatrix&) = default;

 private:
  std::size_t columns_ = 0;
  std::vector<IntVector> free_rows_;
  std::vector<TorsionRow> torsion_rows_;
  std::vector<std::vector<std::size_t>> blocks_;
};

void to_json(nlohmann::json& j, const GradingMatrix& q);
void from_json(const nlohmann::json& j, GradingMatrix& q);
void to_json(nlohmann::json& j, const ClassGroupElement& g);
void from_json(const nlohmann::json& j, ClassGroupElement& g);

/// Free part of delta: (m, ..., m), with entry k replaced by 1 when
/// `multiple_fiber` = k (1-based) names the component supporting the multiple fibre.
IntVector delta_free_part(const FiberConfiguration& cfg, std::int64_t m, std::optional<std::size_t> multiple_fiber);

/// All torsion residue vectors of the group, lexicographic.
std::vector<IntVector> torsion_elements(const ClassGroup& g);

/// Presentation of coker(P^*) for P: Z^s -> E8 given by the columns of
/// cl_matrix (8 x s, E8 root coordinates). Free rows are the block marks,
/// torsion rows come from the Smith normal form of P^*.
struct EmbeddingGrading {
  GradingMatrix grading;
  ClassGroup class_group;
};

EmbeddingGrading grading_from_embedding(const IntMatrix& cl_matrix);

/// Torsion invariants (> 1) of Cl / <delta>.
IntVector quotient_torsion(const GradingMatrix& q, const ClassGroupElement& delta);

// ---- appendix data ---------------------------------------------------------

/// The 13 rank-8 types in appendix order.
const std::vector<std::string>& appendix_type_names();
/// The same types in the order of the characteristic-sequence and index-2 tables.
const std::vector<std::string>& table_type_names();
/// Canonical grading matrix of a named type; throws DomainError for unknown names.
const GradingMatrix& appendix_grading(std::string_view type_name);

}  // namespace halphen
