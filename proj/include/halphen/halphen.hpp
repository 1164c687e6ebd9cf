#pragma once

// Blow-ups of the plane at nine points of a cubic, described through their
// characteristic sequence [p_1, ..., p_9] in a finite group G with p_1 = 0.
// The restriction map alpha: K^perp -> G sends dL - sum m_i E_i to
// sum_{i >= 2} m_i p_i; its value h on -K has order m, the Halphen index.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "halphen/abelian.hpp"
#include "halphen/picard.hpp"
#include "halphen/root_data.hpp"

namespace halphen {

struct CharacteristicSequence {
  FiniteAbelianGroup group;
  std::array<GroupElement, 9> points;

  /// Reduces the points and checks arity, at most two factors and p_1 = 0.
  CharacteristicSequence(FiniteAbelianGroup g, std::array<GroupElement, 9> pts);

  /// Two-line text form: invariant factors, then nine elements ("0:1, 1:0, ...").
  static CharacteristicSequence parse(std::string_view text);
  std::string to_text() const;
  /// Compact form used in tables: "[0,0,0,10,10,01,01,01,01]".
  std::string to_compact() const;

  friend bool operator==(const CharacteristicSequence&, const CharacteristicSequence&) = default;
};

/// alpha(c) for c in K^perp; throws DomainError otherwise.
GroupElement alpha(const DivisorClass& c, const CharacteristicSequence& seq);
/// h = alpha(-K) = p_2 + ... + p_9.
GroupElement anticanonical_image(const CharacteristicSequence& seq);
std::int64_t halphen_index(const CharacteristicSequence& seq);

struct HalphenModel {
  CharacteristicSequence sequence;
  GroupElement h;
  std::int64_t index = 1;
  /// (-2)-curves, component by component, each component in appendix node order.
  std::vector<DivisorClass> neg2_curves;
  FiberConfiguration configuration;
  /// 1-based component whose curves sum to -K (support of a reducible multiple fibre).
  std::optional<std::size_t> multiple_fiber;
  /// 8 x s matrix of E8 images of the curves.
  IntMatrix cl_matrix;
  GradingMatrix q_matrix;
  ClassGroup class_group;
  ClassGroupElement delta;
};

/// Minimal effective alpha-trivial lift of every root of Lambda, in greedy order
/// (L-degree, then lexicographic on coefficients).
std::vector<DivisorClass> candidate_lifts(const CharacteristicSequence& seq);

/// Greedy selection of the (-2)-curves and construction of the toric data.
/// Throws UnsupportedError when the curves do not span a rank-8 configuration
/// and PostconditionError when the selection is not a union of affine diagrams.
HalphenModel reconstruct_neg2_curves(const CharacteristicSequence& seq);

/// Checks every structural invariant of a model; throws PostconditionError.
void verify_model(const HalphenModel& model);

/// Degree of the functional C_j -> C_j . W for a class W with W . (-K) = 1.
ClassGroupElement delta_from_model(const HalphenModel& model, const DivisorClass& w = DivisorClass::exceptional(9));

/// One (-1)-curve per lattice point of Delta(delta), in point order.
std::vector<DivisorClass> enumerate_minus_one_curves(const HalphenModel& model);

struct ExtData {
  std::int64_t m = 1;
  /// Invariant factors of Ext^1(E8 / Lambda, Z/m).
  IntVector invariants;
  std::int64_t size() const;
};

ExtData ext_classes(const FiniteAbelianGroup& quotient, std::int64_t m);

struct TwistCount {
  IntVector torsion;
  std::uint64_t count = 0;
  /// Torsion invariants of Cl / <delta>, i.e. of the extension group G.
  IntVector extension;
  /// G is generated by at most two elements.
  bool realizable = false;
};

struct TwistReport {
  std::string type;
  std::int64_t m = 1;
  std::optional<std::size_t> multiple_fiber;
  ClassGroup class_group;
  IntVector free;
  std::vector<TwistCount> twists;
  ExtData ext;

  /// Sorted distinct counts over realizable twists.
  std::vector<std::uint64_t> realizable_counts() const;
};

TwistReport counts_by_twist(const GradingMatrix& q, std::string type_name, std::int64_t m,
                            std::optional<std::size_t> multiple_fiber = std::nullopt);
TwistReport counts_by_twist(std::string_view type_name, std::int64_t m,
                            std::optional<std::size_t> multiple_fiber = std::nullopt);

/// Characteristic sequences realising each of the 13 rank-8 types.
const CharacteristicSequence& table1_sequence(std::string_view type_name);

nlohmann::json to_json(const TwistReport& report);
nlohmann::json model_to_json(const HalphenModel& model, const std::vector<DivisorClass>* minus_one = nullptr);

}  // namespace halphen
