#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "halphen/int_matrix.hpp"

namespace halphen {

/// Element of a finite group Z/d_1 + ... + Z/d_k, stored as reduced residues.
using GroupElement = IntVector;

/// Z/d_1 + ... + Z/d_k presented by its cyclic factors (each >= 1).
/// A factor of 1 is allowed as a placeholder so that the trivial group can
/// still carry one coordinate.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(IntVector factors);

  const IntVector& factors() const { return factors_; }
  std::size_t arity() const { return factors_.size(); }
  std::int64_t order() const;

  GroupElement zero() const { return GroupElement(factors_.size(), 0); }
  GroupElement reduce(GroupElement g) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement scale(const GroupElement& a, std::int64_t k) const;
  bool is_zero(const GroupElement& a) const;
  std::int64_t element_order(const GroupElement& a) const;

  /// All elements, lexicographic in the residue coordinates.
  std::vector<GroupElement> elements() const;
  /// Normalised invariant factors (> 1, successively dividing).
  IntVector invariant_factors() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  void check(const GroupElement& a) const;
  IntVector factors_;
};

/// Lexicographic enumeration of Z/m_1 x ... x Z/m_k (one empty tuple when k = 0).
std::vector<GroupElement> residue_tuples(const IntVector& moduli);

/// Mixed-radix index of a reduced tuple; inverse of residue_tuples ordering.
std::size_t residue_index(const GroupElement& g, const IntVector& moduli);

/// Invariant factors (> 1) of Z/m_1 + ... + Z/m_k.
IntVector normalize_invariants(const IntVector& moduli);

/// "0", "Z/2", "Z/2 + Z/4" (terms joined with " + ").
std::string format_torsion(const IntVector& invariants);

/// Ext^1(Z/d_1 + ... + Z/d_k, Z/m) = Z/gcd(d_1, m) + ... (factors equal to 1 dropped).
IntVector ext_invariants(const IntVector& quotient_invariants, std::int64_t m);

}  // namespace halphen
