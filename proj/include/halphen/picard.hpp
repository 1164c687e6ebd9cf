#pragma once

// Picard lattice Z^{1,9} of the plane blown up in nine points, with the
// classes L, E_1, ..., E_9 as basis and intersection form diag(1, -1, ..., -1).
// K^perp / <K> is identified with E8 through the fixed root basis
//   r1 = L - E1 - E2 - E3,  r2 = E1 - E2,  r3 = E2 - E3, ...,  r8 = E7 - E8.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace halphen {

/// c0 * L + c1 * E1 + ... + c9 * E9. The class d L - sum m_i E_i has coeffs (d, -m_1, ..., -m_9).
struct DivisorClass {
  std::array<std::int64_t, 10> coeffs{};

  static DivisorClass line();
  /// E_i for i in 1..9.
  static DivisorClass exceptional(int i);
  static DivisorClass canonical();
  /// d L - sum m_i E_i.
  static DivisorClass from_multiplicities(std::int64_t degree, const std::array<std::int64_t, 9>& mult);

  std::int64_t degree() const { return coeffs[0]; }
  /// m_i = -c_i, i in 1..9.
  std::int64_t multiplicity(int i) const { return -coeffs[static_cast<std::size_t>(i)]; }

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(const DivisorClass& a);
  friend DivisorClass operator*(std::int64_t k, const DivisorClass& a);

  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

struct E8Class {
  std::array<std::int64_t, 8> coords{};
  friend auto operator<=>(const E8Class&, const E8Class&) = default;
  friend bool operator==(const E8Class&, const E8Class&) = default;
};

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b);
inline std::int64_t self_intersection(const DivisorClass& a) { return intersect(a, a); }
bool in_k_perp(const DivisorClass& c);

/// c.c = -2 and c.K = 0.
bool is_root(const DivisorClass& c);
/// c.c = -1 and c.K = -1.
bool is_minus_one_class(const DivisorClass& c);

/// r1..r8.
const std::array<DivisorClass, 8>& e8_basis();
/// Gram matrix of r1..r8 (the negated E8 Cartan matrix).
const std::array<std::array<std::int64_t, 8>, 8>& e8_gram_matrix();
std::int64_t e8_gram(const E8Class& a, const E8Class& b);

/// Image in K^perp / <K>; throws DomainError when c.K != 0.
E8Class e8_project(const DivisorClass& c);
/// sum x_i r_i, a section of e8_project.
DivisorClass e8_lift(const E8Class& x);

/// The 240 roots of K^perp / <K>, each represented by its unique lift with
/// L-degree in {0, 1, 2}: E_i - E_j, L - E_i - E_j - E_k, 2L - (six E's).
const std::vector<DivisorClass>& e8_root_representatives();

/// "(d; m1,m2,...,m9)".
std::string to_string(const DivisorClass& c);
/// Raw coefficient row "c0 c1 ... c9", right-aligned to `width`.
std::string to_row(const DivisorClass& c, int width = 3);

void to_json(nlohmann::json& j, const DivisorClass& c);
void from_json(const nlohmann::json& j, DivisorClass& c);

}  // namespace halphen
