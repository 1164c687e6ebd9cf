#include "halphen/picard.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "halphen/checked.hpp"
#include "halphen/error.hpp"
#include "halphen/int_matrix.hpp"

namespace halphen {

DivisorClass DivisorClass::line() {
  DivisorClass c;
  c.coeffs[0] = 1;
  return c;
}

DivisorClass DivisorClass::exceptional(int i) {
  if (i < 1 || i > 9) throw DomainError("exceptional class index must be in 1..9");
  DivisorClass c;
  c.coeffs[static_cast<std::size_t>(i)] = 1;
  return c;
}

DivisorClass DivisorClass::canonical() {
  DivisorClass c;
  c.coeffs.fill(1);
  c.coeffs[0] = -3;
  return c;
}

DivisorClass DivisorClass::from_multiplicities(std::int64_t degree, const std::array<std::int64_t, 9>& mult) {
  DivisorClass c;
  c.coeffs[0] = degree;
  for (std::size_t i = 0; i < 9; ++i) c.coeffs[i + 1] = checked::sub(0, mult[i]);
  return c;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  for (std::size_t i = 0; i < 10; ++i) coeffs[i] = checked::add(coeffs[i], o.coeffs[i]);
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  for (std::size_t i = 0; i < 10; ++i) coeffs[i] = checked::sub(coeffs[i], o.coeffs[i]);
  return *this;
}

DivisorClass operator-(const DivisorClass& a) {
  DivisorClass r;
  for (std::size_t i = 0; i < 10; ++i) r.coeffs[i] = checked::sub(0, a.coeffs[i]);
  return r;
}

DivisorClass operator*(std::int64_t k, const DivisorClass& a) {
  DivisorClass r;
  for (std::size_t i = 0; i < 10; ++i) r.coeffs[i] = checked::mul(k, a.coeffs[i]);
  return r;
}

std::int64_t intersect(const DivisorClass& a, const DivisorClass& b) {
  std::int64_t s = checked::mul(a.coeffs[0], b.coeffs[0]);
  for (std::size_t i = 1; i < 10; ++i) s = checked::sub(s, checked::mul(a.coeffs[i], b.coeffs[i]));
  return s;
}

bool in_k_perp(const DivisorClass& c) { return intersect(c, DivisorClass::canonical()) == 0; }

bool is_root(const DivisorClass& c) { return self_intersection(c) == -2 && in_k_perp(c); }

bool is_minus_one_class(const DivisorClass& c) {
  return self_intersection(c) == -1 && intersect(c, DivisorClass::canonical()) == -1;
}

const std::array<DivisorClass, 8>& e8_basis() {
  static const std::array<DivisorClass, 8> basis = [] {
    std::array<DivisorClass, 8> b;
    b[0] = DivisorClass::line() - DivisorClass::exceptional(1) - DivisorClass::exceptional(2) -
           DivisorClass::exceptional(3);
    for (int i = 1; i < 8; ++i) b[static_cast<std::size_t>(i)] = DivisorClass::exceptional(i) - DivisorClass::exceptional(i + 1);
    return b;
  }();
  return basis;
}

const std::array<std::array<std::int64_t, 8>, 8>& e8_gram_matrix() {
  static const auto gram = [] {
    std::array<std::array<std::int64_t, 8>, 8> g{};
    const auto& b = e8_basis();
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) g[i][j] = intersect(b[i], b[j]);
    return g;
  }();
  return gram;
}

std::int64_t e8_gram(const E8Class& a, const E8Class& b) {
  const auto& g = e8_gram_matrix();
  std::int64_t s = 0;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) s = checked::add(s, checked::mul(a.coords[i], checked::mul(g[i][j], b.coords[j])));
  return s;
}

namespace {

// Inverse of the (unimodular) Gram matrix, columns solved one at a time.
const IntMatrix& inverse_gram() {
  static const IntMatrix inv = [] {
    IntMatrix g(8, 8);
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) g(i, j) = e8_gram_matrix()[i][j];
    const SmithForm snf = smith_normal_form(g);
    IntMatrix out(8, 8);
    for (std::size_t j = 0; j < 8; ++j) {
      IntVector e(8, 0);
      e[j] = 1;
      const auto col = solve_integer(snf, e);
      if (!col) throw PostconditionError("E8 Gram matrix is not unimodular");
      for (std::size_t i = 0; i < 8; ++i) out(i, j) = (*col)[i];
    }
    return out;
  }();
  return inv;
}

}  // namespace

E8Class e8_project(const DivisorClass& c) {
  if (!in_k_perp(c)) throw DomainError("e8_project: class " + to_string(c) + " is not orthogonal to K");
  IntVector pairings(8);
  for (std::size_t i = 0; i < 8; ++i) pairings[i] = intersect(c, e8_basis()[i]);
  const IntVector x = inverse_gram().apply(pairings);
  E8Class out;
  std::copy(x.begin(), x.end(), out.coords.begin());
  return out;
}

DivisorClass e8_lift(const E8Class& x) {
  DivisorClass c;
  for (std::size_t i = 0; i < 8; ++i) c += x.coords[i] * e8_basis()[i];
  return c;
}

const std::vector<DivisorClass>& e8_root_representatives() {
  static const std::vector<DivisorClass> roots = [] {
    std::vector<DivisorClass> out;
    for (int i = 1; i <= 9; ++i)
      for (int j = 1; j <= 9; ++j)
        if (i != j) out.push_back(DivisorClass::exceptional(i) - DivisorClass::exceptional(j));
    // degree 1 and 2: choose 3 (resp. 6) points by bitmask
    for (unsigned mask = 0; mask < (1u << 9); ++mask) {
      const int bits = __builtin_popcount(mask);
      if (bits != 3 && bits != 6) continue;
      DivisorClass c;
      c.coeffs[0] = bits / 3;
      for (int i = 0; i < 9; ++i)
        if (mask & (1u << i)) c.coeffs[static_cast<std::size_t>(i + 1)] = -1;
      out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return roots;
}

std::string to_string(const DivisorClass& c) {
  std::ostringstream os;
  os << '(' << c.degree() << ';';
  for (int i = 1; i <= 9; ++i) os << (i > 1 ? "," : " ") << c.multiplicity(i);
  os << ')';
  return os.str();
}

std::string to_row(const DivisorClass& c, int width) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 10; ++i) os << (i ? " " : "") << std::setw(width) << c.coeffs[i];
  return os.str();
}

void to_json(nlohmann::json& j, const DivisorClass& c) { j = c.coeffs; }

void from_json(const nlohmann::json& j, DivisorClass& c) {
  if (!j.is_array() || j.size() != 10) throw ParseError("divisor class must be a JSON array of 10 integers");
  for (std::size_t i = 0; i < 10; ++i) {
    if (!j[i].is_number_integer()) throw ParseError("divisor class entries must be integers");
    c.coeffs[i] = j[i].get<std::int64_t>();
  }
}

}  // namespace halphen
