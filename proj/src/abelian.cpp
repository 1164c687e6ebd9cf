#include "halphen/abelian.hpp"

#include <numeric>
#include <sstream>

#include "halphen/checked.hpp"
#include "halphen/error.hpp"

namespace halphen {

FiniteAbelianGroup::FiniteAbelianGroup(IntVector factors) : factors_(std::move(factors)) {
  for (std::int64_t d : factors_)
    if (d < 1) throw DomainError("FiniteAbelianGroup: factors must be >= 1");
}

std::int64_t FiniteAbelianGroup::order() const {
  std::int64_t n = 1;
  for (std::int64_t d : factors_) n = checked::mul(n, d);
  return n;
}

void FiniteAbelianGroup::check(const GroupElement& a) const {
  if (a.size() != factors_.size()) throw ShapeError("group element has wrong number of coordinates");
}

GroupElement FiniteAbelianGroup::reduce(GroupElement g) const {
  check(g);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = checked::mod(g[i], factors_[i]);
  return g;
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  GroupElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::mod(checked::add(a[i], b[i]), factors_[i]);
  return r;
}

GroupElement FiniteAbelianGroup::scale(const GroupElement& a, std::int64_t k) const {
  check(a);
  GroupElement r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = checked::mod(checked::mul(checked::mod(a[i], factors_[i]), checked::mod(k, factors_[i])), factors_[i]);
  return r;
}

bool FiniteAbelianGroup::is_zero(const GroupElement& a) const {
  check(a);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (checked::mod(a[i], factors_[i]) != 0) return false;
  return true;
}

std::int64_t FiniteAbelianGroup::element_order(const GroupElement& a) const {
  check(a);
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t r = checked::mod(a[i], factors_[i]);
    ord = std::lcm(ord, factors_[i] / std::gcd(r, factors_[i]));
  }
  return ord;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const { return residue_tuples(factors_); }

IntVector FiniteAbelianGroup::invariant_factors() const { return normalize_invariants(factors_); }

std::vector<GroupElement> residue_tuples(const IntVector& moduli) {
  std::vector<GroupElement> out{GroupElement{}};
  for (std::int64_t d : moduli) {
    std::vector<GroupElement> next;
    next.reserve(out.size() * static_cast<std::size_t>(d));
    for (const auto& prefix : out)
      for (std::int64_t r = 0; r < d; ++r) {
        GroupElement g = prefix;
        g.push_back(r);
        next.push_back(std::move(g));
      }
    out = std::move(next);
  }
  return out;
}

std::size_t residue_index(const GroupElement& g, const IntVector& moduli) {
  if (g.size() != moduli.size()) throw ShapeError("residue_index: arity mismatch");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    idx = idx * static_cast<std::size_t>(moduli[i]) + static_cast<std::size_t>(checked::mod(g[i], moduli[i]));
  return idx;
}

IntVector normalize_invariants(const IntVector& moduli) {
  IntMatrix rel(moduli.size(), moduli.size());
  for (std::size_t i = 0; i < moduli.size(); ++i) rel(i, i) = moduli[i];
  return torsion_invariants(rel);
}

std::string format_torsion(const IntVector& invariants) {
  if (invariants.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < invariants.size(); ++i) os << (i ? " + " : "") << "Z/" << invariants[i];
  return os.str();
}

IntVector ext_invariants(const IntVector& quotient_invariants, std::int64_t m) {
  if (m < 1) throw DomainError("ext_invariants: m must be positive");
  IntVector out;
  for (std::int64_t d : quotient_invariants) {
    const std::int64_t g = std::gcd(d, m);
    if (g > 1) out.push_back(g);
  }
  return normalize_invariants(out);
}

}  // namespace halphen
