#include "halphen/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "halphen/error.hpp"
#include "halphen/hilbert.hpp"
#include "halphen/rr_polytope.hpp"

namespace halphen {

namespace {

std::vector<IntVector> free_box(std::size_t r, std::int64_t bound) {
  return residue_tuples(IntVector(r, bound + 1));
}

std::string show(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// counts[free box index][torsion index]
std::vector<std::vector<std::uint64_t>> count_table(const GradingMatrix& q, std::int64_t bound) {
  std::vector<std::vector<std::uint64_t>> out;
  const auto tors = residue_tuples(q.torsion_moduli());
  for (const auto& f : free_box(q.free_rank(), bound)) {
    std::vector<std::uint64_t> row;
    for (const auto& t : tors) row.push_back(count(q, {f, t}));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

CheckResult check_marks(const NamedGrading& g) {
  CheckResult r{"marks " + g.name, true, ""};
  const auto types = g.grading.component_types();
  for (std::size_t b = 0; b < types.size(); ++b) {
    const auto mk = marks(types[b]).values;
    IntVector expected;
    for (auto node : appendix_node_order(types[b])) expected.push_back(mk[node]);
    if (g.grading.block_marks(b) != expected) {
      r.ok = false;
      r.detail = "block " + std::to_string(b + 1) + " has " + show(g.grading.block_marks(b)) + ", expected " + show(expected);
      return r;
    }
  }
  return r;
}

CheckResult check_series_vs_count(const NamedGrading& g, std::int64_t bound) {
  CheckResult r{"series = count " + g.name, true, ""};
  const auto& q = g.grading;
  const SeriesTable table = series_table(q, IntVector(q.free_rank(), bound));
  std::size_t checked = 0;
  for (const auto& [delta, coeff] : table.entries()) {
    const auto c = count(q, delta);
    ++checked;
    if (c != coeff) {
      r.ok = false;
      r.detail = "at free " + show(delta.free) + " torsion " + show(delta.torsion) + ": series " + std::to_string(coeff) +
                 ", count " + std::to_string(c);
      return r;
    }
  }
  r.detail = std::to_string(checked) + " degrees";
  return r;
}

std::optional<PresentationMatch> match_presentations(const GradingMatrix& a, const GradingMatrix& b, std::int64_t bound) {
  const auto ta = a.component_types(), tb = b.component_types();
  if (ta.size() != tb.size() || a.class_group() != b.class_group()) return std::nullopt;
  const std::size_t r = ta.size();
  const auto ma = a.torsion_moduli(), mb = b.torsion_moduli();
  const auto elems_a = residue_tuples(ma), elems_b = residue_tuples(mb);
  const FiniteAbelianGroup gb(mb);

  const auto table_a = count_table(a, bound), table_b = count_table(b, bound);
  const auto box = free_box(r, bound);
  const IntVector radix(r, bound + 1);

  // homomorphisms A: images of each generator of a, killed by its order
  std::vector<std::vector<IntVector>> gen_choices;
  for (auto d : ma) {
    std::vector<IntVector> ok;
    for (const auto& y : elems_b)
      if (gb.is_zero(gb.scale(y, d))) ok.push_back(y);
    gen_choices.push_back(std::move(ok));
  }
  const auto apply = [&](const std::vector<IntVector>& images, const IntVector& x) {
    IntVector y = gb.zero();
    for (std::size_t i = 0; i < x.size(); ++i) y = gb.add(y, gb.scale(images[i], x[i]));
    return y;
  };
  // torsion part of the first mark-1 column of each block of a
  std::vector<IntVector> anchor;
  for (std::size_t i = 0; i < r; ++i)
    for (auto c : a.blocks()[i])
      if (a.free_rows()[i][c] == 1) {
        anchor.push_back(a.column_degree(c).torsion);
        break;
      }

  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool types_ok = true;
    for (std::size_t i = 0; i < r && types_ok; ++i)
      types_ok = ta[i] == tb[perm[i]] && a.block_marks(i) == b.block_marks(perm[i]);
    if (!types_ok) continue;

    std::vector<IntVector> images(ma.size()), shift(r);
    std::vector<std::size_t> phi;
    std::function<bool(std::size_t)> pick_shift = [&](std::size_t i) -> bool {
      if (i < r) {
        // the anchor column must land on the degree of a mark-1 column of block perm[i]
        std::vector<IntVector> tried;
        for (auto c : b.blocks()[perm[i]]) {
          if (b.free_rows()[perm[i]][c] != 1) continue;
          IntVector s = gb.add(b.column_degree(c).torsion, gb.scale(apply(images, anchor[i]), -1));
          if (std::find(tried.begin(), tried.end(), s) != tried.end()) continue;
          tried.push_back(s);
          shift[i] = s;
          if (pick_shift(i + 1)) return true;
        }
        return false;
      }
      for (std::size_t f = 0; f < box.size(); ++f) {
        IntVector fb(r);
        IntVector sf = gb.zero();
        for (std::size_t k = 0; k < r; ++k) {
          fb[perm[k]] = box[f][k];
          sf = gb.add(sf, gb.scale(shift[k], box[f][k]));
        }
        const auto fbi = residue_index(fb, radix);
        for (std::size_t t = 0; t < elems_a.size(); ++t) {
          const auto target = residue_index(gb.add(apply(images, elems_a[t]), sf), mb);
          if (table_a[f][t] != table_b[fbi][target]) return false;
        }
      }
      return true;
    };
    std::function<bool(std::size_t)> pick_images = [&](std::size_t k) -> bool {
      if (k < ma.size()) {
        for (const auto& y : gen_choices[k]) {
          images[k] = y;
          if (pick_images(k + 1)) return true;
        }
        return false;
      }
      std::vector<bool> hit(elems_b.size(), false);
      for (const auto& x : elems_a) {
        const auto idx = residue_index(apply(images, x), mb);
        if (hit[idx]) return false;
        hit[idx] = true;
      }
      return pick_shift(0);
    };
    if (pick_images(0)) return PresentationMatch{perm, images, shift};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<CheckResult> check_model(const std::string& name, const CharacteristicSequence& seq,
                                     const GradingMatrix& fixture, std::int64_t bound) {
  std::vector<CheckResult> out;
  const std::string tag = "model " + name + ": ";
  std::optional<HalphenModel> model;
  try {
    model = reconstruct_neg2_curves(seq);
    out.push_back({tag + "reconstruction", true, model->configuration.name()});
  } catch (const Error& e) {
    out.push_back({tag + "reconstruction", false, e.what()});
    return out;
  }

  const auto expected = FiberConfiguration::parse(name).canonical();
  out.push_back({tag + "configuration", model->configuration == expected,
                 model->configuration.name() + " vs " + expected.name()});
  out.push_back({tag + "class group", model->class_group == fixture.class_group(),
                 model->class_group.to_string() + " vs " + fixture.class_group().to_string()});

  const DivisorClass l = DivisorClass::line();
  const auto d9 = delta_from_model(*model, DivisorClass::exceptional(9));
  const auto d1 = delta_from_model(*model, DivisorClass::exceptional(1));
  const auto d12 = delta_from_model(*model, l - DivisorClass::exceptional(1) - DivisorClass::exceptional(2));
  out.push_back({tag + "projection independence", d9 == d1 && d1 == d12, ""});

  try {
    const auto curves = enumerate_minus_one_curves(*model);
    const auto n = count(model->q_matrix, model->delta);
    out.push_back({tag + "lifting", curves.size() == n,
                   std::to_string(curves.size()) + " classes, " + std::to_string(n) + " points"});
  } catch (const Error& e) {
    out.push_back({tag + "lifting", false, e.what()});
  }

  const auto match = match_presentations(model->q_matrix, fixture, bound);
  out.push_back({tag + "presentation match", match.has_value(),
                 match ? "" : "no isomorphism of presentations matches counts up to free degree " + std::to_string(bound)});
  return out;
}

}  // namespace halphen
