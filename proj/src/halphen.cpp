#include "halphen/halphen.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "halphen/checked.hpp"
#include "halphen/error.hpp"
#include "halphen/rr_polytope.hpp"

namespace halphen {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::int64_t parse_int(const std::string& tok, const char* what) {
  if (tok.empty()) throw ParseError(std::string("empty ") + what);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + tok + "'");
  }
  if (used != tok.size()) throw ParseError(std::string("bad ") + what + " '" + tok + "'");
  return v;
}

std::string format_gram(const IntMatrix& g) {
  std::ostringstream os;
  os << g;
  return os.str();
}

}  // namespace

CharacteristicSequence::CharacteristicSequence(FiniteAbelianGroup g, std::array<GroupElement, 9> pts)
    : group(std::move(g)), points(std::move(pts)) {
  if (group.arity() == 0 || group.arity() > 2)
    throw DomainError("characteristic sequence: group must have one or two cyclic factors");
  for (auto& p : points) {
    if (p.size() != group.arity()) throw ShapeError("characteristic sequence: point arity differs from the group");
    p = group.reduce(p);
  }
  if (!group.is_zero(points[0])) throw DomainError("characteristic sequence: p1 must be 0");
}

CharacteristicSequence CharacteristicSequence::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    lines.push_back(t);
  }
  if (lines.size() != 2) throw ParseError("sequence file needs 2 lines, got " + std::to_string(lines.size()));

  IntVector factors;
  {
    std::istringstream fs(lines[0]);
    for (std::string tok; fs >> tok;) {
      const auto d = parse_int(tok, "invariant factor");
      if (d < 1) throw ParseError("invariant factor must be positive: " + tok);
      factors.push_back(d);
    }
  }
  if (factors.empty() || factors.size() > 2) throw ParseError("expected one or two invariant factors");

  std::vector<GroupElement> pts;
  std::istringstream ps(lines[1]);
  for (std::string item; std::getline(ps, item, ',');) {
    const auto t = trim(item);
    GroupElement g;
    std::istringstream cs(t);
    for (std::string part; std::getline(cs, part, ':');) g.push_back(parse_int(trim(part), "residue"));
    if (g.size() != factors.size())
      throw ParseError("element '" + t + "' has " + std::to_string(g.size()) + " residues, expected " +
                       std::to_string(factors.size()));
    pts.push_back(std::move(g));
  }
  if (pts.size() != 9) throw ParseError("expected 9 points, got " + std::to_string(pts.size()));
  std::array<GroupElement, 9> arr;
  std::copy(pts.begin(), pts.end(), arr.begin());
  try {
    return CharacteristicSequence(FiniteAbelianGroup(factors), arr);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string CharacteristicSequence::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < group.arity(); ++i) os << (i ? " " : "") << group.factors()[i];
  os << '\n';
  for (std::size_t k = 0; k < 9; ++k) {
    if (k) os << ", ";
    for (std::size_t i = 0; i < points[k].size(); ++i) os << (i ? ":" : "") << points[k][i];
  }
  os << '\n';
  return os.str();
}

std::string CharacteristicSequence::to_compact() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < 9; ++k) {
    if (k) os << ',';
    if (group.is_zero(points[k])) {
      os << 0;
      continue;
    }
    for (auto r : points[k]) os << r;
  }
  os << ']';
  return os.str();
}

GroupElement alpha(const DivisorClass& c, const CharacteristicSequence& seq) {
  if (!in_k_perp(c)) throw DomainError("alpha: " + to_string(c) + " is not orthogonal to K");
  GroupElement s = seq.group.zero();
  for (int i = 2; i <= 9; ++i)
    s = seq.group.add(s, seq.group.scale(seq.points[static_cast<std::size_t>(i - 1)], c.multiplicity(i)));
  return s;
}

GroupElement anticanonical_image(const CharacteristicSequence& seq) { return alpha(-DivisorClass::canonical(), seq); }

std::int64_t halphen_index(const CharacteristicSequence& seq) {
  return seq.group.element_order(anticanonical_image(seq));
}

std::vector<DivisorClass> candidate_lifts(const CharacteristicSequence& seq) {
  const GroupElement h = anticanonical_image(seq);
  const std::int64_t m = seq.group.element_order(h);
  std::vector<GroupElement> multiples;
  GroupElement acc = seq.group.zero();
  for (std::int64_t j = 0; j < m; ++j) {
    multiples.push_back(acc);
    acc = seq.group.add(acc, h);
  }
  const DivisorClass k = DivisorClass::canonical();
  std::vector<DivisorClass> out;
  for (const auto& root : e8_root_representatives()) {
    const GroupElement a = alpha(root, seq);
    const auto it = std::find(multiples.begin(), multiples.end(), a);
    if (it == multiples.end()) continue;
    const auto j = static_cast<std::int64_t>(it - multiples.begin());
    DivisorClass c = root + j * k;
    // family c + t*m*K has L-degrees deg(c) - 3mt; take the least nonnegative one
    const std::int64_t step = 3 * m;
    const std::int64_t deg = c.degree();
    const std::int64_t t = (deg >= 0) ? deg / step : -((-deg + step - 1) / step);
    c = c + (t * m) * k;
    if (c.degree() == 0) {
      const auto first = std::find_if(c.coeffs.begin() + 1, c.coeffs.end(), [](std::int64_t x) { return x != 0; });
      if (first != c.coeffs.end() && *first < 0) c = c - m * k;
    }
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

HalphenModel reconstruct_neg2_curves(const CharacteristicSequence& seq) {
  const GroupElement h = anticanonical_image(seq);
  const std::int64_t m = seq.group.element_order(h);

  std::vector<DivisorClass> chosen;
  for (const auto& c : candidate_lifts(seq)) {
    if (std::all_of(chosen.begin(), chosen.end(), [&](const DivisorClass& s) { return intersect(c, s) >= 0; }))
      chosen.push_back(c);
  }

  const std::size_t n = chosen.size();
  IntMatrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gram(a, b) = intersect(chosen[a], chosen[b]);

  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t start = 0; start < n; ++start) {
    if (comp[start] != -1) continue;
    std::vector<std::size_t> members, stack{start};
    comp[start] = static_cast<int>(groups.size());
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && gram(v, w) != 0 && comp[w] == -1) {
          comp[w] = static_cast<int>(groups.size());
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    groups.push_back(std::move(members));
  }

  struct Component {
    AdeType type;
    std::vector<DivisorClass> curves;
  };
  std::vector<Component> components;
  for (const auto& members : groups) {
    const IntMatrix local = gram.submatrix(members, members);
    const auto lab = recognize_affine_diagram(local);
    if (!lab) throw PostconditionError("selected (-2)-curves do not form affine Dynkin diagrams; Gram matrix:\n" + format_gram(gram));
    Component c{lab->type, {}};
    for (auto node : appendix_node_order(lab->type)) c.curves.push_back(chosen[members[lab->node_index[node]]]);
    components.push_back(std::move(c));
  }
  std::stable_sort(components.begin(), components.end(),
                   [](const Component& a, const Component& b) { return canonical_before(a.type, b.type); });

  HalphenModel model{seq, h, m, {}, {}, std::nullopt, {}, {}, {}, {}};
  for (const auto& c : components) {
    model.configuration.components.push_back(c.type);
    model.neg2_curves.insert(model.neg2_curves.end(), c.curves.begin(), c.curves.end());
  }
  if (model.configuration.total_rank() != 8)
    throw UnsupportedError("unsupported configuration " +
                           (components.empty() ? std::string("(no (-2)-curves)") : model.configuration.name()) +
                           ": rank " + std::to_string(model.configuration.total_rank()) + " < 8");

  const DivisorClass minus_k = -DivisorClass::canonical();
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    const auto mk = marks(c.type).values;
    const auto order = appendix_node_order(c.type);
    DivisorClass fiber;
    for (std::size_t k = 0; k < c.curves.size(); ++k) fiber += mk[order[k]] * c.curves[k];
    if (fiber == m * minus_k) continue;
    if (m > 1 && fiber == minus_k && !model.multiple_fiber) {
      model.multiple_fiber = i + 1;
    } else {
      throw PostconditionError("component " + std::to_string(i + 1) + " (" + c.type.name() +
                               ") has fibre class " + to_string(fiber));
    }
  }

  std::vector<IntVector> cols;
  for (const auto& c : model.neg2_curves) {
    const auto x = e8_project(c).coords;
    cols.emplace_back(x.begin(), x.end());
  }
  model.cl_matrix = IntMatrix::from_columns(cols, 8);
  auto emb = grading_from_embedding(model.cl_matrix);
  model.q_matrix = std::move(emb.grading);
  model.class_group = emb.class_group;
  model.delta = delta_from_model(model);
  verify_model(model);
  return model;
}

void verify_model(const HalphenModel& model) {
  const auto fail = [](const std::string& msg) { throw PostconditionError("model check failed: " + msg); };
  const DivisorClass k = DivisorClass::canonical();
  for (const auto& c : model.neg2_curves) {
    if (!is_root(c)) fail(to_string(c) + " is not a (-2)-class orthogonal to K");
    if (!model.sequence.group.is_zero(alpha(c, model.sequence))) fail(to_string(c) + " has nonzero alpha");
    if (c.degree() < 0) fail(to_string(c) + " has negative degree");
  }
  const auto& q = model.q_matrix;
  if (q.configuration() != model.configuration) fail("grading type " + q.configuration().name() + " differs from " + model.configuration.name());
  if (q.columns() != model.neg2_curves.size()) fail("grading has wrong number of columns");

  for (std::size_t b = 0; b < q.blocks().size(); ++b) {
    const auto& cols = q.blocks()[b];
    const AdeType t = model.configuration.components[b];
    const auto cartan = extended_cartan_matrix(t);
    const auto order = appendix_node_order(t);
    const auto mk = marks(t).values;
    DivisorClass fiber;
    for (std::size_t x = 0; x < cols.size(); ++x) {
      fiber += mk[order[x]] * model.neg2_curves[cols[x]];
      for (std::size_t y = 0; y < cols.size(); ++y)
        if (intersect(model.neg2_curves[cols[x]], model.neg2_curves[cols[y]]) != -cartan(order[x], order[y]))
          fail("Gram block " + std::to_string(b + 1) + " is not the negated affine Cartan matrix of " + t.name());
    }
    const bool multiple = model.multiple_fiber && *model.multiple_fiber == b + 1;
    if (fiber != (multiple ? -k : -model.index * k)) fail("fibre sum of component " + std::to_string(b + 1));
    for (std::size_t x = 0; x < cols.size(); ++x) {
      const auto deg = q.column_degree(cols[x]);
      for (std::size_t r = 0; r < deg.free.size(); ++r)
        if (deg.free[r] != (r == b ? mk[order[x]] : 0)) fail("free degree of column " + std::to_string(cols[x]));
    }
  }
  for (std::size_t a = 0; a < model.neg2_curves.size(); ++a)
    for (std::size_t b = a + 1; b < model.neg2_curves.size(); ++b) {
      const bool same = std::any_of(q.blocks().begin(), q.blocks().end(), [&](const auto& blk) {
        return std::find(blk.begin(), blk.end(), a) != blk.end() && std::find(blk.begin(), blk.end(), b) != blk.end();
      });
      if (!same && intersect(model.neg2_curves[a], model.neg2_curves[b]) != 0) fail("curves in different fibres meet");
    }
  if (model.delta.free != delta_free_part(model.configuration, model.index, model.multiple_fiber))
    fail("free part of delta");
}

ClassGroupElement delta_from_model(const HalphenModel& model, const DivisorClass& w) {
  if (intersect(w, -DivisorClass::canonical()) != 1)
    throw DomainError("projection class " + to_string(w) + " must meet -K once");
  IntVector e;
  for (const auto& c : model.neg2_curves) e.push_back(intersect(c, w));
  return model.q_matrix.degree(e);
}

std::vector<DivisorClass> enumerate_minus_one_curves(const HalphenModel& model) {
  if (model.configuration.total_rank() != 8)
    throw UnsupportedError("(-1)-curve lifting needs a rank-8 configuration, got " + model.configuration.name());
  const std::size_t s = model.neg2_curves.size();
  IntMatrix a(s + 1, 10);
  const auto fill = [&](std::size_t r, const DivisorClass& c) {
    a(r, 0) = c.coeffs[0];
    for (std::size_t i = 1; i < 10; ++i) a(r, i) = -c.coeffs[i];
  };
  for (std::size_t j = 0; j < s; ++j) fill(j, model.neg2_curves[j]);
  const DivisorClass k = DivisorClass::canonical();
  fill(s, k);
  const SmithForm snf = smith_normal_form(a);
  if (snf.rank != 9) throw PostconditionError("intersection system has rank " + std::to_string(snf.rank) + ", expected 9");

  std::vector<DivisorClass> out;
  for (const auto& e : enumerate(model.q_matrix, model.delta)) {
    IntVector b = e;
    b.push_back(-1);
    const auto x = solve_integer(snf, b);
    if (!x) throw PostconditionError("no integral class with intersection vector at a lattice point");
    DivisorClass d;
    std::copy(x->begin(), x->end(), d.coeffs.begin());
    const std::int64_t sq = self_intersection(d);
    if (checked::mod(sq, 2) != 1) throw PostconditionError("even self-intersection in lift " + to_string(d));
    d = d + ((sq + 1) / 2) * k;
    if (!is_minus_one_class(d)) throw PostconditionError("lift " + to_string(d) + " is not a (-1)-class");
    for (std::size_t j = 0; j < s; ++j)
      if (intersect(d, model.neg2_curves[j]) != e[j]) throw PostconditionError("lift " + to_string(d) + " misses its intersection vector");
    out.push_back(d);
  }
  auto sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PostconditionError("two lattice points lift to the same class");
  return out;
}

std::int64_t ExtData::size() const {
  std::int64_t s = 1;
  for (auto d : invariants) s = checked::mul(s, d);
  return s;
}

ExtData ext_classes(const FiniteAbelianGroup& quotient, std::int64_t m) {
  return {m, ext_invariants(quotient.invariant_factors(), m)};
}

std::vector<std::uint64_t> TwistReport::realizable_counts() const {
  std::vector<std::uint64_t> out;
  for (const auto& t : twists)
    if (t.realizable) out.push_back(t.count);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TwistReport counts_by_twist(const GradingMatrix& q, std::string type_name, std::int64_t m,
                            std::optional<std::size_t> multiple_fiber) {
  if (m < 1) throw DomainError("index must be positive");
  TwistReport rep;
  rep.type = std::move(type_name);
  rep.m = m;
  rep.multiple_fiber = multiple_fiber;
  rep.class_group = q.class_group();
  rep.free = delta_free_part(q.configuration(), m, multiple_fiber);
  for (const auto& t : residue_tuples(q.torsion_moduli())) {
    const ClassGroupElement delta{rep.free, t};
    TwistCount tc;
    tc.torsion = t;
    tc.count = count(q, delta);
    tc.extension = quotient_torsion(q, delta);
    tc.realizable = tc.extension.size() <= 2;
    rep.twists.push_back(std::move(tc));
  }
  const auto inv = rep.class_group.invariant_factors;
  rep.ext = ext_classes(FiniteAbelianGroup(inv.empty() ? IntVector{1} : inv), m);
  return rep;
}

TwistReport counts_by_twist(std::string_view type_name, std::int64_t m, std::optional<std::size_t> multiple_fiber) {
  return counts_by_twist(appendix_grading(type_name), std::string(type_name), m, multiple_fiber);
}

const CharacteristicSequence& table1_sequence(std::string_view type_name) {
  static const std::map<std::string, CharacteristicSequence, std::less<>> table = [] {
    const std::vector<std::pair<std::string, std::string>> raw = {
        {"E8", "1\n0, 0, 0, 0, 0, 0, 0, 0, 0"},
        {"D8", "2\n0, 0, 0, 0, 0, 1, 1, 1, 1"},
        {"E7+A1", "2\n0, 0, 0, 0, 0, 0, 0, 1, 1"},
        {"A8", "3\n0, 0, 0, 0, 1, 1, 1, 1, 2"},
        {"E6+A2", "3\n0, 0, 0, 0, 0, 0, 1, 1, 1"},
        {"A7+A1", "4\n0, 0, 0, 0, 1, 1, 2, 2, 2"},
        {"D5+A3", "4\n0, 0, 0, 0, 0, 1, 1, 1, 1"},
        {"2A4", "5\n0, 0, 0, 0, 1, 1, 1, 1, 1"},
        {"A5+A2+A1", "6\n0, 0, 0, 1, 1, 1, 1, 1, 1"},
        {"D6+2A1", "2 2\n0:0, 0:0, 0:0, 0:0, 0:0, 1:0, 1:0, 0:1, 0:1"},
        {"2D4", "2 2\n0:0, 0:0, 0:0, 1:0, 1:0, 0:1, 0:1, 1:1, 1:1"},
        {"2A3+2A1", "2 4\n0:0, 0:0, 0:0, 1:0, 1:0, 0:1, 0:1, 0:1, 0:1"},
        {"4A2", "3 3\n0:0, 0:0, 0:0, 1:0, 1:0, 1:0, 0:1, 0:1, 0:1"},
    };
    std::map<std::string, CharacteristicSequence, std::less<>> t;
    for (const auto& [name, text] : raw) t.emplace(name, CharacteristicSequence::parse(text));
    return t;
  }();
  const auto it = table.find(type_name);
  if (it == table.end()) throw DomainError("no characteristic sequence for type '" + std::string(type_name) + "'");
  return it->second;
}

nlohmann::json to_json(const TwistReport& report) {
  nlohmann::json twists = nlohmann::json::array();
  for (const auto& t : report.twists)
    twists.push_back({{"torsion", t.torsion}, {"count", t.count}, {"extension", t.extension}, {"realizable", t.realizable}});
  return {{"type", report.type},
          {"index", report.m},
          {"multiple_fiber", report.multiple_fiber ? nlohmann::json(*report.multiple_fiber) : nlohmann::json()},
          {"class_group", report.class_group.to_string()},
          {"free", report.free},
          {"twists", twists},
          {"ext", {{"invariants", report.ext.invariants}, {"size", report.ext.size()}}},
          {"realizable_counts", report.realizable_counts()}};
}

nlohmann::json model_to_json(const HalphenModel& model, const std::vector<DivisorClass>* minus_one) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : model.sequence.points) points.push_back(p);
  nlohmann::json curves = nlohmann::json::array();
  for (const auto& c : model.neg2_curves) curves.push_back(c);
  nlohmann::json j = {
      {"sequence", {{"factors", model.sequence.group.factors()}, {"points", points}}},
      {"index", model.index},
      {"h", model.h},
      {"configuration", model.configuration.name()},
      {"multiple_fiber", model.multiple_fiber ? nlohmann::json(*model.multiple_fiber) : nlohmann::json()},
      {"neg2_curves", curves},
      {"grading", model.q_matrix},
      {"class_group", model.class_group.to_string()},
      {"delta", model.delta},
  };
  if (minus_one) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& d : *minus_one) rows.push_back({{"class", d}, {"dm", to_string(d)}});
    j["minus_one_curves"] = rows;
  }
  return j;
}

}  // namespace halphen
