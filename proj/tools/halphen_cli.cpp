// halphen: count (-1)-curves of rational elliptic surfaces from the toric
// grading data, build surface models from characteristic sequences, and
// regenerate the reference tables.

#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "halphen/error.hpp"
#include "halphen/fixtures.hpp"
#include "halphen/halphen.hpp"
#include "halphen/rr_polytope.hpp"
#include "halphen/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace halphen;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitModel = 3;
constexpr int kExitDiff = 4;

fs::path fixture_root() { return fixtures_dir(HALPHEN_DEFAULT_FIXTURES); }

fs::path golden_root() {
  const char* env = std::getenv("HALPHEN_GOLDEN");
  return (env && *env) ? fs::path(env) : fs::path(HALPHEN_DEFAULT_GOLDEN);
}

std::string residues(const IntVector& v) {
  if (v.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string canonical_name(const std::string& name) { return FiberConfiguration::parse(name).canonical().name(); }

const NamedGrading* find_grading(const std::vector<NamedGrading>& all, const std::string& name) {
  std::string want;
  try {
    want = canonical_name(name);
  } catch (const Error&) {
    return nullptr;
  }
  for (const auto& g : all)
    if (canonical_name(g.name) == want) return &g;
  return nullptr;
}

fs::path sequence_file(const std::string& type) {
  const auto dir = fixture_root() / "sequences";
  if (fs::exists(dir / (type + ".seq"))) return dir / (type + ".seq");
  return dir / (canonical_name(type) + ".seq");
}

// ---- count ------------------------------------------------------------------

struct CountArgs {
  std::string type;
  std::int64_t index = 1;
  std::optional<std::size_t> multiple_fiber;
  bool json = false;
};

int run_count(const CountArgs& a) {
  const auto gradings = load_gradings(fixture_root());
  const auto* g = find_grading(gradings, a.type);
  if (!g) {
    std::cerr << "error: unknown type '" << a.type << "'\n";
    return kExitUsage;
  }
  TwistReport rep;
  try {
    rep = counts_by_twist(g->grading, g->name, a.index, a.multiple_fiber);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (a.json) {
    std::cout << to_json(rep).dump(2) << '\n';
    return 0;
  }
  std::cout << "type " << rep.type << "  index " << rep.m << "  class group " << rep.class_group.to_string() << '\n';
  std::cout << "multiple fibre " << (rep.multiple_fiber ? std::to_string(*rep.multiple_fiber) : "-") << '\n';
  std::cout << "free degree (" << residues(rep.free) << ")\n";
  std::cout << std::left << std::setw(10) << "torsion" << std::setw(10) << "count" << std::setw(16) << "extension"
            << "realizable\n";
  for (const auto& t : rep.twists)
    std::cout << std::setw(10) << residues(t.torsion) << std::setw(10) << t.count << std::setw(16)
              << format_torsion(t.extension) << (t.realizable ? "yes" : "no") << '\n';
  std::cout << "ext classes " << format_torsion(rep.ext.invariants) << " (" << rep.ext.size() << ")\n";
  std::cout << "realizable counts " << join(rep.realizable_counts()) << '\n';
  return 0;
}

// ---- model ------------------------------------------------------------------

struct ModelArgs {
  std::string sequence;
  std::string table1;
  bool enumerate = false;
  bool json = false;
};

int run_model(const ModelArgs& a) {
  if (a.sequence.empty() == a.table1.empty()) {
    std::cerr << "error: give exactly one of --sequence or --table1\n";
    return kExitUsage;
  }
  std::optional<CharacteristicSequence> seq;
  try {
    seq = load_sequence(a.sequence.empty() ? sequence_file(a.table1) : fs::path(a.sequence));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::optional<HalphenModel> model;
  std::vector<DivisorClass> curves;
  try {
    model = reconstruct_neg2_curves(*seq);
    if (a.enumerate) curves = enumerate_minus_one_curves(*model);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitModel;
  }
  if (a.json) {
    std::cout << model_to_json(*model, a.enumerate ? &curves : nullptr).dump(2) << '\n';
    return 0;
  }
  const auto& m = *model;
  std::cout << "sequence " << seq->to_compact() << " in " << format_torsion(seq->group.invariant_factors()) << '\n';
  std::cout << "index " << m.index << "  h (" << residues(m.h) << ")\n";
  std::cout << "configuration " << m.configuration.name() << '\n';
  std::cout << "multiple fibre " << (m.multiple_fiber ? std::to_string(*m.multiple_fiber) : "-") << '\n';
  std::cout << "class group " << m.class_group.to_string() << '\n';
  std::cout << "delta free (" << residues(m.delta.free) << ") torsion (" << residues(m.delta.torsion) << ")\n";
  std::cout << "(-2)-curves\n";
  const auto& blocks = m.q_matrix.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const auto& t = m.configuration.components[b];
    const auto order = appendix_node_order(t);
    for (std::size_t k = 0; k < blocks[b].size(); ++k)
      std::cout << "  F" << (b + 1) << ':' << t.name() << ':' << order[k] << "  " << to_row(m.neg2_curves[blocks[b][k]])
                << '\n';
  }
  if (a.enumerate) {
    std::cout << "(-1)-curves " << curves.size() << '\n';
    for (const auto& d : curves) std::cout << "  " << to_row(d) << '\n';
  }
  return 0;
}

// ---- tables -----------------------------------------------------------------

struct Table {
  std::string text;
  json rows = json::array();
};

Table table1(const std::vector<NamedGrading>& gradings) {
  Table t;
  t.text = "type | group | sequence | index\n";
  for (const auto& name : table_type_names()) {
    const auto seq = load_sequence(sequence_file(name));
    const auto group = format_torsion(seq.group.invariant_factors());
    std::string type;
    try {
      const auto model = reconstruct_neg2_curves(seq);
      type = model.configuration.name();
      const auto* g = find_grading(gradings, name);
      if (!g || model.class_group != g->grading.class_group()) type += " (class group mismatch)";
      if (format_torsion(model.class_group.invariant_factors) != group) type += " (group mismatch)";
    } catch (const Error& e) {
      type = std::string("error: ") + e.what();
    }
    const auto index = halphen_index(seq);
    t.text += type + " | " + group + " | " + seq.to_compact() + " | " + std::to_string(index) + '\n';
    t.rows.push_back({{"type", type}, {"group", group}, {"sequence", seq.to_compact()}, {"index", index}});
  }
  return t;
}

Table table2(const std::vector<NamedGrading>& gradings) {
  Table t;
  t.text = "type | counts\n";
  for (const auto& name : table_type_names()) {
    const auto* g = find_grading(gradings, name);
    if (!g) throw ParseError("no grading matrix for " + name);
    const auto rep = counts_by_twist(g->grading, name, 2);
    t.text += name + " | " + join(rep.realizable_counts()) + '\n';
    t.rows.push_back(to_json(rep));
  }
  return t;
}

Table table3(const std::vector<NamedGrading>& gradings) {
  Table t;
  bool first = true;
  for (const auto& name : appendix_type_names()) {
    const auto* g = find_grading(gradings, name);
    if (!g) throw ParseError("no grading matrix for " + name);
    const auto& q = g->grading;
    std::ostringstream os;
    if (!first) os << '\n';
    first = false;
    os << name << " | " << q.class_group().to_string() << '\n';
    for (const auto& r : q.free_rows()) {
      os << ' ';
      for (auto x : r) os << ' ' << x;
      os << '\n';
    }
    for (const auto& r : q.torsion_rows()) {
      os << ' ';
      for (auto x : r.row) os << ' ' << x;
      os << " mod " << r.modulus << '\n';
    }
    bool recomputed = false;
    try {
      const auto model = reconstruct_neg2_curves(load_sequence(sequence_file(name)));
      recomputed = match_presentations(model.q_matrix, q, 2).has_value();
    } catch (const Error&) {
    }
    if (!recomputed) os << "  recomputed presentation does not match\n";
    t.text += os.str();
    json jq = q;
    t.rows.push_back({{"type", name}, {"class_group", q.class_group().to_string()}, {"grading", jq},
                      {"recomputed_match", recomputed}});
  }
  return t;
}

int run_tables(int which, bool as_json) {
  const auto gradings = load_gradings(fixture_root());
  const Table t = which == 1 ? table1(gradings) : which == 2 ? table2(gradings) : table3(gradings);
  const auto golden_path = golden_root() / ("table" + std::to_string(which) + ".txt");
  std::string golden;
  try {
    golden = read_text(golden_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDiff;
  }
  const bool same = golden == t.text;
  if (as_json)
    std::cout << json{{"table", which}, {"rows", t.rows}, {"matches_golden", same}}.dump(2) << '\n';
  else
    std::cout << t.text;
  if (same) return 0;

  std::istringstream gs(golden), ns(t.text);
  std::string gl, nl;
  std::size_t line = 0;
  std::cerr << "table " << which << " differs from " << golden_path.string() << '\n';
  while (true) {
    const bool g_ok = static_cast<bool>(std::getline(gs, gl));
    const bool n_ok = static_cast<bool>(std::getline(ns, nl));
    if (!g_ok && !n_ok) break;
    ++line;
    if (!g_ok) gl = "<missing>";
    if (!n_ok) nl = "<missing>";
    if (gl != nl) std::cerr << "line " << line << ":\n- " << gl << "\n+ " << nl << '\n';
  }
  return kExitDiff;
}

// ---- verify -----------------------------------------------------------------

int run_verify(std::int64_t bound, bool as_json) {
  std::vector<CheckResult> results;
  try {
    const auto gradings = load_gradings(fixture_root());
    results.push_back({"fixtures", true, std::to_string(gradings.size()) + " grading matrices"});
    for (const auto& g : gradings) results.push_back(check_marks(g));
    for (const auto& g : gradings) results.push_back(check_series_vs_count(g, bound));
    for (const auto& name : table_type_names()) {
      const auto* g = find_grading(gradings, name);
      if (!g) {
        results.push_back({"model " + name, false, "no grading matrix " + name});
        continue;
      }
      const auto seq = load_sequence(sequence_file(name));
      for (auto& r : check_model(name, seq, g->grading, bound)) {
        if (!r.ok) r.detail += " (grading matrix " + name + ")";
        results.push_back(std::move(r));
      }
    }
  } catch (const Error& e) {
    results.push_back({"fixtures", false, e.what()});
  }

  std::size_t failed = 0;
  for (const auto& r : results) failed += r.ok ? 0 : 1;
  if (as_json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    std::cout << json{{"bound", bound}, {"checks", arr}, {"failed", failed}}.dump(2) << '\n';
  } else {
    for (const auto& r : results)
      std::cout << (r.ok ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : "  [" + r.detail + "]") << '\n';
    std::cout << results.size() << " checks, " << failed << " failed\n";
  }
  return failed ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(-1)-curves on rational elliptic surfaces"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand("count", "count (-1)-curves for every torsion twist");
  count_cmd->add_option("type", count_args.type, "rank-8 type, e.g. D8 or 2A3+2A1")->required();
  count_cmd->add_option("--index", count_args.index, "Halphen index m")->check(CLI::PositiveNumber);
  count_cmd->add_option("--multiple-fiber", count_args.multiple_fiber, "1-based component carrying the multiple fibre");
  count_cmd->add_flag("--json", count_args.json);

  ModelArgs model_args;
  auto* model_cmd = app.add_subcommand("model", "build the surface model of a characteristic sequence");
  auto* seq_opt = model_cmd->add_option("--sequence", model_args.sequence, "sequence file");
  auto* t1_opt = model_cmd->add_option("--table1", model_args.table1, "use the stored sequence of a rank-8 type");
  seq_opt->excludes(t1_opt);
  model_cmd->add_flag("--enumerate", model_args.enumerate, "list the (-1)-curves");
  model_cmd->add_flag("--json", model_args.json);

  int which = 0;
  bool tables_json = false;
  auto* tables_cmd = app.add_subcommand("tables", "regenerate a reference table and compare with the stored copy");
  tables_cmd->add_option("--which", which, "1, 2 or 3")->required()->check(CLI::IsMember({1, 2, 3}));
  tables_cmd->add_flag("--json", tables_json);

  std::int64_t bound = 2;
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the cross-check suite");
  verify_cmd->add_option("--bound", bound, "largest free degree per component")->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--json", verify_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count_cmd) return run_count(count_args);
    if (*model_cmd) return run_model(model_args);
    if (*tables_cmd) return run_tables(which, tables_json);
    if (*verify_cmd) return run_verify(bound, verify_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return *verify_cmd ? kExitFail : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return 0;
}
