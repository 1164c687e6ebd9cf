#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>

#include "halphen/error.hpp"
#include "halphen/fixtures.hpp"
#include "halphen/verify.hpp"

using namespace halphen;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& tag) {
  const auto dir = fs::temp_directory_path() / ("halphen_test_" + tag + "_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

GradingMatrix with_torsion_entry(const GradingMatrix& q, std::size_t row, std::size_t col, std::int64_t value) {
  auto tors = q.torsion_rows();
  tors[row].row[col] = value;
  return GradingMatrix(q.free_rows(), tors, q.blocks());
}

}  // namespace

TEST(Fixtures, GradingsMatchCompiledTable) {
  const auto all = load_gradings(HALPHEN_TEST_FIXTURES);
  ASSERT_EQ(all.size(), 13u);
  for (const auto& g : all) EXPECT_EQ(g.grading, appendix_grading(g.name)) << g.name;
}

TEST(Fixtures, CorruptEntryNamesTheMatrix) {
  const auto dir = scratch_dir("corrupt");
  auto text = read_text(fs::path(HALPHEN_TEST_FIXTURES) / "gradings.json");
  auto doc = nlohmann::json::parse(text);
  doc["types"][3]["grading"]["free"][0][0] = 7;
  write(dir / "gradings.json", doc.dump());
  try {
    load_gradings(dir);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("E7+A1"), std::string::npos) << e.what();
  }
  doc = nlohmann::json::parse(text);
  doc["version"] = 2;
  write(dir / "gradings.json", doc.dump());
  EXPECT_THROW(load_gradings(dir), ParseError);
  write(dir / "gradings.json", "{not json");
  EXPECT_THROW(load_gradings(dir), ParseError);
  fs::remove_all(dir);
  EXPECT_THROW(load_gradings(dir), ParseError);
}

TEST(Fixtures, MislabelledEntryIsRejected) {
  const auto dir = scratch_dir("label");
  auto doc = nlohmann::json::parse(read_text(fs::path(HALPHEN_TEST_FIXTURES) / "gradings.json"));
  doc["types"][0]["name"] = "D8";
  write(dir / "gradings.json", doc.dump());
  EXPECT_THROW(load_gradings(dir), ParseError);
  fs::remove_all(dir);
}

TEST(Fixtures, EnvironmentOverride) {
  ::setenv("HALPHEN_FIXTURES", "/some/where", 1);
  EXPECT_EQ(fixtures_dir("/default"), fs::path("/some/where"));
  ::setenv("HALPHEN_FIXTURES", "", 1);
  EXPECT_EQ(fixtures_dir("/default"), fs::path("/default"));
  ::unsetenv("HALPHEN_FIXTURES");
  EXPECT_EQ(fixtures_dir("/default"), fs::path("/default"));
}

TEST(Fixtures, SequenceFileErrorsCarryThePath) {
  const auto dir = scratch_dir("seq");
  write(dir / "bad.seq", "2\n0, 0\n");
  try {
    load_sequence(dir / "bad.seq");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("bad.seq"), std::string::npos);
  }
  fs::remove_all(dir);
}

TEST(Verify, MarksAndSeriesChecksPass) {
  for (const auto& g : load_gradings(HALPHEN_TEST_FIXTURES)) {
    EXPECT_TRUE(check_marks(g).ok) << g.name;
    EXPECT_TRUE(check_series_vs_count(g, 2).ok) << g.name;
  }
}

TEST(Verify, PresentationMatchIsReflexiveAndDetectsChanges) {
  for (const auto& name : appendix_type_names()) {
    const auto& q = appendix_grading(name);
    EXPECT_TRUE(match_presentations(q, q, 2).has_value()) << name;
  }
  const auto& d8 = appendix_grading("D8");
  // moving one torsion residue from a mark-2 column breaks the count pattern
  EXPECT_FALSE(match_presentations(d8, with_torsion_entry(d8, 0, 4, 1), 2).has_value());
  // relabelling the torsion generator is an isomorphism
  const auto& a8 = appendix_grading("A8");
  auto neg = a8.torsion_rows();
  for (auto& x : neg[0].row) x = (3 - x) % 3;
  EXPECT_TRUE(match_presentations(a8, GradingMatrix(a8.free_rows(), neg, a8.blocks()), 2).has_value());
}

TEST(Verify, ModelChecksPassForTable1) {
  for (const auto& name : table_type_names())
    for (const auto& r : check_model(name, table1_sequence(name), appendix_grading(name), 2))
      EXPECT_TRUE(r.ok) << r.name << " " << r.detail;
}
