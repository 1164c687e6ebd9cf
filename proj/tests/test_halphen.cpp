#include <gtest/gtest.h>

#include <algorithm>

#include "halphen/error.hpp"
#include "halphen/fixtures.hpp"
#include "halphen/halphen.hpp"
#include "halphen/rr_polytope.hpp"
#include "oracles.hpp"

using namespace halphen;

namespace {

std::vector<DivisorClass> rows_to_classes(const std::vector<std::array<std::int64_t, 10>>& rows) {
  std::vector<DivisorClass> out;
  for (const auto& r : rows) out.push_back(DivisorClass{r});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> sorted(std::vector<DivisorClass> v) {
  std::sort(v.begin(), v.end());
  return v;
}

CharacteristicSequence fixture_sequence(const std::string& name) {
  return load_sequence(std::filesystem::path(HALPHEN_TEST_FIXTURES) / "sequences" / (name + ".seq"));
}

}  // namespace

TEST(Sequence, ParseAndPrint) {
  const auto s = CharacteristicSequence::parse("2 2\n0:0, 0:0, 0:1, 0:1, 0:1, 1:0, 1:0, 1:1, 1:1\n");
  EXPECT_EQ(s.group.factors(), (IntVector{2, 2}));
  EXPECT_EQ(s.points[7], (GroupElement{1, 1}));
  EXPECT_EQ(s.to_compact(), "[0,0,01,01,01,10,10,11,11]");
  EXPECT_EQ(CharacteristicSequence::parse(s.to_text()), s);
  const auto c = CharacteristicSequence::parse("# comment\n4\n0, 0, 2, 2, 2, 1, 1, 3, 7\n");
  EXPECT_EQ(c.points[8], GroupElement{3});
}

TEST(Sequence, ParseErrors) {
  EXPECT_THROW(CharacteristicSequence::parse("2\n0, 0, 1"), ParseError);
  EXPECT_THROW(CharacteristicSequence::parse("2\n1, 0, 0, 0, 0, 0, 0, 0, 0"), ParseError);
  EXPECT_THROW(CharacteristicSequence::parse("2 2\n0, 0, 0, 0, 0, 0, 0, 0, 0"), ParseError);
  EXPECT_THROW(CharacteristicSequence::parse("x\n0, 0, 0, 0, 0, 0, 0, 0, 0"), ParseError);
  EXPECT_THROW(CharacteristicSequence::parse("2 2 2\n0:0:0, 0:0:0, 0:0:0, 0:0:0, 0:0:0, 0:0:0, 0:0:0, 0:0:0, 0:0:0"),
               ParseError);
  EXPECT_THROW(CharacteristicSequence::parse("3\n0, 0, 0, 0, 0, 0, 0, 0, 0\nextra"), ParseError);
}

TEST(Alpha, AdditiveAndCanonical) {
  const auto& seq = table1_sequence("2A3+2A1");
  const auto& roots = e8_root_representatives();
  for (std::size_t i = 0; i < roots.size(); i += 7)
    for (std::size_t j = 0; j < roots.size(); j += 11)
      EXPECT_EQ(alpha(roots[i] + roots[j], seq), seq.group.add(alpha(roots[i], seq), alpha(roots[j], seq)));
  const auto d8 = CharacteristicSequence::parse("4\n0, 0, 2, 2, 2, 1, 1, 3, 3");
  const auto h = anticanonical_image(d8);
  EXPECT_EQ(h, GroupElement{2});
  EXPECT_EQ(alpha(DivisorClass::canonical(), d8), d8.group.scale(h, -1));
  EXPECT_EQ(halphen_index(d8), 2);
  EXPECT_THROW(alpha(DivisorClass::line(), d8), DomainError);
}

TEST(Model, Table1SequencesGiveTheirTypes) {
  for (const auto& name : table_type_names()) {
    const auto& seq = table1_sequence(name);
    EXPECT_EQ(halphen_index(seq), 1) << name;
    const auto model = reconstruct_neg2_curves(seq);
    EXPECT_EQ(model.configuration.name(), name);
    EXPECT_EQ(model.class_group, appendix_grading(name).class_group()) << name;
    EXPECT_EQ(model.class_group.invariant_factors, seq.group.invariant_factors()) << name;
    EXPECT_FALSE(model.multiple_fiber.has_value());
    EXPECT_EQ(model.delta.free, IntVector(model.configuration.components.size(), 1));
    EXPECT_NO_THROW(verify_model(model));
  }
}

TEST(Model, FixtureSequencesMatchCompiledOnes) {
  for (const auto& name : table_type_names()) EXPECT_EQ(fixture_sequence(name), table1_sequence(name)) << name;
}

TEST(Model, ProjectionIndependence) {
  const std::vector<DivisorClass> ws = {
      DivisorClass::exceptional(9), DivisorClass::exceptional(1),
      DivisorClass::line() - DivisorClass::exceptional(1) - DivisorClass::exceptional(2),
      2 * DivisorClass::line() - DivisorClass::exceptional(1) - DivisorClass::exceptional(2) -
          DivisorClass::exceptional(3) - DivisorClass::exceptional(4) - DivisorClass::exceptional(5)};
  for (const auto& name : table_type_names()) {
    const auto model = reconstruct_neg2_curves(table1_sequence(name));
    for (const auto& w : ws) EXPECT_EQ(delta_from_model(model, w), model.delta) << name;
  }
  const auto model = reconstruct_neg2_curves(table1_sequence("E8"));
  EXPECT_THROW(delta_from_model(model, DivisorClass::line()), DomainError);
}

TEST(Model, FreeDegreeOfEachCurveIsMarkTimesUnit) {
  for (const auto& name : table_type_names()) {
    const auto model = reconstruct_neg2_curves(table1_sequence(name));
    const auto& q = model.q_matrix;
    for (std::size_t b = 0; b < q.blocks().size(); ++b)
      for (auto c : q.blocks()[b]) {
        auto deg = q.column_degree(c).free;
        IntVector unit(q.free_rank(), 0);
        unit[b] = q.free_rows()[b][c];
        EXPECT_EQ(deg, unit) << name;
      }
  }
}

TEST(Lifting, MatchesBruteForcePicard) {
  for (const auto& name : table_type_names()) {
    const auto model = reconstruct_neg2_curves(table1_sequence(name));
    const auto lifted = enumerate_minus_one_curves(model);
    EXPECT_EQ(lifted.size(), count(model.q_matrix, model.delta)) << name;
    EXPECT_EQ(sorted(lifted), oracle::picard_minus_one_classes(model.neg2_curves, 8)) << name;
  }
}

TEST(Lifting, D8CaseOne) {
  const auto model = reconstruct_neg2_curves(fixture_sequence("d8_case1"));
  EXPECT_EQ(model.index, 2);
  EXPECT_EQ(model.configuration.name(), "D8");
  EXPECT_EQ(model.delta, (ClassGroupElement{{2}, {0}}));
  const auto expected = rows_to_classes({
      {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {1, -1, -1, 0, 0, 0, 0, 0, 0, 0},
      {2, 0, 0, -1, -1, -1, -1, -1, 0, 0},
      {2, 0, 0, -1, -1, -1, 0, 0, -1, -1},
      {4, -2, -2, -1, -1, -1, -2, 0, -1, -1},
      {4, -2, -2, -1, -1, -1, -1, -1, -2, 0},
  });
  const auto lifted = sorted(enumerate_minus_one_curves(model));
  EXPECT_EQ(lifted, expected);
  EXPECT_EQ(oracle::picard_minus_one_classes(model.neg2_curves, 12), expected);
}

TEST(Lifting, D8CaseTwo) {
  const auto model = reconstruct_neg2_curves(fixture_sequence("d8_case2"));
  EXPECT_EQ(model.index, 2);
  EXPECT_EQ(model.delta, (ClassGroupElement{{2}, {1}}));
  const auto expected = rows_to_classes({
      {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
      {1, -1, -1, 0, 0, 0, 0, 0, 0, 0},
      {2, 0, 0, -1, -1, -1, -1, 0, -1, 0},
  });
  EXPECT_EQ(sorted(enumerate_minus_one_curves(model)), expected);
  EXPECT_EQ(oracle::picard_minus_one_classes(model.neg2_curves, 12), expected);
}

TEST(Lifting, E8HasOneCurve) {
  const auto model = reconstruct_neg2_curves(table1_sequence("E8"));
  const auto curves = enumerate_minus_one_curves(model);
  ASSERT_EQ(curves.size(), 1u);
  EXPECT_EQ(curves.front(), DivisorClass::exceptional(9));
}

TEST(Model, LowRankIsUnsupported) {
  EXPECT_THROW(reconstruct_neg2_curves(CharacteristicSequence::parse("6\n0, 1, 2, 3, 4, 5, 0, 1, 2")), UnsupportedError);
}

TEST(Model, CandidateLiftsAreAlphaTrivialRoots) {
  for (const auto& name : {"D8", "4A2"}) {
    const auto& seq = table1_sequence(name);
    const auto cands = candidate_lifts(seq);
    EXPECT_TRUE(std::is_sorted(cands.begin(), cands.end()));
    for (const auto& c : cands) {
      EXPECT_TRUE(is_root(c));
      EXPECT_TRUE(seq.group.is_zero(alpha(c, seq)));
      EXPECT_GE(c.degree(), 0);
    }
  }
}

TEST(Twists, IndexTwoTable) {
  const std::vector<std::pair<std::string, std::vector<std::uint64_t>>> expected = {
      {"E8", {3}},           {"D8", {6, 9}},         {"E7+A1", {8, 10}},     {"A8", {15}},
      {"E6+A2", {18}},       {"A7+A1", {24, 30}},    {"D5+A3", {28, 32}},    {"2A4", {45}},
      {"A5+A2+A1", {60, 66}}, {"D6+2A1", {26, 28}},   {"2D4", {28}},          {"2A3+2A1", {108, 112}},
      {"4A2", {144}}};
  for (const auto& [name, counts] : expected) EXPECT_EQ(counts_by_twist(name, 2).realizable_counts(), counts) << name;
}

TEST(Twists, ReportDetails) {
  const auto d8 = counts_by_twist("D8", 2);
  ASSERT_EQ(d8.twists.size(), 2u);
  EXPECT_EQ(d8.twists[0].count, 9u);
  EXPECT_EQ(d8.twists[1].count, 6u);
  EXPECT_EQ(d8.ext.invariants, IntVector{2});
  const auto e8 = counts_by_twist("E8", 1);
  EXPECT_EQ(e8.realizable_counts(), std::vector<std::uint64_t>{1});
  const auto d4 = counts_by_twist("2D4", 2);
  EXPECT_FALSE(d4.twists[0].realizable);
  EXPECT_EQ(d4.twists[0].extension, (IntVector{2, 2, 2}));
  const auto mf = counts_by_twist("E7+A1", 2, 2);
  EXPECT_EQ(mf.free, (IntVector{2, 1}));
  EXPECT_THROW(counts_by_twist("E7+A1", 0), DomainError);
  EXPECT_THROW(counts_by_twist("A9", 2), DomainError);
  const auto j = to_json(d8);
  EXPECT_EQ(j["realizable_counts"], nlohmann::json::array({6, 9}));
  EXPECT_EQ(j["twists"][1]["extension"], nlohmann::json::array({4}));
}

TEST(Ext, ClassSizes) {
  EXPECT_EQ(ext_classes(FiniteAbelianGroup(IntVector{2}), 2).size(), 2);
  EXPECT_EQ(ext_classes(FiniteAbelianGroup(IntVector{3}), 2).size(), 1);
  EXPECT_EQ(ext_classes(FiniteAbelianGroup(IntVector{2, 4}), 2).size(), 4);
  EXPECT_EQ(ext_classes(FiniteAbelianGroup(IntVector{6}), 6).invariants, IntVector{6});
}

TEST(ModelJson, Fields) {
  const auto model = reconstruct_neg2_curves(fixture_sequence("d8_case2"));
  const auto curves = enumerate_minus_one_curves(model);
  const auto j = model_to_json(model, &curves);
  EXPECT_EQ(j["configuration"], "D8");
  EXPECT_EQ(j["index"], 2);
  EXPECT_EQ(j["neg2_curves"].size(), 9u);
  EXPECT_EQ(j["minus_one_curves"].size(), 6u);
  EXPECT_EQ(j["grading"].get<GradingMatrix>(), model.q_matrix);
  EXPECT_EQ(j["delta"].get<ClassGroupElement>(), model.delta);
  EXPECT_EQ(j["minus_one_curves"][0]["class"].get<DivisorClass>(), curves[0]);
}
