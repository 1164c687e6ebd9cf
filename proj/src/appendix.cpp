// Canonical grading matrices of the 13 toric varieties attached to the
// rank-8 root sublattices of E8, in the appendix column order.

#include <map>
#include <string>

#include "halphen/error.hpp"
#include "halphen/root_data.hpp"

namespace halphen {

namespace {

std::vector<std::vector<std::size_t>> contiguous_blocks(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t next = 0;
  for (std::size_t sz : sizes) {
    std::vector<std::size_t> b;
    for (std::size_t i = 0; i < sz; ++i) b.push_back(next++);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

GradingMatrix make(std::vector<IntVector> free, std::vector<TorsionRow> torsion, std::vector<std::size_t> sizes) {
  return GradingMatrix(std::move(free), std::move(torsion), contiguous_blocks(sizes));
}

const std::map<std::string, GradingMatrix, std::less<>>& table() {
  static const std::map<std::string, GradingMatrix, std::less<>> t = [] {
    std::map<std::string, GradingMatrix, std::less<>> m;
    m.emplace("E8", make({{1, 2, 3, 4, 5, 6, 4, 3, 2}}, {}, {9}));
    m.emplace("D8", make({{1, 1, 1, 1, 2, 2, 2, 2, 2}}, {{2, {0, 0, 1, 1, 0, 0, 0, 1, 1}}}, {9}));
    m.emplace("A8", make({{1, 1, 1, 1, 1, 1, 1, 1, 1}}, {{3, {0, 1, 2, 0, 1, 2, 0, 1, 2}}}, {9}));
    m.emplace("E7+A1", make({{1, 2, 3, 4, 3, 2, 1, 2, 0, 0},
                             {0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
                            {{2, {0, 0, 0, 0, 1, 1, 1, 0, 0, 1}}}, {8, 2}));
    m.emplace("E6+A2", make({{1, 2, 3, 2, 1, 2, 1, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0, 0, 1, 1, 1}},
                            {{3, {0, 0, 0, 1, 2, 2, 1, 0, 1, 2}}}, {7, 3}));
    m.emplace("A7+A1", make({{1, 1, 1, 1, 1, 1, 1, 1, 0, 0},
                             {0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
                            {{4, {0, 1, 2, 3, 0, 1, 2, 3, 0, 2}}}, {8, 2}));
    m.emplace("D5+A3", make({{1, 1, 1, 1, 2, 2, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0, 1, 1, 1, 1}},
                            {{4, {0, 1, 2, 3, 0, 2, 0, 1, 2, 3}}}, {6, 4}));
    m.emplace("2A4", make({{1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
                           {0, 0, 0, 0, 0, 1, 1, 1, 1, 1}},
                          {{5, {0, 1, 2, 3, 4, 0, 1, 2, 3, 4}}}, {5, 5}));
    m.emplace("2D4", make({{1, 1, 1, 1, 2, 0, 0, 0, 0, 0},
                           {0, 0, 0, 0, 0, 1, 1, 1, 1, 2}},
                          {{2, {0, 1, 0, 1, 0, 0, 1, 0, 1, 0}},
                           {2, {0, 0, 1, 1, 0, 0, 0, 1, 1, 0}}}, {5, 5}));
    m.emplace("A5+A2+A1", make({{1, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
                                {0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0},
                                {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
                               {{6, {0, 1, 2, 3, 4, 5, 0, 2, 4, 0, 3}}}, {6, 3, 2}));
    m.emplace("D6+2A1", make({{1, 1, 1, 1, 2, 2, 2, 0, 0, 0, 0},
                              {0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
                              {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
                             {{2, {0, 1, 0, 1, 0, 0, 1, 0, 1, 0, 0}},
                              {2, {0, 0, 1, 1, 0, 0, 0, 0, 1, 0, 1}}}, {7, 2, 2}));
    m.emplace("2A3+2A1", make({{1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                               {0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0},
                               {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1}},
                              {{4, {0, 1, 2, 3, 0, 1, 2, 3, 0, 2, 0, 0}},
                               {2, {0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1}}}, {4, 4, 2, 2}));
    // column 4 lies in the second block only
    m.emplace("4A2", make({{1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                           {0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0},
                           {0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0},
                           {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1}},
                          {{3, {0, 1, 2, 0, 0, 0, 0, 1, 2, 0, 1, 2}},
                           {3, {0, 0, 0, 0, 1, 2, 0, 1, 2, 0, 2, 1}}}, {3, 3, 3, 3}));
    return m;
  }();
  return t;
}

}  // namespace

const std::vector<std::string>& appendix_type_names() {
  static const std::vector<std::string> names{"E8",    "D8",    "A8",  "E7+A1",    "E6+A2",  "A7+A1",  "D5+A3",
                                              "2A4",   "2D4",   "A5+A2+A1", "D6+2A1", "2A3+2A1", "4A2"};
  return names;
}

const std::vector<std::string>& table_type_names() {
  static const std::vector<std::string> names{"E8",  "D8",       "E7+A1",  "A8",  "E6+A2",   "A7+A1", "D5+A3",
                                              "2A4", "A5+A2+A1", "D6+2A1", "2D4", "2A3+2A1", "4A2"};
  return names;
}

const GradingMatrix& appendix_grading(std::string_view type_name) {
  const auto& t = table();
  auto it = t.find(type_name);
  if (it == t.end()) throw DomainError("unknown lattice type '" + std::string(type_name) + "'");
  return it->second;
}

}  // namespace halphen
