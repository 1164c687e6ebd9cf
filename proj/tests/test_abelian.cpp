#include <gtest/gtest.h>

#include "halphen/abelian.hpp"
#include "halphen/error.hpp"

using namespace halphen;

TEST(FiniteAbelianGroup, Arithmetic) {
  const FiniteAbelianGroup g(IntVector{2, 4});
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.add({1, 3}, {1, 2}), (GroupElement{0, 1}));
  EXPECT_EQ(g.scale({1, 3}, -1), (GroupElement{1, 1}));
  EXPECT_EQ(g.element_order({1, 2}), 2);
  EXPECT_EQ(g.element_order({0, 1}), 4);
  EXPECT_TRUE(g.is_zero(g.reduce({2, 8})));
  EXPECT_EQ(g.elements().size(), 8u);
  EXPECT_THROW(g.add({1}, {1, 1}), ShapeError);
  EXPECT_THROW(FiniteAbelianGroup(IntVector{0}), DomainError);
}

TEST(FiniteAbelianGroup, InvariantFactors) {
  EXPECT_EQ(FiniteAbelianGroup(IntVector{2, 3}).invariant_factors(), IntVector{6});
  EXPECT_EQ(FiniteAbelianGroup(IntVector{4, 2}).invariant_factors(), (IntVector{2, 4}));
  EXPECT_EQ(FiniteAbelianGroup(IntVector{1}).invariant_factors(), IntVector{});
  EXPECT_EQ(normalize_invariants({6, 4}), (IntVector{2, 12}));
}

TEST(ResidueTuples, OrderAndIndex) {
  const IntVector mod{2, 3};
  const auto all = residue_tuples(mod);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_EQ(all[1], (GroupElement{0, 1}));
  EXPECT_EQ(all[3], (GroupElement{1, 0}));
  for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(residue_index(all[i], mod), i);
  EXPECT_EQ(residue_tuples({}).size(), 1u);
}

TEST(Formatting, Torsion) {
  EXPECT_EQ(format_torsion({}), "0");
  EXPECT_EQ(format_torsion({2, 4}), "Z/2 + Z/4");
}

TEST(Ext, GcdFactors) {
  EXPECT_EQ(ext_invariants({2}, 2), IntVector{2});
  EXPECT_EQ(ext_invariants({3}, 2), IntVector{});
  EXPECT_EQ(ext_invariants({2, 4}, 2), (IntVector{2, 2}));
  EXPECT_EQ(ext_invariants({6}, 4), IntVector{2});
  EXPECT_THROW(ext_invariants({2}, 0), DomainError);
}
