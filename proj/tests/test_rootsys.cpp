#include <gtest/gtest.h>

#include <set>

#include "gsp/rootsys.hpp"
#include "oracles.hpp"

namespace {

using gsp::IndexSet;

struct TypeCase {
  const char* spec;
  std::uint64_t order;
  int positive;
};

class RootSystemTypes : public ::testing::TestWithParam<TypeCase> {};

TEST_P(RootSystemTypes, RootCountAndGroupOrder) {
  const auto& c = GetParam();
  const auto rs = gsp::build_root_system(c.spec);
  EXPECT_EQ(rs.positive_count(), c.positive);
  EXPECT_EQ(rs.root_count(), 2 * c.positive);
  EXPECT_EQ(gsp::weyl_group_order(gsp::parse_type_spec(c.spec)), c.order);
}

TEST_P(RootSystemTypes, RootsMatchMatrixOrbit) {
  const auto rs = gsp::build_root_system(GetParam().spec);
  const gsp::oracle::MatrixGroup G(rs.cartan(), false);
  std::set<gsp::oracle::Vec> lib(rs.roots().begin(), rs.roots().end());
  std::set<gsp::oracle::Vec> ref(G.positive_roots.begin(), G.positive_roots.end());
  for (const auto& r : G.positive_roots) {
    gsp::oracle::Vec n = r;
    for (int& x : n) x = -x;
    ref.insert(n);
  }
  EXPECT_EQ(lib, ref);
  EXPECT_EQ(G.size(), GetParam().order);
}

TEST_P(RootSystemTypes, TableLayout) {
  const auto rs = gsp::build_root_system(GetParam().spec);
  const int n = rs.rank();
  for (int i = 0; i < n; ++i) {
    EXPECT_TRUE(rs.is_simple(i));
    EXPECT_EQ(rs.root(i)[i], 1);
  }
  int prev_height = 0;
  for (int b = 0; b < rs.positive_count(); ++b) {
    int h = 0;
    for (int x : rs.root(b)) h += x;
    EXPECT_GE(h, prev_height);
    prev_height = h;
    const auto neg = rs.root(rs.negate(b));
    for (int i = 0; i < n; ++i) EXPECT_EQ(neg[i], -rs.root(b)[i]);
  }
}

TEST_P(RootSystemTypes, ReflectionIsInvolutionAndSendsSimpleToNegative) {
  const auto rs = gsp::build_root_system(GetParam().spec);
  for (int i = 0; i < rs.rank(); ++i) {
    EXPECT_EQ(rs.reflect(i, i), rs.negate(i));
    for (int b = 0; b < rs.root_count(); ++b) {
      EXPECT_EQ(rs.reflect(i, rs.reflect(i, b)), b);
      // s_i permutes the positive roots other than alpha_i.
      if (b != i && rs.is_positive(b)) EXPECT_TRUE(rs.is_positive(rs.reflect(i, b)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Types, RootSystemTypes,
                         ::testing::Values(TypeCase{"A1", 2, 1}, TypeCase{"A2", 6, 3}, TypeCase{"A3", 24, 6},
                                           TypeCase{"B2", 8, 4}, TypeCase{"B3", 48, 9}, TypeCase{"C3", 48, 9},
                                           TypeCase{"D4", 192, 12}, TypeCase{"G2", 12, 6},
                                           TypeCase{"F4", 1152, 24}, TypeCase{"E6", 51840, 36}),
                         [](const auto& info) { return std::string(info.param.spec); });

TEST(Cartan, BourbakiConventions) {
  // a[i][j] = <alpha_j, alpha_i^vee>. Short root last in B, long root last
  // in C, alpha_1 short in G2.
  const auto b3 = gsp::cartan_matrix(gsp::parse_type_spec("B3"));
  EXPECT_EQ(b3[1][2], -1);
  EXPECT_EQ(b3[2][1], -2);
  const auto c3 = gsp::cartan_matrix(gsp::parse_type_spec("C3"));
  EXPECT_EQ(c3[1][2], -2);
  EXPECT_EQ(c3[2][1], -1);
  const auto b2 = gsp::cartan_matrix(gsp::parse_type_spec("B2"));
  EXPECT_EQ(b2[0][1], -1);
  EXPECT_EQ(b2[1][0], -2);
  const auto g2 = gsp::cartan_matrix(gsp::parse_type_spec("G2"));
  EXPECT_EQ(g2[0][1], -3);
  EXPECT_EQ(g2[1][0], -1);
  const auto d4 = gsp::cartan_matrix(gsp::parse_type_spec("D4"));
  EXPECT_EQ(d4[1][0], -1);
  EXPECT_EQ(d4[1][2], -1);
  EXPECT_EQ(d4[1][3], -1);
  EXPECT_EQ(d4[2][3], 0);
}

TEST(Cartan, HighestRoots) {
  auto highest = [](const char* spec) {
    const auto rs = gsp::build_root_system(spec);
    return rs.root(rs.positive_count() - 1);
  };
  EXPECT_EQ(highest("G2"), (gsp::RootVector{3, 2}));
  EXPECT_EQ(highest("B3"), (gsp::RootVector{1, 2, 2}));
  EXPECT_EQ(highest("D4"), (gsp::RootVector{1, 2, 1, 1}));
  EXPECT_EQ(highest("F4"), (gsp::RootVector{2, 3, 4, 2}));
}

TEST(TypeSpecParsing, RejectsInvalidSpecs) {
  for (const char* bad : {"", "A", "A0", "B1", "C1", "D3", "E5", "E9", "F3", "G3", "C2", "H3", "a2", "A2x", "A-1"})
    EXPECT_THROW(gsp::parse_type_spec(bad), gsp::InvalidArgument) << bad;
  EXPECT_EQ(gsp::parse_type_spec("E8").label(), "E8");
}

TEST(TypeSpecParsing, GuardRejectsLargeGroupsBeforeWork) {
  EXPECT_THROW(gsp::build_root_system("E8"), gsp::GuardExceeded);
  EXPECT_THROW(gsp::build_root_system("A5", gsp::BuildOptions{100}), gsp::GuardExceeded);
  EXPECT_NO_THROW(gsp::build_root_system("A5", gsp::BuildOptions{720}));
}

TEST(RootLookup, FindAndReflectVector) {
  const auto rs = gsp::build_root_system("A2");
  EXPECT_EQ(rs.find({1, 1}), 2);
  EXPECT_EQ(rs.find({2, 1}), -1);
  EXPECT_EQ(rs.reflect(0, gsp::RootVector{0, 1}), (gsp::RootVector{1, 1}));
  EXPECT_THROW(rs.reflect(0, gsp::RootVector{2, 1}), gsp::InvalidArgument);
}

TEST(Automorphism, ParseAndValidate) {
  const auto a3 = gsp::build_root_system("A3");
  const auto flip = gsp::parse_automorphism(a3, "1:3,3:1");
  EXPECT_EQ(flip.order(), 2);
  EXPECT_EQ(flip.to_string(), "1:3,2:2,3:1");
  EXPECT_EQ(flip(IndexSet::from_indices({0})), IndexSet::from_indices({2}));
  EXPECT_TRUE(gsp::parse_automorphism(a3, "id").is_identity());
  EXPECT_THROW(gsp::parse_automorphism(a3, "1:2,2:1"), gsp::InvalidArgument);
  EXPECT_THROW(gsp::parse_automorphism(a3, "1:3"), gsp::InvalidArgument);
  EXPECT_THROW(gsp::parse_automorphism(a3, "1:4,4:1"), gsp::InvalidArgument);
  EXPECT_THROW(gsp::parse_automorphism(a3, "x"), gsp::InvalidArgument);

  const auto d4 = gsp::build_root_system("D4");
  const auto tri = gsp::parse_automorphism(d4, "1:3,3:4,4:1");
  EXPECT_EQ(tri.order(), 3);
  EXPECT_EQ(tri.orbits().size(), 2u);
  EXPECT_EQ(gsp::parse_automorphism(d4, "3:4,4:3").order(), 2);

  const auto b2 = gsp::build_root_system("B2");
  EXPECT_THROW(gsp::parse_automorphism(b2, "1:2,2:1"), gsp::InvalidArgument);
}

TEST(Automorphism, PreservesRoots) {
  const auto d4 = gsp::build_root_system("D4");
  const auto tri = gsp::parse_automorphism(d4, "1:3,3:4,4:1");
  for (const auto& r : d4.roots()) EXPECT_GE(d4.find(tri(r)), 0);
}

TEST(Weights, Predicates) {
  const auto a3 = gsp::build_root_system("A3");
  const auto flip = gsp::parse_automorphism(a3, "1:3,3:1");
  const auto p = gsp::weight_predicates(a3, flip, gsp::parse_weight("1,0,1"));
  EXPECT_TRUE(p.dominant);
  EXPECT_FALSE(p.regular);
  EXPECT_TRUE(p.sigma_stable);
  EXPECT_EQ(p.support, IndexSet::from_indices({0, 2}));
  EXPECT_FALSE(gsp::weight_predicates(a3, flip, gsp::parse_weight("1,0,2")).sigma_stable);
  EXPECT_FALSE(gsp::weight_predicates(a3, flip, gsp::parse_weight("-1,0,-1")).dominant);
  EXPECT_THROW(gsp::weight_predicates(a3, flip, gsp::parse_weight("1,1")), gsp::InvalidArgument);
  EXPECT_THROW(gsp::parse_weight("1,,2"), gsp::InvalidArgument);
  EXPECT_EQ(gsp::parse_weight("2,1").to_string(), "2,1");
}

TEST(IndexSets, Formatting) {
  EXPECT_EQ(IndexSet().to_string(), "{}");
  EXPECT_EQ(IndexSet::from_indices({0, 2}).to_string(), "{1,3}");
  EXPECT_EQ(IndexSet::full(3).size(), 3);
}

}  // namespace
