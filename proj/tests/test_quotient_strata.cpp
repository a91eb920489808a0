#include <gtest/gtest.h>

#include <set>

#include "gsp/quotient_strata.hpp"
#include "oracles.hpp"

namespace {

using gsp::CoxeterCone;
using gsp::IndexSet;

gsp::PieceSet make(const char* type, const char* sigma = "id") {
  auto rs = gsp::build_root_system(type);
  const auto s = gsp::parse_automorphism(rs, sigma);
  return gsp::PieceSet(gsp::generate_group(std::move(rs)), s);
}

class Strata : public ::testing::TestWithParam<const char*> {};

TEST_P(Strata, OrbitsAreFaceTypes) {
  const auto all = make(GetParam());
  const auto& W = all.group();
  const auto cones = gsp::enumerate_cones(W);
  EXPECT_EQ(cones.size(), all.size());
  const auto orbits = gsp::orbit_partition(cones);
  EXPECT_EQ(orbits.size(), std::size_t{1} << W.rank());
  std::size_t covered = 0;
  for (const auto& [J, orbit] : orbits) {
    EXPECT_EQ(orbit.size(), W.minimal_coset_reps(J).size());
    for (const CoxeterCone& c : orbit) EXPECT_EQ(c.J, J);
    covered += orbit.size();
  }
  EXPECT_EQ(covered, cones.size());
}

TEST_P(Strata, ActionLaws) {
  const auto all = make(GetParam());
  const auto& W = all.group();
  const auto els = W.elements();
  const std::size_t step = std::max<std::size_t>(1, els.size() / 16);
  for (const CoxeterCone& c : gsp::enumerate_cones(W)) {
    EXPECT_EQ(gsp::act(W.identity(), c), c);
    for (std::size_t a = 0; a < els.size(); a += step)
      for (std::size_t b = 0; b < els.size(); b += step)
        EXPECT_EQ(gsp::act(els[a], gsp::act(els[b], c)), gsp::act(els[a] * els[b], c));
  }
}

TEST_P(Strata, MatchSemistablePieces) {
  const auto all = make(GetParam());
  const auto strata = gsp::quotient_strata(all);
  EXPECT_EQ(strata.size(), std::size_t{1} << all.group().rank());
  for (const auto& s : strata) {
    EXPECT_EQ(s.matched_piece_id, gsp::piece_id(s.J, all.group().identity()));
    EXPECT_TRUE(all.find(s.matched_piece_id));
  }
}

INSTANTIATE_TEST_SUITE_P(Types, Strata, ::testing::Values("A1", "A2", "A3", "B2", "G2", "D4"));

TEST(Strata, ConesAreChamberFaces) {
  // A cone (J, rep) is the face rep * C_J; the cones of one face type are in
  // bijection with the W-translates of a fixed face, whose stabilizer is W_J.
  const auto all = make("B2");
  const auto& W = all.group();
  const gsp::oracle::MatrixGroup G(W.root_system().cartan(), false);
  for (std::uint32_t m = 0; m < 4; ++m) {
    const IndexSet J(m);
    std::set<std::set<gsp::oracle::Matrix>> cosets;
    for (gsp::Element v : W.elements()) {
      std::set<gsp::oracle::Matrix> coset;
      for (gsp::Element u : W.parabolic_elements(J)) coset.insert(G.of(v * u));
      cosets.insert(coset);
    }
    EXPECT_EQ(cosets.size(), W.minimal_coset_reps(J).size());
  }
}

TEST(Strata, A1Example) {
  const auto a1 = make("A1");
  const auto cones = gsp::enumerate_cones(a1.group());
  std::vector<std::string> names;
  for (const auto& c : cones) names.push_back(c.to_string());
  EXPECT_EQ(names, (std::vector<std::string>{"({},e)", "({},s1)", "({1},e)"}));
  const auto orbits = gsp::orbit_partition(cones);
  ASSERT_EQ(orbits.size(), 2u);
  EXPECT_EQ(orbits.at(IndexSet()).size(), 2u);
  const auto strata = gsp::quotient_strata(a1);
  ASSERT_EQ(strata.size(), 2u);
  EXPECT_EQ(strata[0].matched_piece_id, "J={};w=e");
  EXPECT_EQ(strata[1].matched_piece_id, "J={1};w=e");
  EXPECT_EQ(gsp::enumerate_cones(make("A2").group()).size(), 13u);
}

TEST(Strata, RejectsTwistedContext) {
  EXPECT_THROW(gsp::quotient_strata(make("A2", "1:2,2:1")), gsp::InvalidArgument);
}

TEST(Strata, PartitionDetectsForeignCones) {
  const auto a2 = make("A2");
  auto cones = gsp::enumerate_cones(a2.group());
  cones.erase(cones.begin() + 1);
  EXPECT_THROW(gsp::orbit_partition(cones), gsp::ConsistencyError);
}

TEST(Strata, ActRejectsOtherGroup) {
  const auto a = make("A2");
  const auto b = make("A2");
  const auto cones = gsp::enumerate_cones(a.group());
  EXPECT_THROW(gsp::act(b.group().identity(), cones.front()), gsp::InvalidArgument);
}

}  // namespace
