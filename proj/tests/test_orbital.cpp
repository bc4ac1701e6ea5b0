#include <gtest/gtest.h>

#include <algorithm>

#include "hamvt/catalog.hpp"
#include "hamvt/corpus.hpp"
#include "hamvt/coset_action.hpp"
#include "hamvt/error.hpp"
#include "hamvt/orbital.hpp"
#include "support/oracles.hpp"

using namespace hamvt;

TEST(Suborbits, DihedralFive) {
  auto d5 = *fixture("dihedral:5").group;
  auto t = suborbits(d5, 0);
  ASSERT_EQ(t.suborbits.size(), 3u);
  EXPECT_EQ(t.suborbits[0], (std::vector<Point>{0}));
  EXPECT_EQ(t.suborbits[1], (std::vector<Point>{1, 4}));
  EXPECT_EQ(t.suborbits[2], (std::vector<Point>{2, 3}));
  EXPECT_TRUE(t.self_paired(1));
  auto g = orbital_graph(d5, 0, {1});
  EXPECT_EQ(g.graph, catalog("circulant:5:1"));
  EXPECT_TRUE(g.connected);
  EXPECT_FALSE(g.symmetrized);
}

TEST(Suborbits, RegularCyclicPairsInverses) {
  auto z6 = *fixture("cyclic:6").group;
  auto t = suborbits(z6, 0);
  ASSERT_EQ(t.suborbits.size(), 6u);
  EXPECT_EQ(t.pairing[t.index_of(1)], t.index_of(5));
  EXPECT_EQ(t.pairing[t.index_of(3)], t.index_of(3));
  auto g = orbital_graph(z6, t, {t.index_of(1)});
  EXPECT_TRUE(g.symmetrized);
  EXPECT_EQ(g.selection, (std::set<std::size_t>{t.index_of(1), t.index_of(5)}));
  EXPECT_EQ(g.graph, catalog("circulant:6:1"));
}

TEST(Suborbits, MatchOracleAndPairingIsInvolution) {
  for (const char* name : {"dihedral:8", "petersen", "s6_natural", "crown:4", "prism:5", "heawood"}) {
    auto g = *fixture(name).group;
    auto t = suborbits(g, 0);
    auto expected = oracle::stabilizer_orbits(g.degree(), g.generators(), 0);
    auto got = t.suborbits;
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << name;
    for (std::size_t i = 0; i < t.suborbits.size(); ++i) {
      EXPECT_EQ(t.pairing[t.pairing[i]], i);
      EXPECT_EQ(t.suborbits[t.pairing[i]].size(), t.suborbits[i].size());
    }
    for (std::size_t i = 1; i < t.suborbits.size(); ++i) {
      auto key = [&](std::size_t k) { return std::make_pair(t.suborbits[k].size(), t.suborbits[k][0]); };
      EXPECT_LT(key(i - 1), key(i)) << name;
    }
  }
}

TEST(OrbitalGraph, MatchesOracleOnEveryPairedClass) {
  for (const char* name : {"dihedral:8", "petersen", "s6_natural", "prism:5", "coxeter"}) {
    auto g = *fixture(name).group;
    auto t = suborbits(g, 0);
    for (const auto& cls : paired_classes(t)) {
      auto og = orbital_graph(g, t, cls);
      std::vector<std::vector<Point>> sel;
      for (auto i : cls) sel.push_back(t.suborbits[i]);
      EXPECT_EQ(og.graph, oracle::orbital_graph(g.degree(), g.generators(), 0, sel)) << name;
      EXPECT_EQ(og.connected, is_connected(og.graph));
      EXPECT_FALSE(og.symmetrized);
      for (const auto& gen : g.generators()) EXPECT_TRUE(is_automorphism(og.graph, gen));
    }
  }
}

TEST(OrbitalGraph, CatalogGraphsAreOrbitalGraphsOfTheirGroups) {
  // Each of these graphs is a union of orbitals of its automorphism group.
  for (const char* name : {"petersen", "heawood", "coxeter"}) {
    auto f = fixture(name);
    auto t = suborbits(*f.group, 0);
    std::set<std::size_t> sel;
    for (Vertex w : f.graph->neighbors(0)) sel.insert(t.index_of(w));
    EXPECT_EQ(orbital_graph(*f.group, t, sel).graph, *f.graph) << name;
  }
}

TEST(OrbitalGraph, PslCosetSuborbitLengths) {
  auto psl = fixture("psl2_16_gens");
  auto act = CosetAction(*psl.group, psl.subgroup).action();
  auto t = suborbits(act, 0);
  std::vector<std::size_t> lengths;
  for (const auto& s : t.suborbits) lengths.push_back(s.size());
  EXPECT_EQ(lengths, (std::vector<std::size_t>{1, 1, 1, 16, 16, 16}));
  auto og = orbital_graph(act, t, {3});
  EXPECT_EQ(og.graph.order(), 51u);
  EXPECT_EQ(regular_valency(og.graph), std::optional<std::size_t>{16});
}

TEST(OrbitalGraph, Errors) {
  auto d5 = *fixture("dihedral:5").group;
  auto code = [&](const std::set<std::size_t>& s) {
    try {
      orbital_graph(d5, 0, s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::NoneFound;
  };
  EXPECT_EQ(code({}), ErrorCode::EmptySelection);
  EXPECT_EQ(code({0}), ErrorCode::InvalidSelection);
  EXPECT_EQ(code({7}), ErrorCode::InvalidSelection);
  EXPECT_THROW(suborbits(PermGroup(4, {Permutation::from_cycles(4, {{0, 1}})}), 0), Error);
}

TEST(BlockQuotient, DihedralBlocks) {
  auto c12 = catalog("circulant:12:1");
  std::vector<std::vector<Vertex>> cells(4);
  for (Vertex v = 0; v < 12; ++v) cells[v % 4].push_back(v);
  EXPECT_EQ(block_quotient(c12, cells), catalog("circulant:4:1"));
}
