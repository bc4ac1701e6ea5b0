#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hamvt/catalog.hpp"
#include "hamvt/corpus.hpp"
#include "hamvt/hamilton.hpp"
#include "support/oracles.hpp"

using namespace hamvt;

namespace {

Graph random_graph(std::mt19937_64& rng, std::uint32_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, e);
}

SearchOptions no_dp() {
  SearchOptions o;
  o.allow_dp = false;
  return o;
}

}  // namespace

TEST(Verify, Certificates) {
  Graph c6 = catalog("circulant:6:1");
  EXPECT_TRUE(verify_hamilton(c6, {CertificateKind::cycle, {0, 1, 2, 3, 4, 5}}));
  EXPECT_TRUE(verify_hamilton(c6, {CertificateKind::path, {2, 1, 0, 5, 4, 3}}));
  EXPECT_FALSE(verify_hamilton(c6, {CertificateKind::cycle, {0, 1, 2, 3, 4, 4}}));
  EXPECT_FALSE(verify_hamilton(c6, {CertificateKind::cycle, {0, 2, 1, 3, 4, 5}}));
  EXPECT_FALSE(verify_hamilton(c6, {CertificateKind::cycle, {0, 1, 2, 3, 4}}));
  EXPECT_FALSE(verify_hamilton(c6, {CertificateKind::cycle, {0, 1, 2, 3, 4, 9}}));
}

TEST(Solver, SmallExamples) {
  for (bool dp : {true, false}) {
    SearchOptions o;
    o.allow_dp = dp;
    auto pet = find_hamilton_cycle(catalog("petersen"), o);
    EXPECT_EQ(pet.status, SearchStatus::none);
    auto c5 = find_hamilton_cycle(catalog("circulant:5:1"), o);
    ASSERT_EQ(c5.status, SearchStatus::found);
    EXPECT_TRUE(verify_hamilton(catalog("circulant:5:1"), *c5.certificate));
    auto path = find_hamilton_path(catalog("petersen"), o);
    ASSERT_EQ(path.status, SearchStatus::found);
    EXPECT_TRUE(verify_hamilton(catalog("petersen"), *path.certificate));
    EXPECT_EQ(find_hamilton_path(catalog("circulant:6:2"), o).status, SearchStatus::none);  // 2K_3
  }
  EXPECT_EQ(find_hamilton_cycle(catalog("truncated_petersen")).status, SearchStatus::none);
  auto tp = find_hamilton_path(catalog("truncated_petersen"));
  ASSERT_EQ(tp.status, SearchStatus::found);
  EXPECT_TRUE(verify_hamilton(catalog("truncated_petersen"), *tp.certificate));
}

TEST(Solver, BudgetExhaustionIsUnknown) {
  SearchOptions o = no_dp();
  o.budget = 10;
  EXPECT_EQ(find_hamilton_cycle(catalog("coxeter"), o).status, SearchStatus::unknown);
}

TEST(Solver, DeterministicCertificates) {
  auto a = find_hamilton_cycle(catalog("heawood"));
  auto b = find_hamilton_cycle(catalog("heawood"));
  ASSERT_TRUE(a.certificate && b.certificate);
  EXPECT_EQ(a.certificate->sequence, b.certificate->sequence);
}

TEST(Solver, MatchesPermutationOracleOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t n = 1 + trial % 9;
    Graph x = random_graph(rng, n, 0.25 + 0.5 * (trial % 7) / 6.0);
    const bool cyc = oracle::has_hamilton_cycle(x);
    const bool path = oracle::has_hamilton_path(x);
    for (bool dp : {true, false}) {
      SearchOptions o;
      o.allow_dp = dp;
      auto rc = find_hamilton_cycle(x, o);
      auto rp = find_hamilton_path(x, o);
      ASSERT_NE(rc.status, SearchStatus::unknown);
      EXPECT_EQ(rc.status == SearchStatus::found, cyc) << "trial " << trial << " dp " << dp;
      EXPECT_EQ(rp.status == SearchStatus::found, path) << "trial " << trial << " dp " << dp;
      if (rc.certificate) EXPECT_TRUE(verify_hamilton(x, *rc.certificate));
      if (rp.certificate) EXPECT_TRUE(verify_hamilton(x, *rp.certificate));
    }
  }
}

TEST(Solver, EnumerationCountsEachCycleOnce) {
  auto count = [](const Graph& x) {
    std::size_t n = 0;
    std::set<std::vector<Vertex>> seen;
    for_each_hamilton_cycle(x, [&](const std::vector<Vertex>& c) {
      EXPECT_TRUE(verify_hamilton(x, {CertificateKind::cycle, c}));
      seen.insert(c);
      ++n;
      return true;
    });
    EXPECT_EQ(seen.size(), n);
    return n;
  };
  EXPECT_EQ(count(catalog("complete:5")), 12u);
  EXPECT_EQ(count(catalog("complete:6")), 60u);
  EXPECT_EQ(count(catalog("complete_bipartite:3:3")), 6u);
  EXPECT_EQ(count(catalog("petersen")), 0u);
  EXPECT_EQ(count(catalog("circulant:7:1")), 1u);
}

TEST(Jackson, Examples) {
  EXPECT_TRUE(jackson_condition(catalog("complete:5")));
  EXPECT_FALSE(jackson_condition(catalog("petersen")));
  std::vector<Edge> p4{{0, 1}, {1, 2}, {2, 3}};
  EXPECT_FALSE(jackson_condition(Graph::from_edges(4, p4)));
  EXPECT_TRUE(jackson_condition(catalog("complete_bipartite:3:3")));
  EXPECT_TRUE(jackson_condition(catalog("crown:5")));
}
