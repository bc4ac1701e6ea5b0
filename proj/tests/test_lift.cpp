#include <gtest/gtest.h>

#include <random>

#include "hamvt/catalog.hpp"
#include "hamvt/corpus.hpp"
#include "hamvt/error.hpp"
#include "hamvt/lift.hpp"
#include "hamvt/quotient.hpp"
#include "hamvt/semiregular.hpp"
#include "support/oracles.hpp"

using namespace hamvt;

namespace {

Permutation shift(std::uint32_t n, std::uint32_t by) {
  std::vector<Point> img(n);
  for (Point x = 0; x < n; ++x) img[x] = (x + by) % n;
  return Permutation(img);
}

std::vector<Point> reps_of(const SemiregularDecomposition& dec, const std::vector<std::size_t>& cycle) {
  std::vector<Point> out;
  for (auto c : cycle) out.push_back(dec.representative(c));
  return out;
}

}  // namespace

TEST(Decompose, Examples) {
  auto dec = decompose(catalog("circulant:15:1"), shift(15, 3), 5);
  EXPECT_EQ(dec.m(), 3u);
  for (const auto& cell : dec.cells) EXPECT_EQ(cell.size(), 5u);
  EXPECT_EQ(dec.cells[1], (std::vector<Vertex>{1, 4, 7, 10, 13}));
  for (Vertex v = 0; v < 15; ++v) EXPECT_EQ(dec.at(dec.cell_of[v], dec.exponent_of[v]), v);

  auto pet = fixture("petersen");
  auto rho = find_semiregular(*pet.group, 5);
  ASSERT_TRUE(rho);
  EXPECT_EQ(decompose(*pet.graph, *rho, 5).m(), 2u);

  try {
    decompose(catalog("circulant:6:1"), shift(6, 1), 5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSemiregular);
  }
  try {
    decompose(catalog("circulant:6:1"), Permutation::from_cycles(6, {{0, 1}, {2, 3}, {4, 5}}), 2);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAutomorphism);
  }
}

TEST(Voltages, SizesMatchQuotientAndReverseNegates) {
  for (auto [name, m] : {std::pair{"circulant:15:1,4", 3u}, std::pair{"circulant:20:1,3,8", 4u}, std::pair{"coxeter", 4u}}) {
    Graph x = catalog(name);
    Permutation rho = std::string(name) == "coxeter" ? Permutation(catalog_entry(name).automorphisms[0])
                                                      : shift(static_cast<std::uint32_t>(x.order()), m);
    const std::uint32_t p = static_cast<std::uint32_t>(x.order() / m);
    auto dec = decompose(x, rho, p);
    VoltageAssignment volt(x, dec);
    auto q = quotient_multigraph(x, dec.cells);
    for (std::size_t a = 0; a < dec.m(); ++a) {
      for (std::size_t b = 0; b < dec.m(); ++b) {
        const std::size_t expect = a == b ? q.d(a) : q.d(a, b);
        EXPECT_EQ(volt.voltages(a, b).size(), expect) << name;
        for (auto j : volt.voltages(a, b)) EXPECT_TRUE(volt.allows(b, a, (p - j) % p)) << name;
      }
    }
  }
}

TEST(CycleVoltage, Examples) {
  Graph c15 = catalog("circulant:15:1");
  auto dec = decompose(c15, shift(15, 3), 5);
  VoltageAssignment volt(c15, dec);
  // 0 -> 1 -> 2 -> 0+3: voltages 0, 0, 1.
  EXPECT_EQ(cycle_voltage(dec, volt, {0, 1, 2}, {0, 0, 1}), 1u);
  auto walk = lift_walk(dec, {0, 1, 2}, {0, 0, 1});
  EXPECT_TRUE(verify_hamilton(c15, {CertificateKind::cycle, walk}));
  EXPECT_THROW(cycle_voltage(dec, volt, {0, 1, 2}, {1, 0, 1}), Error);
  EXPECT_THROW(cycle_voltage(dec, volt, {0, 1, 2}, {0, 0}), Error);

  Graph prism = catalog("prism:3");
  Permutation swap = catalog_entry("prism:3").automorphisms[1];
  auto pd = decompose(prism, swap, 2);
  VoltageAssignment pv(prism, pd);
  EXPECT_EQ(cycle_voltage(pd, pv, {0, 1, 2}, {0, 0, 0}), 0u);
  auto lens = oracle::cycle_lengths(6, oracle::lifted_edges(swap, 2, reps_of(pd, {0, 1, 2}), {0, 0, 0}));
  EXPECT_EQ(lens, (std::vector<std::size_t>{3, 3}));
}

TEST(LiftHamilton, Examples) {
  auto c15 = lift_hamilton(catalog("circulant:15:1"), shift(15, 3), 5);
  ASSERT_TRUE(c15);
  EXPECT_TRUE(verify_hamilton(catalog("circulant:15:1"), *c15));

  auto pet = fixture("petersen");
  auto rho = find_semiregular(*pet.group, 5);
  EXPECT_FALSE(lift_hamilton(*pet.graph, *rho, 5));

  Graph c10 = catalog("circulant:10:1");
  auto dec = decompose(c10, shift(10, 2), 5);
  VoltageAssignment volt(c10, dec);
  EXPECT_EQ(volt.voltages(0, 1), (std::vector<std::uint32_t>{0, 4}));
  auto c10_cycle = lift_hamilton(c10, shift(10, 2), 5);
  ASSERT_TRUE(c10_cycle);
  EXPECT_TRUE(verify_hamilton(c10, *c10_cycle));

  // m = 1: a cycle is its own quotient loop.
  auto c7 = lift_hamilton(catalog("circulant:7:2"), shift(7, 1), 7);
  ASSERT_TRUE(c7);
  EXPECT_TRUE(verify_hamilton(catalog("circulant:7:2"), *c7));
}

TEST(LiftHamilton, DichotomyOnRandomCirculants) {
  std::mt19937_64 rng(7);
  const std::uint32_t primes[] = {2, 3, 5, 7};
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t p = primes[trial % 4];
    const std::uint32_t m = 3 + trial % 3;
    const std::uint32_t n = m * p;
    std::vector<std::uint32_t> jumps{1};
    for (std::uint32_t j = 2; j <= n / 2; ++j) {
      if (rng() % 3 == 0) jumps.push_back(j);
    }
    std::string name = "circulant:" + std::to_string(n) + ":";
    for (std::size_t i = 0; i < jumps.size(); ++i) name += (i ? "," : "") + std::to_string(jumps[i]);
    Graph x = catalog(name);
    Permutation rho = shift(n, m);
    auto dec = decompose(x, rho, p);
    VoltageAssignment volt(x, dec);
    std::vector<Edge> qe;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        if (!volt.voltages(a, b).empty()) qe.emplace_back(a, b);
      }
    }
    Graph quotient = Graph::from_edges(m, qe);
    for_each_hamilton_cycle(quotient, [&](const std::vector<Vertex>& qc) {
      std::vector<std::size_t> cycle(qc.begin(), qc.end());
      std::vector<std::uint32_t> choice(cycle.size());
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& v = volt.voltages(cycle[i], cycle[(i + 1) % cycle.size()]);
        choice[i] = v[rng() % v.size()];
      }
      const auto net = cycle_voltage(dec, volt, cycle, choice);
      auto lens = oracle::cycle_lengths(n, oracle::lifted_edges(rho, p, reps_of(dec, cycle), choice));
      if (net != 0) {
        EXPECT_EQ(lens, (std::vector<std::size_t>{cycle.size() * p})) << name;
        EXPECT_EQ(lift_walk(dec, cycle, choice).size(), cycle.size() * p);
      } else {
        EXPECT_EQ(lens, std::vector<std::size_t>(p, cycle.size())) << name;
      }
      ++checked;
      return checked % 50 != 0;
    });
  }
  EXPECT_GT(checked, 60);
}
