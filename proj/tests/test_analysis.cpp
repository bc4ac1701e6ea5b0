#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "hamvt/analysis.hpp"
#include "hamvt/catalog.hpp"
#include "hamvt/corpus.hpp"
#include "hamvt/json_io.hpp"
#include "support/error_code.hpp"
#include "support/oracles.hpp"

using namespace hamvt;

namespace {

std::optional<PermGroup> group_of(const CatalogEntry& e) { return PermGroup(e.graph.order(), e.automorphisms); }

}  // namespace

TEST(Analyze, Petersen) {
  auto e = catalog_entry("petersen");
  auto r = analyze(e.graph, group_of(e));
  EXPECT_EQ(r.result, Verdict::no_hamilton_cycle);
  EXPECT_FALSE(r.exception_flag);
  EXPECT_TRUE(r.vertex_transitive);
  EXPECT_EQ(r.group_order, 120u);
  EXPECT_FALSE(r.certificate);
}

TEST(Analyze, TruncatedPetersenIsFlagged) {
  auto e = catalog_entry("truncated_petersen");
  auto r = analyze(e.graph, group_of(e));
  EXPECT_EQ(r.result, Verdict::no_hamilton_cycle);
  EXPECT_TRUE(r.exception_flag);
  EXPECT_TRUE(is_truncated_petersen(e.graph));
  EXPECT_FALSE(is_truncated_petersen(catalog("truncated_coxeter")));
  EXPECT_FALSE(is_truncated_petersen(catalog("circulant:30:1,6")));
  // Order 30 = 6 * 5: block cases are labelled.
  EXPECT_FALSE(r.case_labels.empty());
}

TEST(Analyze, CertificatesVerify) {
  for (const char* name : {"circulant:30:1,6", "heawood", "crown:5", "prism:6", "complete:7", "coxeter"}) {
    auto e = catalog_entry(name);
    auto r = analyze(e.graph, group_of(e));
    if (std::string(name) == "coxeter") {
      EXPECT_EQ(r.result, Verdict::no_hamilton_cycle);
      continue;
    }
    ASSERT_EQ(r.result, Verdict::certificate) << name;
    EXPECT_TRUE(verify_hamilton(e.graph, *r.certificate)) << name;
    EXPECT_FALSE(r.trace.empty());
  }
}

TEST(Analyze, StructuralObstructions) {
  auto r = analyze(catalog("circulant:10:2"), std::nullopt);
  EXPECT_EQ(r.result, Verdict::no_hamilton_cycle);
  EXPECT_FALSE(r.connected);
  const std::vector<Edge> star = {{0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(analyze(Graph::from_edges(4, star), std::nullopt).result, Verdict::no_hamilton_cycle);
  EXPECT_EQ(analyze(Graph(2), std::nullopt).result, Verdict::no_hamilton_cycle);
}

TEST(Analyze, MatchesOracleWithoutGroup) {
  for (const auto& e : corpus_graphs()) {
    if (e.graph.order() > 10) continue;
    auto r = analyze(e.graph, std::nullopt);
    ASSERT_NE(r.result, Verdict::unknown) << e.name;
    EXPECT_EQ(r.result == Verdict::certificate, oracle::has_hamilton_cycle(e.graph)) << e.name;
  }
}

TEST(Analyze, GroupErrors) {
  auto x = catalog("petersen");
  EXPECT_EQ(code_of([&] { analyze(x, PermGroup::trivial(9)); }), ErrorCode::GroupDegreeMismatch);
  PermGroup bad(10, {Permutation::from_cycles(10, {{0, 1}})});
  EXPECT_EQ(code_of([&] { analyze(x, bad); }), ErrorCode::GroupNotAutomorphisms);
}

TEST(Analyze, ReportsAreDeterministic) {
  for (const char* name : {"truncated_petersen", "circulant:30:1,6", "crown:7"}) {
    auto e = catalog_entry(name);
    EXPECT_EQ(report_to_json(analyze(e.graph, group_of(e))), report_to_json(analyze(e.graph, group_of(e)))) << name;
  }
}

TEST(Analyze, BudgetExhaustionIsUnknown) {
  AnalyzeOptions tiny;
  tiny.budget = 3;
  auto r = analyze(catalog("coxeter"), std::nullopt, tiny);
  EXPECT_EQ(r.result, Verdict::unknown);
}

TEST(Json, RoundTrips) {
  auto x = catalog("heawood");
  EXPECT_EQ(graph_from_json(graph_to_json(x)), x);
  auto g = Permutation::from_cycles(6, {{0, 3, 5}, {1, 2}});
  EXPECT_EQ(permutation_from_json(permutation_to_json(g)), g);
  PermGroup grp(6, {g, Permutation::from_cycles(6, {{0, 1}})});
  auto back = group_from_json(group_to_json(grp));
  EXPECT_EQ(back.generators(), grp.generators());
  HamiltonCertificate c{CertificateKind::path, {0, 2, 1}};
  EXPECT_EQ(certificate_from_json(certificate_to_json(c)), c);
  EXPECT_EQ(parse_cycles("(0 3 5)(1,2)", 6), g);
  EXPECT_TRUE(parse_cycles("()", 4).is_identity());
}

TEST(Json, Malformed) {
  EXPECT_EQ(code_of([] { graph_from_json("{\"n\": 3"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { graph_from_json("{\"n\": 3, \"edges\": [[0]]}"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { certificate_from_json("{\"kind\": \"loop\", \"sequence\": []}"); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { parse_cycles("(0 1", 3); }), ErrorCode::MalformedInput);
  EXPECT_EQ(code_of([] { graph_from_json("{\"n\": 2, \"edges\": [[0, 0]]}"); }), ErrorCode::InvalidGraph);
}

TEST(Json, ReportShape) {
  auto e = catalog_entry("truncated_petersen");
  auto j = nlohmann::json::parse(report_to_json(analyze(e.graph, group_of(e))));
  EXPECT_EQ(j.at("result"), "no_hamilton_cycle");
  EXPECT_EQ(j.at("exception_flag"), true);
  EXPECT_TRUE(j.at("strategy_trace").is_array());
}

TEST(Corpus, Fixtures) {
  auto psl = fixture("psl2_16_gens");
  ASSERT_TRUE(psl.group);
  EXPECT_EQ(psl.group->degree(), 17u);
  EXPECT_EQ(psl.group->order(), 4080u);
  EXPECT_EQ(PermGroup(17, psl.subgroup).order(), 80u);
  auto s6 = fixture("s6_on_s4_cosets");
  EXPECT_EQ(s6.group->degree(), 30u);
  EXPECT_EQ(s6.group->order(), 720u);
  EXPECT_TRUE(s6.group->is_transitive());
  EXPECT_EQ(fixture("dihedral:7").group->order(), 14u);
  EXPECT_EQ(fixture("cyclic:9").group->order(), 9u);
  EXPECT_TRUE(fixture("petersen").graph);
  EXPECT_EQ(code_of([] { fixture("nope"); }), ErrorCode::UnknownFixture);
}

TEST(Corpus, GraphsSortedAndValid) {
  auto all = corpus_graphs();
  ASSERT_FALSE(all.empty());
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LE(all[i - 1].graph.order(), all[i].graph.order());
  for (const auto& e : all) {
    for (const auto& g : e.automorphisms) EXPECT_TRUE(is_automorphism(e.graph, g)) << e.name;
  }
}

TEST(FieldTable, SmallAndLarge) {
  auto t4 = field_table(4);
  EXPECT_EQ(t4.q, 16u);
  EXPECT_EQ(t4.rows.size(), 15u);
  EXPECT_GE(t4.min_count, 2u);
  EXPECT_TRUE(t4.all_weil);
  auto t12 = field_table(12);
  EXPECT_EQ(t12.rows.size(), 4095u);
  // Closed-form route agrees with the per-c trace count on a sample.
  Field f(12);
  for (std::size_t e : {0u, 1u, 2u, 100u, 4094u}) {
    EXPECT_EQ(t12.rows[e].count, count_eq2_by_trace(f, t12.m, f.theta_pow(e), false));
  }
  EXPECT_EQ(code_of([] { field_table(1); }), ErrorCode::DegreeOutOfRange);
}
