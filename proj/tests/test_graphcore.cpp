#include <gtest/gtest.h>

#include "hamvt/catalog.hpp"
#include "hamvt/constructions.hpp"
#include "hamvt/error.hpp"
#include "hamvt/graph.hpp"
#include "hamvt/orbital.hpp"
#include "hamvt/quotient.hpp"
#include "support/error_code.hpp"

using namespace hamvt;

namespace {

Graph cycle_graph(std::uint32_t n) { return catalog("circulant:" + std::to_string(n) + ":1"); }

Graph path_graph(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST(Graph, NormalizesAndRejects) {
  std::vector<Edge> e{{2, 0}, {1, 2}};
  Graph g = Graph::from_edges(3, e);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
  EXPECT_TRUE(g.adjacent(2, 0));
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(2, dup), Error);
  std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(2, loop), Error);
  std::vector<Edge> far{{0, 5}};
  EXPECT_THROW(Graph::from_edges(2, far), Error);
}

TEST(Graph, StructureReport) {
  auto r = structure_report(catalog("petersen"));
  EXPECT_TRUE(r.connected);
  EXPECT_TRUE(r.two_connected);
  EXPECT_EQ(r.regular, std::optional<std::size_t>{3});
  EXPECT_FALSE(r.bipartite);
  EXPECT_TRUE(structure_report(catalog("heawood")).bipartite);
  auto p = structure_report(path_graph(4));
  EXPECT_FALSE(p.two_connected);
  EXPECT_FALSE(p.regular);
  EXPECT_EQ(articulation_points(path_graph(4)), (std::vector<Vertex>{1, 2}));
  EXPECT_FALSE(is_connected(catalog("circulant:10:2")));
  EXPECT_EQ(girth(catalog("petersen")), std::optional<std::size_t>{5});
  EXPECT_EQ(girth(catalog("heawood")), std::optional<std::size_t>{6});
  EXPECT_EQ(girth(catalog("coxeter")), std::optional<std::size_t>{7});
  EXPECT_FALSE(girth(path_graph(5)));
}

TEST(Graph, Subgraphs) {
  Graph c6 = cycle_graph(6);
  std::vector<Vertex> u{0, 1, 2};
  auto s = subgraph(c6, u);
  EXPECT_EQ(s.graph.size(), 2u);
  EXPECT_EQ(s.vertex_map, u);
  std::vector<Vertex> w{3, 5};
  auto b = subgraph(c6, u, std::span<const Vertex>(w));
  EXPECT_EQ(b.graph.edges(), (std::vector<Edge>{{0, 4}, {2, 3}}));
  std::vector<Vertex> overlap{2, 3};
  EXPECT_THROW(subgraph(c6, u, std::span<const Vertex>(overlap)), Error);
}

TEST(Quotient, CycleByShiftCells) {
  Graph c15 = cycle_graph(15);
  std::vector<std::vector<Vertex>> cells(3);
  for (Vertex v = 0; v < 15; ++v) cells[v % 3].push_back(v);
  auto q = quotient_multigraph(c15, cells);
  for (std::size_t a = 0; a < 3; ++a) {
    EXPECT_EQ(q.d(a), 0u);
    for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(q.d(a, b), a == b ? 0u : 1u);
  }
  EXPECT_EQ(q.simple_quotient().size(), 3u);
}

TEST(Quotient, PetersenOuterInner) {
  auto q = quotient_multigraph(catalog("petersen"), {{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}});
  EXPECT_EQ(q.d(0), 2u);
  EXPECT_EQ(q.d(1), 2u);
  EXPECT_EQ(q.d(0, 1), 1u);
}

TEST(Quotient, RejectsBadPartitions) {
  Graph p4 = path_graph(4);
  try {
    quotient_multigraph(p4, {{0, 1}, {2, 3}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotEquitable);
  }
  try {
    quotient_multigraph(p4, {{0, 1}, {1, 2, 3}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPartition);
  }
}

TEST(Quotient, TruncationTrianglesRecoverBase) {
  for (const char* base : {"petersen", "heawood", "prism:5", "complete:4"}) {
    Graph x = catalog(base);
    Graph t = truncate_cubic(x);
    std::vector<std::vector<Vertex>> triangles;
    for (Vertex v = 0; v < x.order(); ++v) triangles.push_back({3 * v, 3 * v + 1, 3 * v + 2});
    // One edge between adjacent triangles: not biregular.
    EXPECT_EQ(code_of([&] { quotient_multigraph(t, triangles); }), ErrorCode::NotEquitable) << base;
    EXPECT_EQ(block_quotient(t, triangles), x) << base;
  }
}
