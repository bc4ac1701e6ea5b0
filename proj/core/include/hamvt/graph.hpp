#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hamvt/permutation.hpp"

namespace hamvt {

using Vertex = Point;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on vertices 0..n-1 with sorted adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Normalizes each edge to u < v. Throws Error{InvalidGraph} on loops or
  /// out-of-range endpoints and Error{DuplicateEdge} on repeated edges.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// An induced or bipartite subgraph with `vertex_map[new] = old`.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> vertex_map;
};

/// X(U) when `w` is absent, X[U,W] otherwise. New labels follow sorted U,
/// then sorted W. Throws Error{OverlappingParts} when U and W intersect.
Subgraph subgraph(const Graph& x, std::span<const Vertex> u, std::optional<std::span<const Vertex>> w = std::nullopt);

struct StructureReport {
  bool connected = false;
  bool two_connected = false;  ///< connected, at least 3 vertices, no cut vertex
  std::optional<std::size_t> regular;
  bool bipartite = false;
};

StructureReport structure_report(const Graph& x);

bool is_connected(const Graph& x);
/// Cut vertices in ascending order.
std::vector<Vertex> articulation_points(const Graph& x);
std::optional<std::size_t> regular_valency(const Graph& x);
/// Length of a shortest cycle; nullopt for forests.
std::optional<std::size_t> girth(const Graph& x);

/// True iff `g` maps edges to edges (and has the graph's degree).
bool is_automorphism(const Graph& x, const Permutation& g);

}  // namespace hamvt
