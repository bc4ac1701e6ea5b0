#include "hamvt/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "hamvt/error.hpp"

namespace hamvt {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::InvalidGraph, "loops are not allowed");
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end()) {
      throw Error(ErrorCode::DuplicateEdge, "edge listed more than once");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Subgraph subgraph(const Graph& x, std::span<const Vertex> u, std::optional<std::span<const Vertex>> w) {
  const std::size_t n = x.order();
  std::vector<int> part(n, -1);
  std::vector<std::ptrdiff_t> new_label(n, -1);
  Subgraph out;
  auto place = [&](std::span<const Vertex> set, int tag) {
    std::vector<Vertex> sorted(set.begin(), set.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
      if (v >= n) throw Error(ErrorCode::InvalidGraph, "subgraph vertex out of range");
      if (part[v] >= 0) throw Error(ErrorCode::OverlappingParts, "vertex sets U and W intersect");
      part[v] = tag;
      new_label[v] = static_cast<std::ptrdiff_t>(out.vertex_map.size());
      out.vertex_map.push_back(v);
    }
  };
  place(u, 0);
  if (w) place(*w, 1);

  std::vector<Edge> edges;
  for (auto [a, b] : x.edges()) {
    if (part[a] < 0 || part[b] < 0) continue;
    bool keep = w ? part[a] != part[b] : true;
    if (keep) edges.emplace_back(static_cast<Vertex>(new_label[a]), static_cast<Vertex>(new_label[b]));
  }
  out.graph = Graph::from_edges(out.vertex_map.size(), edges);
  return out;
}

bool is_connected(const Graph& x) {
  const std::size_t n = x.order();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : x.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::vector<Vertex> articulation_points(const Graph& x) {
  const std::size_t n = x.order();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::size_t timer = 0;
  // Iterative Tarjan: frame = (vertex, parent, next neighbor index).
  struct Frame {
    Vertex v;
    std::ptrdiff_t parent;
    std::size_t next;
    std::size_t children;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root]) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[root] = low[root] = ++timer;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = x.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (!disc[w]) {
          ++f.children;
          disc[w] = low[w] = ++timer;
          stack.push_back({w, static_cast<std::ptrdiff_t>(f.v), 0, 0});
        } else if (static_cast<std::ptrdiff_t>(w) != f.parent) {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children > 1) is_cut[done.v] = true;
        continue;
      }
      Frame& up = stack.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (up.parent >= 0 && low[done.v] >= disc[up.v]) is_cut[up.v] = true;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

std::optional<std::size_t> regular_valency(const Graph& x) {
  if (x.order() == 0) return 0;
  std::size_t d = x.degree(0);
  for (Vertex v = 1; v < x.order(); ++v) {
    if (x.degree(v) != d) return std::nullopt;
  }
  return d;
}

std::optional<std::size_t> girth(const Graph& x) {
  std::optional<std::size_t> best;
  const std::size_t n = x.order();
  for (Vertex s = 0; s < n; ++s) {
    std::vector<std::ptrdiff_t> dist(n, -1), parent(n, -1);
    std::deque<Vertex> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : x.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        } else if (parent[v] != static_cast<std::ptrdiff_t>(w)) {
          auto len = static_cast<std::size_t>(dist[v] + dist[w] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

StructureReport structure_report(const Graph& x) {
  StructureReport r;
  r.connected = is_connected(x);
  r.two_connected = r.connected && x.order() >= 3 && articulation_points(x).empty();
  r.regular = regular_valency(x);

  const std::size_t n = x.order();
  std::vector<int> colour(n, -1);
  r.bipartite = true;
  for (Vertex s = 0; s < n && r.bipartite; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty() && r.bipartite) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : x.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          r.bipartite = false;
          break;
        }
      }
    }
  }
  return r;
}

bool is_automorphism(const Graph& x, const Permutation& g) {
  if (g.degree() != x.order()) return false;
  for (auto [u, v] : x.edges()) {
    if (!x.adjacent(g(u), g(v))) return false;
  }
  return true;
}

}  // namespace hamvt
