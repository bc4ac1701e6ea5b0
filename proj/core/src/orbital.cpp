#include "hamvt/orbital.hpp"

#include <algorithm>
#include <tuple>

#include "hamvt/error.hpp"
#include "hamvt/quotient.hpp"

namespace hamvt {

std::size_t SuborbitTable::index_of(Point x) const {
  for (std::size_t i = 0; i < suborbits.size(); ++i) {
    if (std::binary_search(suborbits[i].begin(), suborbits[i].end(), x)) return i;
  }
  throw Error(ErrorCode::BadParams, "point not covered by the suborbit table");
}

SuborbitTable suborbits(const PermGroup& group, Point v) {
  if (!group.is_transitive()) throw Error(ErrorCode::NotTransitive, "suborbits need a transitive group");
  if (v >= group.degree()) throw Error(ErrorCode::BadParams, "base point out of range");
  SuborbitTable table;
  table.base = v;
  table.suborbits = point_stabilizer(group, v).orbits();
  std::sort(table.suborbits.begin(), table.suborbits.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.size(), a.front()) < std::make_tuple(b.size(), b.front());
  });
  if (table.suborbits.front() != std::vector<Point>{v}) {
    // {v} is the unique shortest when other suborbits are singletons too; move it first.
    auto it = std::find(table.suborbits.begin(), table.suborbits.end(), std::vector<Point>{v});
    std::rotate(table.suborbits.begin(), it, it + 1);
  }

  // S pairs with S' iff v^{g^-1} lies in S' for g with v^g in S.
  auto transversal = orbit_transversal(group, v);
  table.pairing.resize(table.suborbits.size());
  for (std::size_t i = 0; i < table.suborbits.size(); ++i) {
    const Permutation& g = *transversal[table.suborbits[i].front()];
    table.pairing[i] = table.index_of(g.inverse()(v));
  }
  return table;
}

std::vector<std::set<std::size_t>> paired_classes(const SuborbitTable& table) {
  std::vector<std::set<std::size_t>> out;
  for (std::size_t i = 1; i < table.suborbits.size(); ++i) {
    if (table.pairing[i] < i) continue;
    out.push_back({i, table.pairing[i]});
  }
  return out;
}

OrbitalGraph orbital_graph(const PermGroup& group, Point v, const std::set<std::size_t>& selection) {
  return orbital_graph(group, suborbits(group, v), selection);
}

OrbitalGraph orbital_graph(const PermGroup& group, const SuborbitTable& table, const std::set<std::size_t>& selection) {
  if (!group.is_transitive()) throw Error(ErrorCode::NotTransitive, "orbital graphs need a transitive group");
  if (selection.empty()) throw Error(ErrorCode::EmptySelection, "no suborbit selected");
  OrbitalGraph out;
  for (std::size_t i : selection) {
    if (i == 0 || i >= table.suborbits.size()) {
      throw Error(ErrorCode::InvalidSelection, "selection must name nontrivial suborbits");
    }
    out.selection.insert(i);
    out.selection.insert(table.pairing[i]);
  }
  out.symmetrized = out.selection.size() != selection.size();

  std::vector<Point> targets;
  for (std::size_t i : out.selection) targets.insert(targets.end(), table.suborbits[i].begin(), table.suborbits[i].end());

  const std::size_t n = group.degree();
  auto transversal = orbit_transversal(group, table.base);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    const Permutation& to_u = *transversal[u];
    for (Point w : targets) {
      Vertex image = to_u(w);
      if (u < image) edges.emplace_back(u, image);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.graph = Graph::from_edges(n, edges);
  out.connected = is_connected(out.graph);
  return out;
}

Graph block_quotient(const Graph& x, const std::vector<std::vector<Vertex>>& cells) {
  auto cell_of = partition_index(x.order(), cells);
  std::vector<Edge> edges;
  for (auto [u, w] : x.edges()) {
    auto a = static_cast<Vertex>(cell_of[u]);
    auto b = static_cast<Vertex>(cell_of[w]);
    if (a == b) continue;
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(cells.size(), edges);
}

Graph block_quotient(const Graph& x, const BlockSystem& cells) { return block_quotient(x, cells.cells); }

}  // namespace hamvt
