#pragma once

#include <set>
#include <vector>

#include "hamvt/blocks.hpp"
#include "hamvt/graph.hpp"
#include "hamvt/perm_group.hpp"

namespace hamvt {

/// Orbits of the stabilizer G_v (suborbits), sorted by (length, least point),
/// so index 0 is always {v}. `pairing[i]` is the index of the paired suborbit.
struct SuborbitTable {
  Point base = 0;
  std::vector<std::vector<Point>> suborbits;
  std::vector<std::size_t> pairing;

  std::size_t index_of(Point x) const;
  bool self_paired(std::size_t i) const { return pairing[i] == i; }
};

/// Throws Error{NotTransitive}.
SuborbitTable suborbits(const PermGroup& group, Point v);

struct OrbitalGraph {
  Graph graph;
  bool connected = false;
  /// The selection was not closed under pairing and its closure was used.
  bool symmetrized = false;
  std::set<std::size_t> selection;  ///< the (closed) selection actually used
};

/// Generalized orbital graph: u ~ w iff w lies in the image of the selected
/// suborbits under an element carrying v to u. Throws Error{NotTransitive},
/// Error{EmptySelection}, and Error{InvalidSelection} for the trivial
/// suborbit or an out-of-range index.
OrbitalGraph orbital_graph(const PermGroup& group, Point v, const std::set<std::size_t>& selection);
OrbitalGraph orbital_graph(const PermGroup& group, const SuborbitTable& table, const std::set<std::size_t>& selection);

/// The block graph: cells adjacent iff some edge joins them.
Graph block_quotient(const Graph& x, const BlockSystem& cells);
Graph block_quotient(const Graph& x, const std::vector<std::vector<Vertex>>& cells);

/// Classes of nontrivial suborbits under pairing ({i, pairing[i]}), in index order.
std::vector<std::set<std::size_t>> paired_classes(const SuborbitTable& table);

}  // namespace hamvt
