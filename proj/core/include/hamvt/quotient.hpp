#pragma once

#include <vector>

#include "hamvt/graph.hpp"

namespace hamvt {

/// Quotient multigraph of a graph with respect to an equitable partition.
///
/// `internal[A]` is the valency d(A) of the induced subgraph X(A);
/// `cross[A][B]` is the number of neighbours in B of each vertex of A (for
/// equal-size cells this is the valency d(A,B) of X[A,B]; 0 when A and B are
/// not adjacent). The diagonal of `cross` is zero.
struct QuotientMulti {
  std::vector<std::vector<Vertex>> cells;
  std::vector<std::size_t> cell_of;
  std::vector<std::size_t> internal;
  std::vector<std::vector<std::size_t>> cross;

  std::size_t cell_count() const noexcept { return cells.size(); }
  std::size_t d(std::size_t a) const { return internal[a]; }
  std::size_t d(std::size_t a, std::size_t b) const { return cross[a][b]; }

  /// The underlying simple quotient graph X_P.
  Graph simple_quotient() const;
};

/// Throws Error{InvalidPartition} when `cells` do not partition V(X) and
/// Error{NotEquitable} when some X(A) is not regular or some X[A,B] is not
/// biregular.
QuotientMulti quotient_multigraph(const Graph& x, const std::vector<std::vector<Vertex>>& cells);

/// Checks that `cells` partition 0..n-1 and returns the cell index of each
/// vertex. Throws Error{InvalidPartition}.
std::vector<std::size_t> partition_index(std::size_t n, const std::vector<std::vector<Vertex>>& cells);

}  // namespace hamvt
