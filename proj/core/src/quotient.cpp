#include "hamvt/quotient.hpp"

#include <limits>

#include "hamvt/error.hpp"

namespace hamvt {

std::vector<std::size_t> partition_index(std::size_t n, const std::vector<std::vector<Vertex>>& cells) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> cell_of(n, unset);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty()) throw Error(ErrorCode::InvalidPartition, "empty cell");
    for (Vertex v : cells[c]) {
      if (v >= n) throw Error(ErrorCode::InvalidPartition, "cell vertex out of range");
      if (cell_of[v] != unset) throw Error(ErrorCode::InvalidPartition, "cells overlap");
      cell_of[v] = c;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (cell_of[v] == unset) throw Error(ErrorCode::InvalidPartition, "cells do not cover every vertex");
  }
  return cell_of;
}

QuotientMulti quotient_multigraph(const Graph& x, const std::vector<std::vector<Vertex>>& cells) {
  QuotientMulti q;
  q.cells = cells;
  q.cell_of = partition_index(x.order(), cells);
  const std::size_t k = cells.size();
  q.internal.assign(k, 0);
  q.cross.assign(k, std::vector<std::size_t>(k, 0));

  std::vector<std::size_t> counts(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < cells[a].size(); ++i) {
      std::fill(counts.begin(), counts.end(), 0);
      for (Vertex w : x.neighbors(cells[a][i])) ++counts[q.cell_of[w]];
      for (std::size_t b = 0; b < k; ++b) {
        std::size_t& slot = b == a ? q.internal[a] : q.cross[a][b];
        if (i == 0) {
          slot = counts[b];
        } else if (slot != counts[b]) {
          throw Error(ErrorCode::NotEquitable, b == a ? "induced subgraph on a cell is not regular"
                                                       : "bipartite subgraph between two cells is not biregular");
        }
      }
    }
  }
  return q;
}

Graph QuotientMulti::simple_quotient() const {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      if (cross[a][b] > 0) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  return Graph::from_edges(cells.size(), edges);
}

}  // namespace hamvt
