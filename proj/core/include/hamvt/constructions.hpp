#pragma once

#include <cstdint>
#include <vector>

#include "hamvt/graph.hpp"
#include "hamvt/hamilton.hpp"

namespace hamvt {

enum class ProductKind { y1, y2 };

/// Product of a base graph on t vertices with Z_p.
///
/// Vertex (u, j) is labelled u * p + j.
///   y1: (u,j) ~ (v,j+1) and (u,j) ~ (v,j-1) whenever u ~ v in the base.
///   y2: (u,j) ~ (v,j) whenever u ~ v, plus (u,j) ~ (u,j+1).
struct ProductModel {
  Graph base;
  std::uint32_t p = 0;
  ProductKind kind = ProductKind::y1;
  std::vector<Vertex> base_cycle;

  std::uint32_t t() const noexcept { return static_cast<std::uint32_t>(base.order()); }
  Vertex label(Vertex u, std::uint32_t j) const { return u * p + (j % p); }
};

/// Throws Error{BadBaseCycle} if base_cycle is not a Hamilton cycle of the base.
Graph product_graph(const ProductModel& model);

/// Diagonal cycle (c[i mod t], i mod p), i = 0..tp-1.
/// Throws Error{GcdNotOne}, Error{BadBaseCycle}.
HamiltonCertificate y1_cycle(const ProductModel& model);

/// Two-level boustrophedon for p = 2, column snake for even t, and a level
/// sweep closed by a column run when t and p are both odd.
/// Throws Error{BadBaseCycle}.
HamiltonCertificate y2_cycle(const ProductModel& model);

/// Replaces each vertex v by the triangle 3v, 3v+1, 3v+2; the edge to the
/// i-th neighbour of v (ascending) leaves from corner 3v+i.
/// Throws Error{NotCubic}.
Graph truncate_cubic(const Graph& x);

}  // namespace hamvt
