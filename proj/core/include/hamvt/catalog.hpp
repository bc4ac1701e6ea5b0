#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hamvt/graph.hpp"
#include "hamvt/permutation.hpp"

namespace hamvt {

/// A named graph with a fixed labelling and automorphisms that generate a
/// group transitive on vertices whenever `vertex_transitive` is set.
struct CatalogEntry {
  std::string name;
  Graph graph;
  std::vector<Permutation> automorphisms;
  bool vertex_transitive = false;
  std::string labelling;
};

/// Recognized names:
///   petersen, coxeter, truncated_petersen, truncated_coxeter, heawood,
///   non_incidence_pg22, crown:p, circulant:n:s1,s2,..., prism:t,
///   complete:n, complete_bipartite:a:b
/// Throws Error{UnknownName} or Error{BadParams}.
CatalogEntry catalog_entry(std::string_view name);

inline Graph catalog(std::string_view name) { return catalog_entry(name).graph; }

/// Names listed by the CLI.
std::vector<std::string> catalog_names();

/// Maps automorphisms of a cubic graph onto its triangle truncation.
Permutation truncated_automorphism(const Graph& base, const Permutation& g);

}  // namespace hamvt
