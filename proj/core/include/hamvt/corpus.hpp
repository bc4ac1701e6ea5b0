#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamvt/catalog.hpp"
#include "hamvt/graph.hpp"
#include "hamvt/perm_group.hpp"

namespace hamvt {

/// Bundled graph and group data with a note on how it was built.
struct Fixture {
  std::string name;
  std::optional<Graph> graph;
  std::optional<PermGroup> group;
  /// Subgroup generators when the fixture describes a coset action.
  std::vector<Permutation> subgroup;
  std::string provenance;
};

/// Known names:
///   psl2_16_gens        degree 17: l, t, u acting on PG(1,16); subgroup = u, t^3
///   s6_on_s4_cosets     degree 30: S6 on cosets of an S4 contained in A6
///   s6_on_pair_cosets   degree 30: S6 on cosets of the point-wise stabilizer S4 of {0,1}
///   s6_natural          degree 6: S6 with subgroup as in s6_on_s4_cosets
///   cyclic:n, dihedral:n
///   any catalog graph name (graph plus its automorphism group)
/// Throws Error{UnknownFixture}.
Fixture fixture(std::string_view name);

/// Degree-17 images of l, t, u (in that order).
std::vector<Permutation> psl2_16_generators();

/// Graphs used by the property and oracle suites, smallest first.
std::vector<CatalogEntry> corpus_graphs();

}  // namespace hamvt
