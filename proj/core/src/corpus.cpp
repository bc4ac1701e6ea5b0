#include "hamvt/corpus.hpp"

#include <algorithm>
#include <charconv>

#include "hamvt/coset_action.hpp"
#include "hamvt/error.hpp"

namespace hamvt {

namespace {

// Images computed by tools/scripts/derive_fixtures.py from the matrices
// [[0,1],[1,0]], [[x,0],[0,x^-1]] and [[1,1],[0,1]] over GF(2)[x]/(x^4+x+1).
const std::vector<Point> kEll{16, 1, 9, 14, 13, 11, 7, 6, 15, 2, 12, 5, 10, 4, 3, 8, 0};
const std::vector<Point> kTorus{0, 13, 9, 4, 1, 12, 8, 5, 2, 15, 11, 6, 3, 14, 10, 7, 16};
const std::vector<Point> kUnipotent{1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10, 13, 12, 15, 14, 16};

std::vector<Permutation> s6_generators() {
  return {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}}), Permutation::from_cycles(6, {{0, 1}})};
}

std::vector<Permutation> s4_in_a6() {
  return {Permutation::from_cycles(6, {{0, 1}, {2, 3, 4, 5}}), Permutation::from_cycles(6, {{0, 1}, {2, 3}})};
}

std::vector<Permutation> s4_fixing_pair() {
  return {Permutation::from_cycles(6, {{2, 3, 4, 5}}), Permutation::from_cycles(6, {{2, 3}})};
}

Fixture s6_cosets(std::string name, std::vector<Permutation> subgroup, std::string note) {
  PermGroup s6(6, s6_generators());
  CosetAction action(s6, std::move(subgroup));
  return {std::move(name), std::nullopt, action.action(), {}, std::move(note)};
}

std::uint32_t parse_n(std::string_view s) {
  std::uint32_t n = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || n < 1 || n > (1u << 20)) {
    throw Error(ErrorCode::UnknownFixture, "bad fixture parameter '" + std::string(s) + "'");
  }
  return n;
}

}  // namespace

std::vector<Permutation> psl2_16_generators() {
  return {Permutation(kEll), Permutation(kTorus), Permutation(kUnipotent)};
}

Fixture fixture(std::string_view name) {
  if (name == "psl2_16_gens") {
    auto gens = psl2_16_generators();
    Permutation t3 = gens[1].pow(3);
    return {std::string(name), std::nullopt, PermGroup(17, gens), {gens[2], t3},
            "PSL(2,16) = <l, t, u> on the projective line over GF(16), modulus x^4+x+1, theta = x; "
            "[1:y] is point y and [0:1] is point 16; subgroup <u, t^3> has index 51"};
  }
  if (name == "s6_on_s4_cosets") {
    return s6_cosets(std::string(name), s4_in_a6(),
                     "S6 = <(0 1 2 3 4 5), (0 1)> on right cosets of <(0 1)(2 3 4 5), (0 1)(2 3)>, an S4 inside A6; "
                     "A6 has two orbits of length 15");
  }
  if (name == "s6_on_pair_cosets") {
    return s6_cosets(std::string(name), s4_fixing_pair(),
                     "S6 = <(0 1 2 3 4 5), (0 1)> on right cosets of <(2 3 4 5), (2 3)>");
  }
  if (name == "s6_natural") {
    return {std::string(name), std::nullopt, PermGroup(6, s6_generators()), s4_in_a6(),
            "S6 = <(0 1 2 3 4 5), (0 1)> with subgroup <(0 1)(2 3 4 5), (0 1)(2 3)>"};
  }
  if (name.starts_with("cyclic:") || name.starts_with("dihedral:")) {
    const bool dihedral = name.starts_with("dihedral:");
    const std::uint32_t n = parse_n(name.substr(name.find(':') + 1));
    std::vector<Point> rot(n), ref(n);
    for (Point x = 0; x < n; ++x) {
      rot[x] = (x + 1) % n;
      ref[x] = (n - x) % n;
    }
    std::vector<Permutation> gens{Permutation(rot)};
    if (dihedral) gens.emplace_back(ref);
    return {std::string(name), std::nullopt, PermGroup(n, gens), {},
            dihedral ? "rotation i -> i+1 and reflection i -> -i (mod n)" : "rotation i -> i+1 (mod n)"};
  }
  try {
    CatalogEntry entry = catalog_entry(name);
    return {entry.name, entry.graph, PermGroup(entry.graph.order(), entry.automorphisms), {}, entry.labelling};
  } catch (const Error& e) {
    throw Error(ErrorCode::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
  }
}

std::vector<CatalogEntry> corpus_graphs() {
  std::vector<std::string> names{"petersen", "coxeter", "truncated_petersen", "heawood", "non_incidence_pg22",
                                 "complete_bipartite:3:3", "complete_bipartite:2:3", "complete_bipartite:4:4"};
  for (int n = 1; n <= 12; ++n) names.push_back("complete:" + std::to_string(n));
  for (int p : {2, 3, 4, 5, 6, 7}) names.push_back("crown:" + std::to_string(p));
  for (int t = 3; t <= 8; ++t) names.push_back("prism:" + std::to_string(t));
  for (const char* c : {"circulant:5:1", "circulant:6:1", "circulant:6:2", "circulant:8:1,4", "circulant:9:1,3",
                        "circulant:10:2", "circulant:10:1,5", "circulant:12:1,5", "circulant:12:3",
                        "circulant:15:3,5", "circulant:18:1,6", "circulant:30:1,6", "circulant:30:6,10,15"}) {
    names.emplace_back(c);
  }
  std::vector<CatalogEntry> out;
  for (const auto& n : names) out.push_back(catalog_entry(n));
  std::stable_sort(out.begin(), out.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) { return a.graph.order() < b.graph.order(); });
  return out;
}

}  // namespace hamvt
