#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hamvt/graph.hpp"
#include "hamvt/hamilton.hpp"
#include "hamvt/perm_group.hpp"

namespace hamvt {

// Formats:
//   graph        {"n": int, "edges": [[u, v], ...]}
//   permutation  {"degree": n, "images": [...]}
//   group        {"degree": n, "generators": [[...], ...]}
//   certificate  {"kind": "cycle" | "path", "sequence": [...]}
// Readers throw Error{MalformedInput} on syntax or shape errors and let the
// graph/permutation constructors report semantic ones.

std::string graph_to_json(const Graph& x);
Graph graph_from_json(std::string_view text);

std::string permutation_to_json(const Permutation& g);
Permutation permutation_from_json(std::string_view text);

std::string group_to_json(const PermGroup& group);
PermGroup group_from_json(std::string_view text);

std::string certificate_to_json(const HamiltonCertificate& cert);
HamiltonCertificate certificate_from_json(std::string_view text);

/// Parses cycle notation such as "(0 1 2)(3 4)"; commas are accepted as
/// separators and "()" is the identity. Throws Error{MalformedInput}.
Permutation parse_cycles(std::string_view text, std::size_t degree);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace hamvt
