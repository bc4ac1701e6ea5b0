// hamvt: command line front end.
//
// Exit codes: 0 cycle found (or command succeeded), 1 proven no cycle
// (or certificate rejected), 2 unknown, 3 input error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hamvt/analysis.hpp"
#include "hamvt/catalog.hpp"
#include "hamvt/corpus.hpp"
#include "hamvt/coset_action.hpp"
#include "hamvt/error.hpp"
#include "hamvt/json_io.hpp"
#include "hamvt/orbital.hpp"

namespace {

using namespace hamvt;

constexpr int kFound = 0;
constexpr int kNone = 1;
constexpr int kUnknown = 2;
constexpr int kInputError = 3;

struct GraphSource {
  std::string graph_path;
  std::string catalog_name;

  void add_to(CLI::App* app) {
    auto* g = app->add_option("--graph", graph_path, "graph JSON file");
    auto* c = app->add_option("--catalog", catalog_name, "catalog graph name");
    g->excludes(c);
  }

  Graph load() const {
    if (!graph_path.empty()) return graph_from_json(read_file(graph_path));
    if (!catalog_name.empty()) return catalog(catalog_name);
    throw Error(ErrorCode::MalformedInput, "one of --graph or --catalog is required");
  }
};

struct GroupSource {
  std::string group_path;
  std::string fixture_name;
  std::vector<std::string> cycles;
  std::size_t degree = 0;

  void add_to(CLI::App* app) {
    app->add_option("--group", group_path, "group JSON file");
    app->add_option("--fixture", fixture_name, "bundled group fixture");
    app->add_option("--gen", cycles, "generator in cycle notation (repeatable)");
    app->add_option("--degree", degree, "degree for --gen generators");
  }

  bool given() const { return !group_path.empty() || !fixture_name.empty() || !cycles.empty(); }

  std::optional<PermGroup> load(std::size_t default_degree) const {
    if (!group_path.empty()) return group_from_json(read_file(group_path));
    if (!fixture_name.empty()) {
      Fixture f = fixture(fixture_name);
      if (!f.group) throw Error(ErrorCode::MalformedInput, "fixture '" + fixture_name + "' has no group");
      return f.group;
    }
    if (!cycles.empty()) {
      const std::size_t n = degree ? degree : default_degree;
      std::vector<Permutation> gens;
      for (const auto& c : cycles) gens.push_back(parse_cycles(c, n));
      return PermGroup(n, std::move(gens));
    }
    return std::nullopt;
  }
};

void emit(const std::string& text, const std::string& json_out) {
  std::cout << text << '\n';
  if (!json_out.empty()) write_file(json_out, text + "\n");
}

std::set<std::size_t> parse_selection(const std::string& text) {
  std::set<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw Error(ErrorCode::MalformedInput, "bad suborbit index '" + item + "'");
    out.insert(v);
  }
  return out;
}

int exit_for(SearchStatus s) {
  return s == SearchStatus::found ? kFound : s == SearchStatus::none ? kNone : kUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamilton cycles in vertex-transitive graphs: analysis, orbital graphs and field counts"};
  app.require_subcommand(1);

  std::uint64_t budget = SearchOptions::kDefaultBudget;
  std::uint64_t seed = SemiregularSearch::kDefaultSeed;
  std::string json_out;
  app.add_option("--budget", budget, "search node budget")->capture_default_str();
  app.add_option("--seed", seed, "seed for the semiregular element search");
  app.add_option("--json-out", json_out, "also write the JSON result to this file");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "run the strategy cascade on a graph");
  GraphSource analyze_graph;
  GroupSource analyze_group;
  bool no_group = false;
  analyze_graph.add_to(analyze_cmd);
  analyze_group.add_to(analyze_cmd);
  analyze_cmd->add_flag("--no-group", no_group, "ignore catalog automorphisms");

  // orbital
  auto* orbital_cmd = app.add_subcommand("orbital", "build a generalized orbital graph");
  GroupSource orbital_group;
  orbital_group.add_to(orbital_cmd);
  bool on_cosets = false;
  std::vector<std::string> subgroup_cycles;
  Point point = 0;
  std::string selection_text;
  orbital_cmd->add_flag("--cosets", on_cosets, "act on cosets of the fixture subgroup (or of --subgroup-gen)");
  orbital_cmd->add_option("--subgroup-gen", subgroup_cycles, "subgroup generator in cycle notation (repeatable)");
  orbital_cmd->add_option("--point", point, "base point v");
  orbital_cmd->add_option("--select", selection_text, "comma-separated suborbit indices; omit to list suborbits");

  // field
  auto* field_cmd = app.add_subcommand("field", "count solutions of the quadratic-in-a equation over GF(2^k)");
  unsigned k = 4;
  std::optional<std::uint32_t> m;
  field_cmd->add_option("--k", k, "extension degree, 2..16")->required();
  field_cmd->add_option("--m", m, "exponent m of the irreducible x^2 + theta^m x + 1");

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "print a catalog graph as JSON");
  std::string catalog_name;
  bool list = false;
  bool with_group = false;
  catalog_cmd->add_option("name", catalog_name, "graph name, e.g. crown:5 or circulant:30:1,6");
  catalog_cmd->add_flag("--list", list, "list recognized names");
  catalog_cmd->add_flag("--with-group", with_group, "print the automorphism generators instead");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "exact Hamilton cycle or path search");
  GraphSource solve_graph;
  bool want_path = false;
  solve_graph.add_to(solve_cmd);
  solve_cmd->add_flag("--path", want_path, "search for a Hamilton path instead");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
  GraphSource verify_graph;
  std::string cert_path;
  verify_graph.add_to(verify_cmd);
  verify_cmd->add_option("--cert", cert_path, "certificate JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (analyze_cmd->parsed()) {
      Graph x = analyze_graph.load();
      std::optional<PermGroup> group;
      if (analyze_group.given()) {
        group = analyze_group.load(x.order());
      } else if (!no_group && !analyze_graph.catalog_name.empty()) {
        auto entry = catalog_entry(analyze_graph.catalog_name);
        group = PermGroup(entry.graph.order(), entry.automorphisms);
      }
      AnalysisReport report = analyze(x, group, {budget, seed});
      emit(report_to_json(report), json_out);
      switch (report.result) {
        case Verdict::certificate: return kFound;
        case Verdict::no_hamilton_cycle: return kNone;
        case Verdict::unknown: return kUnknown;
      }
    }
    if (orbital_cmd->parsed()) {
      std::optional<PermGroup> group = orbital_group.load(orbital_group.degree);
      if (!group) throw Error(ErrorCode::MalformedInput, "a group is required (--group, --fixture or --gen)");
      if (on_cosets) {
        std::vector<Permutation> sub;
        if (!subgroup_cycles.empty()) {
          for (const auto& c : subgroup_cycles) sub.push_back(parse_cycles(c, group->degree()));
        } else if (!orbital_group.fixture_name.empty()) {
          sub = fixture(orbital_group.fixture_name).subgroup;
        }
        group = CosetAction(*group, sub).action();
      }
      SuborbitTable table = suborbits(*group, point);
      for (std::size_t i = 0; i < table.suborbits.size(); ++i) {
        std::cerr << "suborbit " << i << ": length " << table.suborbits[i].size() << ", paired with "
                  << table.pairing[i] << '\n';
      }
      if (selection_text.empty()) {
        emit(suborbit_table_json(table), json_out);
        return 0;
      }
      OrbitalGraph og = orbital_graph(*group, table, parse_selection(selection_text));
      if (og.symmetrized) std::cerr << "warning: selection was closed under pairing\n";
      std::cerr << "order " << og.graph.order() << ", edges " << og.graph.size()
                << (og.connected ? ", connected" : ", disconnected") << '\n';
      emit(graph_to_json(og.graph), json_out);
      return 0;
    }
    if (field_cmd->parsed()) {
      FieldTable table = field_table(k, m);
      emit(field_table_json(table), json_out);
      return 0;
    }
    if (catalog_cmd->parsed()) {
      if (list) {
        for (const auto& n : catalog_names()) std::cout << n << '\n';
        return 0;
      }
      if (catalog_name.empty()) throw Error(ErrorCode::MalformedInput, "a catalog name is required");
      CatalogEntry entry = catalog_entry(catalog_name);
      emit(with_group ? group_to_json(PermGroup(entry.graph.order(), entry.automorphisms)) : graph_to_json(entry.graph),
           json_out);
      return 0;
    }
    if (solve_cmd->parsed()) {
      Graph x = solve_graph.load();
      SearchOptions options;
      options.budget = budget;
      SearchResult r = want_path ? find_hamilton_path(x, options) : find_hamilton_cycle(x, options);
      if (r.certificate) {
        emit(certificate_to_json(*r.certificate), json_out);
      } else {
        std::cerr << (r.status == SearchStatus::none ? "no Hamilton " : "unknown: budget exhausted searching for a Hamilton ")
                  << (want_path ? "path" : "cycle") << " (" << r.nodes << " nodes)\n";
      }
      return exit_for(r.status);
    }
    if (verify_cmd->parsed()) {
      Graph x = verify_graph.load();
      HamiltonCertificate cert = certificate_from_json(read_file(cert_path));
      bool ok = verify_hamilton(x, cert);
      std::cout << (ok ? "valid" : "invalid") << '\n';
      return ok ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
