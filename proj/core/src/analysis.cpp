#include "hamvt/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include <nlohmann/json.hpp>

#include "hamvt/blocks.hpp"
#include "hamvt/error.hpp"
#include "hamvt/json_io.hpp"
#include "hamvt/lift.hpp"
#include "hamvt/quotient.hpp"

namespace hamvt {

using nlohmann::json;

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> prime_divisors(std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (n % p == 0 && is_prime(p)) out.push_back(p);
  }
  return out;
}

std::vector<std::string> case_labels_for(std::size_t n, const std::vector<std::size_t>& sizes) {
  std::vector<std::string> labels;
  if (n % 6 != 0 || !is_prime(n / 6)) return labels;
  const std::size_t p = n / 6;
  const std::pair<std::size_t, const char*> cases[] = {{p, "|B|=p"}, {2 * p, "|B|=2p"}, {3 * p, "|B|=3p"},
                                                       {2, "|B|=2"}, {3, "|B|=3"},       {6, "|B|=6"}};
  for (auto [size, label] : cases) {
    if (std::find(sizes.begin(), sizes.end(), size) != sizes.end() &&
        std::find(labels.begin(), labels.end(), label) == labels.end()) {
      labels.emplace_back(label);
    }
  }
  return labels;
}

std::string status_word(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::none: return "none";
    case SearchStatus::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::certificate: return "certificate";
    case Verdict::no_hamilton_cycle: return "no_hamilton_cycle";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

bool is_truncated_petersen(const Graph& x) {
  if (x.order() != 30 || regular_valency(x) != std::optional<std::size_t>{3}) return false;
  std::vector<int> triangle_of(30, -1);
  std::vector<std::vector<Vertex>> triangles;
  for (Vertex v = 0; v < 30; ++v) {
    auto nb = x.neighbors(v);
    int found = 0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!x.adjacent(nb[i], nb[j])) continue;
        ++found;
        if (triangle_of[v] < 0) {
          std::vector<Vertex> t{v, nb[i], nb[j]};
          std::sort(t.begin(), t.end());
          if (t[0] == v) {
            for (Vertex w : t) {
              if (triangle_of[w] >= 0) return false;
              triangle_of[w] = static_cast<int>(triangles.size());
            }
            triangles.push_back(t);
          }
        }
      }
    }
    if (found != 1) return false;
  }
  if (triangles.size() != 10) return false;
  Graph quotient = block_quotient(x, triangles);
  return regular_valency(quotient) == std::optional<std::size_t>{3} && girth(quotient) == std::optional<std::size_t>{5};
}

AnalysisReport analyze(const Graph& x, const std::optional<PermGroup>& group, const AnalyzeOptions& options) {
  AnalysisReport report;
  const std::size_t n = x.order();
  report.order = n;
  report.size = x.size();
  report.connected = is_connected(x);
  report.valency = regular_valency(x);
  report.exception_flag = is_truncated_petersen(x);

  auto conclude = [&](Verdict v, std::string reason) {
    report.result = v;
    report.reason = std::move(reason);
  };
  auto step = [&](std::string name, std::string outcome, std::string detail = {}) {
    report.trace.push_back({std::move(name), std::move(outcome), std::move(detail)});
  };

  if (group) {
    if (group->degree() != n) throw Error(ErrorCode::GroupDegreeMismatch, "group degree differs from graph order");
    for (const auto& g : group->generators()) {
      if (!is_automorphism(x, g)) throw Error(ErrorCode::GroupNotAutomorphisms, "a generator is not an automorphism");
    }
    report.group_supplied = true;
    report.group_order = group->order();
    report.vertex_transitive = n > 0 && group->is_transitive();
    step("group", "verified", "order " + std::to_string(report.group_order) +
                                  (report.vertex_transitive ? ", transitive" : ", intransitive"));
    if (report.vertex_transitive) {
      for (const auto& bs : block_systems(*group)) report.block_cell_sizes.push_back(bs.cell_size);
      std::sort(report.block_cell_sizes.begin(), report.block_cell_sizes.end());
      report.case_labels = case_labels_for(n, report.block_cell_sizes);
      step("blocks", std::to_string(report.block_cell_sizes.size()) + " systems");
    }
  } else {
    step("group", "skipped", "no group supplied");
  }

  // Obstructions that settle the question without search.
  if (n < 3) {
    step("structure", "no_hamilton_cycle", "fewer than 3 vertices");
    conclude(Verdict::no_hamilton_cycle, "fewer than 3 vertices");
    return report;
  }
  if (!report.connected) {
    step("structure", "no_hamilton_cycle", "disconnected");
    conclude(Verdict::no_hamilton_cycle, "disconnected");
    return report;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (x.degree(v) < 2) {
      step("structure", "no_hamilton_cycle", "vertex of degree below 2");
      conclude(Verdict::no_hamilton_cycle, "vertex of degree below 2");
      return report;
    }
  }
  if (!articulation_points(x).empty()) {
    step("structure", "no_hamilton_cycle", "cut vertex");
    conclude(Verdict::no_hamilton_cycle, "cut vertex");
    return report;
  }
  step("structure", "passed", "connected, 2-connected, minimum degree at least 2");

  if (group && report.vertex_transitive) {
    SemiregularSearch search;
    search.seed = options.seed;
    for (std::uint32_t p : prime_divisors(n)) {
      const std::string name = "lift[p=" + std::to_string(p) + "]";
      auto rho = find_semiregular(*group, p, search);
      if (!rho) {
        step(name, "skipped", "no semiregular element of order " + std::to_string(p));
        continue;
      }
      LiftOutcome lifted = lift_hamilton_detailed(x, *rho, p);
      const std::string detail = "m=" + std::to_string(n / p) + ", quotient cycles tried " +
                                 std::to_string(lifted.quotient_cycles_tried) + (lifted.exhausted ? "" : ", capped");
      if (lifted.certificate) {
        step(name, "found", detail);
        report.certificate = lifted.certificate;
        conclude(Verdict::certificate, "lifted quotient cycle");
        return report;
      }
      step(name, "failed", detail);
    }
  } else {
    step("lift", "skipped", group ? "group not transitive" : "no group supplied");
  }

  SearchOptions solver;
  solver.budget = options.budget;
  auto solve = [&](const std::string& name) {
    SearchResult r = find_hamilton_cycle(x, solver);
    step(name, status_word(r.status), std::to_string(r.nodes) + " nodes");
    if (r.status == SearchStatus::found) {
      report.certificate = r.certificate;
      conclude(Verdict::certificate, name == "jackson" ? "Jackson condition, direct solve" : "exact search");
    } else if (r.status == SearchStatus::none) {
      conclude(Verdict::no_hamilton_cycle, "exhaustive search");
    } else {
      conclude(Verdict::unknown, "search budget exhausted");
    }
  };

  if (jackson_condition(x)) {
    solve("jackson");
    return report;
  }
  step("jackson", "not_applicable");
  solve("exact");
  return report;
}

std::string report_to_json(const AnalysisReport& report) {
  json trace = json::array();
  for (const auto& s : report.trace) trace.push_back({{"strategy", s.strategy}, {"outcome", s.outcome}, {"detail", s.detail}});
  json out{
      {"input", {{"n", report.order}, {"edges", report.size}, {"connected", report.connected},
                 {"valency", report.valency ? json(*report.valency) : json(nullptr)},
                 {"group_supplied", report.group_supplied}, {"group_order", report.group_order}}},
      {"vertex_transitive", report.vertex_transitive},
      {"block_systems", report.block_cell_sizes},
      {"case_labels", report.case_labels},
      {"strategy_trace", trace},
      {"result", to_string(report.result)},
      {"reason", report.reason},
      {"exception_flag", report.exception_flag},
  };
  if (report.certificate) {
    out["certificate"] = json::parse(certificate_to_json(*report.certificate));
  }
  return out.dump(2);
}

FieldTable field_table(unsigned k, std::optional<std::uint32_t> m) {
  if (k < 2 || k > 16) throw Error(ErrorCode::DegreeOutOfRange, "field degree must be in 2..16");
  Field f(k);
  FieldTable table;
  table.k = k;
  table.q = f.q();
  table.modulus = f.modulus();
  table.m = m ? *m : quad_irreducible_m(f);
  if (!quad_irreducible(f, table.m)) throw Error(ErrorCode::ReducibleQuadratic, "x^2 + theta^m x + 1 has a root");
  const std::uint32_t rows = f.q() - 1;
  table.rows.resize(rows);
  auto work = [&](std::uint32_t begin, std::uint32_t end) {
    for (std::uint32_t e = begin; e < end; ++e) {
      FieldRow& row = table.rows[e];
      row.c = f.theta_pow(e);
      row.log_c = e;
      row.count = count_eq2(f, table.m, row.c, false);
      row.count_y_nonzero = count_eq2(f, table.m, row.c, true);
      row.weil = weil_check(static_cast<std::int64_t>(row.count), f.q(), 6);
    }
  };
  if (k <= 10) {
    const unsigned threads = std::max(1u, std::min(std::thread::hardware_concurrency(), rows / 64 + 1));
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, rows * t / threads, rows * (t + 1) / threads);
    for (auto& th : pool) th.join();
  } else {
    auto free_counts = count_eq2_all(f, table.m, false);
    for (std::uint32_t e = 0; e < rows; ++e) {
      FieldRow& row = table.rows[e];
      row.c = f.theta_pow(e);
      row.log_c = e;
      row.count = free_counts[e];
      row.count_y_nonzero = free_counts[e] - 1;
      row.weil = weil_check(static_cast<std::int64_t>(row.count), f.q(), 6);
    }
  }
  table.min_count = rows ? table.rows[0].count : 0;
  for (const auto& row : table.rows) {
    table.min_count = std::min(table.min_count, row.count);
    table.all_weil = table.all_weil && row.weil;
  }
  return table;
}

std::string field_table_json(const FieldTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    rows.push_back({{"c", r.c}, {"log_c", r.log_c}, {"count", r.count}, {"count_y_nonzero", r.count_y_nonzero},
                    {"weil", r.weil}});
  }
  return json{{"k", table.k},         {"q", table.q},
              {"modulus", table.modulus}, {"m", table.m},
              {"rows", rows},         {"min_count", table.min_count},
              {"all_weil", table.all_weil}}
      .dump(2);
}

std::string suborbit_table_json(const SuborbitTable& table) {
  json subs = json::array();
  for (std::size_t i = 0; i < table.suborbits.size(); ++i) {
    subs.push_back({{"index", i},
                    {"length", table.suborbits[i].size()},
                    {"paired_with", table.pairing[i]},
                    {"points", table.suborbits[i]}});
  }
  return json{{"base", table.base}, {"suborbits", subs}}.dump(2);
}

}  // namespace hamvt
