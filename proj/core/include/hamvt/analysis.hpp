#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamvt/gf2k.hpp"
#include "hamvt/graph.hpp"
#include "hamvt/hamilton.hpp"
#include "hamvt/orbital.hpp"
#include "hamvt/perm_group.hpp"
#include "hamvt/semiregular.hpp"

namespace hamvt {

struct AnalyzeOptions {
  std::uint64_t budget = SearchOptions::kDefaultBudget;
  std::uint64_t seed = SemiregularSearch::kDefaultSeed;
};

enum class Verdict { certificate, no_hamilton_cycle, unknown };

struct StrategyStep {
  std::string strategy;
  std::string outcome;
  std::string detail;
};

struct AnalysisReport {
  std::size_t order = 0;
  std::size_t size = 0;
  bool connected = false;
  std::optional<std::size_t> valency;
  bool group_supplied = false;
  std::uint64_t group_order = 0;
  bool vertex_transitive = false;
  /// Cell size of every nontrivial block system (ascending).
  std::vector<std::size_t> block_cell_sizes;
  /// "|B|=p", "|B|=2p", ... for orders 6p with p prime.
  std::vector<std::string> case_labels;
  std::vector<StrategyStep> trace;
  Verdict result = Verdict::unknown;
  std::optional<HamiltonCertificate> certificate;
  std::string reason;
  bool exception_flag = false;
};

/// Runs the cascade: group checks, block systems, structural obstructions,
/// lifting through semiregular p-elements, the Jackson condition, and the
/// exact solver. Throws Error{GroupDegreeMismatch} and
/// Error{GroupNotAutomorphisms}.
AnalysisReport analyze(const Graph& x, const std::optional<PermGroup>& group, const AnalyzeOptions& options = {});

/// Cubic, 30 vertices, each vertex in exactly one triangle, and the triangle
/// quotient is cubic of girth 5 on 10 vertices (hence the Petersen graph).
bool is_truncated_petersen(const Graph& x);

std::string report_to_json(const AnalysisReport& report);
std::string_view to_string(Verdict v) noexcept;

struct FieldRow {
  FieldElem c = 0;
  std::uint32_t log_c = 0;
  std::uint64_t count = 0;            ///< all (a, y)
  std::uint64_t count_y_nonzero = 0;  ///< y != 0 only
  bool weil = false;                  ///< count passes the bound with d = 6
};

struct FieldTable {
  unsigned k = 0;
  std::uint32_t q = 0;
  std::uint32_t modulus = 0;
  std::uint32_t m = 0;
  std::vector<FieldRow> rows;  ///< c = theta^0, theta^1, ...
  std::uint64_t min_count = 0;
  bool all_weil = true;
};

/// Solution counts for every nonzero c. Uses full enumeration for k <= 10
/// and count_eq2_all above that. Throws Error{DegreeOutOfRange} unless
/// 2 <= k <= 16 and Error{ReducibleQuadratic} for a bad m.
FieldTable field_table(unsigned k, std::optional<std::uint32_t> m = std::nullopt);
std::string field_table_json(const FieldTable& table);

std::string suborbit_table_json(const SuborbitTable& table);

}  // namespace hamvt
