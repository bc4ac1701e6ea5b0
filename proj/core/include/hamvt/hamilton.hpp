#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hamvt/graph.hpp"

namespace hamvt {

enum class CertificateKind { cycle, path };

/// A vertex sequence claimed to be a Hamilton cycle or path.
struct HamiltonCertificate {
  CertificateKind kind = CertificateKind::cycle;
  std::vector<Vertex> sequence;

  friend bool operator==(const HamiltonCertificate&, const HamiltonCertificate&) = default;
};

/// Linear-time check of a certificate against the graph.
bool verify_hamilton(const Graph& x, const HamiltonCertificate& cert);

enum class SearchStatus { found, none, unknown };

struct SearchOptions {
  static constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

  /// Search nodes (backtracking) or subset states (dynamic programming)
  /// before giving up with `unknown`.
  std::uint64_t budget = kDefaultBudget;
  /// Use subset dynamic programming for n <= 24.
  bool allow_dp = true;
};

struct SearchResult {
  SearchStatus status = SearchStatus::unknown;
  std::optional<HamiltonCertificate> certificate;
  std::uint64_t nodes = 0;
};

/// Exact and deterministic: `none` only after the search space is exhausted.
SearchResult find_hamilton_cycle(const Graph& x, const SearchOptions& options = {});

/// Same trichotomy for Hamilton paths (cycle search on X plus an apex).
SearchResult find_hamilton_path(const Graph& x, const SearchOptions& options = {});

/// Calls `visit` once per undirected Hamilton cycle (starting at the start
/// vertex, with the second vertex smaller than the last) in backtracking
/// order until it returns false. Returns `unknown` when the budget ran out,
/// `found` if any cycle was visited, `none` otherwise.
SearchStatus for_each_hamilton_cycle(const Graph& x, const std::function<bool(const std::vector<Vertex>&)>& visit,
                                     std::uint64_t budget = SearchOptions::kDefaultBudget);

/// 2-connected, regular, and 3 * valency >= n.
bool jackson_condition(const Graph& x);

}  // namespace hamvt
