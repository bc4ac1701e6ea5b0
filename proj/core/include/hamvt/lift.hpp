#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamvt/graph.hpp"
#include "hamvt/hamilton.hpp"
#include "hamvt/permutation.hpp"

namespace hamvt {

/// Orbits of an (m,p)-semiregular automorphism rho, with positions.
///
/// `cells[i][j]` is rep_i^{rho^j} where rep_i = cells[i][0] is the least
/// vertex of the orbit; cells are ordered by representative.
struct SemiregularDecomposition {
  Permutation rho;
  std::uint32_t p = 0;
  std::vector<std::vector<Vertex>> cells;
  std::vector<std::uint32_t> cell_of;
  std::vector<std::uint32_t> exponent_of;

  std::size_t m() const noexcept { return cells.size(); }
  Vertex representative(std::size_t cell) const { return cells[cell][0]; }
  Vertex at(std::size_t cell, std::uint32_t exponent) const { return cells[cell][exponent % p]; }
};

/// Throws Error{NotAutomorphism} if rho does not preserve edges and
/// Error{NotSemiregular} unless every cycle of rho has length p.
SemiregularDecomposition decompose(const Graph& x, const Permutation& rho, std::uint32_t p);

/// Voltages over Z_p of the quotient edges.
///
/// voltages(A, B) = { j : rep(A) ~ rep(B)^{rho^j} }, so walking A -> B with
/// voltage j moves from (A, x) to (B, x + j); walking back contributes -j.
/// |voltages(A, B)| = d(A, B); voltages(A, A) lists the internal edges.
class VoltageAssignment {
 public:
  VoltageAssignment(const Graph& x, const SemiregularDecomposition& dec);

  std::size_t cells() const noexcept { return cells_; }
  std::uint32_t p() const noexcept { return p_; }
  const std::vector<std::uint32_t>& voltages(std::size_t a, std::size_t b) const { return table_[a * cells_ + b]; }
  bool allows(std::size_t a, std::size_t b, std::uint32_t j) const;

 private:
  std::size_t cells_;
  std::uint32_t p_;
  std::vector<std::vector<std::uint32_t>> table_;
};

/// Net voltage of a closed quotient walk cycle[0] -> cycle[1] -> ... ->
/// cycle[0], where choice[i] is the voltage used on the step leaving
/// cycle[i]. Nonzero iff the lift is a single cycle of length k*p.
/// Throws Error{InvalidChoice}.
std::uint32_t cycle_voltage(const SemiregularDecomposition& dec, const VoltageAssignment& volt,
                            const std::vector<std::size_t>& quotient_cycle, const std::vector<std::uint32_t>& choice);

/// The closed walk in X obtained by following the lifted quotient walk from
/// (cycle[0], 0) until it returns; it has k*p vertices when the net voltage
/// is nonzero and k vertices otherwise.
std::vector<Vertex> lift_walk(const SemiregularDecomposition& dec, const std::vector<std::size_t>& quotient_cycle,
                              const std::vector<std::uint32_t>& choice);

struct LiftOptions {
  std::uint64_t max_choices_per_cycle = 1'000'000;
  std::uint64_t max_quotient_cycles = 100'000;
  std::uint64_t quotient_search_budget = 10'000'000;
};

struct LiftOutcome {
  std::optional<HamiltonCertificate> certificate;
  std::vector<std::size_t> quotient_cycle;  ///< the quotient cycle that lifted
  std::vector<std::uint32_t> choice;
  std::uint64_t quotient_cycles_tried = 0;
  bool exhausted = true;  ///< false if a cap stopped the search early
};

/// Lifts a Hamilton cycle of the quotient by rho to a Hamilton cycle of X.
/// Handles m = 1 (rep ~ rep^{rho^j}, p >= 3) and m = 2 (two distinct
/// parallel voltages) directly; otherwise enumerates quotient Hamilton
/// cycles and voltage choices in lexicographic order.
LiftOutcome lift_hamilton_detailed(const Graph& x, const Permutation& rho, std::uint32_t p, const LiftOptions& options = {});

std::optional<HamiltonCertificate> lift_hamilton(const Graph& x, const Permutation& rho, std::uint32_t p,
                                                 const LiftOptions& options = {});

}  // namespace hamvt
