#include "hamvt/lift.hpp"

#include <algorithm>
#include <functional>

#include "hamvt/error.hpp"

namespace hamvt {

SemiregularDecomposition decompose(const Graph& x, const Permutation& rho, std::uint32_t p) {
  if (rho.degree() != x.order()) throw Error(ErrorCode::DegreeMismatch, "rho degree differs from graph order");
  if (!is_automorphism(x, rho)) throw Error(ErrorCode::NotAutomorphism, "rho does not preserve the edge set");
  if (!is_semiregular(rho, p)) throw Error(ErrorCode::NotSemiregular, "rho is not (m,p)-semiregular");

  SemiregularDecomposition dec;
  dec.rho = rho;
  dec.p = p;
  const std::size_t n = x.order();
  dec.cell_of.assign(n, 0);
  dec.exponent_of.assign(n, 0);
  std::vector<bool> seen(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[v]) continue;
    std::vector<Vertex> cell;
    Vertex w = v;
    for (std::uint32_t j = 0; j < p; ++j, w = rho(w)) {
      seen[w] = true;
      dec.cell_of[w] = static_cast<std::uint32_t>(dec.cells.size());
      dec.exponent_of[w] = j;
      cell.push_back(w);
    }
    dec.cells.push_back(std::move(cell));
  }
  return dec;
}

VoltageAssignment::VoltageAssignment(const Graph& x, const SemiregularDecomposition& dec)
    : cells_(dec.m()), p_(dec.p), table_(cells_ * cells_) {
  for (std::size_t a = 0; a < cells_; ++a) {
    for (Vertex w : x.neighbors(dec.representative(a))) {
      table_[a * cells_ + dec.cell_of[w]].push_back(dec.exponent_of[w]);
    }
  }
  for (auto& v : table_) std::sort(v.begin(), v.end());
}

bool VoltageAssignment::allows(std::size_t a, std::size_t b, std::uint32_t j) const {
  const auto& v = voltages(a, b);
  return std::binary_search(v.begin(), v.end(), j);
}

std::uint32_t cycle_voltage(const SemiregularDecomposition& dec, const VoltageAssignment& volt,
                            const std::vector<std::size_t>& quotient_cycle, const std::vector<std::uint32_t>& choice) {
  const std::size_t k = quotient_cycle.size();
  if (k == 0 || choice.size() != k) throw Error(ErrorCode::InvalidChoice, "one voltage per quotient edge is required");
  std::uint64_t net = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t a = quotient_cycle[i];
    std::size_t b = quotient_cycle[(i + 1) % k];
    if (a >= dec.m() || b >= dec.m() || !volt.allows(a, b, choice[i] % dec.p)) {
      throw Error(ErrorCode::InvalidChoice, "chosen voltage is not carried by the quotient edge");
    }
    net += choice[i] % dec.p;
  }
  return static_cast<std::uint32_t>(net % dec.p);
}

std::vector<Vertex> lift_walk(const SemiregularDecomposition& dec, const std::vector<std::size_t>& quotient_cycle,
                              const std::vector<std::uint32_t>& choice) {
  const std::size_t k = quotient_cycle.size();
  std::vector<Vertex> walk;
  std::uint32_t shift = 0;
  do {
    for (std::size_t i = 0; i < k; ++i) {
      walk.push_back(dec.at(quotient_cycle[i], shift));
      shift = static_cast<std::uint32_t>((shift + choice[i]) % dec.p);
    }
  } while (shift != 0);
  return walk;
}

namespace {

// Lexicographic search for voltages with nonzero sum; returns false when
// none exists or the cap is reached.
bool choose_nonzero(const VoltageAssignment& volt, const std::vector<std::size_t>& cycle, std::uint64_t cap,
                    std::vector<std::uint32_t>& choice) {
  const std::size_t k = cycle.size();
  const std::uint32_t p = volt.p();
  std::uint64_t tried = 0;
  choice.assign(k, 0);
  std::function<bool(std::size_t, std::uint32_t)> pick = [&](std::size_t i, std::uint32_t sum) {
    if (i == k) {
      ++tried;
      return sum != 0;
    }
    for (std::uint32_t j : volt.voltages(cycle[i], cycle[(i + 1) % k])) {
      if (tried >= cap) return false;
      choice[i] = j;
      if (pick(i + 1, (sum + j) % p)) return true;
    }
    return false;
  };
  return pick(0, 0);
}

}  // namespace

LiftOutcome lift_hamilton_detailed(const Graph& x, const Permutation& rho, std::uint32_t p, const LiftOptions& options) {
  SemiregularDecomposition dec = decompose(x, rho, p);
  VoltageAssignment volt(x, dec);
  LiftOutcome out;
  auto accept = [&](std::vector<std::size_t> cycle, std::vector<std::uint32_t> choice) {
    HamiltonCertificate cert{CertificateKind::cycle, lift_walk(dec, cycle, choice)};
    if (!verify_hamilton(x, cert)) return false;
    out.certificate = std::move(cert);
    out.quotient_cycle = std::move(cycle);
    out.choice = std::move(choice);
    return true;
  };

  const std::size_t m = dec.m();
  if (m == 1) {
    const auto& internal = volt.voltages(0, 0);
    if (p >= 3 && !internal.empty()) {
      out.quotient_cycles_tried = 1;
      accept({0}, {internal.front()});
    }
    return out;
  }
  if (m == 2) {
    const auto& between = volt.voltages(0, 1);
    if (between.size() >= 2) {
      out.quotient_cycles_tried = 1;
      // A -> B on between[0], back B -> A on the parallel class between[1].
      accept({0, 1}, {between[0], (p - between[1]) % p});
    }
    return out;
  }

  std::vector<Edge> edges;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (!volt.voltages(a, b).empty()) edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  Graph quotient = Graph::from_edges(m, edges);
  std::vector<std::uint32_t> choice;
  SearchStatus status = for_each_hamilton_cycle(
      quotient,
      [&](const std::vector<Vertex>& qc) {
        if (out.quotient_cycles_tried >= options.max_quotient_cycles) {
          out.exhausted = false;
          return false;
        }
        ++out.quotient_cycles_tried;
        std::vector<std::size_t> cycle(qc.begin(), qc.end());
        if (choose_nonzero(volt, cycle, options.max_choices_per_cycle, choice) && accept(cycle, choice)) return false;
        return true;
      },
      options.quotient_search_budget);
  if (status == SearchStatus::unknown) out.exhausted = false;
  return out;
}

std::optional<HamiltonCertificate> lift_hamilton(const Graph& x, const Permutation& rho, std::uint32_t p,
                                                 const LiftOptions& options) {
  return lift_hamilton_detailed(x, rho, p, options).certificate;
}

}  // namespace hamvt
