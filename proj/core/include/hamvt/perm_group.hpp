#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hamvt/permutation.hpp"

namespace hamvt {

/// One level of a stabilizer chain: the orbit of `base` under the strong
/// generators fixing all earlier base points, with a transversal
/// (`transversal[x]` maps `base` to `x`).
struct StabilizerLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<std::optional<Permutation>> transversal;
};

/// Deterministic Schreier-Sims stabilizer chain.
///
/// The base starts with `base_prefix` (in order) and is extended with the
/// least point moved by each new strong generator.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                  std::span<const Point> base_prefix = {});

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<StabilizerLevel>& levels() const noexcept { return levels_; }

  /// Throws Error{Overflow} past 2^64 - 1.
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;

  /// Strips `g` through the levels starting at `from_level`. Returns the
  /// residue and the index of the level where stripping failed
  /// (levels().size() if it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from_level = 0) const;

  /// Visits every group element exactly once, in a deterministic order.
  /// The visitor returns false to stop early.
  void for_each_element(const std::function<bool(const Permutation&)>& visit) const;

  /// Generators of the stabilizer of the first `level` base points.
  std::vector<Permutation> stabilizer_generators(std::size_t level) const;

 private:
  void rebuild_orbit(StabilizerLevel& level) const;
  void add_level(const Permutation& moved_by);

  std::size_t degree_;
  std::vector<Point> prefix_;
  std::vector<StabilizerLevel> levels_;
};

/// A permutation group given by generators, with a lazily built stabilizer
/// chain (base 0, 1, 2, ...). Copies share the chain cache; the cache is
/// built once and is safe to query concurrently.
class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}

  /// Throws Error{DegreeMismatch} if a generator has another degree.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }

  const StabilizerChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool contains(const Permutation& g) const { return chain().contains(g); }

  /// Orbit partition; each cell sorted, cells ordered by least point.
  std::vector<std::vector<Point>> orbits() const;
  std::vector<Point> orbit(Point v) const;
  bool is_transitive() const;

  /// Visits every element (see StabilizerChain::for_each_element).
  void for_each_element(const std::function<bool(const Permutation&)>& visit) const {
    chain().for_each_element(visit);
  }

 private:
  struct ChainCache;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<ChainCache> cache_;
};

std::vector<std::vector<Point>> orbits(const PermGroup& group);
inline std::uint64_t group_order(const PermGroup& group) { return group.order(); }

/// Generators of G_v (strong generators of a chain with base starting at v).
PermGroup point_stabilizer(const PermGroup& group, Point v);

/// Transversal of the orbit of `v`, built breadth-first over the generators
/// in order: result[x] maps v to x, or is empty when x is not in the orbit.
std::vector<std::optional<Permutation>> orbit_transversal(const PermGroup& group, Point v);

}  // namespace hamvt
