#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hamvt {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1} stored as its image array.
///
/// Groups act on the right: `p * q` first applies `p`, then `q`, so
/// `(p * q)(x) == q(p(x))`. This matches the exponent notation x^{pq}
/// used for right cosets and orbital graphs throughout the library.
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error{InvalidPermutation} unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  /// Nontrivial cycles, each starting at its least point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Lengths of all cycles including fixed points, in ascending order.
  std::vector<std::size_t> cycle_type() const;

  /// Least k >= 1 with this^k = identity (lcm of cycle lengths).
  std::uint64_t order() const;

  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

/// Least k >= 1 with g^k = identity.
inline std::uint64_t perm_order(const Permutation& g) { return g.order(); }

/// True iff every cycle of `g` has length exactly `p` (so `g` is (n/p, p)-semiregular).
bool is_semiregular(const Permutation& g, std::uint32_t p);

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept;
};

}  // namespace hamvt
