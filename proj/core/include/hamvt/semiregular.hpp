#pragma once

#include <cstdint>
#include <optional>

#include "hamvt/perm_group.hpp"

namespace hamvt {

struct SemiregularSearch {
  static constexpr std::uint64_t kDefaultSeed = 0x5eed'0006'0000'0001ULL;

  std::uint64_t seed = kDefaultSeed;
  std::size_t random_words = 10'000;
  std::size_t max_word_length = 20;
  /// Exhaustive element scan runs only when the group order is at most this.
  std::uint64_t exhaustive_cap = 1'000'000;
};

/// Looks for an element of `group` whose cycles all have length `p`.
///
/// Random words in the generators and their inverses (mt19937_64 seeded with
/// `options.seed`) are powered down to order p; if none is semiregular and the
/// group is small enough, every element is scanned in chain order. Returns
/// nullopt at once when p does not divide the group order.
std::optional<Permutation> find_semiregular(const PermGroup& group, std::uint32_t p,
                                            const SemiregularSearch& options = {});

}  // namespace hamvt
