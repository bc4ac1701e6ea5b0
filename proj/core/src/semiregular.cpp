#include "hamvt/semiregular.hpp"

#include <random>

namespace hamvt {

std::optional<Permutation> find_semiregular(const PermGroup& group, std::uint32_t p,
                                            const SemiregularSearch& options) {
  const std::size_t n = group.degree();
  if (p < 2 || n == 0 || n % p != 0) return std::nullopt;
  if (group.order() % p != 0) return std::nullopt;

  std::vector<Permutation> letters;
  for (const auto& g : group.generators()) {
    if (g.is_identity()) continue;
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  if (letters.empty()) return std::nullopt;

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick_letter(0, letters.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_length(1, options.max_word_length);
  for (std::size_t word = 0; word < options.random_words; ++word) {
    Permutation g = Permutation::identity(n);
    for (std::size_t len = pick_length(rng); len > 0; --len) g = g * letters[pick_letter(rng)];
    std::uint64_t order = g.order();
    if (order % p != 0) continue;
    Permutation h = g.pow(static_cast<std::int64_t>(order / p));
    if (is_semiregular(h, p)) return h;
  }

  if (group.order() > options.exhaustive_cap) return std::nullopt;
  std::optional<Permutation> found;
  group.for_each_element([&](const Permutation& g) {
    if (is_semiregular(g, p)) {
      found = g;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace hamvt
