#include "hamvt/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "hamvt/error.hpp"

namespace hamvt {

StabilizerChain::StabilizerChain(std::size_t degree, std::span<const Permutation> generators,
                                 std::span<const Point> base_prefix)
    : degree_(degree), prefix_(base_prefix.begin(), base_prefix.end()) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorCode::DegreeMismatch, "generator degree differs from chain degree");
  }
  for (Point b : prefix_) {
    if (b >= degree) throw Error(ErrorCode::InvalidPermutation, "base point out of range");
    StabilizerLevel level;
    level.base = b;
    levels_.push_back(std::move(level));
  }
  for (const auto& g : generators) {
    if (g.is_identity()) continue;
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(), [&](const auto& l) { return g(l.base) == l.base; });
    if (fixes_base) add_level(g);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    for (const auto& g : generators) {
      if (g.is_identity()) continue;
      bool fixes_prefix = true;
      for (std::size_t e = 0; e < l && fixes_prefix; ++e) fixes_prefix = g(levels_[e].base) == levels_[e].base;
      if (fixes_prefix) levels_[l].generators.push_back(g);
    }
    rebuild_orbit(levels_[l]);
  }

  // Schreier-Sims completion: every Schreier generator of level i must sift
  // through the levels below it.
  auto i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    const auto level_index = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; !extended && oi < levels_[level_index].orbit.size(); ++oi) {
      for (std::size_t gi = 0; !extended && gi < levels_[level_index].generators.size(); ++gi) {
        const StabilizerLevel& level = levels_[level_index];
        Point beta = level.orbit[oi];
        const Permutation& x = level.generators[gi];
        Permutation schreier = *level.transversal[beta] * x * level.transversal[x(beta)]->inverse();
        if (schreier.is_identity()) continue;
        auto [residue, failed_at] = sift(std::move(schreier), level_index + 1);
        if (failed_at == levels_.size() && residue.is_identity()) continue;
        if (failed_at == levels_.size()) add_level(residue);
        for (std::size_t l = level_index + 1; l <= failed_at; ++l) {
          levels_[l].generators.push_back(residue);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<std::ptrdiff_t>(failed_at);
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

void StabilizerChain::add_level(const Permutation& moved_by) {
  StabilizerLevel level;
  for (Point x = 0; x < degree_; ++x) {
    if (moved_by(x) != x) {
      level.base = x;
      break;
    }
  }
  levels_.push_back(std::move(level));
  rebuild_orbit(levels_.back());
}

void StabilizerChain::rebuild_orbit(StabilizerLevel& level) const {
  level.orbit.assign(1, level.base);
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.base] = Permutation::identity(degree_);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    Point x = level.orbit[head];
    for (const auto& g : level.generators) {
      Point y = g(x);
      if (!level.transversal[y]) {
        level.transversal[y] = *level.transversal[x] * g;
        level.orbit.push_back(y);
      }
    }
  }
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) {
    std::uint64_t len = level.orbit.size();
    if (result > UINT64_MAX / len) throw Error(ErrorCode::Overflow, "group order exceeds 64 bits");
    result *= len;
  }
  return result;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t from_level) const {
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    const auto& level = levels_[l];
    Point beta = g(level.base);
    if (!level.transversal[beta]) return {std::move(g), l};
    g = g * level.transversal[beta]->inverse();
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, failed_at] = sift(g);
  return failed_at == levels_.size() && residue.is_identity();
}

void StabilizerChain::for_each_element(const std::function<bool(const Permutation&)>& visit) const {
  // g = u_{k-1} * ... * u_1 * u_0 with u_l from the transversal of level l.
  std::function<bool(std::ptrdiff_t, const Permutation&)> walk = [&](std::ptrdiff_t l, const Permutation& acc) {
    if (l < 0) return visit(acc);
    const auto& level = levels_[static_cast<std::size_t>(l)];
    for (Point x : level.orbit) {
      if (!walk(l - 1, acc * *level.transversal[x])) return false;
    }
    return true;
  };
  walk(static_cast<std::ptrdiff_t>(levels_.size()) - 1, Permutation::identity(degree_));
}

std::vector<Permutation> StabilizerChain::stabilizer_generators(std::size_t level) const {
  if (level >= levels_.size()) return {};
  return levels_[level].generators;
}

struct PermGroup::ChainCache {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), cache_(std::make_shared<ChainCache>()) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw Error(ErrorCode::DegreeMismatch, "generator degree differs from group degree");
  }
}

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once, [&] { cache_->chain = std::make_unique<StabilizerChain>(degree_, generators_); });
  return *cache_->chain;
}

std::vector<Point> PermGroup::orbit(Point v) const {
  std::vector<Point> out{v};
  std::vector<bool> seen(degree_, false);
  seen[v] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators_) {
      Point y = g(out[head]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(degree_, false);
  for (Point v = 0; v < degree_; ++v) {
    if (seen[v]) continue;
    auto o = orbit(v);
    for (Point x : o) seen[x] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool PermGroup::is_transitive() const { return degree_ > 0 && orbit(0).size() == degree_; }

std::vector<std::vector<Point>> orbits(const PermGroup& group) { return group.orbits(); }

PermGroup point_stabilizer(const PermGroup& group, Point v) {
  if (v >= group.degree()) throw Error(ErrorCode::InvalidPermutation, "point out of range");
  const Point prefix[] = {v};
  StabilizerChain chain(group.degree(), group.generators(), prefix);
  return PermGroup(group.degree(), chain.stabilizer_generators(1));
}

std::vector<std::optional<Permutation>> orbit_transversal(const PermGroup& group, Point v) {
  std::vector<std::optional<Permutation>> rep(group.degree());
  rep[v] = Permutation::identity(group.degree());
  std::deque<Point> queue{v};
  while (!queue.empty()) {
    Point x = queue.front();
    queue.pop_front();
    for (const auto& g : group.generators()) {
      Point y = g(x);
      if (!rep[y]) {
        rep[y] = *rep[x] * g;
        queue.push_back(y);
      }
    }
  }
  return rep;
}

}  // namespace hamvt
