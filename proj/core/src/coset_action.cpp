#include "hamvt/coset_action.hpp"

#include <algorithm>
#include <unordered_map>

#include "hamvt/error.hpp"

namespace hamvt {
namespace {

constexpr std::uint64_t kEnumerateSubgroupUpTo = 100'000;

}  // namespace

CosetAction::CosetAction(const PermGroup& group, std::vector<Permutation> subgroup_generators)
    : subgroup_(group.degree(), std::move(subgroup_generators)) {
  for (const auto& h : subgroup_.generators()) {
    if (!group.contains(h)) throw Error(ErrorCode::SubgroupNotContained, "subgroup generator not in group");
  }
  if (subgroup_.order() <= kEnumerateSubgroupUpTo) {
    subgroup_.for_each_element([&](const Permutation& h) {
      subgroup_elements_.push_back(h);
      subgroup_set_.insert(h);
      return true;
    });
  }

  // Canonical key of Hx: the least element of the coset (small H only).
  std::unordered_map<Permutation, std::size_t, PermutationHash> index_of_key;
  auto key_of = [&](const Permutation& x) {
    Permutation best = subgroup_elements_.front() * x;
    for (const auto& h : subgroup_elements_) best = std::min(best, h * x);
    return best;
  };
  auto lookup = [&](const Permutation& x) -> std::ptrdiff_t {
    if (!subgroup_elements_.empty()) {
      auto it = index_of_key.find(key_of(x));
      return it == index_of_key.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
    }
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      if (in_subgroup(x * reps_[i].inverse())) return static_cast<std::ptrdiff_t>(i);
    }
    return -1;
  };
  auto insert = [&](const Permutation& x) {
    if (!subgroup_elements_.empty()) index_of_key.emplace(key_of(x), reps_.size());
    reps_.push_back(x);
  };

  insert(Permutation::identity(group.degree()));
  std::vector<std::vector<Point>> images(group.generators().size());
  for (std::size_t head = 0; head < reps_.size(); ++head) {
    for (std::size_t gi = 0; gi < group.generators().size(); ++gi) {
      Permutation y = reps_[head] * group.generators()[gi];
      std::ptrdiff_t found = lookup(y);
      if (found < 0) {
        found = static_cast<std::ptrdiff_t>(reps_.size());
        insert(y);
      }
      images[gi].push_back(static_cast<Point>(found));
    }
  }

  std::vector<Permutation> action_generators;
  for (auto& img : images) action_generators.emplace_back(std::move(img));
  action_ = PermGroup(reps_.size(), std::move(action_generators));
  if (group.order() != reps_.size() * subgroup_.order()) {
    throw Error(ErrorCode::SubgroupNotContained, "coset count disagrees with the index of the subgroup");
  }
}

bool CosetAction::in_subgroup(const Permutation& g) const {
  if (!subgroup_elements_.empty()) {
    return subgroup_set_.contains(g);
  }
  return subgroup_.contains(g);
}

std::size_t CosetAction::coset_of(const Permutation& x) const {
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    if (in_subgroup(x * reps_[i].inverse())) return i;
  }
  throw Error(ErrorCode::SubgroupNotContained, "element does not lie in the acting group");
}

Permutation CosetAction::act(const Permutation& g) const {
  std::vector<Point> images(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) images[i] = static_cast<Point>(coset_of(reps_[i] * g));
  return Permutation(std::move(images));
}

CosetAction coset_action(const PermGroup& group, const std::vector<Permutation>& subgroup_generators) {
  return CosetAction(group, subgroup_generators);
}

}  // namespace hamvt
