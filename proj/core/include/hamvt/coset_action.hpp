#pragma once

#include <unordered_set>
#include <vector>

#include "hamvt/perm_group.hpp"

namespace hamvt {

/// Action of a group on the right cosets Hx of a subgroup H.
///
/// Coset 0 is H itself; `representatives()[i]` is the element x with coset
/// i equal to Hx, discovered breadth-first over the generators of G.
class CosetAction {
 public:
  /// Throws Error{SubgroupNotContained} unless every element of
  /// `subgroup_generators` lies in `group`.
  CosetAction(const PermGroup& group, std::vector<Permutation> subgroup_generators);

  std::size_t degree() const noexcept { return reps_.size(); }
  const PermGroup& action() const noexcept { return action_; }
  const PermGroup& subgroup() const noexcept { return subgroup_; }
  const std::vector<Permutation>& representatives() const noexcept { return reps_; }

  /// Index of the coset Hx.
  std::size_t coset_of(const Permutation& x) const;

  /// The permutation of cosets Hy -> Hyg induced by any element g of G.
  Permutation act(const Permutation& g) const;

 private:
  bool in_subgroup(const Permutation& g) const;

  PermGroup subgroup_;
  std::vector<Permutation> subgroup_elements_;  // empty when H is large
  std::unordered_set<Permutation, PermutationHash> subgroup_set_;
  std::vector<Permutation> reps_;
  PermGroup action_;
};

/// Convenience wrapper: the permutation group of G acting on cosets of H.
CosetAction coset_action(const PermGroup& group, const std::vector<Permutation>& subgroup_generators);

}  // namespace hamvt
