#pragma once

#include <vector>

#include "hamvt/perm_group.hpp"

namespace hamvt {

/// A G-invariant partition of the points into cells of equal size.
struct BlockSystem {
  std::vector<std::vector<Point>> cells;  ///< each sorted; ordered by least point
  std::size_t cell_size = 0;

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
};

/// Smallest block of the transitive group `group` containing `a` and `b`
/// (union-find refinement). Sorted. Throws Error{NotTransitive}.
std::vector<Point> minimal_block(const PermGroup& group, Point a, Point b);

/// Images of `block` under the group; throws Error{InvalidPartition} if they
/// overlap without coinciding (i.e. `block` is not a block).
BlockSystem block_system_of(const PermGroup& group, const std::vector<Point>& block);

/// True iff every generator maps every cell onto a cell.
bool is_invariant(const PermGroup& group, const std::vector<std::vector<Point>>& cells);

/// The distinct nontrivial systems arising as minimal_block(0, b), b != 0,
/// ordered by cell size then by cells. Empty for primitive groups.
std::vector<BlockSystem> block_systems(const PermGroup& group);

}  // namespace hamvt
