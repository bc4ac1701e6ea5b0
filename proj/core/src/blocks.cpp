#include "hamvt/blocks.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <utility>

#include "hamvt/error.hpp"

namespace hamvt {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Point{0}); }

  Point find(Point x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller root so the representative is deterministic.
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Point> parent_;
};

void require_transitive(const PermGroup& group) {
  if (!group.is_transitive()) throw Error(ErrorCode::NotTransitive, "group is not transitive");
}

}  // namespace

std::vector<Point> minimal_block(const PermGroup& group, Point a, Point b) {
  require_transitive(group);
  const std::size_t n = group.degree();
  if (a >= n || b >= n || a == b) throw Error(ErrorCode::BadParams, "minimal_block needs two distinct points");

  UnionFind classes(n);
  std::vector<std::pair<Point, Point>> pending{{a, b}};
  classes.unite(a, b);
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    for (const auto& g : group.generators()) {
      Point gx = classes.find(g(x));
      Point gy = classes.find(g(y));
      if (gx != gy) {
        classes.unite(gx, gy);
        pending.emplace_back(gx, gy);
      }
    }
  }
  std::vector<Point> block;
  Point root = classes.find(a);
  for (Point x = 0; x < n; ++x) {
    if (classes.find(x) == root) block.push_back(x);
  }
  return block;
}

BlockSystem block_system_of(const PermGroup& group, const std::vector<Point>& block) {
  const std::size_t n = group.degree();
  std::vector<std::ptrdiff_t> cell_of(n, -1);
  BlockSystem system;
  system.cell_size = block.size();
  auto add_cell = [&](std::vector<Point> cell) -> bool {
    std::sort(cell.begin(), cell.end());
    std::ptrdiff_t existing = cell_of[cell.front()];
    if (existing >= 0) {
      if (system.cells[static_cast<std::size_t>(existing)] != cell) {
        throw Error(ErrorCode::InvalidPartition, "set is not a block of the group");
      }
      return false;
    }
    for (Point x : cell) {
      if (cell_of[x] >= 0) throw Error(ErrorCode::InvalidPartition, "set is not a block of the group");
      cell_of[x] = static_cast<std::ptrdiff_t>(system.cells.size());
    }
    system.cells.push_back(std::move(cell));
    return true;
  };
  add_cell(block);
  for (std::size_t head = 0; head < system.cells.size(); ++head) {
    for (const auto& g : group.generators()) {
      std::vector<Point> image;
      image.reserve(system.cells[head].size());
      for (Point x : system.cells[head]) image.push_back(g(x));
      add_cell(std::move(image));
    }
  }
  std::sort(system.cells.begin(), system.cells.end());
  return system;
}

bool is_invariant(const PermGroup& group, const std::vector<std::vector<Point>>& cells) {
  std::vector<std::ptrdiff_t> cell_of(group.degree(), -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (Point x : cells[c]) cell_of[x] = static_cast<std::ptrdiff_t>(c);
  }
  for (const auto& g : group.generators()) {
    for (const auto& cell : cells) {
      std::ptrdiff_t target = cell_of[g(cell.front())];
      for (Point x : cell) {
        if (cell_of[g(x)] != target) return false;
      }
    }
  }
  return true;
}

std::vector<BlockSystem> block_systems(const PermGroup& group) {
  require_transitive(group);
  std::vector<BlockSystem> systems;
  const std::size_t n = group.degree();
  for (Point b = 1; b < n; ++b) {
    auto block = minimal_block(group, 0, b);
    if (block.size() == n) continue;
    BlockSystem system = block_system_of(group, block);
    if (std::find(systems.begin(), systems.end(), system) != systems.end()) continue;
    if (!is_invariant(group, system.cells)) {
      throw Error(ErrorCode::InvalidPartition, "computed block system is not invariant");
    }
    systems.push_back(std::move(system));
  }
  std::sort(systems.begin(), systems.end(), [](const BlockSystem& x, const BlockSystem& y) {
    return std::tie(x.cell_size, x.cells) < std::tie(y.cell_size, y.cells);
  });
  return systems;
}

}  // namespace hamvt
