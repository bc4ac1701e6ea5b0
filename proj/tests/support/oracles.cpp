#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<Point> compose(const std::vector<Point>& p, const std::vector<Point>& q) {
  std::vector<Point> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

std::vector<Point> images(const Permutation& g) { return {g.images().begin(), g.images().end()}; }

}  // namespace

std::set<std::vector<Point>> closure(std::size_t degree, const std::vector<Permutation>& gens, std::size_t cap) {
  std::vector<Point> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<Point>> seen{id};
  std::deque<std::vector<Point>> queue{id};
  while (!queue.empty()) {
    auto g = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      auto h = compose(g, images(s));
      if (seen.insert(h).second) {
        if (seen.size() > cap) throw std::runtime_error("closure cap exceeded");
        queue.push_back(std::move(h));
      }
    }
  }
  return seen;
}

std::vector<Point> minimal_block(std::size_t degree, const std::vector<Permutation>& gens, Point a, Point b) {
  if (degree > 10) throw std::runtime_error("partition oracle limited to degree 10");
  // Restricted growth strings enumerate every set partition once.
  std::vector<int> label(degree, 0);
  std::vector<Point> best;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == degree) {
      if (label[a] != label[b]) return;
      for (const auto& g : gens) {
        std::vector<int> map(used, -1);
        for (Point x = 0; x < degree; ++x) {
          int& m = map[label[x]];
          if (m < 0) m = label[g(x)];
          if (m != label[g(x)]) return;
        }
      }
      std::vector<Point> block;
      for (Point x = 0; x < degree; ++x) {
        if (label[x] == label[a]) block.push_back(x);
      }
      if (best.empty() || block.size() < best.size()) best = block;
      return;
    }
    for (int l = 0; l <= used && l < static_cast<int>(degree); ++l) {
      label[i] = l;
      rec(i + 1, std::max(used, l + 1));
    }
  };
  rec(0, 0);
  return best;
}

namespace {

bool scan(const Graph& x, bool cycle) {
  const std::size_t n = x.order();
  if (n > 10) throw std::runtime_error("permutation oracle limited to 10 vertices");
  if (n == 0) return false;
  if (n == 1) return !cycle;
  if (cycle && n < 3) return false;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    if (cycle && order[0] != 0) break;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < n && ok; ++i) ok = x.adjacent(order[i], order[i + 1]);
    if (ok && (!cycle || x.adjacent(order[n - 1], order[0]))) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

}  // namespace

bool has_hamilton_cycle(const Graph& x) { return scan(x, true); }
bool has_hamilton_path(const Graph& x) { return scan(x, false); }

std::vector<std::size_t> cycle_lengths(std::size_t n, const std::vector<hamvt::Edge>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || adj[s].empty()) continue;
    std::size_t size = 0;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(size);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<hamvt::Edge> lifted_edges(const Permutation& rho, std::uint32_t p, const std::vector<Point>& cell_points,
                                      const std::vector<std::uint32_t>& choice) {
  auto rep = [&](Point v) {
    Point best = v;
    for (Point w = rho(v); w != v; w = rho(w)) best = std::min(best, w);
    return best;
  };
  auto shift = [&](Point v, std::uint32_t k) {
    for (std::uint32_t i = 0; i < k % p; ++i) v = rho(v);
    return v;
  };
  std::vector<hamvt::Edge> out;
  const std::size_t k = cell_points.size();
  for (std::size_t i = 0; i < k; ++i) {
    Point a = rep(cell_points[i]);
    Point b = rep(cell_points[(i + 1) % k]);
    for (std::uint32_t x = 0; x < p; ++x) {
      Point u = shift(a, x), w = shift(b, x + choice[i]);
      out.push_back(u < w ? hamvt::Edge{u, w} : hamvt::Edge{w, u});
    }
  }
  return out;
}

CosetTable coset_action(std::size_t degree, const std::vector<Permutation>& g_gens,
                        const std::vector<Permutation>& h_gens) {
  auto g_elems = closure(degree, g_gens);
  auto h_elems = closure(degree, h_gens);
  std::set<std::vector<std::vector<Point>>> cosets;
  for (const auto& g : g_elems) {
    std::vector<std::vector<Point>> coset;
    for (const auto& h : h_elems) coset.push_back(compose(h, g));
    std::sort(coset.begin(), coset.end());
    cosets.insert(coset);
  }
  CosetTable table;
  table.cosets.assign(cosets.begin(), cosets.end());
  std::map<std::vector<Point>, Point> first_index;
  for (Point i = 0; i < table.cosets.size(); ++i) first_index[table.cosets[i][0]] = i;
  for (const auto& s : g_gens) {
    std::vector<Point> img(table.cosets.size());
    for (Point i = 0; i < table.cosets.size(); ++i) {
      std::vector<std::vector<Point>> moved;
      for (const auto& e : table.cosets[i]) moved.push_back(compose(e, images(s)));
      img[i] = first_index.at(*std::min_element(moved.begin(), moved.end()));
    }
    table.generator_action.emplace_back(std::move(img));
  }
  return table;
}

Graph orbital_graph(std::size_t degree, const std::vector<Permutation>& gens, Point v,
                    const std::vector<std::vector<Point>>& selected_suborbits) {
  std::set<hamvt::Edge> edges;
  for (const auto& g : closure(degree, gens)) {
    for (const auto& s : selected_suborbits) {
      for (Point w : s) {
        Vertex a = g[v], b = g[w];
        if (a == b) continue;
        edges.insert(a < b ? hamvt::Edge{a, b} : hamvt::Edge{b, a});
      }
    }
  }
  std::vector<hamvt::Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(degree, list);
}

std::vector<std::vector<Point>> stabilizer_orbits(std::size_t degree, const std::vector<Permutation>& gens, Point v) {
  std::vector<std::set<Point>> reach(degree);
  for (const auto& g : closure(degree, gens)) {
    if (g[v] != v) continue;
    for (Point x = 0; x < degree; ++x) reach[x].insert(g[x]);
  }
  std::set<std::vector<Point>> orbits;
  for (Point x = 0; x < degree; ++x) orbits.insert({reach[x].begin(), reach[x].end()});
  return {orbits.begin(), orbits.end()};
}

}  // namespace oracle
