#include "hamvt/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace hamvt {
namespace {

using Word = std::uint64_t;

class VertexSet {
 public:
  explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void insert(Vertex v) { words_[v >> 6] |= Word{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(Word{1} << (v & 63)); }
  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
  std::size_t count_common(const VertexSet& other) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      for (Word w = words_[i]; w; w &= w - 1) f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }

 private:
  std::vector<Word> words_;
};

Vertex min_degree_vertex(const Graph& x) {
  Vertex best = 0;
  for (Vertex v = 1; v < x.order(); ++v) {
    if (x.degree(v) < x.degree(best)) best = v;
  }
  return best;
}

bool obviously_without_cycle(const Graph& x) {
  if (x.order() < 3) return true;
  for (Vertex v = 0; v < x.order(); ++v) {
    if (x.degree(v) < 2) return true;
  }
  return !is_connected(x) || !articulation_points(x).empty();
}

// Path-extension backtracking from a fixed start vertex. Prunes with
// degree-2 forcing at both path ends and by requiring the unvisited
// vertices plus the two ends (joined by a virtual edge) to be 2-connected.
class CycleSearch {
 public:
  CycleSearch(const Graph& x, std::uint64_t budget) : x_(x), n_(x.order()), budget_(budget), unvisited_(n_) {
    adjacency_.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      VertexSet s(n_);
      for (Vertex w : x.neighbors(v)) s.insert(w);
      adjacency_.push_back(std::move(s));
    }
    disc_.assign(n_, 0);
    low_.assign(n_, 0);
  }

  void run(const std::function<bool(const std::vector<Vertex>&)>& visit, bool report_each_orientation_once) {
    visit_ = &visit;
    once_ = report_each_orientation_once;
    start_ = min_degree_vertex(x_);
    for (Vertex v = 0; v < n_; ++v) unvisited_.insert(v);
    unvisited_.erase(start_);
    remaining_ = n_ - 1;
    path_.assign(1, start_);
    extend();
  }

  bool aborted() const { return aborted_; }
  bool stopped() const { return stopped_; }
  bool any_found() const { return found_any_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t available(Vertex v, Vertex end) const {
    std::size_t a = adjacency_[v].count_common(unvisited_);
    if (x_.adjacent(v, end)) ++a;
    if (end != start_ && x_.adjacent(v, start_)) ++a;
    return a;
  }

  void extend() {
    if (stopped_ || aborted_) return;
    if (++nodes_ > budget_) {
      aborted_ = true;
      return;
    }
    const Vertex end = path_.back();
    if (remaining_ == 0) {
      if (x_.adjacent(end, start_) && (!once_ || path_[1] < path_.back())) {
        found_any_ = true;
        if (!(*visit_)(path_)) stopped_ = true;
      }
      return;
    }

    std::ptrdiff_t forced = -1;
    std::size_t forced_count = 0;
    std::size_t last_count = 0;
    bool dead = false;
    unvisited_.for_each([&](Vertex v) {
      if (dead) return;
      std::size_t a = available(v, end);
      if (a < 2) {
        dead = true;
        return;
      }
      if (a != 2) return;
      bool near_end = x_.adjacent(v, end);
      bool near_start = end != start_ && x_.adjacent(v, start_);
      if (near_end && end != start_) {
        if (near_start && remaining_ > 1) dead = true;
        if (++forced_count > 1) dead = true;
        forced = v;
      } else if (near_start) {
        if (++last_count > 1) dead = true;
      } else if (near_end && end == start_) {
        if (++forced_count > 2) dead = true;
      }
    });
    if (dead) return;
    if (end != start_ && !remaining_two_connected(end)) return;

    auto step = [&](Vertex v) {
      unvisited_.erase(v);
      --remaining_;
      path_.push_back(v);
      extend();
      path_.pop_back();
      ++remaining_;
      unvisited_.insert(v);
    };
    if (forced >= 0 && end != start_) {
      step(static_cast<Vertex>(forced));
      return;
    }
    for (Vertex v : x_.neighbors(end)) {
      if (stopped_ || aborted_) return;
      if (unvisited_.contains(v)) step(v);
    }
  }

  // Induced subgraph on unvisited + {end, start} with the virtual edge
  // end-start must be 2-connected for a Hamilton end..start path to exist.
  bool remaining_two_connected(Vertex end) {
    auto member = [&](Vertex v) { return v == end || v == start_ || unvisited_.contains(v); };
    auto linked = [&](Vertex a, Vertex b) { return (a == end && b == start_) || (a == start_ && b == end); };
    const std::size_t total = remaining_ + 2;
    if (total < 3) return true;

    std::fill(disc_.begin(), disc_.end(), 0);
    std::size_t timer = 0;
    std::size_t reached = 0;
    std::vector<Frame>& stack = frames_;
    stack.clear();
    stack.push_back({start_, start_, 0, false});
    disc_[start_] = low_[start_] = ++timer;
    ++reached;
    std::size_t root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      std::ptrdiff_t next = -1;
      if (!f.virtual_done) {
        f.virtual_done = true;
        if (f.v == start_) next = end;
        if (f.v == end) next = start_;
      }
      if (next < 0) {
        auto nbrs = x_.neighbors(f.v);
        while (f.next < nbrs.size()) {
          Vertex w = nbrs[f.next++];
          if (member(w) && !linked(f.v, w)) {
            next = w;
            break;
          }
        }
      }
      if (next >= 0) {
        auto w = static_cast<Vertex>(next);
        if (!disc_[w]) {
          if (f.v == start_) ++root_children;
          disc_[w] = low_[w] = ++timer;
          ++reached;
          stack.push_back({w, f.v, 0, false});
        } else if (w != f.parent) {
          low_[f.v] = std::min(low_[f.v], disc_[w]);
        }
        continue;
      }
      Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      Frame& up = stack.back();
      low_[up.v] = std::min(low_[up.v], low_[done.v]);
      if (up.v != start_ && low_[done.v] >= disc_[up.v]) return false;
    }
    return reached == total && root_children <= 1;
  }

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    bool virtual_done;
  };

  const Graph& x_;
  std::size_t n_;
  std::uint64_t budget_;
  std::vector<VertexSet> adjacency_;
  VertexSet unvisited_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  std::size_t remaining_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool stopped_ = false;
  bool found_any_ = false;
  bool once_ = false;
  const std::function<bool(const std::vector<Vertex>&)>* visit_ = nullptr;
  std::vector<std::size_t> disc_, low_;
  std::vector<Frame> frames_;
};

constexpr std::size_t kDpMaxOrder = 24;

// Subset dynamic programming over paths that start at vertex 0:
// ends[mask] holds every w such that some path from 0 visits exactly
// {0} + mask and stops at w (vertex v >= 1 is bit v - 1).
std::optional<std::vector<Vertex>> dp_hamilton_cycle(const Graph& x) {
  const std::size_t n = x.order();
  const std::size_t bits = n - 1;
  std::vector<std::uint32_t> adj(bits, 0);
  std::uint32_t from_zero = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex w : x.neighbors(v)) {
      if (w == 0) {
        from_zero |= 1u << (v - 1);
      } else {
        adj[v - 1] |= 1u << (w - 1);
      }
    }
  }
  const std::size_t full = (std::size_t{1} << bits) - 1;
  std::vector<std::uint32_t> ends(full + 1, 0);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    std::uint32_t reach = 0;
    if (std::has_single_bit(mask)) {
      reach = static_cast<std::uint32_t>(mask) & from_zero;
    } else {
      for (auto rest = static_cast<std::uint32_t>(mask); rest; rest &= rest - 1) {
        int w = std::countr_zero(rest);
        std::uint32_t prev = static_cast<std::uint32_t>(mask) & ~(1u << w);
        if (ends[prev] & adj[static_cast<std::size_t>(w)]) reach |= 1u << w;
      }
    }
    ends[mask] = reach;
  }
  std::uint32_t closing = ends[full] & from_zero;
  if (!closing) return std::nullopt;

  std::vector<Vertex> reversed;
  std::size_t mask = full;
  int w = std::countr_zero(closing);
  while (true) {
    reversed.push_back(static_cast<Vertex>(w + 1));
    std::size_t prev = mask & ~(std::size_t{1} << w);
    if (!prev) break;
    std::uint32_t options = ends[prev] & adj[static_cast<std::size_t>(w)];
    mask = prev;
    w = std::countr_zero(options);
  }
  std::vector<Vertex> cycle{0};
  cycle.insert(cycle.end(), reversed.rbegin(), reversed.rend());
  return cycle;
}

}  // namespace

bool verify_hamilton(const Graph& x, const HamiltonCertificate& cert) {
  const std::size_t n = x.order();
  const auto& seq = cert.sequence;
  if (seq.size() != n || n == 0) return false;
  if (cert.kind == CertificateKind::cycle && n < 3) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : seq) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!x.adjacent(seq[i], seq[i + 1])) return false;
  }
  return cert.kind == CertificateKind::path || x.adjacent(seq.back(), seq.front());
}

SearchResult find_hamilton_cycle(const Graph& x, const SearchOptions& options) {
  SearchResult result;
  if (obviously_without_cycle(x)) {
    result.status = SearchStatus::none;
    return result;
  }
  const std::size_t n = x.order();
  if (options.allow_dp && n <= kDpMaxOrder && (std::uint64_t{1} << (n - 1)) <= options.budget) {
    result.nodes = std::uint64_t{1} << (n - 1);
    if (auto cycle = dp_hamilton_cycle(x)) {
      result.status = SearchStatus::found;
      result.certificate = HamiltonCertificate{CertificateKind::cycle, std::move(*cycle)};
    } else {
      result.status = SearchStatus::none;
    }
    return result;
  }

  CycleSearch search(x, options.budget);
  std::function<bool(const std::vector<Vertex>&)> keep_first = [&](const std::vector<Vertex>& cycle) {
    result.certificate = HamiltonCertificate{CertificateKind::cycle, cycle};
    return false;
  };
  search.run(keep_first, false);
  result.nodes = search.nodes();
  if (result.certificate) {
    result.status = SearchStatus::found;
  } else {
    result.status = search.aborted() ? SearchStatus::unknown : SearchStatus::none;
  }
  return result;
}

SearchResult find_hamilton_path(const Graph& x, const SearchOptions& options) {
  const std::size_t n = x.order();
  SearchResult result;
  if (n == 0) {
    result.status = SearchStatus::none;
    return result;
  }
  if (n <= 2) {
    if (n == 1 || x.adjacent(0, 1)) {
      result.status = SearchStatus::found;
      result.certificate = HamiltonCertificate{CertificateKind::path, {}};
      for (Vertex v = 0; v < n; ++v) result.certificate->sequence.push_back(v);
    } else {
      result.status = SearchStatus::none;
    }
    return result;
  }
  auto edges = x.edges();
  const auto apex = static_cast<Vertex>(n);
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, apex);
  Graph with_apex = Graph::from_edges(n + 1, edges);
  result = find_hamilton_cycle(with_apex, options);
  if (result.certificate) {
    const auto& cyc = result.certificate->sequence;
    auto at = static_cast<std::size_t>(std::find(cyc.begin(), cyc.end(), apex) - cyc.begin());
    std::vector<Vertex> path;
    for (std::size_t i = 1; i <= n; ++i) path.push_back(cyc[(at + i) % (n + 1)]);
    result.certificate = HamiltonCertificate{CertificateKind::path, std::move(path)};
  }
  return result;
}

SearchStatus for_each_hamilton_cycle(const Graph& x, const std::function<bool(const std::vector<Vertex>&)>& visit,
                                     std::uint64_t budget) {
  if (obviously_without_cycle(x)) return SearchStatus::none;
  CycleSearch search(x, budget);
  search.run(visit, true);
  if (search.aborted()) return SearchStatus::unknown;
  return search.any_found() ? SearchStatus::found : SearchStatus::none;
}

bool jackson_condition(const Graph& x) {
  StructureReport r = structure_report(x);
  return r.two_connected && r.regular && 3 * *r.regular >= x.order();
}

}  // namespace hamvt
