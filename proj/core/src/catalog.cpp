#include "hamvt/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "hamvt/constructions.hpp"
#include "hamvt/error.hpp"

namespace hamvt {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::uint32_t parse_uint(std::string_view s, std::uint32_t lo, std::uint32_t hi) {
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || value < lo || value > hi) {
    throw Error(ErrorCode::BadParams, "bad catalog parameter '" + std::string(s) + "'");
  }
  return value;
}

Edge edge(std::uint32_t u, std::uint32_t v) { return u < v ? Edge{u, v} : Edge{v, u}; }

Permutation map_of(std::size_t n, auto f) {
  std::vector<Point> img(n);
  for (Point x = 0; x < n; ++x) img[x] = f(x);
  return Permutation(std::move(img));
}

CatalogEntry petersen() {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < 5; ++i) {
    e.push_back(edge(i, (i + 1) % 5));
    e.push_back(edge(i, 5 + i));
    e.push_back(edge(5 + i, 5 + (i + 2) % 5));
  }
  // (0 1 2 3 4) and (0 1) of S5 acting on the 2-subsets {2i, 2i+1} (outer i)
  // and {2i+2, 2i+4} (inner 5+i).
  Permutation five_cycle(std::vector<Point>{3, 4, 0, 1, 2, 8, 9, 5, 6, 7});
  Permutation transposition(std::vector<Point>{0, 1, 6, 9, 4, 5, 2, 8, 7, 3});
  return {"petersen", Graph::from_edges(10, e), {five_cycle, transposition}, true,
          "outer i ~ i+1, spoke i ~ 5+i, inner 5+i ~ 5+(i+2) (mod 5)"};
}

CatalogEntry coxeter() {
  // a_i = i, b_i = 7+i, c_i = 14+i, d_i = 21+i.
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < 7; ++i) {
    e.push_back(edge(i, (i + 1) % 7));
    e.push_back(edge(7 + i, 7 + (i + 2) % 7));
    e.push_back(edge(14 + i, 14 + (i + 3) % 7));
    e.push_back(edge(21 + i, i));
    e.push_back(edge(21 + i, 7 + i));
    e.push_back(edge(21 + i, 14 + i));
  }
  auto rot = map_of(28, [](Point x) { return 7 * (x / 7) + (x % 7 + 1) % 7; });
  auto dbl = map_of(28, [](Point x) {
    Point family = x / 7;
    Point next = family == 3 ? 3 : (family + 1) % 3;
    return 7 * next + (2 * (x % 7)) % 7;
  });
  Permutation extra(std::vector<Point>{1, 2, 3, 24, 10, 8, 22, 6, 16, 5, 20, 26, 27, 19,
                                       21, 9, 25, 14, 7, 11, 18, 0, 23, 4, 17, 12, 13, 15});
  return {"coxeter", Graph::from_edges(28, e), {rot, dbl, extra}, true,
          "a_i=i, b_i=7+i, c_i=14+i, d_i=21+i; a_i~a_{i+1}, b_i~b_{i+2}, c_i~c_{i+3}, d_i~a_i,b_i,c_i (mod 7)"};
}

CatalogEntry truncated(CatalogEntry base, std::string name) {
  CatalogEntry out;
  out.name = std::move(name);
  out.graph = truncate_cubic(base.graph);
  for (const auto& g : base.automorphisms) out.automorphisms.push_back(truncated_automorphism(base.graph, g));
  // Truncation vertices are the arcs of the base, so this is transitive
  // whenever the base group is arc-transitive (true for both bases here).
  out.vertex_transitive = base.vertex_transitive;
  out.labelling = "vertex v of " + base.name + " becomes 3v,3v+1,3v+2; corner 3v+i meets the i-th smallest neighbour of v";
  return out;
}

bool on_line(std::uint32_t point, std::uint32_t line) {
  std::uint32_t d = (point + 7 - line) % 7;
  return d == 0 || d == 1 || d == 3;
}

CatalogEntry fano_bipartite(bool incident) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < 7; ++i) {
    for (std::uint32_t j = 0; j < 7; ++j) {
      if (on_line(i, j) == incident) e.push_back(edge(i, 7 + j));
    }
  }
  auto rot = map_of(14, [](Point x) { return 7 * (x / 7) + (x % 7 + 1) % 7; });
  auto dbl = map_of(14, [](Point x) { return x < 7 ? (2 * x) % 7 : 7 + (2 * (x - 7) + 6) % 7; });
  auto dual = map_of(14, [](Point x) { return x < 7 ? 7 + (7 - x) % 7 : (14 - x) % 7; });
  // A collineation fixing points 0, 1, 3 that is not affine on Z_7.
  Permutation swap(std::vector<Point>{0, 1, 4, 3, 2, 6, 5, 7, 8, 10, 9, 13, 12, 11});
  return {incident ? "heawood" : "non_incidence_pg22", Graph::from_edges(14, e), {rot, dbl, dual, swap}, true,
          std::string("points 0..6, lines 7+j with line j = {j, j+1, j+3} (mod 7); ") +
              (incident ? "incident" : "non-incident") + " pairs adjacent"};
}

CatalogEntry crown(std::uint32_t p) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < p; ++i) {
    for (std::uint32_t j = 0; j < p; ++j) {
      if (i != j) e.push_back(edge(i, p + j));
    }
  }
  auto shift = map_of(2 * p, [p](Point x) { return p * (x / p) + (x % p + 1) % p; });
  auto swap = map_of(2 * p, [p](Point x) { return x < p ? x + p : x - p; });
  return {"crown:" + std::to_string(p), Graph::from_edges(2 * p, e), {shift, swap}, true,
          "i ~ p+j for i != j"};
}

CatalogEntry circulant(std::uint32_t n, const std::vector<std::uint32_t>& jumps) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t s : jumps) {
      std::uint32_t j = (i + s) % n;
      Edge ed = edge(i, j);
      if (std::find(e.begin(), e.end(), ed) == e.end()) e.push_back(ed);
    }
  }
  std::string name = "circulant:" + std::to_string(n) + ":";
  for (std::size_t k = 0; k < jumps.size(); ++k) name += (k ? "," : "") + std::to_string(jumps[k]);
  auto shift = map_of(n, [n](Point x) { return (x + 1) % n; });
  auto neg = map_of(n, [n](Point x) { return (n - x) % n; });
  return {name, Graph::from_edges(n, e), {shift, neg}, true, "i ~ i +- s (mod n)"};
}

CatalogEntry prism(std::uint32_t t) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < t; ++i) {
    e.push_back(edge(i, (i + 1) % t));
    e.push_back(edge(t + i, t + (i + 1) % t));
    e.push_back(edge(i, t + i));
  }
  auto rot = map_of(2 * t, [t](Point x) { return t * (x / t) + (x % t + 1) % t; });
  auto swap = map_of(2 * t, [t](Point x) { return x < t ? x + t : x - t; });
  return {"prism:" + std::to_string(t), Graph::from_edges(2 * t, e), {rot, swap}, true,
          "i ~ i+1 and t+i ~ t+i+1 (mod t), i ~ t+i"};
}

CatalogEntry complete(std::uint32_t n) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  std::vector<Permutation> gens{map_of(n, [n](Point x) { return (x + 1) % n; })};
  if (n > 2) gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  return {"complete:" + std::to_string(n), Graph::from_edges(n, e), gens, true, "all pairs"};
}

CatalogEntry complete_bipartite(std::uint32_t a, std::uint32_t b) {
  std::vector<Edge> e;
  for (std::uint32_t i = 0; i < a; ++i) {
    for (std::uint32_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  const std::uint32_t n = a + b;
  std::vector<Permutation> gens;
  auto rotate_side = [&](std::uint32_t lo, std::uint32_t len) {
    if (len > 1) gens.push_back(map_of(n, [=](Point x) { return x >= lo && x < lo + len ? lo + (x - lo + 1) % len : x; }));
    if (len > 2) gens.push_back(Permutation::from_cycles(n, {{lo, lo + 1}}));
  };
  rotate_side(0, a);
  rotate_side(a, b);
  if (a == b) gens.push_back(map_of(n, [a](Point x) { return x < a ? x + a : x - a; }));
  return {"complete_bipartite:" + std::to_string(a) + ":" + std::to_string(b), Graph::from_edges(n, e), gens,
          a == b, "sides 0..a-1 and a..a+b-1"};
}

}  // namespace

Permutation truncated_automorphism(const Graph& base, const Permutation& g) {
  const std::size_t n = base.order();
  std::vector<Point> img(3 * n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = base.neighbors(v);
    auto nb_img = base.neighbors(g(v));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      auto pos = std::lower_bound(nb_img.begin(), nb_img.end(), g(nb[i])) - nb_img.begin();
      img[3 * v + i] = 3 * g(v) + static_cast<Point>(pos);
    }
  }
  return Permutation(std::move(img));
}

std::vector<std::string> catalog_names() {
  return {"petersen", "coxeter", "truncated_petersen", "truncated_coxeter", "heawood", "non_incidence_pg22",
          "crown:p", "circulant:n:s1,s2,...", "prism:t", "complete:n", "complete_bipartite:a:b"};
}

CatalogEntry catalog_entry(std::string_view name) {
  auto parts = split(name, ':');
  const auto head = parts[0];
  auto arity = [&](std::size_t k) {
    if (parts.size() != k + 1) throw Error(ErrorCode::BadParams, "'" + std::string(head) + "' takes " + std::to_string(k) + " parameter(s)");
  };
  if (head == "petersen") return arity(0), petersen();
  if (head == "coxeter") return arity(0), coxeter();
  if (head == "truncated_petersen") return arity(0), truncated(petersen(), "truncated_petersen");
  if (head == "truncated_coxeter") return arity(0), truncated(coxeter(), "truncated_coxeter");
  if (head == "heawood") return arity(0), fano_bipartite(true);
  if (head == "non_incidence_pg22") return arity(0), fano_bipartite(false);
  if (head == "crown") return arity(1), crown(parse_uint(parts[1], 2, 1u << 12));
  if (head == "prism") return arity(1), prism(parse_uint(parts[1], 3, 1u << 20));
  if (head == "complete") return arity(1), complete(parse_uint(parts[1], 1, 1u << 12));
  if (head == "complete_bipartite") {
    arity(2);
    return complete_bipartite(parse_uint(parts[1], 1, 1u << 12), parse_uint(parts[2], 1, 1u << 12));
  }
  if (head == "circulant") {
    arity(2);
    std::uint32_t n = parse_uint(parts[1], 3, 1u << 20);
    std::string_view list = parts[2];
    if (list.size() >= 2 && list.front() == '{' && list.back() == '}') list = list.substr(1, list.size() - 2);
    std::vector<std::uint32_t> jumps;
    for (auto s : split(list, ',')) {
      std::uint32_t j = parse_uint(s, 1, n - 1);
      j = std::min(j, n - j);
      if (std::find(jumps.begin(), jumps.end(), j) == jumps.end()) jumps.push_back(j);
    }
    std::sort(jumps.begin(), jumps.end());
    return circulant(n, jumps);
  }
  throw Error(ErrorCode::UnknownName, "unknown catalog graph '" + std::string(name) + "'");
}

}  // namespace hamvt
