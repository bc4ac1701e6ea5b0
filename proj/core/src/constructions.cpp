#include "hamvt/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "hamvt/error.hpp"

namespace hamvt {

namespace {

void check_base_cycle(const ProductModel& model) {
  if (model.p < 2) throw Error(ErrorCode::BadParams, "p must be at least 2");
  HamiltonCertificate cert{CertificateKind::cycle, model.base_cycle};
  if (model.t() < 3 || !verify_hamilton(model.base, cert)) {
    throw Error(ErrorCode::BadBaseCycle, "base_cycle is not a Hamilton cycle of the base graph");
  }
}

HamiltonCertificate checked(const ProductModel& model, std::vector<Vertex> sequence) {
  HamiltonCertificate cert{CertificateKind::cycle, std::move(sequence)};
  if (!verify_hamilton(product_graph(model), cert)) {
    throw Error(ErrorCode::BadBaseCycle, "constructed sequence failed validation");
  }
  return cert;
}

}  // namespace

Graph product_graph(const ProductModel& model) {
  check_base_cycle(model);
  const std::uint32_t p = model.p;
  std::vector<Edge> edges;
  for (auto [u, v] : model.base.edges()) {
    for (std::uint32_t j = 0; j < p; ++j) {
      if (model.kind == ProductKind::y1) {
        edges.emplace_back(model.label(u, j), model.label(v, j + 1));
        if (p > 2) edges.emplace_back(model.label(u, j + 1), model.label(v, j));
      } else {
        edges.emplace_back(model.label(u, j), model.label(v, j));
      }
    }
  }
  if (model.kind == ProductKind::y2) {
    for (Vertex u = 0; u < model.t(); ++u) {
      for (std::uint32_t j = 0; j < (p == 2 ? 1u : p); ++j) edges.emplace_back(model.label(u, j), model.label(u, j + 1));
    }
  }
  for (auto& [a, b] : edges) {
    if (a > b) std::swap(a, b);
  }
  return Graph::from_edges(static_cast<std::size_t>(model.t()) * p, edges);
}

HamiltonCertificate y1_cycle(const ProductModel& model) {
  if (model.kind != ProductKind::y1) throw Error(ErrorCode::BadParams, "model is not of kind y1");
  check_base_cycle(model);
  const std::uint32_t t = model.t();
  const std::uint32_t p = model.p;
  if (std::gcd(t, p) != 1) throw Error(ErrorCode::GcdNotOne, "gcd(t, p) must be 1");
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(t) * p);
  for (std::uint32_t i = 0; i < t * p; ++i) seq.push_back(model.label(model.base_cycle[i % t], i % p));
  return checked(model, std::move(seq));
}

HamiltonCertificate y2_cycle(const ProductModel& model) {
  if (model.kind != ProductKind::y2) throw Error(ErrorCode::BadParams, "model is not of kind y2");
  check_base_cycle(model);
  const std::uint32_t t = model.t();
  const std::uint32_t p = model.p;
  const auto& c = model.base_cycle;
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(t) * p);

  if (p == 2) {
    for (std::uint32_t i = 0; i < t; ++i) seq.push_back(model.label(c[i], 0));
    for (std::uint32_t i = t; i-- > 0;) seq.push_back(model.label(c[i], 1));
  } else if (t % 2 == 0) {
    // Walk each column up or down, alternating, moving along the base cycle.
    for (std::uint32_t i = 0; i < t; ++i) {
      for (std::uint32_t j = 0; j < p; ++j) seq.push_back(model.label(c[i], i % 2 == 0 ? j : p - 1 - j));
    }
  } else {
    // Sweep levels 0..p-1 over c[1..t-1] alternately, then return down column c[0].
    for (std::uint32_t j = 0; j < p; ++j) {
      for (std::uint32_t s = 0; s + 1 < t; ++s) {
        std::uint32_t i = j % 2 == 0 ? 1 + s : t - 1 - s;
        seq.push_back(model.label(c[i], j));
      }
    }
    for (std::uint32_t j = p; j-- > 0;) seq.push_back(model.label(c[0], j));
  }
  return checked(model, std::move(seq));
}

Graph truncate_cubic(const Graph& x) {
  const std::size_t n = x.order();
  for (Vertex v = 0; v < n; ++v) {
    if (x.degree(v) != 3) throw Error(ErrorCode::NotCubic, "input graph is not 3-regular");
  }
  std::vector<Edge> edges;
  edges.reserve(6 * n);
  for (Vertex v = 0; v < n; ++v) {
    edges.emplace_back(3 * v, 3 * v + 1);
    edges.emplace_back(3 * v, 3 * v + 2);
    edges.emplace_back(3 * v + 1, 3 * v + 2);
  }
  auto corner = [&](Vertex v, Vertex w) {
    auto nb = x.neighbors(v);
    return 3 * v + static_cast<Vertex>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
  };
  for (auto [u, v] : x.edges()) edges.emplace_back(corner(u, v), corner(v, u));
  return Graph::from_edges(3 * n, edges);
}

}  // namespace hamvt
