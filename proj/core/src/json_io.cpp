#include "hamvt/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hamvt/error.hpp"

namespace hamvt {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::MalformedInput, std::string("missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::MalformedInput, std::string("bad value for '") + key + "'");
  }
}

}  // namespace

std::string graph_to_json(const Graph& x) {
  json edges = json::array();
  for (auto [u, v] : x.edges()) edges.push_back({u, v});
  return json{{"n", x.order()}, {"edges", edges}}.dump();
}

Graph graph_from_json(std::string_view text) {
  json j = parse(text);
  auto n = field<std::size_t>(j, "n");
  auto raw = field<std::vector<std::vector<Vertex>>>(j, "edges");
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    if (e.size() != 2) throw Error(ErrorCode::MalformedInput, "edge must have two endpoints");
    edges.emplace_back(e[0], e[1]);
  }
  return Graph::from_edges(n, edges);
}

std::string permutation_to_json(const Permutation& g) {
  return json{{"degree", g.degree()}, {"images", std::vector<Point>(g.images().begin(), g.images().end())}}.dump();
}

Permutation permutation_from_json(std::string_view text) {
  json j = parse(text);
  auto degree = field<std::size_t>(j, "degree");
  auto images = field<std::vector<Point>>(j, "images");
  if (images.size() != degree) throw Error(ErrorCode::DegreeMismatch, "image count differs from degree");
  return Permutation(std::move(images));
}

std::string group_to_json(const PermGroup& group) {
  json gens = json::array();
  for (const auto& g : group.generators()) gens.push_back(std::vector<Point>(g.images().begin(), g.images().end()));
  return json{{"degree", group.degree()}, {"generators", gens}}.dump();
}

PermGroup group_from_json(std::string_view text) {
  json j = parse(text);
  auto degree = field<std::size_t>(j, "degree");
  auto raw = field<std::vector<std::vector<Point>>>(j, "generators");
  std::vector<Permutation> gens;
  for (auto& images : raw) {
    if (images.size() != degree) throw Error(ErrorCode::DegreeMismatch, "generator length differs from degree");
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens));
}

std::string certificate_to_json(const HamiltonCertificate& cert) {
  return json{{"kind", cert.kind == CertificateKind::cycle ? "cycle" : "path"}, {"sequence", cert.sequence}}.dump();
}

HamiltonCertificate certificate_from_json(std::string_view text) {
  json j = parse(text);
  auto kind = field<std::string>(j, "kind");
  if (kind != "cycle" && kind != "path") throw Error(ErrorCode::MalformedInput, "kind must be 'cycle' or 'path'");
  return {kind == "cycle" ? CertificateKind::cycle : CertificateKind::path, field<std::vector<Vertex>>(j, "sequence")};
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::vector<Point> current;
  bool open = false;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '(') {
      if (open) throw Error(ErrorCode::MalformedInput, "nested '(' in cycle notation");
      open = true;
      current.clear();
      ++i;
    } else if (ch == ')') {
      if (!open) throw Error(ErrorCode::MalformedInput, "unmatched ')' in cycle notation");
      open = false;
      if (current.size() > 1) cycles.push_back(current);
      ++i;
    } else if (ch == ' ' || ch == ',' || ch == '\t') {
      ++i;
    } else if (ch >= '0' && ch <= '9') {
      if (!open) throw Error(ErrorCode::MalformedInput, "point outside a cycle");
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') v = v * 10 + static_cast<unsigned>(text[i++] - '0');
      if (v >= degree) throw Error(ErrorCode::MalformedInput, "point " + std::to_string(v) + " out of range");
      current.push_back(static_cast<Point>(v));
    } else {
      throw Error(ErrorCode::MalformedInput, std::string("unexpected character '") + ch + "' in cycle notation");
    }
  }
  if (open) throw Error(ErrorCode::MalformedInput, "unterminated cycle");
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::MalformedInput, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace hamvt
