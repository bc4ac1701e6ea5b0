#include "hamvt/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hamvt/error.hpp"

namespace hamvt {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::SubgroupNotContained: return "SubgroupNotContained";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::OverlappingParts: return "OverlappingParts";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::NotEquitable: return "NotEquitable";
    case ErrorCode::EmptySelection: return "EmptySelection";
    case ErrorCode::InvalidSelection: return "InvalidSelection";
    case ErrorCode::NotSemiregular: return "NotSemiregular";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::InvalidChoice: return "InvalidChoice";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::BadBaseCycle: return "BadBaseCycle";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NoneFound: return "NoneFound";
    case ErrorCode::ReducibleQuadratic: return "ReducibleQuadratic";
    case ErrorCode::ZeroC: return "ZeroC";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::GroupDegreeMismatch: return "GroupDegreeMismatch";
    case ErrorCode::GroupNotAutomorphisms: return "GroupNotAutomorphisms";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
  }
  return "Unknown";
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw Error(ErrorCode::InvalidPermutation, "image array is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  Permutation g;
  g.images_.resize(degree);
  std::iota(g.images_.begin(), g.images_.end(), Point{0});
  return g;
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation g = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point x = cycle[i];
      if (x >= degree || used[x]) {
        throw Error(ErrorCode::InvalidPermutation, "cycles are not disjoint or point out of range");
      }
      used[x] = true;
      g.images_[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return g;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation g;
  g.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) g.images_[images_[i]] = static_cast<Point>(i);
  return g;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-(exponent + 1)) + 1 : static_cast<std::uint64_t>(exponent);
  Permutation result = identity(degree());
  while (e) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<Point> cycle;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      cycle.push_back(y);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) {
    std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(len));
    std::uint64_t factor = len / g;
    if (result > UINT64_MAX / factor) throw Error(ErrorCode::Overflow, "permutation order exceeds 64 bits");
    result *= factor;
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& c : cs) {
    out << '(';
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
    out << ')';
  }
  return out.str();
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "cannot compose permutations of different degree");
  }
  Permutation out;
  out.images_.resize(lhs.images_.size());
  for (std::size_t i = 0; i < lhs.images_.size(); ++i) out.images_[i] = rhs.images_[lhs.images_[i]];
  return out;
}

bool is_semiregular(const Permutation& g, std::uint32_t p) {
  if (p < 2 || g.degree() == 0 || g.degree() % p != 0) return false;
  for (std::size_t len : g.cycle_type()) {
    if (len != p) return false;
  }
  return true;
}

std::size_t PermutationHash::operator()(const Permutation& g) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : g.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace hamvt
