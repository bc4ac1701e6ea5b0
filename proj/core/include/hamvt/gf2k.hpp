#pragma once

#include <cstdint>
#include <vector>

#include "hamvt/permutation.hpp"

namespace hamvt {

/// Element of GF(2^k) in the polynomial basis (bit i = coefficient of x^i).
using FieldElem = std::uint32_t;

/// GF(2^k), 1 <= k <= 16, with theta the class of x modulo `modulus()`.
class Field {
 public:
  /// Throws Error{DegreeOutOfRange} unless 1 <= k <= 16.
  explicit Field(unsigned k);

  unsigned k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  FieldElem theta() const noexcept { return exp_[1]; }

  static FieldElem add(FieldElem a, FieldElem b) noexcept { return a ^ b; }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    return (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]];
  }
  /// Shift-and-reduce product, independent of the log tables.
  FieldElem mul_slow(FieldElem a, FieldElem b) const noexcept;
  FieldElem sqr(FieldElem a) const noexcept { return mul(a, a); }
  /// Throws Error{BadParams} for a = 0.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::int64_t e) const;
  /// theta^e for any integer e.
  FieldElem theta_pow(std::int64_t e) const noexcept;
  /// Discrete logarithm to base theta; a must be nonzero.
  std::uint32_t log(FieldElem a) const { return log_[a]; }
  /// Absolute trace to GF(2).
  unsigned trace(FieldElem a) const noexcept { return trace_[a]; }

 private:
  unsigned k_;
  std::uint32_t q_;
  std::uint32_t modulus_;
  std::vector<FieldElem> exp_;  // length 2(q-1) so products need no reduction
  std::vector<std::uint32_t> log_;
  std::vector<std::uint8_t> trace_;
};

/// Least degree-k modulus (as a bit pattern) that is irreducible with x primitive.
Field field_make(unsigned k);

/// Irreducibility over GF(2) by the gcd(f, x^{2^d} - x) test for d | k, d < k.
bool gf2_poly_irreducible(std::uint64_t poly);

/// True iff x^2 + theta^m x + 1 has no root in F.
bool quad_irreducible(const Field& f, std::uint32_t m);

/// Least m >= 0 with x^2 + theta^m x + 1 irreducible. Throws Error{NoneFound}.
std::uint32_t quad_irreducible_m(const Field& f);

/// s(a,b) = [[a, b], [b, a + b theta^m]].
struct SMatrix {
  FieldElem a = 0;
  FieldElem b = 0;
  friend bool operator==(const SMatrix&, const SMatrix&) = default;
  friend auto operator<=>(const SMatrix&, const SMatrix&) = default;
};

SMatrix s_multiply(const Field& f, std::uint32_t m, const SMatrix& x, const SMatrix& y);
std::uint64_t s_order(const Field& f, std::uint32_t m, const SMatrix& x);

/// All s(a,b) of determinant 1, sorted by (a, b). The result has q+1
/// elements, is closed under products and is cyclic; these are checked.
/// Throws Error{ReducibleQuadratic}.
std::vector<SMatrix> s_group(const Field& f, std::uint32_t m);

/// An element of order q+1 of the group above.
SMatrix s_generator(const Field& f, std::uint32_t m);

/// Number of (a, y) with a^2 + c theta^m a y^3 + c^2 y^6 + 1 = 0, by full
/// enumeration of F x F. Throws Error{ZeroC}.
std::uint64_t count_eq2(const Field& f, std::uint32_t m, FieldElem c, bool require_y_nonzero);

/// Same count in O(q): for fixed y the equation is a quadratic in a whose
/// root count is read off the trace.
std::uint64_t count_eq2_by_trace(const Field& f, std::uint32_t m, FieldElem c, bool require_y_nonzero);

/// count_eq2 for every c = theta^e, indexed by e. With z = 1/(c theta^m y^3)
/// the quadratic has two roots iff Tr(z) = Tr(theta^-m), so the counts only
/// depend on e modulo gcd(3, q-1) and the table costs O(q).
std::vector<std::uint64_t> count_eq2_all(const Field& f, std::uint32_t m, bool require_y_nonzero);

/// |n - q| <= (d-1)(d-2) sqrt(q) + d^2, evaluated exactly in integers.
bool weil_check(std::int64_t n, std::int64_t q, std::int64_t d);

/// 2x2 matrix [[a, b], [c, d]] acting on row vectors from the right.
struct Mat2 {
  FieldElem a = 1, b = 0, c = 0, d = 1;
};

Mat2 mat_multiply(const Field& f, const Mat2& x, const Mat2& y);
inline Mat2 as_matrix(const Field& f, std::uint32_t m, const SMatrix& s) {
  return {s.a, s.b, s.b, Field::add(s.a, f.mul(s.b, f.theta_pow(m)))};
}

/// Permutation of PG(1, q) induced by an invertible matrix: [1:y] is point
/// y and [0:1] is point q. Throws Error{BadParams} for singular matrices.
Permutation projective_permutation(const Field& f, const Mat2& x);

}  // namespace hamvt
