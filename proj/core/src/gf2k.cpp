#include "hamvt/gf2k.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "hamvt/error.hpp"

namespace hamvt {

namespace {

unsigned degree_of(std::uint64_t p) { return p == 0 ? 0 : 63u - static_cast<unsigned>(std::countl_zero(p)); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const unsigned dm = degree_of(m);
  while (a != 0 && degree_of(a) >= dm) a ^= m << (degree_of(a) - dm);
  return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t r = 0;
  a = poly_mod(a, m);
  const std::uint64_t top = std::uint64_t{1} << degree_of(m);
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= m;
  }
  return r;
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

// Multiplicative order of x modulo an irreducible m, tested against q-1.
bool x_is_primitive(std::uint64_t m, unsigned k) {
  const std::uint64_t order = (std::uint64_t{1} << k) - 1;
  auto x_pow = [&](std::uint64_t e) {
    std::uint64_t result = 1, base = poly_mod(2, m);
    for (; e; e >>= 1) {
      if (e & 1) result = poly_mulmod(result, base, m);
      base = poly_mulmod(base, base, m);
    }
    return result;
  };
  if (x_pow(order) != 1) return false;
  std::uint64_t rest = order;
  for (std::uint64_t r = 2; r * r <= rest; ++r) {
    if (rest % r) continue;
    if (x_pow(order / r) == 1) return false;
    while (rest % r == 0) rest /= r;
  }
  return rest == 1 || x_pow(order / rest) != 1;
}

std::uint32_t least_primitive_modulus(unsigned k) {
  for (std::uint64_t m = (std::uint64_t{1} << k) | 1; m < (std::uint64_t{1} << (k + 1)); m += 2) {
    if (gf2_poly_irreducible(m) && x_is_primitive(m, k)) return static_cast<std::uint32_t>(m);
  }
  throw Error(ErrorCode::NoneFound, "no primitive modulus");  // unreachable for k >= 1
}

}  // namespace

bool gf2_poly_irreducible(std::uint64_t poly) {
  const unsigned k = degree_of(poly);
  if (k == 0) return false;
  // x^{2^d} mod poly by repeated squaring.
  std::uint64_t x_power = poly_mod(2, poly);
  for (unsigned d = 1; d <= k; ++d) {
    x_power = poly_mulmod(x_power, x_power, poly);
    if (d < k && k % d == 0 && poly_gcd(poly, x_power ^ poly_mod(2, poly)) != 1) return false;
    if (d == k && x_power != poly_mod(2, poly)) return false;
  }
  return true;
}

Field::Field(unsigned k) : k_(k) {
  if (k < 1 || k > 16) throw Error(ErrorCode::DegreeOutOfRange, "field degree must be in 1..16");
  q_ = std::uint32_t{1} << k;
  modulus_ = least_primitive_modulus(k);
  const std::uint32_t n = q_ - 1;
  exp_.resize(2 * static_cast<std::size_t>(n));
  log_.assign(q_, 0);
  FieldElem x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    exp_[i] = exp_[i + n] = x;
    log_[x] = i;
    x = static_cast<FieldElem>(poly_mulmod(x, 2, modulus_));
  }
  trace_.assign(q_, 0);
  for (FieldElem a = 0; a < q_; ++a) {
    FieldElem s = a, t = a;
    for (unsigned i = 1; i < k; ++i) {
      s = sqr(s);
      t ^= s;
    }
    trace_[a] = static_cast<std::uint8_t>(t & 1);
  }
}

FieldElem Field::mul_slow(FieldElem a, FieldElem b) const noexcept {
  return static_cast<FieldElem>(poly_mulmod(a, b, modulus_));
}

FieldElem Field::inv(FieldElem a) const {
  if (a == 0) throw Error(ErrorCode::BadParams, "zero has no inverse");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FieldElem Field::pow(FieldElem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw Error(ErrorCode::BadParams, "zero has no inverse");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  return exp_[static_cast<std::size_t>((((static_cast<std::int64_t>(log_[a]) * (e % n)) % n) + n) % n)];
}

FieldElem Field::theta_pow(std::int64_t e) const noexcept {
  const std::int64_t n = q_ - 1;
  return exp_[static_cast<std::size_t>(((e % n) + n) % n)];
}

Field field_make(unsigned k) { return Field(k); }

bool quad_irreducible(const Field& f, std::uint32_t m) {
  const FieldElem coeff = f.theta_pow(m);
  for (FieldElem x = 0; x < f.q(); ++x) {
    if ((f.sqr(x) ^ f.mul(coeff, x) ^ 1) == 0) return false;
  }
  return true;
}

std::uint32_t quad_irreducible_m(const Field& f) {
  for (std::uint32_t m = 0; m + 1 < f.q(); ++m) {
    if (quad_irreducible(f, m)) return m;
  }
  throw Error(ErrorCode::NoneFound, "no irreducible x^2 + theta^m x + 1");
}

SMatrix s_multiply(const Field& f, std::uint32_t m, const SMatrix& x, const SMatrix& y) {
  // [[a,b],[b,a+bw]] [[c,d],[d,c+dw]] = s(ac + bd, ad + bc + bdw).
  const FieldElem w = f.theta_pow(m);
  const FieldElem bd = f.mul(x.b, y.b);
  return {f.mul(x.a, y.a) ^ bd, f.mul(x.a, y.b) ^ f.mul(x.b, y.a) ^ f.mul(bd, w)};
}

std::uint64_t s_order(const Field& f, std::uint32_t m, const SMatrix& x) {
  const SMatrix one{1, 0};
  SMatrix y = x;
  std::uint64_t k = 1;
  while (!(y == one)) {
    y = s_multiply(f, m, y, x);
    if (++k > 2ull * f.q() + 2) throw Error(ErrorCode::BadParams, "element of infinite order");
  }
  return k;
}

std::vector<SMatrix> s_group(const Field& f, std::uint32_t m) {
  if (!quad_irreducible(f, m)) throw Error(ErrorCode::ReducibleQuadratic, "x^2 + theta^m x + 1 has a root");
  const FieldElem w = f.theta_pow(m);
  std::vector<SMatrix> out;
  for (FieldElem a = 0; a < f.q(); ++a) {
    for (FieldElem b = 0; b < f.q(); ++b) {
      if ((f.sqr(a) ^ f.sqr(b) ^ f.mul(f.mul(a, b), w)) == 1) out.push_back({a, b});
    }
  }
  if (out.size() != f.q() + 1u) throw Error(ErrorCode::BadParams, "unexpected group size");
  for (const auto& x : out) {
    for (const auto& y : out) {
      if (!std::binary_search(out.begin(), out.end(), s_multiply(f, m, x, y))) {
        throw Error(ErrorCode::BadParams, "s-matrices not closed under products");
      }
    }
  }
  s_generator(f, m);
  return out;
}

SMatrix s_generator(const Field& f, std::uint32_t m) {
  if (!quad_irreducible(f, m)) throw Error(ErrorCode::ReducibleQuadratic, "x^2 + theta^m x + 1 has a root");
  const FieldElem w = f.theta_pow(m);
  for (FieldElem a = 0; a < f.q(); ++a) {
    for (FieldElem b = 1; b < f.q(); ++b) {
      if ((f.sqr(a) ^ f.sqr(b) ^ f.mul(f.mul(a, b), w)) != 1) continue;
      if (s_order(f, m, {a, b}) == f.q() + 1u) return {a, b};
    }
  }
  throw Error(ErrorCode::NoneFound, "group of s-matrices is not cyclic");
}

std::uint64_t count_eq2(const Field& f, std::uint32_t m, FieldElem c, bool require_y_nonzero) {
  if (c == 0) throw Error(ErrorCode::ZeroC, "c must be nonzero");
  const FieldElem lin = f.mul(c, f.theta_pow(m));
  const FieldElem c2 = f.sqr(c);
  std::uint64_t n = 0;
  for (FieldElem y = require_y_nonzero ? 1 : 0; y < f.q(); ++y) {
    const FieldElem y3 = f.mul(f.sqr(y), y);
    const FieldElem b = f.mul(lin, y3);
    const FieldElem k0 = f.mul(c2, f.sqr(y3)) ^ 1;
    for (FieldElem a = 0; a < f.q(); ++a) {
      if ((f.sqr(a) ^ f.mul(b, a) ^ k0) == 0) ++n;
    }
  }
  return n;
}

std::uint64_t count_eq2_by_trace(const Field& f, std::uint32_t m, FieldElem c, bool require_y_nonzero) {
  if (c == 0) throw Error(ErrorCode::ZeroC, "c must be nonzero");
  const FieldElem lin = f.mul(c, f.theta_pow(m));
  const FieldElem c2 = f.sqr(c);
  // y = 0 gives a^2 = 1: exactly one root.
  std::uint64_t n = require_y_nonzero ? 0 : 1;
  for (FieldElem y = 1; y < f.q(); ++y) {
    const FieldElem y3 = f.mul(f.sqr(y), y);
    const FieldElem b = f.mul(lin, y3);
    const FieldElem k0 = f.mul(c2, f.sqr(y3)) ^ 1;
    // a^2 + b a + k0 = 0 with b != 0 has two roots iff Tr(k0 / b^2) = 0.
    if (f.trace(f.mul(k0, f.inv(f.sqr(b)))) == 0) n += 2;
  }
  return n;
}

std::vector<std::uint64_t> count_eq2_all(const Field& f, std::uint32_t m, bool require_y_nonzero) {
  const std::uint32_t units = f.q() - 1;
  const std::uint32_t g = units % 3 == 0 ? 3 : 1;
  const unsigned target = f.trace(f.theta_pow(-static_cast<std::int64_t>(m)));
  // matches[r] = #{x != 0 : log x = r (mod g), Tr(x) = target}
  std::uint64_t matches[3] = {0, 0, 0};
  for (std::uint32_t e = 0; e < units; ++e) {
    if (f.trace(f.theta_pow(e)) == target) ++matches[e % g];
  }
  std::vector<std::uint64_t> out(units);
  for (std::uint32_t e = 0; e < units; ++e) {
    // z ranges over theta^{-(e+m)} times the inverse cubes, each hit g times.
    const std::int64_t shift = -(static_cast<std::int64_t>(e) + m);
    const auto r = static_cast<std::uint32_t>((shift % g + g) % g);
    out[e] = 2 * g * matches[r] + (require_y_nonzero ? 0 : 1);
  }
  return out;
}

bool weil_check(std::int64_t n, std::int64_t q, std::int64_t d) {
  __extension__ typedef __int128 i128;
  const i128 slack = static_cast<i128>(n > q ? n - q : q - n) - static_cast<i128>(d) * d;
  if (slack <= 0) return true;
  const i128 coeff = static_cast<i128>(d - 1) * (d - 2);
  return slack * slack <= coeff * coeff * q;
}

Mat2 mat_multiply(const Field& f, const Mat2& x, const Mat2& y) {
  return {f.mul(x.a, y.a) ^ f.mul(x.b, y.c), f.mul(x.a, y.b) ^ f.mul(x.b, y.d),
          f.mul(x.c, y.a) ^ f.mul(x.d, y.c), f.mul(x.c, y.b) ^ f.mul(x.d, y.d)};
}

Permutation projective_permutation(const Field& f, const Mat2& x) {
  if ((f.mul(x.a, x.d) ^ f.mul(x.b, x.c)) == 0) throw Error(ErrorCode::BadParams, "singular matrix");
  const std::uint32_t q = f.q();
  std::vector<Point> img(q + 1);
  for (std::uint32_t i = 0; i <= q; ++i) {
    const FieldElem v0 = i < q ? 1 : 0;
    const FieldElem v1 = i < q ? i : 1;
    const FieldElem w0 = f.mul(v0, x.a) ^ f.mul(v1, x.c);
    const FieldElem w1 = f.mul(v0, x.b) ^ f.mul(v1, x.d);
    img[i] = w0 != 0 ? f.mul(w1, f.inv(w0)) : q;
  }
  return Permutation(std::move(img));
}

}  // namespace hamvt
