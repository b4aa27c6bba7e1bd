#pragma once

// Dense univariate polynomials over a BaseField, little-endian coefficient
// vectors with no trailing zeros (the zero polynomial is the empty vector).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "srmk/gf.hpp"

namespace srmk::detail {

using Poly = std::vector<BaseField::value_type>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly poly_sub(const BaseField& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline Poly poly_mul(const BaseField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

/// Remainder of a modulo d (d nonzero); quotient written to `quot` when given.
inline Poly poly_divmod(const BaseField& f, Poly a, const Poly& d, Poly* quot = nullptr) {
  trim(a);
  const std::size_t dd = d.size() - 1;
  const auto lead_inv = f.inv(d.back());
  if (quot) quot->assign(a.size() >= d.size() ? a.size() - dd : 0, 0);
  while (a.size() >= d.size()) {
    const std::size_t shift = a.size() - d.size();
    const auto c = f.mul(a.back(), lead_inv);
    for (std::size_t i = 0; i <= dd; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, d[i]));
    if (quot) (*quot)[shift] = c;
    trim(a);
  }
  return a;
}

inline Poly poly_mulmod(const BaseField& f, const Poly& a, const Poly& b, const Poly& mod) {
  return poly_divmod(f, poly_mul(f, a, b), mod);
}

inline Poly poly_powmod(const BaseField& f, Poly a, std::uint64_t e, const Poly& mod) {
  Poly r{1};
  r = poly_divmod(f, r, mod);
  a = poly_divmod(f, a, mod);
  while (e) {
    if (e & 1) r = poly_mulmod(f, r, a, mod);
    e >>= 1;
    if (e) a = poly_mulmod(f, a, a, mod);
  }
  return r;
}

inline Poly make_monic(const BaseField& f, Poly a) {
  if (a.empty()) return a;
  const auto c = f.inv(a.back());
  for (auto& x : a) x = f.mul(x, c);
  return a;
}

inline Poly poly_gcd(const BaseField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_divmod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(f, std::move(a));
}

/// Inverse of a modulo mod by the extended Euclidean algorithm; nullopt if not coprime.
inline std::optional<Poly> poly_inverse_mod(const BaseField& f, const Poly& a, const Poly& mod) {
  Poly r0 = mod, r1 = poly_divmod(f, a, mod);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    Poly q;
    Poly r2 = poly_divmod(f, r0, r1, &q);
    Poly s2 = poly_sub(f, s0, poly_mul(f, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) return std::nullopt;
  const auto c = f.inv(r0[0]);
  for (auto& x : s0) x = f.mul(x, c);
  return poly_divmod(f, s0, mod);
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Rabin's test: f of degree n is irreducible over F_q iff x^{q^n} = x mod f and
/// gcd(x^{q^{n/r}} - x, f) = 1 for every prime r dividing n.
inline bool rabin_irreducible(const BaseField& f, const Poly& poly) {
  if (poly.size() < 2) return false;
  const std::size_t n = poly.size() - 1;
  if (n == 1) return true;
  const Poly x{0, 1};
  // frob[i] = x^{q^i} mod poly
  std::vector<Poly> frob(n + 1);
  frob[0] = poly_divmod(f, x, poly);
  for (std::size_t i = 1; i <= n; ++i) frob[i] = poly_powmod(f, frob[i - 1], f.order(), poly);
  if (poly_sub(f, frob[n], frob[0]).size() != 0) return false;
  for (auto r : prime_factors(n)) {
    const Poly g = poly_gcd(f, poly_sub(f, frob[n / r], frob[0]), poly);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace srmk::detail
