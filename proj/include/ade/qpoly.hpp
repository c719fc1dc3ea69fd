#pragma once

// Dense univariate polynomials over Q, coefficient index = power.
// Shared by the cyclotomic scalar kernel and the rational-function field.

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

namespace ade::qpoly {

using Poly = std::vector<mpq_class>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline bool is_zero(const Poly& p) {
  for (const auto& c : p)
    if (c != 0) return false;
  return true;
}

inline int deg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;  // zero polynomial
}

inline Poly add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

inline Poly sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (is_zero(a) || is_zero(b)) return {};
  Poly r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

inline Poly scale(const Poly& a, const mpq_class& s) {
  if (s == 0) return {};
  Poly r = a;
  for (auto& c : r) c *= s;
  trim(r);
  return r;
}

// Euclidean division a = q*b + r, deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  int db = deg(b);
  if (db < 0) throw std::domain_error("qpoly: division by zero polynomial");
  Poly r = a;
  trim(r);
  int dr = deg(r);
  if (dr < db) return {Poly{}, r};
  Poly q(dr - db + 1, mpq_class(0));
  const mpq_class& lead = b[db];
  while ((dr = deg(r)) >= db) {
    mpq_class f = r[dr] / lead;
    q[dr - db] = f;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b[i];
  }
  trim(r);
  trim(q);
  return {q, r};
}

inline Poly make_monic(const Poly& a) {
  int d = deg(a);
  if (d < 0) return {};
  return scale(a, mpq_class(1) / a[d]);
}

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!is_zero(b)) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic.
inline std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  trim(r0);
  trim(r1);
  Poly u0{mpq_class(1)}, u1{}, v0{}, v1{mpq_class(1)};
  while (!is_zero(r1)) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly u2 = sub(u0, mul(q, u1));
    Poly v2 = sub(v0, mul(q, v1));
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  int d = deg(r0);
  if (d < 0) return {r0, u0, v0};
  mpq_class inv = mpq_class(1) / r0[d];
  return {scale(r0, inv), scale(u0, inv), scale(v0, inv)};
}

template <typename T>
T eval(const Poly& p, const T& x, const T& zero, const T& one) {
  T acc = zero;
  for (int i = deg(p); i >= 0; --i) {
    acc = acc * x;
    if (p[i] != 0) acc = acc + one * p[i];
  }
  return acc;
}

}  // namespace ade::qpoly
