#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_L), plus the float fallback.
//
// A Scalar is a vector of rationals of length phi(L): the coordinates of the
// element in the power basis 1, z, ..., z^{phi(L)-1} of Q(zeta_L), reduced
// modulo the L-th cyclotomic polynomial. Mixed-conductor arithmetic promotes
// both operands to the lcm. Equality across conductors is equality after
// promotion; within one conductor it is coefficient equality.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace ade {

class Scalar {
 public:
  Scalar() : L_(1), c_(1, mpq_class(0)) {}  // zero in Q
  explicit Scalar(const mpq_class& r) : L_(1), c_(1, r) {}
  explicit Scalar(long n) : L_(1), c_(1, mpq_class(n)) {}

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(mpq_class(1)); }

  long conductor() const { return L_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;        // lies in Q
  mpq_class rational_value() const;  // throws unless is_rational()

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on zero divisor
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar operator*(const mpq_class& r) const;
  Scalar operator/(const mpq_class& r) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator==(long n) const { return *this == Scalar(n); }
  bool operator!=(long n) const { return !(*this == n); }

  Scalar inverse() const;
  Scalar conj() const;                 // complex conjugation  z -> z^{-1}
  Scalar galois(long t) const;         // z -> z^t, gcd(t, L) = 1
  Scalar pow(long e) const;            // integer powers, negative allowed

  // Conductor embeddings. promoted: L | M required. demoted: d | L required,
  // throws std::domain_error if the element does not lie in Q(zeta_d).
  Scalar promoted(long M) const;
  Scalar demoted(long d) const;
  Scalar minimal() const;  // demote to the smallest possible conductor

  std::complex<double> to_complex() const;

  // Canonical text grammar: "[L:den:c0,c1,...]" with integer ci over the
  // common denominator den. Round-trips through parse().
  std::string to_string() const;
  static Scalar parse(const std::string& s);
  std::string pretty() const;  // human form, not for round-trip

 private:
  Scalar(long L, std::vector<mpq_class> c) : L_(L), c_(std::move(c)) {}
  static void align(Scalar& a, Scalar& b);

  long L_;
  std::vector<mpq_class> c_;

  friend Scalar root_of_unity(long L, long k);
};

inline Scalar operator*(const mpq_class& r, const Scalar& s) { return s * r; }

// zeta_L^k, stored at the minimal conductor L/gcd(L,k).
Scalar root_of_unity(long L, long k);

// [n] = (q^n - q^{-n}) / (q - q^{-1}); [-n] = -[n].
Scalar q_number(long n, const Scalar& q);
Scalar q_factorial(long n, const Scalar& q);
// [n]! / ([n-m]! [m]!); throws std::domain_error when a vanishing
// q-factorial makes the quotient ill-defined.
Scalar q_binomial(long n, long m, const Scalar& q);

long euler_phi(long n);
// Coefficients of the L-th cyclotomic polynomial (monic, degree phi(L)).
const std::vector<mpz_class>& cyclotomic_poly(long L);

struct FloatScalar {
  std::complex<double> z;
  double tol = 1e-9;

  FloatScalar() : z(0.0) {}
  explicit FloatScalar(std::complex<double> v, double t = 1e-9) : z(v), tol(t) {}
  explicit FloatScalar(const Scalar& s, double t = 1e-9) : z(s.to_complex()), tol(t) {}

  bool is_zero() const { return std::abs(z) < tol; }
  bool eq(const FloatScalar& o) const { return std::abs(z - o.z) < std::max(tol, o.tol); }
  FloatScalar operator+(const FloatScalar& o) const { return FloatScalar(z + o.z, tol); }
  FloatScalar operator-(const FloatScalar& o) const { return FloatScalar(z - o.z, tol); }
  FloatScalar operator*(const FloatScalar& o) const { return FloatScalar(z * o.z, tol); }
  FloatScalar operator/(const FloatScalar& o) const { return FloatScalar(z / o.z, tol); }
};

}  // namespace ade
