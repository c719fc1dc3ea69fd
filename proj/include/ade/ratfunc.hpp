#pragma once

// Univariate rational functions over Q in a formal variable q, reduced
// (gcd-cancelled, monic denominator). This is the coefficient field used to
// evaluate projector words at symbolic q before specializing q to a root of
// unity: expressions that are regular at the root stay regular here.

#include <gmpxx.h>

#include <string>

#include "ade/qpoly.hpp"
#include "ade/scalar.hpp"

namespace ade {

class RatFunc {
 public:
  RatFunc() : num_{}, den_{mpq_class(1)} {}  // zero
  explicit RatFunc(const mpq_class& r) : num_{}, den_{mpq_class(1)} {
    if (r != 0) num_ = {r};
  }
  explicit RatFunc(long n) : RatFunc(mpq_class(n)) {}
  RatFunc(qpoly::Poly num, qpoly::Poly den);  // reduces

  static RatFunc variable();  // q

  bool is_zero() const { return num_.empty(); }
  const qpoly::Poly& num() const { return num_; }
  const qpoly::Poly& den() const { return den_; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  RatFunc operator*(const mpq_class& r) const { return *this * RatFunc(r); }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator==(long n) const { return *this == RatFunc(n); }
  bool operator!=(long n) const { return !(*this == n); }

  RatFunc inverse() const;
  RatFunc pow(long e) const;

  // Specialize q -> value (must not be a pole: denominator nonzero there).
  Scalar evaluate(const Scalar& q) const;

  std::string to_string() const;

 private:
  qpoly::Poly num_, den_;
};

inline RatFunc operator*(const mpq_class& r, const RatFunc& f) { return f * r; }

RatFunc q_number_rf(long n);              // [n] as a rational function of q
RatFunc q_factorial_rf(long n);
RatFunc q_binomial_rf(long n, long m);

}  // namespace ade
