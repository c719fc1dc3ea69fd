#pragma once

// Truncated formal series in the modular parameter with rational exponents:
// a sparse exponent -> coefficient map plus a validity bound ("coefficients
// are known through exponents <= valid"). Exact objects (polynomials,
// monomials) carry an infinite bound.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace ade {

class QSeries {
 public:
  QSeries() = default;  // zero, exact

  static QSeries monomial(const mpq_class& exponent, const mpq_class& coeff = 1);
  // Product form q^{offset} / prod_{n=1..order}(1 - q^n), truncated so that
  // coefficients are valid through offset + order.
  static QSeries inverse_euler(const mpq_class& offset, long order);

  bool is_zero() const;  // no nonzero stored coefficients (up to validity)
  const std::map<mpq_class, mpq_class>& terms() const { return c_; }
  std::optional<mpq_class> valid_through() const { return valid_; }

  mpq_class coeff(const mpq_class& exponent) const;  // 0 if absent
  mpq_class min_exponent() const;                    // throws if zero series

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries operator*(const mpq_class& r) const;
  QSeries operator-() const;
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }

  QSeries truncated(const mpq_class& v) const;

  // Equality of coefficients through min(valid_A, valid_B); two exact series
  // must agree everywhere.
  bool operator==(const QSeries& o) const;
  bool operator!=(const QSeries& o) const { return !(*this == o); }

  std::string to_string() const;
  static QSeries parse(const std::string& s);

 private:
  void drop_invalid();  // erase terms beyond valid_, erase zeros

  std::map<mpq_class, mpq_class> c_;
  std::optional<mpq_class> valid_;  // nullopt = exact
};

inline QSeries operator*(const mpq_class& r, const QSeries& s) { return s * r; }

// Partition numbers p(0..n).
std::vector<mpz_class> partition_numbers(long n);

// Verma-module character: q^{h - c/24} / prod(1 - q^n), order terms.
QSeries verma_character(const mpq_class& h, const mpq_class& c, long order);

}  // namespace ade
