#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ade/qseries.hpp"

using ade::QSeries;

namespace {

// prod_{n=1..order}(1 - q^n), exact polynomial.
QSeries euler_product(long order) {
  QSeries e = QSeries::monomial(0);
  for (long n = 1; n <= order; ++n)
    e *= QSeries::monomial(0) - QSeries::monomial(n);
  return e;
}

}  // namespace

TEST_CASE("partition numbers") {
  auto p = ade::partition_numbers(10);
  std::vector<long> expect{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  REQUIRE(p.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i) CHECK(p[i] == expect[i]);
}

TEST_CASE("verma character coefficients") {
  QSeries v = ade::verma_character(0, 0, 5);
  CHECK(v.min_exponent() == 0);
  std::vector<long> expect{1, 1, 2, 3, 5, 7};
  for (long j = 0; j <= 5; ++j) CHECK(v.coeff(j) == expect[j]);

  // Leading coefficient is always 1.
  QSeries w = ade::verma_character(mpq_class(3, 16), mpq_class(1, 2), 4);
  CHECK(w.coeff(w.min_exponent()) == 1);
  CHECK(w.min_exponent() == mpq_class(3, 16) - mpq_class(1, 48));

  // Shift property: verma(h+1) = q * verma(h) up to common validity.
  QSeries a = ade::verma_character(mpq_class(1, 3), 0, 6);
  QSeries b = ade::verma_character(mpq_class(1, 3) + 1, 0, 6);
  CHECK(b == a * QSeries::monomial(1));
}

TEST_CASE("ring laws with truncation") {
  QSeries a = ade::verma_character(0, 0, 8);
  QSeries b = QSeries::monomial(mpq_class(1, 2)) - QSeries::monomial(2, mpq_class(3, 4));
  QSeries c = ade::verma_character(mpq_class(1, 16), mpq_class(1, 2), 8);
  CHECK((a + b) * c == a * c + b * c);
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));
  CHECK(a - a == QSeries());
}

TEST_CASE("verma character times euler product is a monomial") {
  mpq_class h(5, 8), c(7, 10);
  QSeries v = ade::verma_character(h, c, 12);
  QSeries prod = v * euler_product(12);
  CHECK(prod == QSeries::monomial(h - c / 24));
}

TEST_CASE("validity bookkeeping") {
  QSeries v = ade::verma_character(0, 0, 3);  // valid through 3
  REQUIRE(v.valid_through().has_value());
  CHECK(*v.valid_through() == 3);
  QSeries w = v * QSeries::monomial(2);
  CHECK(*w.valid_through() == 5);
  // Beyond-validity coefficients do not affect equality.
  QSeries u = v + QSeries::monomial(7, 42);
  CHECK(u == v);
}

TEST_CASE("text grammar round trip") {
  QSeries v = ade::verma_character(mpq_class(1, 16), mpq_class(1, 2), 6);
  CHECK(QSeries::parse(v.to_string()) == v);
  QSeries exact = QSeries::monomial(mpq_class(-1, 48)) * mpq_class(2);
  QSeries r = QSeries::parse(exact.to_string());
  CHECK(r == exact);
  CHECK(!r.valid_through().has_value());
}
