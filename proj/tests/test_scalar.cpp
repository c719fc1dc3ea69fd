#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>

#include "ade/ratfunc.hpp"
#include "ade/scalar.hpp"

using ade::RatFunc;
using ade::Scalar;

namespace {

Scalar rand_scalar(std::mt19937& rng, long L) {
  std::uniform_int_distribution<int> d(-3, 3);
  Scalar s = Scalar::zero();
  for (long k = 0; k < 4; ++k) {
    long e = std::uniform_int_distribution<long>(0, L - 1)(rng);
    s += ade::root_of_unity(L, e) * mpq_class(d(rng));
  }
  return s;
}

}  // namespace

TEST_CASE("roots of unity: defining properties") {
  Scalar i = ade::root_of_unity(4, 1);
  CHECK(i * i == Scalar(-1));
  CHECK(ade::root_of_unity(7, 0) == Scalar(1));

  // q = zeta_{2p'}^{-p} satisfies q^{p'} = (-1)^p.
  for (auto [p, pp] : {std::pair<long, long>{3, 4}, {1, 4}, {2, 3}, {5, 6}}) {
    Scalar q = ade::root_of_unity(2 * pp, -p);
    CHECK(q.pow(pp) == Scalar(p % 2 == 0 ? 1 : -1));
  }

  Scalar w = ade::root_of_unity(3, 1);
  CHECK(w.pow(3) == Scalar(1));
  CHECK(w != Scalar(1));
  CHECK(w * w + w + Scalar(1) == Scalar(0));
}

TEST_CASE("q-numbers") {
  Scalar q = ade::root_of_unity(40, 3);  // generic enough for [n], n <= 6
  CHECK(ade::q_number(1, q) == Scalar(1));
  CHECK(ade::q_number(-4, q) == -ade::q_number(4, q));
  CHECK(ade::q_number(2, q) == q + q.inverse());

  // [2] at q = e^{-i pi/3} equals 2 cos(pi/3) = 1.
  Scalar q6 = ade::root_of_unity(6, -1);
  CHECK(ade::q_number(2, q6) == Scalar(1));

  // [p'] vanishes at q = e^{-i pi p/p'}.
  for (auto [p, pp] : {std::pair<long, long>{3, 4}, {2, 3}, {1, 6}, {5, 6}}) {
    Scalar qr = ade::root_of_unity(2 * pp, -p);
    CHECK(ade::q_number(pp, qr).is_zero());
  }
}

TEST_CASE("q-binomials") {
  Scalar q = ade::root_of_unity(40, 1);
  CHECK(ade::q_binomial(5, 0, q) == Scalar(1));
  CHECK(ade::q_binomial(3, 1, q) == ade::q_number(3, q));
  // [4 choose 2] = q^{-4} + q^{-2} + 2 + q^2 + q^4.
  Scalar expect = q.pow(-4) + q.pow(-2) + Scalar(2) + q.pow(2) + q.pow(4);
  CHECK(ade::q_binomial(4, 2, q) == expect);
  // Vanishing q-factorial in the denominator is refused.
  Scalar qi = ade::root_of_unity(4, 1);  // [2] = 0 at q = i
  CHECK_THROWS_AS(ade::q_binomial(4, 2, qi), std::domain_error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(20240817);
  for (long L : {8L, 12L, 24L, 40L}) {
    for (int rep = 0; rep < 8; ++rep) {
      Scalar a = rand_scalar(rng, L), b = rand_scalar(rng, L), c = rand_scalar(rng, L);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Scalar(1));
        CHECK((a / a) == Scalar(1));
      }
    }
  }
}

TEST_CASE("cyclotomic structure") {
  for (long L : {8L, 12L, 15L, 24L, 40L, 48L, 120L}) {
    CHECK(ade::root_of_unity(L, 1).pow(L) == Scalar(1));
    const auto& phi = ade::cyclotomic_poly(L);
    CHECK(static_cast<long>(phi.size()) - 1 == ade::euler_phi(L));
    // Phi_L(zeta_L) = 0.
    Scalar z = ade::root_of_unity(L, 1), acc = Scalar::zero();
    for (size_t j = 0; j < phi.size(); ++j) acc += z.pow(static_cast<long>(j)) * mpq_class(phi[j]);
    CHECK(acc.is_zero());
  }
  CHECK(ade::euler_phi(1) == 1);
  CHECK(ade::euler_phi(120) == 32);
}

TEST_CASE("conductor embeddings are coherent") {
  std::mt19937 rng(7);
  for (int rep = 0; rep < 6; ++rep) {
    Scalar a = rand_scalar(rng, 8);
    Scalar lifted = a.promoted(40);
    CHECK(lifted.conductor() == 40);
    CHECK(lifted.demoted(8) == a);
    CHECK(lifted == a);  // cross-conductor equality
  }
  Scalar r = Scalar(mpq_class(7, 3)).promoted(24);
  CHECK(r.minimal().conductor() == 1);
  CHECK(r.minimal().rational_value() == mpq_class(7, 3));
  // zeta_8 is not in Q(zeta_4).
  CHECK_THROWS_AS(ade::root_of_unity(8, 1).demoted(4), std::domain_error);
}

TEST_CASE("galois and conjugation") {
  Scalar z = ade::root_of_unity(12, 1);
  CHECK(z.conj() == z.inverse());
  Scalar a = z * mpq_class(2) + z.pow(5) - Scalar(3);
  Scalar norm = a * a.conj();
  CHECK(norm == norm.conj());  // |a|^2 is real
  CHECK(a.galois(5).galois(5) == a);  // 5*5 = 25 = 1 mod 12
}

TEST_CASE("numeric evaluation") {
  auto z = ade::root_of_unity(8, 1).to_complex();
  CHECK(std::abs(z - std::polar(1.0, M_PI / 4)) < 1e-12);
  Scalar beta = ade::root_of_unity(10, 1) + ade::root_of_unity(10, -1);
  CHECK(std::abs(beta.to_complex() - 2.0 * std::cos(M_PI / 5)) < 1e-12);
}

TEST_CASE("text grammar round trip") {
  std::mt19937 rng(99);
  for (long L : {1L, 8L, 12L, 40L}) {
    for (int rep = 0; rep < 4; ++rep) {
      Scalar a = rand_scalar(rng, L) / mpq_class(6);
      CHECK(Scalar::parse(a.to_string()) == a);
    }
  }
}

TEST_CASE("rational functions in q") {
  RatFunc q = RatFunc::variable();
  // gcd cancellation: (q^2 - 1)/(q - 1) = q + 1.
  RatFunc f(ade::qpoly::Poly{mpq_class(-1), mpq_class(0), mpq_class(1)},
            ade::qpoly::Poly{mpq_class(-1), mpq_class(1)});
  CHECK(f == q + RatFunc(1));

  Scalar qc = ade::root_of_unity(40, 1);
  for (long n = 0; n <= 6; ++n)
    CHECK(ade::q_number_rf(n).evaluate(qc) == ade::q_number(n, qc));
  CHECK(ade::q_binomial_rf(4, 2).evaluate(qc) == ade::q_binomial(4, 2, qc));

  // Pole detection.
  RatFunc g = RatFunc(1) / (q - RatFunc(1));
  CHECK_THROWS_AS(g.evaluate(Scalar(1)), std::domain_error);

  // Limit-safe evaluation where the direct quotient is ill-defined:
  // [4 choose 2] at q = i equals 2 although [2] = 0 there.
  Scalar qi = ade::root_of_unity(4, 1);
  CHECK(ade::q_binomial_rf(4, 2).evaluate(qi) == Scalar(2));

  // Field laws.
  RatFunc a = q.pow(2) - RatFunc(3) * q, b = q + RatFunc(mpq_class(1, 2)), c = q.pow(-1);
  CHECK((a + b) * c == a * c + b * c);
  CHECK(a * b == b * a);
  CHECK((a / b) * b == a);
}
