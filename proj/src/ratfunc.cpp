#include "ade/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace ade {

using qpoly::Poly;

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  qpoly::trim(num_);
  qpoly::trim(den_);
  if (qpoly::is_zero(den_)) throw std::domain_error("RatFunc: zero denominator");
  if (qpoly::is_zero(num_)) {
    num_.clear();
    den_ = {mpq_class(1)};
    return;
  }
  Poly g = qpoly::gcd(num_, den_);
  if (qpoly::deg(g) > 0) {
    num_ = qpoly::divmod(num_, g).first;
    den_ = qpoly::divmod(den_, g).first;
  }
  int d = qpoly::deg(den_);
  mpq_class lead = den_[d];
  if (lead != 1) {
    den_ = qpoly::scale(den_, 1 / lead);
    num_ = qpoly::scale(num_, 1 / lead);
  }
}

RatFunc RatFunc::variable() { return RatFunc(Poly{mpq_class(0), mpq_class(1)}, Poly{mpq_class(1)}); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(qpoly::add(qpoly::mul(num_, o.den_), qpoly::mul(o.num_, den_)),
                 qpoly::mul(den_, o.den_));
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(qpoly::sub(qpoly::mul(num_, o.den_), qpoly::mul(o.num_, den_)),
                 qpoly::mul(den_, o.den_));
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(qpoly::mul(num_, o.num_), qpoly::mul(den_, o.den_));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(qpoly::mul(num_, o.den_), qpoly::mul(den_, o.num_));
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e == 0) return RatFunc(1);
  RatFunc base = e > 0 ? *this : inverse();
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  RatFunc acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Scalar RatFunc::evaluate(const Scalar& q) const {
  Scalar den = qpoly::eval(den_, q, Scalar::zero(), Scalar::one());
  if (den.is_zero()) throw std::domain_error("RatFunc: pole at evaluation point");
  Scalar num = qpoly::eval(num_, q, Scalar::zero(), Scalar::one());
  return num / den;
}

std::string RatFunc::to_string() const {
  auto poly_str = [](const Poly& p) {
    if (qpoly::is_zero(p)) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] == 0) continue;
      if (!first) os << " + ";
      os << "(" << p[i].get_str() << ")";
      if (i == 1)
        os << "*q";
      else if (i > 1)
        os << "*q^" << i;
      first = false;
    }
    return os.str();
  };
  return "(" + poly_str(num_) + ") / (" + poly_str(den_) + ")";
}

RatFunc q_number_rf(long n) {
  if (n < 0) return -q_number_rf(-n);
  // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n} = (sum q^{2j}) / q^{n-1}.
  Poly num(2 * (n > 0 ? n - 1 : 0) + 1, mpq_class(0));
  if (n == 0) return RatFunc();
  for (long j = 0; j < n; ++j) num[2 * j] = 1;
  Poly den(n, mpq_class(0));
  den[n - 1] = 1;
  return RatFunc(std::move(num), std::move(den));
}

RatFunc q_factorial_rf(long n) {
  RatFunc r(1);
  for (long j = 2; j <= n; ++j) r *= q_number_rf(j);
  return r;
}

RatFunc q_binomial_rf(long n, long m) {
  if (m < 0 || m > n) throw std::domain_error("q_binomial_rf: need 0 <= m <= n");
  return q_factorial_rf(n) / (q_factorial_rf(m) * q_factorial_rf(n - m));
}

}  // namespace ade
