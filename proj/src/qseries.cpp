#include "ade/qseries.hpp"

#include <sstream>
#include <stdexcept>

namespace ade {

namespace {

std::optional<mpq_class> min_opt(const std::optional<mpq_class>& a,
                                 const std::optional<mpq_class>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

mpq_class parse_q(const std::string& s) {
  mpq_class q(s);
  q.canonicalize();
  return q;
}

}  // namespace

void QSeries::drop_invalid() {
  for (auto it = c_.begin(); it != c_.end();) {
    if (it->second == 0 || (valid_ && it->first > *valid_))
      it = c_.erase(it);
    else
      ++it;
  }
}

QSeries QSeries::monomial(const mpq_class& exponent, const mpq_class& coeff) {
  QSeries s;
  if (coeff != 0) s.c_[exponent] = coeff;
  return s;
}

QSeries QSeries::inverse_euler(const mpq_class& offset, long order) {
  auto p = partition_numbers(order);
  QSeries s;
  for (long j = 0; j <= order; ++j) s.c_[offset + j] = mpq_class(p[j]);
  s.valid_ = offset + order;
  return s;
}

bool QSeries::is_zero() const { return c_.empty(); }

mpq_class QSeries::coeff(const mpq_class& e) const {
  auto it = c_.find(e);
  return it == c_.end() ? mpq_class(0) : it->second;
}

mpq_class QSeries::min_exponent() const {
  if (c_.empty()) throw std::domain_error("QSeries: zero series has no min exponent");
  return c_.begin()->first;
}

QSeries QSeries::operator+(const QSeries& o) const {
  QSeries r = *this;
  for (const auto& [e, v] : o.c_) r.c_[e] += v;
  r.valid_ = min_opt(valid_, o.valid_);
  r.drop_invalid();
  return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
  QSeries r = *this;
  for (const auto& [e, v] : o.c_) r.c_[e] -= v;
  r.valid_ = min_opt(valid_, o.valid_);
  r.drop_invalid();
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& [e, v] : r.c_) v = -v;
  return r;
}

QSeries QSeries::operator*(const mpq_class& s) const {
  QSeries r;
  r.valid_ = valid_;
  if (s == 0) return r;
  r.c_ = c_;
  for (auto& [e, v] : r.c_) v *= s;
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  QSeries r;
  // Validity: a term of exponent e in the product is complete iff every
  // splitting e = e1 + e2 with e1, e2 beyond the operand bounds is excluded.
  std::optional<mpq_class> v;
  if (valid_ && !o.c_.empty()) v = min_opt(v, *valid_ + o.c_.begin()->first);
  if (o.valid_ && !c_.empty()) v = min_opt(v, *o.valid_ + c_.begin()->first);
  if (valid_ && o.c_.empty()) v = valid_;
  if (o.valid_ && c_.empty()) v = min_opt(v, o.valid_);
  r.valid_ = v;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) {
      mpq_class e = e1 + e2;
      if (v && e > *v) continue;
      r.c_[e] += c1 * c2;
    }
  r.drop_invalid();
  return r;
}

QSeries QSeries::truncated(const mpq_class& v) const {
  QSeries r = *this;
  r.valid_ = min_opt(valid_, v);
  r.drop_invalid();
  return r;
}

bool QSeries::operator==(const QSeries& o) const {
  auto v = min_opt(valid_, o.valid_);
  for (const auto& [e, c] : c_) {
    if (v && e > *v) continue;
    if (o.coeff(e) != c) return false;
  }
  for (const auto& [e, c] : o.c_) {
    if (v && e > *v) continue;
    if (coeff(e) != c) return false;
  }
  return true;
}

std::string QSeries::to_string() const {
  std::ostringstream os;
  os << "qs[";
  if (valid_)
    os << valid_->get_str();
  else
    os << "inf";
  os << ";";
  bool first = true;
  for (const auto& [e, c] : c_) {
    if (!first) os << ",";
    os << e.get_str() << "=" << c.get_str();
    first = false;
  }
  os << "]";
  return os.str();
}

QSeries QSeries::parse(const std::string& s) {
  if (s.size() < 5 || s.substr(0, 3) != "qs[" || s.back() != ']')
    throw std::invalid_argument("QSeries::parse: bad format");
  std::string body = s.substr(3, s.size() - 4);
  auto sep = body.find(';');
  if (sep == std::string::npos) throw std::invalid_argument("QSeries::parse: bad format");
  QSeries r;
  std::string v = body.substr(0, sep);
  if (v != "inf") r.valid_ = parse_q(v);
  std::stringstream ts(body.substr(sep + 1));
  std::string tok;
  while (std::getline(ts, tok, ',')) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("QSeries::parse: bad term");
    r.c_[parse_q(tok.substr(0, eq))] = parse_q(tok.substr(eq + 1));
  }
  r.drop_invalid();
  return r;
}

std::vector<mpz_class> partition_numbers(long n) {
  // Euler's pentagonal-number recurrence.
  std::vector<mpz_class> p(n + 1);
  p[0] = 1;
  for (long m = 1; m <= n; ++m) {
    mpz_class acc(0);
    for (long k = 1;; ++k) {
      long g1 = k * (3 * k - 1) / 2;
      long g2 = k * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      mpz_class t(0);
      if (g1 <= m) t += p[m - g1];
      if (g2 <= m) t += p[m - g2];
      if (k % 2 == 1)
        acc += t;
      else
        acc -= t;
    }
    p[m] = acc;
  }
  return p;
}

QSeries verma_character(const mpq_class& h, const mpq_class& c, long order) {
  return QSeries::inverse_euler(h - c / 24, order);
}

}  // namespace ade
