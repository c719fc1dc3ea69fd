#include "ade/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ade/qpoly.hpp"

namespace ade {

namespace {

using ZPoly = std::vector<mpz_class>;  // dense, index = power

long gcd_l(long a, long b) { return std::gcd(a, b); }

long lcm_l(long a, long b) { return a / std::gcd(a, b) * b; }

// Exact division of integer polynomials (remainder known to vanish).
ZPoly zdiv_exact(const ZPoly& a, const ZPoly& b) {
  ZPoly r = a;
  int db = static_cast<int>(b.size()) - 1;
  int dr = static_cast<int>(r.size()) - 1;
  ZPoly q(dr - db + 1, mpz_class(0));
  for (int i = dr; i >= db; --i) {
    if (r[i] == 0) continue;
    mpz_class f = r[i] / b[db];
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b[j];
  }
  return q;
}

struct CycloTable {
  long L = 1;
  long phi = 1;
  ZPoly cyclo;                                // Phi_L, monic
  std::vector<std::vector<mpq_class>> powred;  // x^j mod Phi_L, j < 2*phi-1
};

std::mutex g_mutex;
std::map<long, CycloTable> g_tables;
std::map<long, ZPoly> g_cyclos;

const ZPoly& cyclo_raw(long L) {
  auto it = g_cyclos.find(L);
  if (it != g_cyclos.end()) return it->second;
  ZPoly xn(L + 1, mpz_class(0));
  xn[0] = -1;
  xn[L] = 1;  // x^L - 1
  ZPoly acc{mpz_class(1)};
  for (long d = 1; d < L; ++d)
    if (L % d == 0) {
      const ZPoly& pd = cyclo_raw(d);
      ZPoly prod(acc.size() + pd.size() - 1, mpz_class(0));
      for (size_t i = 0; i < acc.size(); ++i)
        for (size_t j = 0; j < pd.size(); ++j) prod[i + j] += acc[i] * pd[j];
      acc = std::move(prod);
    }
  return g_cyclos.emplace(L, zdiv_exact(xn, acc)).first->second;
}

const CycloTable& table(long L) {
  std::lock_guard<std::mutex> lock(g_mutex);
  auto it = g_tables.find(L);
  if (it != g_tables.end()) return it->second;
  CycloTable t;
  t.L = L;
  t.cyclo = cyclo_raw(L);
  t.phi = static_cast<long>(t.cyclo.size()) - 1;
  long n = t.phi;
  t.powred.resize(std::max<long>(2 * n - 1, 1));
  for (long j = 0; j < n; ++j) {
    t.powred[j].assign(n, mpq_class(0));
    t.powred[j][j] = 1;
  }
  // x^j = x * x^{j-1} mod Phi; Phi monic so x^n = -(lower part).
  for (long j = n; j < 2 * n - 1; ++j) {
    std::vector<mpq_class> v(n, mpq_class(0));
    const auto& prev = t.powred[j - 1];
    for (long i = 0; i < n - 1; ++i) v[i + 1] = prev[i];
    const mpq_class top = prev[n - 1];
    if (top != 0)
      for (long i = 0; i < n; ++i) v[i] -= top * mpq_class(t.cyclo[i]);
    t.powred[j] = std::move(v);
  }
  return g_tables.emplace(L, std::move(t)).first->second;
}

std::vector<mpq_class> reduce_product(const CycloTable& t,
                                      const std::vector<mpq_class>& prod) {
  std::vector<mpq_class> r(t.phi, mpq_class(0));
  for (size_t j = 0; j < prod.size(); ++j) {
    if (prod[j] == 0) continue;
    const auto& row = t.powred[j];
    for (long i = 0; i < t.phi; ++i)
      if (row[i] != 0) r[i] += prod[j] * row[i];
  }
  return r;
}

// Representation of zeta_L^k (k reduced mod L) at conductor L.
std::vector<mpq_class> power_vec(const CycloTable& t, long k) {
  k %= t.L;
  if (k < 0) k += t.L;
  if (k < t.phi) {
    std::vector<mpq_class> v(t.phi, mpq_class(0));
    v[k] = 1;
    return v;
  }
  // Reduce x^k mod Phi_L by repeated shift.
  std::vector<mpq_class> v(t.phi, mpq_class(0));
  v[t.phi - 1] = 1;
  for (long j = t.phi - 1; j < k; ++j) {
    std::vector<mpq_class> w(t.phi, mpq_class(0));
    mpq_class top = v[t.phi - 1];
    for (long i = 0; i < t.phi - 1; ++i) w[i + 1] = v[i];
    if (top != 0)
      for (long i = 0; i < t.phi; ++i) w[i] -= top * mpq_class(t.cyclo[i]);
    v = std::move(w);
  }
  return v;
}

// Gaussian elimination solve M y = rhs over Q; M given column-major.
// Returns empty vector when inconsistent.
std::vector<mpq_class> solve_columns(std::vector<std::vector<mpq_class>> cols,
                                     std::vector<mpq_class> rhs) {
  const size_t ncols = cols.size();
  const size_t nrows = rhs.size();
  std::vector<long> pivot_of_col(ncols, -1);
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t sel = row;
    while (sel < nrows && cols[col][sel] == 0) ++sel;
    if (sel == nrows) continue;
    for (size_t c = 0; c < ncols; ++c) std::swap(cols[c][row], cols[c][sel]);
    std::swap(rhs[row], rhs[sel]);
    mpq_class inv = 1 / cols[col][row];
    for (size_t c = 0; c < ncols; ++c) cols[c][row] *= inv;
    rhs[row] *= inv;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == row || cols[col][r] == 0) continue;
      mpq_class f = cols[col][r];
      for (size_t c = 0; c < ncols; ++c) cols[c][r] -= f * cols[c][row];
      rhs[r] -= f * rhs[row];
    }
    pivot_of_col[col] = static_cast<long>(row);
    ++row;
  }
  for (size_t r = row; r < nrows; ++r)
    if (rhs[r] != 0) return {};  // inconsistent
  std::vector<mpq_class> y(ncols, mpq_class(0));
  for (size_t col = 0; col < ncols; ++col)
    if (pivot_of_col[col] >= 0) y[col] = rhs[pivot_of_col[col]];
  return y;
}

}  // namespace

long euler_phi(long n) {
  long r = n;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

const std::vector<mpz_class>& cyclotomic_poly(long L) {
  std::lock_guard<std::mutex> lock(g_mutex);
  return cyclo_raw(L);
}

bool Scalar::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool Scalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class Scalar::rational_value() const {
  if (!is_rational()) throw std::domain_error("Scalar: not rational: " + to_string());
  return c_[0];
}

void Scalar::align(Scalar& a, Scalar& b) {
  if (a.L_ == b.L_) return;
  long M = lcm_l(a.L_, b.L_);
  a = a.promoted(M);
  b = b.promoted(M);
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  return a;
}

Scalar Scalar::operator-() const {
  Scalar a = *this;
  for (auto& c : a.c_) c = -c;
  return a;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  const CycloTable& t = table(a.L_);
  std::vector<mpq_class> prod(2 * t.phi - 1, mpq_class(0));
  for (long i = 0; i < t.phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (long j = 0; j < t.phi; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return Scalar(a.L_, reduce_product(t, prod));
}

Scalar Scalar::operator*(const mpq_class& r) const {
  Scalar a = *this;
  for (auto& c : a.c_) c *= r;
  return a;
}

Scalar Scalar::operator/(const mpq_class& r) const {
  if (r == 0) throw std::domain_error("Scalar: division by zero rational");
  Scalar a = *this;
  for (auto& c : a.c_) c /= r;
  return a;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  const CycloTable& t = table(L_);
  qpoly::Poly g(c_.begin(), c_.end());
  qpoly::trim(g);
  qpoly::Poly phi(t.cyclo.size());
  for (size_t i = 0; i < t.cyclo.size(); ++i) phi[i] = mpq_class(t.cyclo[i]);
  auto [d, u, v] = qpoly::ext_gcd(g, phi);
  (void)v;
  if (qpoly::deg(d) != 0)
    throw std::domain_error("Scalar: non-invertible element (gcd degree > 0)");
  // u*g = 1 mod Phi; reduce u.
  std::vector<mpq_class> uu(u.begin(), u.end());
  uu.resize(std::max<size_t>(uu.size(), 1), mpq_class(0));
  if (static_cast<long>(uu.size()) > 2 * t.phi - 1) {
    // ext_gcd keeps deg(u) < deg(phi); this cannot trigger, guard anyway.
    auto [q, r] = qpoly::divmod(qpoly::Poly(uu.begin(), uu.end()), phi);
    (void)q;
    uu.assign(r.begin(), r.end());
  }
  uu.resize(2 * t.phi - 1, mpq_class(0));
  return Scalar(L_, reduce_product(t, uu));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
  Scalar a = *this, b = o;
  align(a, b);
  return a.c_ == b.c_;
}

Scalar Scalar::galois(long t) const {
  long m = t % L_;
  if (m < 0) m += L_;
  if (gcd_l(m == 0 ? L_ : m, L_) != 1)
    throw std::domain_error("Scalar: galois exponent not coprime to conductor");
  const CycloTable& tab = table(L_);
  std::vector<mpq_class> acc(tab.phi, mpq_class(0));
  for (long j = 0; j < tab.phi; ++j) {
    if (c_[j] == 0) continue;
    auto v = power_vec(tab, j * m);
    for (long i = 0; i < tab.phi; ++i)
      if (v[i] != 0) acc[i] += c_[j] * v[i];
  }
  return Scalar(L_, std::move(acc));
}

Scalar Scalar::conj() const { return L_ == 1 ? *this : galois(L_ - 1); }

Scalar Scalar::pow(long e) const {
  if (e == 0) return Scalar::one();
  Scalar base = e > 0 ? *this : inverse();
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Scalar acc = Scalar::one();
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

Scalar Scalar::promoted(long M) const {
  if (M == L_) return *this;
  if (M % L_ != 0) throw std::domain_error("Scalar: promotion target not a multiple");
  const CycloTable& t = table(M);
  long step = M / L_;
  std::vector<mpq_class> acc(t.phi, mpq_class(0));
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    auto v = power_vec(t, static_cast<long>(j) * step);
    for (long i = 0; i < t.phi; ++i)
      if (v[i] != 0) acc[i] += c_[j] * v[i];
  }
  return Scalar(M, std::move(acc));
}

Scalar Scalar::demoted(long d) const {
  if (d == L_) return *this;
  if (d < 1 || L_ % d != 0) throw std::domain_error("Scalar: demotion target must divide conductor");
  const CycloTable& t = table(L_);
  long pd = euler_phi(d);
  long step = L_ / d;
  std::vector<std::vector<mpq_class>> cols;
  cols.reserve(pd);
  for (long j = 0; j < pd; ++j) cols.push_back(power_vec(t, j * step));
  auto y = solve_columns(std::move(cols), c_);
  if (y.empty() && !is_zero())
    throw std::domain_error("Scalar: element not in requested subfield");
  y.resize(pd, mpq_class(0));
  return Scalar(d, std::move(y));
}

Scalar Scalar::minimal() const {
  for (long d = 1; d <= L_; ++d) {
    if (L_ % d != 0) continue;
    try {
      return demoted(d);
    } catch (const std::domain_error&) {
    }
  }
  return *this;
}

std::complex<double> Scalar::to_complex() const {
  std::complex<double> z(0.0), zeta = std::polar(1.0, 2.0 * M_PI / static_cast<double>(L_));
  std::complex<double> p(1.0);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] != 0) z += c_[j].get_d() * p;
    p *= zeta;
  }
  return z;
}

std::string Scalar::to_string() const {
  mpz_class den(1);
  for (const auto& c : c_) den = lcm(den, c.get_den());
  std::ostringstream os;
  os << "[" << L_ << ":" << den.get_str() << ":";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ",";
    mpz_class num = c_[i].get_num() * (den / c_[i].get_den());
    os << num.get_str();
  }
  os << "]";
  return os.str();
}

Scalar Scalar::parse(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("Scalar::parse: bad format");
  std::string body = s.substr(1, s.size() - 2);
  auto p1 = body.find(':');
  auto p2 = body.find(':', p1 + 1);
  if (p1 == std::string::npos || p2 == std::string::npos)
    throw std::invalid_argument("Scalar::parse: bad format");
  long L = std::stol(body.substr(0, p1));
  mpz_class den(body.substr(p1 + 1, p2 - p1 - 1));
  std::vector<mpq_class> c;
  std::stringstream cs(body.substr(p2 + 1));
  std::string tok;
  while (std::getline(cs, tok, ',')) {
    mpq_class q(mpz_class(tok), den);
    q.canonicalize();
    c.push_back(q);
  }
  if (static_cast<long>(c.size()) != euler_phi(L))
    throw std::invalid_argument("Scalar::parse: wrong coefficient count");
  return Scalar(L, std::move(c));
}

std::string Scalar::pretty() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << c_[i].get_str() << ")";
    if (i == 1)
      os << "*z";
    else if (i > 1)
      os << "*z^" << i;
    first = false;
  }
  os << "  [z = zeta_" << L_ << "]";
  return os.str();
}

Scalar root_of_unity(long L, long k) {
  if (L < 1) throw std::domain_error("root_of_unity: L must be positive");
  k %= L;
  if (k < 0) k += L;
  long g = std::gcd(k == 0 ? L : k, L);
  long Lmin = L / g;
  long kmin = k / g;
  const CycloTable& t = table(Lmin);
  return Scalar(Lmin, power_vec(t, kmin));
}

Scalar q_number(long n, const Scalar& q) {
  if (n < 0) return -q_number(-n, q);
  // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}, valid for every q.
  Scalar r = Scalar::zero();
  for (long e = n - 1; e >= 1 - n; e -= 2) r += q.pow(e);
  return r;
}

Scalar q_factorial(long n, const Scalar& q) {
  Scalar r = Scalar::one();
  for (long j = 2; j <= n; ++j) r *= q_number(j, q);
  return r;
}

Scalar q_binomial(long n, long m, const Scalar& q) {
  if (m < 0 || m > n) throw std::domain_error("q_binomial: need 0 <= m <= n");
  Scalar den = q_factorial(m, q) * q_factorial(n - m, q);
  if (den.is_zero())
    throw std::domain_error("q_binomial: vanishing q-factorial in denominator");
  return q_factorial(n, q) / den;
}

}  // namespace ade
