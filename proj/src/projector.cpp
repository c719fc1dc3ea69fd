#include "ade/projector.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ade/linkmod.hpp"

namespace ade {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::domain_error(msg); }

Scalar beta_of(const Scalar& q) { return -(q + q.inverse()); }

// single-diagram composition, asserting that no contractible loop closes
AffineDiagram glue(const AffineDiagram& a, const AffineDiagram& b) {
  DiagramProduct p = compose_diagrams(a, b);
  if (p.beta_loops != 0)
    throw std::logic_error("projector: unexpected loop in generator chain");
  return p.d;
}

// (c_0)^s as one diagram of L(N-2s, N)
AffineDiagram lower_chain(long N, long s) {
  AffineDiagram d = diag_id(N);
  for (long m = 1; m <= s; ++m) d = glue(diag_c(N - 2 * (m - 1), 0), d);
  return d;
}

}  // namespace

const JWProjector& jones_wenzl(long n, const Scalar& q) {
  if (n < 1) fail("wenzl projector: need n >= 1");
  static std::map<std::pair<long, std::string>, JWProjector> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const std::string qs = q.to_string();
  auto it = cache.find({n, qs});
  if (it != cache.end()) return it->second;
  for (long m = 2; m <= n; ++m)
    if (q_number(m, q).is_zero())
      fail("wenzl projector: singular recursion, [" + std::to_string(m) +
           "] = 0 at q = " + q.pretty());
  const Scalar beta = beta_of(q);
  cache.try_emplace(std::make_pair(1L, qs),
                    JWProjector{1, q, DiagramVector(diag_id(1))});
  DiagramVector P = cache.at({1, qs}).expansion;  // P_m along the recursion
  for (long m = 1; m < n; ++m) {
    auto next = cache.find({m + 1, qs});
    if (next != cache.end()) {
      P = next->second.expansion;
      continue;
    }
    DiagramVector wide = tensor_id(P, 1);
    DiagramVector mid = compose(DiagramVector(diag_e(m + 1, m)), wide, beta);
    P = wide + compose(wide, mid, beta) * (q_number(m, q) / q_number(m + 1, q));
    cache.emplace(std::make_pair(m + 1, qs), JWProjector{m + 1, q, P});
  }
  return cache.at({n, qs});
}

Scalar gamma_coeff(long s, long l, long N, const Scalar& x, const Scalar& q,
                   UncoiledTag tag, const Scalar& aux) {
  if (N < 1) fail("gamma: need N >= 1");
  if (tag == UncoiledTag::kOdd ? N % 2 == 0 : N % 2 != 0)
    fail("gamma: size parity does not match the algebra tag");
  if (tag == UncoiledTag::kEvenOne && 2 * s == N) {
    if (l != 0) fail("gamma: the extra constant exists only at l = 0");
    const Scalar qh = q.pow(N / 2) + q.pow(-N / 2);
    const Scalar pref =
        ((q - q.inverse()).pow(N - 2) *
         q_factorial((N - 2) / 2, q).pow(2)).inverse() *
        mpq_class(1, 2);
    if (x == Scalar(1)) {
      if (aux - qh == Scalar(0))
        fail("gamma: extra constant pole, alpha = q^{N/2} + q^{-N/2}");
      return -(pref / (aux - qh));
    }
    if (x == Scalar(-1)) {
      if (aux + qh == Scalar(0))
        fail("gamma: extra constant pole, alpha = -(q^{N/2} + q^{-N/2})");
      return pref / (aux + qh);
    }
    return Scalar(0);
  }
  if (s < 0 || 2 * s > N - 1) fail("gamma: need 0 <= s <= (N-1)/2");
  if (l < 0 || l > N - 2 * s - 1) fail("gamma: need 0 <= l <= N-2s-1");
  if (s == 0) return x.pow(-l) * mpq_class(1, N);
  const Scalar fs = q_factorial(s, q), fs1 = q_factorial(s - 1, q);
  if (fs.is_zero() || fs1.is_zero())
    fail("gamma: vanishing q-factorial [s]! [s-1]! in the prefactor");
  const Scalar pref =
      x.pow(-l) * ((q - q.inverse()).pow(2 * s - 1) * fs * fs1).inverse() *
      mpq_class(1, N);
  const Scalar xx = x * x;
  Scalar total(0);
  for (int sigma : {+1, -1}) {
    for (long kappa = 1; kappa <= s; ++kappa) {
      const Scalar den = xx * q.pow(sigma * (N - 2 * kappa)) - Scalar(1);
      if (den.is_zero())
        fail("gamma: pole of the closed form at sigma = " +
             std::to_string(sigma) + ", kappa = " + std::to_string(kappa));
      const Scalar qb = q_binomial(N - kappa - 1, N - s - 1, q);
      if (qb.is_zero())
        fail("gamma: vanishing q-binomial [N-kappa-1; N-s-1] at kappa = " +
             std::to_string(kappa));
      for (long tau = 0; tau <= s - kappa; ++tau) {
        Scalar last(1);
        if (l == 0) {
          if (tau != 0) continue;
        } else {
          last = q_binomial(l + tau - 1, tau, q);
        }
        Scalar term = q.pow(sigma * (l * kappa + N * tau)) *
                      Scalar(((s + kappa) % 2 == 0 ? 1 : -1) * sigma);
        term = term / den;
        term = term * (q_binomial(s - 1, kappa - 1, q) / qb);
        term = term *
               q_binomial(N - s - l - kappa - tau - 1, s - kappa - tau, q) *
               last;
        total = total + term;
      }
    }
  }
  return pref * total;
}

Scalar gamma_s0_product(long s, long N, const Scalar& x, const Scalar& q) {
  if (N < 1 || s < 0 || 2 * s > N - 1)
    fail("gamma product form: need 0 <= s <= (N-1)/2");
  const Scalar xx = x * x;
  Scalar prod = x.pow(2 * s) * mpq_class(s % 2 == 0 ? 1 : -1, N);
  prod = prod * q_binomial(N - s - 1, s, q);
  for (int sigma : {+1, -1})
    for (long kappa = 1; kappa <= s; ++kappa) {
      const Scalar den = xx * q.pow(sigma * (N - 2 * kappa)) - Scalar(1);
      if (den.is_zero())
        fail("gamma product form: pole at sigma = " + std::to_string(sigma) +
             ", kappa = " + std::to_string(kappa));
      prod = prod / den;
    }
  return prod;
}

const UncoiledProjector& uncoiled_projector(long N, const Scalar& x,
                                            UncoiledTag tag, const Scalar& aux,
                                            const Scalar& q) {
  if (N < 1) fail("annular projector: need N >= 1");
  if (tag == UncoiledTag::kOdd ? N % 2 == 0 : N % 2 != 0)
    fail("annular projector: size parity does not match the algebra tag");
  if (tag == UncoiledTag::kEvenOne) {
    if (x.pow(N) != Scalar(1))
      fail("annular projector: first even quotient needs x^N = 1");
  } else if (x.pow(N) != aux) {
    fail("annular projector: need gamma = x^N");
  }
  static std::map<std::tuple<long, std::string, int, std::string, std::string>,
                  UncoiledProjector>
      cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(N, x.to_string(), static_cast<int>(tag),
                             aux.to_string(), q.to_string());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const Scalar beta = beta_of(q);
  const DiagramVector& pn = jones_wenzl(N, q).expansion;
  DiagramVector sum;
  for (long s = 0; 2 * s <= N - 1; ++s) {
    const AffineDiagram down = lower_chain(N, s);
    const AffineDiagram up = down.dagger();
    AffineDiagram rot = diag_id(N - 2 * s);
    for (long l = 0; l <= N - 2 * s - 1; ++l) {
      const Scalar c = gamma_coeff(s, l, N, x, q, tag, aux);
      if (!c.is_zero())
        sum = sum + compose(pn, compose(DiagramVector(glue(up, glue(rot, down))),
                                        pn, beta),
                            beta) *
                        c;
      if (l < N - 2 * s - 1) rot = glue(diag_omega(N - 2 * s), rot);
    }
  }
  if (tag == UncoiledTag::kEvenOne) {
    const Scalar c = gamma_coeff(N / 2, 0, N, x, q, tag, aux);
    if (!c.is_zero()) {
      const AffineDiagram down = lower_chain(N, N / 2);
      sum = sum +
            compose(pn,
                    compose(DiagramVector(glue(down.dagger(), down)), pn, beta),
                    beta) *
                c;
    }
  }
  UncoiledProjector proj{N, x, tag, sum};
  return cache.emplace(std::move(key), std::move(proj)).first->second;
}

namespace {

// transcribe a module vector into the diagram word mapping the seed to it
DiagramVector state_to_word(const ModuleVec& v) {
  const std::vector<LinkState>& b = basis(v.spec);
  DiagramVector w;
  for (size_t i = 0; i < b.size(); ++i)
    if (!v.c[i].is_zero()) w.add(rep_diagram(b[i]), v.c[i]);
  return w;
}

}  // namespace

DiagramVector disc_singular_word(long two_s, int sigma, int eps, long p,
                                 long pp) {
  if (two_s < 2 || two_s % 2 != 0)
    fail("disc word: need a positive even size 2s");
  return state_to_word(v_state_disc(0, two_s, sigma, eps, p, pp));
}

DiagramVector strip_singular_word(long two_k, long p, long pp) {
  if (two_k < 0 || two_k > pp - 2)
    fail("strip word: need 0 <= 2k <= p'-2");
  return state_to_word(v_state_strip(two_k, p, pp));
}

DiagramVector strip_singular_product(long two_k, long p, long pp) {
  if (two_k < 0 || two_k > pp - 2)
    fail("strip word: need 0 <= 2k <= p'-2");
  const Scalar q = unit_q(p, pp);
  const Scalar beta = beta_of(q);
  const long half = pp - 1 - two_k;  // k' - k
  AffineDiagram chain = diag_id(two_k);
  for (long m = 1; m <= half; ++m)
    chain = glue(diag_cdag(two_k + 2 * m, two_k + m), chain);
  const DiagramVector wide =
      tensor_id(jones_wenzl(pp - 1, q).expansion, half);
  return compose(wide, DiagramVector(chain), beta);
}

DiagramVector disc_raising_word(long two_k, long two_s, const Scalar& q) {
  if (two_k < 0 || two_s <= two_k || (two_s - two_k) % 2 != 0)
    fail("disc raising word: need 2k < 2s of equal parity");
  AffineDiagram chain = diag_id(two_k);
  for (long m = 1; 2 * m <= two_s - two_k; ++m)
    chain = glue(diag_cdag(two_k + 2 * m, 0), chain);
  return compose(jones_wenzl(two_s, q).expansion, DiagramVector(chain),
                 beta_of(q));
}

DiagramVector boundary_difference_word(long two_k, long p, long pp) {
  const Scalar beta = beta_of(unit_q(p, pp));
  const long two_kp = 2 * (pp - 1) - two_k;  // 2k'
  const long half = pp - 1 - two_k;          // k' - k
  DiagramVector w = tensor_id(strip_singular_word(two_k, p, pp), half);
  // caps c_{2k'}, c_{2k'-1}, ..., c_{k+k'+1} applied in this order,
  // shrinking L_0(2k'+(k'-k), k+k') down to TL_{k+k'} = TL_{p'-1}
  long cur = two_kp + half;
  for (long j = two_kp; j >= pp; --j) {
    w = compose(DiagramVector(diag_c(cur, j)), w, beta);
    cur -= 2;
  }
  return w;
}

}  // namespace ade
