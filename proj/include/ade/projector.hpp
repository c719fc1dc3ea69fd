#pragma once
// Wenzl projectors on the strip, their annular analogues projecting onto the
// one-dimensional modules of the uncoiled quotients, and the diagram words
// whose left action generates singular and insertion vectors.

#include "ade/diagram.hpp"
#include "ade/scalar.hpp"

namespace ade {

struct JWProjector {
  long n = 0;
  Scalar q;
  DiagramVector expansion;  // element of L_0(n, n), unit coefficient on id
};

// P_1 = id, P_{n+1} = P_n + ([n]/[n+1]) P_n e_n P_n; cached per (n, q).
// Throws std::domain_error when some [m] = 0 with 2 <= m <= n makes the
// recursion singular (at q = e^{-i pi p/p'} this admits exactly n <= p'-1).
const JWProjector& jones_wenzl(long n, const Scalar& q);

// The three finite quotients of the annular algebra, named by the size
// parity and the extra relation: Omega^N = gamma (N odd); Omega^N = id with
// E Omega E = alpha E (N even, first kind); Omega^N = gamma with E = 0
// (N even, second kind), where E = e_0 e_2 ... e_{N-2}.
enum class UncoiledTag { kOdd, kEvenOne, kEvenTwo };

// Coefficient of Z_{s,l} in the annular projector.  The closed form is the
// same for all three tags; aux = alpha enters only the extra s = N/2, l = 0
// constant of kEvenOne, which vanishes unless x is +1 or -1.  Throws
// std::domain_error outside 0 <= s <= floor((N-1)/2), 0 <= l <= N-2s-1
// (resp. s = N/2, l = 0) and at the poles x^2 q^{sigma(N-2 kappa)} = 1 of
// the closed form, naming the offending (sigma, kappa).
Scalar gamma_coeff(long s, long l, long N, const Scalar& x, const Scalar& q,
                   UncoiledTag tag, const Scalar& aux);

// Product form of Gamma_{s,0}, equal to gamma_coeff(s, 0, ...) wherever both
// are defined; same pole behaviour.
Scalar gamma_s0_product(long s, long N, const Scalar& x, const Scalar& q);

struct UncoiledProjector {
  long N = 0;
  Scalar x;
  UncoiledTag tag = UncoiledTag::kOdd;
  DiagramVector expansion;  // element of L(N, N)
};

// hatP_{N,x} = sum_{s,l} Gamma_{s,l} Z_{s,l} over 0 <= s <= floor((N-1)/2),
// 0 <= l <= N-2s-1, plus Gamma_{N/2,0} Z_{N/2,0} for kEvenOne, where
// Z_{s,l} = P_N (cdag_0)^s Omega^l (c_0)^s P_N.  For kOdd and kEvenTwo,
// aux = gamma and x^N must equal gamma; for kEvenOne, aux = alpha and x^N
// must equal 1.  The relations Omega hatP = x hatP, c_j hatP = hatP cdag_j
// = 0 and idempotence hold in any module factoring through the quotient,
// not as raw diagram identities.  Cached per (N, x, tag, aux, q).
const UncoiledProjector& uncoiled_projector(long N, const Scalar& x,
                                            UncoiledTag tag, const Scalar& aux,
                                            const Scalar& q);

// Diagram words generating distinguished vectors by left action on the seed
// state at size 2k (or the empty state).  Here q = e^{-i pi p/p'} and the
// strip words live at k' = p'-1-k, requiring 0 <= 2k <= p'-2.
//
//   disc_singular_word(2s, sigma, eps, p, p'): the unique loop-free element
//     of L(2s, 0) whose action on the empty state of the marked disc with
//     x = eps q^{sigma s} gives the singular vector at size 2s; independent
//     of sigma.  Requires 1 <= s and 2s <= p'.
DiagramVector disc_singular_word(long two_s, int sigma, int eps, long p,
                                 long pp);
//   strip_singular_word(2k, p, p'): the unique combination of strip diagrams
//     with exactly 2k through-lines in L_0(2k', 2k) generating the singular
//     vector of the strip module.
DiagramVector strip_singular_word(long two_k, long p, long pp);
//   strip_singular_product(2k, p, p'): the defining operator word
//     (P_{k+k'} (x) id_{k'-k}) cdag_{k+k'} ... cdag_{2k+1} expanded in
//     L_0(2k', 2k); same action on the seed as strip_singular_word, but
//     carries extra terms with fewer through-lines.
DiagramVector strip_singular_product(long two_k, long p, long pp);
//   disc_raising_word(2k, 2s, q): P_{2s} (cdag_0)^{s-k}, an element of
//     L(2s, 2k); its action on the seed of the marked disc with
//     x = eps q^{sigma s} gives the singular vector.  Requires P_{2s}
//     nonsingular at q, so at a root of unity this excludes 2s = p'.
DiagramVector disc_raising_word(long two_k, long two_s, const Scalar& q);
//   boundary_difference_word(2k, p, p'): c_{k+k'+1} ... c_{2k'}
//     (strip_singular_word (x) id_{k'-k}), an element of TL_{p'-1}; the
//     left-hand side of the local difference equation for boundary
//     operators.
DiagramVector boundary_difference_word(long two_k, long p, long pp);

}  // namespace ade
