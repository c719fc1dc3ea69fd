#pragma once

// Link-state modules over the ordinary and periodic Temperley-Lieb algebras:
// standard strip modules, twisted disc modules with a marked point, and
// their quotients by singular-vector relations.
//
// A link state on N boundary nodes is stored as its role word: node i is a
// defect ('|'), opens an arc ('('), or closes one (')').  Scanning the word
// left to right, a close pops the nearest open; closes met at empty stack
// pair with the leftover opens by nesting around the dashed reference
// segment, and exactly those arcs carry the "crosses the dashed segment"
// flag.  Defects occur at empty stack, after every wrapping close and before
// every wrapping open.  A strip-module state has no wrapping arcs.  Module
// bases list the valid role words in lexicographic order with
// defect < open < close; this order is frozen.
//
// The action glues the state into the inner boundary of an annulus diagram:
// a contractible loop gives beta, a loop around the marked point gives
// alpha = x + 1/x, joining two defects gives zero, and a defect crossing the
// dashed segment unwinds at the cost of x or 1/x (clockwise crossings, seen
// walking outward from the marked point, cost x).  Removing a marked-point
// loop merges its face with the neighbouring one, so the crossing flags of
// the surviving arcs are recomputed from the glued picture.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ade/diagram.hpp"
#include "ade/scalar.hpp"

namespace ade {

struct LinkState {
  long n = 0;
  std::vector<uint8_t> role;  // 0 defect, 1 arc-open, 2 arc-close

  struct Arc {
    long i = 0, j = 0;   // i < j
    bool crosses = false;  // wraps past the dashed segment
  };

  long defect_count() const;
  std::vector<long> defect_positions() const;  // ascending
  std::vector<Arc> arcs() const;               // sorted by smaller endpoint
  bool valid(bool allow_crossing = true) const;

  std::string to_string() const;  // e.g. "|()|", ")(" ; round-trips
  static LinkState parse(const std::string& text);

  bool operator==(const LinkState& o) const { return n == o.n && role == o.role; }
  bool operator!=(const LinkState& o) const { return !(*this == o); }
  bool operator<(const LinkState& o) const {
    if (n != o.n) return n < o.n;
    return role < o.role;
  }
};

// The annulus diagram drawing the state with its defects extended to the
// inner boundary: an element of L(n, 2k) sending the 2k-defect seed state to
// the state itself.
AffineDiagram rep_diagram(const LinkState& u);

enum class ModuleKind {
  kStandardV,  // strip module, dashed-avoiding diagrams only
  kTwistedW,   // disc with marked point, twist parameter x
  kQuotientV,  // strip module modulo its singular vector
  kQuotientW,  // twisted module modulo its two singular vectors
};

struct ModuleSpec {
  ModuleKind kind = ModuleKind::kStandardV;
  long two_k = 0;  // twice the defect-pair parameter, >= 0
  long n = 0;      // current size, n >= 0 and n - two_k even
  Scalar x;        // twist (twisted/quotient-twisted kinds)
  Scalar beta;     // loop weight
  long p = 0, pp = 0;  // root-of-unity data (quotient kinds): q = e^{-i pi p/p'}

  // Negative defect numbers follow the convention W_{-k,x} = W_{k,1/x}.
  static ModuleSpec standard_v(long two_k, const Scalar& beta, long n);
  static ModuleSpec twisted_w(long two_k, const Scalar& x, const Scalar& beta, long n);
  static ModuleSpec quotient_v(long two_k, long p, long pp, long n);
  static ModuleSpec quotient_w(long two_k, const Scalar& x, long p, long pp, long n);
  // x = eps * q^{s} with 2s = two_s (eps in {+1,-1})
  static ModuleSpec quotient_w(long two_k, int eps, long two_s, long p, long pp, long n);

  bool w_like() const {
    return kind == ModuleKind::kTwistedW || kind == ModuleKind::kQuotientW;
  }
  bool quotient() const {
    return kind == ModuleKind::kQuotientV || kind == ModuleKind::kQuotientW;
  }
  ModuleSpec parent() const;        // quotient kind -> underlying module
  ModuleSpec at_size(long m) const;
  Scalar alpha() const { return x + x.inverse(); }

  bool operator==(const ModuleSpec& o) const;
  bool operator!=(const ModuleSpec& o) const { return !(*this == o); }
  std::string to_string() const;
};

// q = e^{-i pi p/p'} and its square root e^{-i pi p/(2p')}.
Scalar unit_q(long p, long pp);
Scalar unit_q_half(long p, long pp);

// Counting: d(two_k, n) = binom(n, (n-two_k)/2) link patterns with two_k
// defects, and the p'-periodised sum D(two_k, n) = sum_j d(two_k + 2 j p', n).
mpz_class dim_d(long two_k, long n);
mpz_class dim_bigd(long two_k, long n, long pp);
// Module dimension: strip d_k - d_{k+1}, disc d_k, quotients by the closed
// formulas (irreducible cases fall back to the parent dimension).
mpz_class dim_module(const ModuleSpec& spec);

// Ordered basis (frozen lexicographic order), cached per (n, two_k, disc?).
const std::vector<LinkState>& basis(const ModuleSpec& spec);
long basis_index(const ModuleSpec& spec, const LinkState& u);  // -1 if absent

struct ModuleVec {
  ModuleSpec spec;
  std::vector<Scalar> c;  // coordinates over basis(spec) (parent basis for quotients)

  bool is_zero() const;
  ModuleVec operator+(const ModuleVec& o) const;
  ModuleVec operator-(const ModuleVec& o) const;
  ModuleVec operator*(const Scalar& s) const;
  bool operator==(const ModuleVec& o) const;
  bool operator!=(const ModuleVec& o) const { return !(*this == o); }
};

ModuleVec zero_vec(const ModuleSpec& spec);
ModuleVec basis_vec(const ModuleSpec& spec, long i);
// The unique state at the smallest size n = two_k (all defects).
ModuleVec seed_state(const ModuleSpec& spec);

// Action of diagrams; strip kinds reject diagrams touching the dashed
// segment (nonzero winding or retained loops).  Quotient kinds act through
// the parent and reduce.  Throws std::invalid_argument on size mismatch.
ModuleVec act(const AffineDiagram& d, const ModuleVec& v);
ModuleVec act(const DiagramVector& lam, const ModuleVec& v);

// Singular vectors, evaluated through rational functions of sqrt(q) and
// specialized at q = e^{-i pi p/p'}; this is well defined even where the
// projector itself is singular.
//   strip:  the nested-arc seed of the maximal proper submodule of the
//           strip module with two_k defects; lives at size 2k' where
//           k' = r p' - 1 - k.  Throws std::domain_error when the module is
//           irreducible (2k = p'-1 mod p').
ModuleVec v_state_strip(long two_k, long p, long pp);
//   disc:   P_{2s} (cdag_0)^{s-k} applied to the seed of the twisted module
//           with x = eps q^{sigma s}; lives at size 2s = two_s.
ModuleVec v_state_disc(long two_k, long two_s, int sigma, int eps, long p, long pp);

// phi(lam . seed) = lam . xi for an insertion state xi; checks the
// insertion conditions (strip: c_j xi = 0 for 1 <= j <= n-1; disc: f-
// eigenvector at size 0, else c_0 xi = 0 and Omega-eigenvector) and throws
// std::domain_error if they fail.
ModuleVec insertion_map(const ModuleVec& xi, const DiagramVector& lam);

// Rank of the cached relation space of a quotient spec at its size.
long relation_rank(const ModuleSpec& qspec);
// Reduce a vector (given over the parent basis) modulo the relation space.
ModuleVec quotient_vector(const ModuleVec& v, const ModuleSpec& qspec);

}  // namespace ade
