#pragma once
// Annulus diagram spaces L(N,N'): canonical diagrams, composition with
// loop-weight bookkeeping, generators, and transfer-element expansions.
//
// A diagram connects N_out nodes on the outer boundary to N_in nodes on the
// inner boundary by non-intersecting loop segments; non-contractible loops
// are retained as a counter.  Nodes are numbered 0..N-1 counterclockwise
// starting just after the dashed reference segment.  We store the lift of the
// matching to the universal cover: outer node i has copies at positions
// i + t*N_out, inner node j at j + t*N_in, and each fundamental point p
// records (q, s) = "copy 0 of p is joined to copy s of q".  This partner map
// is a complete isotopy invariant, so equality of diagrams is equality of
// fields -- no separate normalization pass exists or is needed.
//
// Products draw the right factor inside the left one: compose(a, b) glues
// the inner boundary of a to the outer boundary of b, so diagrams act on
// modules "inner side = input".

#include <cstdint>
#include <string>
#include <vector>
#include <map>

#include "ade/scalar.hpp"

namespace ade {

struct AffineDiagram {
  long n_out = 0;
  long n_in = 0;
  // link[p] = (q, s) over points 0..n_out-1 (outer), n_out..n_out+n_in-1 (inner)
  std::vector<std::pair<int, long>> link;
  long ncloops = 0;

  long points() const { return n_out + n_in; }
  bool is_inner(int p) const { return p >= n_out; }
  long period(int p) const { return is_inner(p) ? n_in : n_out; }
  long bridges() const; // number of bridges (the "2k" of the grading)

  bool valid() const;     // involution property of the partner map
  bool is_planar() const; // lifted arcs pairwise non-crossing

  AffineDiagram dagger() const; // mirror through the annulus midline

  std::string to_string() const;
  static AffineDiagram parse(const std::string& text);

  bool operator==(const AffineDiagram& o) const {
    return n_out == o.n_out && n_in == o.n_in && ncloops == o.ncloops &&
           link == o.link;
  }
  bool operator!=(const AffineDiagram& o) const { return !(*this == o); }
  bool operator<(const AffineDiagram& o) const {
    if (n_out != o.n_out) return n_out < o.n_out;
    if (n_in != o.n_in) return n_in < o.n_in;
    if (ncloops != o.ncloops) return ncloops < o.ncloops;
    return link < o.link;
  }
};

// product of two diagrams before weighting: the composed diagram plus the
// number of contractible loops closed in the gluing
struct DiagramProduct {
  AffineDiagram d;
  long beta_loops = 0;
};

DiagramProduct compose_diagrams(const AffineDiagram& a, const AffineDiagram& b);

class DiagramVector {
 public:
  DiagramVector() = default;
  explicit DiagramVector(const AffineDiagram& d, const Scalar& c = Scalar(1));

  const std::map<AffineDiagram, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const AffineDiagram& d, const Scalar& c);

  DiagramVector operator+(const DiagramVector& o) const;
  DiagramVector operator-(const DiagramVector& o) const;
  DiagramVector operator*(const Scalar& c) const;

  bool operator==(const DiagramVector& o) const { return terms_ == o.terms_; }
  bool operator!=(const DiagramVector& o) const { return !(*this == o); }

 private:
  std::map<AffineDiagram, Scalar> terms_;
};

// bilinear composition; contractible loops become factors of beta
DiagramVector compose(const DiagramVector& a, const DiagramVector& b,
                      const Scalar& beta);

// generators (indices follow the periodic convention: e_j and c_j for
// j = 0..N-1, with j = 0 the pair straddling the dashed segment)
AffineDiagram diag_id(long N);
AffineDiagram diag_e(long N, long j);
AffineDiagram diag_c(long N, long j);     // element of L(N-2, N)
AffineDiagram diag_cdag(long N, long j);  // element of L(N, N-2)
AffineDiagram diag_omega(long N);
AffineDiagram diag_omega_inv(long N);
AffineDiagram diag_f();                   // L(0,0), one non-contractible loop
AffineDiagram diag_E(long N);             // e_0 e_2 ... e_{N-2}, N even

// append m through-strands after the last node on both boundaries; defined
// only for diagrams avoiding the dashed segment with no retained loops
AffineDiagram tensor_id(const AffineDiagram& d, long m);
DiagramVector tensor_id(const DiagramVector& v, long m);

// sum of 2^N single-row tile configurations (no loop factors arise)
DiagramVector transfer_single_row(long N);
// sum of 2^{2N} double-row tile configurations with boundary arcs; closed
// loops contribute factors of beta
DiagramVector transfer_double_row(long N, const Scalar& beta);

// all diagrams in L_0(n_out, n_in): planar matchings avoiding the dashed cut
std::vector<AffineDiagram> planar_basis(long n_out, long n_in);

} // namespace ade
