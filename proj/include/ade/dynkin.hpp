#pragma once
// ADE graph data: adjacency, Coxeter number, exponents, exact eigenvector
// tables, graph automorphisms with their eigenvalue lists, fixed-point
// subgraphs, and fused adjacency matrices.
//
// Eigenvectors are stored in an unnormalized cyclotomic gauge: each column is
// the textbook sine-formula vector rescaled (per column) so that every entry
// lies in Q(zeta_{4p'}).  With t(k) = zeta_{2p'}^k - zeta_{2p'}^{-k} = 2i sin(pi k/p'),
//   A_n : S_{a,mu} = t(a mu)
//   D_n : S_{a,mu} = t(a m_mu) on the chain, +-i on the fork (mu <= n-1),
//         and (0,...,0,-1,1) for mu = n
//   E_n : products of t(k) following the closed-form component ratios.
// All downstream identities use ratios or one c/one c^dag pairings, so the
// per-column scale drops out; fusion coefficients (which do not) run on the
// normalized float table from eigvec_normalized().

#include <complex>
#include <string>
#include <vector>

#include "ade/scalar.hpp"

namespace ade {

enum class Algebra { A, D, E };

struct DynkinData {
  Algebra alg;
  int n = 0;                               // number of nodes
  long coxeter = 0;                        // p'
  std::vector<std::vector<int>> adj;       // n x n, 0/1 symmetric
  std::vector<long> exponents;             // m_1..m_n (index 0-based)
  std::vector<std::vector<Scalar>> eigvec; // eigvec[mu][a], columns of S
  std::vector<int> coloring;               // proper 2-coloring, node -> 0/1

  std::string name() const;
  Scalar beta(int mu) const;               // 2 cos(pi m_mu / p')
  // gcd(m_mu, p') == 1: the loop weight is generic enough for a lattice model
  bool model_valid(int mu) const;
};

struct GraphAutomorphism {
  std::string name;                        // "id", "R", "P(3,4)", ...
  std::vector<int> perm;                   // node a -> perm[a]
  std::vector<Scalar> kappa;               // S_{K(a),mu} = kappa_mu S_{a,mu}
  // eigenvector table in which kappa is diagonal (equals the graph default
  // for every automorphism except the D4 three-cycle)
  std::vector<std::vector<Scalar>> eigvec;
};

struct FixedSubgraph {
  std::vector<int> nodes;                  // alpha_1..alpha_ntilde, chain order
  std::vector<long> exponents;             // m~_1..m~_ntilde
  std::vector<std::vector<Scalar>> eigvec; // S~[nu][j], same gauge as above
  bool empty() const { return nodes.empty(); }
  int size() const { return static_cast<int>(nodes.size()); }
  std::vector<std::vector<int>> adjacency() const; // the A-chain matrix
};

DynkinData dynkin_build(Algebra alg, int n);

// id first, then the nontrivial representatives:
// A_n (n>=2): R;  D_n: P(n-1,n);  D4 additionally P(1,3,4);  E6: P(1,5)(2,4).
std::vector<GraphAutomorphism> automorphisms(const DynkinData& g);

// Fixed-point subgraph of K with its exponents m~_nu = nu p'/(ntilde+1) and
// eigenvectors S~_{alpha_j,nu} = t(j m~_nu).  Empty when K has no fixed node;
// throws std::domain_error if the fixed set is not an A-type chain.
FixedSubgraph fixed_subgraph(const DynkinData& g, const GraphAutomorphism& K);

// J_s from J_0 = 0, J_1 = id, J_s = J_{s-1} A - J_{s-2}, extended to all
// integers via J_s = -J_{2p'-s} = J_{2p'+s}.
std::vector<std::vector<long>> fused_adjacency(const DynkinData& g, long s);

// Raw Chebyshev recursion on an arbitrary symmetric 0/1 matrix: returns
// U_{s-1}(B/2) for s >= 0 (no folding).  Used for fixed-subgraph fusion.
std::vector<std::vector<long>> chebyshev_U(const std::vector<std::vector<int>>& B,
                                           long s);

// sum_a S_{a,mu} conj(S_{a,mu}) for a column of an eigenvector table
Scalar column_norm2(const std::vector<std::vector<Scalar>>& table, int mu);

// unit-norm float columns for the identities that need the orthonormal gauge
std::vector<std::vector<std::complex<double>>>
eigvec_normalized(const std::vector<std::vector<Scalar>>& table);

// permutation algebra for the D4 triality classes
std::vector<int> perm_compose(const std::vector<int>& p, const std::vector<int>& q);
std::vector<int> perm_inverse(const std::vector<int>& p);

} // namespace ade
