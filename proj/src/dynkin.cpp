#include "ade/dynkin.hpp"

#include <cmath>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace ade {
namespace {

// t(k) = zeta_{2p'}^k - zeta_{2p'}^{-k} = 2i sin(pi k / p')
Scalar tsin(long twop, long k) {
  return root_of_unity(twop, k) - root_of_unity(twop, -k);
}

std::vector<std::vector<int>> chain_adjacency(int n) {
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  for (int i = 0; i + 1 < n; ++i) adj[i][i + 1] = adj[i + 1][i] = 1;
  return adj;
}

std::vector<int> two_color(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> col(n, -1);
  std::queue<int> bfs;
  col[0] = 0;
  bfs.push(0);
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    for (int w = 0; w < n; ++w)
      if (adj[v][w] && col[w] < 0) {
        col[w] = 1 - col[v];
        bfs.push(w);
      }
  }
  return col;
}

// special D4 table diagonalizing the three-cycle: columns
// (1, r3, 1, 1), (1, 0, w, w^2), (1, -r3, 1, 1), (1, 0, w^2, w)
// with r3 = 2cos(pi/6), w = zeta_3; kappa = (1, w, 1, w^2)
std::vector<std::vector<Scalar>> d4_triality_table() {
  Scalar one(1), zero(0);
  Scalar r3 = root_of_unity(12, 1) + root_of_unity(12, -1);
  Scalar w = root_of_unity(3, 1), w2 = root_of_unity(3, 2);
  return {{one, r3, one, one},
          {one, zero, w, w2},
          {one, -r3, one, one},
          {one, zero, w2, w}};
}

} // namespace

std::string DynkinData::name() const {
  switch (alg) {
    case Algebra::A: return "A" + std::to_string(n);
    case Algebra::D: return "D" + std::to_string(n);
    default: return "E" + std::to_string(n);
  }
}

Scalar DynkinData::beta(int mu) const {
  return root_of_unity(2 * coxeter, exponents[mu]) +
         root_of_unity(2 * coxeter, -exponents[mu]);
}

bool DynkinData::model_valid(int mu) const {
  return std::gcd(exponents[mu], coxeter) == 1;
}

DynkinData dynkin_build(Algebra alg, int n) {
  DynkinData g;
  g.alg = alg;
  g.n = n;
  switch (alg) {
    case Algebra::A: {
      if (n < 1) throw std::domain_error("A_n needs n >= 1");
      g.coxeter = n + 1;
      g.adj = chain_adjacency(n);
      for (int mu = 1; mu <= n; ++mu) g.exponents.push_back(mu);
      long L = 2 * g.coxeter;
      for (int mu = 1; mu <= n; ++mu) {
        std::vector<Scalar> col;
        for (int a = 1; a <= n; ++a) col.push_back(tsin(L, (long)a * mu));
        g.eigvec.push_back(std::move(col));
      }
      break;
    }
    case Algebra::D: {
      if (n < 4) throw std::domain_error("D_n needs n >= 4");
      g.coxeter = 2 * n - 2;
      g.adj = chain_adjacency(n - 2);
      g.adj.resize(n);
      for (auto& row : g.adj) row.resize(n, 0);
      g.adj[n - 3][n - 2] = g.adj[n - 2][n - 3] = 1; // fork n-1 on node n-2
      g.adj[n - 3][n - 1] = g.adj[n - 1][n - 3] = 1; // fork n   on node n-2
      for (int mu = 1; mu < n; ++mu) g.exponents.push_back(2 * mu - 1);
      g.exponents.push_back(n - 1);
      long L = 2 * g.coxeter;
      Scalar i4 = root_of_unity(4, 1);
      for (int mu = 1; mu < n; ++mu) {
        std::vector<Scalar> col;
        long m = 2 * mu - 1;
        for (int a = 1; a <= n - 2; ++a) col.push_back(tsin(L, a * m));
        Scalar fork = (mu % 2 == 1) ? i4 : -i4; // 2i * (-1)^{mu+1} / 2
        col.push_back(fork);
        col.push_back(fork);
        g.eigvec.push_back(std::move(col));
      }
      std::vector<Scalar> last(n, Scalar(0));
      last[n - 2] = Scalar(-1);
      last[n - 1] = Scalar(1);
      g.eigvec.push_back(std::move(last));
      break;
    }
    case Algebra::E: {
      if (n < 6 || n > 8) throw std::domain_error("E_n needs n in {6,7,8}");
      g.adj = chain_adjacency(n - 1);
      g.adj.resize(n);
      for (auto& row : g.adj) row.resize(n, 0);
      g.adj[2][n - 1] = g.adj[n - 1][2] = 1; // short branch on node 3
      if (n == 6) {
        g.coxeter = 12;
        g.exponents = {1, 4, 5, 7, 8, 11};
      } else if (n == 7) {
        g.coxeter = 18;
        g.exponents = {1, 5, 7, 9, 11, 13, 17};
      } else {
        g.coxeter = 30;
        g.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
      }
      long L = 2 * g.coxeter;
      for (int mu = 0; mu < n; ++mu) {
        long m = g.exponents[mu];
        auto t = [&](long k) { return tsin(L, k * m); };
        std::vector<Scalar> col;
        if (n == 6) {
          col = {t(5) * t(1) * t(1), t(2) * t(5) * t(1), t(2) * t(2) * t(3),
                 t(2) * t(2) * t(2), t(2) * t(2) * t(1), t(2) * t(3) * t(1)};
        } else if (n == 7) {
          if (m == 9) {
            col = {Scalar(0), Scalar(0), Scalar(0), Scalar(1),
                   Scalar(0), Scalar(-1), Scalar(-1)};
          } else {
            col = {t(6) * t(1) * t(1), t(2) * t(6) * t(1), t(2) * t(2) * t(4),
                   t(2) * t(2) * t(3), t(2) * t(2) * t(2), t(2) * t(2) * t(1),
                   t(2) * t(4) * t(1)};
          }
        } else {
          col = {t(7) * t(1) * t(1), t(2) * t(7) * t(1), t(2) * t(2) * t(5),
                 t(2) * t(2) * t(4), t(2) * t(2) * t(3), t(2) * t(2) * t(2),
                 t(2) * t(2) * t(1), t(2) * t(5) * t(1)};
        }
        g.eigvec.push_back(std::move(col));
      }
      break;
    }
  }
  g.coloring = two_color(g.adj);
  return g;
}

std::vector<GraphAutomorphism> automorphisms(const DynkinData& g) {
  std::vector<GraphAutomorphism> out;
  GraphAutomorphism id;
  id.name = "id";
  id.perm.resize(g.n);
  for (int a = 0; a < g.n; ++a) id.perm[a] = a;
  id.kappa.assign(g.n, Scalar(1));
  id.eigvec = g.eigvec;
  out.push_back(std::move(id));

  if (g.alg == Algebra::A && g.n >= 2) {
    GraphAutomorphism R;
    R.name = "R";
    for (int a = 0; a < g.n; ++a) R.perm.push_back(g.n - 1 - a);
    for (int mu = 0; mu < g.n; ++mu)
      R.kappa.push_back(Scalar(mu % 2 == 0 ? 1 : -1));
    R.eigvec = g.eigvec;
    out.push_back(std::move(R));
  } else if (g.alg == Algebra::D) {
    GraphAutomorphism P;
    P.name = "P(" + std::to_string(g.n - 1) + "," + std::to_string(g.n) + ")";
    for (int a = 0; a < g.n; ++a) P.perm.push_back(a);
    std::swap(P.perm[g.n - 2], P.perm[g.n - 1]);
    P.kappa.assign(g.n - 1, Scalar(1));
    P.kappa.push_back(Scalar(-1));
    P.eigvec = g.eigvec;
    out.push_back(std::move(P));
    if (g.n == 4) {
      GraphAutomorphism C;
      C.name = "P(1,3,4)";
      C.perm = {2, 1, 3, 0}; // 1 -> 3 -> 4 -> 1
      Scalar w = root_of_unity(3, 1), w2 = root_of_unity(3, 2);
      C.kappa = {Scalar(1), w, Scalar(1), w2};
      C.eigvec = d4_triality_table();
      out.push_back(std::move(C));
    }
  } else if (g.alg == Algebra::E && g.n == 6) {
    GraphAutomorphism P;
    P.name = "P(1,5)(2,4)";
    P.perm = {4, 3, 2, 1, 0, 5};
    for (long m : g.exponents)
      P.kappa.push_back(Scalar(m % 2 == 0 ? -1 : 1)); // -1 exactly at m = 4, 8
    P.eigvec = g.eigvec;
    out.push_back(std::move(P));
  }
  return out;
}

std::vector<std::vector<int>> FixedSubgraph::adjacency() const {
  return chain_adjacency(size());
}

FixedSubgraph fixed_subgraph(const DynkinData& g, const GraphAutomorphism& K) {
  FixedSubgraph fs;
  for (int a = 0; a < g.n; ++a)
    if (K.perm[a] == a) fs.nodes.push_back(a);
  int nt = fs.size();
  if (nt == 0) return fs;
  // the fixed nodes must form a chain in their sorted order
  for (int j = 0; j + 1 < nt; ++j)
    if (!g.adj[fs.nodes[j]][fs.nodes[j + 1]])
      throw std::domain_error("fixed-point set is not an A-type chain");
  if (g.coxeter % (nt + 1) != 0)
    throw std::domain_error("fixed-point chain incompatible with Coxeter number");
  long step = g.coxeter / (nt + 1);
  for (int nu = 1; nu <= nt; ++nu) fs.exponents.push_back(nu * step);
  long L = 2 * g.coxeter;
  for (int nu = 0; nu < nt; ++nu) {
    std::vector<Scalar> col;
    for (int j = 1; j <= nt; ++j) col.push_back(tsin(L, j * fs.exponents[nu]));
    fs.eigvec.push_back(std::move(col));
  }
  return fs;
}

std::vector<std::vector<long>> chebyshev_U(const std::vector<std::vector<int>>& B,
                                           long s) {
  int n = static_cast<int>(B.size());
  std::vector<std::vector<long>> prev(n, std::vector<long>(n, 0)); // J_0
  std::vector<std::vector<long>> cur(n, std::vector<long>(n, 0));  // J_1
  if (s <= 0) return prev;
  for (int i = 0; i < n; ++i) cur[i][i] = 1;
  for (long step = 1; step < s; ++step) {
    std::vector<std::vector<long>> next(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (cur[i][k] == 0) continue;
        for (int j = 0; j < n; ++j)
          if (B[k][j]) next[i][j] += cur[i][k];
      }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) next[i][j] -= prev[i][j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<std::vector<long>> fused_adjacency(const DynkinData& g, long s) {
  long period = 2 * g.coxeter;
  long r = ((s % period) + period) % period; // J_s = J_{s mod 2p'}
  bool flip = false;
  if (r > g.coxeter) { // J_r = -J_{2p'-r} brings the index below p'
    r = period - r;
    flip = true;
  }
  auto J = chebyshev_U(g.adj, r);
  if (flip)
    for (auto& row : J)
      for (auto& x : row) x = -x;
  return J;
}

Scalar column_norm2(const std::vector<std::vector<Scalar>>& table, int mu) {
  Scalar s(0);
  for (const auto& x : table[mu]) s = s + x * x.conj();
  return s;
}

std::vector<std::vector<std::complex<double>>>
eigvec_normalized(const std::vector<std::vector<Scalar>>& table) {
  std::vector<std::vector<std::complex<double>>> out;
  for (const auto& col : table) {
    double norm2 = 0;
    std::vector<std::complex<double>> c;
    for (const auto& x : col) {
      c.push_back(x.to_complex());
      norm2 += std::norm(c.back());
    }
    double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : c) z *= inv;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> perm_compose(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

std::vector<int> perm_inverse(const std::vector<int>& p) {
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

} // namespace ade
