#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "ade/dynkin.hpp"

using namespace ade;

namespace {

std::vector<DynkinData> all_graphs() {
  std::vector<DynkinData> gs;
  for (int n = 1; n <= 8; ++n) gs.push_back(dynkin_build(Algebra::A, n));
  for (int n = 4; n <= 8; ++n) gs.push_back(dynkin_build(Algebra::D, n));
  for (int n = 6; n <= 8; ++n) gs.push_back(dynkin_build(Algebra::E, n));
  return gs;
}

// 2 cos(2 pi k m / (2 p')) exactly, i.e. zeta^{km} + zeta^{-km} at conductor 2p'
Scalar two_cos(long twop, long km) {
  return root_of_unity(twop, km) + root_of_unity(twop, -km);
}

} // namespace

TEST_CASE("graph data tables") {
  CHECK(dynkin_build(Algebra::E, 8).coxeter == 30);
  CHECK(dynkin_build(Algebra::A, 3).coxeter == 4);
  CHECK(dynkin_build(Algebra::D, 4).coxeter == 6);
  CHECK(dynkin_build(Algebra::E, 6).exponents == std::vector<long>{1, 4, 5, 7, 8, 11});
  CHECK(dynkin_build(Algebra::E, 7).exponents == std::vector<long>{1, 5, 7, 9, 11, 13, 17});
  CHECK(dynkin_build(Algebra::D, 4).exponents == std::vector<long>{1, 3, 5, 3});
  CHECK(dynkin_build(Algebra::D, 6).exponents == std::vector<long>{1, 3, 5, 7, 9, 5});
  CHECK_THROWS_AS(dynkin_build(Algebra::E, 9), std::domain_error);
  CHECK_THROWS_AS(dynkin_build(Algebra::D, 3), std::domain_error);

  for (const auto& g : all_graphs()) {
    CAPTURE(g.name());
    // adjacency symmetric with the right edge count (n-1 edges, it is a tree)
    int edges = 0;
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b) {
        CHECK(g.adj[a][b] == g.adj[b][a]);
        edges += g.adj[a][b];
      }
    CHECK(edges == 2 * (g.n - 1));
    CHECK((int)g.exponents.size() == g.n);
    for (long m : g.exponents) {
      CHECK(m >= 1);
      CHECK(m <= g.coxeter - 1);
    }
    // proper 2-coloring
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b)
        if (g.adj[a][b]) CHECK(g.coloring[a] != g.coloring[b]);
  }
}

TEST_CASE("eigenvector columns satisfy A S = beta S exactly") {
  for (const auto& g : all_graphs()) {
    CAPTURE(g.name());
    for (int mu = 0; mu < g.n; ++mu) {
      Scalar beta = g.beta(mu);
      bool nonzero = false;
      for (int a = 0; a < g.n; ++a) {
        Scalar lhs(0);
        for (int b = 0; b < g.n; ++b)
          if (g.adj[a][b]) lhs = lhs + g.eigvec[mu][b];
        CHECK(lhs == beta * g.eigvec[mu][a]);
        nonzero = nonzero || !g.eigvec[mu][a].is_zero();
      }
      CHECK(nonzero);
    }
  }
}

TEST_CASE("automorphisms: permutation, eigenvalues, tables") {
  for (const auto& g : all_graphs()) {
    CAPTURE(g.name());
    auto autos = automorphisms(g);
    size_t expect = 1;
    if ((g.alg == Algebra::A && g.n >= 2) || g.alg == Algebra::D ||
        (g.alg == Algebra::E && g.n == 6))
      expect = 2;
    if (g.alg == Algebra::D && g.n == 4) expect = 3;
    CHECK(autos.size() == expect);
    CHECK(autos[0].name == "id");

    for (const auto& K : autos) {
      CAPTURE(K.name);
      // edge preservation
      for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
          CHECK(g.adj[K.perm[a]][K.perm[b]] == g.adj[a][b]);
      // K's table diagonalizes both A and K
      for (int mu = 0; mu < g.n; ++mu) {
        Scalar beta = g.beta(mu);
        for (int a = 0; a < g.n; ++a) {
          Scalar lhs(0);
          for (int b = 0; b < g.n; ++b)
            if (g.adj[a][b]) lhs = lhs + K.eigvec[mu][b];
          CHECK(lhs == beta * K.eigvec[mu][a]);
          CHECK(K.eigvec[mu][K.perm[a]] == K.kappa[mu] * K.eigvec[mu][a]);
        }
      }
    }
  }

  auto a5 = automorphisms(dynkin_build(Algebra::A, 5));
  REQUIRE(a5.size() == 2);
  CHECK(a5[1].name == "R");
  for (int mu = 0; mu < 5; ++mu)
    CHECK(a5[1].kappa[mu] == Scalar(mu % 2 == 0 ? 1 : -1));

  auto e7 = automorphisms(dynkin_build(Algebra::E, 7));
  CHECK(e7.size() == 1);

  auto d4 = automorphisms(dynkin_build(Algebra::D, 4));
  REQUIRE(d4.size() == 3);
  CHECK(d4[1].name == "P(3,4)");
  CHECK(d4[2].name == "P(1,3,4)");
  Scalar w = root_of_unity(3, 1);
  CHECK(d4[2].kappa[0] == Scalar(1));
  CHECK(d4[2].kappa[1] == w);
  CHECK(d4[2].kappa[2] == Scalar(1));
  CHECK(d4[2].kappa[3] == w * w);
}

TEST_CASE("triality permutation algebra") {
  std::vector<int> c134 = {2, 1, 3, 0};
  std::vector<int> p34 = {0, 1, 3, 2};
  auto inv = perm_inverse(c134);
  CHECK(perm_compose(c134, inv) == std::vector<int>{0, 1, 2, 3});
  // conjugating the fork swap by the three-cycle gives the (1,4) swap
  auto conj = perm_compose(c134, perm_compose(p34, inv));
  CHECK(conj == std::vector<int>{3, 1, 2, 0});
}

TEST_CASE("fixed-point subgraphs") {
  auto d6 = dynkin_build(Algebra::D, 6);
  auto fs = fixed_subgraph(d6, automorphisms(d6)[1]);
  CHECK(fs.size() == 4);
  CHECK(fs.exponents == std::vector<long>{2, 4, 6, 8});

  auto e6 = dynkin_build(Algebra::E, 6);
  auto fe = fixed_subgraph(e6, automorphisms(e6)[1]);
  CHECK(fe.size() == 2);
  CHECK(fe.nodes == std::vector<int>{2, 5});
  CHECK(fe.exponents == std::vector<long>{4, 8});

  auto a4 = dynkin_build(Algebra::A, 4);
  CHECK(fixed_subgraph(a4, automorphisms(a4)[1]).empty());

  auto a5 = dynkin_build(Algebra::A, 5);
  auto fa = fixed_subgraph(a5, automorphisms(a5)[1]);
  CHECK(fa.size() == 1);
  CHECK(fa.nodes == std::vector<int>{2});
  CHECK(fa.exponents == std::vector<long>{3});

  auto d4 = dynkin_build(Algebra::D, 4);
  auto fd = fixed_subgraph(d4, automorphisms(d4)[2]);
  CHECK(fd.size() == 1);
  CHECK(fd.nodes == std::vector<int>{1});
  CHECK(fd.exponents == std::vector<long>{3});

  // the subgraph eigenvectors diagonalize the chain adjacency exactly
  for (const auto* pr : {&fs, &fe, &fa, &fd}) {
    const auto& f = *pr;
    auto chain = f.adjacency();
    long twop = 0;
    // recover 2p' from the parent graph of each case
    // (D6: 20, E6: 24, A5: 12, D4: 12 — recompute from exponent step)
    twop = 2 * f.exponents[0] * (f.size() + 1) / 1;
    for (int nu = 0; nu < f.size(); ++nu) {
      Scalar beta = two_cos(twop, f.exponents[nu]);
      for (int j = 0; j < f.size(); ++j) {
        Scalar lhs(0);
        for (int i = 0; i < f.size(); ++i)
          if (chain[j][i]) lhs = lhs + f.eigvec[nu][i];
        CHECK(lhs == beta * f.eigvec[nu][j]);
      }
    }
  }
}

TEST_CASE("fused adjacency matrices") {
  for (const auto& g : all_graphs()) {
    CAPTURE(g.name());
    long p = g.coxeter;
    // initial conditions and the first recursion step
    auto j1 = fused_adjacency(g, 1);
    auto j2 = fused_adjacency(g, 2);
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b) {
        CHECK(j1[a][b] == (a == b ? 1 : 0));
        CHECK(j2[a][b] == g.adj[a][b]);
      }
    // folding, periodicity, vanishing at 2p'
    for (long s : {0L, 1L, 2L, p - 1, p, p + 3}) {
      auto js = fused_adjacency(g, s);
      auto jfold = fused_adjacency(g, 2 * p - s);
      auto jper = fused_adjacency(g, 2 * p + s);
      auto jneg = fused_adjacency(g, -s);
      for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
          CHECK(jfold[a][b] == -js[a][b]);
          CHECK(jper[a][b] == js[a][b]);
          CHECK(jneg[a][b] == -js[a][b]);
        }
    }
    auto jzero = fused_adjacency(g, 2 * p);
    for (const auto& row : jzero)
      for (long x : row) CHECK(x == 0);
    // non-negativity of J_{2k+1} for 0 <= k <= p'/2 - 1, and the parity rule
    for (long s = 0; s <= 2 * p; ++s) {
      auto js = fused_adjacency(g, s);
      for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
          if (s % 2 == 1 && s <= p - 1) CHECK(js[a][b] >= 0);
          if (js[a][b] != 0) {
            bool same = g.coloring[a] == g.coloring[b];
            CHECK(same == (s % 2 == 1));
          }
        }
    }
  }
  auto a3 = dynkin_build(Algebra::A, 3);
  CHECK(fused_adjacency(a3, 3)[0][0] == 0);
}

TEST_CASE("spectral identities for fused matrices") {
  for (const auto& g : all_graphs()) {
    if (g.alg == Algebra::E && g.n >= 7) continue; // large conductors; covered below
    CAPTURE(g.name());
    long p = g.coxeter, twop = 2 * p;
    std::vector<Scalar> inv_norm;
    for (int mu = 0; mu < g.n; ++mu)
      inv_norm.push_back(column_norm2(g.eigvec, mu).inverse());
    // (J_{2k+1} - J_{2k-1})_{ab} = 2 sum_mu S S* cos(2 pi k m_mu/p'), k in half-integers
    for (long k2 = 0; k2 <= twop; ++k2) { // k2 = 2k
      auto jp = fused_adjacency(g, k2 + 1);
      auto jm = fused_adjacency(g, k2 - 1);
      for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
          Scalar rhs(0);
          for (int mu = 0; mu < g.n; ++mu)
            rhs = rhs + g.eigvec[mu][a] * g.eigvec[mu][b].conj() * inv_norm[mu] *
                            two_cos(twop, k2 * g.exponents[mu]);
          CHECK(rhs == Scalar(jp[a][b] - jm[a][b]));
        }
    }
  }
  // spot-check the same identity on E7 and E8 at k = 1
  for (int n : {7, 8}) {
    auto g = dynkin_build(Algebra::E, n);
    CAPTURE(g.name());
    auto j3 = fused_adjacency(g, 3);
    std::vector<Scalar> inv_norm;
    for (int mu = 0; mu < g.n; ++mu)
      inv_norm.push_back(column_norm2(g.eigvec, mu).inverse());
    for (int a = 0; a < g.n; ++a) {
      Scalar rhs(0);
      for (int mu = 0; mu < g.n; ++mu)
        rhs = rhs + g.eigvec[mu][a] * g.eigvec[mu][a].conj() * inv_norm[mu] *
                        two_cos(2 * g.coxeter, 2 * g.exponents[mu]);
      CHECK(rhs == Scalar(j3[a][a] - 1));
    }
  }
}

TEST_CASE("trace identity for Chebyshev T of the adjacency") {
  for (const auto& g : all_graphs()) {
    CAPTURE(g.name());
    long p = g.coxeter, twop = 2 * p;
    int n = g.n;
    // th_k = 2 T_k(A/2) by integer recursion th_k = A th_{k-1} - th_{k-2}
    auto cheb_t = [&](long k) {
      std::vector<std::vector<long>> prev(n, std::vector<long>(n, 0)), cur = prev;
      for (int i = 0; i < n; ++i) prev[i][i] = 2;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cur[i][j] = g.adj[i][j];
      if (k == 0) return prev;
      for (long step = 1; step < k; ++step) {
        std::vector<std::vector<long>> next(n, std::vector<long>(n, 0));
        for (int i = 0; i < n; ++i)
          for (int l = 0; l < n; ++l)
            if (cur[i][l])
              for (int j = 0; j < n; ++j)
                if (g.adj[l][j]) next[i][j] += cur[i][l];
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) next[i][j] -= prev[i][j];
        prev = std::move(cur);
        cur = std::move(next);
      }
      return cur;
    };
    // alpha_s = sum_nu cos(2 pi s m_nu / p') = tr T_{2s}(A/2); both sides doubled
    for (long s = 0; s <= p; ++s) {
      auto t2s = cheb_t(2 * s);
      long tr = 0;
      for (int i = 0; i < n; ++i) tr += t2s[i][i];
      Scalar alpha(0);
      for (long m : g.exponents) alpha = alpha + two_cos(twop, 2 * s * m);
      CHECK(alpha == Scalar(tr));
    }
  }
}

TEST_CASE("normalized float tables are orthonormal") {
  for (const auto& g : all_graphs()) {
    CAPTURE(g.name());
    for (const auto* table : {&g.eigvec}) {
      auto S = eigvec_normalized(*table);
      for (int mu = 0; mu < g.n; ++mu)
        for (int nu = 0; nu < g.n; ++nu) {
          std::complex<double> dot(0);
          for (int a = 0; a < g.n; ++a) dot += S[mu][a] * std::conj(S[nu][a]);
          CHECK(std::abs(dot - (mu == nu ? 1.0 : 0.0)) < 1e-9);
        }
    }
  }
  auto d4 = automorphisms(dynkin_build(Algebra::D, 4));
  auto S = eigvec_normalized(d4[2].eigvec);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      std::complex<double> dot(0);
      for (int a = 0; a < 4; ++a) dot += S[mu][a] * std::conj(S[nu][a]);
      CHECK(std::abs(dot - (mu == nu ? 1.0 : 0.0)) < 1e-9);
    }
}

TEST_CASE("model validity is the coprimality of exponent and Coxeter number") {
  auto d4 = dynkin_build(Algebra::D, 4);
  CHECK(d4.model_valid(0));
  CHECK(!d4.model_valid(1)); // m = 3 shares a factor with p' = 6
  CHECK(d4.model_valid(2));
  CHECK(!d4.model_valid(3));
  auto a3 = dynkin_build(Algebra::A, 3);
  CHECK(a3.model_valid(0));
  CHECK(!a3.model_valid(1));
  CHECK(a3.model_valid(2));
}
