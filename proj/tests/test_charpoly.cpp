#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles/oracles.hpp"
#include "twinspec/charpoly.hpp"
#include "twinspec/error.hpp"

using namespace twinspec;

namespace {

Polynomial descending(std::initializer_list<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  std::reverse(v.begin(), v.end());
  return Polynomial(std::move(v));
}

Polynomial power(const Polynomial& p, int k) {
  Polynomial out{1};
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

const Polynomial kLam{0, 1};
const Polynomial kLam1{1, 1};

Graph nsg18() { return build_nsg(CreationSequence::parse("2,2,2,2,2,2,2,2,1,1")); }

}  // namespace

TEST_CASE("small characteristic polynomials") {
  CHECK(charpoly(Graph::from_edges(2, {{1, 2}})) == Polynomial{-1, 0, 1});
  CHECK(charpoly(Graph::from_edges(3, {{1, 2}, {2, 3}})) == Polynomial{0, -2, 0, 1});
  CHECK(charpoly(Graph(0)) == Polynomial{1});
  CHECK(charpoly(Graph(3)) == power(kLam, 3));
}

TEST_CASE("nested split graph with ten cells") {
  const Polynomial expected =
      power(kLam, 4) * power(kLam1, 4) * descending({1, -4, -75, -128, 371, 860, -441, -1368, 336, 704, -256});
  CHECK(charpoly(nsg18()) == expected);
  CHECK(main_polynomial(nsg18()).degree() == 10);
}

TEST_CASE("charpoly agrees with Laplace expansion") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 7, 0.5, rng);
    CHECK(charpoly(g) == oracle::to_polynomial(oracle::brute_charpoly(g)));
  }
}

TEST_CASE("Bareiss determinant") {
  DenseMatrix<Integer> m(3, 3);
  const long vals[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  CHECK(bareiss_determinant(m) == 4);
  DenseMatrix<Integer> singular(2, 2, Integer(1));
  CHECK(bareiss_determinant(singular) == 0);
  DenseMatrix<Integer> swap(2, 2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CHECK(bareiss_determinant(swap) == -1);
}

TEST_CASE("adjugate entries") {
  CHECK(cofactor(Graph::from_edges(2, {{1, 2}}), 1, 2) == Polynomial{1});
  const Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
  CHECK(cofactor(p3, 1, 3) == Polynomial{1});
  CHECK_THROWS_AS(cofactor(p3, 1, 1), Error);
  CHECK(cofactor(nsg18(), 5, 6) == descending({7, 42, 20, -348, -758, 192, 2220, 2124, -489, -1722, -616, 224,
                                               128, 0, 0, 0}));
  CHECK(cofactor(nsg18(), 1, 2) == descending({9, 72, 140, -280, -1370, -1304, 1228, 2840, 793, -1328, -800, 128,
                                               128, 0, 0, 0}));
  CHECK(cofactor(nsg18(), 3, 4) == descending({1, 9, 4, -171, -596, -507, 888, 1923, 599, -1062, -736, 96, 128, 0,
                                               0, 0, 0}));
}

TEST_CASE("adjugate entries agree with brute force") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 6, 0.5, rng);
    const auto m = oracle::lambda_minus_a(g);
    const int n = g.order();
    const int l = 1 + static_cast<int>(rng() % n);
    const int k = 1 + static_cast<int>((l + rng() % (n - 1)) % n);
    REQUIRE(k != l);
    CHECK(cofactor(g, l, k) == oracle::to_polynomial(oracle::brute_adjugate_entry(m, l - 1, k - 1)));
  }
}

TEST_CASE("twin-deletion identity on the reference graph") {
  const auto r = verify_twin_identity(nsg18(), make_twin_pair(nsg18(), 3, 4));
  CHECK(r.identity_holds);
  CHECK(r.phi_g_minus ==
        power(kLam, 4) * power(kLam1, 3) * descending({1, -3, -69, -145, 232, 726, -112, -926, 80, 416, -128}));
  const Graph k2 = Graph::from_edges(2, {{1, 2}});
  CHECK(verify_twin_identity(k2, make_twin_pair(k2, 1, 2)).identity_holds);
  const Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
  CHECK(verify_twin_identity(p3, make_twin_pair(p3, 1, 3)).identity_holds);
  CHECK(twin_deleted_charpoly(p3, make_twin_pair(p3, 3, 1)) == Polynomial{-1, 0, 1});
}

TEST_CASE("twin-deletion identity on random graphs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const auto tg = oracle::random_twin_graph(2 + trial % 8, rng);
    const auto r = verify_twin_identity(tg.graph, make_twin_pair(tg.graph, tg.ell, tg.k));
    CHECK(r.identity_holds);
    CHECK(r.quotient.has_value());
    CHECK_FALSE(r.discrepancy.has_value());
  }
}

TEST_CASE("h_{1,2} - a·Φ(C) equals bᵀ adj(λI - C) b") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    const auto tg = oracle::random_twin_graph(3 + trial % 4, rng);
    auto [g, pair] = permute_pair_to_front(tg.graph, make_twin_pair(tg.graph, tg.ell, tg.k));
    const Graph c = delete_vertex(delete_vertex(g, 1), 1);
    const auto mc = oracle::lambda_minus_a(c);
    Polynomial bab;
    for (int i = 1; i <= c.order(); ++i)
      for (int j = 1; j <= c.order(); ++j)
        if (g.adjacent(1, i + 2) && g.adjacent(1, j + 2))
          bab = bab + oracle::to_polynomial(oracle::brute_adjugate_entry(mc, i - 1, j - 1));
    CHECK(cofactor(g, 1, 2) - Integer(pair.a) * charpoly(c) == bab);
  }
}

TEST_CASE("Givens reduction") {
  const Graph k2 = Graph::from_edges(2, {{1, 2}});
  const auto m = givens_reduced(k2, make_twin_pair(k2, 1, 2));
  CHECK(m(0, 0) == doctest::Approx(1.0));
  CHECK(m(1, 1) == doctest::Approx(-1.0));
  CHECK(m(0, 1) == doctest::Approx(0.0));
  const Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
  const auto s = givens_reduced(p3, make_twin_pair(p3, 1, 3));
  CHECK(s(0, 2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(s(1, 2) == doctest::Approx(0.0));
  std::vector<std::vector<double>> dense(3, std::vector<double>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) dense[i][j] = s(i, j);
  const auto ev = oracle::jacobi_eigenvalues(dense);
  CHECK(ev[0] == doctest::Approx(-std::sqrt(2.0)));
  CHECK(ev[1] == doctest::Approx(0.0));
  CHECK(ev[2] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("float characteristic polynomials of symmetric matrices") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 9, 0.5, rng);
    const std::size_t n = static_cast<std::size_t>(g.order());
    DenseMatrix<double> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = g.adjacent(int(i) + 1, int(j) + 1) ? 1.0 : 0.0;
    const auto tri = symmetric_charpoly(m);
    const auto bk = berkowitz(m);
    const Polynomial exact = charpoly(g);
    REQUIRE(tri.size() == n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
      CHECK(tri[n - d] == doctest::Approx(exact.coeff(d).get_d()).epsilon(1e-12));
      CHECK(bk[n - d] == doctest::Approx(exact.coeff(d).get_d()).epsilon(1e-12));
    }
  }
}

TEST_CASE("main polynomial") {
  CHECK(main_polynomial(Graph::from_edges(2, {{1, 2}})) == Polynomial{-1, 1});
  const Graph p3 = Graph::from_edges(3, {{1, 2}, {2, 3}});
  CHECK(main_polynomial(p3) == Polynomial{-2, 0, 1});
  CHECK(main_polynomial(build_nsg(CreationSequence::parse("1,2,2,2"))).degree() == 3);
}
