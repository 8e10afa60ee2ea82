#pragma once

// Independent reference implementations used only by the tests: a Laplace
// expansion determinant over int64 polynomials, a cyclic Jacobi eigensolver,
// and random graph generators with injected twins.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "twinspec/graph.hpp"
#include "twinspec/polynomial.hpp"

namespace oracle {

using IntPoly = std::vector<std::int64_t>;  // ascending

inline IntPoly add(IntPoly a, const IntPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

inline IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline IntPoly scale(IntPoly a, std::int64_t s) {
  for (auto& c : a) c *= s;
  return a;
}

/// det of a square matrix of polynomials, cofactor expansion along row 0.
inline IntPoly laplace_det(const std::vector<std::vector<IntPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {1};
  if (n == 1) return m[0][0];
  IntPoly total;
  for (std::size_t c = 0; c < n; ++c) {
    if (std::all_of(m[0][c].begin(), m[0][c].end(), [](std::int64_t x) { return x == 0; })) continue;
    std::vector<std::vector<IntPoly>> sub(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) sub[i - 1].push_back(m[i][j]);
    }
    const IntPoly term = mul(m[0][c], laplace_det(sub));
    total = add(total, scale(term, c % 2 == 0 ? 1 : -1));
  }
  return total;
}

/// λI - A as a matrix of polynomials.
inline std::vector<std::vector<IntPoly>> lambda_minus_a(const twinspec::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) m[i - 1][j - 1] = {0, 1};
      else m[i - 1][j - 1] = {g.adjacent(i, j) ? -1 : 0};
    }
  return m;
}

inline IntPoly brute_charpoly(const twinspec::Graph& g) { return laplace_det(lambda_minus_a(g)); }

/// Entry (r, c) of adj(M) = (-1)^{r+c} det(M without row c, column r), 0-based.
inline IntPoly brute_adjugate_entry(const std::vector<std::vector<IntPoly>>& m, std::size_t r, std::size_t c) {
  std::vector<std::vector<IntPoly>> sub;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == c) continue;
    std::vector<IntPoly> row;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (j != r) row.push_back(m[i][j]);
    sub.push_back(std::move(row));
  }
  return scale(laplace_det(sub), (r + c) % 2 == 0 ? 1 : -1);
}

inline twinspec::Polynomial to_polynomial(const IntPoly& p) {
  std::vector<twinspec::Integer> c;
  for (auto x : p) c.emplace_back(static_cast<long>(x));
  return twinspec::Polynomial(std::move(c));
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        total += a[i][j] * a[i][j];
        if (i != j) off += a[i][j] * a[i][j];
      }
    if (off <= 1e-30 * std::max(total, 1.0)) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<double>> adjacency_doubles(const twinspec::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a[i - 1][j - 1] = (i != j && g.adjacent(i, j)) ? 1.0 : 0.0;
  return a;
}

inline twinspec::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution edge(p);
  std::vector<twinspec::Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return twinspec::Graph::from_edges(n, edges);
}

struct TwinGraph {
  twinspec::Graph graph;
  int ell = 0;  // the injected twin
  int k = 0;    // its partner
  int a = 0;
};

/// Random graph on n-1 vertices plus a copy of one vertex (adjacent to it
/// when a = 1), then randomly relabelled.
inline TwinGraph random_twin_graph(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.2, 0.8);
  const twinspec::Graph base = random_graph(n - 1, density(rng), rng);
  const int u = std::uniform_int_distribution<int>(1, n - 1)(rng);
  const int a = std::bernoulli_distribution(0.5)(rng) ? 1 : 0;
  std::vector<twinspec::Edge> edges = base.edges();
  for (int v = 1; v <= n - 1; ++v)
    if (v != u && base.adjacent(u, v)) edges.emplace_back(v, n);
  if (a == 1) edges.emplace_back(u, n);
  const twinspec::Graph g = twinspec::Graph::from_edges(n, edges);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  // order[i] is the old label placed at new label i+1.
  std::vector<int> new_label(n + 1);
  for (int i = 0; i < n; ++i) new_label[order[i]] = i + 1;
  TwinGraph out{twinspec::relabel(g, order), new_label[n], new_label[u], a};
  if (std::bernoulli_distribution(0.5)(rng)) std::swap(out.ell, out.k);
  return out;
}

/// Valid compact creation sequence: even r in [2, max_cells], n <= max_n.
inline std::vector<int> random_creation_sequence(int max_cells, int max_n, std::mt19937_64& rng) {
  const int r = 2 * std::uniform_int_distribution<int>(1, max_cells / 2)(rng);
  std::vector<int> cells(r, 1);
  int n = r;
  std::uniform_int_distribution<int> pick(0, r - 1);
  const int extra = std::uniform_int_distribution<int>(0, max_n - r)(rng);
  for (int i = 0; i < extra && n < max_n; ++i, ++n) cells[pick(rng)] += 1;
  return cells;
}

}  // namespace oracle
