#include "twinspec/charpoly.hpp"

#include <cmath>
#include <utility>

#include "twinspec/error.hpp"

namespace twinspec {

DenseMatrix<Integer> adjacency_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  DenseMatrix<Integer> a(n, n, Integer(0));
  for (const auto& [u, v] : g.edges()) {
    a(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)) = 1;
    a(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1)) = 1;
  }
  return a;
}

Polynomial charpoly(const DenseMatrix<Integer>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::SizeMismatch, "characteristic polynomial needs a square matrix");
  std::vector<Integer> desc = berkowitz(m);
  return Polynomial(std::vector<Integer>(desc.rbegin(), desc.rend()));
}

Polynomial charpoly(const Graph& g) { return charpoly(adjacency_matrix(g)); }

Integer bareiss_determinant(DenseMatrix<Integer> m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(ErrorCode::SizeMismatch, "determinant needs a square matrix");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

/// Exact interpolation through (nodes[i], values[i]) via Newton divided
/// differences; throws if the interpolant is not an integer polynomial.
Polynomial interpolate(const std::vector<Integer>& nodes, const std::vector<Integer>& values) {
  const std::size_t m = nodes.size();
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(nodes[i] - nodes[i - level]);
    }
  }
  // Horner on the Newton form: p = dd[m-1]; p = p·(x - x_i) + dd[i].
  std::vector<Rational> p{dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    std::vector<Rational> next(p.size() + 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
      next[j + 1] += p[j];
      next[j] -= p[j] * Rational(nodes[i]);
    }
    next[0] += dd[i];
    p = std::move(next);
  }
  std::vector<Integer> coeffs;
  coeffs.reserve(p.size());
  for (auto& c : p) {
    c.canonicalize();
    if (c.get_den() != 1) throw Error(ErrorCode::InexactDivision, "interpolated cofactor is not integral");
    coeffs.push_back(c.get_num());
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace

Polynomial cofactor(const Graph& g, int ell, int k) {
  const int n = g.order();
  for (int v : {ell, k}) {
    if (v < 1 || v > n) {
      throw Error(ErrorCode::LabelOutOfRange, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
  }
  if (ell == k) throw Error(ErrorCode::EqualLabels, "cofactor needs two distinct labels");

  // adj(M)_{ell,k} = (-1)^(ell+k) det(M with row k and column ell removed).
  const DenseMatrix<Integer> a = adjacency_matrix(g);
  const auto count = static_cast<std::size_t>(n);
  const long lo = -static_cast<long>((count - 1) / 2);
  std::vector<Integer> nodes, values;
  nodes.reserve(count);
  values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Integer x = lo + static_cast<long>(i);
    DenseMatrix<Integer> m(count, count);
    for (std::size_t r = 0; r < count; ++r) {
      for (std::size_t c = 0; c < count; ++c) m(r, c) = (r == c ? x : Integer(0)) - a(r, c);
    }
    Integer det = bareiss_determinant(m.submatrix(static_cast<std::size_t>(k - 1), static_cast<std::size_t>(ell - 1)));
    if ((ell + k) % 2 != 0) det = -det;
    nodes.push_back(x);
    values.push_back(std::move(det));
  }
  return interpolate(nodes, values);
}

Polynomial twin_deleted_charpoly(const Graph& g, const TwinPair& pair) {
  const TwinPair p = make_twin_pair(g, pair.ell, pair.k);
  const Polynomial quotient = exact_div(charpoly(g), Polynomial::shifted_variable(p.a));
  return quotient + cofactor(g, p.ell, p.k);
}

TwinIdentityReport verify_twin_identity(const Graph& g, const TwinPair& pair) {
  const TwinPair p = make_twin_pair(g, pair.ell, pair.k);
  const Polynomial shift = Polynomial::shifted_variable(p.a);
  TwinIdentityReport report;
  report.phi_g = charpoly(g);
  report.phi_g_minus = charpoly(delete_vertex(g, p.ell));
  report.h = cofactor(g, p.ell, p.k);
  try {
    report.quotient = exact_div(report.phi_g, shift);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InexactDivision) throw;
  }
  const Polynomial rhs = shift * (report.phi_g_minus - report.h);
  report.identity_holds = report.phi_g == rhs;
  if (!report.identity_holds) report.discrepancy = report.phi_g - rhs;
  return report;
}

DenseMatrix<double> givens_reduced(const Graph& g, const TwinPair& pair) {
  const auto [front, p] = permute_pair_to_front(g, pair);
  const auto n = static_cast<std::size_t>(front.order());
  DenseMatrix<double> a(n, n, 0.0);
  for (const auto& [u, v] : front.edges()) {
    a(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)) = 1.0;
    a(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1)) = 1.0;
  }
  const double s = 1.0 / std::sqrt(2.0);
  DenseMatrix<double> rot(n, n, 0.0);
  for (std::size_t i = 2; i < n; ++i) rot(i, i) = 1.0;
  rot(0, 0) = s;
  rot(0, 1) = -s;
  rot(1, 0) = s;
  rot(1, 1) = s;
  DenseMatrix<double> ap(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < n; ++t) acc += a(i, t) * rot(t, j);
      ap(i, j) = acc;
    }
  }
  DenseMatrix<double> out(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < n; ++t) acc += rot(t, i) * ap(t, j);
      out(i, j) = acc;
    }
  }
  return out;
}

Polynomial main_polynomial(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  const DenseMatrix<Integer> a = adjacency_matrix(g);

  struct Reduced {
    std::vector<Rational> vec;
    std::size_t pivot;
    std::vector<Rational> combo;  // vec = Σ combo[i]·A^i j
  };
  std::vector<Reduced> basis;
  std::vector<Integer> krylov(n, Integer(1));
  for (std::size_t step = 0; step <= n; ++step) {
    std::vector<Rational> r(krylov.begin(), krylov.end());
    std::vector<Rational> combo(step + 1);
    combo[step] = 1;
    for (const auto& b : basis) {
      if (r[b.pivot] == 0) continue;
      const Rational f = r[b.pivot] / b.vec[b.pivot];
      for (std::size_t i = 0; i < n; ++i) r[i] -= f * b.vec[i];
      for (std::size_t i = 0; i < b.combo.size(); ++i) combo[i] -= f * b.combo[i];
    }
    std::size_t pivot = 0;
    while (pivot < n && r[pivot] == 0) ++pivot;
    if (pivot == n) {
      std::vector<Integer> coeffs;
      coeffs.reserve(combo.size());
      for (auto& c : combo) {
        c.canonicalize();
        if (c.get_den() != 1) throw Error(ErrorCode::InexactDivision, "main polynomial is not integral");
        coeffs.push_back(c.get_num());
      }
      return Polynomial(std::move(coeffs));
    }
    basis.push_back({std::move(r), pivot, std::move(combo)});
    std::vector<Integer> next(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j) != 0) next[i] += krylov[j];
      }
    }
    krylov = std::move(next);
  }
  throw Error(ErrorCode::InvalidArgument, "Krylov sequence did not terminate");
}

}  // namespace twinspec
