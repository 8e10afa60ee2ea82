#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace twinspec {

/// Row-major dense matrix, 0-based.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Copy without row r and column c.
  DenseMatrix submatrix(std::size_t r, std::size_t c) const {
    DenseMatrix out(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
        if (j == c) continue;
        out(oi, oj++) = (*this)(i, j);
      }
      ++oi;
    }
    return out;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Coefficients of det(λI - M), highest degree first, by Berkowitz's
/// division-free recurrence. Works over any commutative ring T.
template <class T>
std::vector<T> berkowitz(const DenseMatrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<T> poly{T(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // Leading r×r block M, column C above the diagonal entry, row R left of it.
    // Toeplitz column: 1, -m_rr, -R C, -R M C, ..., -R M^(r-1) C.
    std::vector<T> toeplitz(r + 2);
    toeplitz[0] = T(1);
    toeplitz[1] = -m(r, r);
    std::vector<T> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    for (std::size_t p = 0; p < r; ++p) {
      T acc(0);
      for (std::size_t i = 0; i < r; ++i) acc += m(r, i) * col[i];
      toeplitz[p + 2] = -acc;
      if (p + 1 < r) {
        std::vector<T> next(r, T(0));
        for (std::size_t i = 0; i < r; ++i) {
          for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * col[j];
        }
        col = std::move(next);
      }
    }
    std::vector<T> out(r + 2, T(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j) out[i] += toeplitz[i - j] * poly[j];
    }
    poly = std::move(out);
  }
  return poly;
}

/// Coefficients of det(λI - M) for symmetric M, highest degree first:
/// Householder reduction to tridiagonal form, then the three-term
/// recurrence p_k = (λ - d_k) p_{k-1} - e_k² p_{k-2}.
inline std::vector<double> symmetric_charpoly(DenseMatrix<double> m) {
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm += m(i, k) * m(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = m(k + 1, k) > 0 ? -norm : norm;
    std::vector<double> v(n, 0.0);
    v[k + 1] = m(k + 1, k) - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = m(i, k);
    double vv = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vv += v[i] * v[i];
    if (vv == 0.0) continue;
    // M <- H M H with H = I - 2 v vᵀ / vᵀv.
    std::vector<double> p(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) p[i] += m(i, j) * v[j];
      p[i] *= 2.0 / vv;
    }
    double vp = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vp += v[i] * p[i];
    const double c = vp / vv;
    for (std::size_t i = 0; i < n; ++i) p[i] -= c * v[i];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= v[i] * p[j] + p[i] * v[j];
    }
  }
  std::vector<double> prev{1.0};
  std::vector<double> cur{1.0};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> next(k + 2, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i] += cur[i];
      next[i + 1] -= m(k, k) * cur[i];
    }
    if (k > 0) {
      const double e2 = m(k, k - 1) * m(k, k - 1);
      for (std::size_t i = 0; i < prev.size(); ++i) next[i + 2] -= e2 * prev[i];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace twinspec
