#pragma once

// Dense univariate polynomials over the integers (GMP-backed), plus the
// exact primitives used for root isolation: pseudo-remainders, primitive
// gcd, Yun square-free decomposition and Sturm sequences.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twinspec {

using Integer = mpz_class;

/// Exact rational point. Always kept canonical: gcd(|num|, den) = 1, den > 0.
using Rational = mpq_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

class Polynomial {
 public:
  Polynomial() = default;

  /// Coefficients in ascending degree; trailing zeros are dropped.
  explicit Polynomial(std::vector<Integer> ascending);
  Polynomial(std::initializer_list<long> ascending);

  static Polynomial constant(const Integer& c);
  static Polynomial monomial(const Integer& c, std::size_t degree);
  /// λ + shift
  static Polynomial shifted_variable(const Integer& shift);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 stands in for the degree of the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& leading() const;
  Integer coeff(std::size_t i) const;
  std::span<const Integer> coefficients() const noexcept { return coeffs_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Integer& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial lhs, const Integer& rhs) { return lhs *= rhs; }
  friend Polynomial operator*(const Integer& lhs, Polynomial rhs) { return rhs *= lhs; }
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  /// Exact Horner evaluation.
  Rational operator()(const Rational& x) const;
  /// IEEE double Horner evaluation.
  double operator()(double x) const;
  /// Sign of p(x) in {-1, 0, 1}, computed with integers only.
  int sign_at(const Rational& x) const;
  /// Σ|c_i|·|x|^i, the magnitude scale of a float evaluation at x.
  double magnitude_at(double x) const;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

Polynomial derivative(const Polynomial& p);

/// Quotient q with p = d·q in Z[x]; throws InexactDivision otherwise.
Polynomial exact_div(const Polynomial& p, const Polynomial& d);

/// lc(b)^(deg a - deg b + 1) · a  mod  b.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

/// Non-negative gcd of the coefficients (0 for the zero polynomial).
Integer content(const Polynomial& p);

/// p / content(p), normalised to a positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct SquareFreeFactor {
  Polynomial factor;
  int multiplicity = 0;
};

/// Yun decomposition: p = unit · Π factor^multiplicity, factors primitive,
/// pairwise coprime and square-free. Constant input gives an empty list.
std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p);

bool is_square_free(const Polynomial& p);

/// ceil(1 + max|c_i| / |c_deg|): every real root lies strictly inside.
Integer cauchy_bound(const Polynomial& p);

/// Sturm chain p, p', -rem, ... kept as positive multiples of the classical
/// remainders (primitive parts with sign fixed), so sign variations agree.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& square_free);

  int variations_at(const Rational& x) const;
  /// Distinct roots in (lo, hi]; endpoints must not be roots.
  int count(const Rational& lo, const Rational& hi) const;
  const std::vector<Polynomial>& chain() const noexcept { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

int count_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi);

/// Descending-degree display, e.g. "λ^2 - 1".
std::string to_string(const Polynomial& p, std::string_view var = "λ");

/// Display with λ^m and (λ+1)^m pulled out, e.g. "λ^4 (λ+1)^4 (λ^10 - ...)".
std::string to_factored_string(const Polynomial& p, std::string_view var = "λ");

std::vector<std::string> to_decimal_strings(const Polynomial& p);
Polynomial from_decimal_strings(const std::vector<std::string>& ascending);

}  // namespace twinspec
