#include "twinspec/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "twinspec/error.hpp"

namespace twinspec {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  }
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Polynomial::Polynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  normalize();
}

Polynomial Polynomial::constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

Polynomial Polynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted_variable(const Integer& shift) {
  return Polynomial(std::vector<Integer>{shift, Integer(1)});
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& Polynomial::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Integer Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Integer> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), lhs.coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

Rational Polynomial::operator()(const Rational& x) const {
  if (coeffs_.empty()) return Rational(0);
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  // Homogenised Horner: Σ c_i num^i den^(n-i), then divide by den^n.
  Integer acc = coeffs_.back();
  Integer den_pow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc = acc * num + coeffs_[i] * den_pow;
  }
  return make_rational(acc, den_pow);
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].get_d();
  return acc;
}

int Polynomial::sign_at(const Rational& x) const {
  if (coeffs_.empty()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = coeffs_.back();
  Integer den_pow = 1;
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc *= num;
    mpz_addmul(acc.get_mpz_t(), coeffs_[i].get_mpz_t(), den_pow.get_mpz_t());
  }
  return sgn(acc);
}

double Polynomial::magnitude_at(double x) const {
  const double ax = std::fabs(x);
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * ax + std::fabs(coeffs_[i].get_d());
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Integer> out(static_cast<std::size_t>(p.degree()));
  const auto c = p.coefficients();
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(out));
}

Polynomial exact_div(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) {
    throw Error(ErrorCode::InexactDivision, "divisor degree exceeds dividend degree");
  }
  std::vector<Integer> rem(p.coefficients().begin(), p.coefficients().end());
  const auto dc = d.coefficients();
  const std::size_t dd = dc.size() - 1;
  std::vector<Integer> quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer& top = rem[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), dc[dd].get_mpz_t())) {
      throw Error(ErrorCode::InexactDivision, "quotient is not an integer polynomial");
    }
    mpz_divexact(quot[k].get_mpz_t(), top.get_mpz_t(), dc[dd].get_mpz_t());
    for (std::size_t j = 0; j <= dd; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), quot[k].get_mpz_t(), dc[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (rem[i] != 0) throw Error(ErrorCode::InexactDivision, "nonzero remainder");
  }
  return Polynomial(std::move(quot));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  const int delta = a.degree() - b.degree();
  const Integer& lb = b.leading();
  Polynomial r = a;
  int steps = 0;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    Polynomial t = Polynomial::monomial(r.leading(), static_cast<std::size_t>(r.degree() - b.degree())) * b;
    r *= lb;
    r -= t;
    ++steps;
  }
  for (int i = steps; i < delta + 1; ++i) r *= lb;
  return r;
}

Integer content(const Polynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

/// Divide by the positive content, keeping the sign of the leading term.
Polynomial strip_content(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Integer g = content(p);
  if (g == 1) return p;
  std::vector<Integer> v(p.coefficients().begin(), p.coefficients().end());
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return Polynomial(std::move(v));
}

}  // namespace

Polynomial primitive_part(const Polynomial& p) {
  Polynomial r = strip_content(p);
  if (!r.is_zero() && r.leading() < 0) r = -r;
  return r;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = primitive_part(a);
  Polynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

bool is_square_free(const Polynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, derivative(p)).degree() == 0;
}

std::vector<SquareFreeFactor> square_free_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free decomposition of zero");
  std::vector<SquareFreeFactor> out;
  if (p.degree() == 0) return out;

  // Yun. Every divisor below is primitive, so all quotients stay in Z[x].
  const Polynomial f = primitive_part(p);
  const Polynomial df = derivative(f);
  const Polynomial a0 = gcd(f, df);
  Polynomial b = exact_div(f, a0);
  Polynomial c = exact_div(df, a0);
  Polynomial d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    const Polynomial a = gcd(b, d);
    if (a.degree() > 0) out.push_back({a, i});
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - derivative(b);
  }
  return out;
}

Integer cauchy_bound(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of zero polynomial");
  const Integer lead = abs(p.leading());
  Integer max_abs = 0;
  for (int i = 0; i < p.degree(); ++i) max_abs = std::max<Integer>(max_abs, abs(p.coeff(i)));
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), max_abs.get_mpz_t(), lead.get_mpz_t());
  return q + 1;
}

SturmSequence::SturmSequence(const Polynomial& square_free) {
  if (square_free.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm sequence of zero");
  chain_.push_back(square_free);
  Polynomial next = derivative(square_free);
  while (!next.is_zero()) {
    chain_.push_back(next);
    const Polynomial& a = chain_[chain_.size() - 2];
    const Polynomial& b = chain_.back();
    if (b.degree() == 0) break;
    // prem = lc(b)^(δ+1)·rem; undo the sign of that factor, then negate.
    Polynomial r = pseudo_remainder(a, b);
    const int delta = a.degree() - b.degree();
    const bool flip = b.leading() < 0 && (delta + 1) % 2 == 1;
    if (!flip) r = -r;
    next = strip_content(r);
  }
}

int SturmSequence::variations_at(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& lo, const Rational& hi) const {
  return variations_at(lo) - variations_at(hi);
}

int count_roots_in(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "interval must satisfy lo < hi");
  if (!is_square_free(p)) throw Error(ErrorCode::NotSquareFree, "polynomial is not square-free");
  if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) {
    throw Error(ErrorCode::EndpointIsRoot, "interval endpoint is a root");
  }
  return SturmSequence(p).count(lo, hi);
}

namespace {

void append_term(std::ostringstream& os, const Integer& c, int power, std::string_view var, bool first) {
  const Integer mag = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (mag != 1 || power == 0) os << mag.get_str();
  if (power >= 1) os << var;
  if (power >= 2) os << "^" << power;
}

}  // namespace

std::string to_string(const Polynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Integer c = p.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    append_term(os, c, i, var, first);
    first = false;
  }
  return os.str();
}

std::string to_factored_string(const Polynomial& p, std::string_view var) {
  if (p.degree() < 1) return to_string(p, var);
  Polynomial rest = p;
  int zero_mult = 0;
  int minus_one_mult = 0;
  const Polynomial x = Polynomial::shifted_variable(0);
  const Polynomial x1 = Polynomial::shifted_variable(1);
  while (rest.degree() >= 1 && rest.coeff(0) == 0) {
    rest = exact_div(rest, x);
    ++zero_mult;
  }
  while (rest.degree() >= 1 && rest.sign_at(Rational(-1)) == 0) {
    rest = exact_div(rest, x1);
    ++minus_one_mult;
  }
  std::ostringstream os;
  auto sep = [&os, first = true]() mutable {
    if (!first) os << " ";
    first = false;
  };
  if (rest.degree() == 0 && rest.coeff(0) != 1) {
    sep();
    os << rest.coeff(0).get_str();
    rest = Polynomial::constant(1);
  }
  if (zero_mult > 0) {
    sep();
    os << var;
    if (zero_mult > 1) os << "^" << zero_mult;
  }
  if (minus_one_mult > 0) {
    sep();
    os << "(" << var << "+1)";
    if (minus_one_mult > 1) os << "^" << minus_one_mult;
  }
  if (rest.degree() >= 1) {
    sep();
    if (zero_mult + minus_one_mult > 0) {
      os << "(" << to_string(rest, var) << ")";
    } else {
      os << to_string(rest, var);
    }
  }
  return os.str();
}

std::vector<std::string> to_decimal_strings(const Polynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.push_back(c.get_str());
  return out;
}

Polynomial from_decimal_strings(const std::vector<std::string>& ascending) {
  std::vector<Integer> v;
  v.reserve(ascending.size());
  for (const auto& s : ascending) {
    Integer c;
    if (s.empty() || c.set_str(s, 10) != 0) {
      throw Error(ErrorCode::ParseError, "invalid integer coefficient '" + s + "'");
    }
    v.push_back(std::move(c));
  }
  return Polynomial(std::move(v));
}

}  // namespace twinspec
