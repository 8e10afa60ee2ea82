#pragma once

// Real-root isolation for integer polynomials: exact multiplicities from
// the square-free decomposition, Sturm bisection on exact rational
// endpoints, then a guarded Newton polish in doubles.

#include <optional>
#include <utility>
#include <vector>

#include "twinspec/graph.hpp"
#include "twinspec/polynomial.hpp"

namespace twinspec {

inline constexpr double kDefaultTolerance = 1e-12;

struct Interval {
  Rational lo;
  Rational hi;
};

struct SpectrumRoot {
  double value = 0.0;
  int multiplicity = 0;
  Interval isolating_interval;     // (lo, hi] contains exactly this root
  std::optional<Rational> exact;   // set when the root is rational
};

/// One entry per eigenvalue counted with multiplicity.
struct ExpandedEigenvalue {
  double value = 0.0;
  std::optional<Rational> exact;
  int multiplicity = 0;  // multiplicity of this value in the source
};

struct Spectrum {
  std::vector<SpectrumRoot> roots;  // strictly increasing values
  int degree = 0;                   // degree of the source polynomial

  int real_count() const;
  bool all_real() const { return real_count() == degree; }
  std::vector<ExpandedEigenvalue> expanded() const;
  std::vector<double> values() const;
};

/// Throws ZeroPolynomial, InvalidArgument (tol <= 0) and, when
/// require_all_real is set, NonRealRoots.
Spectrum isolate_real_roots(const Polynomial& p, double tol = kDefaultTolerance,
                            bool require_all_real = false);

/// isolate_real_roots(charpoly(g), tol) with the full real count enforced.
Spectrum eigenvalues(const Graph& g, double tol = kDefaultTolerance);

/// The single root of square-free p inside (lo, hi], to within tol.
/// Throws NotIsolating if the Sturm count of the interval is not 1.
double refine_root(const Polynomial& p, const Interval& interval, double tol = kDefaultTolerance);

}  // namespace twinspec
