#pragma once

// First- and second-order estimates of how each eigenvalue moves when a
// twin vertex is deleted, built on f(λ) = Φ(G)/(λ + a) + h_{ell,k}(λ).
//
// Displacements follow d = λ(G') - λ0, so the first-order estimate is
// d1 = -f(λ0)/f'(λ0) and the second-order estimates solve
// f(λ0) + d·f'(λ0) + d²·f''(λ0)/2 = 0.

#include <optional>
#include <string>
#include <vector>

#include "twinspec/graph.hpp"
#include "twinspec/polynomial.hpp"
#include "twinspec/spectrum.hpp"

namespace twinspec {

struct EstimatorFunctions {
  Polynomial f;
  Polynomial f_prime;
  Polynomial f_double_prime;
};

EstimatorFunctions build_estimator(const Graph& g, const TwinPair& pair);
/// f = phi_g/(λ + a) + h for caller-supplied polynomials.
EstimatorFunctions build_estimator(const Polynomial& phi_g, int a, const Polynomial& h);

/// Inclusive bounds on d = λ(G') - λ0 allowed by interlacing.
struct InterlacingWindow {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double d, double slack = 1e-9) const { return d >= lo - slack && d <= hi + slack; }
};

enum class SecondOrderKind { RealPair, Conjugate, Single };

struct SecondOrder {
  SecondOrderKind kind = SecondOrderKind::RealPair;
  std::vector<double> roots;  // RealPair: two roots, Single: the linear root
  double real_part = 0.0;     // Conjugate only
  double imag_part = 0.0;     // Conjugate only, >= 0
};

/// Throws DerivativeVanishes when |f'(λ0)| <= 1e-12 · Σ|c_i||λ0|^i.
double first_order(const EstimatorFunctions& fs, double lambda0);

/// Throws Degenerate when both f'(λ0) and f''(λ0) vanish; degrades to a
/// Single linear root when only f''(λ0) does.
SecondOrder second_order(const EstimatorFunctions& fs, double lambda0);

struct EigenPair {
  std::size_t g_index = 0;
  std::optional<std::size_t> gp_index;  // empty for the removed eigenvalue
};

struct EigenPairing {
  std::vector<EigenPair> pairs;  // one per eigenvalue of G, ascending
  std::size_t removed_position = 0;
  int removed_eigenvalue = 0;
};

/// Order-preserving map from G's eigenvalues onto G''s, skipping the last
/// occurrence of the removed eigenvalue (0 or -1, which must be exact).
EigenPairing pair_spectra(const Spectrum& spec_g, const Spectrum& spec_gp, const TwinPair& pair);

InterlacingWindow interlacing_window(const std::vector<double>& ascending_g, std::size_t index,
                                     std::size_t removed_position);
InterlacingWindow interlacing_window(const Spectrum& spec_g, std::size_t index, std::size_t removed_position);

enum class ChosenSource { FirstOnly, RealRoot, RealPartOfConjugates };

std::string_view to_string(ChosenSource source) noexcept;

struct Selection {
  double chosen = 0.0;
  ChosenSource source = ChosenSource::FirstOnly;
  bool fallback = false;  // no real root survived the window filter
};

/// Real roots outside the window are dropped; of the survivors the one
/// closest to the first-order value wins. Conjugate pairs give their real
/// part. If no root survives, the closest root overall is taken and the
/// selection is marked as a fallback. Without a first-order value the
/// reference point is 0.
Selection select_estimate(std::optional<double> first, const SecondOrder& second,
                          const InterlacingWindow& window);

enum class RowKind {
  Estimated,         // moved eigenvalue, estimates computed
  Removed,           // the eigenvalue contributed by the deleted twin
  Retained,          // exact eigenvalue paired with the same exact value
  MultiplicityGain,  // lands on an exact eigenvalue whose multiplicity grows
};

std::string_view to_string(RowKind kind) noexcept;

struct DisplacementRow {
  RowKind kind = RowKind::Estimated;
  double lambda_g = 0.0;
  std::optional<Rational> exact_g;
  std::optional<double> lambda_gp;
  std::optional<double> actual;
  std::optional<InterlacingWindow> window;
  std::optional<double> first;
  std::optional<SecondOrder> second;
  std::optional<Selection> selection;
  std::vector<std::string> notes;
};

struct DisplacementReport {
  Graph graph;
  TwinPair pair;
  double tol = kDefaultTolerance;
  EstimatorFunctions estimator;
  Spectrum spectrum_g;
  Spectrum spectrum_gp;
  EigenPairing pairing;
  std::vector<DisplacementRow> rows;  // one per eigenvalue of G, ascending
};

DisplacementReport displacement_report(const Graph& g, const TwinPair& pair, double tol = kDefaultTolerance);

/// Same pipeline with the estimates taken from caller-supplied functions;
/// spectra and actual displacements still come from G and G - v_ell.
DisplacementReport displacement_report(const Graph& g, const TwinPair& pair, const EstimatorFunctions& fs,
                                       double tol = kDefaultTolerance);

}  // namespace twinspec
