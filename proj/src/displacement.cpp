#include "twinspec/displacement.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "twinspec/charpoly.hpp"
#include "twinspec/error.hpp"

namespace twinspec {

namespace {

constexpr double kVanishing = 1e-12;

EstimatorFunctions from_f(Polynomial f) {
  EstimatorFunctions fs;
  fs.f_prime = derivative(f);
  fs.f_double_prime = derivative(fs.f_prime);
  fs.f = std::move(f);
  return fs;
}

bool vanishes(const Polynomial& p, double x) {
  return std::fabs(p(x)) <= kVanishing * p.magnitude_at(x);
}

}  // namespace

EstimatorFunctions build_estimator(const Polynomial& phi_g, int a, const Polynomial& h) {
  return from_f(exact_div(phi_g, Polynomial::shifted_variable(a)) + h);
}

EstimatorFunctions build_estimator(const Graph& g, const TwinPair& pair) {
  const TwinPair p = make_twin_pair(g, pair.ell, pair.k);
  EstimatorFunctions fs = build_estimator(charpoly(g), p.a, cofactor(g, p.ell, p.k));
  assert(fs.f == charpoly(delete_vertex(g, p.ell)));
  return fs;
}

double first_order(const EstimatorFunctions& fs, double lambda0) {
  if (vanishes(fs.f_prime, lambda0)) {
    throw Error(ErrorCode::DerivativeVanishes, "f'(λ0) vanishes; λ0 is a multiple root of f");
  }
  return -fs.f(lambda0) / fs.f_prime(lambda0);
}

SecondOrder second_order(const EstimatorFunctions& fs, double lambda0) {
  const double c = fs.f(lambda0);
  const double b = fs.f_prime(lambda0);
  const double a = fs.f_double_prime(lambda0) / 2.0;
  const bool b_zero = vanishes(fs.f_prime, lambda0);
  SecondOrder out;
  if (vanishes(fs.f_double_prime, lambda0)) {
    if (b_zero) throw Error(ErrorCode::Degenerate, "f'(λ0) and f''(λ0) both vanish");
    out.kind = SecondOrderKind::Single;
    out.roots = {-c / b};
    return out;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) {
    out.kind = SecondOrderKind::Conjugate;
    out.real_part = -b / (2.0 * a);
    out.imag_part = std::sqrt(-disc) / (2.0 * std::fabs(a));
    return out;
  }
  out.kind = SecondOrderKind::RealPair;
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (q == 0.0) {
    out.roots = {0.0, 0.0};
  } else {
    // Far root first, then the one via c/q (stable when c is small).
    out.roots = {q / a, c / q};
  }
  return out;
}

EigenPairing pair_spectra(const Spectrum& spec_g, const Spectrum& spec_gp, const TwinPair& pair) {
  const auto g = spec_g.expanded();
  const auto gp = spec_gp.expanded();
  if (g.size() != gp.size() + 1) {
    throw Error(ErrorCode::SizeMismatch, "G must have exactly one more eigenvalue than G'");
  }
  const Rational removed(pair.removed_eigenvalue());
  std::optional<std::size_t> position;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i].exact && *g[i].exact == removed) position = i;
  }
  if (!position) {
    throw Error(ErrorCode::RemovedEigenvalueMissing,
                "eigenvalue " + std::to_string(pair.removed_eigenvalue()) + " is not in the spectrum of G");
  }
  EigenPairing out;
  out.removed_position = *position;
  out.removed_eigenvalue = pair.removed_eigenvalue();
  for (std::size_t i = 0; i < g.size(); ++i) {
    EigenPair p{i, std::nullopt};
    if (i < *position) p.gp_index = i;
    if (i > *position) p.gp_index = i - 1;
    out.pairs.push_back(p);
  }
  return out;
}

InterlacingWindow interlacing_window(const std::vector<double>& ascending_g, std::size_t index,
                                     std::size_t removed_position) {
  if (index >= ascending_g.size() || removed_position >= ascending_g.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "eigenvalue index out of range");
  }
  if (index == removed_position) {
    throw Error(ErrorCode::IndexOutOfRange, "the removed eigenvalue has no interlacing window");
  }
  // μ_i <= μ'_i <= μ_{i+1} below the removed slot, μ_{i-1} <= μ'_{i-1} <= μ_i above it.
  if (index < removed_position) return {0.0, ascending_g[index + 1] - ascending_g[index]};
  return {ascending_g[index - 1] - ascending_g[index], 0.0};
}

InterlacingWindow interlacing_window(const Spectrum& spec_g, std::size_t index, std::size_t removed_position) {
  return interlacing_window(spec_g.values(), index, removed_position);
}

std::string_view to_string(ChosenSource source) noexcept {
  switch (source) {
    case ChosenSource::FirstOnly: return "first_only";
    case ChosenSource::RealRoot: return "real_root";
    case ChosenSource::RealPartOfConjugates: return "real_part";
  }
  return "unknown";
}

std::string_view to_string(RowKind kind) noexcept {
  switch (kind) {
    case RowKind::Estimated: return "estimated";
    case RowKind::Removed: return "removed";
    case RowKind::Retained: return "retained";
    case RowKind::MultiplicityGain: return "multiplicity_gain";
  }
  return "unknown";
}

Selection select_estimate(std::optional<double> first, const SecondOrder& second, const InterlacingWindow& window) {
  if (second.kind == SecondOrderKind::Conjugate) {
    return {second.real_part, ChosenSource::RealPartOfConjugates, false};
  }
  const double reference = first.value_or(0.0);
  auto closest = [&](bool filtered) {
    std::optional<double> best;
    for (double r : second.roots) {
      if (filtered && !window.contains(r)) continue;
      if (!best || std::fabs(r - reference) < std::fabs(*best - reference)) best = r;
    }
    return best;
  };
  if (auto best = closest(true)) return {*best, ChosenSource::RealRoot, false};
  if (auto best = closest(false)) return {*best, ChosenSource::RealRoot, true};
  if (first) return {*first, ChosenSource::FirstOnly, true};
  return {std::numeric_limits<double>::quiet_NaN(), ChosenSource::FirstOnly, true};
}

namespace {

std::string format_value(const std::optional<Rational>& exact, double value) {
  if (exact) return exact->get_str();
  return std::to_string(value);
}

int exact_multiplicity(const Spectrum& s, const Rational& value) {
  for (const auto& r : s.roots) {
    if (r.exact && *r.exact == value) return r.multiplicity;
  }
  return 0;
}

}  // namespace

DisplacementReport displacement_report(const Graph& g, const TwinPair& pair, const EstimatorFunctions& fs,
                                       double tol) {
  DisplacementReport report;
  report.graph = g;
  report.pair = make_twin_pair(g, pair.ell, pair.k);
  report.tol = tol;
  report.estimator = fs;
  report.spectrum_g = eigenvalues(g, tol);
  report.spectrum_gp = eigenvalues(delete_vertex(g, report.pair.ell), tol);
  report.pairing = pair_spectra(report.spectrum_g, report.spectrum_gp, report.pair);

  const auto eg = report.spectrum_g.expanded();
  const auto egp = report.spectrum_gp.expanded();
  const auto values_g = report.spectrum_g.values();
  const std::string twin_kind(to_string(report.pair.kind));

  for (const auto& p : report.pairing.pairs) {
    DisplacementRow row;
    const auto& ev = eg[p.g_index];
    row.lambda_g = ev.value;
    row.exact_g = ev.exact;
    if (!p.gp_index) {
      row.kind = RowKind::Removed;
      row.notes.push_back("due to " + twin_kind + " in G; removed in G'");
      report.rows.push_back(std::move(row));
      continue;
    }
    const auto& evp = egp[*p.gp_index];
    row.lambda_gp = evp.value;
    row.window = interlacing_window(values_g, p.g_index, report.pairing.removed_position);

    if (ev.exact && evp.exact && *ev.exact == *evp.exact) {
      row.kind = RowKind::Retained;
      row.actual = 0.0;
      const int mg = ev.multiplicity;
      const int mgp = evp.multiplicity;
      if (mg > 1) {
        row.notes.push_back("repeated " + std::to_string(mg) + " times in G, " + std::to_string(mgp) +
                            " times in G'; comparison unnecessary");
      } else {
        row.notes.push_back("displacement constrained by interlacing; no estimate required");
      }
      report.rows.push_back(std::move(row));
      continue;
    }
    row.actual = evp.value - ev.value;
    if (evp.exact && exact_multiplicity(report.spectrum_gp, *evp.exact) >
                         exact_multiplicity(report.spectrum_g, *evp.exact)) {
      row.kind = RowKind::MultiplicityGain;
      row.notes.push_back("multiplicity of " + format_value(evp.exact, evp.value) +
                          " increases by one; comparison unnecessary");
      report.rows.push_back(std::move(row));
      continue;
    }

    row.kind = RowKind::Estimated;
    try {
      row.first = first_order(fs, ev.value);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DerivativeVanishes) throw;
      row.notes.push_back("no first-order estimate: f'(λ0) vanishes");
    }
    try {
      row.second = second_order(fs, ev.value);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Degenerate) throw;
      row.notes.push_back("no second-order estimate: f'(λ0) and f''(λ0) vanish");
    }
    if (row.second) {
      row.selection = select_estimate(row.first, *row.second, *row.window);
      if (row.selection->fallback) {
        row.notes.push_back("no second-order root inside the interlacing window; the root closest to the first-order value is reported");
      }
    } else if (row.first) {
      row.selection = Selection{*row.first, ChosenSource::FirstOnly, false};
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

DisplacementReport displacement_report(const Graph& g, const TwinPair& pair, double tol) {
  return displacement_report(g, pair, build_estimator(g, pair), tol);
}

}  // namespace twinspec
