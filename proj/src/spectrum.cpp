#include "twinspec/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "twinspec/charpoly.hpp"
#include "twinspec/error.hpp"

namespace twinspec {

int Spectrum::real_count() const {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

std::vector<ExpandedEigenvalue> Spectrum::expanded() const {
  std::vector<ExpandedEigenvalue> out;
  for (const auto& r : roots) {
    for (int i = 0; i < r.multiplicity; ++i) out.push_back({r.value, r.exact, r.multiplicity});
  }
  return out;
}

std::vector<double> Spectrum::values() const {
  std::vector<double> out;
  for (const auto& r : roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  return out;
}

namespace {

// Largest leading coefficient whose divisors are enumerated when looking
// for rational roots p/q; beyond it only integer candidates are tried.
constexpr unsigned long kMaxDenominatorScan = 1000000;

Rational midpoint(const Interval& iv) { return (iv.lo + iv.hi) / 2; }

Rational width(const Interval& iv) { return iv.hi - iv.lo; }

/// A root of one square-free factor being isolated and refined.
struct Candidate {
  const Polynomial* factor = nullptr;
  int multiplicity = 0;
  Interval interval;
  std::optional<Rational> exact;
};

/// Shrinks an exact root's interval to (x - w/2, x + w/2].
void shrink_exact(Candidate& c, const Rational& target_width) {
  Rational half = width(c.interval) / 2;
  while (half * 2 >= target_width) half /= 2;
  c.interval = {*c.exact - half, *c.exact + half};
}

/// Bisects until the interval is narrower than target_width or a midpoint
/// hits the root exactly. Requires a sign change across the interval.
void bisect(Candidate& c, const Rational& target_width) {
  if (c.exact) {
    shrink_exact(c, target_width);
    return;
  }
  const Polynomial& f = *c.factor;
  const int sign_lo = f.sign_at(c.interval.lo);
  while (width(c.interval) >= target_width) {
    const Rational mid = midpoint(c.interval);
    const int s = f.sign_at(mid);
    if (s == 0) {
      c.exact = mid;
      shrink_exact(c, target_width);
      return;
    }
    if (s == sign_lo) {
      c.interval.lo = mid;
    } else {
      c.interval.hi = mid;
    }
  }
}

/// Looks for p/q inside a narrow interval with q dividing the leading coefficient.
void detect_rational(Candidate& c) {
  if (c.exact) return;
  const Polynomial& f = *c.factor;
  const Integer lead = abs(f.leading());
  std::vector<Integer> denominators{Integer(1)};
  if (lead > 1 && lead <= kMaxDenominatorScan) {
    const unsigned long l = lead.get_ui();
    for (unsigned long q = 2; q <= l; ++q) {
      if (l % q == 0) denominators.emplace_back(q);
    }
  }
  for (const auto& q : denominators) {
    // Largest p with p/q <= hi.
    Integer p;
    const Rational scaled = c.interval.hi * Rational(q);
    mpz_fdiv_q(p.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const Rational x = make_rational(p, q);
    if (x > c.interval.lo && f.sign_at(x) == 0) {
      c.exact = x;
      return;
    }
  }
}

double polish(const Candidate& c) {
  if (c.exact) return c.exact->get_d();
  const Polynomial& f = *c.factor;
  const Polynomial df = derivative(f);
  const double lo = c.interval.lo.get_d();
  const double hi = c.interval.hi.get_d();
  const double start = midpoint(c.interval).get_d();
  double x = start;
  for (int i = 0; i < 4; ++i) {
    const double d = df(x);
    if (d == 0.0 || !std::isfinite(d)) break;
    const double next = x - f(x) / d;
    if (!(next >= lo && next <= hi)) return start;
    if (next == x) break;
    x = next;
  }
  return x;
}

void isolate_factor(const Polynomial& f, int multiplicity, std::vector<Candidate>& out) {
  const SturmSequence sturm(f);
  const Integer bound = cauchy_bound(f);
  struct Pending {
    Interval iv;
    int count;
  };
  std::vector<Pending> work;
  const Interval all{Rational(-bound), Rational(bound)};
  work.push_back({all, sturm.count(all.lo, all.hi)});
  while (!work.empty()) {
    Pending item = std::move(work.back());
    work.pop_back();
    if (item.count == 0) continue;
    if (item.count == 1) {
      out.push_back({&f, multiplicity, item.iv, std::nullopt});
      continue;
    }
    const Rational mid = midpoint(item.iv);
    if (f.sign_at(mid) == 0) {
      // Carve out a small interval around the rational root.
      Rational delta = width(item.iv) / 4;
      while (f.sign_at(mid - delta) == 0 || f.sign_at(mid + delta) == 0 ||
             sturm.count(mid - delta, mid + delta) != 1) {
        delta /= 2;
      }
      out.push_back({&f, multiplicity, {mid - delta, mid + delta}, mid});
      const Interval left{item.iv.lo, mid - delta};
      const Interval right{mid + delta, item.iv.hi};
      work.push_back({left, sturm.count(left.lo, left.hi)});
      work.push_back({right, sturm.count(right.lo, right.hi)});
      continue;
    }
    const Interval left{item.iv.lo, mid};
    const Interval right{mid, item.iv.hi};
    const int left_count = sturm.count(left.lo, left.hi);
    work.push_back({left, left_count});
    work.push_back({right, item.count - left_count});
  }
}

Rational tolerance_width(double tol) {
  Rational w(tol);
  return w / 4;
}

}  // namespace

Spectrum isolate_real_roots(const Polynomial& p, double tol, bool require_all_real) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot isolate roots of the zero polynomial");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");

  const auto factors = square_free_decomposition(p);
  std::vector<Candidate> candidates;
  for (const auto& sf : factors) isolate_factor(sf.factor, sf.multiplicity, candidates);

  Rational target = tolerance_width(tol);
  for (auto& c : candidates) {
    bisect(c, target);
    detect_rational(c);
    if (c.exact) shrink_exact(c, target);
  }

  auto by_position = [](const Candidate& a, const Candidate& b) {
    const Rational ma = a.exact ? *a.exact : midpoint(a.interval);
    const Rational mb = b.exact ? *b.exact : midpoint(b.interval);
    return ma < mb;
  };
  std::sort(candidates.begin(), candidates.end(), by_position);
  // Roots of different factors are distinct; narrow until the intervals separate.
  for (bool overlap = true; overlap;) {
    overlap = false;
    for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
      if (candidates[i].interval.hi >= candidates[i + 1].interval.lo) {
        overlap = true;
        const Rational w = std::min(width(candidates[i].interval), width(candidates[i + 1].interval)) / 2;
        bisect(candidates[i], w);
        bisect(candidates[i + 1], w);
      }
    }
    if (overlap) std::sort(candidates.begin(), candidates.end(), by_position);
  }

  Spectrum spectrum;
  spectrum.degree = p.degree();
  for (const auto& c : candidates) {
    spectrum.roots.push_back({polish(c), c.multiplicity, c.interval, c.exact});
  }
  if (require_all_real && !spectrum.all_real()) {
    throw Error(ErrorCode::NonRealRoots, "only " + std::to_string(spectrum.real_count()) + " of " +
                                             std::to_string(spectrum.degree) + " roots are real");
  }
  return spectrum;
}

Spectrum eigenvalues(const Graph& g, double tol) { return isolate_real_roots(charpoly(g), tol, true); }

double refine_root(const Polynomial& p, const Interval& interval, double tol) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot refine a root of the zero polynomial");
  if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (!(interval.lo < interval.hi)) throw Error(ErrorCode::InvalidArgument, "interval must satisfy lo < hi");
  const Polynomial f = exact_div(primitive_part(p), gcd(p, derivative(p)));
  if (f.sign_at(interval.lo) == 0 || f.sign_at(interval.hi) == 0) {
    throw Error(ErrorCode::EndpointIsRoot, "interval endpoint is a root");
  }
  const int count = SturmSequence(f).count(interval.lo, interval.hi);
  if (count != 1) {
    throw Error(ErrorCode::NotIsolating, "interval contains " + std::to_string(count) + " roots, expected 1");
  }
  Candidate c{&f, 1, interval, std::nullopt};
  bisect(c, tolerance_width(tol));
  detect_rational(c);
  return polish(c);
}

}  // namespace twinspec
