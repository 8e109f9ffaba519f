#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bohr/radii.hpp"
#include "bohr/series.hpp"

namespace bohr {

/// Harmonic mapping f = h + conj(g) with |g'| <= k_bound |h'| on the disk.
/// g carries no constant term. Construct through make(), which audits both
/// hypotheses on a 64-point grid with |z| <= 0.9.
struct HarmonicPair {
  TruncatedSeries h;
  TruncatedSeries g;
  double k_bound = 1.0;

  static HarmonicPair make(TruncatedSeries h, TruncatedSeries g, double k_bound);
};

/// Necessary-condition audit of the dilatation hypothesis:
/// |g'(z)| <= k_bound |h'(z)| + 1e-9 on the audit grid.
bool dilatation_audit(const TruncatedSeries& h, const TruncatedSeries& g, double k_bound);

/// The extremal harmonic pair: h = (a+z)/(1+az) and g with b_n = b_factor*a_n
/// for n >= 1, b_0 = 0 (so g' = b_factor * h'). Requires |b_factor| <= k_bound.
HarmonicPair harmonic_extremal(double a, Cx b_factor, double k_bound, int order);

/// Value of one coefficient functional plus its additive components.
/// `rigorous` records whether certified tail bounds backed every component;
/// `upper` is then value plus the truncation margins. `within_guarantee`
/// is cleared when the evaluation point lies outside the region in which the
/// inequality is actually guaranteed (functional_D with r > 1/3).
struct FunctionalResult {
  double value = 0.0;
  std::vector<std::pair<std::string, double>> components;
  bool rigorous = false;
  std::optional<double> upper;
  bool within_guarantee = true;
};

/// |sum_{k=0}^n f^(k)(z)/k! z^k| for |z| < 1. Hasse derivatives of index
/// beyond the truncation order vanish, so any n >= 0 is accepted.
double rogosinski_partial(const TruncatedSeries& f, Cx z, int n);

/// sum_{k=0}^n binom(-1/2,k)^2, via binom(-1/2,k) = (-1)^k C(2k,k)/4^k.
/// The partial-sum bound above holds against this for |z| <= 1/2.
double rogosinski_bound(int n);

// The five Bohr-type functionals, evaluated at z = r on the positive axis.
// The _at variants take a complex evaluation point with |z| = r for circle
// sweeps; the majorant components depend on |z| only.

/// A: |f(z^m)| + |z^m| |f'(z^m)| + sum_{k>=2} |a_k| r^k.
FunctionalResult functional_A(const TruncatedSeries& f, int m, double r);
FunctionalResult functional_A_at(const TruncatedSeries& f, int m, Cx z);

/// B: |f(z^m)| + sum_{k>=2} |f^(k)(z^m)/k!| r^k. Requires r + r^m < 1.
/// Mobius-tagged series use the exact closed-form derivative moduli
/// (geometric sum); otherwise the truncated series is differentiated and the
/// result is flagged non-rigorous unless the series is an exact polynomial.
FunctionalResult functional_B(const TruncatedSeries& f, int m, double r);
FunctionalResult functional_B_at(const TruncatedSeries& f, int m, Cx z);

/// C: |f(z^m)| + |z| |f'(z^m)| + sum_{k>=2} |a_k| r^k. The derivative weight
/// is r rather than r^m; for m = 1 this coincides with A.
FunctionalResult functional_C(const TruncatedSeries& f, int m, double r);
FunctionalResult functional_C_at(const TruncatedSeries& f, int m, Cx z);

/// D: |h(z^m)| + sum_{n>=1} |a_n| r^n + sum_{n>=1} |b_n| r^n. The inequality
/// is guaranteed for r <= 1/3 only; larger r is computed but flagged.
FunctionalResult functional_D(const HarmonicPair& pair, int m, double r);
FunctionalResult functional_D_at(const HarmonicPair& pair, int m, Cx z);

/// E: |h(z^m)| + |z^m| |h'(z^m)| + sum_{n>=2} |a_n| r^n + sum_{n>=1} |b_n| r^n.
FunctionalResult functional_E(const HarmonicPair& pair, int m, double r);
FunctionalResult functional_E_at(const HarmonicPair& pair, int m, Cx z);

/// Signed gap polynomial of the family's extremal functional at (a, r): the
/// functional exceeds 1 exactly where the gap is positive. At a = 1 each gap
/// reduces to the family's radius equation (with lambda = k for cap_lambda,
/// lambda = 1 for lambda). `lambda` is read only by the two harmonic kinds.
double sharpness_gap(const RadiusFamily& family, double a, double r, double lambda = 1.0);

// Closed-form values of the functionals on the extremal witnesses, used by
// the sharpness probes and as independent oracles for the series route.

/// A on (a+z)/(1+az) at z = r.
double extremal_A(double a, int m, double r);
/// B on (a-z)/(1-az) at z = r; requires r^m < a and a(r^m + r) < 1.
double extremal_B(double a, int m, double r);
/// C on (a+z)/(1+az) at z = r.
double extremal_C(double a, int m, double r);
/// D on the harmonic pair with g' = lambda*k*h' at z = r.
double extremal_D(double a, int m, double r, double k, double lambda);
/// E on the harmonic pair with g' = lambda*a*h' at z = r.
double extremal_E(double a, int m, double r, double lambda);

}  // namespace bohr
