#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bohr/functionals.hpp"
#include "bohr/radii.hpp"
#include "bohr/series.hpp"

namespace bohr {

enum class SampleKind { mobius, finite_blaschke_combo, scaled_polynomial };

std::string sample_kind_name(SampleKind kind);
std::optional<SampleKind> parse_sample_kind(std::string_view name);

/// Deterministic sampling plan: the same spec always produces the same
/// sample sequence. The stream is counter-based per (seed, index), so samples
/// may be generated in any order (or in parallel) without changing them.
struct SampleSpec {
  SampleKind kind = SampleKind::mobius;
  int count = 500;
  std::uint64_t seed = 42;
  int coeff_order = 256;
};

/// Draws sample `index` of the spec: a function with sup norm verifiably
/// below 1 on the disk.
///   mobius:               rotated disk automorphism with a in [0, 0.999)
///   finite_blaschke_combo: convex combination of products of <= 3 Blaschke
///                          factors, scaled by 0.999
///   scaled_polynomial:    random polynomial normalized by 1.01 x (256-point
///                          boundary maximum) x (1 + pi*degree/256)
TruncatedSeries sample_bounded_function(const SampleSpec& spec, std::uint64_t index);

/// Harmonic sample: h drawn as above, g integrated termwise from
/// g' = lambda * k * omega * h' with lambda in (0,1] and |omega| = 1, b_0 = 0.
HarmonicPair sample_harmonic_pair(const SampleSpec& spec, std::uint64_t index, double k);

/// Class-membership audit: |f| < 1 at 256 points on the circle |z| = 0.999.
/// Mobius-tagged samples are audited through their exact closed form (the
/// truncated polynomial is not a faithful proxy near the boundary when a
/// is close to 1).
bool admissible(const TruncatedSeries& f);

struct Violation {
  int sample = 0;
  double r = 0.0;
  double value = 0.0;
};

/// Outcome of a randomized sweep. For the five radius families max_value is
/// the largest functional value seen; for the rogosinski sweep it is
/// 1 + max(partial - bound), so that in both cases violations are exactly
/// the trials with max_value beyond 1 + tolerance.
struct VerificationReport {
  std::string family_label;
  int m = 0;
  double k = 1.0;
  double radius_used = 0.0;  // the r every trial was evaluated at
  int trials = 0;
  double max_value = 0.0;
  double tolerance = 1e-9;
  std::vector<Violation> violations;
  std::vector<int> audit_failures;  // sample ids excluded from the trial count
  double runtime_seconds = 0.0;
};

/// Evaluates the family's functional for `spec.count` samples at
/// r = r_fraction * (certified radius), maximizing over 64 points on the
/// circle |z| = r. Requires r < 1. Harmonic families pair each sampled h as
/// described at sample_harmonic_pair.
VerificationReport verify_family(const RadiusFamily& family, const SampleSpec& spec,
                                 double r_fraction);

/// Partial-sum sweep: for every sample, every n <= n_max and every z on a
/// polar grid with |z| <= 1/2, checks the derivative partial sum against the
/// universal bound.
VerificationReport verify_rogosinski(const SampleSpec& spec, int n_max = 10);

struct SharpnessRow {
  double a = 0.0;
  double value = 0.0;   // extremal functional value (NaN if out of regime)
  double gap = 0.0;     // sharpness gap polynomial at (a, r)
  bool regime_ok = true;
};

struct SharpnessReport {
  std::string family_label;
  int m = 0;
  double k = 1.0;
  double lambda = 1.0;
  double radius = 0.0;  // certified radius
  double r = 0.0;       // probe point r_multiplier * radius
  std::vector<SharpnessRow> rows;
  double max_value = 0.0;
  bool conclusive = false;  // some admissible a pushed the functional past 1
};

/// Evaluates the family's extremal closed form at r = r_multiplier * radius
/// for each a in the ladder. The psi family additionally requires r < a^(1/m)
/// and a(r^m + r) < 1; rows outside that regime are flagged and skipped.
/// lambda defaults to the family's k for the harmonic kinds.
SharpnessReport probe_sharpness(const RadiusFamily& family, const std::vector<double>& a_values,
                                double r_multiplier, std::optional<double> lambda = std::nullopt);

/// {0.9, 0.99, 0.999, 0.9999}
std::vector<double> default_a_ladder();

}  // namespace bohr
