#include "bohr/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bohr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-based stream keyed by (seed, index); platform-independent.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index)
      : state_(splitmix64(splitmix64(seed) ^ splitmix64(index * 0xD1B54A32D192ED03ULL + 1))) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  double next_unit() {  // [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  Cx unimodular() {
    const double th = 2.0 * M_PI * next_unit();
    return Cx{std::cos(th), std::sin(th)};
  }

 private:
  std::uint64_t state_;
};

// Taylor coefficients of the Blaschke factor (z - alpha)/(1 - conj(alpha) z).
TruncatedSeries blaschke_factor(Cx alpha, int order) {
  std::vector<Cx> c(static_cast<std::size_t>(order) + 1);
  c[0] = -alpha;
  const Cx ac = std::conj(alpha);
  const double core = 1.0 - std::norm(alpha);
  Cx acp{1.0, 0.0};
  for (int n = 1; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] = acp * core;
    acp *= ac;
  }
  return TruncatedSeries(std::move(c), FamilyTag::raw);
}

TruncatedSeries sample_mobius(CounterRng& rng, int order) {
  const double a = 0.999 * rng.next_unit();
  const Cx rot_in = rng.unimodular();
  const Cx rot_out = rng.unimodular();
  return mobius_rotated(a, +1, rot_in, rot_out, order);
}

TruncatedSeries sample_blaschke_combo(CounterRng& rng, int order) {
  const int products = 1 + static_cast<int>(rng.next_u64() % 3);
  std::vector<double> weights(static_cast<std::size_t>(products));
  double wsum = 0.0;
  for (double& w : weights) {
    w = rng.uniform(0.1, 1.0);
    wsum += w;
  }
  std::vector<Cx> combo(static_cast<std::size_t>(order) + 1, Cx{0.0, 0.0});
  for (int p = 0; p < products; ++p) {
    const int factors = 1 + static_cast<int>(rng.next_u64() % 3);
    TruncatedSeries prod = blaschke_factor(0.8 * std::sqrt(rng.next_unit()) * rng.unimodular(),
                                           order);
    for (int t = 1; t < factors; ++t)
      prod = multiply_truncated(
          prod, blaschke_factor(0.8 * std::sqrt(rng.next_unit()) * rng.unimodular(), order),
          order);
    const double w = 0.999 * weights[static_cast<std::size_t>(p)] / wsum;
    for (int n = 0; n <= order; ++n) combo[static_cast<std::size_t>(n)] += w * prod.coeff(n);
  }
  // f lies in the unit ball of H^infty, so |a_n| <= 1 for every n.
  TailEnvelope env{1.0, 1.0, order, 1};
  return TruncatedSeries(std::move(combo), FamilyTag::blaschke_combo, env);
}

TruncatedSeries sample_scaled_polynomial(CounterRng& rng, int coeff_order) {
  const int degree = 1 + static_cast<int>(rng.next_u64() %
                                          static_cast<std::uint64_t>(std::min(coeff_order, 12)));
  std::vector<Cx> c(static_cast<std::size_t>(degree) + 1);
  for (Cx& v : c) v = Cx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};

  auto grid_max = [&c, degree]() {
    double m = 0.0;
    for (int j = 0; j < 256; ++j) {
      const double th = 2.0 * M_PI * j / 256.0;
      const Cx z{std::cos(th), std::sin(th)};
      Cx acc{0.0, 0.0};
      for (int n = degree; n >= 0; --n) acc = acc * z + c[static_cast<std::size_t>(n)];
      m = std::max(m, std::abs(acc));
    }
    return m;
  };

  double peak = grid_max();
  if (peak < 1e-9) {  // degenerate draw; deterministic fix-up
    c[1] += 1.0;
    peak = grid_max();
  }
  const double scale = 1.0 / (1.01 * peak * (1.0 + M_PI * degree / 256.0));
  for (Cx& v : c) v *= scale;
  TailEnvelope env{0.0, 0.0, degree, 1};  // exact polynomial, no tail
  return TruncatedSeries(std::move(c), FamilyTag::raw, env);
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::string sample_kind_name(SampleKind kind) {
  switch (kind) {
    case SampleKind::mobius: return "mobius";
    case SampleKind::finite_blaschke_combo: return "blaschke";
    case SampleKind::scaled_polynomial: return "polynomial";
  }
  throw std::invalid_argument("sample_kind_name: unknown kind");
}

std::optional<SampleKind> parse_sample_kind(std::string_view name) {
  if (name == "mobius") return SampleKind::mobius;
  if (name == "blaschke" || name == "finite_blaschke_combo")
    return SampleKind::finite_blaschke_combo;
  if (name == "polynomial" || name == "poly" || name == "scaled_polynomial")
    return SampleKind::scaled_polynomial;
  return std::nullopt;
}

TruncatedSeries sample_bounded_function(const SampleSpec& spec, std::uint64_t index) {
  if (spec.coeff_order < 1) throw std::invalid_argument("SampleSpec: coeff_order must be >= 1");
  CounterRng rng(spec.seed, index);
  switch (spec.kind) {
    case SampleKind::mobius: return sample_mobius(rng, spec.coeff_order);
    case SampleKind::finite_blaschke_combo: return sample_blaschke_combo(rng, spec.coeff_order);
    case SampleKind::scaled_polynomial: return sample_scaled_polynomial(rng, spec.coeff_order);
  }
  throw std::invalid_argument("sample_bounded_function: unknown kind");
}

HarmonicPair sample_harmonic_pair(const SampleSpec& spec, std::uint64_t index, double k) {
  if (!(k >= 0.0 && k <= 1.0))
    throw std::invalid_argument("sample_harmonic_pair: k must be in [0,1]");
  TruncatedSeries h = sample_bounded_function(spec, index);
  CounterRng rng(spec.seed ^ 0xA5A5A5A5A5A5A5A5ULL, index);
  const double lambda = 1.0 - rng.next_unit();  // (0, 1]
  const Cx factor = lambda * k * rng.unimodular();

  std::vector<Cx> b(static_cast<std::size_t>(h.order()) + 1, Cx{0.0, 0.0});
  for (int n = 1; n <= h.order(); ++n) b[static_cast<std::size_t>(n)] = factor * h.coeff(n);
  std::optional<TailEnvelope> env = h.tail();
  if (env) env->scale *= std::abs(factor);
  TruncatedSeries g(std::move(b), FamilyTag::raw, env);
  return HarmonicPair::make(std::move(h), std::move(g), k);
}

bool admissible(const TruncatedSeries& f) {
  for (int j = 0; j < 256; ++j) {
    const double th = 2.0 * M_PI * j / 256.0;
    const Cx z = 0.999 * Cx{std::cos(th), std::sin(th)};
    const double v = f.mobius() ? std::abs(mobius_eval(*f.mobius(), z)) : std::abs(eval(f, z));
    if (!(v < 1.0)) return false;
  }
  return true;
}

VerificationReport verify_family(const RadiusFamily& family, const SampleSpec& spec,
                                 double r_fraction) {
  validate_family(family);
  if (!(r_fraction > 0.0)) throw std::invalid_argument("verify_family: r_fraction must be > 0");
  const auto start = Clock::now();

  const RootCertificate cert = compute_radius(family);
  const double r = r_fraction * cert.value;
  if (!(r < 1.0)) throw std::invalid_argument("verify_family: r_fraction * radius must be < 1");

  VerificationReport rep;
  rep.family_label = family_name(family.kind);
  rep.m = family.m;
  rep.k = family.k;
  rep.radius_used = r;
  rep.tolerance = 1e-9;

  constexpr int kCirclePoints = 64;
  const bool harmonic = family_uses_k(family.kind);

  for (int i = 0; i < spec.count; ++i) {
    TruncatedSeries f{{Cx{0.0, 0.0}}};
    std::optional<HarmonicPair> pair;
    if (harmonic) {
      pair = sample_harmonic_pair(spec, static_cast<std::uint64_t>(i), family.k);
      f = pair->h;
    } else {
      f = sample_bounded_function(spec, static_cast<std::uint64_t>(i));
    }
    if (!admissible(f)) {
      rep.audit_failures.push_back(i);
      continue;
    }

    double worst = 0.0;
    for (int j = 0; j < kCirclePoints; ++j) {
      const double th = 2.0 * M_PI * j / kCirclePoints;
      const Cx z = r * Cx{std::cos(th), std::sin(th)};
      double v = 0.0;
      switch (family.kind) {
        case FamilyKind::phi: v = functional_A_at(f, family.m, z).value; break;
        case FamilyKind::psi: v = functional_B_at(f, family.m, z).value; break;
        case FamilyKind::cap_phi: v = functional_C_at(f, family.m, z).value; break;
        case FamilyKind::lambda: v = functional_D_at(*pair, family.m, z).value; break;
        case FamilyKind::cap_lambda: v = functional_E_at(*pair, family.m, z).value; break;
      }
      worst = std::max(worst, v);
    }

    ++rep.trials;
    rep.max_value = std::max(rep.max_value, worst);
    if (worst > 1.0 + rep.tolerance) rep.violations.push_back({i, r, worst});
  }

  rep.runtime_seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_rogosinski(const SampleSpec& spec, int n_max) {
  if (n_max < 0) throw std::invalid_argument("verify_rogosinski: n_max must be >= 0");
  const auto start = Clock::now();

  VerificationReport rep;
  rep.family_label = "rogosinski";
  rep.m = 0;
  rep.k = 0.0;
  rep.radius_used = 0.5;
  rep.tolerance = 1e-9;

  // Polar grid with |z| <= 1/2: the origin plus 5 radii x 12 angles.
  std::vector<Cx> grid{Cx{0.0, 0.0}};
  for (int i = 1; i <= 5; ++i) {
    const double rad = 0.5 * i / 5.0;
    for (int j = 0; j < 12; ++j) {
      const double th = 2.0 * M_PI * j / 12.0;
      grid.push_back(rad * Cx{std::cos(th), std::sin(th)});
    }
  }
  std::vector<double> bounds(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) bounds[static_cast<std::size_t>(n)] = rogosinski_bound(n);

  double worst_margin = -1.0;
  for (int i = 0; i < spec.count; ++i) {
    const TruncatedSeries f = sample_bounded_function(spec, static_cast<std::uint64_t>(i));
    if (!admissible(f)) {
      rep.audit_failures.push_back(i);
      continue;
    }
    double margin = -1.0;
    for (const Cx& z : grid) {
      // Partial sums for all n at once: accumulate the Hasse terms.
      Cx sum{0.0, 0.0};
      Cx zk{1.0, 0.0};
      const int top = std::min(n_max, f.order());
      for (int n = 0; n <= n_max; ++n) {
        if (n <= top) {
          sum += eval_derivative(f, n, z) * zk;
          zk *= z;
        }
        margin = std::max(margin, std::abs(sum) - bounds[static_cast<std::size_t>(n)]);
      }
    }
    ++rep.trials;
    worst_margin = std::max(worst_margin, margin);
    if (margin > rep.tolerance) rep.violations.push_back({i, 0.5, 1.0 + margin});
  }

  rep.max_value = 1.0 + worst_margin;
  rep.runtime_seconds = seconds_since(start);
  return rep;
}

std::vector<double> default_a_ladder() { return {0.9, 0.99, 0.999, 0.9999}; }

SharpnessReport probe_sharpness(const RadiusFamily& family, const std::vector<double>& a_values,
                                double r_multiplier, std::optional<double> lambda) {
  validate_family(family);
  if (a_values.empty()) throw std::invalid_argument("probe_sharpness: empty a ladder");
  if (!(r_multiplier > 0.0))
    throw std::invalid_argument("probe_sharpness: r_multiplier must be > 0");

  const RootCertificate cert = compute_radius(family);
  const double r = r_multiplier * cert.value;
  if (!(r < 1.0))
    throw std::invalid_argument("probe_sharpness: r_multiplier * radius must be < 1");

  SharpnessReport rep;
  rep.family_label = family_name(family.kind);
  rep.m = family.m;
  rep.k = family.k;
  rep.lambda = lambda.value_or(family_uses_k(family.kind) ? family.k : 1.0);
  rep.radius = cert.value;
  rep.r = r;

  const double rm = pow_int(r, family.m);
  for (double a : a_values) {
    if (!(a >= 0.0 && a < 1.0))
      throw std::invalid_argument("probe_sharpness: ladder values must be in [0,1)");
    SharpnessRow row;
    row.a = a;
    row.regime_ok = true;
    if (family.kind == FamilyKind::psi)
      row.regime_ok = rm < a && a * (rm + r) < 1.0;  // witness valid only for r < a^(1/m)
    if (row.regime_ok) {
      switch (family.kind) {
        case FamilyKind::phi: row.value = extremal_A(a, family.m, r); break;
        case FamilyKind::psi: row.value = extremal_B(a, family.m, r); break;
        case FamilyKind::cap_phi: row.value = extremal_C(a, family.m, r); break;
        case FamilyKind::lambda:
          row.value = extremal_D(a, family.m, r, family.k, rep.lambda);
          break;
        case FamilyKind::cap_lambda: row.value = extremal_E(a, family.m, r, rep.lambda); break;
      }
      rep.max_value = std::max(rep.max_value, row.value);
      if (row.value > 1.0) rep.conclusive = true;
    } else {
      row.value = std::numeric_limits<double>::quiet_NaN();
    }
    row.gap = sharpness_gap(family, a, r, rep.lambda);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace bohr
