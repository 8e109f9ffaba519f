#include "bohr/functionals.hpp"

#include <cmath>
#include <stdexcept>

namespace bohr {

namespace {

constexpr double kAuditTolerance = 1e-9;
constexpr int kDerivativeSeriesMax = 512;

// Hasse derivative that treats indices beyond the truncation as zero.
Cx hasse(const TruncatedSeries& f, int k, Cx z) {
  if (k > f.order()) return Cx{0.0, 0.0};
  return eval_derivative(f, k, z);
}

double require_radius(Cx z, const char* who) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw std::invalid_argument(std::string(who) + ": |z| must be < 1");
  return r;
}

void require_m(int m, const char* who) {
  if (m < 1) throw std::invalid_argument(std::string(who) + ": m must be >= 1");
}

FunctionalResult finish(std::vector<std::pair<std::string, double>> components, bool rigorous,
                        std::optional<double> upper) {
  FunctionalResult res;
  res.components = std::move(components);
  for (const auto& [name, v] : res.components) res.value += v;
  res.rigorous = rigorous;
  if (rigorous) res.upper = upper;
  return res;
}

}  // namespace

bool dilatation_audit(const TruncatedSeries& h, const TruncatedSeries& g, double k_bound) {
  // 4 radii x 16 angles, largest radius 0.9
  for (int i = 1; i <= 4; ++i) {
    const double rad = 0.9 * i / 4.0;
    for (int j = 0; j < 16; ++j) {
      const double th = 2.0 * M_PI * j / 16.0;
      const Cx z{rad * std::cos(th), rad * std::sin(th)};
      const double hd = std::abs(hasse(h, 1, z));
      const double gd = std::abs(hasse(g, 1, z));
      if (gd > k_bound * hd + kAuditTolerance) return false;
    }
  }
  return true;
}

HarmonicPair HarmonicPair::make(TruncatedSeries h, TruncatedSeries g, double k_bound) {
  if (!(k_bound >= 0.0 && k_bound <= 1.0))
    throw std::invalid_argument("HarmonicPair: k_bound must be in [0,1]");
  if (g.coeff(0) != Cx{0.0, 0.0})
    throw std::invalid_argument("HarmonicPair: g must have no constant term");
  if (!dilatation_audit(h, g, k_bound))
    throw std::invalid_argument("HarmonicPair: dilatation audit |g'| <= k|h'| failed");
  return HarmonicPair{std::move(h), std::move(g), k_bound};
}

HarmonicPair harmonic_extremal(double a, Cx b_factor, double k_bound, int order) {
  if (std::abs(b_factor) > k_bound + 1e-12)
    throw std::invalid_argument("harmonic_extremal: |b_factor| must be <= k_bound");
  TruncatedSeries h = mobius_coeffs(a, +1, order);
  std::vector<Cx> b(static_cast<std::size_t>(order) + 1, Cx{0.0, 0.0});
  for (int n = 1; n <= order; ++n) b[static_cast<std::size_t>(n)] = b_factor * h.coeff(n);
  TailEnvelope env = *h.tail();
  env.scale *= std::abs(b_factor);
  TruncatedSeries g(std::move(b), FamilyTag::raw, env, std::nullopt);
  return HarmonicPair::make(std::move(h), std::move(g), k_bound);
}

double rogosinski_partial(const TruncatedSeries& f, Cx z, int n) {
  if (n < 0) throw std::invalid_argument("rogosinski_partial: n must be >= 0");
  require_radius(z, "rogosinski_partial");
  Cx sum{0.0, 0.0};
  Cx zk{1.0, 0.0};
  const int top = std::min(n, f.order());
  for (int k = 0; k <= top; ++k) {
    sum += hasse(f, k, z) * zk;
    zk *= z;
  }
  return std::abs(sum);
}

double rogosinski_bound(int n) {
  if (n < 0) throw std::invalid_argument("rogosinski_bound: n must be >= 0");
  double c = 1.0;  // |binom(-1/2, k)| = C(2k,k)/4^k
  double sum = 1.0;
  for (int k = 1; k <= n; ++k) {
    c *= (2.0 * k - 1.0) / (2.0 * k);
    sum += c * c;
  }
  return sum;
}

FunctionalResult functional_A_at(const TruncatedSeries& f, int m, Cx z) {
  require_m(m, "functional_A");
  const double r = require_radius(z, "functional_A");
  const Cx w = pow_int(z, m);
  const double rm = pow_int(r, m);
  const double fv = std::abs(eval(f, w));
  const double fd = std::abs(hasse(f, 1, w));
  const MajorantSum maj = majorant_sum(f, r, 2);

  const bool rigorous = f.tail().has_value();
  std::optional<double> upper;
  if (rigorous) {
    const TailEnvelope& env = *f.tail();
    upper = fv + env.bound(rm) + rm * (fd + env.derivative_bound(rm)) + *maj.upper;
  }
  return finish({{"|f(z^m)|", fv}, {"|z^m||f'(z^m)|", rm * fd}, {"sum_{k>=2}|a_k|r^k", maj.value}},
                rigorous, upper);
}

FunctionalResult functional_A(const TruncatedSeries& f, int m, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("functional_A: r must be in [0,1)");
  return functional_A_at(f, m, Cx{r, 0.0});
}

FunctionalResult functional_C_at(const TruncatedSeries& f, int m, Cx z) {
  require_m(m, "functional_C");
  const double r = require_radius(z, "functional_C");
  const Cx w = pow_int(z, m);
  const double rm = pow_int(r, m);
  const double fv = std::abs(eval(f, w));
  const double fd = std::abs(hasse(f, 1, w));
  const MajorantSum maj = majorant_sum(f, r, 2);

  const bool rigorous = f.tail().has_value();
  std::optional<double> upper;
  if (rigorous) {
    const TailEnvelope& env = *f.tail();
    upper = fv + env.bound(rm) + r * (fd + env.derivative_bound(rm)) + *maj.upper;
  }
  return finish({{"|f(z^m)|", fv}, {"|z||f'(z^m)|", r * fd}, {"sum_{k>=2}|a_k|r^k", maj.value}},
                rigorous, upper);
}

FunctionalResult functional_C(const TruncatedSeries& f, int m, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("functional_C: r must be in [0,1)");
  return functional_C_at(f, m, Cx{r, 0.0});
}

FunctionalResult functional_B_at(const TruncatedSeries& f, int m, Cx z) {
  require_m(m, "functional_B");
  const double r = require_radius(z, "functional_B");
  const double rm = pow_int(r, m);
  if (!(r + rm < 1.0))
    throw std::invalid_argument(
        "functional_B: requires r + r^m < 1 (the derivative series majorant diverges)");
  const Cx w = pow_int(z, m);
  const double fv = std::abs(eval(f, w));

  double series = 0.0;
  bool rigorous = false;
  std::optional<double> upper;

  if (f.mobius()) {
    // Exact route: |f^(k)(w)/k!| = (1-a^2) a^(k-1) / |1 + s a rot_in w|^(k+1),
    // a geometric sum over k >= 2 with ratio a r / |D| < 1.
    const MobiusParams& p = *f.mobius();
    if (p.a > 0.0) {
      const double d = std::abs(1.0 + static_cast<double>(p.sign) * p.a * p.rot_in * w);
      const double q = p.a * r / d;
      series = (1.0 - p.a * p.a) / (p.a * d) * q * q / (1.0 - q);
    }
    rigorous = true;
    upper = fv + f.tail()->bound(rm) + series;
  } else {
    // Truncated route: differentiate the retained polynomial term by term.
    const int top = std::min(f.order(), kDerivativeSeriesMax);
    double rk = r * r;
    int tiny_streak = 0;
    for (int k = 2; k <= top; ++k) {
      const double term = std::abs(hasse(f, k, w)) * rk;
      series += term;
      rk *= r;
      tiny_streak = term < 1e-17 * (1.0 + series) ? tiny_streak + 1 : 0;
      if (k > 8 && tiny_streak >= 3) break;
    }
    // Exact only when the series is a genuine polynomial (zero tail).
    rigorous = f.tail() && f.tail()->scale == 0.0;
    if (rigorous) upper = fv + series;
  }
  return finish({{"|f(z^m)|", fv}, {"sum_{k>=2}|f^(k)(z^m)/k!|r^k", series}}, rigorous, upper);
}

FunctionalResult functional_B(const TruncatedSeries& f, int m, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("functional_B: r must be in [0,1)");
  return functional_B_at(f, m, Cx{r, 0.0});
}

FunctionalResult functional_D_at(const HarmonicPair& pair, int m, Cx z) {
  require_m(m, "functional_D");
  const double r = require_radius(z, "functional_D");
  const Cx w = pow_int(z, m);
  const double rm = pow_int(r, m);
  const double hv = std::abs(eval(pair.h, w));
  const MajorantSum mh = majorant_sum(pair.h, r, 1);
  const MajorantSum mg = majorant_sum(pair.g, r, 1);

  const bool rigorous = pair.h.tail() && pair.g.tail();
  std::optional<double> upper;
  if (rigorous) upper = hv + pair.h.tail()->bound(rm) + *mh.upper + *mg.upper;
  FunctionalResult res = finish(
      {{"|h(z^m)|", hv}, {"sum_{n>=1}|a_n|r^n", mh.value}, {"sum_{n>=1}|b_n|r^n", mg.value}},
      rigorous, upper);
  res.within_guarantee = r <= 1.0 / 3.0 + 1e-15;
  return res;
}

FunctionalResult functional_D(const HarmonicPair& pair, int m, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("functional_D: r must be in [0,1)");
  return functional_D_at(pair, m, Cx{r, 0.0});
}

FunctionalResult functional_E_at(const HarmonicPair& pair, int m, Cx z) {
  require_m(m, "functional_E");
  const double r = require_radius(z, "functional_E");
  const Cx w = pow_int(z, m);
  const double rm = pow_int(r, m);
  const double hv = std::abs(eval(pair.h, w));
  const double hd = std::abs(hasse(pair.h, 1, w));
  const MajorantSum mh = majorant_sum(pair.h, r, 2);
  const MajorantSum mg = majorant_sum(pair.g, r, 1);

  const bool rigorous = pair.h.tail() && pair.g.tail();
  std::optional<double> upper;
  if (rigorous) {
    const TailEnvelope& env = *pair.h.tail();
    upper = hv + env.bound(rm) + rm * (hd + env.derivative_bound(rm)) + *mh.upper + *mg.upper;
  }
  return finish({{"|h(z^m)|", hv},
                 {"|z^m||h'(z^m)|", rm * hd},
                 {"sum_{n>=2}|a_n|r^n", mh.value},
                 {"sum_{n>=1}|b_n|r^n", mg.value}},
                rigorous, upper);
}

FunctionalResult functional_E(const HarmonicPair& pair, int m, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("functional_E: r must be in [0,1)");
  return functional_E_at(pair, m, Cx{r, 0.0});
}

double sharpness_gap(const RadiusFamily& family, double a, double r, double lambda) {
  if (family.m < 1) throw std::invalid_argument("sharpness_gap: m must be >= 1");
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("sharpness_gap: a must be in [0,1]");
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("sharpness_gap: r must be in [0,1)");
  if (family_uses_k(family.kind)) {
    if (!(family.k >= 0.0 && family.k <= 1.0))
      throw std::invalid_argument("sharpness_gap: k must be in [0,1]");
    if (!(lambda > 0.0 && lambda <= 1.0))
      throw std::invalid_argument("sharpness_gap: lambda must be in (0,1]");
  }
  const double t = pow_int(r, family.m);
  const double onep = 1.0 + a;
  switch (family.kind) {
    case FamilyKind::phi:
      return (1.0 - a * r) * (a * t * t + 2.0 * t - 1.0) +
             a * r * r * onep * (1.0 + a * t) * (1.0 + a * t);
    case FamilyKind::psi:
      return a * onep * r * r - (1.0 + t) * (1.0 - a * t) * (1.0 - a * t - a * r);
    case FamilyKind::cap_phi:
      return r * onep + a * a * r * r * t * onep * (2.0 + a * t) -
             (1.0 - t) * (1.0 + a * t) * (1.0 - a * r);
    case FamilyKind::lambda:
      return (1.0 + lambda * family.k) * r * onep * (1.0 + a * t) - (1.0 - t) * (1.0 - a * r);
    case FamilyKind::cap_lambda:
      return (1.0 - a * r) * (a * t * t + 2.0 * t - 1.0) +
             a * r * onep * (r + lambda) * (1.0 + a * t) * (1.0 + a * t);
  }
  throw std::invalid_argument("sharpness_gap: unknown kind");
}

double extremal_A(double a, int m, double r) {
  if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("extremal_A: a must be in [0,1)");
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("extremal_A: r must be in [0,1)");
  const double t = pow_int(r, m);
  const double d = 1.0 + a * t;
  return (a + 2.0 * t + a * t * t) / (d * d) + (1.0 - a * a) * a * r * r / (1.0 - a * r);
}

double extremal_B(double a, int m, double r) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument("extremal_B: a must be in (0,1)");
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("extremal_B: r must be in [0,1)");
  const double t = pow_int(r, m);
  if (!(t < a)) throw std::invalid_argument("extremal_B: requires r^m < a");
  if (!(a * t + a * r < 1.0)) throw std::invalid_argument("extremal_B: requires a(r^m + r) < 1");
  const double d = 1.0 - a * t;
  return (a - t) / d + a * r * r * (1.0 - a * a) / (d * d * (1.0 - a * t - a * r));
}

double extremal_C(double a, int m, double r) {
  if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("extremal_C: a must be in [0,1)");
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("extremal_C: r must be in [0,1)");
  const double t = pow_int(r, m);
  const double d = 1.0 + a * t;
  return ((t + a) * d + r * (1.0 - a * a)) / (d * d) + (1.0 - a * a) * a * r * r / (1.0 - a * r);
}

double extremal_D(double a, int m, double r, double k, double lambda) {
  if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("extremal_D: a must be in [0,1)");
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("extremal_D: r must be in [0,1)");
  const double t = pow_int(r, m);
  return (t + a) / (1.0 + a * t) + (lambda * k + 1.0) * r * (1.0 - a * a) / (1.0 - r * a);
}

double extremal_E(double a, int m, double r, double lambda) {
  if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("extremal_E: a must be in [0,1)");
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("extremal_E: r must be in [0,1)");
  const double t = pow_int(r, m);
  const double d = 1.0 + a * t;
  return (a + 2.0 * t + a * t * t) / (d * d) +
         a * r * (1.0 - a * a) * (r + lambda) / (1.0 - a * r);
}

}  // namespace bohr
