#include "bohr/series.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace bohr {

double pow_int(double x, int n) {
  if (n < 0) throw std::invalid_argument("pow_int: negative exponent");
  double acc = 1.0;
  double base = x;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

Cx pow_int(Cx x, int n) {
  if (n < 0) throw std::invalid_argument("pow_int: negative exponent");
  Cx acc{1.0, 0.0};
  Cx base = x;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::invalid_argument("binomial: need 0 <= k <= n");
  if (n > 1024) throw std::invalid_argument("binomial: n > 1024 unsupported");
  if (k > n - k) k = n - k;
  double res = 1.0;
  for (int i = 1; i <= k; ++i) res *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return res;
}

double TailEnvelope::bound(double r) const {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("TailEnvelope::bound: r in [0,1)");
  if (scale == 0.0) return 0.0;
  const double s = ratio * pow_int(r, power);
  if (!(s < 1.0)) throw std::invalid_argument("TailEnvelope::bound: ratio*r^power >= 1");
  return scale * pow_int(s, base_order + 1) / (1.0 - s);
}

double TailEnvelope::derivative_bound(double r) const {
  if (!(r >= 0.0 && r < 1.0))
    throw std::invalid_argument("TailEnvelope::derivative_bound: r in [0,1)");
  if (scale == 0.0) return 0.0;
  if (r == 0.0) {
    // Only the first tail term can carry exponent zero: j = power*(N+1) = 1.
    return (power == 1 && base_order == 0) ? scale * ratio : 0.0;
  }
  const double s = ratio * pow_int(r, power);
  if (!(s < 1.0))
    throw std::invalid_argument("TailEnvelope::derivative_bound: ratio*r^power >= 1");
  const int n1 = base_order + 1;
  // sum_{n > N} n s^n = s^(N+1) ((N+1) - N s) / (1-s)^2
  const double tail_n = pow_int(s, n1) * (n1 - base_order * s) / ((1.0 - s) * (1.0 - s));
  return scale * power / r * tail_n;
}

Cx mobius_eval(const MobiusParams& p, Cx z) {
  const Cx u = p.rot_in * z;
  const double s = static_cast<double>(p.sign);
  return p.rot_out * (p.a + s * u) / (1.0 + s * p.a * u);
}

TruncatedSeries::TruncatedSeries(std::vector<Cx> coeffs, FamilyTag tag,
                                 std::optional<TailEnvelope> tail,
                                 std::optional<MobiusParams> mobius)
    : coeffs_(std::move(coeffs)), tag_(tag), tail_(tail), mobius_(mobius) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient list");
  for (const Cx& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("TruncatedSeries: non-finite coefficient");
  }
}

Cx TruncatedSeries::coeff(int n) const {
  if (n < 0) throw std::invalid_argument("TruncatedSeries::coeff: negative index");
  if (n > order()) return Cx{0.0, 0.0};
  return coeffs_[static_cast<std::size_t>(n)];
}

std::optional<double> TruncatedSeries::tail_bound(double r) const {
  if (!tail_) return std::nullopt;
  return tail_->bound(r);
}

TruncatedSeries TruncatedSeries::with_tail(TailEnvelope env) const {
  return TruncatedSeries(coeffs_, tag_, env, mobius_);
}

TruncatedSeries mobius_rotated(double a, int sign, Cx rot_in, Cx rot_out, int order) {
  if (!(a >= 0.0 && a < 1.0)) throw std::invalid_argument("mobius_coeffs: a must be in [0,1)");
  if (sign != 1 && sign != -1) throw std::invalid_argument("mobius_coeffs: sign must be +/-1");
  if (order < 1) throw std::invalid_argument("mobius_coeffs: order must be >= 1");

  std::vector<Cx> c(static_cast<std::size_t>(order) + 1);
  c[0] = rot_out * a;
  // (a + s u)/(1 + s a u) = a + (1-a^2) sum_{n>=1} s^n (-a)^(n-1) u^n, u = rot_in z
  const double s = static_cast<double>(sign);
  Cx rot_pow = rot_in;
  double core = 1.0 - a * a;  // s^n (-a)^(n-1) accumulated below
  double sign_pow = s;
  for (int n = 1; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] = rot_out * (core * sign_pow) * rot_pow;
    core *= a;
    sign_pow *= -s;  // next s^(n+1) (-1)^n
    rot_pow *= rot_in;
  }

  TailEnvelope env;
  env.scale = a > 0.0 ? (1.0 - a * a) / a : 0.0;
  env.ratio = a;
  env.base_order = order;
  env.power = 1;
  MobiusParams params{a, sign, rot_in, rot_out};
  return TruncatedSeries(std::move(c), FamilyTag::mobius, env, params);
}

TruncatedSeries mobius_coeffs(double a, int sign, int order) {
  return mobius_rotated(a, sign, Cx{1.0, 0.0}, Cx{1.0, 0.0}, order);
}

Cx eval(const TruncatedSeries& f, Cx z) {
  if (!(std::abs(z) < 1.0)) throw std::invalid_argument("eval: |z| must be < 1");
  Cx acc{0.0, 0.0};
  for (int n = f.order(); n >= 0; --n) acc = acc * z + f.coeff(n);
  return acc;
}

Cx eval_derivative(const TruncatedSeries& f, int k, Cx z) {
  if (k < 0) throw std::invalid_argument("eval_derivative: k must be >= 0");
  if (k > f.order()) throw std::invalid_argument("eval_derivative: k exceeds series order");
  if (k == 0) return eval(f, z);
  if (!(std::abs(z) < 1.0)) throw std::invalid_argument("eval_derivative: |z| must be < 1");

  const int top = f.order() - k;
  double binom = binomial(f.order(), k);  // C(j+k, k) at j = top
  Cx acc{0.0, 0.0};
  for (int j = top; j >= 0; --j) {
    acc = acc * z + binom * f.coeff(j + k);
    binom *= static_cast<double>(j) / static_cast<double>(j + k);
  }
  return acc;
}

TruncatedSeries compose_power(const TruncatedSeries& f, int m) {
  if (m < 1) throw std::invalid_argument("compose_power: m must be >= 1");
  if (m == 1) return f;
  const int n = f.order();
  std::vector<Cx> c(static_cast<std::size_t>(m) * n + 1, Cx{0.0, 0.0});
  for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(m) * i] = f.coeff(i);
  std::optional<TailEnvelope> tail = f.tail();
  if (tail) tail->power *= m;
  return TruncatedSeries(std::move(c), FamilyTag::raw, tail, std::nullopt);
}

MajorantSum majorant_sum(const TruncatedSeries& f, double r, int from_index) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("majorant_sum: r must be in [0,1)");
  if (from_index < 0) throw std::invalid_argument("majorant_sum: from_index must be >= 0");

  double acc = 0.0;
  for (int n = f.order(); n >= from_index; --n) acc = acc * r + std::abs(f.coeff(n));
  MajorantSum res;
  res.value = acc * pow_int(r, from_index);
  if (auto t = f.tail_bound(r)) res.upper = res.value + *t;
  return res;
}

double schwarz_pick_bounds(double f_abs, double r, int k) {
  if (!(f_abs >= 0.0 && f_abs <= 1.0))
    throw std::invalid_argument("schwarz_pick_bounds: |f(z)| must be in [0,1]");
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("schwarz_pick_bounds: r must be in [0,1)");
  if (k < 1) throw std::invalid_argument("schwarz_pick_bounds: k must be >= 1");
  return (1.0 - f_abs * f_abs) / (pow_int(1.0 - r, k) * (1.0 + r));
}

TruncatedSeries multiply_truncated(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                                   int order) {
  if (order < 0) throw std::invalid_argument("multiply_truncated: order must be >= 0");
  std::vector<Cx> c(static_cast<std::size_t>(order) + 1, Cx{0.0, 0.0});
  for (int i = 0; i <= std::min(order, lhs.order()); ++i) {
    const Cx li = lhs.coeff(i);
    if (li == Cx{0.0, 0.0}) continue;
    const int jmax = std::min(order - i, rhs.order());
    for (int j = 0; j <= jmax; ++j) c[static_cast<std::size_t>(i + j)] += li * rhs.coeff(j);
  }
  return TruncatedSeries(std::move(c), FamilyTag::raw, std::nullopt, std::nullopt);
}

}  // namespace bohr
