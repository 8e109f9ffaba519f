#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace bohr {

using Cx = std::complex<double>;

/// x^n for integer n >= 0 by repeated squaring. Exact at x = 0.
double pow_int(double x, int n);
Cx pow_int(Cx x, int n);

/// Binomial coefficient C(n, k) via the multiplicative recurrence.
/// Valid for 0 <= k <= n <= 1024 (stays below the binary64 range).
double binomial(int n, int k);

enum class FamilyTag { mobius, blaschke_combo, raw };

/// Geometric envelope certifying |a_j| <= scale * ratio^n for every
/// coefficient index j = power * n with n > base_order (and a_j = 0 at
/// indices that are not multiples of `power`). `power` starts at 1 and is
/// multiplied by m under compose_power, so the bound of the composed series
/// at r equals the bound of the original at r^m.
struct TailEnvelope {
  double scale = 0.0;
  double ratio = 0.0;
  int base_order = 0;
  int power = 1;

  /// sum_{n > base_order} scale * (ratio * r^power)^n, i.e. a rigorous
  /// upper bound for sum_{j > power*base_order} |a_j| r^j.
  double bound(double r) const;

  /// Rigorous upper bound for sum over the same tail of j * |a_j| r^(j-1),
  /// the truncation error of the first derivative.
  double derivative_bound(double r) const;
};

/// Parameters of w = rot_out * (a + sign*u) / (1 + sign*a*u), u = rot_in * z.
/// Kept alongside the coefficients so that exact closed-form values of the
/// map and its derivatives stay available after truncation.
struct MobiusParams {
  double a = 0.0;
  int sign = 1;
  Cx rot_in{1.0, 0.0};
  Cx rot_out{1.0, 0.0};
};

/// Exact value of the (rotated) Mobius map at z.
Cx mobius_eval(const MobiusParams& p, Cx z);

/// Finite Taylor coefficient vector a_0..a_N of a function analytic on the
/// unit disk, optionally carrying a rigorous geometric tail envelope.
/// Immutable after construction; all operations on it are pure.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Cx> coeffs, FamilyTag tag = FamilyTag::raw,
                           std::optional<TailEnvelope> tail = std::nullopt,
                           std::optional<MobiusParams> mobius = std::nullopt);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Cx>& coeffs() const { return coeffs_; }
  Cx coeff(int n) const;
  FamilyTag tag() const { return tag_; }
  const std::optional<TailEnvelope>& tail() const { return tail_; }
  const std::optional<MobiusParams>& mobius() const { return mobius_; }

  /// Rigorous upper bound for sum_{n > order} |a_n| r^n when an envelope is
  /// known; nullopt for raw series without a caller-supplied tail.
  std::optional<double> tail_bound(double r) const;

  /// Copy with a caller-supplied tail envelope attached.
  TruncatedSeries with_tail(TailEnvelope env) const;

 private:
  std::vector<Cx> coeffs_;
  FamilyTag tag_;
  std::optional<TailEnvelope> tail_;
  std::optional<MobiusParams> mobius_;
};

/// Taylor coefficients of (a + sign*z) / (1 + sign*a*z) through index
/// `order`, with the exact geometric tail (1-a^2) a^order r^(order+1)/(1-ar).
/// Requires 0 <= a < 1, order >= 1, sign in {+1, -1}.
TruncatedSeries mobius_coeffs(double a, int sign, int order);

/// Rotated variant rot_out * M(rot_in * z) used by the samplers; both
/// rotations must be unimodular so the coefficient moduli are unchanged.
TruncatedSeries mobius_rotated(double a, int sign, Cx rot_in, Cx rot_out, int order);

/// Horner evaluation of the truncated polynomial at |z| < 1. Add
/// tail_bound(|z|) for a rigorous enclosure of the underlying function.
Cx eval(const TruncatedSeries& f, Cx z);

/// k-th Hasse derivative f^(k)(z)/k! = sum_{n>=k} C(n,k) a_n z^(n-k) over the
/// retained terms. Requires 0 <= k <= order and |z| < 1.
Cx eval_derivative(const TruncatedSeries& f, int k, Cx z);

/// Series of f(z^m): coefficient a_n moves to index m*n. The tail envelope is
/// composed so that the new tail_bound(r) equals the original tail_bound(r^m).
TruncatedSeries compose_power(const TruncatedSeries& f, int m);

struct MajorantSum {
  double value = 0.0;             // sum_{n=from}^{order} |a_n| r^n
  std::optional<double> upper;    // value + tail bound, when available
};

/// Coefficient-modulus sum sum_{n >= from_index} |a_n| r^n for r in [0,1).
MajorantSum majorant_sum(const TruncatedSeries& f, double r, int from_index);

/// (1 - f_abs^2) / ((1-r)^k (1+r)): the sharp bound on |f^(k)(z)|/k! for
/// f bounded by 1 on the disk, |z| = r, k >= 1. At k = 1 this is the
/// familiar (1 - |f|^2)/(1 - r^2).
double schwarz_pick_bounds(double f_abs, double r, int k);

/// Cauchy product truncated at `order`; tag and tails are dropped (attach
/// an envelope with with_tail if one is known for the product).
TruncatedSeries multiply_truncated(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                                   int order);

}  // namespace bohr
