#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bohr {

/// The five radius families. cap_phi / cap_lambda are the capital-letter
/// equations of the derivative-weighted and harmonic variants; lambda and
/// cap_lambda additionally carry the dilatation constant k in [0,1].
enum class FamilyKind { phi, psi, cap_phi, lambda, cap_lambda };

std::string family_name(FamilyKind kind);
std::optional<FamilyKind> parse_family(std::string_view name);
bool family_uses_k(FamilyKind kind);

struct RadiusFamily {
  FamilyKind kind = FamilyKind::phi;
  int m = 1;
  double k = 1.0;  // read only for lambda / cap_lambda

  static RadiusFamily phi(int m) { return {FamilyKind::phi, m, 1.0}; }
  static RadiusFamily psi(int m) { return {FamilyKind::psi, m, 1.0}; }
  static RadiusFamily cap_phi(int m) { return {FamilyKind::cap_phi, m, 1.0}; }
  static RadiusFamily lambda(int m, double k) { return {FamilyKind::lambda, m, k}; }
  static RadiusFamily cap_lambda(int m, double k) { return {FamilyKind::cap_lambda, m, k}; }
};

/// Throws std::invalid_argument unless m >= 1 and (where used) k in [0,1].
void validate_family(const RadiusFamily& family);

enum class RootSelection { maximal, minimal };
std::string selection_name(RootSelection sel);

/// A certified radius: the selected root together with its sign-changing
/// bracket, the residual at the midpoint, and every root found in (0,1).
struct RootCertificate {
  RadiusFamily family;
  double value = 0.0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  double residual = 0.0;
  std::vector<double> all_roots;
  RootSelection selection = RootSelection::maximal;
};

/// Value of the family's defining equation at r in [0,1):
///   phi:        (1-r)(r^2m + 2r^m - 1) + 2r^2 (1+r^m)^2
///   psi:        2r^2 - (1-r^2m)(1 - r^m - r)
///   cap_phi:    3r - 1 + r^m [2r^2 (r^m+2) + r^m (1-r)]
///   lambda:     2r(1+k)(1+r^m) - (1-r)(1-r^m)
///   cap_lambda: (1-r)(r^2m + 2r^m - 1) + 2r(r+k)(1+r^m)^2
/// All five equal exactly -1 at r = 0 and are positive as r -> 1.
double equation_value(const RadiusFamily& family, double r);

/// Scans (0,1) in steps of 1e-3 for sign changes and bisects each bracket to
/// width 1e-13. Selection rule: minimal root for psi, maximal for the other
/// four; in practice each equation has exactly one root in (0,1). Throws
/// std::runtime_error if no sign change is found or a certificate invariant
/// fails (either signals an implementation bug).
RootCertificate compute_radius(const RadiusFamily& family);

/// Closed-form m -> infinity limits: 1/2 for phi and psi, 1/3 for cap_phi,
/// 2/(4k+6) for lambda, and (sqrt((2k+1)^2+8) - (2k+1))/4 for cap_lambda
/// (the positive root of 2x(x+k) + x - 1 = 0).
double limit_radius(FamilyKind kind, double k = 1.0);

struct ClassicalConstants {
  double bohr;        // 1/3
  double rogosinski;  // 1/2
};
ClassicalConstants classical_constants();

/// Diagnostic: the unique root of 2r - (1 - r^2m) = 0 in (0,1). The cap_phi
/// radius always lies strictly below it.
double auxiliary_bound_root(int m);

}  // namespace bohr
