#include "bohr/radii.hpp"

#include <cmath>
#include <stdexcept>

#include "bohr/series.hpp"

namespace bohr {

namespace {

constexpr double kScanStep = 1e-3;
constexpr double kBracketWidth = 1e-13;
constexpr double kResidualLimit = 1e-11;
constexpr double kScanTop = 1.0 - 1e-12;

struct Bracket {
  double lo, hi;
};

// Bisect a sign-changing bracket down to kBracketWidth.
template <typename F>
Bracket bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  while (hi - lo > kBracketWidth) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // binary64 resolution exhausted
    double fmid = f(mid);
    if (fmid == 0.0) {
      mid = std::nextafter(mid, hi);
      fmid = f(mid);
      if (fmid == 0.0) break;
    }
    if ((flo < 0.0) == (fmid < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

template <typename F>
std::vector<Bracket> isolate_roots(F&& f, const char* what) {
  std::vector<Bracket> brackets;
  double lo = 0.0;
  double flo = f(lo);
  for (int j = 1; j <= 1000; ++j) {
    double hi = std::min(j * kScanStep, kScanTop);
    double fhi = f(hi);
    if (fhi == 0.0) {  // nudge off an exact grid hit
      hi = std::nextafter(hi, 1.0);
      fhi = f(hi);
    }
    if ((flo < 0.0) != (fhi < 0.0)) brackets.push_back({lo, hi});
    lo = hi;
    flo = fhi;
    if (hi >= kScanTop) break;
  }
  if (brackets.empty())
    throw std::runtime_error(std::string("no sign change in (0,1) for ") + what +
                             "; this signals an implementation bug");
  return brackets;
}

}  // namespace

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::phi: return "phi";
    case FamilyKind::psi: return "psi";
    case FamilyKind::cap_phi: return "Phi";
    case FamilyKind::lambda: return "lambda";
    case FamilyKind::cap_lambda: return "Lambda";
  }
  throw std::invalid_argument("family_name: unknown kind");
}

std::optional<FamilyKind> parse_family(std::string_view name) {
  if (name == "phi") return FamilyKind::phi;
  if (name == "psi") return FamilyKind::psi;
  if (name == "Phi" || name == "PhiCap") return FamilyKind::cap_phi;
  if (name == "lambda") return FamilyKind::lambda;
  if (name == "Lambda" || name == "LambdaCap") return FamilyKind::cap_lambda;
  return std::nullopt;
}

bool family_uses_k(FamilyKind kind) {
  return kind == FamilyKind::lambda || kind == FamilyKind::cap_lambda;
}

void validate_family(const RadiusFamily& family) {
  if (family.m < 1) throw std::invalid_argument("radius family: m must be >= 1");
  if (family_uses_k(family.kind) && !(family.k >= 0.0 && family.k <= 1.0))
    throw std::invalid_argument("radius family: k must be in [0,1]");
}

std::string selection_name(RootSelection sel) {
  return sel == RootSelection::maximal ? "maximal" : "minimal";
}

double equation_value(const RadiusFamily& family, double r) {
  validate_family(family);
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("equation_value: r must be in [0,1)");
  const double t = pow_int(r, family.m);
  switch (family.kind) {
    case FamilyKind::phi:
      return (1.0 - r) * ((t + 2.0) * t - 1.0) + 2.0 * r * r * (1.0 + t) * (1.0 + t);
    case FamilyKind::psi:
      return 2.0 * r * r - (1.0 - t * t) * (1.0 - t - r);
    case FamilyKind::cap_phi:
      return 3.0 * r - 1.0 + t * (2.0 * r * r * (t + 2.0) + t * (1.0 - r));
    case FamilyKind::lambda:
      return 2.0 * r * (1.0 + family.k) * (1.0 + t) - (1.0 - r) * (1.0 - t);
    case FamilyKind::cap_lambda:
      return (1.0 - r) * ((t + 2.0) * t - 1.0) +
             2.0 * r * (r + family.k) * (1.0 + t) * (1.0 + t);
  }
  throw std::invalid_argument("equation_value: unknown kind");
}

RootCertificate compute_radius(const RadiusFamily& family) {
  validate_family(family);
  auto f = [&family](double r) { return equation_value(family, r); };

  RootCertificate cert;
  cert.family = family;
  cert.selection =
      family.kind == FamilyKind::psi ? RootSelection::minimal : RootSelection::maximal;

  std::vector<Bracket> refined;
  for (const Bracket& b : isolate_roots(f, family_name(family.kind).c_str())) {
    Bracket fine = bisect(f, b.lo, b.hi);
    const double root = 0.5 * (fine.lo + fine.hi);
    // Certify each root before accepting it.
    if ((f(fine.lo) < 0.0) == (f(fine.hi) < 0.0))
      throw std::runtime_error("compute_radius: bracket lost its sign change");
    if (!(fine.hi - fine.lo <= kBracketWidth))
      throw std::runtime_error("compute_radius: bracket did not converge");
    if (!(std::abs(f(root)) <= kResidualLimit))
      throw std::runtime_error("compute_radius: residual exceeds certificate limit");
    cert.all_roots.push_back(root);
    refined.push_back(fine);
  }

  const std::size_t pick =
      cert.selection == RootSelection::minimal ? 0 : cert.all_roots.size() - 1;
  cert.value = cert.all_roots[pick];
  cert.bracket_lo = refined[pick].lo;
  cert.bracket_hi = refined[pick].hi;
  cert.residual = f(cert.value);
  return cert;
}

double limit_radius(FamilyKind kind, double k) {
  if (family_uses_k(kind) && !(k >= 0.0 && k <= 1.0))
    throw std::invalid_argument("limit_radius: k must be in [0,1]");
  switch (kind) {
    case FamilyKind::phi:
    case FamilyKind::psi:
      return 0.5;
    case FamilyKind::cap_phi:
      return 1.0 / 3.0;
    case FamilyKind::lambda:
      return 2.0 / (4.0 * k + 6.0);
    case FamilyKind::cap_lambda: {
      const double b = 2.0 * k + 1.0;
      return 0.25 * (std::sqrt(b * b + 8.0) - b);
    }
  }
  throw std::invalid_argument("limit_radius: unknown kind");
}

ClassicalConstants classical_constants() { return {1.0 / 3.0, 0.5}; }

double auxiliary_bound_root(int m) {
  if (m < 1) throw std::invalid_argument("auxiliary_bound_root: m must be >= 1");
  auto f = [m](double r) { return 2.0 * r - (1.0 - pow_int(r, 2 * m)); };
  // f(0) = -1, f(1-) > 0 and f is strictly increasing: single bracket.
  Bracket fine = bisect(f, 0.0, kScanTop);
  return 0.5 * (fine.lo + fine.hi);
}

}  // namespace bohr
