#include <cmath>
#include <stdexcept>

#include "bohr/harness.hpp"
#include "doctest.h"

using namespace bohr;

TEST_CASE("sampling is deterministic per (seed, index)") {
  SampleSpec spec{SampleKind::mobius, 10, 99, 128};
  for (int i = 0; i < spec.count; ++i) {
    const auto f1 = sample_bounded_function(spec, static_cast<std::uint64_t>(i));
    const auto f2 = sample_bounded_function(spec, static_cast<std::uint64_t>(i));
    REQUIRE(f1.order() == f2.order());
    for (int n = 0; n <= f1.order(); ++n) CHECK(f1.coeff(n) == f2.coeff(n));
  }
  // different indices give different samples
  const auto a = sample_bounded_function(spec, 0);
  const auto b = sample_bounded_function(spec, 1);
  CHECK(a.coeff(0) != b.coeff(0));
}

TEST_CASE("a = 0 mobius draw degenerates to a rotation of z") {
  // construct directly: a = 0 must give f(z) = omega z with |omega| = 1
  const auto f = mobius_rotated(0.0, +1, Cx{0.0, 1.0}, Cx{-1.0, 0.0}, 16);
  CHECK(f.coeff(0) == Cx{0.0, 0.0});
  CHECK(std::abs(std::abs(f.coeff(1)) - 1.0) < 1e-15);
  for (int n = 2; n <= 16; ++n) CHECK(f.coeff(n) == Cx{0.0, 0.0});
}

TEST_CASE("every sample kind passes the boundary admissibility audit") {
  for (SampleKind kind :
       {SampleKind::mobius, SampleKind::finite_blaschke_combo, SampleKind::scaled_polynomial}) {
    SampleSpec spec{kind, 120, 5, 256};
    int pass = 0;
    for (int i = 0; i < spec.count; ++i) {
      const auto f = sample_bounded_function(spec, static_cast<std::uint64_t>(i));
      if (admissible(f)) ++pass;
    }
    CHECK(pass == spec.count);
  }
}

TEST_CASE("harmonic samples satisfy the quasi-subordination consequence") {
  // sum |b_n| r^n <= k sum |a_n| r^n + 1e-9 for r <= 1/3
  SampleSpec spec{SampleKind::mobius, 60, 77, 256};
  for (double k : {0.4, 1.0}) {
    for (int i = 0; i < spec.count; ++i) {
      const HarmonicPair pair = sample_harmonic_pair(spec, static_cast<std::uint64_t>(i), k);
      CHECK(pair.g.coeff(0) == Cx{0.0, 0.0});
      for (double r : {0.1, 0.25, 1.0 / 3.0}) {
        const double bs = majorant_sum(pair.g, r, 1).value;
        const double as = majorant_sum(pair.h, r, 1).value;
        CHECK(bs <= k * as + 1e-9);
      }
    }
  }
}

TEST_CASE("verify_family: below the radius, no violations (all kinds)") {
  SUBCASE("phi(1), 200 mobius samples") {
    SampleSpec spec{SampleKind::mobius, 200, 42, 256};
    const auto rep = verify_family(RadiusFamily::phi(1), spec, 0.999);
    CHECK(rep.trials == 200);
    CHECK(rep.violations.empty());
    CHECK(rep.audit_failures.empty());
    CHECK(rep.max_value <= 1.0 + rep.tolerance);
    CHECK(rep.max_value > 0.5);  // near-extremal draws push close to 1
  }
  SUBCASE("psi(2), blaschke samples through the generic derivative route") {
    SampleSpec spec{SampleKind::finite_blaschke_combo, 60, 42, 256};
    const auto rep = verify_family(RadiusFamily::psi(2), spec, 0.999);
    CHECK(rep.trials == 60);
    CHECK(rep.violations.empty());
  }
  SUBCASE("Phi(3), scaled polynomials") {
    SampleSpec spec{SampleKind::scaled_polynomial, 100, 42, 256};
    const auto rep = verify_family(RadiusFamily::cap_phi(3), spec, 0.999);
    CHECK(rep.trials == 100);
    CHECK(rep.violations.empty());
  }
  SUBCASE("lambda(1,1) and Lambda(2,1) harmonic sweeps") {
    SampleSpec spec{SampleKind::mobius, 100, 42, 256};
    CHECK(verify_family(RadiusFamily::lambda(1, 1.0), spec, 0.999).violations.empty());
    CHECK(verify_family(RadiusFamily::cap_lambda(2, 1.0), spec, 0.999).violations.empty());
  }
  SUBCASE("as r -> 0 the worst value collapses to max |a_0| < 1") {
    SampleSpec spec{SampleKind::mobius, 30, 42, 64};
    const auto rep = verify_family(RadiusFamily::phi(1), spec, 1e-6);
    CHECK(rep.max_value < 1.0);
    CHECK(rep.violations.empty());
  }
}

TEST_CASE("verify_family: past the radius the extremal draws violate") {
  SampleSpec spec{SampleKind::mobius, 200, 42, 256};
  const auto rep = verify_family(RadiusFamily::phi(2), spec, 1.2);
  CHECK(!rep.violations.empty());
  CHECK(rep.max_value > 1.0 + rep.tolerance);
  // the violation list is consistent with max_value
  double worst = 0.0;
  for (const auto& v : rep.violations) worst = std::max(worst, v.value);
  CHECK(worst == rep.max_value);
}

TEST_CASE("verify_family reports are reproducible") {
  SampleSpec spec{SampleKind::finite_blaschke_combo, 40, 4242, 128};
  const auto r1 = verify_family(RadiusFamily::phi(1), spec, 0.999);
  const auto r2 = verify_family(RadiusFamily::phi(1), spec, 0.999);
  CHECK(r1.max_value == r2.max_value);
  CHECK(r1.trials == r2.trials);
  CHECK(r1.violations.size() == r2.violations.size());
  CHECK(r1.radius_used == r2.radius_used);
}

TEST_CASE("verify_family argument checks") {
  SampleSpec spec{SampleKind::mobius, 5, 1, 64};
  CHECK_THROWS_AS(verify_family(RadiusFamily::phi(1), spec, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(verify_family(RadiusFamily::phi(1), spec, 4.0), std::invalid_argument);
}

TEST_CASE("rogosinski sweep: zero violations at modest trial counts") {
  SampleSpec spec{SampleKind::mobius, 150, 42, 256};
  const auto rep = verify_rogosinski(spec, 10);
  CHECK(rep.trials == 150);
  CHECK(rep.violations.empty());
  CHECK(rep.max_value <= 1.0 + rep.tolerance);
  CHECK(rep.radius_used == 0.5);
}

TEST_CASE("probe_sharpness pinches each family from above") {
  SUBCASE("phi(1): ladder becomes conclusive as a -> 1") {
    const auto rep = probe_sharpness(RadiusFamily::phi(1), default_a_ladder(), 1.05);
    CHECK(rep.conclusive);
    CHECK(rep.rows.size() == 4);
    CHECK(rep.rows.back().value > 1.0);
    CHECK(rep.rows.back().gap > 0.0);
  }
  SUBCASE("below the radius every row stays at or under 1") {
    const auto rep = probe_sharpness(RadiusFamily::phi(1), default_a_ladder(), 0.5);
    CHECK(!rep.conclusive);
    for (const auto& row : rep.rows) CHECK(row.value <= 1.0);
  }
  SUBCASE("psi regime restriction r < a^(1/m) is reported per row") {
    // radius(psi,1) = 0.3554; at multiplier 1.05, r = 0.373 > a for a = 0.2
    const auto rep = probe_sharpness(RadiusFamily::psi(1), {0.2, 0.9999}, 1.05);
    CHECK(!rep.rows[0].regime_ok);
    CHECK(std::isnan(rep.rows[0].value));
    CHECK(rep.rows[1].regime_ok);
    CHECK(rep.rows[1].value > 1.0);
    CHECK(rep.conclusive);
  }
  SUBCASE("harmonic families default lambda to k") {
    const auto rep = probe_sharpness(RadiusFamily::cap_lambda(1, 1.0), {0.9999}, 1.02);
    CHECK(rep.lambda == 1.0);
    CHECK(rep.conclusive);
    const auto rep2 = probe_sharpness(RadiusFamily::lambda(1, 1.0), {0.9999}, 1.05);
    CHECK(rep2.conclusive);
  }
  SUBCASE("a = 0 rows are diagnostics only; the a -> 1 branch decides") {
    const auto rep = probe_sharpness(RadiusFamily::phi(1), {0.0, 0.9999}, 1.05);
    CHECK(rep.rows[0].value <= 1.0);  // 2 r^m at a = 0
    CHECK(rep.rows[0].value == doctest::Approx(2.0 * rep.r).epsilon(1e-14));
    CHECK(rep.rows[1].value > 1.0);
    CHECK(rep.conclusive);
  }
  CHECK_THROWS_AS(probe_sharpness(RadiusFamily::phi(1), {}, 1.05), std::invalid_argument);
  CHECK_THROWS_AS(probe_sharpness(RadiusFamily::phi(1), {0.9}, 4.0), std::invalid_argument);
  CHECK_THROWS_AS(probe_sharpness(RadiusFamily::phi(1), {1.0}, 1.05), std::invalid_argument);
}

TEST_CASE("soundness coupling: radius pinched from both sides (spot check)") {
  SampleSpec spec{SampleKind::mobius, 120, 42, 256};
  for (const RadiusFamily fam : {RadiusFamily::phi(2), RadiusFamily::cap_lambda(3, 1.0)}) {
    const double mult = fam.kind == FamilyKind::cap_lambda ? 1.02 : 1.05;
    CHECK(verify_family(fam, spec, 0.999).violations.empty());
    CHECK(probe_sharpness(fam, {1.0 - 1e-4}, mult).conclusive);
  }
}

TEST_CASE("sample kind names round-trip") {
  for (SampleKind kind :
       {SampleKind::mobius, SampleKind::finite_blaschke_combo, SampleKind::scaled_polynomial}) {
    CHECK(parse_sample_kind(sample_kind_name(kind)) == kind);
  }
  CHECK(parse_sample_kind("poly") == SampleKind::scaled_polynomial);
  CHECK(!parse_sample_kind("gaussian").has_value());
}
