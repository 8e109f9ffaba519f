#include <cmath>
#include <stdexcept>

#include "bohr/harness.hpp"
#include "bohr/series.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bohr;

namespace {

Cx polar(double r, double theta) { return Cx{r * std::cos(theta), r * std::sin(theta)}; }

}  // namespace

TEST_CASE("mobius coefficients match the long-division oracle") {
  // frozen small cases first
  auto id = mobius_coeffs(0.0, +1, 3);
  CHECK(id.coeff(0) == Cx{0.0, 0.0});
  CHECK(id.coeff(1) == Cx{1.0, 0.0});
  CHECK(id.coeff(2) == Cx{0.0, 0.0});
  CHECK(id.coeff(3) == Cx{0.0, 0.0});

  auto f = mobius_coeffs(0.5, +1, 3);
  CHECK(f.coeff(0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(f.coeff(1).real() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(f.coeff(2).real() == doctest::Approx(-0.375).epsilon(1e-15));
  CHECK(f.coeff(3).real() == doctest::Approx(0.1875).epsilon(1e-15));

  auto g = mobius_coeffs(0.5, -1, 2);
  CHECK(g.coeff(0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(g.coeff(1).real() == doctest::Approx(-0.75).epsilon(1e-15));
  CHECK(g.coeff(2).real() == doctest::Approx(-0.375).epsilon(1e-15));

  for (double a : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    for (int sign : {+1, -1}) {
      const auto oracle = oracles::mobius_longdiv(a, sign, 64);
      const auto series = mobius_coeffs(a, sign, 64);
      for (int n = 0; n <= 64; ++n) {
        CHECK(series.coeff(n).real() ==
              doctest::Approx(oracle[static_cast<std::size_t>(n)]).epsilon(1e-13));
        CHECK(series.coeff(n).imag() == 0.0);
      }
    }
  }
}

TEST_CASE("mobius coefficient law |a_n| = (1-a^2) a^(n-1)") {
  for (double a : {0.0, 0.3, 0.7, 0.99}) {
    const auto f = mobius_coeffs(a, +1, 64);
    double expect = 1.0 - a * a;
    for (int n = 1; n <= 64; ++n) {
      CHECK(std::abs(f.coeff(n)) == doctest::Approx(expect).epsilon(1e-14));
      expect *= a;
    }
  }
}

TEST_CASE("mobius rejects bad arguments") {
  CHECK_THROWS_AS(mobius_coeffs(-0.1, +1, 4), std::invalid_argument);
  CHECK_THROWS_AS(mobius_coeffs(1.0, +1, 4), std::invalid_argument);
  CHECK_THROWS_AS(mobius_coeffs(0.5, +1, 0), std::invalid_argument);
  CHECK_THROWS_AS(mobius_coeffs(0.5, 2, 4), std::invalid_argument);
}

TEST_CASE("series construction rejects non-finite coefficients") {
  CHECK_THROWS_AS(TruncatedSeries({Cx{std::nan(""), 0.0}}), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries({Cx{0.0, INFINITY}}), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedSeries(std::vector<Cx>{}), std::invalid_argument);
}

TEST_CASE("eval agrees with the closed Mobius form") {
  const auto f = mobius_coeffs(0.5, +1, 64);
  CHECK(eval(f, Cx{0.0, 0.0}).real() == 0.5);
  // (0.5+0.2)/(1+0.1); geometric truncation error below 1e-12
  CHECK(std::abs(eval(f, Cx{0.2, 0.0}) - Cx{0.7 / 1.1, 0.0}) < 1e-12);

  CHECK_THROWS_AS(eval(f, Cx{1.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(eval(f, Cx{0.8, 0.7}), std::invalid_argument);
}

TEST_CASE("eval_derivative: frozen values and consistency") {
  const auto f = mobius_coeffs(0.5, +1, 64);
  CHECK(eval_derivative(f, 1, Cx{0.0, 0.0}).real() == doctest::Approx(0.75).epsilon(1e-15));
  for (double a : {0.3, 0.5, 0.7}) {
    const auto g = mobius_coeffs(a, +1, 64);
    CHECK(eval_derivative(g, 2, Cx{0.0, 0.0}).real() ==
          doctest::Approx(-a * (1.0 - a * a)).epsilon(1e-14));
  }

  SUBCASE("k = 0 is eval") {
    const Cx z{0.31, -0.4};
    CHECK(eval_derivative(f, 0, z) == eval(f, z));
  }

  SUBCASE("central finite difference at step 1e-6") {
    SampleSpec spec{SampleKind::mobius, 10, 7, 64};
    for (int i = 0; i < spec.count; ++i) {
      const auto g = sample_bounded_function(spec, static_cast<std::uint64_t>(i));
      for (double th : {0.0, 1.1, 2.9, 4.4}) {
        const Cx z = polar(0.55, th);
        const Cx fd = oracles::central_diff([&g](Cx w) { return eval(g, w); }, z);
        const Cx hd = eval_derivative(g, 1, z);
        CHECK(std::abs(fd - hd) <= 1e-6 * (1.0 + std::abs(hd)));
      }
    }
  }

  CHECK_THROWS_AS(eval_derivative(f, 65, Cx{0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(eval_derivative(f, -1, Cx{0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(eval_derivative(f, 1, Cx{1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("compose_power dilates indices and tails") {
  const TruncatedSeries ident({Cx{0.0, 0.0}, Cx{1.0, 0.0}});
  const auto cubed = compose_power(ident, 3);
  CHECK(cubed.order() == 3);
  CHECK(cubed.coeff(3) == Cx{1.0, 0.0});
  CHECK(cubed.coeff(1) == Cx{0.0, 0.0});

  const auto f = mobius_coeffs(0.5, +1, 2);
  const auto f2 = compose_power(f, 2);
  CHECK(f2.order() == 4);
  CHECK(f2.coeff(0).real() == doctest::Approx(0.5));
  CHECK(f2.coeff(1) == Cx{0.0, 0.0});
  CHECK(f2.coeff(2).real() == doctest::Approx(0.75));
  CHECK(f2.coeff(3) == Cx{0.0, 0.0});
  CHECK(f2.coeff(4).real() == doctest::Approx(-0.375));

  SUBCASE("m = 1 leaves the series unchanged") {
    const auto same = compose_power(f, 1);
    CHECK(same.order() == f.order());
    for (int n = 0; n <= f.order(); ++n) CHECK(same.coeff(n) == f.coeff(n));
  }

  SUBCASE("eval(compose_power(f,m), z) = eval(f, z^m)") {
    const auto g = mobius_coeffs(0.7, +1, 48);
    for (int m : {2, 3, 5}) {
      const auto gm = compose_power(g, m);
      const double rmax = std::pow(0.9, 1.0 / m);
      for (double th : {0.3, 1.7, 3.9}) {
        const Cx z = polar(0.99 * rmax, th);
        CHECK(std::abs(eval(gm, z) - eval(g, pow_int(z, m))) < 1e-12);
      }
    }
  }

  SUBCASE("tail bound of the composition equals the original at r^m") {
    const auto g = mobius_coeffs(0.6, +1, 32);
    const auto g3 = compose_power(g, 3);
    for (double r : {0.1, 0.5, 0.9}) {
      CHECK(*g3.tail_bound(r) == doctest::Approx(*g.tail_bound(pow_int(r, 3))).epsilon(1e-15));
    }
  }

  CHECK_THROWS_AS(compose_power(f, 0), std::invalid_argument);
}

TEST_CASE("majorant_sum: frozen values and closed form") {
  const auto f = mobius_coeffs(0.5, +1, 256);
  // (1-a^2) a r^2 / (1-ar) at a=0.5, r=0.2
  CHECK(majorant_sum(f, 0.2, 2).value == doctest::Approx(0.75 * 0.5 * 0.04 / 0.9).epsilon(1e-12));
  CHECK(majorant_sum(f, 0.0, 1).value == 0.0);
  CHECK(majorant_sum(f, 0.0, 5).value == 0.0);

  const TruncatedSeries one({Cx{1.0, 0.0}});
  CHECK(majorant_sum(one, 0.3, 0).value == 1.0);

  SUBCASE("closed-form equivalence on a grid") {
    for (double a = 0.1; a < 0.95; a += 0.1) {
      const auto g = mobius_coeffs(a, +1, 256);
      for (double r = 0.1; r < 0.95; r += 0.1) {
        const double closed = (1.0 - a * a) * r / (1.0 - a * r);
        const double tol = *g.tail_bound(r) + 1e-12;
        CHECK(std::abs(majorant_sum(g, r, 1).value - closed) <= tol);
      }
    }
  }

  SUBCASE("upper enclosure contains the full series value") {
    const auto g = mobius_coeffs(0.9, +1, 16);  // short truncation, visible tail
    const double closed = (1.0 - 0.81) * 0.8 / (1.0 - 0.72);
    const auto sum = majorant_sum(g, 0.8, 1);
    CHECK(sum.value < closed);
    CHECK(*sum.upper >= closed);
  }

  CHECK_THROWS_AS(majorant_sum(f, 1.0, 0), std::invalid_argument);
  CHECK_THROWS_AS(majorant_sum(f, -0.1, 0), std::invalid_argument);
}

TEST_CASE("schwarz_pick_bounds") {
  for (double a : {0.0, 0.4, 0.9}) {
    CHECK(schwarz_pick_bounds(a, 0.0, 1) == doctest::Approx(1.0 - a * a).epsilon(1e-15));
  }
  for (double r : {0.0, 0.3, 0.8}) {
    for (double fa : {0.0, 0.5, 0.99}) {
      CHECK(schwarz_pick_bounds(fa, r, 1) ==
            doctest::Approx((1.0 - fa * fa) / (1.0 - r * r)).epsilon(1e-14));
    }
    CHECK(schwarz_pick_bounds(1.0, r, 3) == 0.0);
  }
  CHECK_THROWS_AS(schwarz_pick_bounds(1.1, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(schwarz_pick_bounds(0.5, 1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(schwarz_pick_bounds(0.5, 0.5, 0), std::invalid_argument);
}

TEST_CASE("sampled Schwarz-Pick validity across the harness families") {
  // |f^(k)(z)|/k! <= (1-|f(z)|^2) / ((1-r)^k (1+r)) for 500+ sampled f,
  // k <= 5, |z| <= 0.8.
  const SampleKind kinds[] = {SampleKind::mobius, SampleKind::finite_blaschke_combo,
                              SampleKind::scaled_polynomial};
  int checked = 0;
  for (SampleKind kind : kinds) {
    SampleSpec spec{kind, 167, 11, 256};
    for (int i = 0; i < spec.count; ++i) {
      const auto f = sample_bounded_function(spec, static_cast<std::uint64_t>(i));
      for (double rad : {0.4, 0.8}) {
        for (double th : {0.0, 2.1, 4.2}) {
          const Cx z = polar(rad, th);
          const double fa = std::min(std::abs(eval(f, z)), 1.0);
          for (int k = 1; k <= std::min(5, f.order()); ++k) {
            const double lhs = std::abs(eval_derivative(f, k, z));
            CHECK(lhs <= schwarz_pick_bounds(fa, rad, k) + 1e-9);
          }
        }
      }
      ++checked;
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("tail bounds are monotone and vanish at r = 0") {
  const auto f = mobius_coeffs(0.8, +1, 32);
  CHECK(*f.tail_bound(0.0) == 0.0);
  double prev = 0.0;
  for (double r = 0.05; r < 1.0; r += 0.05) {
    const double b = *f.tail_bound(r);
    CHECK(b >= prev);
    prev = b;
  }

  const TruncatedSeries raw({Cx{0.1, 0.0}, Cx{0.2, 0.0}});
  CHECK(!raw.tail_bound(0.5).has_value());
  const auto with = raw.with_tail(TailEnvelope{1.0, 0.5, 1, 1});
  CHECK(with.tail_bound(0.5).has_value());
}

TEST_CASE("binomial recurrence") {
  CHECK(binomial(0, 0) == 1.0);
  CHECK(binomial(10, 3) == 120.0);
  CHECK(binomial(6, 6) == 1.0);
  // C(64,32) exceeds 2^53; compare relatively
  CHECK(binomial(64, 32) == doctest::Approx(1.832624140942590534e18).epsilon(1e-12));
  CHECK(std::isfinite(binomial(1024, 512)));
  CHECK_THROWS_AS(binomial(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(binomial(1025, 2), std::invalid_argument);
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("multiply_truncated is the Cauchy product") {
  const TruncatedSeries p({Cx{1.0, 0.0}, Cx{2.0, 0.0}});  // 1 + 2z
  const TruncatedSeries q({Cx{3.0, 0.0}, Cx{0.0, 1.0}});  // 3 + iz
  const auto pq = multiply_truncated(p, q, 2);
  CHECK(pq.coeff(0) == Cx{3.0, 0.0});
  CHECK(pq.coeff(1) == Cx{6.0, 1.0});
  CHECK(pq.coeff(2) == Cx{0.0, 2.0});
}
