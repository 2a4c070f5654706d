// Copyright 2026 The conformal_bm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <complex>

#include <gtest/gtest.h>

#include "cbm/error.hpp"
#include "cbm/maps.hpp"
#include "cbm/oracles.hpp"
#include "cbm/series.hpp"

namespace cbm {
namespace {

constexpr double kPi2Over8 = kPi * kPi / 8.0;
constexpr double kPi2Over16 = kPi * kPi / 16.0;

TEST(TruncationPolicy, ResolvesSmallestAdequateN) {
  const auto bound = [](std::size_t n) { return 1.0 / static_cast<double>(n); };
  EXPECT_EQ(TruncationPolicy::TailBound(1e-3).resolve(bound), 1000u);
  EXPECT_EQ(TruncationPolicy::TailBound(0.3).resolve(bound), 4u);
  EXPECT_EQ(TruncationPolicy::TailBound(2.0).resolve(bound), 1u);
  EXPECT_EQ(TruncationPolicy::FixedN(17).resolve(bound), 17u);
  EXPECT_THROW(TruncationPolicy::FixedN(0), DomainError);
  EXPECT_THROW(TruncationPolicy::TailBound(0.0), DomainError);
  EXPECT_THROW(TruncationPolicy::TailBound(1e-9, 1000).resolve(bound), DomainError);
}

TEST(ExitTimeFromCoeffs, Examples) {
  EXPECT_DOUBLE_EQ(exit_time_from_coeffs({{0.0, 1.0}, ""}), 0.5);
  EXPECT_DOUBLE_EQ(exit_time_from_coeffs({{0.0, 2.0}, ""}), 2.0);
  // a_0 does not contribute.
  EXPECT_DOUBLE_EQ(exit_time_from_coeffs({{5.0, 1.0}, ""}), 0.5);
  EXPECT_THROW(exit_time_from_coeffs({{}, ""}), DomainError);
  EXPECT_THROW(exit_time_from_coeffs({{0.0, std::complex<double>(NAN, 0.0)}, ""}), DomainError);
}

TEST(ExitTimeFromCoeffs, ArctanSeriesIncreasesToLimit) {
  double previous = 0.0;
  for (std::size_t n : {1u, 3u, 11u, 101u, 1001u, 100001u}) {
    const double v = exit_time_from_coeffs(arctan_coeffs(n));
    EXPECT_GE(v, previous);
    EXPECT_LT(v, kPi2Over16);
    const std::size_t odd_terms = (n + 1) / 2;
    EXPECT_LE(kPi2Over16 - v, 0.5 * odd_square_tail_bound(odd_terms) + 1e-15);
    EXPECT_NEAR(v, 0.5 * odd_square_sum(odd_terms), 1e-15);
    previous = v;
  }
}

TEST(ArctanCoeff, Examples) {
  EXPECT_EQ(arctan_coeff(1), 1.0);
  EXPECT_EQ(arctan_coeff(2), 0.0);
  EXPECT_DOUBLE_EQ(arctan_coeff(3), -1.0 / 3.0);
  EXPECT_DOUBLE_EQ(arctan_coeff(5), 0.2);
  EXPECT_THROW(arctan_coeff(0), DomainError);
  const PowerSeriesCoeffs c = arctan_coeffs(7);
  ASSERT_EQ(c.coeffs.size(), 8u);
  EXPECT_EQ(c.coeffs[0], 0.0);
  EXPECT_DOUBLE_EQ(c.coeffs[7].real(), -1.0 / 7.0);
}

TEST(CoeffExtract, Examples) {
  const auto id = ConformalMap::Scale(1.0);
  EXPECT_NEAR(std::abs(coeff_extract(id, 1, 0.5, 64) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(coeff_extract(id, 2, 0.5, 64)), 0.0, 1e-12);
  const auto at = ConformalMap::ArcTan();
  EXPECT_NEAR(std::abs(coeff_extract(at, 3, 0.9, 256) + 1.0 / 3.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(coeff_extract(at, 2, 0.9, 256)), 0.0, 1e-12);
  EXPECT_THROW(coeff_extract(at, 3, 1.0, 256), DomainError);
  EXPECT_THROW(coeff_extract(at, 3, 0.5, 11), DomainError);
}

TEST(CoeffExtract, BatchMatchesSingle) {
  const auto m = ConformalMap::DiskAutomorphism(ComplexPoint(0.2, 0.3));
  const PowerSeriesCoeffs all = coeffs_extract(m, 20, 0.8, 512);
  for (std::size_t n = 0; n <= 20; ++n) {
    EXPECT_NEAR(std::abs(all.coeffs[n] - coeff_extract(m, n, 0.8, 512)), 0.0, 1e-13) << n;
  }
  // Automorphisms of the disk keep the exit time from a at (1 - |a|^2)/2 after
  // the shift; from 0 the image starts at -a.
  const double a2 = 0.2 * 0.2 + 0.3 * 0.3;
  const PowerSeriesCoeffs many = coeffs_extract(m, 200, 0.95, 2048);
  EXPECT_NEAR(exit_time_from_coeffs(many), 0.5 * (1.0 - a2), 1e-10);
}

TEST(CoeffExtract, ArctanExitTimeToDegree201) {
  const PowerSeriesCoeffs ex = coeffs_extract(ConformalMap::ArcTan(), 201, 0.99, 4096);
  EXPECT_NEAR(exit_time_from_coeffs(ex), exit_time_from_coeffs(arctan_coeffs(201)), 1e-8);
}

TEST(OddSquares, Examples) {
  EXPECT_EQ(odd_square_sum(1), 1.0);
  EXPECT_DOUBLE_EQ(odd_square_sum(2), 1.0 + 1.0 / 9.0);
  EXPECT_DOUBLE_EQ(basel_from_odd(kPi2Over8), kBasel);
  const double s = odd_square_sum(1'000'000);
  EXPECT_LE(kPi2Over8 - s, 2.0 / 4e6);
  EXPECT_GE(kPi2Over8 - s, 0.0);
  for (std::size_t n : {1u, 10u, 1000u}) {
    EXPECT_LE(kPi2Over8 - odd_square_sum(n), odd_square_tail_bound(n));
  }
}

TEST(WrappedIdentity, GapShrinksPerBound) {
  EXPECT_LT(wrapped_sum_identity_gap(0.5, kPi, 1000), 1e-3);
  EXPECT_LT(wrapped_sum_identity_gap(0.9, kPi / 2, 10'000), 1e-4);
  EXPECT_LT(wrapped_sum_identity_gap(0.5, kPi, 10'000'000), 1e-8);
}

TEST(CosecIdentity, Examples) {
  EXPECT_NEAR(cosec_identity_lhs(kPi, 0), 1.0 / (kPi * kPi), 1e-17);
  EXPECT_DOUBLE_EQ(cosec_identity_rhs(kPi), 0.25);
  EXPECT_DOUBLE_EQ(cosec_identity_rhs(kPi / 2), 0.5);
  for (double theta : {kPi, kPi / 2, 0.3, -2.0}) {
    for (std::size_t n : {10u, 1000u, 100000u}) {
      const double gap = cosec_identity_rhs(theta) - cosec_identity_lhs(theta, n);
      EXPECT_GE(gap, 0.0);
      EXPECT_LE(gap, cosec_identity_tail_bound(theta, n) + 1e-15);
    }
  }
  EXPECT_THROW(cosec_identity_lhs(0.0, 3), DomainError);
  EXPECT_THROW(cosec_identity_lhs(4.0 * kPi, 3), DomainError);
}

TEST(ThetaLimit, Examples) {
  EXPECT_EQ(theta_limit_value(), 1.0 / 12.0);
  EXPECT_NEAR(cosec_minus_pole(1e-4), 0.083333333375000000017, 1e-16);
  EXPECT_NEAR(cosec_minus_pole(1e-4), 1.0 / 12.0, 1e-9);
  EXPECT_NEAR(cosec_minus_pole(kPi), 0.25 - 1.0 / (kPi * kPi), 1e-16);
  EXPECT_DOUBLE_EQ(cosec_minus_pole(0.0), 1.0 / 12.0);
  // The two branches meet at the switch point.
  EXPECT_NEAR(cosec_minus_pole(0.999999e-3), cosec_minus_pole(1.000001e-3), 1e-9);
  EXPECT_EQ(cosec_minus_pole(-0.3), cosec_minus_pole(0.3));
}

TEST(BaselFromWrapping, Examples) {
  EXPECT_NEAR(wrapped_pole_free_sum(0.0, 1), 2.0 / (4.0 * kPi * kPi), 1e-17);
  EXPECT_LT(wrapped_pole_free_sum(0.0, 1), 1.0 / 12.0);
  const double s = wrapped_pole_free_sum(0.0, 10'000);
  EXPECT_LE(1.0 / 12.0 - s, 2.0 / (4.0 * kPi * kPi * 1e4));
  EXPECT_DOUBLE_EQ(basel_from_wrapping(1), 1.0);
  for (std::size_t n : {1u, 100u, 100000u}) {
    EXPECT_LE(kBasel - basel_from_wrapping(n), basel_from_wrapping_tail_bound(n));
  }
}

TEST(ReflectionSeries, Examples) {
  EXPECT_DOUBLE_EQ(reflection_series(0.0, 1), 1.0 / kPi);
  EXPECT_NEAR(reflection_series(0.0, 2), (1.0 - 1.0 / 3.0) / kPi, 1e-16);
  EXPECT_NEAR(reflection_series(0.5, 2), (1.0 / 0.5 - 1.0 / 3.5) / kPi, 1e-16);
  EXPECT_NEAR(reflection_series(0.0, 10'000'000), 0.25, 1e-7);
  EXPECT_NEAR(reflection_series(0.5, 10'000'000), strip_exit_density_closed(0.5), 1e-7);
  EXPECT_THROW(reflection_series(1.0, 3), DomainError);
}

TEST(ReflectionSeries, ConsecutivePartialSumsBracketTheLimit) {
  for (double a : {-0.9, 0.0, 0.5}) {
    const double limit = strip_exit_density_closed(a);
    double previous = reflection_series(a, 1);
    for (std::size_t n = 2; n <= 300; ++n) {
      const double next = reflection_series(a, n);
      EXPECT_LE(std::min(previous, next), limit + 1e-15) << a << " " << n;
      EXPECT_GE(std::max(previous, next), limit - 1e-15) << a << " " << n;
      previous = next;
    }
  }
}

TEST(ReflectionSeries, BracketedStop) {
  for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    const Bracket b = reflection_series_bracketed(a, 1e-6);
    EXPECT_LE(b.width(), 1e-6);
    EXPECT_LE(b.lower, strip_exit_density_closed(a) + 1e-15);
    EXPECT_GE(b.upper, strip_exit_density_closed(a) - 1e-15);
    EXPECT_NEAR(b.midpoint(), strip_exit_density_closed(a), 0.5e-6 + 1e-15);
  }
  EXPECT_THROW(reflection_series_bracketed(0.0, 1e-9, 100), DomainError);
}

TEST(ReflectionDerivative, Examples) {
  EXPECT_NEAR(reflection_series_derivative(0.0, 2), 1.0 + 1.0 / 9.0, 1e-16);
  EXPECT_EQ(reflection_series_derivative(0.0, 1000), odd_square_sum(1000));
  EXPECT_NEAR(reflection_series_derivative_closed(0.0), kPi2Over8, 1e-15);
  EXPECT_NEAR(reflection_series_derivative_closed(0.5), 4.2121171501820595382, 1e-14);
  for (double a : {0.0, 0.5, -0.7}) {
    for (std::size_t n : {10u, 1000u, 1000000u}) {
      const double gap = reflection_series_derivative_closed(a) - reflection_series_derivative(a, n);
      EXPECT_GE(gap, -1e-14);
      EXPECT_LE(gap, reflection_series_derivative_tail_bound(a, n) + 1e-14);
    }
  }
}

TEST(ReflectionDerivative, MatchesFiniteDifference) {
  constexpr double h = 1e-5;
  constexpr std::size_t n = 100'000;
  for (double a : {0.0, 0.4, -0.4}) {
    const double fd = kPi * (reflection_series(a + h, n) - reflection_series(a - h, n)) / (2.0 * h);
    EXPECT_NEAR(fd, reflection_series_derivative(a, n), 1e-4) << a;
  }
}

TEST(PuncturedGreens, SeriesConvergesToClosedForm) {
  EXPECT_NEAR(punctured_disk_greens_closed(1.0, 2.0), 0.44805489433391559353, 1e-15);
  EXPECT_NEAR(punctured_disk_greens_closed(0.5, 0.7), 0.58867892404728236810, 1e-15);
  EXPECT_NEAR(punctured_disk_greens_closed(2.0, 3.0), 0.78046859230329319039, 1e-15);
  EXPECT_NEAR(punctured_disk_greens_closed(1.0, 2.0),
              greens_disk(ComplexPoint(std::exp(-1.0), 0.0), ComplexPoint(std::exp(-2.0), 0.0)), 1e-15);
  for (auto [alpha, gamma] : {std::pair{1.0, 2.0}, std::pair{0.5, 0.7}, std::pair{2.0, 3.0}}) {
    for (std::size_t n : {10u, 1000u, 100000u}) {
      const double gap = std::abs(punctured_disk_greens_series(alpha, gamma, n) -
                                  punctured_disk_greens_closed(alpha, gamma));
      EXPECT_LE(gap, punctured_disk_greens_tail_bound(alpha, gamma, n) + 1e-15);
    }
  }
  EXPECT_THROW(punctured_disk_greens_series(1.0, 1.0, 5), DomainError);
}

TEST(MirrorProduct, Examples) {
  EXPECT_NEAR(mirror_product(1.0, 2.0, 0), 9.0, 1e-14);
  EXPECT_NEAR(mirror_product_closed(1.0, 2.0), 16.696713921428238033, 1e-13);
  EXPECT_NEAR(mirror_product_closed(0.5, 0.7), 40.397938895201883768, 1e-13);
  EXPECT_NEAR(mirror_product_closed(2.0, 3.0), 134.80493288016777561, 1e-12);
  for (std::size_t n : {0u, 1u, 7u, 1000u}) {
    EXPECT_EQ(mirror_product(2.0, 1.0, n), mirror_product(1.0, 2.0, n));
  }
  for (std::size_t n : {10u, 10000u}) {
    const double log_gap = std::log(mirror_product_closed(1.0, 2.0)) - std::log(mirror_product(1.0, 2.0, n));
    EXPECT_GE(log_gap, 0.0);
    EXPECT_LE(log_gap, mirror_product_log_tail_bound(1.0, 2.0, n));
  }
  EXPECT_THROW(mirror_product(1.0, 1.0, 3), DomainError);
}

TEST(SinhProduct, Examples) {
  EXPECT_EQ(sinh_product(0.0, 50), 0.0);
  const double s1 = 1.1752011936438014569;
  EXPECT_NEAR(sinh_product(1.0, 100), s1, 1.1e-3 * s1);
  EXPECT_LE((s1 - sinh_product(1.0, 100)) / s1, sinh_product_rel_tail_bound(1.0, 100));
  EXPECT_NEAR(sinh_product(1.0, 10'000'000), s1, 1e-7);
  double previous = 0.0;
  for (std::size_t n : {1u, 2u, 10u, 100u}) {
    EXPECT_GT(sinh_product(0.7, n), previous);
    previous = sinh_product(0.7, n);
  }
}

TEST(SineProduct, Examples) {
  EXPECT_EQ(sine_product(kPi, 5), 0.0);
  EXPECT_NEAR(sine_product(kPi / 2, 10'000'000), 1.0, 1e-7);
  EXPECT_NEAR(sine_product(1.0, 10'000), std::sin(1.0), 2e-4 * std::sin(1.0));
  for (double x : {0.5, 1.0, kPi / 2, 3.0}) {
    for (std::size_t n : {10u, 1000u}) {
      const double rel = std::abs(sine_product(x, n) - std::sin(x)) / std::abs(std::sin(x));
      EXPECT_LE(rel, sine_product_rel_tail_bound(x, n)) << x << " " << n;
    }
  }
}

TEST(BaselFromProduct, Examples) {
  EXPECT_DOUBLE_EQ(basel_from_product(1), 1.0);
  EXPECT_LE(kBasel - basel_from_product(1000), basel_from_product_tail_bound(1000));
  // Second derivative of ln(sinh_product(alpha)/alpha) at 0 is 2 sum 1/(pi n)^2.
  constexpr std::size_t n = 1000;
  constexpr double h = 1e-3;
  const double f = std::log(sinh_product(h, n) / h);
  EXPECT_NEAR(2.0 * f / (h * h), 2.0 * basel_from_product(n) / (kPi * kPi), 1e-6);
}

TEST(BaselRoutes, AgreeWithinTheirBounds) {
  const auto routes = basel_four_routes(TruncationPolicy::TailBound(1e-8));
  for (const BaselEstimate& r : routes) {
    EXPECT_LE(r.tail_bound, 1e-8) << r.route;
    EXPECT_NEAR(r.value, kBasel, r.tail_bound + 1e-12) << r.route;
  }
  EXPECT_EQ(routes[0].route, "odd_squares");
  EXPECT_EQ(routes[3].route, "reflection_derivative");
}

TEST(Series, FixedNIsBitReproducible) {
  EXPECT_EQ(odd_square_sum(12345), odd_square_sum(12345));
  EXPECT_EQ(reflection_series(0.3, 54321), reflection_series(0.3, 54321));
  EXPECT_EQ(mirror_product(0.5, 0.7, 999), mirror_product(0.5, 0.7, 999));
  EXPECT_EQ(sinh_product(1.0, 777), sinh_product(1.0, 777));
  EXPECT_EQ(punctured_disk_exit_series(0.3, 1.0, 4242), punctured_disk_exit_series(0.3, 1.0, 4242));
  const auto a = basel_four_routes(TruncationPolicy::FixedN(1000));
  const auto b = basel_four_routes(TruncationPolicy::FixedN(1000));
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].value, b[i].value);
}

}  // namespace
}  // namespace cbm
