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

#include "cbm/series.hpp"

#include <cmath>
#include <limits>

#include "cbm/error.hpp"
#include "cbm/oracles.hpp"

namespace cbm {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_open_unit(double a, const char* what) {
  if (!(a > -1.0 && a < 1.0)) throw DomainError(std::string(what) + ": a must be in (-1,1)");
}

void require_positive_distinct(double alpha, double gamma, const char* what) {
  if (!(alpha > 0.0 && gamma > 0.0)) {
    throw DomainError(std::string(what) + ": alpha and gamma must be positive");
  }
  if (alpha == gamma) throw DomainError(std::string(what) + ": alpha must differ from gamma");
}

// 2 ln|(alpha+gamma)/(alpha-gamma)| + 2 sum_{n=1}^N log1p(4 alpha gamma / ((2 pi n)^2 + (alpha-gamma)^2)),
// the logarithm of the mirror product.
double mirror_log(double alpha, double gamma, std::size_t truncation) {
  const double diff2 = (alpha - gamma) * (alpha - gamma);
  const double cross = 4.0 * alpha * gamma;
  CompensatedSum s;
  for (std::size_t n = truncation; n >= 1; --n) {
    const double w = 2.0 * kPi * static_cast<double>(n);
    s += std::log1p(cross / (w * w + diff2));
  }
  return 2.0 * std::log(std::abs((alpha + gamma) / (alpha - gamma))) + 2.0 * s.value();
}

}  // namespace

void PowerSeriesCoeffs::validate() const {
  if (coeffs.empty()) throw DomainError("PowerSeriesCoeffs: empty coefficient list");
  for (const Complex& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("PowerSeriesCoeffs: non-finite coefficient");
    }
  }
}

TruncationPolicy TruncationPolicy::FixedN(std::size_t n) {
  if (n < 1) throw DomainError("TruncationPolicy: N must be >= 1");
  return TruncationPolicy(Mode::kFixedN, n, 0.0, n);
}

TruncationPolicy TruncationPolicy::TailBound(double eps, std::size_t max_terms) {
  if (!(eps > 0.0)) throw DomainError("TruncationPolicy: eps must be positive");
  return TruncationPolicy(Mode::kTailBound, 0, eps, max_terms);
}

std::size_t TruncationPolicy::resolve(const std::function<double(std::size_t)>& tail_bound) const {
  if (mode_ == Mode::kFixedN) return n_;
  if (tail_bound(1) <= eps_) return 1;
  std::size_t lo = 1;  // tail_bound(lo) > eps
  std::size_t hi = 2;
  while (tail_bound(hi) > eps_) {
    if (hi > max_terms_) throw DomainError("TruncationPolicy: tail bound needs too many terms");
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (tail_bound(mid) > eps_) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (hi > max_terms_) throw DomainError("TruncationPolicy: tail bound needs too many terms");
  return hi;
}

double exit_time_from_coeffs(const PowerSeriesCoeffs& c) {
  c.validate();
  return exit_time_from_coeff_fn(c.coeffs.size() - 1, [&c](std::size_t n) { return c.coeffs[n]; });
}

double arctan_coeff(long long n) {
  if (n < 1) throw DomainError("arctan_coeff: n must be >= 1");
  if (n % 2 == 0) return 0.0;
  const double sign = ((n - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign / static_cast<double>(n);
}

PowerSeriesCoeffs arctan_coeffs(std::size_t n_max) {
  PowerSeriesCoeffs out{{}, "radius 1"};
  out.coeffs.resize(n_max + 1);
  for (std::size_t n = 1; n <= n_max; ++n) out.coeffs[n] = arctan_coeff(static_cast<long long>(n));
  return out;
}

PowerSeriesCoeffs coeffs_extract(const ConformalMap& m, std::size_t n_max, double r,
                                 std::size_t q) {
  if (!(r > 0.0 && r < 1.0)) throw DomainError("coeff_extract: r must be in (0,1)");
  if (q < 4 || q < 4 * n_max) throw DomainError("coeff_extract: need Q >= max(4n, 4)");

  std::vector<Complex> roots(q);
  std::vector<Complex> samples(q);
  for (std::size_t j = 0; j < q; ++j) {
    const double t = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(q);
    roots[j] = std::polar(1.0, -t);
    samples[j] = m(std::polar(r, t));
  }

  PowerSeriesCoeffs out{{}, "extracted on |z| = " + std::to_string(r)};
  out.coeffs.resize(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    Complex acc{};
    for (std::size_t j = 0; j < q; ++j) acc += samples[j] * roots[(n * j) % q];
    out.coeffs[n] = acc / (static_cast<double>(q) * std::pow(r, static_cast<double>(n)));
  }
  return out;
}

Complex coeff_extract(const ConformalMap& m, std::size_t n, double r, std::size_t q) {
  if (q < 4 || q < 4 * n) throw DomainError("coeff_extract: need Q >= max(4n, 4)");
  return coeffs_extract(m, n, r, q).coeffs[n];
}

double odd_square_sum(std::size_t n) {
  CompensatedSum s;
  for (std::size_t k = n; k >= 1; --k) {
    const double d = 2.0 * static_cast<double>(k) - 1.0;
    s += 1.0 / (d * d);
  }
  return s.value();
}

double odd_square_tail_bound(std::size_t n) {
  if (n < 1) return kInf;
  return 1.0 / (2.0 * (2.0 * static_cast<double>(n) - 1.0));
}

double basel_from_odd(double odd_sum) { return 4.0 * odd_sum / 3.0; }

double wrapped_sum_identity_gap(double a, double theta, std::size_t truncation) {
  return std::abs(punctured_disk_exit_series(a, theta, truncation) -
                  poisson_disk(ComplexPoint(a, 0.0), theta));
}

double cosec_identity_lhs(double theta, std::size_t truncation) {
  if (std::remainder(theta, 2.0 * kPi) == 0.0) {
    throw DomainError("cosec_identity_lhs: theta must not be a multiple of 2 pi");
  }
  CompensatedSum s;
  for (std::size_t k = truncation; k >= 1; --k) {
    const double w = 2.0 * kPi * static_cast<double>(k);
    s += 1.0 / ((theta + w) * (theta + w));
    s += 1.0 / ((theta - w) * (theta - w));
  }
  s += 1.0 / (theta * theta);
  return s.value();
}

double cosec_identity_rhs(double theta) {
  const double h = std::sin(0.5 * theta);
  return 1.0 / (4.0 * h * h);
}

double cosec_identity_tail_bound(double theta, std::size_t truncation) {
  const double gap = 2.0 * kPi * static_cast<double>(truncation) - std::abs(theta);
  if (!(gap > 0.0)) return kInf;
  return 1.0 / (kPi * gap);
}

double cosec_minus_pole(double theta) {
  if (std::abs(theta) < 1e-3) {
    const double t2 = theta * theta;
    return 1.0 / 12.0 + t2 * (1.0 / 240.0 + t2 * (1.0 / 6048.0 + t2 / 172800.0));
  }
  return cosec_identity_rhs(theta) - 1.0 / (theta * theta);
}

double theta_limit_value() { return 1.0 / 12.0; }

double wrapped_pole_free_sum(double theta, std::size_t truncation) {
  CompensatedSum s;
  for (std::size_t k = truncation; k >= 1; --k) {
    const double w = 2.0 * kPi * static_cast<double>(k);
    s += 1.0 / ((theta + w) * (theta + w));
    s += 1.0 / ((theta - w) * (theta - w));
  }
  return s.value();
}

double basel_from_wrapping(std::size_t truncation, double theta_small) {
  return 2.0 * kPi * kPi * wrapped_pole_free_sum(theta_small, truncation);
}

double basel_from_wrapping_tail_bound(std::size_t truncation) {
  return truncation < 1 ? kInf : 1.0 / static_cast<double>(truncation);
}

double reflection_series(double a, std::size_t terms) {
  require_open_unit(a, "reflection_series");
  CompensatedSum s;
  for (std::size_t j = 1; j <= terms; ++j) {
    const double odd = 2.0 * static_cast<double>(j) - 1.0;
    s += (j % 2 == 1) ? 1.0 / (odd - a) : -1.0 / (odd + a);
  }
  return s.value() / kPi;
}

Bracket reflection_series_bracketed(double a, double width, std::size_t max_terms) {
  require_open_unit(a, "reflection_series_bracketed");
  if (!(width > 0.0)) throw DomainError("reflection_series_bracketed: width must be positive");
  const double stop = kPi * width;
  CompensatedSum s;
  for (std::size_t j = 1; j <= max_terms; ++j) {
    const double odd = 2.0 * static_cast<double>(j) - 1.0;
    s += (j % 2 == 1) ? 1.0 / (odd - a) : -1.0 / (odd + a);
    const double next_odd = odd + 2.0;
    const double next = (j % 2 == 0) ? 1.0 / (next_odd - a) : -1.0 / (next_odd + a);
    if (std::abs(next) <= stop) {
      const double here = s.value();
      const double there = here + next;
      return Bracket{std::min(here, there) / kPi, std::max(here, there) / kPi, j};
    }
  }
  throw DomainError("reflection_series_bracketed: width not reached within max_terms");
}

double reflection_series_derivative(double a, std::size_t terms) {
  require_open_unit(a, "reflection_series_derivative");
  CompensatedSum s;
  for (std::size_t j = terms; j >= 1; --j) {
    const double odd = 2.0 * static_cast<double>(j) - 1.0;
    const double d = (j % 2 == 1) ? odd - a : odd + a;
    s += 1.0 / (d * d);
  }
  return s.value();
}

double reflection_series_derivative_closed(double a) {
  require_open_unit(a, "reflection_series_derivative_closed");
  const double c = std::cos(kPi * a / 4.0);
  const double t = std::tan(kPi * a / 4.0);
  return (kPi * kPi / 8.0) / (c * c * (1.0 - t) * (1.0 - t));
}

double reflection_series_derivative_tail_bound(double a, std::size_t terms) {
  require_open_unit(a, "reflection_series_derivative_tail_bound");
  const double gap = 2.0 * static_cast<double>(terms) - 1.0 - std::abs(a);
  if (!(gap > 0.0)) return kInf;
  return 1.0 / (2.0 * gap);
}

double punctured_disk_greens_series(double alpha, double gamma, std::size_t truncation) {
  require_positive_distinct(alpha, gamma, "punctured_disk_greens_series");
  return mirror_log(alpha, gamma, truncation) / (2.0 * kPi);
}

double punctured_disk_greens_closed(double alpha, double gamma) {
  require_positive_distinct(alpha, gamma, "punctured_disk_greens_closed");
  return std::log(mirror_product_closed(alpha, gamma)) / (2.0 * kPi);
}

double punctured_disk_greens_tail_bound(double alpha, double gamma, std::size_t truncation) {
  if (truncation < 1) return kInf;
  return alpha * gamma / (kPi * kPi * kPi * static_cast<double>(truncation));
}

double mirror_product(double alpha, double gamma, std::size_t truncation) {
  require_positive_distinct(alpha, gamma, "mirror_product");
  return std::exp(mirror_log(alpha, gamma, truncation));
}

double mirror_product_closed(double alpha, double gamma) {
  require_positive_distinct(alpha, gamma, "mirror_product_closed");
  // (1 - e^-(a+g)) / (e^-a - e^-g), written with expm1.
  const double num = -std::expm1(-(alpha + gamma));
  const double den = std::exp(-alpha) * -std::expm1(alpha - gamma);
  const double q = num / den;
  return q * q;
}

double mirror_product_log_tail_bound(double alpha, double gamma, std::size_t truncation) {
  if (truncation < 1) return kInf;
  return 2.0 * alpha * gamma / (kPi * kPi * static_cast<double>(truncation));
}

double sinh_product(double alpha, std::size_t truncation) {
  if (alpha == 0.0) return 0.0;
  CompensatedSum s;
  for (std::size_t n = truncation; n >= 1; --n) {
    const double u = alpha / (kPi * static_cast<double>(n));
    s += std::log1p(u * u);
  }
  return alpha * std::exp(s.value());
}

double sinh_product_rel_tail_bound(double alpha, std::size_t truncation) {
  if (truncation < 1) return kInf;
  return std::expm1(alpha * alpha / (kPi * kPi * static_cast<double>(truncation)));
}

double sine_product(double x, std::size_t truncation) {
  double p = x;
  for (std::size_t n = 1; n <= truncation; ++n) {
    const double u = x / (kPi * static_cast<double>(n));
    p *= (1.0 - u) * (1.0 + u);
  }
  return p;
}

double sine_product_rel_tail_bound(double x, std::size_t truncation) {
  if (truncation < 1) return kInf;
  const double n = static_cast<double>(truncation);
  const double next = x * x / (kPi * kPi * (n + 1.0) * (n + 1.0));
  if (!(next < 1.0)) return kInf;
  return std::expm1((x * x / (kPi * kPi * n)) / (1.0 - next));
}

double basel_from_product(std::size_t truncation) {
  CompensatedSum s;
  for (std::size_t n = truncation; n >= 1; --n) {
    const double d = kPi * static_cast<double>(n);
    s += 1.0 / (d * d);
  }
  return kPi * kPi * s.value();
}

double basel_from_product_tail_bound(std::size_t truncation) {
  return truncation < 1 ? kInf : 1.0 / static_cast<double>(truncation);
}

std::array<BaselEstimate, 4> basel_four_routes(const TruncationPolicy& policy) {
  std::array<BaselEstimate, 4> out;

  const std::size_t n_odd =
      policy.resolve([](std::size_t n) { return 4.0 / 3.0 * odd_square_tail_bound(n); });
  out[0] = {"odd_squares", basel_from_odd(odd_square_sum(n_odd)),
            4.0 / 3.0 * odd_square_tail_bound(n_odd), n_odd};

  const std::size_t n_wrap = policy.resolve(basel_from_wrapping_tail_bound);
  out[1] = {"wrapping", basel_from_wrapping(n_wrap), basel_from_wrapping_tail_bound(n_wrap),
            n_wrap};

  const std::size_t n_prod = policy.resolve(basel_from_product_tail_bound);
  out[2] = {"sinh_product", basel_from_product(n_prod), basel_from_product_tail_bound(n_prod),
            n_prod};

  const std::size_t n_refl = policy.resolve(
      [](std::size_t n) { return 4.0 / 3.0 * reflection_series_derivative_tail_bound(0.0, n); });
  out[3] = {"reflection_derivative", 4.0 / 3.0 * reflection_series_derivative(0.0, n_refl),
            4.0 / 3.0 * reflection_series_derivative_tail_bound(0.0, n_refl), n_refl};
  return out;
}

}  // namespace cbm
