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

#ifndef CBM_SERIES_HPP_
#define CBM_SERIES_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cbm/geometry.hpp"
#include "cbm/maps.hpp"
#include "cbm/summation.hpp"

// Series, products and limits behind the Basel identity, each with an
// explicit tail bound. Tail bounds are part of the interface: callers pick a
// truncation from a target error through TruncationPolicy.

namespace cbm {

// Taylor coefficients a_0..a_N of a map analytic on the unit disk.
struct PowerSeriesCoeffs {
  std::vector<Complex> coeffs;
  std::string radius_note;

  // Throws DomainError on an empty or non-finite sequence.
  void validate() const;
};

class TruncationPolicy {
 public:
  enum class Mode { kFixedN, kTailBound };
  static constexpr std::size_t kDefaultMaxTerms = std::size_t{1} << 33;

  static TruncationPolicy FixedN(std::size_t n);
  static TruncationPolicy TailBound(double eps, std::size_t max_terms = kDefaultMaxTerms);

  Mode mode() const { return mode_; }
  std::size_t n() const { return n_; }
  double eps() const { return eps_; }
  std::size_t max_terms() const { return max_terms_; }

  /// Number of terms to use. For kTailBound, the least N >= 1 with
  /// tail_bound(N) <= eps; tail_bound must be nonincreasing. Throws
  /// DomainError if that N exceeds max_terms.
  std::size_t resolve(const std::function<double(std::size_t)>& tail_bound) const;

 private:
  TruncationPolicy(Mode mode, std::size_t n, double eps, std::size_t max_terms)
      : mode_(mode), n_(n), eps_(eps), max_terms_(max_terms) {}

  Mode mode_;
  std::size_t n_;
  double eps_;
  std::size_t max_terms_;
};

// ---- Power series and exit times -----------------------------------------

// E[tau(f(D))] from f(0): (1/2) sum_{n>=1} |a_n|^2 over the supplied terms.
double exit_time_from_coeffs(const PowerSeriesCoeffs& c);

// Streaming form for coefficient sequences too long to store.
template <class CoeffFn>
double exit_time_from_coeff_fn(std::size_t n_max, CoeffFn&& coeff) {
  CompensatedSum s;
  for (std::size_t n = n_max; n >= 1; --n) s += std::norm(Complex(coeff(n)));
  return 0.5 * s.value();
}

// Coefficient of z^n in atan z: 0 for even n, (-1)^((n-1)/2) / n for odd n.
double arctan_coeff(long long n);
PowerSeriesCoeffs arctan_coeffs(std::size_t n_max);

// (1 / (2 pi r^n)) * integral of f(r e^{it}) e^{-int} dt by the Q-point
// trapezoid rule. Requires 0 < r < 1 and Q >= max(4n, 4).
Complex coeff_extract(const ConformalMap& m, std::size_t n, double r, std::size_t q);
// All coefficients 0..n_max from one set of Q samples.
PowerSeriesCoeffs coeffs_extract(const ConformalMap& m, std::size_t n_max, double r,
                                 std::size_t q);

// ---- Odd squares -----------------------------------------------------------

double odd_square_sum(std::size_t n);
// sum_{n>N} 1/(2n-1)^2 <= 1/(2(2N-1)).
double odd_square_tail_bound(std::size_t n);
double basel_from_odd(double odd_sum);

// ---- Wrapping the line around the circle ----------------------------------

// |punctured_disk_exit_series(a, theta, N) - poisson_disk(a, theta)|.
double wrapped_sum_identity_gap(double a, double theta, std::size_t truncation);

// Symmetric partial sum of sum_k 1/(theta + 2 pi k)^2; theta != 0 mod 2 pi.
double cosec_identity_lhs(double theta, std::size_t truncation);
double cosec_identity_rhs(double theta);
// 1/(pi (2 pi N - |theta|)) for 2 pi N > |theta|.
double cosec_identity_tail_bound(double theta, std::size_t truncation);

/// 1/(2(1 - cos theta)) - 1/theta^2, continuous at 0 with value 1/12.
/// Below |theta| = 1e-3 a four-term Taylor expansion replaces the difference.
double cosec_minus_pole(double theta);
double theta_limit_value();

// sum over 0 < |k| <= N of 1/(theta + 2 pi k)^2; tends to 1/12 at theta = 0.
double wrapped_pole_free_sum(double theta, std::size_t truncation);
// 2 pi^2 * wrapped_pole_free_sum(theta_small, N), the wrapping estimate of
// sum 1/k^2. At theta_small = 0 the error is at most 1/N.
double basel_from_wrapping(std::size_t truncation, double theta_small = 0.0);
double basel_from_wrapping_tail_bound(std::size_t truncation);

// ---- Reflection series for the strip ------------------------------------

/// (1/pi) * sum_{j=1}^N (-1)^(j+1) / ((2j-1) + (-1)^j a), summed in index
/// order with compensation. The limit is strip_exit_density_closed(a).
double reflection_series(double a, std::size_t terms);

struct Bracket {
  double lower;
  double upper;
  std::size_t terms;  // N such that the bracket is {S_N, S_{N+1}}
  double midpoint() const { return 0.5 * (lower + upper); }
  double width() const { return upper - lower; }
};

// Sums until consecutive partial sums of reflection_series differ by at most
// `width`. The limit lies in the returned bracket.
Bracket reflection_series_bracketed(double a, double width,
                                    std::size_t max_terms = TruncationPolicy::kDefaultMaxTerms);

// Term-by-term a-derivative of pi * reflection_series:
// sum_{j=1}^N 1/((2j-1) + (-1)^j a)^2.
double reflection_series_derivative(double a, std::size_t terms);
// (pi^2/8) sec^2(pi a/4) / (1 - tan(pi a/4))^2.
double reflection_series_derivative_closed(double a);
// 1/(2(2N - 1 - |a|)).
double reflection_series_derivative_tail_bound(double a, std::size_t terms);

// ---- Punctured-disk Green's function and products -------------------------

/// (1/2pi) sum_{|n|<=N} ln(((2 pi n)^2 + (alpha+gamma)^2) / ((2 pi n)^2 + (alpha-gamma)^2)),
/// the Green's function of the punctured disk at (e^-alpha, e^-gamma).
double punctured_disk_greens_series(double alpha, double gamma, std::size_t truncation);
// (1/pi) ln(|1 - e^-(alpha+gamma)| / |e^-gamma - e^-alpha|).
double punctured_disk_greens_closed(double alpha, double gamma);
// alpha gamma / (pi^3 N).
double punctured_disk_greens_tail_bound(double alpha, double gamma, std::size_t truncation);

// Partial product over |n| <= N of ((2 pi n)^2 + (alpha+gamma)^2) / ((2 pi n)^2 + (alpha-gamma)^2).
double mirror_product(double alpha, double gamma, std::size_t truncation);
double mirror_product_closed(double alpha, double gamma);
// Bound on ln(closed) - ln(partial): 2 alpha gamma / (pi^2 N).
double mirror_product_log_tail_bound(double alpha, double gamma, std::size_t truncation);

// alpha * prod_{n=1}^N (1 + (alpha/(pi n))^2).
double sinh_product(double alpha, std::size_t truncation);
// exp(alpha^2 / (pi^2 N)) - 1, a bound on the relative error.
double sinh_product_rel_tail_bound(double alpha, std::size_t truncation);

// x * prod_{n=1}^N (1 - (x/(pi n))^2).
double sine_product(double x, std::size_t truncation);
// exp(u / (1 - x^2/(pi^2 (N+1)^2))) - 1 with u = x^2/(pi^2 N); +inf when
// |x| >= pi (N+1).
double sine_product_rel_tail_bound(double x, std::size_t truncation);

// pi^2 * sum_{n=1}^N 1/(pi n)^2, the coefficient of alpha^2 in the sinh
// product, rescaled to sum 1/n^2. Error at most 1/N.
double basel_from_product(std::size_t truncation);
double basel_from_product_tail_bound(std::size_t truncation);

// ---- The four routes to pi^2/6 ---------------------------------------------

struct BaselEstimate {
  std::string route;
  double value;
  double tail_bound;  // |value - pi^2/6| <= tail_bound, up to rounding
  std::size_t terms;
};

inline constexpr double kBasel = kPi * kPi / 6.0;

// Odd squares, wrapping, sinh product and the differentiated reflection
// series, with truncations resolved from each route's tail bound.
std::array<BaselEstimate, 4> basel_four_routes(const TruncationPolicy& policy);

}  // namespace cbm

#endif  // CBM_SERIES_HPP_
