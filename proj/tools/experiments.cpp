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

#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "cbm/error.hpp"
#include "cbm/geometry.hpp"
#include "cbm/maps.hpp"
#include "cbm/oracles.hpp"
#include "cbm/random.hpp"
#include "cbm/sampler.hpp"
#include "cbm/series.hpp"
#include "cbm/stats.hpp"

namespace cbm::cli {
namespace {

using Clock = std::chrono::steady_clock;

constexpr double kPi2Over16 = kPi * kPi / 16.0;
constexpr double kPi2Over8 = kPi * kPi / 8.0;
// Allowance for floating-point rounding on top of an analytic tail bound.
constexpr double kRoundingSlack = 1e-12;

// Plot series use a coarser bracket than the checks to stay cheap.
constexpr double kPlotBracketWidth = 1e-6;

double slack(double reference) { return kRoundingSlack * std::max(1.0, std::abs(reference)); }

std::size_t terms_for(const RunConfig& cfg, const std::function<double(std::size_t)>& bound) {
  return cfg.truncation().resolve(bound);
}

template <class F>
VerificationReport timed(F&& f) {
  const auto start = Clock::now();
  VerificationReport r = f();
  r.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return r;
}

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(4) << x;
  return os.str();
}

std::string a_label(double a) { return "(a=" + fmt(a) + ")"; }

// Halves the bin count until every expected count reaches 5.
std::size_t feasible_bins(const std::function<double(double)>& density, std::size_t n,
                          std::size_t bins) {
  while (bins > 4) {
    const auto p = circle_bin_probabilities(density, bins);
    if (*std::min_element(p.begin(), p.end()) * static_cast<double>(n) >= 5.0) break;
    bins /= 2;
  }
  return bins;
}

constexpr std::size_t kMinGofSamples = 20;

// ---------------------------------------------------------------------------

RunResult exit_time_checks(const RunConfig& cfg) {
  RunResult out;
  const std::size_t n_odd = terms_for(cfg, [](std::size_t n) { return 0.5 * odd_square_tail_bound(n); });

  out.reports.push_back(timed([&] {
    const double v = exit_time_from_coeff_fn(2 * n_odd - 1, [](std::size_t k) {
      return arctan_coeff(static_cast<long long>(k));
    });
    return make_report("arctan_exit_time_series", "E_0 tau(|Re z| < pi/4) = (1/2) sum |a_n|^2, f = atan",
                       v, kPi2Over16, 0.5 * odd_square_tail_bound(n_odd) + slack(kPi2Over16),
                       cfg.seed, n_odd);
  }));

  out.reports.push_back(timed([&] {
    const std::size_t n = cfg.exit_time_samples();
    const McEstimate e = estimate_exit_time_1d(kPi / 4.0, 0.0, cfg.dt, n, cfg.seed, cfg.workers);
    return make_report("strip_exit_time_mc", "E_0 tau(|Re z| < pi/4) = pi^2/16", e.mean, kPi2Over16,
                       std::max(3.0 * e.std_error, 0.01), cfg.seed, n);
  }));

  out.reports.push_back(timed([&] {
    const std::size_t n = terms_for(cfg, odd_square_tail_bound);
    const double bound = (4.0 / 3.0) * odd_square_tail_bound(n);
    return make_report("basel_from_odd_squares", "sum 1/k^2 = (4/3) sum 1/(2k-1)^2 = pi^2/6",
                       basel_from_odd(odd_square_sum(n)), kBasel, bound + slack(kBasel), cfg.seed, n);
  }));

  constexpr std::size_t kCoeffMax = 201;
  constexpr double kRadius = 0.99;
  constexpr std::size_t kQ = 4096;
  const auto t0 = Clock::now();
  const PowerSeriesCoeffs extracted = coeffs_extract(ConformalMap::ArcTan(), kCoeffMax, kRadius, kQ);
  const double extract_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  out.reports.push_back(timed([&] {
    double worst = std::abs(extracted.coeffs[0]);
    for (std::size_t k = 1; k <= kCoeffMax; ++k) {
      worst = std::max(worst, std::abs(extracted.coeffs[k] - arctan_coeff(static_cast<long long>(k))));
    }
    auto r = make_report("arctan_coeff_extraction", "atan z = sum (-1)^k z^(2k+1)/(2k+1)", worst, 0.0,
                         1e-10, cfg.seed, kCoeffMax + 1);
    return r;
  }));
  out.reports.back().runtime_ms += extract_ms;

  out.reports.push_back(timed([&] {
    const double exact = exit_time_from_coeffs(arctan_coeffs(kCoeffMax));
    return make_report("exit_time_from_extracted_coeffs", "E tau = (1/2) sum |a_n|^2, n <= 201",
                       exit_time_from_coeffs(extracted), exact, 1e-8, cfg.seed, kCoeffMax + 1);
  }));

  for (std::size_t n = 1; n <= (std::size_t{1} << 20); n *= 2) {
    const double v = exit_time_from_coeff_fn(2 * n - 1, [](std::size_t k) {
      return arctan_coeff(static_cast<long long>(k));
    });
    out.rows.push_back({"exit_time_partial_sum", static_cast<double>(n), kPi2Over16, v, std::nullopt});
  }
  return out;
}

// ---------------------------------------------------------------------------

RunResult disk_exit_checks(const RunConfig& cfg) {
  RunResult out;
  const double thetas[] = {kPi / 4.0, kPi / 2.0, kPi};
  const char* theta_names[] = {"pi/4", "pi/2", "pi"};

  for (double a : {0.3, 0.5, 0.9}) {
    for (int t = 0; t < 3; ++t) {
      const double theta = thetas[t];
      out.reports.push_back(timed([&] {
        const std::size_t n = terms_for(cfg, [&](std::size_t k) {
          return punctured_disk_tail_bound(a, theta, k);
        });
        const double reference = poisson_disk(ComplexPoint(a, 0.0), theta);
        return make_report("wrapped_identity(a=" + fmt(a) + ",theta=" + theta_names[t] + ")",
                           "sum_k Cauchy over theta + 2 pi k = Poisson kernel",
                           punctured_disk_exit_series(a, theta, n), reference,
                           punctured_disk_tail_bound(a, theta, n) + slack(reference), cfg.seed, n);
      }));
    }
  }

  for (int t = 0; t < 3; ++t) {
    const double theta = thetas[t];
    out.reports.push_back(timed([&] {
      const std::size_t n = terms_for(cfg, [&](std::size_t k) { return cosec_identity_tail_bound(theta, k); });
      const double reference = cosec_identity_rhs(theta);
      return make_report(std::string("cosec_identity(theta=") + theta_names[t] + ")",
                         "sum_k 1/(theta + 2 pi k)^2 = 1/(4 sin^2(theta/2))",
                         cosec_identity_lhs(theta, n), reference,
                         cosec_identity_tail_bound(theta, n) + slack(reference), cfg.seed, n);
    }));
  }

  out.reports.push_back(timed([&] {
    return make_report("theta_limit", "1/(4 sin^2(theta/2)) - 1/theta^2 -> 1/12", cosec_minus_pole(1e-4),
                       theta_limit_value(), 1e-9, cfg.seed, 0);
  }));

  out.reports.push_back(timed([&] {
    const std::size_t n = terms_for(cfg, basel_from_wrapping_tail_bound);
    const double bound = basel_from_wrapping_tail_bound(n);
    return make_report("basel_from_wrapping", "2 pi^2 sum_{k != 0} 1/(2 pi k)^2 = pi^2/6",
                       basel_from_wrapping(n), kBasel, bound + slack(kBasel), cfg.seed, n);
  }));

  const std::size_t n = cfg.exit_law_samples();
  if (n >= kMinGofSamples) {
    const double v = 1.0;
    out.reports.push_back(timed([&] {
      const std::vector<double> xs = sample_exit_halfplane_batch(v, n, cfg.seed);
      const GoodnessOfFit g = ks_test(xs, [v](double x) { return cauchy_halfplane_cdf(v, x); });
      return make_report("exit_halfplane_ks(v=1)", "exit law of the half-plane from v i = Cauchy(0, v)",
                         g.statistic, 0.0, ks_critical_value(0.01, n), cfg.seed, n);
    }));
  }
  for (double a : {0.0, 0.5}) {
    const ComplexPoint start(a, 0.0);
    const auto t0 = Clock::now();
    const std::vector<double> angles = sample_exit_disk_angles(start, n, cfg.seed);
    const double sample_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    if (n < kMinGofSamples) {
      out.notes.push_back("exit_disk goodness-of-fit" + a_label(a) + " skipped: needs at least " +
                          std::to_string(kMinGofSamples) + " samples");
      continue;
    }

    out.reports.push_back(timed([&] {
      const GoodnessOfFit g = ks_test(angles, [&](double x) { return poisson_disk_cdf(start, x); });
      return make_report("exit_disk_ks" + a_label(a), "exit law of the disk = Poisson kernel",
                         g.statistic, 0.0, ks_critical_value(0.01, n), cfg.seed, n);
    }));
    out.reports.back().runtime_ms += sample_ms;

    out.reports.push_back(timed([&] {
      auto density = [&](double x) { return poisson_disk(start, x); };
      const std::size_t bins = feasible_bins(density, n, 32);
      const GoodnessOfFit g = chi_square_circle(angles, density, bins);
      return make_report("exit_disk_chi2" + a_label(a), "exit law of the disk = Poisson kernel",
                         g.statistic, 0.0, chi_square_critical_value(0.001, bins - 1), cfg.seed, n);
    }));

    if (a == 0.5) {
      constexpr std::size_t kPlotBins = 64;
      const double width = 2.0 * kPi / kPlotBins;
      std::vector<double> counts(kPlotBins, 0.0);
      for (double x : angles) {
        const auto b = static_cast<std::size_t>((x + kPi) / width);
        counts[std::min(b, kPlotBins - 1)] += 1.0;
      }
      for (std::size_t b = 0; b < kPlotBins; ++b) {
        const double theta = -kPi + (static_cast<double>(b) + 0.5) * width;
        const std::size_t terms = terms_for(cfg, [&](std::size_t k) {
          return punctured_disk_tail_bound(a, theta, k);
        });
        out.rows.push_back({"disk_exit_density(a=0.5)", theta, poisson_disk(start, theta),
                            punctured_disk_exit_series(a, theta, terms),
                            counts[b] / (static_cast<double>(n) * width)});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

RunResult strip_exit_checks(const RunConfig& cfg) {
  RunResult out;
  const double width = cfg.trunc ? 0.0 : cfg.eps;

  for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    out.reports.push_back(timed([&] {
      if (cfg.trunc) {
        const double v = reflection_series(a, *cfg.trunc);
        const double step = 1.0 / (kPi * (2.0 * static_cast<double>(*cfg.trunc) + 1.0 - std::abs(a)));
        return make_report("reflection_identity" + a_label(a),
                           "(1/pi) sum_j (-1)^(j+1)/((2j-1) + (-1)^j a) = strip exit density",
                           v, strip_exit_density_closed(a), step + kRoundingSlack, cfg.seed,
                           *cfg.trunc);
      }
      const Bracket b = reflection_series_bracketed(a, width);
      return make_report("reflection_identity" + a_label(a),
                         "(1/pi) sum_j (-1)^(j+1)/((2j-1) + (-1)^j a) = strip exit density",
                         b.midpoint(), strip_exit_density_closed(a), b.width() + kRoundingSlack,
                         cfg.seed, b.terms);
    }));
  }

  out.reports.push_back(timed([&] {
    if (cfg.trunc) {
      const double v = kPi * reflection_series(0.0, *cfg.trunc);
      const double step = 1.0 / (2.0 * static_cast<double>(*cfg.trunc) + 1.0);
      return make_report("leibniz_pi_over_4", "1 - 1/3 + 1/5 - ... = pi/4", v, kPi / 4.0,
                         step + kRoundingSlack, cfg.seed, *cfg.trunc);
    }
    const Bracket b = reflection_series_bracketed(0.0, width / kPi);
    return make_report("leibniz_pi_over_4", "1 - 1/3 + 1/5 - ... = pi/4", kPi * b.midpoint(), kPi / 4.0,
                       kPi * b.width() + kRoundingSlack, cfg.seed, b.terms);
  }));

  std::size_t n_der = 0;
  double der = 0.0;
  double der_bound = 0.0;
  out.reports.push_back(timed([&] {
    n_der = terms_for(cfg, [](std::size_t k) { return reflection_series_derivative_tail_bound(0.0, k); });
    der = reflection_series_derivative(0.0, n_der);
    der_bound = reflection_series_derivative_tail_bound(0.0, n_der);
    return make_report("reflection_derivative_odd_squares",
                       "d/da of the reflection series at a = 0 equals sum 1/(2j-1)^2 = pi^2/8", der,
                       kPi2Over8, der_bound + slack(kPi2Over8), cfg.seed, n_der);
  }));
  out.reports.push_back(timed([&] {
    return make_report("basel_from_reflection_derivative", "(4/3) pi^2/8 = pi^2/6", (4.0 / 3.0) * der,
                       kBasel, (4.0 / 3.0) * der_bound + slack(kBasel), cfg.seed, n_der);
  }));
  out.reports.push_back(timed([&] {
    const double a = 0.5;
    const std::size_t n = terms_for(cfg, [&](std::size_t k) {
      return reflection_series_derivative_tail_bound(a, k);
    });
    const double reference = reflection_series_derivative_closed(a);
    return make_report("reflection_derivative" + a_label(a),
                       "term-by-term derivative of the reflection series", reflection_series_derivative(a, n),
                       reference, reflection_series_derivative_tail_bound(a, n) + slack(reference),
                       cfg.seed, n);
  }));

  out.reports.push_back(timed([&] {
    return make_report("strip_right_probability_quadrature", "P_a(exit through Re z = 1) = (1 + a)/2",
                       strip_right_exit_probability(0.5), 0.75, 1e-9, cfg.seed, 0);
  }));

  const std::size_t n = cfg.exit_law_samples();
  const double a = 0.5;
  const auto t0 = Clock::now();
  const std::vector<ComplexPoint> exits = sample_exit_strip_batch(a, n, cfg.seed);
  const double sample_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  out.reports.push_back(timed([&] {
    const auto right = std::count_if(exits.begin(), exits.end(), [](const ComplexPoint& z) { return z.re() > 0.0; });
    const double p = strip_right_exit_probability(a);
    const double freq = static_cast<double>(right) / static_cast<double>(n);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    return make_report("exit_strip_right_probability" + a_label(a), "P_a(exit through Re z = 1) = (1 + a)/2",
                       freq, p, 3.0 * sigma, cfg.seed, n);
  }));
  out.reports.back().runtime_ms += sample_ms;

  for (int i = 0; i <= 40; ++i) {
    const double x = -0.95 + 0.0475 * i;
    out.rows.push_back({"strip_exit_density_at_1", x, strip_exit_density_closed(x),
                        reflection_series_bracketed(x, kPlotBracketWidth).midpoint(), std::nullopt});
  }
  constexpr std::size_t kBins = 64;
  constexpr double kY = 4.0;
  const double bw = 2.0 * kY / kBins;
  std::vector<double> counts(kBins, 0.0);
  for (const ComplexPoint& z : exits) {
    if (z.re() > 0.0 && std::abs(z.im()) < kY) {
      counts[std::min(static_cast<std::size_t>((z.im() + kY) / bw), kBins - 1)] += 1.0;
    }
  }
  for (std::size_t b = 0; b < kBins; ++b) {
    const double y = -kY + (static_cast<double>(b) + 0.5) * bw;
    out.rows.push_back({"strip_side_density(a=0.5)", y, strip_side_density(a, y), std::nullopt,
                        counts[b] / (static_cast<double>(n) * bw)});
  }
  return out;
}

// ---------------------------------------------------------------------------

ComplexPoint random_disk_point(PhiloxStream& rng) {
  const double r = 0.99 * std::sqrt(rng.uniform());
  const double t = 2.0 * kPi * rng.uniform();
  return ComplexPoint(r * std::cos(t), r * std::sin(t));
}

RunResult greens_checks(const RunConfig& cfg) {
  RunResult out;
  constexpr double kAlphaGamma[3][2] = {{1.0, 2.0}, {0.5, 0.7}, {2.0, 3.0}};

  out.reports.push_back(timed([&] {
    constexpr std::size_t kPairs = 100;
    const ConformalMap phi = ConformalMap::DiskToUpperHalf();
    PhiloxStream rng({cfg.seed, 0});
    double worst = 0.0;
    for (std::size_t i = 0; i < kPairs; ++i) {
      const ComplexPoint a = random_disk_point(rng);
      const ComplexPoint z = random_disk_point(rng);
      const double d = greens_disk(a, z) - greens_halfplane(map_eval(phi, a), map_eval(phi, z));
      worst = std::max(worst, std::abs(d));
    }
    return make_report("greens_transport", "G_D(a, z) = G_H(phi(a), phi(z)) for conformal phi", worst, 0.0,
                       1e-12, cfg.seed, kPairs);
  }));

  for (const auto& ag : kAlphaGamma) {
    const double alpha = ag[0];
    const double gamma = ag[1];
    const std::string label = "(alpha=" + fmt(alpha) + ",gamma=" + fmt(gamma) + ")";
    out.reports.push_back(timed([&] {
      const std::size_t n = terms_for(cfg, [&](std::size_t k) {
        return punctured_disk_greens_tail_bound(alpha, gamma, k);
      });
      const double reference = punctured_disk_greens_closed(alpha, gamma);
      return make_report("punctured_greens" + label,
                         "sum over preimages of G_H = (1/pi) ln |1 - e^-(a+g)| / |e^-g - e^-a|",
                         punctured_disk_greens_series(alpha, gamma, n), reference,
                         punctured_disk_greens_tail_bound(alpha, gamma, n) + slack(reference), cfg.seed, n);
    }));
    out.reports.push_back(timed([&] {
      const std::size_t n = terms_for(cfg, [&](std::size_t k) {
        return mirror_product_log_tail_bound(alpha, gamma, k);
      });
      const double reference = mirror_product_closed(alpha, gamma);
      const double tol = reference * std::expm1(mirror_product_log_tail_bound(alpha, gamma, n));
      return make_report("mirror_product" + label, "product over k of mirror-image distance ratios",
                         mirror_product(alpha, gamma, n), reference, tol + slack(reference), cfg.seed, n);
    }));
  }

  out.reports.push_back(timed([&] {
    const std::size_t n = terms_for(cfg, [](std::size_t k) { return sinh_product_rel_tail_bound(1.0, k); });
    const double reference = std::sinh(1.0);
    return make_report("sinh_product(alpha=1)", "sinh x = x prod (1 + x^2/(pi k)^2)", sinh_product(1.0, n),
                       reference, reference * sinh_product_rel_tail_bound(1.0, n) + slack(reference),
                       cfg.seed, n);
  }));
  out.reports.push_back(timed([&] {
    const double x = kPi / 2.0;
    const std::size_t n = terms_for(cfg, [&](std::size_t k) { return sine_product_rel_tail_bound(x, k); });
    return make_report("sine_product(x=pi/2)", "sin x = x prod (1 - x^2/(pi k)^2)", sine_product(x, n), 1.0,
                       sine_product_rel_tail_bound(x, n) + slack(1.0), cfg.seed, n);
  }));
  out.reports.push_back(timed([&] {
    const std::size_t n = terms_for(cfg, basel_from_product_tail_bound);
    return make_report("basel_from_product", "x^3 coefficient of the sine product gives pi^2/6",
                       basel_from_product(n), kBasel, basel_from_product_tail_bound(n) + slack(kBasel),
                       cfg.seed, n);
  }));

  const GridGeometry grid = GridGeometry::Annular();
  const ComplexPoint origin(0.0, 0.0);
  const std::size_t paths = cfg.occupation_paths();
  const auto t0 = Clock::now();
  const OccupationGrid occ = occupation_measure_disk(origin, cfg.dt, grid, paths, cfg.seed, cfg.workers);
  const double sim_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

  out.reports.push_back(timed([&] {
    const McEstimate total = occ.total_estimate();
    return make_report("occupation_total_time(a=0)", "integral of G_D(0, .) over the disk = 1/2", total.mean,
                       0.5, std::max(3.0 * total.std_error, 0.01), cfg.seed, paths);
  }));
  out.reports.back().runtime_ms += sim_ms;

  out.reports.push_back(timed([&] {
    // Largest ratio of |empirical - quadrature| to the per-cell allowance
    // 3 stderr + 5% of the quadrature value; the check passes when <= 1.
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.cell_count(); ++i) {
      const GridGeometry::Cell c = grid.cell(i);
      const double q = greens_disk_cell_integral(origin, c.lo1, c.hi1, c.lo0, c.hi0);
      const McEstimate e = occ.cell_estimate(i);
      const double allowance = 3.0 * e.std_error + 0.05 * q;
      worst = std::max(worst, std::abs(e.mean - q) / allowance);
      out.rows.push_back({"occupation_cell(a=0)", static_cast<double>(i), q, std::nullopt, e.mean});
    }
    return make_report("occupation_cells_vs_greens(a=0)",
                       "expected occupation of a cell = integral of G_D(0, .) over it", worst, 0.0, 1.0,
                       cfg.seed, paths);
  }));
  return out;
}

RunResult basel_routes(const RunConfig& cfg) {
  RunResult out;
  const auto start = Clock::now();
  const auto routes = basel_four_routes(cfg.truncation());
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  for (std::size_t i = 0; i < routes.size(); ++i) {
    const BaselEstimate& r = routes[i];
    auto rep = make_report("basel_route(" + r.route + ")", "sum 1/k^2 = pi^2/6", r.value, kBasel,
                           r.tail_bound + slack(kBasel), cfg.seed, r.terms);
    rep.runtime_ms = ms / static_cast<double>(routes.size());
    out.reports.push_back(rep);
    out.rows.push_back({"basel_route(" + r.route + ")", static_cast<double>(i), kBasel, r.value, std::nullopt});
  }
  return out;
}

void apply_overrides(const RunConfig& cfg, std::vector<VerificationReport>& reports) {
  for (VerificationReport& r : reports) {
    const auto it = cfg.tolerance_overrides.find(r.check_name);
    if (it == cfg.tolerance_overrides.end()) continue;
    r.tolerance = it->second;
    r.pass = r.abs_error <= r.tolerance;
  }
}

std::string csv_field(const std::optional<double>& v) {
  if (!v) return "";
  std::ostringstream os;
  os << std::setprecision(17) << *v;
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------

void RunConfig::validate() const {
  static const char* kCommands[] = {"proof1", "proof2", "proof3", "proof4", "all", "estimate-basel"};
  if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands)) {
    throw DomainError("unknown command: " + command);
  }
  if (samples && *samples < 1) throw DomainError("samples must be >= 1");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be positive");
  if (trunc && *trunc < 1) throw DomainError("trunc must be >= 1");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("eps must be positive");
  if (workers < 1) throw DomainError("workers must be >= 1");
  for (const auto& [name, tol] : tolerance_overrides) {
    if (!(tol >= 0.0)) throw DomainError("tolerance for " + name + " must be >= 0");
  }
}

TruncationPolicy RunConfig::truncation() const {
  return trunc ? TruncationPolicy::FixedN(*trunc) : TruncationPolicy::TailBound(eps);
}

void to_json(nlohmann::json& j, const RunConfig& c) {
  j = nlohmann::json{{"command", c.command},
                     {"seed", c.seed},
                     {"dt", c.dt},
                     {"eps", c.eps},
                     {"tolerances", c.tolerance_overrides},
                     {"json", c.json_path},
                     {"csv", c.csv_path},
                     {"workers", c.workers}};
  j["samples"] = c.samples ? nlohmann::json(*c.samples) : nlohmann::json(nullptr);
  j["trunc"] = c.trunc ? nlohmann::json(*c.trunc) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, RunConfig& c) {
  RunConfig d;
  d.command = j.value("command", d.command);
  d.seed = j.value("seed", d.seed);
  d.dt = j.value("dt", d.dt);
  d.eps = j.value("eps", d.eps);
  d.tolerance_overrides = j.value("tolerances", d.tolerance_overrides);
  d.json_path = j.value("json", d.json_path);
  d.csv_path = j.value("csv", d.csv_path);
  d.workers = j.value("workers", d.workers);
  if (j.contains("samples") && !j.at("samples").is_null()) d.samples = j.at("samples").get<std::size_t>();
  if (j.contains("trunc") && !j.at("trunc").is_null()) d.trunc = j.at("trunc").get<std::size_t>();
  c = std::move(d);
}

VerificationReport make_report(std::string name, std::string anchor, double computed,
                               double reference, double tolerance, std::uint64_t seed,
                               std::size_t n) {
  VerificationReport r;
  r.check_name = std::move(name);
  r.paper_anchor = std::move(anchor);
  r.computed_value = computed;
  r.reference_value = reference;
  r.abs_error = std::abs(computed - reference);
  r.rel_error = reference != 0.0 ? r.abs_error / std::abs(reference) : r.abs_error;
  r.tolerance = tolerance;
  r.pass = r.abs_error <= tolerance;
  r.seed = seed;
  r.n = n;
  return r;
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = nlohmann::json{{"check_name", r.check_name},
                     {"paper_anchor", r.paper_anchor},
                     {"computed_value", r.computed_value},
                     {"reference_value", r.reference_value},
                     {"abs_error", r.abs_error},
                     {"rel_error", r.rel_error},
                     {"tolerance", r.tolerance},
                     {"pass", r.pass},
                     {"runtime_ms", r.runtime_ms},
                     {"seed", r.seed},
                     {"n", r.n}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  j.at("check_name").get_to(r.check_name);
  j.at("paper_anchor").get_to(r.paper_anchor);
  j.at("computed_value").get_to(r.computed_value);
  j.at("reference_value").get_to(r.reference_value);
  j.at("abs_error").get_to(r.abs_error);
  j.at("rel_error").get_to(r.rel_error);
  j.at("tolerance").get_to(r.tolerance);
  j.at("pass").get_to(r.pass);
  j.at("runtime_ms").get_to(r.runtime_ms);
  j.at("seed").get_to(r.seed);
  j.at("n").get_to(r.n);
}

bool RunResult::all_pass() const {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.pass; });
}

void RunResult::append(RunResult other) {
  reports.insert(reports.end(), std::make_move_iterator(other.reports.begin()),
                 std::make_move_iterator(other.reports.end()));
  rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()),
              std::make_move_iterator(other.rows.end()));
  notes.insert(notes.end(), std::make_move_iterator(other.notes.begin()),
               std::make_move_iterator(other.notes.end()));
}

RunResult run_proof1(const RunConfig& cfg) { return exit_time_checks(cfg); }
RunResult run_proof2(const RunConfig& cfg) { return disk_exit_checks(cfg); }
RunResult run_proof3(const RunConfig& cfg) { return strip_exit_checks(cfg); }
RunResult run_proof4(const RunConfig& cfg) { return greens_checks(cfg); }

RunResult run_all(const RunConfig& cfg) {
  RunResult out = run_proof1(cfg);
  out.append(run_proof2(cfg));
  out.append(run_proof3(cfg));
  out.append(run_proof4(cfg));
  return out;
}

RunResult run_estimate_basel(const RunConfig& cfg) { return basel_routes(cfg); }

RunResult run_command(const RunConfig& cfg) {
  cfg.validate();
  RunResult out;
  if (cfg.command == "proof1") out = run_proof1(cfg);
  else if (cfg.command == "proof2") out = run_proof2(cfg);
  else if (cfg.command == "proof3") out = run_proof3(cfg);
  else if (cfg.command == "proof4") out = run_proof4(cfg);
  else if (cfg.command == "all") out = run_all(cfg);
  else out = run_estimate_basel(cfg);
  apply_overrides(cfg, out.reports);
  return out;
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports) {
  return nlohmann::json(reports);
}

void write_csv(std::ostream& os, const std::vector<CsvRow>& rows) {
  os << kCsvHeader << '\n';
  for (const CsvRow& r : rows) {
    os << r.experiment << ',' << csv_field(r.parameter) << ',' << csv_field(r.analytic) << ','
       << csv_field(r.series) << ',' << csv_field(r.empirical) << '\n';
  }
}

void print_table(std::ostream& os, const std::vector<VerificationReport>& reports) {
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.check_name.size());
  const auto saved = os.flags();
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  " << std::setw(22) << "computed"
     << std::setw(22) << "reference" << std::setw(12) << "abs_error" << std::setw(12) << "tolerance"
     << std::setw(6) << "pass" << "ms\n";
  for (const auto& r : reports) {
    std::ostringstream c, ref, err, tol;
    c << std::setprecision(15) << r.computed_value;
    ref << std::setprecision(15) << r.reference_value;
    err << std::setprecision(3) << r.abs_error;
    tol << std::setprecision(3) << r.tolerance;
    os << std::left << std::setw(static_cast<int>(width)) << r.check_name << "  " << std::setw(22) << c.str()
       << std::setw(22) << ref.str() << std::setw(12) << err.str() << std::setw(12) << tol.str()
       << std::setw(6) << (r.pass ? "PASS" : "FAIL") << std::fixed << std::setprecision(1) << r.runtime_ms
       << '\n';
    os.flags(saved);
  }
  const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
  os << reports.size() - static_cast<std::size_t>(failed) << "/" << reports.size() << " checks passed\n";
  os.flags(saved);
}

// ---------------------------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Brownian-motion verifications of sum 1/k^2 = pi^2/6", "conformal_bm"};
  app.set_version_flag("--version", "conformal_bm 0.1.0");

  std::string command;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  double dt = 0.0;
  std::size_t trunc = 0;
  double eps = 0.0;
  std::string json_path, csv_path, config_path;
  unsigned workers = 1;
  std::vector<std::string> tolerances;

  app.add_option("command", command, "proof1 | proof2 | proof3 | proof4 | all | estimate-basel")
      ->required()
      ->check(CLI::IsMember({"proof1", "proof2", "proof3", "proof4", "all", "estimate-basel"}));
  auto* o_samples = app.add_option("--samples", samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
  auto* o_seed = app.add_option("--seed", seed, std::string("Base seed (env ") + kSeedEnv + ")");
  auto* o_dt = app.add_option("--dt", dt, "Brownian time step")->check(CLI::PositiveNumber);
  auto* o_trunc = app.add_option("--trunc", trunc, "Fixed truncation N")->check(CLI::PositiveNumber);
  auto* o_eps = app.add_option("--eps", eps, "Tail-bound target for truncations")->check(CLI::PositiveNumber);
  o_trunc->excludes(o_eps);
  auto* o_json = app.add_option("--json", json_path, "Write reports as JSON");
  auto* o_csv = app.add_option("--csv", csv_path, "Write plot series as CSV");
  auto* o_workers = app.add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--config", config_path, "JSON run configuration; flags take precedence")
      ->check(CLI::ExistingFile);
  auto* o_tol = app.add_option("--tol", tolerances, "Tolerance override NAME=VALUE (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (e.get_name() == "CallForVersion" ? std::string(e.what()) + "\n" : app.help());
      return 0;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      cfg = nlohmann::json::parse(in).get<RunConfig>();
    }
    cfg.command = command;
    if (const char* env = std::getenv(kSeedEnv); env != nullptr && o_seed->count() == 0) {
      std::size_t used = 0;
      const std::string s(env);
      const unsigned long long v = std::stoull(s, &used, 10);
      if (used != s.size() || s.empty() || s.front() == '-') throw DomainError(std::string(kSeedEnv) + " must be a non-negative integer");
      cfg.seed = v;
    }
    if (o_seed->count() > 0) cfg.seed = seed;
    if (o_samples->count() > 0) cfg.samples = samples;
    if (o_dt->count() > 0) cfg.dt = dt;
    if (o_trunc->count() > 0) cfg.trunc = trunc;
    if (o_eps->count() > 0) {
      cfg.eps = eps;
      cfg.trunc.reset();
    }
    if (o_json->count() > 0) cfg.json_path = json_path;
    if (o_csv->count() > 0) cfg.csv_path = csv_path;
    if (o_workers->count() > 0) cfg.workers = workers;
    if (o_tol->count() > 0) {
      for (const std::string& t : tolerances) {
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0) throw DomainError("--tol expects NAME=VALUE, got " + t);
        cfg.tolerance_overrides[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
      }
    }
    cfg.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  RunResult result;
  try {
    result = run_command(cfg);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  for (const std::string& note : result.notes) err << "note: " << note << '\n';
  print_table(out, result.reports);
  if (!cfg.json_path.empty()) {
    std::ofstream f(cfg.json_path);
    f << reports_to_json(result.reports).dump(2) << '\n';
    if (!f) {
      err << "error: cannot write " << cfg.json_path << '\n';
      return 1;
    }
  }
  if (!cfg.csv_path.empty()) {
    std::ofstream f(cfg.csv_path);
    write_csv(f, result.rows);
    if (!f) {
      err << "error: cannot write " << cfg.csv_path << '\n';
      return 1;
    }
  }
  return result.all_pass() ? 0 : 1;
}

}  // namespace cbm::cli
