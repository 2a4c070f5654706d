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

// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cbm/maps.hpp"
#include "cbm/oracles.hpp"
#include "cbm/random.hpp"
#include "cbm/sampler.hpp"
#include "cbm/series.hpp"
#include "cbm/stats.hpp"
#include "experiments.hpp"

namespace {

using namespace cbm;
using Clock = std::chrono::steady_clock;

constexpr double kBasel = kPi * kPi / 6.0;
constexpr double kEps = 1e-8;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records one sub-check; the criterion passes only if every sub-check does.
  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    if (detail.tellp() > 0) detail << "; ";
    detail << what << (ok ? "" : " [violated]");
  }
};

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::size_t terms(const std::function<double(std::size_t)>& bound) {
  return TruncationPolicy::TailBound(kEps).resolve(bound);
}

void criterion1(Outcome& o) {
  const auto t0 = Clock::now();
  const std::size_t n = terms(odd_square_tail_bound);
  const double v = basel_from_odd(odd_square_sum(n));
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  o.check(std::abs(v - kBasel) <= 1e-7, "|basel_from_odd - pi^2/6| = " + num(std::abs(v - kBasel)) + " (N=" +
                                            std::to_string(n) + ")");
  o.check(secs < 1.0, "runtime " + num(secs) + " s");
}

void criterion2(Outcome& o) {
  constexpr std::size_t n_max = 201;
  const PowerSeriesCoeffs c = coeffs_extract(ConformalMap::ArcTan(), n_max, 0.99, 4096);
  const double got = exit_time_from_coeffs(c);
  double exact = 0.0;
  for (std::size_t k = (n_max + 1) / 2; k >= 1; --k) {
    const double d = 2.0 * static_cast<double>(k) - 1.0;
    exact += 1.0 / (d * d);
  }
  exact *= 0.5;
  o.check(std::abs(got - exact) <= 1e-8, "|E tau(extracted) - partial sum| = " + num(std::abs(got - exact)));
}

void criterion3(Outcome& o) {
  const auto t0 = Clock::now();
  const McEstimate e = estimate_exit_time_1d(kPi / 4.0, 0.0, 1e-4, 1'000'000, 0);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const double ref = kPi * kPi / 16.0;
  const double tol = std::max(3.0 * e.std_error, 0.01);
  o.check(std::abs(e.mean - ref) <= tol, "mean " + num(e.mean) + " vs " + num(ref) + " tol " + num(tol));
  o.check(secs < 60.0, "runtime " + num(secs) + " s");
}

void criterion4(Outcome& o) {
  double worst = 0.0;
  for (double a : {0.3, 0.5, 0.9}) {
    for (double theta : {kPi / 4.0, kPi / 2.0, kPi}) {
      const std::size_t n = terms([&](std::size_t k) { return punctured_disk_tail_bound(a, theta, k); });
      const double gap = std::abs(punctured_disk_exit_series(a, theta, n) -
                                  poisson_disk(ComplexPoint(a, 0.0), theta));
      worst = std::max(worst, gap);
    }
  }
  o.check(worst < 1e-7, "max |series - Poisson| = " + num(worst));
}

void criterion5(Outcome& o) {
  const double v = cosec_minus_pole(1e-4);
  o.check(std::abs(v - 1.0 / 12.0) <= 1e-9, "|cosec_minus_pole(1e-4) - 1/12| = " + num(std::abs(v - 1.0 / 12.0)));
}

void criterion6(Outcome& o) {
  double worst = 0.0;
  for (double a : {-0.9, -0.5, 0.0, 0.5, 0.9}) {
    const Bracket b = reflection_series_bracketed(a, 1e-10);
    worst = std::max(worst, std::abs(b.midpoint() - strip_exit_density_closed(a)));
  }
  o.check(worst <= 1e-9, "max |bracket midpoint - closed form| = " + num(worst));
  // At a = 0 the series is (1/pi) times the Leibniz series.
  const double leibniz = kPi * reflection_series_bracketed(0.0, 1e-10 / kPi).midpoint();
  o.check(std::abs(leibniz - kPi / 4.0) <= 1e-9, "Leibniz " + num(leibniz) + ", error " +
                                                     num(std::abs(leibniz - kPi / 4.0)));
}

void criterion7(Outcome& o) {
  const double ref = kPi * kPi / 8.0;
  bool within = true;
  for (std::size_t n : {1u, 10u, 100u, 1000u, 100000u}) {
    within = within && std::abs(reflection_series_derivative(0.0, n) - ref) <=
                           reflection_series_derivative_tail_bound(0.0, n);
  }
  o.check(within, "partial sums within tail bound of pi^2/8");
  const std::size_t n = terms([](std::size_t k) { return reflection_series_derivative_tail_bound(0.0, k); });
  const double basel = 4.0 / 3.0 * reflection_series_derivative(0.0, n);
  o.check(std::abs(basel - kBasel) <= 1e-7, "|(4/3) value - pi^2/6| = " + num(std::abs(basel - kBasel)));
}

void criterion8(Outcome& o) {
  const ConformalMap phi = ConformalMap::DiskToUpperHalf();
  PhiloxStream rng({0, 0});
  auto point = [&] {
    const double r = 0.99 * std::sqrt(rng.uniform());
    const double t = 2.0 * kPi * rng.uniform();
    return ComplexPoint(r * std::cos(t), r * std::sin(t));
  };
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const ComplexPoint a = point();
    const ComplexPoint z = point();
    worst = std::max(worst, std::abs(greens_disk(a, z) - greens_halfplane(map_eval(phi, a), map_eval(phi, z))));
  }
  o.check(worst <= 1e-12, "max transport gap " + num(worst));

  double worst_p = 0.0;
  for (const auto& [alpha, gamma] : {std::pair{1.0, 2.0}, std::pair{0.5, 0.7}, std::pair{2.0, 3.0}}) {
    const std::size_t n = terms([&](std::size_t k) { return punctured_disk_greens_tail_bound(alpha, gamma, k); });
    const double closed = std::log(std::abs(1.0 - std::exp(-(alpha + gamma))) /
                                   std::abs(std::exp(-gamma) - std::exp(-alpha))) / kPi;
    worst_p = std::max(worst_p, std::abs(punctured_disk_greens_series(alpha, gamma, n) - closed));
  }
  o.check(worst_p <= 1e-7, "max punctured series gap " + num(worst_p));
}

void criterion9(Outcome& o) {
  constexpr std::size_t n = 100'000;
  const double rel = std::abs(sinh_product(1.0, n) / std::sinh(1.0) - 1.0);
  const double bound = std::expm1(1.0 / (kPi * kPi * static_cast<double>(n)));
  o.check(rel <= bound, "sinh relative error " + num(rel) + " vs bound " + num(bound));
  const double b = basel_from_product(1'000'000);
  o.check(std::abs(b - kBasel) <= 1e-6, "|basel_from_product - pi^2/6| = " + num(std::abs(b - kBasel)));
}

void criterion10(Outcome& o) {
  constexpr std::size_t n = 100'000;
  const ComplexPoint a(0.5, 0.0);
  const auto angles = sample_exit_disk_angles(a, n, 0);
  const double ks_disk = ks_test(angles, [&](double t) { return poisson_disk_cdf(a, t); }).p_value;
  o.check(ks_disk > 0.01, "disk KS p " + num(ks_disk));
  const double chi = chi_square_circle(angles, [&](double t) { return poisson_disk(a, t); }, 32).p_value;
  o.check(chi > 0.001, "disk chi-square p " + num(chi));

  const auto xs = sample_exit_halfplane_batch(1.0, n, 0);
  const double ks_half = ks_test(xs, [](double x) { return cauchy_halfplane_cdf(1.0, x); }).p_value;
  o.check(ks_half > 0.01, "half-plane KS p " + num(ks_half));

  const auto exits = sample_exit_strip_batch(0.5, n, 0);
  const auto right = std::count_if(exits.begin(), exits.end(), [](const ComplexPoint& z) { return z.re() > 0.0; });
  const double p = strip_right_exit_probability(0.5);
  const double freq = static_cast<double>(right) / static_cast<double>(n);
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  o.check(std::abs(freq - p) <= 3.0 * sigma, "strip right-exit " + num(freq) + " vs " + num(p));
}

void criterion11(Outcome& o) {
  const GridGeometry grid = GridGeometry::Annular();
  const ComplexPoint origin(0.0, 0.0);
  const OccupationGrid occ = occupation_measure_disk(origin, 1e-4, grid, 100'000, 0);
  std::size_t bad = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.cell_count(); ++i) {
    const GridGeometry::Cell c = grid.cell(i);
    const double q = greens_disk_cell_integral(origin, c.lo1, c.hi1, c.lo0, c.hi0);
    const McEstimate e = occ.cell_estimate(i);
    const double ratio = std::abs(e.mean - q) / (3.0 * e.std_error + 0.05 * q);
    worst = std::max(worst, ratio);
    if (ratio > 1.0) ++bad;
  }
  o.check(bad == 0, std::to_string(bad) + " of " + std::to_string(grid.cell_count()) +
                        " cells outside 3 stderr + 5% (worst ratio " + num(worst) + ")");
  const McEstimate total = occ.total_estimate();
  const double tol = std::max(3.0 * total.std_error, 0.01);
  o.check(std::abs(total.mean - 0.5) <= tol, "total time " + num(total.mean) + " vs 0.5 tol " + num(tol));
}

nlohmann::json run_all_json(unsigned workers, const std::filesystem::path& file, int& code) {
  const std::string w = std::to_string(workers);
  const std::string f = file.string();
  const char* argv[] = {"conformal_bm", "all", "--seed", "0", "--workers", w.c_str(), "--json", f.c_str()};
  std::ostringstream out;
  std::ostringstream err;
  code = cbm::cli::run_cli(8, argv, out, err);
  std::ifstream in(file);
  nlohmann::json j = nlohmann::json::parse(in);
  for (auto& rep : j) rep.erase("runtime_ms");
  return j;
}

void criterion12(Outcome& o) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto f1 = dir / "cbm_acceptance_w1.json";
  const auto f8 = dir / "cbm_acceptance_w8.json";
  int c1 = 0;
  int c8 = 0;
  const std::string j1 = run_all_json(1, f1, c1).dump(2);
  const std::string j8 = run_all_json(8, f8, c8).dump(2);
  std::filesystem::remove(f1);
  std::filesystem::remove(f8);
  o.check(j1 == j8, "reports with --workers 1 and 8 " + std::string(j1 == j8 ? "identical" : "differ"));
  o.check(c1 == c8, "exit codes " + std::to_string(c1) + " and " + std::to_string(c8));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria = {
      {"Basel via odd squares", criterion1},
      {"exit time from extracted arctan coefficients", criterion2},
      {"strip exit-time Monte Carlo", criterion3},
      {"wrapped series vs Poisson kernel", criterion4},
      {"cosecant limit at theta -> 0", criterion5},
      {"reflection series vs strip exit density", criterion6},
      {"differentiated reflection series", criterion7},
      {"Green's function transport and punctured series", criterion8},
      {"sinh and sine products", criterion9},
      {"exit-law goodness of fit", criterion10},
      {"occupation measure vs Green's function", criterion11},
      {"determinism across worker counts", criterion12},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("%s criterion %zu: %s (%s) [%.2f s]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
