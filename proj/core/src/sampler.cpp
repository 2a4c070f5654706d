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

#include "cbm/sampler.hpp"

#include <cmath>
#include <utility>

#include <boost/random/normal_distribution.hpp>

#include "cbm/error.hpp"
#include "cbm/parallel.hpp"

namespace cbm {
namespace {

// Single-precision ziggurat draws, widened to double. One 32-bit word per
// increment; the 2^-24 quantization is far below the time-step bias.
class Normal {
 public:
  double operator()(PhiloxStream& rng) { return static_cast<double>(dist_(rng)); }

 private:
  boost::random::normal_distribution<float> dist_;
};

void require_positive_dt(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("time step must be positive");
}

[[noreturn]] void throw_max_steps(std::size_t max_steps) {
  throw MaxStepsExceeded("path did not exit within " + std::to_string(max_steps) + " steps");
}

// Calls visit(z) for every position before the exit; returns the step count.
template <class Visit>
std::size_t walk(const PathConfig& cfg, RandomStreamKey key, Visit&& visit) {
  PhiloxStream rng(key);
  Normal normal;
  const double sd = std::sqrt(cfg.dt);
  double x = cfg.start.re();
  double y = cfg.start.im();
  std::size_t steps = 0;
  while (cfg.domain.contains(Complex(x, y))) {
    if (steps == cfg.max_steps) throw_max_steps(cfg.max_steps);
    visit(Complex(x, y));
    x += sd * normal(rng);
    y += sd * normal(rng);
    ++steps;
  }
  return steps;
}

struct MomentsMerge {
  void operator()(RunningMoments& left, const RunningMoments& right) const { left.merge(right); }
};

}  // namespace

void PathConfig::validate() const {
  require_positive_dt(dt);
  if (!domain.contains(start)) throw DomainError("PathConfig: start must lie inside the domain");
}

ComplexPoint sample_exit_disk(const ComplexPoint& a, RandomStreamKey key) {
  if (!(a.abs() < 1.0)) throw DomainError("sample_exit_disk: |a| must be < 1");
  PhiloxStream rng(key);
  const double theta = 2.0 * kPi * rng.uniform() - kPi;
  const Complex e = std::polar(1.0, theta);
  const Complex av = a.value();
  return ComplexPoint((e + av) / (1.0 + std::conj(av) * e));
}

double sample_exit_halfplane(double v, RandomStreamKey key) {
  if (!(v > 0.0)) throw DomainError("sample_exit_halfplane: v must be positive");
  PhiloxStream rng(key);
  return v * std::tan(kPi * (rng.uniform() - 0.5));
}

ComplexPoint sample_exit_strip(double a, RandomStreamKey key) {
  if (!(a > -1.0 && a < 1.0)) throw DomainError("sample_exit_strip: a must be in (-1,1)");
  const Complex b{std::tan(kPi * a / 4.0), 0.0};
  PhiloxStream rng(key);
  for (;;) {
    const Complex e = std::polar(1.0, 2.0 * kPi * rng.uniform() - kPi);
    const Complex w = (e + b) / (1.0 + std::conj(b) * e);
    const double s = w.imag() / std::abs(w);
    // w = +-i maps to infinity; probability zero, redraw from the same stream.
    if (std::abs(s) >= 1.0) continue;
    const double side = w.real() >= 0.0 ? 1.0 : -1.0;
    return ComplexPoint(side, (2.0 / kPi) * std::atanh(s));
  }
}

std::vector<double> sample_exit_disk_angles(const ComplexPoint& a, std::size_t n,
                                            std::uint64_t seed) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::arg(sample_exit_disk(a, {seed, i}).value());
  }
  return out;
}

std::vector<double> sample_exit_halfplane_batch(double v, std::size_t n, std::uint64_t seed) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = sample_exit_halfplane(v, {seed, i});
  return out;
}

std::vector<ComplexPoint> sample_exit_strip_batch(double a, std::size_t n, std::uint64_t seed) {
  std::vector<ComplexPoint> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_exit_strip(a, {seed, i}));
  return out;
}

double simulate_exit_time_1d(double halfwidth, double a, double dt, RandomStreamKey key,
                             std::size_t max_steps) {
  if (!(std::abs(a) < halfwidth)) throw DomainError("simulate_exit_time_1d: need |a| < h");
  require_positive_dt(dt);
  PhiloxStream rng(key);
  Normal normal;
  const double sd = std::sqrt(dt);
  double x = a;
  std::size_t steps = 0;
  while (std::abs(x) < halfwidth) {
    if (steps == max_steps) throw_max_steps(max_steps);
    x += sd * normal(rng);
    ++steps;
  }
  return static_cast<double>(steps) * dt;
}

McEstimate estimate_exit_time_1d(double halfwidth, double a, double dt, std::size_t n,
                                 std::uint64_t seed, unsigned workers, std::size_t max_steps) {
  if (!(std::abs(a) < halfwidth)) throw DomainError("estimate_exit_time_1d: need |a| < h");
  require_positive_dt(dt);
  auto block = [&](std::size_t begin, std::size_t end) {
    RunningMoments m;
    for (std::size_t i = begin; i < end; ++i) {
      m.add(simulate_exit_time_1d(halfwidth, a, dt, {seed, i}, max_steps));
    }
    return m;
  };
  return deterministic_reduce<RunningMoments>(n, workers, block, MomentsMerge{}).estimate(seed);
}

std::vector<ComplexPoint> simulate_path(const PathConfig& cfg, RandomStreamKey key) {
  cfg.validate();
  std::vector<ComplexPoint> path;
  walk(cfg, key, [&path](Complex z) { path.emplace_back(z); });
  return path;
}

double simulate_exit_time(const PathConfig& cfg, RandomStreamKey key) {
  cfg.validate();
  return static_cast<double>(walk(cfg, key, [](Complex) {})) * cfg.dt;
}

double time_change_integral(const ConformalMap& m, std::span<const ComplexPoint> path, double dt) {
  require_positive_dt(dt);
  double sigma = 0.0;
  for (const ComplexPoint& z : path) sigma += map_derivative_abs_sq(m, z) * dt;
  return sigma;
}

McEstimate estimate_time_change(const ConformalMap& m, const PathConfig& cfg, std::size_t n,
                                std::uint64_t seed, unsigned workers) {
  cfg.validate();
  auto block = [&](std::size_t begin, std::size_t end) {
    RunningMoments moments;
    for (std::size_t i = begin; i < end; ++i) {
      double sigma = 0.0;
      walk(cfg, {seed, i}, [&](Complex z) { sigma += std::norm(m.derivative(z)) * cfg.dt; });
      moments.add(sigma);
    }
    return moments;
  };
  return deterministic_reduce<RunningMoments>(n, workers, block, MomentsMerge{}).estimate(seed);
}

GridGeometry::GridGeometry(Kind kind, double lo0, double hi0, double lo1, double hi1,
                           std::size_t n0, std::size_t n1)
    : kind_(kind), lo0_(lo0), hi0_(hi0), lo1_(lo1), hi1_(hi1), n0_(n0), n1_(n1) {
  if (n0 == 0 || n1 == 0 || !(lo0 < hi0) || !(lo1 < hi1)) {
    throw DomainError("GridGeometry: empty or degenerate grid");
  }
}

GridGeometry GridGeometry::Annular(std::size_t n_theta, std::size_t n_r, double radius) {
  if (!(radius > 0.0)) throw DomainError("GridGeometry: radius must be positive");
  return GridGeometry(Kind::kAnnular, -kPi, kPi, 0.0, radius, n_theta, n_r);
}

GridGeometry GridGeometry::Rectangular(double x0, double x1, double y0, double y1, std::size_t nx,
                                       std::size_t ny) {
  return GridGeometry(Kind::kRectangular, x0, x1, y0, y1, nx, ny);
}

long long GridGeometry::index(Complex z) const {
  double c0;
  double c1;
  if (kind_ == Kind::kAnnular) {
    c1 = std::abs(z);
    if (c1 >= hi1_) return -1;
    c0 = std::atan2(z.imag(), z.real());
  } else {
    c0 = z.real();
    c1 = z.imag();
    if (c0 < lo0_ || c0 >= hi0_ || c1 < lo1_ || c1 >= hi1_) return -1;
  }
  auto bin = [](double c, double lo, double hi, std::size_t n) {
    const auto k = static_cast<std::size_t>((c - lo) / (hi - lo) * static_cast<double>(n));
    return std::min(k, n - 1);
  };
  return static_cast<long long>(bin(c1, lo1_, hi1_, n1_) * n0_ + bin(c0, lo0_, hi0_, n0_));
}

GridGeometry::Cell GridGeometry::cell(std::size_t i) const {
  if (i >= cell_count()) throw DomainError("GridGeometry: cell index out of range");
  const std::size_t i0 = i % n0_;
  const std::size_t i1 = i / n0_;
  const double w0 = (hi0_ - lo0_) / static_cast<double>(n0_);
  const double w1 = (hi1_ - lo1_) / static_cast<double>(n1_);
  return Cell{lo0_ + w0 * static_cast<double>(i0), lo0_ + w0 * static_cast<double>(i0 + 1),
              lo1_ + w1 * static_cast<double>(i1), lo1_ + w1 * static_cast<double>(i1 + 1)};
}

OccupationGrid::OccupationGrid(GridGeometry geometry, std::vector<RunningMoments> cells,
                               std::uint64_t seed)
    : geometry_(geometry),
      cells_(std::move(cells)),
      paths_(cells_.empty() ? 0 : cells_.front().count),
      seed_(seed) {}

double OccupationGrid::accumulated(std::size_t i) const {
  return cells_.at(i).mean * static_cast<double>(cells_.at(i).count);
}

McEstimate OccupationGrid::cell_estimate(std::size_t i) const {
  return cells_.at(i).estimate(seed_);
}

double OccupationGrid::total_time() const {
  double t = 0.0;
  for (std::size_t i = 0; i < cells_.size(); ++i) t += accumulated(i);
  return t;
}

OccupationGrid occupation_measure(const PathConfig& cfg, const GridGeometry& grid, std::size_t n,
                                  std::uint64_t seed, unsigned workers) {
  cfg.validate();
  struct Acc {
    std::vector<RunningMoments> cells;
    RunningMoments total;
  };
  const std::size_t n_cells = grid.cell_count();
  auto block = [&](std::size_t begin, std::size_t end) {
    Acc acc{std::vector<RunningMoments>(n_cells), {}};
    std::vector<double> local(n_cells);
    for (std::size_t i = begin; i < end; ++i) {
      std::fill(local.begin(), local.end(), 0.0);
      walk(cfg, {seed, i}, [&](Complex z) {
        const long long c = grid.index(z);
        if (c >= 0) local[static_cast<std::size_t>(c)] += cfg.dt;
      });
      double total = 0.0;
      for (std::size_t c = 0; c < n_cells; ++c) {
        acc.cells[c].add(local[c]);
        total += local[c];
      }
      acc.total.add(total);
    }
    return acc;
  };
  auto merge = [](Acc& left, const Acc& right) {
    for (std::size_t c = 0; c < left.cells.size(); ++c) left.cells[c].merge(right.cells[c]);
    left.total.merge(right.total);
  };
  Acc acc = deterministic_reduce<Acc>(n, workers, block, merge);
  if (acc.cells.empty()) acc.cells.resize(n_cells);
  OccupationGrid out(grid, std::move(acc.cells), seed);
  out.set_total(acc.total);
  return out;
}

OccupationGrid occupation_measure_disk(const ComplexPoint& a, double dt, const GridGeometry& grid,
                                       std::size_t n, std::uint64_t seed, unsigned workers) {
  if (!(a.abs() < 1.0)) throw DomainError("occupation_measure_disk: |a| must be < 1");
  PathConfig cfg;
  cfg.dt = dt;
  cfg.domain = DomainSpec::Disk(1.0);
  cfg.start = a;
  return occupation_measure(cfg, grid, n, seed, workers);
}

}  // namespace cbm
