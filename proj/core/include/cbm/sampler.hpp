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

#ifndef CBM_SAMPLER_HPP_
#define CBM_SAMPLER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cbm/estimate.hpp"
#include "cbm/geometry.hpp"
#include "cbm/maps.hpp"
#include "cbm/random.hpp"

// Monte Carlo engine. Exit points are sampled exactly by pushing a uniform
// angle through a conformal map, so the sample_exit_* functions carry no time
// step. Exit times and occupation measures come from Euler paths with step
// variance dt per coordinate and no boundary-overshoot correction; their
// estimates are biased upward by roughly 0.5826 sqrt(dt) in the distance to
// the boundary.
//
// Every path or sample with index i draws from the stream (seed, i), and
// estimators reduce in fixed blocks of path indices, so results do not depend
// on the worker count.

namespace cbm {

inline constexpr std::size_t kDefaultMaxSteps = 200'000'000;

struct PathConfig {
  double dt = 1e-4;
  std::size_t max_steps = kDefaultMaxSteps;
  DomainSpec domain = DomainSpec::Disk(1.0);
  ComplexPoint start{};

  // Throws DomainError unless dt > 0 and start lies inside the domain.
  void validate() const;
};

// ---- Exact exit-point samplers ---------------------------------------------

// Exit point of the unit disk from a: psi^{-1}(e^{i theta}) with theta
// uniform and psi(z) = (z - a)/(1 - conj(a) z).
ComplexPoint sample_exit_disk(const ComplexPoint& a, RandomStreamKey key);
// Exit point of the upper half-plane from v i: v tan(pi (u - 1/2)).
double sample_exit_halfplane(double v, RandomStreamKey key);
/// Exit point of W = {|Re z| < 1} from the real start a: a disk exit sample w
/// from tan(pi a / 4), mapped back by (4/pi) atan. On the unit circle the
/// principal atan is evaluated in its exact boundary form
/// atan(e^{i t}) = sign(cos t) pi/4 + (i/2) atanh(sin t).
ComplexPoint sample_exit_strip(double a, RandomStreamKey key);

// Batches over stream indices 0..n-1.
std::vector<double> sample_exit_disk_angles(const ComplexPoint& a, std::size_t n, std::uint64_t seed);
std::vector<double> sample_exit_halfplane_batch(double v, std::size_t n, std::uint64_t seed);
std::vector<ComplexPoint> sample_exit_strip_batch(double a, std::size_t n, std::uint64_t seed);

// ---- Path simulation ---------------------------------------------------------

/// Euler walk of one Brownian coordinate from a until |x| >= h; returns the
/// step count times dt. The planar strip exit time equals this, since only the
/// real part decides the exit. Throws MaxStepsExceeded.
double simulate_exit_time_1d(double halfwidth, double a, double dt, RandomStreamKey key,
                             std::size_t max_steps = kDefaultMaxSteps);
McEstimate estimate_exit_time_1d(double halfwidth, double a, double dt, std::size_t n,
                                 std::uint64_t seed, unsigned workers = 1,
                                 std::size_t max_steps = kDefaultMaxSteps);

// Planar Euler path: the positions B_0, ..., B_{K-1} visited before the
// first position outside the domain. The exit time is K dt.
std::vector<ComplexPoint> simulate_path(const PathConfig& cfg, RandomStreamKey key);
double simulate_exit_time(const PathConfig& cfg, RandomStreamKey key);

// Left-endpoint sum of |f'(B_k)|^2 dt over the path.
double time_change_integral(const ConformalMap& m, std::span<const ComplexPoint> path, double dt);
// Mean of the time change sigma(tau) over n simulated paths.
McEstimate estimate_time_change(const ConformalMap& m, const PathConfig& cfg, std::size_t n,
                                std::uint64_t seed, unsigned workers = 1);

// ---- Occupation measure ------------------------------------------------------

class GridGeometry {
 public:
  enum class Kind { kAnnular, kRectangular };

  // n_theta angular x n_r radial cells over the disk of the given radius,
  // radial edges uniform in r, angular edges starting at -pi.
  static GridGeometry Annular(std::size_t n_theta = 16, std::size_t n_r = 8, double radius = 1.0);
  // nx x ny cells over the window [x0, x1] x [y0, y1].
  static GridGeometry Rectangular(double x0, double x1, double y0, double y1, std::size_t nx,
                                  std::size_t ny);

  Kind kind() const { return kind_; }
  std::size_t cell_count() const { return n0_ * n1_; }
  // Angular (or x) and radial (or y) cell counts.
  std::size_t n0() const { return n0_; }
  std::size_t n1() const { return n1_; }

  // Row-major index (radial/y index major), or -1 outside the grid.
  long long index(Complex z) const;

  struct Cell {
    double lo0, hi0;  // theta range, or x range
    double lo1, hi1;  // r range, or y range
  };
  Cell cell(std::size_t i) const;

 private:
  GridGeometry(Kind kind, double lo0, double hi0, double lo1, double hi1, std::size_t n0,
               std::size_t n1);

  Kind kind_;
  double lo0_, hi0_, lo1_, hi1_;
  std::size_t n0_, n1_;
};

// Expected occupation time per cell, with per-cell standard errors over
// paths. The total time is the sum over cells.
class OccupationGrid {
 public:
  OccupationGrid(GridGeometry geometry, std::vector<RunningMoments> cells, std::uint64_t seed);

  const GridGeometry& geometry() const { return geometry_; }
  std::size_t paths() const { return paths_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t cell_count() const { return cells_.size(); }

  // Time summed over all paths.
  double accumulated(std::size_t i) const;
  McEstimate cell_estimate(std::size_t i) const;
  // Sum over cells of the accumulated time.
  double total_time() const;
  // Mean per path of the total time, with its standard error.
  McEstimate total_estimate() const { return total_; }

  void set_total(RunningMoments total) { total_ = total.estimate(seed_); }

 private:
  GridGeometry geometry_;
  std::vector<RunningMoments> cells_;
  std::size_t paths_;
  std::uint64_t seed_;
  McEstimate total_{};
};

OccupationGrid occupation_measure(const PathConfig& cfg, const GridGeometry& grid, std::size_t n,
                                  std::uint64_t seed, unsigned workers = 1);
OccupationGrid occupation_measure_disk(const ComplexPoint& a, double dt, const GridGeometry& grid,
                                       std::size_t n, std::uint64_t seed, unsigned workers = 1);

}  // namespace cbm

#endif  // CBM_SAMPLER_HPP_
