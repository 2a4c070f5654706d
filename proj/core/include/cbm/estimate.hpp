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

#ifndef CBM_ESTIMATE_HPP_
#define CBM_ESTIMATE_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace cbm {

// A Monte Carlo result. (`stderr` is a macro in <cstdio>, hence std_error.)
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

// Welford accumulator with Chan's merge. Merging in a fixed tree order gives
// bit-identical results for a fixed partition of the data.
struct RunningMoments {
  std::size_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const RunningMoments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double na = static_cast<double>(count);
    const double nb = static_cast<double>(o.count);
    const double n = na + nb;
    const double delta = o.mean - mean;
    mean += delta * nb / n;
    m2 += o.m2 + delta * delta * na * nb / n;
    count += o.count;
  }

  double variance() const { return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0; }

  McEstimate estimate(std::uint64_t seed) const {
    const double se = count > 0 ? std::sqrt(variance() / static_cast<double>(count)) : 0.0;
    return McEstimate{mean, se, count, seed};
  }
};

}  // namespace cbm

#endif  // CBM_ESTIMATE_HPP_
