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

#ifndef CBM_RANDOM_HPP_
#define CBM_RANDOM_HPP_

#include <array>
#include <cstdint>
#include <limits>

namespace cbm {

// Identifies one independent random stream: the run seed and the index of
// the path (or sample) that owns it.
struct RandomStreamKey {
  std::uint64_t seed = 0;
  std::uint64_t index = 0;

  friend bool operator==(const RandomStreamKey&, const RandomStreamKey&) = default;
};

// Philox4x32-10 block function (Salmon et al., SC'11).
using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

inline PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) {
  constexpr std::uint32_t kM0 = 0xD2511F53u;
  constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u;
  constexpr std::uint32_t kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kW0;
      key[1] += kW1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
  }
  return ctr;
}

/// A uniform random bit generator over one (seed, index) stream.
///
/// The Philox key is the seed and the high half of the counter is the index;
/// the low half counts blocks within the stream. Distinct keys therefore read
/// disjoint parts of the same bijection, and a stream can be recreated from
/// its key alone.
class PhiloxStream {
 public:
  using result_type = std::uint32_t;

  explicit PhiloxStream(RandomStreamKey key)
      : key_{static_cast<std::uint32_t>(key.seed), static_cast<std::uint32_t>(key.seed >> 32)},
        index_(key.index) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (pos_ == kBufferSize) refill();
    return buffer_[pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = (*this)();
    return (hi << 32) | (*this)();
  }

  // Uniform on the open interval (0, 1) with 53 random bits.
  double uniform() { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

 private:
  static constexpr int kBufferSize = 8;

  // Two consecutive blocks per refill; the independent rounds interleave.
  void refill() {
    const std::uint64_t next = block_ + 1;
    const PhiloxCounter a = philox4x32_10(counter(block_), key_);
    const PhiloxCounter b = philox4x32_10(counter(next), key_);
    for (int i = 0; i < 4; ++i) {
      buffer_[i] = a[i];
      buffer_[4 + i] = b[i];
    }
    block_ += 2;
    pos_ = 0;
  }

  PhiloxCounter counter(std::uint64_t block) const {
    return {static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32),
            static_cast<std::uint32_t>(index_), static_cast<std::uint32_t>(index_ >> 32)};
  }

  PhiloxKey key_;
  std::uint64_t index_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, kBufferSize> buffer_{};
  int pos_ = kBufferSize;
};

}  // namespace cbm

#endif  // CBM_RANDOM_HPP_
