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

#include "cbm/maps.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cbm/error.hpp"

namespace cbm {
namespace {

constexpr double kPoleRadius = 1e-12;
constexpr double kDomainSlack = 1e-12;
constexpr double kCurveTolerance = 1e-10;
const Complex kI{0.0, 1.0};

}  // namespace

ConformalMap ConformalMap::DiskAutomorphism(ComplexPoint a) {
  if (!(a.abs() < 1.0)) throw DomainError("DiskAutomorphism: |a| must be < 1");
  return ConformalMap(Kind::kDiskAutomorphism, a.value());
}

ConformalMap ConformalMap::Scale(double v) {
  if (!std::isfinite(v) || v == 0.0) throw DomainError("Scale: factor must be finite and nonzero");
  return ConformalMap(Kind::kScale, v);
}

std::vector<ConformalMap> ConformalMap::catalog_samples() {
  return {Tan4(),
          MobiusRightHalfToDisk(),
          DiskToUpperHalf(),
          UpperHalfToDisk(),
          DiskAutomorphism(ComplexPoint(0.3, -0.4)),
          ExpWrap(),
          Scale(2.0),
          ArcTan()};
}

std::string ConformalMap::name() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kTan4:
      return "Tan4";
    case Kind::kMobiusRightHalfToDisk:
      return "MobiusRightHalfToDisk";
    case Kind::kDiskToUpperHalf:
      return "DiskToUpperHalf";
    case Kind::kUpperHalfToDisk:
      return "UpperHalfToDisk";
    case Kind::kDiskAutomorphism:
      os << "DiskAutomorphism(" << param_.real() << "," << param_.imag() << ")";
      return os.str();
    case Kind::kExpWrap:
      return "ExpWrap";
    case Kind::kScale:
      os << "Scale(" << param_.real() << ")";
      return os.str();
    case Kind::kArcTan:
      return "ArcTan";
  }
  return "?";
}

bool ConformalMap::in_domain(Complex z) const {
  // Half-plane tests scale the slack with |z|: inverses near a pole return
  // large points whose small component carries only relative accuracy.
  const double rel_slack = kDomainSlack * std::max(1.0, std::abs(z));
  switch (kind_) {
    case Kind::kTan4:
      return std::abs(z.real()) <= 1.0 + kDomainSlack;
    case Kind::kMobiusRightHalfToDisk:
      return z.real() >= -rel_slack;
    case Kind::kDiskToUpperHalf:
    case Kind::kDiskAutomorphism:
    case Kind::kArcTan:
      return std::abs(z) <= 1.0 + kDomainSlack;
    case Kind::kUpperHalfToDisk:
    case Kind::kExpWrap:
      return z.imag() >= -rel_slack;
    case Kind::kScale:
      return true;
  }
  return false;
}

bool ConformalMap::near_pole(Complex z) const {
  switch (kind_) {
    case Kind::kTan4: {
      // cos(pi z / 4) vanishes at z = 2 + 4k.
      const double k = std::round((z.real() - 2.0) / 4.0);
      return std::abs(z - Complex(2.0 + 4.0 * k, 0.0)) < kPoleRadius;
    }
    case Kind::kMobiusRightHalfToDisk:
    case Kind::kDiskToUpperHalf:
      return std::abs(z + 1.0) < kPoleRadius;
    case Kind::kUpperHalfToDisk:
      return std::abs(z + kI) < kPoleRadius;
    case Kind::kDiskAutomorphism:
      return param_ != 0.0 && std::abs(z - 1.0 / std::conj(param_)) < kPoleRadius;
    case Kind::kArcTan:
      return std::abs(z - kI) < kPoleRadius || std::abs(z + kI) < kPoleRadius;
    case Kind::kExpWrap:
    case Kind::kScale:
      return false;
  }
  return false;
}

void ConformalMap::check(Complex z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(name() + ": non-finite argument");
  }
  if (near_pole(z)) throw PoleError(name() + ": argument at a pole");
  if (!in_domain(z)) throw DomainError(name() + ": argument outside the source domain");
}

Complex ConformalMap::operator()(Complex z) const {
  check(z);
  switch (kind_) {
    case Kind::kTan4:
      return std::tan(kPi * z / 4.0);
    case Kind::kMobiusRightHalfToDisk:
    case Kind::kDiskToUpperHalf:
      return -kI * (z - 1.0) / (z + 1.0);
    case Kind::kUpperHalfToDisk:
      return (z - kI) / (z + kI);
    case Kind::kDiskAutomorphism:
      return (z - param_) / (1.0 - std::conj(param_) * z);
    case Kind::kExpWrap:
      return std::exp(kI * z);
    case Kind::kScale:
      return param_.real() * z;
    case Kind::kArcTan:
      return std::atan(z);
  }
  return {};
}

Complex ConformalMap::derivative(Complex z) const {
  check(z);
  switch (kind_) {
    case Kind::kTan4: {
      const Complex c = std::cos(kPi * z / 4.0);
      return (kPi / 4.0) / (c * c);
    }
    case Kind::kMobiusRightHalfToDisk:
    case Kind::kDiskToUpperHalf:
      return -2.0 * kI / ((z + 1.0) * (z + 1.0));
    case Kind::kUpperHalfToDisk:
      return 2.0 * kI / ((z + kI) * (z + kI));
    case Kind::kDiskAutomorphism: {
      const Complex d = 1.0 - std::conj(param_) * z;
      return (1.0 - std::norm(param_)) / (d * d);
    }
    case Kind::kExpWrap:
      return kI * std::exp(kI * z);
    case Kind::kScale:
      return param_.real();
    case Kind::kArcTan:
      return 1.0 / (1.0 + z * z);
  }
  return {};
}

Complex ConformalMap::inverse(Complex w) const {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError(name() + ": non-finite argument");
  }
  Complex z;
  switch (kind_) {
    case Kind::kTan4:
      z = (4.0 / kPi) * std::atan(w);
      break;
    case Kind::kMobiusRightHalfToDisk:
    case Kind::kDiskToUpperHalf:
      z = (1.0 + kI * w) / (1.0 - kI * w);
      break;
    case Kind::kUpperHalfToDisk:
      z = kI * (1.0 + w) / (1.0 - w);
      break;
    case Kind::kDiskAutomorphism:
      z = (w + param_) / (1.0 + std::conj(param_) * w);
      break;
    case Kind::kExpWrap:
      if (w == 0.0) throw PoleError("ExpWrap: 0 has no preimage");
      z = -kI * std::log(w);
      break;
    case Kind::kScale:
      z = w / param_.real();
      break;
    case Kind::kArcTan:
      z = std::tan(w);
      break;
  }
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw PoleError(name() + ": inverse evaluated at a pole");
  }
  if (!in_domain(z)) throw DomainError(name() + ": point outside the image domain");
  return z;
}

ComplexPoint map_eval(const ConformalMap& m, const ComplexPoint& z) {
  return ComplexPoint(m(z.value()));
}

double map_derivative_abs_sq(const ConformalMap& m, const ComplexPoint& z) {
  switch (m.kind()) {
    case ConformalMap::Kind::kExpWrap:
      (void)m.derivative(z.value());  // domain and pole checks
      return std::exp(-2.0 * z.im());
    case ConformalMap::Kind::kScale:
      return m.parameter().real() * m.parameter().real();
    default:
      return std::norm(m.derivative(z.value()));
  }
}

ComplexPoint map_inverse(const ConformalMap& m, const ComplexPoint& w) {
  return ComplexPoint(m.inverse(w.value()));
}

std::vector<ComplexPoint> preimages_on_curve(const ConformalMap& m, const ComplexPoint& w,
                                             const Curve& source, std::size_t truncation) {
  if (m.injective()) {
    const Complex z = m.inverse(w.value());
    if (source.distance(z) > kCurveTolerance * std::max(1.0, std::abs(z))) {
      throw DomainError(m.name() + ": point is not on the image of the curve");
    }
    return {ComplexPoint(z)};
  }

  // ExpWrap: the line Im z = c wraps onto the circle of radius exp(-c).
  if (source.kind() != Curve::Kind::kHorizontalLine) {
    throw DomainError("ExpWrap: preimages are enumerated on horizontal lines only");
  }
  const double c = source.level();
  const double radius = std::exp(-c);
  if (std::abs(w.abs() - radius) > kCurveTolerance * std::max(1.0, radius)) {
    throw DomainError("ExpWrap: point is not on the image circle");
  }
  const double theta = std::arg(w.value());
  const auto n = static_cast<long long>(truncation);
  std::vector<ComplexPoint> out;
  out.reserve(2 * truncation + 1);
  for (long long k = -n; k <= n; ++k) {
    out.emplace_back(theta + 2.0 * kPi * static_cast<double>(k), c);
  }
  return out;
}

}  // namespace cbm
