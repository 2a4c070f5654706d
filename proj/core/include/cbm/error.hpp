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

#ifndef CBM_ERROR_HPP_
#define CBM_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace cbm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the stated domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation within 1e-12 of a pole of a map.
class PoleError : public Error {
 public:
  using Error::Error;
};

// Green's function evaluated at (or numerically at) its pole.
class SingularityError : public Error {
 public:
  using Error::Error;
};

class MaxStepsExceeded : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

// A chi-square bin whose expected count is below 5.
class BinUnderflow : public Error {
 public:
  using Error::Error;
};

}  // namespace cbm

#endif  // CBM_ERROR_HPP_
