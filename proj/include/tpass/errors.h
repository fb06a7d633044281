// Copyright 2026 The TPASS Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TPASS_ERRORS_H_
#define TPASS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tpass {

// Malformed arguments: bad dimensions, indices out of range, vectors that are
// not probability distributions, invalid bounds.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The simplex engine could not produce a trustworthy answer (iteration limit,
// non-finite tableau, or an "optimal" basis that fails re-verification).
class SolverFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An LP solved fine but the strategies read off it do not certify as an
// equilibrium within tolerance.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bimatrix game whose payoff sum B + C is not of the form pi_i + rho_j.
class NotSeparable : public std::runtime_error {
 public:
  NotSeparable(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace tpass

#endif  // TPASS_ERRORS_H_
