// Copyright 2026 The Authors.
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

#ifndef IRS_ERRORS_HPP_
#define IRS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace irs {

// Root of every error the library throws. The CLI maps each leaf class to a
// distinct process exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition or invariant breach in caller-supplied arguments.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Config text that could not be parsed at all.
class ConfigParseError : public Error {
 public:
  using Error::Error;
};

// Config that parsed but violates a field constraint.
class ConfigValidationError : public Error {
 public:
  using Error::Error;
};

// Request that exceeds a configured work limit (e.g. subset enumeration cap).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Factorization failure, undefined curvature or a broken certificate.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace irs

#endif  // IRS_ERRORS_HPP_
