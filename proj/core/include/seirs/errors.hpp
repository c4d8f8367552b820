// Copyright (c) 2026 the seirs authors.
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

#ifndef SEIRS_ERRORS_HPP
#define SEIRS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace seirs {

/// Malformed or inconsistent run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Integration could not meet its error control (CLI exit code 3).
struct IntegrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The averaged reproduction quantity is <= 1, so the scalar root
/// equation for the endemic level has no positive solution.
struct NoEndemicRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shooting iteration did not converge within the allowed steps.
struct NewtonStalled : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The shooting Jacobian flow_jacobian - I is numerically singular.
struct SingularJacobian : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace seirs

#endif
