// Copyright 2026 The mbcert Authors
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

#ifndef MBCERT_ERRORS_H
#define MBCERT_ERRORS_H

#include <stdexcept>
#include <string>

namespace mbcert {

/// A density matrix, Bloch vector or unitary failed validation.
struct InvalidStateError : std::invalid_argument {
    explicit InvalidStateError(const std::string &msg) : std::invalid_argument(msg) {
    }
};

/// A transfer matrix is not trace preserving or not completely positive.
struct InvalidChannelError : std::invalid_argument {
    explicit InvalidChannelError(const std::string &msg) : std::invalid_argument(msg) {
    }
};

/// A rotation matrix has determinant -1.
struct ImproperRotationError : std::invalid_argument {
    explicit ImproperRotationError(const std::string &msg) : std::invalid_argument(msg) {
    }
};

/// The output ellipsoid is flat (some |lambda_i| ~ 0) and the face quadratics are undefined.
struct DegenerateEllipsoidError : std::domain_error {
    explicit DegenerateEllipsoidError(const std::string &msg) : std::domain_error(msg) {
    }
};

/// Two certification routes that must agree did not.
struct InternalInconsistencyError : std::logic_error {
    explicit InternalInconsistencyError(const std::string &msg) : std::logic_error(msg) {
    }
};

/// Requested size is outside the supported range (e.g. more than two qubits).
struct UnsupportedSizeError : std::invalid_argument {
    explicit UnsupportedSizeError(const std::string &msg) : std::invalid_argument(msg) {
    }
};

/// A threshold search could not bracket a single breaking transition.
struct BisectionError : std::invalid_argument {
    explicit BisectionError(const std::string &msg) : std::invalid_argument(msg) {
    }
};

/// A channel or state description file could not be parsed.
struct SpecParseError : std::invalid_argument {
    explicit SpecParseError(const std::string &msg) : std::invalid_argument(msg) {
    }
};

}  // namespace mbcert

#endif
