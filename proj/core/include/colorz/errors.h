// Copyright 2026 The colorz Authors
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

#ifndef COLORZ_ERRORS_H
#define COLORZ_ERRORS_H

#include <stdexcept>
#include <string>

namespace colorz {

/// An enumeration or dense-simulation size guard was exceeded.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A lattice (generated or loaded) failed structural validation.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Requested generator dimensions give a lattice that fails validation.
struct InvalidDimensionsError : ValidationError {
    using ValidationError::ValidationError;
};

/// An input file does not exist or cannot be read.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A lattice input file could not be parsed or had the wrong shape.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A numeric parameter (epsilon, confidence, beta, ...) is out of range.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace colorz

#endif
