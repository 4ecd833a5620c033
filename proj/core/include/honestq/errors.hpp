// Copyright 2026 The honestq Authors
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

#ifndef HONESTQ_ERRORS_HPP
#define HONESTQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace honestq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonSquareError : Error {
    using Error::Error;
};

struct NotHermitianError : Error {
    using Error::Error;
};

struct InvalidChannelError : Error {
    using Error::Error;
};

struct InvalidChiError : Error {
    using Error::Error;
};

struct NotTracePreservingError : Error {
    using Error::Error;
};

struct NotUnitalError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct BadProbabilityError : Error {
    using Error::Error;
};

struct BadAxisError : Error {
    using Error::Error;
};

/// Thrown when the SDP fails to close its duality gap within the iteration cap.
struct SolverFailure : Error {
    using Error::Error;
};

/// Thrown when no mixture in the requested mixing set satisfies the honesty certificate.
struct InfeasibleError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace honestq

#endif
