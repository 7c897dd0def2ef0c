/*
   Copyright 2026 the somoscf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace somoscf {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Two scalars (or polynomials) of different fields met in one operation.
class field_mismatch_error : public error {
   public:
    using error::error;
};

/// Malformed scalar: zero denominator, unparsable text, bad modulus.
class invalid_scalar_error : public error {
   public:
    using error::error;
};

/// Division by a zero scalar or zero polynomial.
class zero_division_error : public error {
   public:
    using error::error;
};

/// A Laurent series was not tracked far enough to answer the query.
/// Callers may rebuild with more precision and retry.
class precision_error : public error {
   public:
    using error::error;
};

/// Input outside the supported shape (non-monic/odd radicand, full mode
/// where reduced is required, v = 0, non-square coefficient, ...).
class unsupported_error : public error {
   public:
    using error::error;
};

/// A continued fraction line failed its divisibility contract: the norm
/// P^2 + A*P - R is not an exact multiple of Q.
class corrupted_line_error : public error {
   public:
    using error::error;
};

/// d vanished at the given index: the next partial quotient has degree
/// greater than one and the quintuple normal form does not apply.
class degeneracy_error : public error {
   public:
    degeneracy_error(long long h, const std::string& msg) : error(msg), h(h) {}
    long long h;
};

/// The redundant coefficient equations failed after a step; the input line
/// was not a valid line for the curve.
class inconsistency_error : public error {
   public:
    using error::error;
};

/// A sequence term or divisor vanished at the given index.
class singular_error : public error {
   public:
    singular_error(long long index, const std::string& msg) : error(msg), index(index) {}
    long long index;
};

/// Random instance generation exhausted its retry budget.
class generation_error : public error {
   public:
    using error::error;
};

/// The identity suite was handed a non-contiguous run of lines.
class invalid_window_error : public error {
   public:
    using error::error;
};

}  // namespace somoscf
