// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The linkopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace linkopt {

/// Base of all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The packet is too short for the Gumbel waterfall approximation (N*c_eff <= 1).
class RegimeError : public Error {
public:
    using Error::Error;
};

/// Quadrature, root finding or minimisation did not converge.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Average transmit power would exceed the PA peak headroom P_t,max/xi.
class PeakPowerError : public Error {
public:
    using Error::Error;
};

/// The payload search interval is empty or the closed form is non-positive.
class DegeneratePayloadError : public Error {
public:
    using Error::Error;
};

/// Configuration could not be parsed; the message starts with the field path.
class ConfigError : public Error {
public:
    ConfigError(std::string path, const std::string& what)
        : Error(path + ": " + what), path_(std::move(path)) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace linkopt
