// SPDX-License-Identifier: Apache-2.0
//
// cisac: performance evaluation of cooperative ISAC networks
// Copyright (C) 2026 The cisac authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cisac {

/// Base of every error raised by the library. `origin` names the module
/// that raised it so the CLI can surface it.
class Error : public std::runtime_error {
public:
    Error(std::string origin, const std::string& what)
        : std::runtime_error(origin + ": " + what), origin_(std::move(origin)) {}

    const std::string& origin() const noexcept { return origin_; }

private:
    std::string origin_;
};

/// An argument lies outside the domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A formula was invoked on a parameter combination it does not cover
/// (for instance the N = 1 sensing cluster on the cooperative path).
class DegenerateCaseError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Numerical integration or iteration ran out of budget. Carries the best
/// estimate and its error bound at the time of giving up.
class ConvergenceError : public Error {
public:
    ConvergenceError(std::string origin, const std::string& what, double estimate, double error_bound)
        : Error(std::move(origin), what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// A realization holds fewer points than requested.
class InsufficientPointsError : public Error {
public:
    InsufficientPointsError(std::size_t available, std::size_t requested)
        : Error("geometry", "realization holds " + std::to_string(available) + " points, " +
                                std::to_string(requested) + " requested"),
          available_(available), requested_(requested) {}

    std::size_t available() const noexcept { return available_; }
    std::size_t requested() const noexcept { return requested_; }

private:
    std::size_t available_;
    std::size_t requested_;
};

/// A search interval does not bracket an optimum.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Invalid or inconsistent experiment configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Bad command-line usage or config syntax.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace cisac
