/**
 * Copyright 2026 The fcstrain Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FCS_ERRORS_HPP
#define FCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fcs {

/// Failure classes; each maps onto a distinct CLI exit code.
enum class ErrorCategory { parse, validation, numerical, io, capacity };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

/// Malformed configuration document. `key_path()` points at the offending key.
class ParseError : public Error {
public:
    ParseError(std::string key_path, const std::string& what)
        : Error(ErrorCategory::parse, key_path.empty() ? what : key_path + ": " + what),
          key_path_(std::move(key_path)) {}

    const std::string& key_path() const noexcept { return key_path_; }

private:
    std::string key_path_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(ErrorCategory::validation, what) {}
};

/// Evaluation point outside a tabulated domain.
class OutOfRangeError : public Error {
public:
    explicit OutOfRangeError(const std::string& what) : Error(ErrorCategory::validation, what) {}
};

class NumericalAccuracyError : public Error {
public:
    NumericalAccuracyError(const std::string& what, double residual)
        : Error(ErrorCategory::numerical, what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// |S[I]| fell below the singular threshold; the many-particle state cannot be normalized.
class SingularNormalizationError : public Error {
public:
    SingularNormalizationError(const std::string& what, double normalization, double smallest_eigenvalue)
        : Error(ErrorCategory::numerical, what),
          normalization_(normalization),
          smallest_eigenvalue_(smallest_eigenvalue) {}

    double normalization() const noexcept { return normalization_; }
    double smallest_eigenvalue() const noexcept { return smallest_eigenvalue_; }

private:
    double normalization_;
    double smallest_eigenvalue_;
};

class CapacityError : public Error {
public:
    explicit CapacityError(const std::string& what) : Error(ErrorCategory::capacity, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorCategory::io, what) {}
};

/// Process exit code for a failure category (0 is reserved for success).
int exit_code(ErrorCategory category) noexcept;

}  // namespace fcs

#endif
