// Copyright 2026 The LSTM-FC-VQE Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file error.hpp
 * Exception type shared by every module, tagged with a category that the
 * command-line front end maps onto process exit codes.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace lstmfc {

enum class ErrorKind {
    Config,         ///< Bad user input or inconsistent configuration.
    Dimension,      ///< Shape or size mismatch between operands.
    Fixture,        ///< Malformed or inconsistent molecule fixture.
    NonConvergence, ///< An iterative solver ran out of budget.
    Divergence,     ///< A training loss became non-finite.
    Model,          ///< Missing or incompatible meta-model.
    Numerical,      ///< A numerical invariant was violated.
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

inline void require(bool condition, ErrorKind kind, const std::string &what) {
    if (!condition) {
        throw Error(kind, what);
    }
}

/// Process exit code for an error category. 0 is reserved for success.
[[nodiscard]] constexpr int exit_code(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Config:
    case ErrorKind::Dimension:
        return 2;
    case ErrorKind::Fixture:
        return 3;
    case ErrorKind::NonConvergence:
        return 4;
    case ErrorKind::Divergence:
        return 5;
    case ErrorKind::Model:
        return 6;
    case ErrorKind::Numerical:
        return 7;
    }
    return 1;
}

} // namespace lstmfc
