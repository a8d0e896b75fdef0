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
 * @file gradient.hpp
 * Energy gradients of E(theta) = <psi(theta)|H|psi(theta)>.
 *
 * The adjoint sweep is the production path; parameter-shift and central
 * finite differences serve as independent checks and CLI fallbacks.
 */
#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "lstmfc/pauli.hpp"
#include "lstmfc/program.hpp"

namespace lstmfc {

struct GradientResult {
    double energy = 0.0;
    std::vector<double> gradient;
};

enum class GradientMethod { Adjoint, ParameterShift, FiniteDifference };

[[nodiscard]] GradientMethod parse_gradient_method(std::string_view name);
[[nodiscard]] std::string_view to_string(GradientMethod method);

inline constexpr double kDefaultFiniteDifferenceStep = 1e-4;

/// E(theta) through run_circuit.
[[nodiscard]] double energy(const QubitHamiltonian &h,
                            const AnsatzProgram &program,
                            std::span<const double> theta);

/**
 * @brief Reverse-mode gradient: one forward pass, one H application and a
 * backward sweep that un-applies each gate on the state and the costate.
 *
 * Uses 3G gate applications for G lowered gates, independent of the
 * number of parameters. Gates sharing a parameter accumulate.
 */
[[nodiscard]] GradientResult adjoint_gradient(const QubitHamiltonian &h,
                                              const AnsatzProgram &program,
                                              std::span<const double> theta);

/// Two-term shift rule applied to every rotation occurrence separately.
[[nodiscard]] GradientResult
parameter_shift_gradient(const QubitHamiltonian &h,
                         const AnsatzProgram &program,
                         std::span<const double> theta);

[[nodiscard]] GradientResult
finite_difference(const QubitHamiltonian &h, const AnsatzProgram &program,
                  std::span<const double> theta,
                  double step = kDefaultFiniteDifferenceStep);

[[nodiscard]] GradientResult compute_gradient(GradientMethod method,
                                              const QubitHamiltonian &h,
                                              const AnsatzProgram &program,
                                              std::span<const double> theta);

} // namespace lstmfc
