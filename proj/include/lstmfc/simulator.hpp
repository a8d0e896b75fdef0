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
 * @file simulator.hpp
 * Dense statevector simulator: basis-state preparation, gate application
 * and program execution.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lstmfc/program.hpp"
#include "lstmfc/state_vector.hpp"

namespace lstmfc {

/// Basis state with qubit q set iff occupation[q] == '1'.
[[nodiscard]] StateVector prepare_basis_state(std::size_t n_qubits,
                                              std::string_view occupation);

/**
 * @brief Apply one gate in place.
 *
 * `angles` must hold exactly `gate.angle_count()` values when the gate is
 * parameter-bound and be empty otherwise.
 */
void apply_gate(StateVector &state, const Gate &gate,
                std::span<const double> angles);
void apply_gate(StateVector &state, const Gate &gate,
                std::optional<double> theta = std::nullopt);

/// Reference preparation followed by every gate in program order.
[[nodiscard]] StateVector run_circuit(const AnsatzProgram &program,
                                      std::span<const double> theta);

/**
 * @brief Flat instruction after lowering: every parameterized gate becomes
 * one or more Pauli rotations, each bound to at most one parameter.
 */
struct PrimitiveOp {
    enum class Kind { Rotation, CNOT, X };
    Kind kind = Kind::X;
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    Complex y_phase{1.0, 0.0};
    double scale = 1.0;
    std::optional<std::size_t> param;
    double fixed_angle = 0.0;
    std::size_t control = 0;
    std::size_t target = 0;

    [[nodiscard]] double angle(std::span<const double> theta) const {
        return param ? scale * theta[*param] : fixed_angle;
    }
};

[[nodiscard]] std::vector<PrimitiveOp> lower(const AnsatzProgram &program);

/// Apply a lowered op (angle ignored for CNOT/X). Counts one application.
void apply_op(std::span<Complex> amps, const PrimitiveOp &op, double angle);
/// Apply the inverse of a lowered op.
void apply_op_inverse(std::span<Complex> amps, const PrimitiveOp &op,
                      double angle);

/// <a| P |b> for the Pauli string behind a rotation op.
[[nodiscard]] Complex pauli_matrix_element(std::span<const Complex> a,
                                           const PrimitiveOp &op,
                                           std::span<const Complex> b);

/// exp(-i angle/2 P) on raw amplitudes.
void apply_pauli_rotation(std::span<Complex> amps, const PauliString &p,
                          double angle);

/// Gate applications performed on the calling thread since the last reset.
[[nodiscard]] std::size_t gate_application_count() noexcept;
void reset_gate_application_count() noexcept;

} // namespace lstmfc
