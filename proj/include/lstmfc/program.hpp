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
 * @file program.hpp
 * Gate and circuit-program types shared by the simulator, the ansatz
 * builders and the differentiation engines.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lstmfc/pauli.hpp"

namespace lstmfc {

enum class GateKind { PauliRotation, RX, RY, RZ, Rot, CNOT, X };

/**
 * @brief One circuit instruction.
 *
 * Rotation kinds are either bound to an ansatz parameter through
 * `param_index` or carry a `fixed_angle`, never both. A PauliRotation
 * applies exp(-i (scale * theta) / 2 * P). `Rot` is RZ(c) RY(b) RZ(a) and
 * binds the three consecutive parameters starting at `param_index`; it has
 * no fixed-angle form. CNOT and X carry no angle.
 */
struct Gate {
    GateKind kind = GateKind::X;
    PauliString pauli;
    double scale = 1.0;
    std::size_t target = 0;
    std::size_t control = 0;
    std::optional<std::size_t> param_index;
    std::optional<double> fixed_angle;

    static Gate pauli_rotation(PauliString p, double scale,
                               std::size_t param_index);
    static Gate rotation(GateKind kind, std::size_t qubit,
                         std::size_t param_index);
    static Gate fixed_rotation(GateKind kind, std::size_t qubit, double angle);
    static Gate rot(std::size_t qubit, std::size_t first_param_index);
    static Gate cnot(std::size_t control, std::size_t target);
    static Gate x(std::size_t target);

    [[nodiscard]] bool is_parameterized_kind() const noexcept;
    /// Number of angles the gate consumes: 0, 1, or 3 (Rot).
    [[nodiscard]] std::size_t angle_count() const noexcept;
};

enum class AnsatzKind { UCCSD, HEA, StronglyEntangling, Custom };

struct ParamSplit {
    std::size_t singles = 0;
    std::size_t doubles = 0;
};

struct AnsatzProgram {
    std::string molecule_tag;
    AnsatzKind kind = AnsatzKind::Custom;
    std::size_t layers = 0;
    std::size_t n_qubits = 0;
    /// One character per qubit ('0'/'1'), qubit 0 leftmost.
    std::string reference_occupation;
    std::vector<Gate> gates;
    std::size_t param_count = 0;
    /// Singles/doubles block sizes; present for UCCSD only.
    std::optional<ParamSplit> param_split;

    /// Throws if any gate is malformed or binds a parameter out of range.
    void validate() const;
};

[[nodiscard]] std::string to_string(AnsatzKind kind);

} // namespace lstmfc
