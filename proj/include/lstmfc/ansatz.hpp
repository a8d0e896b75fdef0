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
 * @file ansatz.hpp
 * Builders for UCCSD (Jordan-Wigner, one Trotter step), hardware-efficient
 * and strongly-entangling circuits, plus excitation enumeration.
 *
 * Spin orbitals are interleaved: even index = alpha, odd index = beta.
 * The Hartree-Fock reference occupies the lowest n_electrons spin orbitals.
 */
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "lstmfc/program.hpp"

namespace lstmfc {

struct ExcitationSet {
    std::size_t n_electrons = 0;
    std::size_t n_spin_orbitals = 0;
    /// (occupied i, virtual a)
    std::vector<std::array<std::size_t, 2>> singles;
    /// (i, j, a, b) with i < j occupied and a < b virtual
    std::vector<std::array<std::size_t, 4>> doubles;

    [[nodiscard]] std::size_t n_singles() const { return singles.size(); }
    [[nodiscard]] std::size_t n_doubles() const { return doubles.size(); }
    [[nodiscard]] std::size_t size() const { return n_singles() + n_doubles(); }
};

/// All spin-conserving singles and doubles in lexicographic order.
[[nodiscard]] ExcitationSet enumerate_excitations(std::size_t n_electrons,
                                                  std::size_t n_spin_orbitals);

/// "1..10..0" with the lowest n_electrons qubits occupied.
[[nodiscard]] std::string hartree_fock_occupation(std::size_t n_electrons,
                                                  std::size_t n_qubits);

/**
 * @brief Single-step Trotterized UCCSD.
 *
 * Each excitation contributes exp((theta/2) (tau - tau^dagger)) expanded
 * into commuting Pauli rotations: two with scales +-1/2 for a single, eight
 * with scales +-1/8 for a double. Singles come first.
 */
[[nodiscard]] AnsatzProgram build_uccsd(const ExcitationSet &excitations,
                                        std::size_t n_qubits);

/// Per layer: RY, RZ on every qubit then an open CNOT chain.
[[nodiscard]] AnsatzProgram build_hea(std::size_t n_qubits, std::size_t layers,
                                      std::string reference_occupation = {});

/// Per layer: Rot on every qubit then a CNOT ring with a layer-dependent range.
[[nodiscard]] AnsatzProgram
build_strongly_entangling(std::size_t n_qubits, std::size_t layers,
                          std::string reference_occupation = {});

/// One-line summary: kind, parameter split and gate count.
[[nodiscard]] std::string describe(const AnsatzProgram &program);

} // namespace lstmfc
