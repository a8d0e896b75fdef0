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
#include "lstmfc/ansatz.hpp"

#include <sstream>
#include <string_view>

#include "lstmfc/error.hpp"

namespace lstmfc {

namespace {

struct Pattern {
    std::string_view letters;
    double sign;
};

// Jordan-Wigner expansion of i * (tau - tau^dagger), letters on (i, a).
constexpr Pattern kSinglePattern[] = {{"XY", +1.0}, {"YX", -1.0}};

// Same for doubles, letters on (i, j, a, b).
constexpr Pattern kDoublePattern[] = {
    {"XXXY", +1.0}, {"XXYX", +1.0}, {"XYXX", -1.0}, {"XYYY", +1.0},
    {"YXXX", -1.0}, {"YXYY", +1.0}, {"YYXY", -1.0}, {"YYYX", -1.0},
};

Pauli letter(char c) {
    return c == 'X' ? Pauli::X : Pauli::Y;
}

void fill_z(PauliString &p, std::size_t from, std::size_t to) {
    for (std::size_t q = from + 1; q < to; ++q) {
        p.set(q, Pauli::Z);
    }
}

std::string default_reference(std::string ref, std::size_t n_qubits) {
    return ref.empty() ? std::string(n_qubits, '0') : ref;
}

} // namespace

ExcitationSet enumerate_excitations(std::size_t n_electrons,
                                    std::size_t n_spin_orbitals) {
    require(n_electrons > 0 && n_electrons < n_spin_orbitals,
            ErrorKind::Config,
            "need 0 < n_electrons < n_spin_orbitals, got " +
                std::to_string(n_electrons) + " and " +
                std::to_string(n_spin_orbitals));
    require(n_spin_orbitals % 2 == 0, ErrorKind::Config,
            "spin-orbital count must be even");
    require(n_spin_orbitals <= PauliString::kMaxLength, ErrorKind::Config,
            "too many spin orbitals");

    ExcitationSet ex;
    ex.n_electrons = n_electrons;
    ex.n_spin_orbitals = n_spin_orbitals;
    const std::size_t n = n_spin_orbitals;
    const std::size_t ne = n_electrons;
    for (std::size_t i = 0; i < ne; ++i) {
        for (std::size_t a = ne; a < n; ++a) {
            if (i % 2 == a % 2) {
                ex.singles.push_back({i, a});
            }
        }
    }
    for (std::size_t i = 0; i < ne; ++i) {
        for (std::size_t j = i + 1; j < ne; ++j) {
            for (std::size_t a = ne; a < n; ++a) {
                for (std::size_t b = a + 1; b < n; ++b) {
                    if (i % 2 + j % 2 == a % 2 + b % 2) {
                        ex.doubles.push_back({i, j, a, b});
                    }
                }
            }
        }
    }
    return ex;
}

std::string hartree_fock_occupation(std::size_t n_electrons,
                                    std::size_t n_qubits) {
    require(n_electrons <= n_qubits, ErrorKind::Config,
            "more electrons than qubits");
    return std::string(n_electrons, '1') +
           std::string(n_qubits - n_electrons, '0');
}

AnsatzProgram build_uccsd(const ExcitationSet &excitations,
                          std::size_t n_qubits) {
    require(n_qubits == excitations.n_spin_orbitals, ErrorKind::Dimension,
            "UCCSD register must have one qubit per spin orbital");
    AnsatzProgram prog;
    prog.kind = AnsatzKind::UCCSD;
    prog.n_qubits = n_qubits;
    prog.reference_occupation =
        hartree_fock_occupation(excitations.n_electrons, n_qubits);
    prog.param_count = excitations.size();
    prog.param_split = ParamSplit{excitations.n_singles(),
                                  excitations.n_doubles()};

    std::size_t param = 0;
    for (const auto &[i, a] : excitations.singles) {
        require(i < a && a < n_qubits, ErrorKind::Dimension,
                "single excitation index out of range");
        for (const auto &pat : kSinglePattern) {
            PauliString p(n_qubits);
            p.set(i, letter(pat.letters[0]));
            fill_z(p, i, a);
            p.set(a, letter(pat.letters[1]));
            prog.gates.push_back(
                Gate::pauli_rotation(std::move(p), pat.sign * 0.5, param));
        }
        ++param;
    }
    for (const auto &[i, j, a, b] : excitations.doubles) {
        require(i < j && j < a && a < b && b < n_qubits, ErrorKind::Dimension,
                "double excitation index out of range");
        for (const auto &pat : kDoublePattern) {
            PauliString p(n_qubits);
            p.set(i, letter(pat.letters[0]));
            fill_z(p, i, j);
            p.set(j, letter(pat.letters[1]));
            p.set(a, letter(pat.letters[2]));
            fill_z(p, a, b);
            p.set(b, letter(pat.letters[3]));
            prog.gates.push_back(
                Gate::pauli_rotation(std::move(p), pat.sign * 0.125, param));
        }
        ++param;
    }
    return prog;
}

AnsatzProgram build_hea(std::size_t n_qubits, std::size_t layers,
                        std::string reference_occupation) {
    require(layers >= 1, ErrorKind::Config, "HEA needs at least one layer");
    require(n_qubits >= 1, ErrorKind::Config, "HEA needs at least one qubit");
    AnsatzProgram prog;
    prog.kind = AnsatzKind::HEA;
    prog.layers = layers;
    prog.n_qubits = n_qubits;
    prog.reference_occupation =
        default_reference(std::move(reference_occupation), n_qubits);
    prog.param_count = 2 * n_qubits * layers;
    for (std::size_t l = 0; l < layers; ++l) {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            const std::size_t p = 2 * (l * n_qubits + q);
            prog.gates.push_back(Gate::rotation(GateKind::RY, q, p));
            prog.gates.push_back(Gate::rotation(GateKind::RZ, q, p + 1));
        }
        for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
            prog.gates.push_back(Gate::cnot(q, q + 1));
        }
    }
    prog.validate();
    return prog;
}

AnsatzProgram build_strongly_entangling(std::size_t n_qubits,
                                        std::size_t layers,
                                        std::string reference_occupation) {
    require(n_qubits >= 2, ErrorKind::Config,
            "strongly-entangling layers need at least two qubits");
    require(layers >= 1, ErrorKind::Config,
            "strongly-entangling ansatz needs at least one layer");
    AnsatzProgram prog;
    prog.kind = AnsatzKind::StronglyEntangling;
    prog.layers = layers;
    prog.n_qubits = n_qubits;
    prog.reference_occupation =
        default_reference(std::move(reference_occupation), n_qubits);
    prog.param_count = 3 * n_qubits * layers;
    for (std::size_t l = 0; l < layers; ++l) {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            prog.gates.push_back(Gate::rot(q, 3 * (l * n_qubits + q)));
        }
        const std::size_t range = (l % (n_qubits - 1)) + 1;
        for (std::size_t q = 0; q < n_qubits; ++q) {
            prog.gates.push_back(Gate::cnot(q, (q + range) % n_qubits));
        }
    }
    prog.validate();
    return prog;
}

std::string describe(const AnsatzProgram &program) {
    std::size_t rotations = 0;
    std::size_t cnots = 0;
    for (const auto &g : program.gates) {
        if (g.kind == GateKind::CNOT) {
            ++cnots;
        } else if (g.is_parameterized_kind()) {
            ++rotations;
        }
    }
    std::ostringstream os;
    os << "kind=" << to_string(program.kind);
    if (program.layers > 0) {
        os << " layers=" << program.layers;
    }
    os << " qubits=" << program.n_qubits
       << " params=" << program.param_count;
    if (program.param_split) {
        os << " singles=" << program.param_split->singles
           << " doubles=" << program.param_split->doubles;
    }
    os << " gates=" << program.gates.size() << " rotations=" << rotations
       << " cnots=" << cnots
       << " reference=" << program.reference_occupation;
    return os.str();
}

} // namespace lstmfc
