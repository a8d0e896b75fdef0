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
#include "lstmfc/simulator.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "lstmfc/error.hpp"

namespace lstmfc {

namespace {

thread_local std::size_t t_gate_applications = 0;

inline double parity_sign(std::uint64_t bits) {
    return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

void rotate(std::span<Complex> a, std::uint64_t x, std::uint64_t z,
            Complex y_phase, double angle) {
    const double c = std::cos(angle / 2.0);
    // -i sin(angle/2) times the phase of the Pauli string
    const Complex k = Complex{0.0, -std::sin(angle / 2.0)} * y_phase;
    const std::size_t dim = a.size();
    if (x == 0) {
        const Complex plus = c + k, minus = c - k;
        for (std::size_t i = 0; i < dim; ++i) {
            a[i] *= parity_sign(i & z) > 0 ? plus : minus;
        }
        return;
    }
    const int high = 63 - std::countl_zero(x);
    const std::uint64_t low_mask = (std::uint64_t{1} << high) - 1;
    // sign(j & z) = sign(i & z) * sign(x & z) for j = i ^ x
    const Complex k_flip = k * parity_sign(x & z);
    for (std::size_t n = 0; n < dim / 2; ++n) {
        const std::uint64_t i = ((n >> high) << (high + 1)) | (n & low_mask);
        const std::uint64_t j = i ^ x;
        const double si = parity_sign(i & z);
        const Complex ai = a[i];
        const Complex aj = a[j];
        a[i] = c * ai + (si * k_flip) * aj;
        a[j] = c * aj + (si * k) * ai;
    }
}

void swap_on_target(std::span<Complex> a, std::uint64_t control_mask,
                    std::size_t target) {
    const std::uint64_t tbit = std::uint64_t{1} << target;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & tbit) == 0 && (i & control_mask) == control_mask) {
            std::swap(a[i], a[i | tbit]);
        }
    }
}

PrimitiveOp single_qubit_rotation(GateKind kind, std::size_t q) {
    PrimitiveOp op;
    op.kind = PrimitiveOp::Kind::Rotation;
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (kind) {
    case GateKind::RX:
        op.x = bit;
        break;
    case GateKind::RY:
        op.x = bit;
        op.z = bit;
        op.y_phase = Complex{0.0, 1.0};
        break;
    default:
        op.z = bit;
        break;
    }
    return op;
}

void lower_gate(const Gate &g, std::vector<PrimitiveOp> &out) {
    switch (g.kind) {
    case GateKind::PauliRotation: {
        PrimitiveOp op;
        op.kind = PrimitiveOp::Kind::Rotation;
        op.x = g.pauli.x_mask();
        op.z = g.pauli.z_mask();
        op.y_phase = g.pauli.phase_factor();
        op.scale = g.scale;
        op.param = g.param_index;
        op.fixed_angle = g.fixed_angle ? g.scale * *g.fixed_angle : 0.0;
        out.push_back(op);
        break;
    }
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ: {
        PrimitiveOp op = single_qubit_rotation(g.kind, g.target);
        op.param = g.param_index;
        op.fixed_angle = g.fixed_angle.value_or(0.0);
        out.push_back(op);
        break;
    }
    case GateKind::Rot: {
        const std::size_t p = *g.param_index;
        const GateKind seq[3] = {GateKind::RZ, GateKind::RY, GateKind::RZ};
        for (std::size_t k = 0; k < 3; ++k) {
            PrimitiveOp op = single_qubit_rotation(seq[k], g.target);
            op.param = p + k;
            out.push_back(op);
        }
        break;
    }
    case GateKind::CNOT: {
        PrimitiveOp op;
        op.kind = PrimitiveOp::Kind::CNOT;
        op.control = g.control;
        op.target = g.target;
        out.push_back(op);
        break;
    }
    case GateKind::X: {
        PrimitiveOp op;
        op.kind = PrimitiveOp::Kind::X;
        op.target = g.target;
        out.push_back(op);
        break;
    }
    }
}

void validate_gate(const Gate &g, std::size_t n_qubits) {
    const auto qubit_ok = [&](std::size_t q) {
        require(q < n_qubits, ErrorKind::Dimension,
                "gate acts on qubit " + std::to_string(q) + " of a " +
                    std::to_string(n_qubits) + "-qubit register");
    };
    if (g.kind == GateKind::PauliRotation) {
        require(g.pauli.size() == n_qubits, ErrorKind::Dimension,
                "rotation string \"" + g.pauli.str() +
                    "\" does not match the register width");
        require(std::isfinite(g.scale), ErrorKind::Config,
                "non-finite rotation scale");
    } else {
        qubit_ok(g.target);
    }
    if (g.kind == GateKind::CNOT) {
        qubit_ok(g.control);
        require(g.control != g.target, ErrorKind::Config,
                "CNOT control equals target");
    }
    if (g.is_parameterized_kind()) {
        require(g.param_index.has_value() != g.fixed_angle.has_value(),
                ErrorKind::Config,
                "rotation needs exactly one of a parameter binding or a "
                "fixed angle");
        require(g.kind != GateKind::Rot || g.param_index.has_value(),
                ErrorKind::Config, "Rot gates must be parameter-bound");
    } else {
        require(!g.param_index && !g.fixed_angle, ErrorKind::Config,
                "CNOT/X gates take no angle");
    }
}

} // namespace

Gate Gate::pauli_rotation(PauliString p, double scale,
                          std::size_t param_index) {
    Gate g;
    g.kind = GateKind::PauliRotation;
    g.pauli = std::move(p);
    g.scale = scale;
    g.param_index = param_index;
    return g;
}

Gate Gate::rotation(GateKind kind, std::size_t qubit, std::size_t param_index) {
    require(kind == GateKind::RX || kind == GateKind::RY ||
                kind == GateKind::RZ,
            ErrorKind::Config, "rotation() expects RX, RY or RZ");
    Gate g;
    g.kind = kind;
    g.target = qubit;
    g.param_index = param_index;
    return g;
}

Gate Gate::fixed_rotation(GateKind kind, std::size_t qubit, double angle) {
    Gate g = rotation(kind, qubit, 0);
    g.param_index.reset();
    g.fixed_angle = angle;
    return g;
}

Gate Gate::rot(std::size_t qubit, std::size_t first_param_index) {
    Gate g;
    g.kind = GateKind::Rot;
    g.target = qubit;
    g.param_index = first_param_index;
    return g;
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
    Gate g;
    g.kind = GateKind::CNOT;
    g.control = control;
    g.target = target;
    return g;
}

Gate Gate::x(std::size_t target) {
    Gate g;
    g.kind = GateKind::X;
    g.target = target;
    return g;
}

bool Gate::is_parameterized_kind() const noexcept {
    return kind != GateKind::CNOT && kind != GateKind::X;
}

std::size_t Gate::angle_count() const noexcept {
    if (!is_parameterized_kind()) {
        return 0;
    }
    return kind == GateKind::Rot ? 3 : 1;
}

void AnsatzProgram::validate() const {
    require(n_qubits >= 1 && n_qubits <= kMaxQubits, ErrorKind::Config,
            "program register width out of range");
    require(reference_occupation.size() == n_qubits, ErrorKind::Dimension,
            "reference occupation length does not match the register");
    for (char ch : reference_occupation) {
        require(ch == '0' || ch == '1', ErrorKind::Config,
                "reference occupation must be a bitstring");
    }
    std::vector<bool> bound(param_count, false);
    for (const auto &g : gates) {
        validate_gate(g, n_qubits);
        if (g.param_index) {
            require(*g.param_index + g.angle_count() <= param_count,
                    ErrorKind::Dimension,
                    "gate binds parameter " + std::to_string(*g.param_index) +
                        " beyond param_count " + std::to_string(param_count));
            for (std::size_t k = 0; k < g.angle_count(); ++k) {
                bound[*g.param_index + k] = true;
            }
        }
    }
    for (std::size_t p = 0; p < param_count; ++p) {
        require(bound[p], ErrorKind::Config,
                "parameter " + std::to_string(p) + " is bound to no gate");
    }
    if (param_split) {
        require(param_split->singles + param_split->doubles == param_count,
                ErrorKind::Config, "parameter split does not sum to count");
    }
}

std::string to_string(AnsatzKind kind) {
    switch (kind) {
    case AnsatzKind::UCCSD:
        return "uccsd";
    case AnsatzKind::HEA:
        return "hea";
    case AnsatzKind::StronglyEntangling:
        return "strongly-entangling";
    case AnsatzKind::Custom:
        return "custom";
    }
    return "custom";
}

StateVector prepare_basis_state(std::size_t n_qubits,
                                std::string_view occupation) {
    require(occupation.size() == n_qubits, ErrorKind::Dimension,
            "occupation \"" + std::string(occupation) + "\" has length " +
                std::to_string(occupation.size()) + ", expected " +
                std::to_string(n_qubits));
    std::size_t index = 0;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        require(occupation[q] == '0' || occupation[q] == '1',
                ErrorKind::Config, "occupation must be a bitstring");
        if (occupation[q] == '1') {
            index |= std::size_t{1} << q;
        }
    }
    StateVector s(n_qubits);
    s[0] = 0.0;
    s[index] = 1.0;
    return s;
}

void apply_op(std::span<Complex> amps, const PrimitiveOp &op, double angle) {
    ++t_gate_applications;
    switch (op.kind) {
    case PrimitiveOp::Kind::Rotation:
        rotate(amps, op.x, op.z, op.y_phase, angle);
        break;
    case PrimitiveOp::Kind::CNOT:
        swap_on_target(amps, std::uint64_t{1} << op.control, op.target);
        break;
    case PrimitiveOp::Kind::X:
        swap_on_target(amps, 0, op.target);
        break;
    }
}

void apply_op_inverse(std::span<Complex> amps, const PrimitiveOp &op,
                      double angle) {
    apply_op(amps, op, -angle);
}

Complex pauli_matrix_element(std::span<const Complex> a, const PrimitiveOp &op,
                             std::span<const Complex> b) {
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::uint64_t j = i ^ op.x;
        s += std::conj(a[i]) * (op.y_phase * parity_sign(j & op.z)) * b[j];
    }
    return s;
}

void apply_pauli_rotation(std::span<Complex> amps, const PauliString &p,
                          double angle) {
    ++t_gate_applications;
    rotate(amps, p.x_mask(), p.z_mask(), p.phase_factor(), angle);
}

void apply_gate(StateVector &state, const Gate &gate,
                std::span<const double> angles) {
    validate_gate(gate, state.n_qubits());
    const std::size_t needed = gate.param_index ? gate.angle_count() : 0;
    require(angles.size() == needed, ErrorKind::Config,
            gate.param_index
                ? "parameter-bound gate needs " + std::to_string(needed) +
                      " angle(s), got " + std::to_string(angles.size())
                : std::string("gate takes no supplied angle"));
    std::vector<PrimitiveOp> ops;
    lower_gate(gate, ops);
    const std::size_t base = gate.param_index.value_or(0);
    for (auto &op : ops) {
        const double angle =
            op.param ? op.scale * angles[*op.param - base] : op.fixed_angle;
        apply_op(state.amplitudes(), op, angle);
    }
}

void apply_gate(StateVector &state, const Gate &gate,
                std::optional<double> theta) {
    if (theta) {
        const double a = *theta;
        apply_gate(state, gate, std::span<const double>(&a, 1));
    } else {
        apply_gate(state, gate, std::span<const double>{});
    }
}

std::vector<PrimitiveOp> lower(const AnsatzProgram &program) {
    std::vector<PrimitiveOp> ops;
    ops.reserve(program.gates.size());
    for (const auto &g : program.gates) {
        lower_gate(g, ops);
    }
    return ops;
}

StateVector run_circuit(const AnsatzProgram &program,
                        std::span<const double> theta) {
    program.validate();
    require(theta.size() == program.param_count, ErrorKind::Dimension,
            "program takes " + std::to_string(program.param_count) +
                " parameters, got " + std::to_string(theta.size()));
    StateVector state =
        prepare_basis_state(program.n_qubits, program.reference_occupation);
    for (const auto &op : lower(program)) {
        apply_op(state.amplitudes(), op, op.angle(theta));
    }
    return state;
}

std::size_t gate_application_count() noexcept { return t_gate_applications; }

void reset_gate_application_count() noexcept { t_gate_applications = 0; }

} // namespace lstmfc
