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
#include "lstmfc/gradient.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lstmfc/error.hpp"
#include "lstmfc/simulator.hpp"

namespace lstmfc {

namespace {

void check_inputs(const QubitHamiltonian &h, const AnsatzProgram &program,
                  std::span<const double> theta) {
    require(h.n_qubits() == program.n_qubits, ErrorKind::Dimension,
            "Hamiltonian acts on " + std::to_string(h.n_qubits()) +
                " qubits but the program on " +
                std::to_string(program.n_qubits));
    require(theta.size() == program.param_count, ErrorKind::Dimension,
            "program takes " + std::to_string(program.param_count) +
                " parameters, got " + std::to_string(theta.size()));
}

double energy_of_ops(const QubitHamiltonian &h, const AnsatzProgram &program,
                     const std::vector<PrimitiveOp> &ops,
                     std::span<const double> theta, std::size_t shifted_op,
                     double shift) {
    StateVector psi =
        prepare_basis_state(program.n_qubits, program.reference_occupation);
    for (std::size_t k = 0; k < ops.size(); ++k) {
        double angle = ops[k].angle(theta);
        if (k == shifted_op) {
            angle += shift;
        }
        apply_op(psi.amplitudes(), ops[k], angle);
    }
    return h.expectation_unchecked(psi.amplitudes()).real();
}

} // namespace

GradientMethod parse_gradient_method(std::string_view name) {
    if (name == "adjoint") {
        return GradientMethod::Adjoint;
    }
    if (name == "shift") {
        return GradientMethod::ParameterShift;
    }
    if (name == "fd") {
        return GradientMethod::FiniteDifference;
    }
    throw Error(ErrorKind::Config,
                "unknown gradient method '" + std::string(name) +
                    "' (expected adjoint, shift or fd)");
}

std::string_view to_string(GradientMethod method) {
    switch (method) {
    case GradientMethod::Adjoint:
        return "adjoint";
    case GradientMethod::ParameterShift:
        return "shift";
    case GradientMethod::FiniteDifference:
        return "fd";
    }
    return "adjoint";
}

double energy(const QubitHamiltonian &h, const AnsatzProgram &program,
              std::span<const double> theta) {
    check_inputs(h, program, theta);
    const StateVector psi = run_circuit(program, theta);
    return h.expectation_unchecked(psi.amplitudes()).real();
}

GradientResult adjoint_gradient(const QubitHamiltonian &h,
                                const AnsatzProgram &program,
                                std::span<const double> theta) {
    check_inputs(h, program, theta);
    program.validate();
    const auto ops = lower(program);

    StateVector psi =
        prepare_basis_state(program.n_qubits, program.reference_occupation);
    for (const auto &op : ops) {
        apply_op(psi.amplitudes(), op, op.angle(theta));
    }
    StateVector lambda(program.n_qubits,
                       std::vector<Complex>(psi.dim(), Complex{}));
    h.apply(psi.amplitudes(), lambda.amplitudes());

    GradientResult out;
    out.energy = inner_product(psi.amplitudes(), lambda.amplitudes()).real();
    out.gradient.assign(program.param_count, 0.0);

    // d/dtheta exp(-i s theta P / 2) = -i (s/2) P exp(...), so each
    // occurrence contributes 2 Re <lambda| -i (s/2) P |psi> = s Im <lambda|P|psi>.
    for (std::size_t k = ops.size(); k-- > 0;) {
        const auto &op = ops[k];
        if (op.kind == PrimitiveOp::Kind::Rotation && op.param) {
            const Complex m = pauli_matrix_element(lambda.amplitudes(), op,
                                                   psi.amplitudes());
            out.gradient[*op.param] += op.scale * m.imag();
        }
        const double angle = op.angle(theta);
        apply_op_inverse(psi.amplitudes(), op, angle);
        apply_op_inverse(lambda.amplitudes(), op, angle);
    }
    return out;
}

GradientResult parameter_shift_gradient(const QubitHamiltonian &h,
                                        const AnsatzProgram &program,
                                        std::span<const double> theta) {
    check_inputs(h, program, theta);
    program.validate();
    // Every primitive rotation has generator eigenvalues +-1/2 after scale
    // folding; Rot was already lowered to three rotations.
    const auto ops = lower(program);
    GradientResult out;
    out.energy = energy_of_ops(h, program, ops, theta, ops.size(), 0.0);
    out.gradient.assign(program.param_count, 0.0);
    constexpr double kShift = std::numbers::pi / 2.0;
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const auto &op = ops[k];
        if (op.kind != PrimitiveOp::Kind::Rotation || !op.param) {
            continue;
        }
        const double plus = energy_of_ops(h, program, ops, theta, k, kShift);
        const double minus = energy_of_ops(h, program, ops, theta, k, -kShift);
        out.gradient[*op.param] += op.scale / 2.0 * (plus - minus);
    }
    return out;
}

GradientResult finite_difference(const QubitHamiltonian &h,
                                 const AnsatzProgram &program,
                                 std::span<const double> theta, double step) {
    require(step > 0.0, ErrorKind::Config,
            "finite-difference step must be positive");
    check_inputs(h, program, theta);
    GradientResult out;
    out.energy = energy(h, program, theta);
    out.gradient.assign(program.param_count, 0.0);
    std::vector<double> work(theta.begin(), theta.end());
    for (std::size_t k = 0; k < work.size(); ++k) {
        const double saved = work[k];
        work[k] = saved + step;
        const double plus = energy(h, program, work);
        work[k] = saved - step;
        const double minus = energy(h, program, work);
        work[k] = saved;
        out.gradient[k] = (plus - minus) / (2.0 * step);
    }
    return out;
}

GradientResult compute_gradient(GradientMethod method,
                                const QubitHamiltonian &h,
                                const AnsatzProgram &program,
                                std::span<const double> theta) {
    switch (method) {
    case GradientMethod::Adjoint:
        return adjoint_gradient(h, program, theta);
    case GradientMethod::ParameterShift:
        return parameter_shift_gradient(h, program, theta);
    case GradientMethod::FiniteDifference:
        return finite_difference(h, program, theta);
    }
    return adjoint_gradient(h, program, theta);
}

} // namespace lstmfc
