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
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "lstmfc/ansatz.hpp"
#include "lstmfc/dataset.hpp"
#include "lstmfc/error.hpp"
#include "lstmfc/gradient.hpp"
#include "lstmfc/simulator.hpp"
#include "oracles.hpp"

using namespace lstmfc;
using Catch::Matchers::WithinAbs;
using std::numbers::pi;

namespace {

QubitHamiltonian single(const char *p) {
    const std::vector<PauliTerm> t{{1.0, PauliString::parse(p)}};
    return QubitHamiltonian(1, t);
}

/// RY(pi/2) then exp(-i theta/2 Z): E = <X> = cos(theta).
AnsatzProgram plus_then_z() {
    AnsatzProgram p;
    p.n_qubits = 1;
    p.reference_occupation = "0";
    p.gates = {Gate::fixed_rotation(GateKind::RY, 0, pi / 2),
               Gate::pauli_rotation(PauliString::parse("Z"), 1.0, 0)};
    p.param_count = 1;
    return p;
}

AnsatzProgram one_rx() {
    AnsatzProgram p;
    p.n_qubits = 1;
    p.reference_occupation = "0";
    p.gates = {Gate::rotation(GateKind::RX, 0, 0)};
    p.param_count = 1;
    return p;
}

double max_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

} // namespace

TEST_CASE("analytic single-gate gradients", "[gradient]") {
    const auto x = single("X");
    const auto z = single("Z");
    for (auto method : {GradientMethod::Adjoint, GradientMethod::ParameterShift,
                        GradientMethod::FiniteDifference}) {
        CAPTURE(to_string(method));
        const double zero[] = {0.0};
        const double quarter[] = {pi / 2};

        auto at_zero = compute_gradient(method, x, plus_then_z(), zero);
        CHECK_THAT(at_zero.energy, WithinAbs(1.0, 1e-12));
        CHECK_THAT(at_zero.gradient[0], WithinAbs(0.0, 1e-8));

        auto at_quarter = compute_gradient(method, x, plus_then_z(), quarter);
        CHECK_THAT(at_quarter.energy, WithinAbs(0.0, 1e-12));
        CHECK_THAT(at_quarter.gradient[0], WithinAbs(-1.0, 1e-8));

        CHECK_THAT(compute_gradient(method, z, one_rx(), zero).gradient[0],
                   WithinAbs(0.0, 1e-8));
        CHECK_THAT(compute_gradient(method, z, one_rx(), quarter).gradient[0],
                   WithinAbs(-1.0, 1e-8));
    }
}

TEST_CASE("finite differences on cos(theta)", "[gradient]") {
    const double one[] = {1.0};
    const auto fd = finite_difference(single("Z"), one_rx(), one, 1e-4);
    CHECK_THAT(fd.gradient[0], WithinAbs(-std::sin(1.0), 1e-8));
    CHECK_THROWS_AS(finite_difference(single("Z"), one_rx(), one, 0.0), Error);
}

TEST_CASE("H2 UCCSD gradients agree across methods", "[gradient]") {
    const auto m = load_molecule(LSTMFC_FIXTURES_DIR "/H2.json");
    const auto p = build_uccsd(enumerate_excitations(2, 4), 4);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        const auto theta = oracle::uniform(3, -pi, pi, rng);
        const auto adj = adjoint_gradient(m.hamiltonian, p, theta);
        const auto shift = parameter_shift_gradient(m.hamiltonian, p, theta);
        const auto fd = finite_difference(m.hamiltonian, p, theta);
        CHECK(max_diff(adj.gradient, shift.gradient) < 1e-9);
        CHECK(max_diff(adj.gradient, fd.gradient) < 1e-7);
        CHECK_THAT(adj.energy, WithinAbs(energy(m.hamiltonian, p, theta), 1e-12));
        // Independent dense route for the energy.
        CHECK_THAT(adj.energy,
                   WithinAbs(oracle::energy(oracle::hamiltonian(m.hamiltonian),
                                            oracle::run(p, theta)),
                             1e-10));
    }
}

TEST_CASE("HEA and strongly entangling gradients", "[gradient]") {
    std::mt19937_64 rng(6);
    const auto terms = oracle::random_terms(4, 10, rng);
    const QubitHamiltonian h(4, terms);
    for (const auto &p : {build_hea(4, 2, "1100"), build_strongly_entangling(4, 2)}) {
        const auto theta = oracle::uniform(p.param_count, -pi, pi, rng);
        const auto adj = adjoint_gradient(h, p, theta);
        CHECK(adj.gradient.size() == p.param_count);
        CHECK(max_diff(adj.gradient, parameter_shift_gradient(h, p, theta).gradient) < 1e-9);
        CHECK(max_diff(adj.gradient, finite_difference(h, p, theta, 1e-4).gradient) < 1e-6);
        for (double g : adj.gradient) {
            CHECK(std::isfinite(g));
        }
    }
}

TEST_CASE("parameters shared by several gates accumulate", "[gradient]") {
    AnsatzProgram p;
    p.n_qubits = 2;
    p.reference_occupation = "00";
    p.gates = {Gate::rotation(GateKind::RY, 0, 0), Gate::cnot(0, 1),
               Gate::rotation(GateKind::RX, 1, 0),
               Gate::pauli_rotation(PauliString::parse("XY"), -0.7, 1),
               Gate::rotation(GateKind::RZ, 0, 1)};
    p.param_count = 2;
    std::mt19937_64 rng(10);
    const QubitHamiltonian h(2, oracle::random_terms(2, 5, rng));
    const double theta[] = {0.4, -1.3};
    const auto adj = adjoint_gradient(h, p, theta);
    CHECK(max_diff(adj.gradient, parameter_shift_gradient(h, p, theta).gradient) < 1e-9);
    CHECK(max_diff(adj.gradient, finite_difference(h, p, theta).gradient) < 1e-7);
}

TEST_CASE("adjoint sweep costs three gate applications per gate", "[gradient]") {
    const auto m = load_molecule(LSTMFC_FIXTURES_DIR "/H4.json");
    const auto p = build_uccsd(enumerate_excitations(4, 8), 8);
    const std::vector<double> theta(p.param_count, 0.05);
    reset_gate_application_count();
    (void)adjoint_gradient(m.hamiltonian, p, theta);
    CHECK(gate_application_count() == 3 * lower(p).size());
}

TEST_CASE("gradient method names", "[gradient]") {
    CHECK(parse_gradient_method("adjoint") == GradientMethod::Adjoint);
    CHECK(parse_gradient_method("shift") == GradientMethod::ParameterShift);
    CHECK(parse_gradient_method("fd") == GradientMethod::FiniteDifference);
    CHECK_THROWS_AS(parse_gradient_method("magic"), Error);
    const double two[] = {0.1, 0.2};
    CHECK_THROWS_AS(adjoint_gradient(single("Z"), one_rx(), two), Error);
}
