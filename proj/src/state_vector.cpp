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
#include "lstmfc/state_vector.hpp"

#include <cmath>
#include <string>

#include "lstmfc/error.hpp"

namespace lstmfc {

namespace {
std::size_t checked_dim(std::size_t n_qubits) {
    require(n_qubits >= 1 && n_qubits <= kMaxQubits, ErrorKind::Config,
            "state vector qubit count must be in [1, " +
                std::to_string(kMaxQubits) + "], got " +
                std::to_string(n_qubits));
    return std::size_t{1} << n_qubits;
}
} // namespace

StateVector::StateVector(std::size_t n_qubits)
    : n_qubits_(n_qubits), amps_(checked_dim(n_qubits)) {
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    require(amps_.size() == checked_dim(n_qubits), ErrorKind::Dimension,
            "state vector needs 2^" + std::to_string(n_qubits) +
                " amplitudes, got " + std::to_string(amps_.size()));
}

double StateVector::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

void StateVector::normalize() {
    const double n = std::sqrt(norm_squared());
    require(n > 0.0, ErrorKind::Numerical, "cannot normalize a zero vector");
    for (auto &a : amps_) {
        a /= n;
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    require(a.size() == b.size(), ErrorKind::Dimension,
            "inner product of vectors with different lengths");
    Complex s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += std::conj(a[i]) * b[i];
    }
    return s;
}

} // namespace lstmfc
