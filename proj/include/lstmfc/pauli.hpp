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
 * @file pauli.hpp
 * Pauli strings, qubit Hamiltonians, matrix-free operator application and
 * a Lanczos ground-state solver used as the exact (FCI) reference.
 */
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lstmfc/state_vector.hpp"

namespace lstmfc {

enum class Pauli : std::uint8_t { I, X, Y, Z };

/**
 * @brief Tensor product of single-qubit Paulis stored as X/Z bit masks.
 *
 * A Y on qubit q sets both bits. The text form has one character per
 * qubit with qubit 0 leftmost, e.g. "IXYZ".
 */
class PauliString {
  public:
    static constexpr std::size_t kMaxLength = 64;

    PauliString() = default;
    /// Identity on n qubits.
    explicit PauliString(std::size_t n_qubits);

    /// Throws ErrorKind::Config naming the offending character.
    static PauliString parse(std::string_view text);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] Pauli at(std::size_t qubit) const;
    void set(std::size_t qubit, Pauli p);

    [[nodiscard]] std::uint64_t x_mask() const noexcept { return x_; }
    [[nodiscard]] std::uint64_t z_mask() const noexcept { return z_; }
    [[nodiscard]] std::size_t y_count() const noexcept;
    [[nodiscard]] bool is_identity() const noexcept { return (x_ | z_) == 0; }

    /// i^(number of Y factors); P|b> = phase_factor * (-1)^{|b & z|} |b ^ x>.
    [[nodiscard]] Complex phase_factor() const noexcept;

    [[nodiscard]] std::string str() const;

    auto operator<=>(const PauliString &) const = default;

  private:
    std::size_t n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

struct PauliTerm {
    double coeff;
    PauliString string;
};

/**
 * @brief Real-weighted sum of Pauli strings (hence Hermitian).
 *
 * Terms are merged on construction: duplicates are summed and terms with
 * |coefficient| < 1e-12 dropped. Instances are immutable.
 */
class QubitHamiltonian {
  public:
    static constexpr double kDropThreshold = 1e-12;

    QubitHamiltonian(std::size_t n_qubits, std::span<const PauliTerm> terms);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }

    /// out = H * in. `out` is overwritten; the spans must not alias.
    void apply(std::span<const Complex> in, std::span<Complex> out) const;

    /// <v|H|v> without any normalization check.
    [[nodiscard]] Complex expectation_unchecked(
        std::span<const Complex> v) const;

  private:
    // Terms sharing an X mask flip the same amplitude pairs.
    struct FlipGroup {
        std::uint64_t x;
        std::vector<std::uint64_t> z;
        std::vector<Complex> coeff; // coefficient times i^{#Y}
    };

    [[nodiscard]] double diagonal_at(std::uint64_t index) const;

    std::size_t n_qubits_;
    std::vector<PauliTerm> terms_;
    std::vector<FlipGroup> groups_;
    std::vector<std::uint64_t> diag_z_;
    std::vector<double> diag_coeff_;
    std::vector<double> diagonal_; // tabulated when the register is small
};

/// Merge duplicate strings. All strings must have the same length.
[[nodiscard]] QubitHamiltonian merge_terms(std::span<const PauliTerm> terms);

/// Sum_k c_k P_k v, computed matrix-free.
[[nodiscard]] StateVector apply_hamiltonian(const QubitHamiltonian &h,
                                            const StateVector &v);

/// Re <v|H|v> for a normalized v (checked to 1e-10).
[[nodiscard]] double expectation(const QubitHamiltonian &h,
                                 const StateVector &v);

struct GroundStateOptions {
    double tol = 1e-9;
    /// Budget in Hamiltonian applications.
    std::size_t max_iter = 20000;
    std::size_t krylov_dim = 60;
    /// Restrict to basis states with this many set bits (electron count).
    std::optional<std::size_t> particle_number;
};

struct GroundStateResult {
    double energy = 0.0;
    double residual_norm = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    StateVector state{1};
};

inline constexpr std::size_t kMaxGroundStateQubits = 20;

/**
 * @brief Lowest eigenpair by restarted Lanczos with full
 * reorthogonalization.
 *
 * Converged when ||H v - E v|| <= tol * max(1, |E|). On budget exhaustion
 * the best estimate is returned with `converged == false`.
 */
[[nodiscard]] GroundStateResult ground_state(const QubitHamiltonian &h,
                                             const GroundStateOptions &opts = {});

} // namespace lstmfc
