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
#include "lstmfc/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <utility>

#include <Eigen/Eigenvalues>

#include "lstmfc/error.hpp"

namespace lstmfc {

namespace {

constexpr Complex kI{0.0, 1.0};

inline double parity_sign(std::uint64_t bits) {
    return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

Complex i_power(std::size_t k) {
    switch (k % 4) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

} // namespace

PauliString::PauliString(std::size_t n_qubits) : n_(n_qubits) {
    require(n_qubits <= kMaxLength, ErrorKind::Config,
            "Pauli string longer than 64 qubits");
}

PauliString PauliString::parse(std::string_view text) {
    PauliString p(text.size());
    for (std::size_t q = 0; q < text.size(); ++q) {
        switch (text[q]) {
        case 'I':
            break;
        case 'X':
            p.set(q, Pauli::X);
            break;
        case 'Y':
            p.set(q, Pauli::Y);
            break;
        case 'Z':
            p.set(q, Pauli::Z);
            break;
        default:
            throw Error(ErrorKind::Config,
                        "invalid Pauli character '" + std::string(1, text[q]) +
                            "' at position " + std::to_string(q) + " in \"" +
                            std::string(text) + "\"");
        }
    }
    return p;
}

Pauli PauliString::at(std::size_t qubit) const {
    require(qubit < n_, ErrorKind::Dimension, "Pauli index out of range");
    const bool x = (x_ >> qubit) & 1U;
    const bool z = (z_ >> qubit) & 1U;
    if (x && z) {
        return Pauli::Y;
    }
    if (x) {
        return Pauli::X;
    }
    return z ? Pauli::Z : Pauli::I;
}

void PauliString::set(std::size_t qubit, Pauli p) {
    require(qubit < n_, ErrorKind::Dimension, "Pauli index out of range");
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    x_ &= ~bit;
    z_ &= ~bit;
    if (p == Pauli::X || p == Pauli::Y) {
        x_ |= bit;
    }
    if (p == Pauli::Z || p == Pauli::Y) {
        z_ |= bit;
    }
}

std::size_t PauliString::y_count() const noexcept {
    return static_cast<std::size_t>(std::popcount(x_ & z_));
}

Complex PauliString::phase_factor() const noexcept {
    return i_power(y_count());
}

std::string PauliString::str() const {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    std::string s(n_, 'I');
    for (std::size_t q = 0; q < n_; ++q) {
        s[q] = kChars[static_cast<int>(at(q))];
    }
    return s;
}

QubitHamiltonian::QubitHamiltonian(std::size_t n_qubits,
                                   std::span<const PauliTerm> terms)
    : n_qubits_(n_qubits) {
    require(n_qubits >= 1, ErrorKind::Config,
            "Hamiltonian needs at least one qubit");
    require(n_qubits <= PauliString::kMaxLength, ErrorKind::Config,
            "Hamiltonian wider than 64 qubits");

    // First-occurrence order is kept so merged output is deterministic.
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index;
    std::vector<PauliTerm> merged;
    for (const auto &t : terms) {
        require(t.string.size() == n_qubits, ErrorKind::Dimension,
                "Pauli string \"" + t.string.str() + "\" has length " +
                    std::to_string(t.string.size()) + ", expected " +
                    std::to_string(n_qubits));
        require(std::isfinite(t.coeff), ErrorKind::Numerical,
                "non-finite coefficient on \"" + t.string.str() + "\"");
        const auto key = std::make_pair(t.string.x_mask(), t.string.z_mask());
        auto [it, inserted] = index.try_emplace(key, merged.size());
        if (inserted) {
            merged.push_back(t);
        } else {
            merged[it->second].coeff += t.coeff;
        }
    }
    for (auto &t : merged) {
        if (std::abs(t.coeff) >= kDropThreshold) {
            terms_.push_back(std::move(t));
        }
    }

    std::map<std::uint64_t, std::size_t> group_of;
    for (const auto &t : terms_) {
        const std::uint64_t x = t.string.x_mask();
        if (x == 0) {
            diag_z_.push_back(t.string.z_mask());
            diag_coeff_.push_back(t.coeff);
            continue;
        }
        auto [it, inserted] = group_of.try_emplace(x, groups_.size());
        if (inserted) {
            groups_.push_back(FlipGroup{x, {}, {}});
        }
        auto &g = groups_[it->second];
        g.z.push_back(t.string.z_mask());
        g.coeff.push_back(t.coeff * t.string.phase_factor());
    }

    if (n_qubits_ <= 24) {
        const std::size_t dim = std::size_t{1} << n_qubits_;
        diagonal_.assign(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            diagonal_[i] = diagonal_at(i);
        }
    }
}

double QubitHamiltonian::diagonal_at(std::uint64_t index) const {
    double d = 0.0;
    for (std::size_t k = 0; k < diag_z_.size(); ++k) {
        d += diag_coeff_[k] * parity_sign(index & diag_z_[k]);
    }
    return d;
}

void QubitHamiltonian::apply(std::span<const Complex> in,
                             std::span<Complex> out) const {
    require(n_qubits_ <= kMaxQubits, ErrorKind::Config,
            "Hamiltonian too wide for dense application");
    const std::size_t dim = std::size_t{1} << n_qubits_;
    require(in.size() == dim && out.size() == dim, ErrorKind::Dimension,
            "Hamiltonian on " + std::to_string(n_qubits_) +
                " qubits applied to a vector of length " +
                std::to_string(in.size()));

    if (!diagonal_.empty()) {
        for (std::size_t i = 0; i < dim; ++i) {
            out[i] = diagonal_[i] * in[i];
        }
    } else {
        for (std::size_t i = 0; i < dim; ++i) {
            out[i] = diagonal_at(i) * in[i];
        }
    }
    for (const auto &g : groups_) {
        const std::size_t nz = g.z.size();
        for (std::size_t i = 0; i < dim; ++i) {
            Complex s{0.0, 0.0};
            for (std::size_t k = 0; k < nz; ++k) {
                s += g.coeff[k] * parity_sign(i & g.z[k]);
            }
            out[i ^ g.x] += s * in[i];
        }
    }
}

Complex QubitHamiltonian::expectation_unchecked(
    std::span<const Complex> v) const {
    const std::size_t dim = std::size_t{1} << n_qubits_;
    require(v.size() == dim, ErrorKind::Dimension,
            "Hamiltonian on " + std::to_string(n_qubits_) +
                " qubits measured on a vector of length " +
                std::to_string(v.size()));
    double diag = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const double d = diagonal_.empty() ? diagonal_at(i) : diagonal_[i];
        diag += d * std::norm(v[i]);
    }
    Complex off{0.0, 0.0};
    for (const auto &g : groups_) {
        const std::size_t nz = g.z.size();
        for (std::size_t i = 0; i < dim; ++i) {
            Complex s{0.0, 0.0};
            for (std::size_t k = 0; k < nz; ++k) {
                s += g.coeff[k] * parity_sign(i & g.z[k]);
            }
            off += std::conj(v[i ^ g.x]) * s * v[i];
        }
    }
    return Complex{diag, 0.0} + off;
}

QubitHamiltonian merge_terms(std::span<const PauliTerm> terms) {
    require(!terms.empty(), ErrorKind::Config,
            "cannot infer qubit count from an empty term list");
    return QubitHamiltonian(terms.front().string.size(), terms);
}

StateVector apply_hamiltonian(const QubitHamiltonian &h, const StateVector &v) {
    require(v.n_qubits() == h.n_qubits(), ErrorKind::Dimension,
            "Hamiltonian on " + std::to_string(h.n_qubits()) +
                " qubits applied to a " + std::to_string(v.n_qubits()) +
                "-qubit state");
    StateVector out(v.n_qubits(), std::vector<Complex>(v.dim()));
    h.apply(v.amplitudes(), out.amplitudes());
    return out;
}

double expectation(const QubitHamiltonian &h, const StateVector &v) {
    require(v.n_qubits() == h.n_qubits(), ErrorKind::Dimension,
            "Hamiltonian on " + std::to_string(h.n_qubits()) +
                " qubits measured on a " + std::to_string(v.n_qubits()) +
                "-qubit state");
    require(std::abs(v.norm_squared() - 1.0) <= 1e-10, ErrorKind::Numerical,
            "expectation requires a normalized state");
    const Complex e = h.expectation_unchecked(v.amplitudes());
    require(std::abs(e.imag()) < 1e-9, ErrorKind::Numerical,
            "expectation value has an imaginary part");
    return e.real();
}

namespace {

using CVec = std::vector<Complex>;

double norm2(const CVec &v) {
    double s = 0.0;
    for (const auto &a : v) {
        s += std::norm(a);
    }
    return std::sqrt(s);
}

void project_sector(CVec &v, const std::optional<std::size_t> &particles) {
    if (!particles) {
        return;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (static_cast<std::size_t>(std::popcount(i)) != *particles) {
            v[i] = 0.0;
        }
    }
}

std::size_t sector_dim(std::size_t n, const std::optional<std::size_t> &k) {
    if (!k) {
        return std::size_t{1} << n;
    }
    // binomial(n, k)
    std::size_t r = 1;
    for (std::size_t j = 1; j <= *k; ++j) {
        r = r * (n - *k + j) / j;
    }
    return r;
}

} // namespace

GroundStateResult ground_state(const QubitHamiltonian &h,
                               const GroundStateOptions &opts) {
    const std::size_t n = h.n_qubits();
    require(n <= kMaxGroundStateQubits, ErrorKind::Config,
            "ground_state limited to " +
                std::to_string(kMaxGroundStateQubits) + " qubits");
    require(opts.tol > 0.0, ErrorKind::Config, "tolerance must be positive");
    if (opts.particle_number) {
        require(*opts.particle_number <= n, ErrorKind::Config,
                "particle number exceeds qubit count");
    }
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t kdim =
        std::max<std::size_t>(1, std::min({opts.krylov_dim,
                                           sector_dim(n, opts.particle_number),
                                           dim}));

    CVec start(dim);
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (auto &a : start) {
        a = Complex{uni(rng), uni(rng)};
    }
    project_sector(start, opts.particle_number);
    {
        const double nrm = norm2(start);
        for (auto &a : start) {
            a /= nrm;
        }
    }

    GroundStateResult result;
    std::size_t matvecs = 0;
    CVec w(dim), hv(dim);
    std::vector<CVec> basis;
    basis.reserve(kdim);

    double best_energy = 0.0;
    double best_residual = std::numeric_limits<double>::infinity();
    CVec best_vec = start;

    while (matvecs < opts.max_iter) {
        basis.clear();
        basis.push_back(start);
        std::vector<double> alpha, beta;
        for (std::size_t j = 0; j < kdim && matvecs < opts.max_iter; ++j) {
            h.apply(basis[j], w);
            ++matvecs;
            project_sector(w, opts.particle_number);
            // Full reorthogonalization, two passes.
            double a = 0.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t i = 0; i <= j; ++i) {
                    const Complex c = inner_product(basis[i], w);
                    if (pass == 0 && i == j) {
                        a = c.real();
                    }
                    for (std::size_t k = 0; k < dim; ++k) {
                        w[k] -= c * basis[i][k];
                    }
                }
            }
            alpha.push_back(a);
            const double b = norm2(w);
            if (j + 1 == kdim || b < 1e-12 * std::max(1.0, std::abs(a))) {
                break;
            }
            beta.push_back(b);
            CVec next(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                next[k] = w[k] / b;
            }
            basis.push_back(std::move(next));
        }

        const auto m = static_cast<Eigen::Index>(alpha.size());
        Eigen::VectorXd diag(m), sub(std::max<Eigen::Index>(m - 1, 0));
        for (Eigen::Index i = 0; i < m; ++i) {
            diag[i] = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < m) {
                sub[i] = beta[static_cast<std::size_t>(i)];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        const Eigen::VectorXd y = tri.eigenvectors().col(0);

        CVec ritz(dim, Complex{0.0, 0.0});
        for (Eigen::Index i = 0; i < m; ++i) {
            const auto &b = basis[static_cast<std::size_t>(i)];
            for (std::size_t k = 0; k < dim; ++k) {
                ritz[k] += y[i] * b[k];
            }
        }
        const double rn = norm2(ritz);
        for (auto &a : ritz) {
            a /= rn;
        }
        h.apply(ritz, hv);
        ++matvecs;
        project_sector(hv, opts.particle_number);
        const double energy = h.expectation_unchecked(ritz).real();
        for (std::size_t k = 0; k < dim; ++k) {
            hv[k] -= energy * ritz[k];
        }
        const double residual = norm2(hv);
        if (residual < best_residual) {
            best_residual = residual;
            best_energy = energy;
            best_vec = ritz;
        }
        if (residual <= opts.tol * std::max(1.0, std::abs(energy))) {
            result.converged = true;
            break;
        }
        start = std::move(ritz);
    }

    result.energy = best_energy;
    result.residual_norm = best_residual;
    result.iterations = matvecs;
    result.state = StateVector(n, std::move(best_vec));
    return result;
}

} // namespace lstmfc
