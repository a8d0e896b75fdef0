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
 * @file lstm.hpp
 * LSTM cell with hand-written backward pass, and the pad/truncate maps used
 * to bring variable-length parameter vectors to a fixed width.
 */
#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace lstmfc {

/**
 * Gate weights act on the concatenation [h_{t-1}; x_t], so every matrix is
 * hidden_dim x (hidden_dim + input_dim).
 */
struct LstmWeights {
    Eigen::MatrixXd W_f, W_i, W_c, W_o;
    Eigen::VectorXd b_f, b_i, b_c, b_o;

    static LstmWeights zeros(std::size_t hidden_dim, std::size_t input_dim);
    /// Uniform(-1/sqrt(M), 1/sqrt(M)) entries, PyTorch-style.
    static LstmWeights random(std::size_t hidden_dim, std::size_t input_dim,
                              std::mt19937_64 &rng);

    [[nodiscard]] std::size_t hidden_dim() const {
        return static_cast<std::size_t>(W_f.rows());
    }
    [[nodiscard]] std::size_t input_dim() const {
        return static_cast<std::size_t>(W_f.cols() - W_f.rows());
    }
    [[nodiscard]] bool all_finite() const;

    /// The eight blocks in a fixed order, as flat mutable views.
    [[nodiscard]] std::vector<std::span<double>> blocks();
    [[nodiscard]] std::vector<std::span<const double>> blocks() const;
};

struct LstmState {
    Eigen::VectorXd h;
    Eigen::VectorXd c;

    static LstmState zeros(std::size_t hidden_dim);
};

/// Activations kept for the backward pass.
struct LstmCache {
    Eigen::VectorXd z; // [h_{t-1}; x_t]
    Eigen::VectorXd f, i, g, o;
    Eigen::VectorXd c_prev;
    Eigen::VectorXd tanh_c;
};

struct LstmStepResult {
    LstmState state;
    Eigen::VectorXd phi; // latent output, equal to h_t
};

/**
 * f = s(W_f z + b_f), i = s(W_i z + b_i), g = tanh(W_c z + b_c),
 * c = f*c_prev + i*g, o = s(W_o z + b_o), h = o*tanh(c).
 */
[[nodiscard]] LstmStepResult lstm_step(const LstmWeights &w,
                                       const LstmState &state,
                                       const Eigen::VectorXd &x,
                                       LstmCache *cache = nullptr);

struct LstmStepGradient {
    Eigen::VectorXd d_h_prev;
    Eigen::VectorXd d_c_prev;
    Eigen::VectorXd d_x;
};

/// Backpropagate dL/dh_t and dL/dc_t (from later steps) through one step,
/// accumulating weight gradients into `grad`.
LstmStepGradient lstm_step_backward(const LstmWeights &w,
                                    const LstmCache &cache,
                                    const Eigen::VectorXd &d_h,
                                    const Eigen::VectorXd &d_c,
                                    LstmWeights &grad);

/// Append zeros up to `width`, or keep the first `width` entries.
[[nodiscard]] std::vector<double> pad_or_truncate(std::span<const double> x,
                                                  std::size_t width);

/// First `n` entries of a width-M output; n > M is rejected.
[[nodiscard]] std::vector<double>
truncate_output(std::span<const double> y_hat, std::size_t n);

} // namespace lstmfc
