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
 * @file optimizer.hpp
 * First-order update rules shared by VQE and meta-model training.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace lstmfc {

/// theta - lr * grad
[[nodiscard]] std::vector<double> sgd_step(std::span<const double> theta,
                                           std::span<const double> grad,
                                           double lr);

struct AdamParams {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
};

/**
 * @brief One bias-corrected Adam update of `theta` in place; `t` is the
 * 1-based step number. Moment vectors are sized on first use.
 */
void adam_step(AdamState &state, std::span<double> theta,
               std::span<const double> grad, double lr, std::size_t t,
               const AdamParams &params = {});

} // namespace lstmfc
