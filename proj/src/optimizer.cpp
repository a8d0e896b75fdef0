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
#include "lstmfc/optimizer.hpp"

#include <cmath>

#include "lstmfc/error.hpp"

namespace lstmfc {

std::vector<double> sgd_step(std::span<const double> theta,
                             std::span<const double> grad, double lr) {
    require(theta.size() == grad.size(), ErrorKind::Dimension,
            "sgd_step: theta has " + std::to_string(theta.size()) +
                " entries but gradient has " + std::to_string(grad.size()));
    std::vector<double> out(theta.begin(), theta.end());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] -= lr * grad[k];
    }
    return out;
}

void adam_step(AdamState &state, std::span<double> theta,
               std::span<const double> grad, double lr, std::size_t t,
               const AdamParams &p) {
    require(theta.size() == grad.size(), ErrorKind::Dimension,
            "adam_step: theta and gradient lengths differ");
    require(t >= 1, ErrorKind::Config, "adam_step: step counter starts at 1");
    if (state.m.empty() && state.v.empty()) {
        state.m.assign(theta.size(), 0.0);
        state.v.assign(theta.size(), 0.0);
    }
    require(state.m.size() == theta.size() && state.v.size() == theta.size(),
            ErrorKind::Dimension, "adam_step: moment vectors have wrong size");

    const double td = static_cast<double>(t);
    const double c1 = 1.0 - std::pow(p.beta1, td);
    const double c2 = 1.0 - std::pow(p.beta2, td);
    for (std::size_t k = 0; k < theta.size(); ++k) {
        const double g = grad[k];
        state.m[k] = p.beta1 * state.m[k] + (1.0 - p.beta1) * g;
        state.v[k] = p.beta2 * state.v[k] + (1.0 - p.beta2) * g * g;
        const double m_hat = state.m[k] / c1;
        const double v_hat = state.v[k] / c2;
        theta[k] -= lr * m_hat / (std::sqrt(v_hat) + p.eps);
    }
}

} // namespace lstmfc
