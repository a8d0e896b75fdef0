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
#include "lstmfc/lstm.hpp"

#include <cmath>

#include "lstmfc/error.hpp"

namespace lstmfc {

namespace {

Eigen::VectorXd sigmoid(const Eigen::VectorXd &a) {
    return a.unaryExpr([](double v) { return 1.0 / (1.0 + std::exp(-v)); });
}

template <typename Derived> std::span<double> view(Eigen::PlainObjectBase<Derived> &m) {
    return {m.data(), static_cast<std::size_t>(m.size())};
}
template <typename Derived>
std::span<const double> view(const Eigen::PlainObjectBase<Derived> &m) {
    return {m.data(), static_cast<std::size_t>(m.size())};
}

} // namespace

LstmWeights LstmWeights::zeros(std::size_t hidden_dim, std::size_t input_dim) {
    require(hidden_dim >= 1, ErrorKind::Config, "LSTM hidden size must be >= 1");
    const auto m = static_cast<Eigen::Index>(hidden_dim);
    const auto cols = static_cast<Eigen::Index>(hidden_dim + input_dim);
    LstmWeights w;
    w.W_f = w.W_i = w.W_c = w.W_o = Eigen::MatrixXd::Zero(m, cols);
    w.b_f = w.b_i = w.b_c = w.b_o = Eigen::VectorXd::Zero(m);
    return w;
}

LstmWeights LstmWeights::random(std::size_t hidden_dim, std::size_t input_dim,
                                std::mt19937_64 &rng) {
    LstmWeights w = zeros(hidden_dim, input_dim);
    const double bound = 1.0 / std::sqrt(static_cast<double>(hidden_dim));
    std::uniform_real_distribution<double> dist(-bound, bound);
    for (auto block : w.blocks()) {
        for (double &v : block) {
            v = dist(rng);
        }
    }
    return w;
}

bool LstmWeights::all_finite() const {
    for (auto block : blocks()) {
        for (double v : block) {
            if (!std::isfinite(v)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::span<double>> LstmWeights::blocks() {
    return {view(W_f), view(W_i), view(W_c), view(W_o),
            view(b_f), view(b_i), view(b_c), view(b_o)};
}

std::vector<std::span<const double>> LstmWeights::blocks() const {
    return {view(W_f), view(W_i), view(W_c), view(W_o),
            view(b_f), view(b_i), view(b_c), view(b_o)};
}

LstmState LstmState::zeros(std::size_t hidden_dim) {
    const auto m = static_cast<Eigen::Index>(hidden_dim);
    return {Eigen::VectorXd::Zero(m), Eigen::VectorXd::Zero(m)};
}

LstmStepResult lstm_step(const LstmWeights &w, const LstmState &state,
                         const Eigen::VectorXd &x, LstmCache *cache) {
    const std::size_t m = w.hidden_dim();
    require(static_cast<std::size_t>(x.size()) == w.input_dim(),
            ErrorKind::Dimension,
            "lstm_step: input has " + std::to_string(x.size()) +
                " entries, cell expects " + std::to_string(w.input_dim()));
    require(static_cast<std::size_t>(state.h.size()) == m &&
                static_cast<std::size_t>(state.c.size()) == m,
            ErrorKind::Dimension, "lstm_step: state size differs from cell");

    Eigen::VectorXd z(w.W_f.cols());
    z << state.h, x;
    Eigen::VectorXd f = sigmoid(w.W_f * z + w.b_f);
    Eigen::VectorXd i = sigmoid(w.W_i * z + w.b_i);
    Eigen::VectorXd g = (w.W_c * z + w.b_c).array().tanh().matrix();
    Eigen::VectorXd o = sigmoid(w.W_o * z + w.b_o);
    Eigen::VectorXd c = f.cwiseProduct(state.c) + i.cwiseProduct(g);
    Eigen::VectorXd tanh_c = c.array().tanh().matrix();
    Eigen::VectorXd h = o.cwiseProduct(tanh_c);

    if (cache != nullptr) {
        *cache = LstmCache{std::move(z), f, i, g, o, state.c, tanh_c};
    }
    LstmStepResult out{{h, std::move(c)}, h};
    return out;
}

LstmStepGradient lstm_step_backward(const LstmWeights &w,
                                    const LstmCache &k,
                                    const Eigen::VectorXd &d_h,
                                    const Eigen::VectorXd &d_c,
                                    LstmWeights &grad) {
    const auto m = w.W_f.rows();
    const Eigen::ArrayXd one = Eigen::ArrayXd::Ones(m);

    const Eigen::ArrayXd dc =
        d_c.array() + d_h.array() * k.o.array() *
                          (one - k.tanh_c.array().square());
    const Eigen::VectorXd dp_o =
        (d_h.array() * k.tanh_c.array() * k.o.array() * (one - k.o.array()))
            .matrix();
    const Eigen::VectorXd dp_i =
        (dc * k.g.array() * k.i.array() * (one - k.i.array())).matrix();
    const Eigen::VectorXd dp_g =
        (dc * k.i.array() * (one - k.g.array().square())).matrix();
    const Eigen::VectorXd dp_f =
        (dc * k.c_prev.array() * k.f.array() * (one - k.f.array())).matrix();

    grad.W_f.noalias() += dp_f * k.z.transpose();
    grad.W_i.noalias() += dp_i * k.z.transpose();
    grad.W_c.noalias() += dp_g * k.z.transpose();
    grad.W_o.noalias() += dp_o * k.z.transpose();
    grad.b_f += dp_f;
    grad.b_i += dp_i;
    grad.b_c += dp_g;
    grad.b_o += dp_o;

    Eigen::VectorXd dz = w.W_f.transpose() * dp_f;
    dz.noalias() += w.W_i.transpose() * dp_i;
    dz.noalias() += w.W_c.transpose() * dp_g;
    dz.noalias() += w.W_o.transpose() * dp_o;

    return {dz.head(m), (dc * k.f.array()).matrix(), dz.tail(dz.size() - m)};
}

std::vector<double> pad_or_truncate(std::span<const double> x,
                                    std::size_t width) {
    std::vector<double> out(width, 0.0);
    const std::size_t n = std::min(width, x.size());
    std::copy_n(x.begin(), n, out.begin());
    return out;
}

std::vector<double> truncate_output(std::span<const double> y_hat,
                                    std::size_t n) {
    require(n <= y_hat.size(), ErrorKind::Model,
            "truncate_output: cannot take " + std::to_string(n) +
                " parameters from a latent vector of size " +
                std::to_string(y_hat.size()));
    return {y_hat.begin(), y_hat.begin() + static_cast<std::ptrdiff_t>(n)};
}

} // namespace lstmfc
