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
#include <random>

#include "lstmfc/error.hpp"
#include "lstmfc/lstm.hpp"

using namespace lstmfc;
using Catch::Matchers::WithinAbs;

namespace {

Eigen::VectorXd random_vec(Eigen::Index n, std::mt19937_64 &rng, double scale = 1.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = d(rng);
    }
    return v;
}

} // namespace

TEST_CASE("all-zero cell", "[lstm]") {
    const auto w = LstmWeights::zeros(4, 3);
    LstmCache cache;
    const auto out = lstm_step(w, LstmState::zeros(4), Eigen::VectorXd::Ones(3), &cache);
    CHECK(cache.f.isConstant(0.5));
    CHECK(cache.i.isConstant(0.5));
    CHECK(cache.o.isConstant(0.5));
    CHECK(cache.g.isZero());
    CHECK(out.state.c.isZero());
    CHECK(out.state.h.isZero());
    CHECK(out.phi == out.state.h);
}

TEST_CASE("saturated forget gate retains memory", "[lstm]") {
    std::mt19937_64 rng(1);
    auto w = LstmWeights::random(3, 2, rng);
    w.b_f.setConstant(50.0);
    w.b_i.setConstant(-50.0);
    LstmState s{random_vec(3, rng, 0.5), random_vec(3, rng, 2.0)};
    const auto out = lstm_step(w, s, random_vec(2, rng));
    for (Eigen::Index k = 0; k < 3; ++k) {
        CHECK_THAT(out.state.c(k), WithinAbs(s.c(k), 1e-12));
    }
}

TEST_CASE("gate activations stay in range", "[lstm][property]") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        auto w = LstmWeights::random(5, 4, rng);
        LstmState s{random_vec(5, rng, 0.99), random_vec(5, rng, 5.0)};
        LstmCache c;
        const auto out = lstm_step(w, s, random_vec(4, rng, 10.0), &c);
        for (const auto *v : {&c.f, &c.i, &c.o}) {
            CHECK(v->minCoeff() > 0.0);
            CHECK(v->maxCoeff() < 1.0);
        }
        CHECK(c.g.cwiseAbs().maxCoeff() < 1.0);
        CHECK(out.state.h.cwiseAbs().maxCoeff() < 1.0);
    }
}

TEST_CASE("backward pass matches finite differences", "[lstm][oracle]") {
    std::mt19937_64 rng(3);
    const std::size_t m = 3, d = 2;
    const auto w = LstmWeights::random(m, d, rng);
    const LstmState s{random_vec(m, rng, 0.8), random_vec(m, rng, 1.0)};
    const Eigen::VectorXd x = random_vec(d, rng);
    const Eigen::VectorXd rh = random_vec(m, rng);
    const Eigen::VectorXd rc = random_vec(m, rng);

    // Scalar loss on the step outputs: rh . h + rc . c
    auto loss = [&](const LstmWeights &ww, const LstmState &ss, const Eigen::VectorXd &xx) {
        const auto o = lstm_step(ww, ss, xx);
        return rh.dot(o.state.h) + rc.dot(o.state.c);
    };

    LstmCache cache;
    (void)lstm_step(w, s, x, &cache);
    auto grad = LstmWeights::zeros(m, d);
    const auto back = lstm_step_backward(w, cache, rh, rc, grad);

    const double eps = 1e-6;
    auto check_close = [](double analytic, double numeric) {
        const double scale = std::max({std::abs(analytic), std::abs(numeric), 1e-3});
        CHECK(std::abs(analytic - numeric) / scale < 1e-5);
    };

    auto perturbed = w;
    auto params = perturbed.blocks();
    const auto grads = std::as_const(grad).blocks();
    for (std::size_t b = 0; b < params.size(); ++b) {
        for (std::size_t k = 0; k < params[b].size(); ++k) {
            const double saved = params[b][k];
            params[b][k] = saved + eps;
            const double up = loss(perturbed, s, x);
            params[b][k] = saved - eps;
            const double down = loss(perturbed, s, x);
            params[b][k] = saved;
            check_close(grads[b][k], (up - down) / (2 * eps));
        }
    }
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(d); ++k) {
        Eigen::VectorXd xp = x, xm = x;
        xp(k) += eps;
        xm(k) -= eps;
        check_close(back.d_x(k), (loss(w, s, xp) - loss(w, s, xm)) / (2 * eps));
    }
    for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(m); ++k) {
        LstmState sp = s, sm = s;
        sp.h(k) += eps;
        sm.h(k) -= eps;
        check_close(back.d_h_prev(k), (loss(w, sp, x) - loss(w, sm, x)) / (2 * eps));
        sp = s;
        sm = s;
        sp.c(k) += eps;
        sm.c(k) -= eps;
        check_close(back.d_c_prev(k), (loss(w, sp, x) - loss(w, sm, x)) / (2 * eps));
    }
}

TEST_CASE("shape checks", "[lstm]") {
    const auto w = LstmWeights::zeros(4, 3);
    CHECK(w.hidden_dim() == 4);
    CHECK(w.input_dim() == 3);
    CHECK_THROWS_AS(lstm_step(w, LstmState::zeros(4), Eigen::VectorXd::Zero(2)), Error);
    CHECK_THROWS_AS(lstm_step(w, LstmState::zeros(3), Eigen::VectorXd::Zero(3)), Error);
    CHECK_THROWS_AS(LstmWeights::zeros(0, 3), Error);
    auto bad = w;
    bad.W_c(0, 0) = std::nan("");
    CHECK_FALSE(bad.all_finite());
}

TEST_CASE("pad and truncate", "[lstm]") {
    const std::vector<double> x{1, 2, 3};
    CHECK(pad_or_truncate(x, 5) == std::vector<double>{1, 2, 3, 0, 0});
    CHECK(pad_or_truncate(x, 2) == std::vector<double>{1, 2});
    CHECK(pad_or_truncate({}, 3) == std::vector<double>{0, 0, 0});

    const std::vector<double> y{0.1, 0.2, 0.3};
    CHECK(truncate_output(y, 2) == std::vector<double>{0.1, 0.2});
    CHECK(truncate_output(y, 3) == y);
    CHECK_THROWS_AS(truncate_output(y, 4), Error);
}

TEST_CASE("pad then truncate is the identity", "[lstm][property]") {
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::size_t> len(0, 12);
    std::uniform_real_distribution<double> val(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> x(len(rng));
        for (double &v : x) {
            v = val(rng);
        }
        const std::size_t width = x.size() + len(rng);
        CHECK(truncate_output(pad_or_truncate(x, width), x.size()) == x);
    }
}
