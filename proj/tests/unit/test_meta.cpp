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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>
#include <random>

#include "lstmfc/dataset.hpp"
#include "lstmfc/error.hpp"
#include "lstmfc/experiments.hpp"
#include "lstmfc/gradient.hpp"
#include "lstmfc/meta.hpp"
#include "meta_checks.hpp"
#include "oracles.hpp"

using namespace lstmfc;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const DatasetManifest &manifest() {
    static const DatasetManifest m =
        DatasetManifest::load_directory(LSTMFC_FIXTURES_DIR, LoadMode::Lenient);
    return m;
}

} // namespace

TEST_CASE("fc_project", "[meta]") {
    const auto zero = FcHead::zeros("m", 4, {2, 3});
    CHECK(fc_project(zero, Eigen::VectorXd::Ones(4)) == std::vector<double>(5, 0.0));

    auto head = FcHead::zeros("m", 3, {2, 1});
    head.W_s << 1, 2, 3, 4, 5, 6;
    head.W_d << 7, 8, 9;
    head.b_d << 0.5;
    const auto theta = fc_project(head, Eigen::Vector3d(1, 0, 0));
    CHECK(theta == std::vector<double>{1, 4, 7.5});

    CHECK_THROWS_AS(fc_project(head, Eigen::VectorXd::Ones(4)), Error);

    const auto program = uccsd_program(manifest().find("H4"));
    auto model = MetaModel::create(MetaMode::FcHeads, 6, 2, 1);
    model.ensure_head("H4", program);
    const auto &h = model.heads.at("H4");
    CHECK(h.n_singles() == 8);
    CHECK(h.n_doubles() == 18);
    CHECK(fc_project(h, Eigen::VectorXd::Ones(6)).size() == 26);
    CHECK(h.b_s.isZero());
    CHECK(h.W_d.cwiseAbs().maxCoeff() <= 0.01);
}

TEST_CASE("trajectory loss weights", "[meta]") {
    CHECK_THAT(trajectory_loss(std::vector{-2.0}), WithinRel(-0.2, 1e-15));
    CHECK_THAT(trajectory_loss(std::vector<double>(10, -1.5)), WithinRel(0.55 * -1.5, 1e-14));

    std::vector<double> e{-1.0, -1.2, -0.7, -3.0, -0.1};
    auto swapped = e;
    std::swap(swapped[0], swapped[3]);
    // Moving E from position 1 to 4 changes the loss by (0.4-0.1)/5 * dE.
    const double expected = (0.1 * 1 * (e[3] - e[0]) + 0.1 * 4 * (e[0] - e[3])) / 5.0;
    CHECK_THAT(trajectory_loss(swapped) - trajectory_loss(e), WithinAbs(expected, 1e-14));
    CHECK_THROWS_AS(trajectory_loss({}), Error);
}

TEST_CASE("unroll", "[meta]") {
    const auto &h2 = manifest().find("H2");
    const auto program = uccsd_program(h2);

    SECTION("zero heads keep the reference state") {
        auto model = MetaModel::create(MetaMode::FcHeads, 8, 10, 0);
        model.heads.emplace("H2", FcHead::zeros("H2", 8, *program.param_split));
        const auto u = unroll(model, h2, program);
        REQUIRE(u.energies.size() == 10);
        for (std::size_t t = 0; t < 10; ++t) {
            CHECK(u.thetas[t] == std::vector<double>(3, 0.0));
            CHECK_THAT(u.energies[t], WithinAbs(h2.hf_energy_ha, 1e-12));
        }
        CHECK_THAT(u.loss, WithinAbs(0.55 * h2.hf_energy_ha, 1e-12));
        CHECK(infer_init(model, h2, program) == std::vector<double>(3, 0.0));
    }
    SECTION("single step") {
        auto model = MetaModel::create(MetaMode::FcHeads, 8, 1, 0);
        model.ensure_head("H2", program);
        const auto u = unroll(model, h2, program);
        CHECK_THAT(u.loss, WithinRel(0.1 * u.energies[0], 1e-15));
    }
    SECTION("compatibility") {
        auto fc = MetaModel::create(MetaMode::FcHeads, 8, 2, 0);
        CHECK_THROWS_AS(unroll(fc, h2, program), Error);
        fc.heads.emplace("H2", FcHead::zeros("H2", 8, {1, 2}));
        CHECK_THROWS_AS(unroll(fc, h2, program), Error);

        const auto &h4 = manifest().find("H4");
        auto pad = MetaModel::create(MetaMode::PadTruncate, 20, 2, 0);
        CHECK_THROWS_AS(unroll(pad, h4, uccsd_program(h4)), Error);
        const auto u = unroll(pad, h2, program);
        CHECK(u.thetas.back().size() == 3);
    }
}

TEST_CASE("backpropagation through time matches finite differences", "[meta][oracle]") {
    const auto item = checks::toy_item(12);
    SECTION("fc heads, M = 3, T = 2") {
        auto model = MetaModel::create(MetaMode::FcHeads, 3, 2, 5);
        model.ensure_head("toy", item.program);
        // Larger head weights so the parameter feedback path matters.
        for (auto b : model.heads.at("toy").blocks()) {
            std::mt19937_64 rng(9);
            std::uniform_real_distribution<double> d(-0.8, 0.8);
            for (double &v : b) {
                v = d(rng);
            }
        }
        CHECK(checks::bptt_relative_error(model, item) < 1e-5);
    }
    SECTION("fc heads with a narrow input") {
        auto model = MetaModel::create(MetaMode::FcHeads, 3, 3, 6, 3);
        model.ensure_head("toy", item.program);
        CHECK(checks::bptt_relative_error(model, item) < 1e-5);
    }
    SECTION("pad-truncate") {
        auto model = MetaModel::create(MetaMode::PadTruncate, 3, 2, 7);
        CHECK(checks::bptt_relative_error(model, item) < 1e-5);
    }
}

TEST_CASE("meta-training", "[meta][train]") {
    const std::vector<TrainingItem> pool = training_pool(manifest(), {"H2"});

    SECTION("loss falls over the first epochs on H2") {
        TrainConfig cfg;
        cfg.epochs_max = 10;
        cfg.early_stop_rel_tol = 1e-15;
        const auto r = train(MetaModel::create(MetaMode::FcHeads, 8, 10, 0), pool, cfg);
        REQUIRE(r.loss_history.size() == 10);
        CHECK(r.loss_history.back() < r.loss_history.front());
        CHECK(r.stop_reason == StopReason::EpochCap);
    }
    SECTION("same seed, same history") {
        TrainConfig cfg;
        cfg.epochs_max = 4;
        const auto a = train(MetaModel::create(MetaMode::FcHeads, 6, 10, 3), pool, cfg);
        const auto b = train(MetaModel::create(MetaMode::FcHeads, 6, 10, 3), pool, cfg);
        CHECK(a.loss_history == b.loss_history);
        CHECK(checkpoint_json(a.model) == checkpoint_json(b.model));
    }
    SECTION("early stop on a flat loss") {
        TrainConfig cfg;
        cfg.lstm_lr = 1e-300;
        const auto r = train(MetaModel::create(MetaMode::FcHeads, 6, 10, 3), pool, cfg);
        CHECK(r.epochs == 2);
        CHECK(r.stop_reason == StopReason::EarlyStop);
        CHECK(r.loss_history[0] == r.loss_history[1]);
    }
    SECTION("non-finite loss aborts") {
        auto bad = pool;
        bad[0].molecule.hf_energy_ha = std::numeric_limits<double>::infinity();
        try {
            (void)train(MetaModel::create(MetaMode::FcHeads, 6, 10, 3), bad, TrainConfig{});
            FAIL("expected divergence");
        } catch (const Error &e) {
            CHECK(e.kind() == ErrorKind::Divergence);
            CHECK(std::string(e.what()).find("H2") != std::string::npos);
        }
    }
    SECTION("configuration checks") {
        TrainConfig cfg;
        cfg.early_stop_rel_tol = 0.0;
        CHECK_THROWS_AS(cfg.validate(), Error);
        cfg = TrainConfig{};
        cfg.T = 4;
        CHECK_THROWS_AS(train(MetaModel::create(MetaMode::FcHeads, 6, 10, 3), pool, cfg),
                        Error);
        cfg = TrainConfig{};
        cfg.training_molecules = {"H9"};
        CHECK_THROWS_AS(train(MetaModel::create(MetaMode::FcHeads, 6, 10, 3), pool, cfg),
                        Error);
    }
}

TEST_CASE("trained initializer improves on the reference state", "[meta][train]") {
    MetaTrainRequest rq;
    rq.train.training_molecules = {"H2", "H3+"};
    rq.train.adapt_molecules = {"H4"};
    const auto r = meta_train(manifest(), rq);
    CHECK(r.model.heads.size() == 3);
    CHECK(r.adapt_history.contains("H4"));

    const auto &h4 = manifest().find("H4");
    const auto program = uccsd_program(h4);
    const auto theta = infer_init(r.model, h4, program);
    CHECK(theta.size() == 26);
    CHECK(energy(h4.hamiltonian, program, theta) < h4.hf_energy_ha);
}

TEST_CASE("checkpoint round trip", "[meta][checkpoint]") {
    const auto item = checks::toy_item(3);
    auto model = MetaModel::create(MetaMode::FcHeads, 4, 3, 11);
    model.ensure_head("toy", item.program);
    const auto path = std::filesystem::temp_directory_path() / "lstmfc_ckpt_test.json";
    save_checkpoint(model, path);
    const auto loaded = load_checkpoint(path);
    std::filesystem::remove(path);

    CHECK(checkpoint_json(loaded) == checkpoint_json(model));
    CHECK(loaded.mode == MetaMode::FcHeads);
    CHECK(loaded.input_dim == 5);
    CHECK(unroll(loaded, item.molecule, item.program).energies ==
          unroll(model, item.molecule, item.program).energies);

    auto text = checkpoint_json(model);
    const auto at = text.find("\"version\": 1");
    REQUIRE(at != std::string::npos);
    text.replace(at, 12, "\"version\": 9");
    CHECK_THROWS_AS(parse_checkpoint(text), Error);
    CHECK_THROWS_AS(parse_checkpoint("{\"format\": \"lstmfc-checkpoint\"}"), Error);
    CHECK_THROWS_AS(parse_checkpoint("not json"), Error);
    CHECK_THROWS_AS(load_checkpoint("/nonexistent/ckpt.json"), Error);
}
