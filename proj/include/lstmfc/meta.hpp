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
 * @file meta.hpp
 * LSTM meta-learner that emits VQE initial parameters.
 *
 * At every unroll step the cell reads the previous parameters (padded or
 * truncated to a fixed width) and the previous correlation energy, and its
 * latent output is mapped to circuit parameters either by truncation
 * (PadTruncate) or by a molecule-specific linear head (FcHeads). The
 * training loss is (1/T) sum_t 0.1 t E_t.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lstmfc/dataset.hpp"
#include "lstmfc/gradient.hpp"
#include "lstmfc/lstm.hpp"
#include "lstmfc/optimizer.hpp"
#include "lstmfc/program.hpp"

namespace lstmfc {

enum class MetaMode { PadTruncate, FcHeads };

[[nodiscard]] std::string to_string(MetaMode mode);
[[nodiscard]] MetaMode parse_meta_mode(std::string_view name);

/// Linear projection from the latent vector to one molecule's parameters,
/// split into a singles block and a doubles block.
struct FcHead {
    std::string molecule_tag;
    Eigen::MatrixXd W_s;
    Eigen::VectorXd b_s;
    Eigen::MatrixXd W_d;
    Eigen::VectorXd b_d;

    static FcHead zeros(std::string tag, std::size_t hidden_dim,
                        ParamSplit split);
    /// Weights uniform in [-0.01, 0.01], zero biases.
    static FcHead random(std::string tag, std::size_t hidden_dim,
                         ParamSplit split, std::uint64_t seed);

    [[nodiscard]] std::size_t n_singles() const {
        return static_cast<std::size_t>(b_s.size());
    }
    [[nodiscard]] std::size_t n_doubles() const {
        return static_cast<std::size_t>(b_d.size());
    }
    [[nodiscard]] std::size_t hidden_dim() const {
        return static_cast<std::size_t>(W_s.cols());
    }

    [[nodiscard]] std::vector<std::span<double>> blocks();
};

/// Singles/doubles split a head must match; non-UCCSD programs use (N, 0).
[[nodiscard]] ParamSplit head_split(const AnsatzProgram &program);

/// concat(W_s phi + b_s, W_d phi + b_d)
[[nodiscard]] std::vector<double> fc_project(const FcHead &head,
                                             const Eigen::VectorXd &phi);

inline constexpr std::size_t kDefaultUnrollSteps = 10;
inline constexpr std::size_t kDefaultHiddenDim = 40;

struct MetaModel {
    MetaMode mode = MetaMode::FcHeads;
    std::size_t hidden_dim = kDefaultHiddenDim;
    std::size_t input_dim = kDefaultHiddenDim + 1;
    std::size_t T = kDefaultUnrollSteps;
    std::uint64_t seed = 0;
    LstmWeights lstm;
    std::map<std::string, FcHead> heads;

    /// Random LSTM weights; input_dim defaults to hidden_dim + 1.
    static MetaModel create(MetaMode mode, std::size_t hidden_dim,
                            std::size_t T, std::uint64_t seed,
                            std::optional<std::size_t> input_dim = {});

    /// Adds a freshly initialized head unless one already exists.
    void ensure_head(const std::string &tag, const AnsatzProgram &program);

    /// Throws ErrorKind::Model when the model cannot drive `program`.
    void check_compatible(const std::string &tag,
                          const AnsatzProgram &program) const;
};

/// (1/T) sum_t 0.1 t E_t with t starting at 1.
[[nodiscard]] double trajectory_loss(std::span<const double> energies);

struct UnrollResult {
    std::vector<std::vector<double>> thetas; // theta_1 .. theta_T
    std::vector<double> energies;            // E_1 .. E_T
    double loss = 0.0;
};

[[nodiscard]] UnrollResult unroll(const MetaModel &model,
                                  const MoleculeRecord &molecule,
                                  const AnsatzProgram &program,
                                  GradientMethod method = GradientMethod::Adjoint);

/// Gradient of the unroll loss with respect to every trainable weight.
struct MetaGradient {
    LstmWeights lstm;
    std::optional<FcHead> head;
};

/**
 * @brief Unroll and backpropagate through time. Every path is followed:
 * the loss weights, the parameters fed back as the next input and the
 * energy signal fed back as the next input.
 */
[[nodiscard]] UnrollResult
unroll_with_gradient(const MetaModel &model, const MoleculeRecord &molecule,
                     const AnsatzProgram &program, MetaGradient &grad,
                     GradientMethod method = GradientMethod::Adjoint);

struct TrainingItem {
    MoleculeRecord molecule;
    AnsatzProgram program;
};

struct TrainConfig {
    std::size_t T = kDefaultUnrollSteps;
    double lstm_lr = 0.005;
    std::size_t epochs_max = 300;
    double early_stop_rel_tol = 1e-4;
    std::uint64_t seed = 0;
    /// Tags trained jointly (LSTM + heads). Empty selects the whole pool.
    std::vector<std::string> training_molecules;
    /// Tags whose heads are fitted afterwards with the LSTM frozen.
    std::vector<std::string> adapt_molecules;
    std::size_t adapt_epochs_max = 300;
    GradientMethod gradient = GradientMethod::Adjoint;
    AdamParams adam;

    void validate() const;
};

enum class StopReason { EarlyStop, EpochCap };

[[nodiscard]] std::string to_string(StopReason reason);

struct TrainResult {
    MetaModel model;
    std::vector<double> loss_history; // epoch-mean loss
    std::size_t epochs = 0;
    StopReason stop_reason = StopReason::EpochCap;
    std::map<std::string, std::vector<double>> adapt_history;
};

/**
 * @brief Train on the selected molecules with one Adam update per
 * molecule visit, stopping when the relative change of the epoch-mean
 * loss drops below the tolerance; then fit the adapt heads.
 *
 * Throws ErrorKind::Divergence if a loss or gradient becomes non-finite.
 */
[[nodiscard]] TrainResult train(MetaModel model,
                                std::span<const TrainingItem> pool,
                                const TrainConfig &cfg);

/// theta_T of an unroll without weight updates.
[[nodiscard]] std::vector<double> infer_init(const MetaModel &model,
                                             const MoleculeRecord &molecule,
                                             const AnsatzProgram &program);

inline constexpr int kCheckpointVersion = 1;

void save_checkpoint(const MetaModel &model,
                     const std::filesystem::path &path);
[[nodiscard]] MetaModel load_checkpoint(const std::filesystem::path &path);
[[nodiscard]] std::string checkpoint_json(const MetaModel &model);
[[nodiscard]] MetaModel parse_checkpoint(const std::string &text);

} // namespace lstmfc
