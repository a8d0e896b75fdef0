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
 * @file vqe.hpp
 * Classical outer loop: initialization strategies, SGD/Adam with constant or
 * decaying learning rate, convergence bookkeeping and trace output.
 *
 * Iteration k evaluates E(theta_k); theta_0 is the initialization, so a
 * trace of K updates holds K + 1 energies. A run converges when
 * |E_k - E_{k-1}| < conv_tol for conv_window consecutive k, and
 * iterations_to_converge is the update count at that point.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lstmfc/dataset.hpp"
#include "lstmfc/gradient.hpp"
#include "lstmfc/meta.hpp"
#include "lstmfc/optimizer.hpp"
#include "lstmfc/program.hpp"

namespace lstmfc {

enum class OptimizerKind { SGD, Adam };
enum class ScheduleKind { Constant, ExpDecay };

[[nodiscard]] OptimizerKind parse_optimizer(std::string_view name);
[[nodiscard]] ScheduleKind parse_schedule(std::string_view name);
[[nodiscard]] std::string to_string(OptimizerKind kind);
[[nodiscard]] std::string to_string(ScheduleKind kind);

/// SGD 0.1, Adam 0.05.
[[nodiscard]] double default_learning_rate(OptimizerKind kind);

inline constexpr std::size_t kNotConverged = 501;

struct OptimizerConfig {
    OptimizerKind kind = OptimizerKind::Adam;
    double lr0 = 0.05;
    ScheduleKind schedule = ScheduleKind::Constant;
    double decay_factor = 0.99;
    AdamParams adam;
    std::size_t max_iterations = 500;
    std::size_t conv_window = 5;
    double conv_tol = 1e-6;
    std::uint64_t seed = 0;
    GradientMethod gradient = GradientMethod::Adjoint;
    /// Keep every n-th parameter vector in the trace; 0 keeps none.
    std::size_t theta_stride = 0;

    static OptimizerConfig defaults(OptimizerKind kind,
                                    ScheduleKind schedule = ScheduleKind::Constant);
    void validate() const;
    /// lr0 or lr0 * factor^t.
    [[nodiscard]] double learning_rate(std::size_t t) const;
};

enum class InitKind { RandomUniform01, AllZero, LstmPadTruncate, LstmFc };

[[nodiscard]] InitKind parse_init_kind(std::string_view name);
/// CLI spelling: random, zero, lstm, lstm-fc.
[[nodiscard]] std::string to_string(InitKind kind);

struct InitStrategy {
    InitKind kind = InitKind::AllZero;
    std::shared_ptr<const MetaModel> model;
};

/// Length param_count; deterministic for a given seed.
[[nodiscard]] std::vector<double> init_parameters(const InitStrategy &strategy,
                                                  const AnsatzProgram &program,
                                                  const MoleculeRecord &molecule,
                                                  std::uint64_t seed);

struct RunTrace {
    std::string molecule_tag;
    std::string init_kind;
    std::string optimizer;
    std::string schedule;
    double reference_energy = 0.0;
    std::vector<double> energies;
    std::vector<std::pair<std::size_t, std::vector<double>>> thetas;
    std::vector<double> best_theta;
    std::size_t iterations_to_converge = kNotConverged;
    double final_error_mha = 0.0;

    [[nodiscard]] std::size_t updates() const {
        return energies.empty() ? 0 : energies.size() - 1;
    }
    [[nodiscard]] double error_mha(std::size_t k) const {
        return (energies.at(k) - reference_energy) * 1000.0;
    }
    /// First iteration whose error is below the threshold, else 501.
    [[nodiscard]] std::size_t iterations_to(double threshold_mha) const;
};

[[nodiscard]] RunTrace run_vqe(const MoleculeRecord &molecule,
                               const AnsatzProgram &program,
                               const InitStrategy &init,
                               const OptimizerConfig &cfg);

/// iteration,energy_ha,error_mha
void write_trace_csv(std::ostream &os, const RunTrace &trace);
/// One-line JSON object summarizing the run.
[[nodiscard]] std::string trace_summary_json(const RunTrace &trace,
                                             const OptimizerConfig &cfg);

} // namespace lstmfc
