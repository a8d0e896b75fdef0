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
 * @file experiments.hpp
 * Batch studies behind the command-line front end. Every runner is
 * deterministic for fixed seeds; independent cells run on a worker pool and
 * are returned in request order.
 */
#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "lstmfc/dataset.hpp"
#include "lstmfc/meta.hpp"
#include "lstmfc/vqe.hpp"

namespace lstmfc {

/// Evaluate fn(0..n-1) on up to `threads` workers, results in index order.
/// The exception of the lowest failing index is rethrown.
template <typename Fn>
auto parallel_map(std::size_t n, std::size_t threads, Fn &&fn)
    -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<std::optional<R>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min(threads, n));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

[[nodiscard]] double median(std::vector<double> values);

/// UCCSD circuit for a molecule, tagged with its name.
[[nodiscard]] AnsatzProgram uccsd_program(const MoleculeRecord &molecule);

[[nodiscard]] std::vector<TrainingItem>
training_pool(const DatasetManifest &manifest,
              const std::vector<std::string> &tags);

struct MetaTrainRequest {
    MetaMode mode = MetaMode::FcHeads;
    std::size_t hidden_dim = kDefaultHiddenDim;
    std::optional<std::size_t> input_dim;
    TrainConfig train;
};

[[nodiscard]] TrainResult meta_train(const DatasetManifest &manifest,
                                     const MetaTrainRequest &request);

/// phase,molecule,epoch,loss
void write_loss_history_csv(std::ostream &os, const TrainResult &result);

struct BenchRow {
    std::string molecule;
    std::string init;
    std::string optimizer;
    std::string schedule;
    bool available = true;
    double iterations = 0.0;
    double iterations_to_chemical_accuracy = 0.0;
    double error_mha = 0.0;
    double initial_error_mha = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    /// Set when some rows could not be run (no model for an LSTM init).
    bool partial = false;
};

struct Table1Request {
    std::string molecule = "H4";
    std::vector<std::uint64_t> seeds{0, 1, 2};
    std::shared_ptr<const MetaModel> pad_truncate_model;
    std::shared_ptr<const MetaModel> fc_model;
    /// Shared optimizer settings; kind, schedule, lr0 and seed are set per cell.
    OptimizerConfig base;
    std::optional<double> lr0;
    std::size_t threads = 1;
};

/// init x optimizer x schedule grid (16 rows), medians over seeds.
[[nodiscard]] BenchReport bench_table1(const DatasetManifest &manifest,
                                       const Table1Request &request);

void write_bench_csv(std::ostream &os, const BenchReport &report);

struct Table2Request {
    std::string molecule = "H4";
    std::vector<std::size_t> latent_sizes{10, 15, 20, 25, 30, 35, 40};
    std::vector<std::uint64_t> seeds{0, 1, 2};
    std::vector<std::string> training{"H2", "H3+"};
    TrainConfig train;
    OptimizerConfig vqe;
    std::size_t threads = 1;
};

struct Table2Row {
    std::size_t latent_size = 0;
    double iterations_to_chemical_accuracy = 0.0;
    double error_mha = 0.0;
    double initial_error_mha = 0.0;
};

/// Meta-train an FC-head model per (latent size, seed) and run VQE from it.
[[nodiscard]] std::vector<Table2Row> bench_table2(const DatasetManifest &manifest,
                                                  const Table2Request &request);

void write_table2_csv(std::ostream &os, const std::vector<Table2Row> &rows);

struct ScanRow {
    double bond_length_angstrom = 0.0;
    double e_vqe_ha = 0.0;
    double e_fci_ha = 0.0;
    double error_mha = 0.0;
    std::size_t iterations = 0;
};

struct ScanRequest {
    InitStrategy init;
    OptimizerConfig vqe;
    std::size_t threads = 1;
};

/// VQE and sector ground state at every geometry of a series.
[[nodiscard]] std::vector<ScanRow> run_scan(const std::vector<MoleculeRecord> &series,
                                            const ScanRequest &request);

void write_scan_csv(std::ostream &os, const std::vector<ScanRow> &rows);

struct TransferRequest {
    std::string target = "H2O";
    std::vector<std::string> base_training{"H2", "H3+"};
    std::string extra = "OH-";
    std::vector<std::uint64_t> seeds{0, 1, 2};
    TrainConfig train;
    std::size_t max_iterations = 500;
    GradientMethod gradient = GradientMethod::Adjoint;
    double threshold_mha = 50.0;
    std::size_t threads = 1;
};

struct TransferCurve {
    std::string training_set; // "without-extra" or "with-extra"
    std::string optimizer;
    std::uint64_t seed = 0;
    RunTrace trace;
};

struct TransferSummary {
    std::string training_set;
    std::string optimizer;
    double iterations_to_threshold = 0.0;
    double final_error_mha = 0.0;
    double initial_error_mha = 0.0;
};

struct TransferResult {
    std::vector<TransferCurve> curves;
    std::vector<TransferSummary> summary;
};

/**
 * @brief Train two models (base set, base set plus the extra molecule),
 * fit a head for the target with each LSTM frozen, and run SGD and Adam on
 * the target from both initializations.
 */
[[nodiscard]] TransferResult run_transfer(const DatasetManifest &manifest,
                                          const TransferRequest &request);

/// training_set,optimizer,seed,iteration,error_mha
void write_transfer_curves_csv(std::ostream &os, const TransferResult &result);
void write_transfer_summary_csv(std::ostream &os, const TransferResult &result);

} // namespace lstmfc
