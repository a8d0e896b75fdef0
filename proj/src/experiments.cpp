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
#include "lstmfc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lstmfc/ansatz.hpp"
#include "lstmfc/error.hpp"

namespace lstmfc {

namespace {

std::string fmt(const char *spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

/// Integers print bare; medians of an even count keep one decimal.
std::string fmt_count(double v) {
    if (v == std::floor(v)) {
        return fmt("%.0f", v);
    }
    return fmt("%.1f", v);
}

std::vector<std::string> with_extra(std::vector<std::string> tags,
                                    const std::string &extra) {
    if (std::find(tags.begin(), tags.end(), extra) == tags.end()) {
        tags.push_back(extra);
    }
    return tags;
}

} // namespace

double median(std::vector<double> values) {
    require(!values.empty(), ErrorKind::Config, "median of an empty set");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

AnsatzProgram uccsd_program(const MoleculeRecord &molecule) {
    AnsatzProgram p = build_uccsd(
        enumerate_excitations(molecule.n_electrons, molecule.n_qubits),
        molecule.n_qubits);
    p.molecule_tag = molecule.tag();
    return p;
}

std::vector<TrainingItem> training_pool(const DatasetManifest &manifest,
                                        const std::vector<std::string> &tags) {
    std::vector<TrainingItem> pool;
    for (const auto &tag : tags) {
        const MoleculeRecord &m = manifest.find(tag);
        pool.push_back({m, uccsd_program(m)});
    }
    return pool;
}

TrainResult meta_train(const DatasetManifest &manifest,
                       const MetaTrainRequest &request) {
    std::vector<std::string> tags = request.train.training_molecules;
    require(!tags.empty(), ErrorKind::Config, "no training molecules given");
    for (const auto &t : request.train.adapt_molecules) {
        tags = with_extra(std::move(tags), t);
    }
    const auto pool = training_pool(manifest, tags);
    MetaModel model = MetaModel::create(request.mode, request.hidden_dim,
                                        request.train.T, request.train.seed,
                                        request.input_dim);
    return train(std::move(model), pool, request.train);
}

void write_loss_history_csv(std::ostream &os, const TrainResult &result) {
    os << "phase,molecule,epoch,loss\n";
    for (std::size_t e = 0; e < result.loss_history.size(); ++e) {
        os << "train,*," << e + 1 << ',' << fmt("%.12f", result.loss_history[e])
           << '\n';
    }
    for (const auto &[tag, hist] : result.adapt_history) {
        for (std::size_t e = 0; e < hist.size(); ++e) {
            os << "adapt," << tag << ',' << e + 1 << ',' << fmt("%.12f", hist[e])
               << '\n';
        }
    }
}

BenchReport bench_table1(const DatasetManifest &manifest,
                         const Table1Request &request) {
    require(!request.seeds.empty(), ErrorKind::Config, "no seeds given");
    const MoleculeRecord &mol = manifest.find(request.molecule);
    const AnsatzProgram program = uccsd_program(mol);

    struct Cell {
        InitKind init;
        OptimizerKind opt;
        ScheduleKind sched;
    };
    std::vector<Cell> grid;
    for (InitKind init : {InitKind::RandomUniform01, InitKind::AllZero,
                          InitKind::LstmPadTruncate, InitKind::LstmFc}) {
        for (OptimizerKind opt : {OptimizerKind::SGD, OptimizerKind::Adam}) {
            for (ScheduleKind s : {ScheduleKind::Constant, ScheduleKind::ExpDecay}) {
                grid.push_back({init, opt, s});
            }
        }
    }

    auto model_for = [&](InitKind k) -> std::shared_ptr<const MetaModel> {
        if (k == InitKind::LstmPadTruncate) {
            return request.pad_truncate_model;
        }
        if (k == InitKind::LstmFc) {
            return request.fc_model;
        }
        return nullptr;
    };
    auto needs_model = [](InitKind k) {
        return k == InitKind::LstmPadTruncate || k == InitKind::LstmFc;
    };

    // One job per (cell, seed).
    const std::size_t n_seeds = request.seeds.size();
    auto traces = parallel_map(
        grid.size() * n_seeds, request.threads,
        [&](std::size_t job) -> std::optional<RunTrace> {
            const Cell &c = grid[job / n_seeds];
            auto model = model_for(c.init);
            if (needs_model(c.init) && model == nullptr) {
                return std::nullopt;
            }
            OptimizerConfig cfg = request.base;
            cfg.kind = c.opt;
            cfg.schedule = c.sched;
            cfg.lr0 = request.lr0.value_or(default_learning_rate(c.opt));
            cfg.seed = request.seeds[job % n_seeds];
            return run_vqe(mol, program, InitStrategy{c.init, model}, cfg);
        });

    BenchReport report;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        BenchRow row{mol.tag(), to_string(grid[g].init), to_string(grid[g].opt),
                     to_string(grid[g].sched)};
        std::vector<double> iters, chem, err, init_err;
        for (std::size_t s = 0; s < n_seeds; ++s) {
            const auto &t = traces[g * n_seeds + s];
            if (!t) {
                continue;
            }
            iters.push_back(static_cast<double>(t->iterations_to_converge));
            chem.push_back(static_cast<double>(t->iterations_to(1.6)));
            err.push_back(t->final_error_mha);
            init_err.push_back(t->error_mha(0));
        }
        if (iters.empty()) {
            row.available = false;
            report.partial = true;
        } else {
            row.iterations = median(iters);
            row.iterations_to_chemical_accuracy = median(chem);
            row.error_mha = median(err);
            row.initial_error_mha = median(init_err);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

void write_bench_csv(std::ostream &os, const BenchReport &report) {
    os << "molecule,init,optimizer,schedule,iterations,"
          "iterations_to_1.6mha,error_mha,initial_error_mha\n";
    for (const auto &r : report.rows) {
        os << r.molecule << ',' << r.init << ',' << r.optimizer << ','
           << r.schedule << ',';
        if (!r.available) {
            os << "unavailable,unavailable,unavailable,unavailable\n";
            continue;
        }
        os << fmt_count(r.iterations) << ','
           << fmt_count(r.iterations_to_chemical_accuracy) << ','
           << fmt("%.6f", r.error_mha) << ',' << fmt("%.6f", r.initial_error_mha)
           << '\n';
    }
}

std::vector<Table2Row> bench_table2(const DatasetManifest &manifest,
                                    const Table2Request &request) {
    require(!request.latent_sizes.empty() && !request.seeds.empty(),
            ErrorKind::Config, "latent sweep needs sizes and seeds");
    const MoleculeRecord &mol = manifest.find(request.molecule);
    const AnsatzProgram program = uccsd_program(mol);
    const std::size_t n_seeds = request.seeds.size();

    auto traces = parallel_map(
        request.latent_sizes.size() * n_seeds, request.threads,
        [&](std::size_t job) {
            MetaTrainRequest mt;
            mt.hidden_dim = request.latent_sizes[job / n_seeds];
            mt.train = request.train;
            mt.train.seed = request.seeds[job % n_seeds];
            mt.train.training_molecules = request.training;
            mt.train.adapt_molecules = {request.molecule};
            auto model = std::make_shared<const MetaModel>(
                meta_train(manifest, mt).model);
            OptimizerConfig cfg = request.vqe;
            cfg.seed = mt.train.seed;
            return run_vqe(mol, program, InitStrategy{InitKind::LstmFc, model}, cfg);
        });

    std::vector<Table2Row> rows;
    for (std::size_t i = 0; i < request.latent_sizes.size(); ++i) {
        std::vector<double> chem, err, init_err;
        for (std::size_t s = 0; s < n_seeds; ++s) {
            const RunTrace &t = traces[i * n_seeds + s];
            chem.push_back(static_cast<double>(t.iterations_to(1.6)));
            err.push_back(t.final_error_mha);
            init_err.push_back(t.error_mha(0));
        }
        rows.push_back({request.latent_sizes[i], median(chem), median(err),
                        median(init_err)});
    }
    return rows;
}

void write_table2_csv(std::ostream &os, const std::vector<Table2Row> &rows) {
    os << "latent_size,iterations_to_1.6mha,error_mha,initial_error_mha\n";
    for (const auto &r : rows) {
        os << r.latent_size << ',' << fmt_count(r.iterations_to_chemical_accuracy)
           << ',' << fmt("%.6f", r.error_mha) << ','
           << fmt("%.6f", r.initial_error_mha) << '\n';
    }
}

std::vector<ScanRow> run_scan(const std::vector<MoleculeRecord> &series,
                              const ScanRequest &request) {
    require(!series.empty(), ErrorKind::Config, "empty scan series");
    return parallel_map(series.size(), request.threads, [&](std::size_t i) {
        const MoleculeRecord &m = series[i];
        require(m.bond_length_angstrom.has_value(), ErrorKind::Fixture,
                "scan record '" + m.geometry_label + "' has no bond length");
        GroundStateOptions opts;
        opts.particle_number = m.n_electrons;
        const GroundStateResult fci = ground_state(m.hamiltonian, opts);
        require(fci.converged, ErrorKind::NonConvergence,
                "ground state did not converge at " + m.geometry_label);
        const RunTrace t = run_vqe(m, uccsd_program(m), request.init, request.vqe);
        const double best = *std::min_element(t.energies.begin(), t.energies.end());
        return ScanRow{*m.bond_length_angstrom, best, fci.energy,
                       (best - fci.energy) * 1000.0, t.updates()};
    });
}

void write_scan_csv(std::ostream &os, const std::vector<ScanRow> &rows) {
    os << "bond_length_angstrom,e_vqe_ha,e_fci_ha,error_mha\n";
    for (const auto &r : rows) {
        os << fmt("%.6f", r.bond_length_angstrom) << ',' << fmt("%.12f", r.e_vqe_ha)
           << ',' << fmt("%.12f", r.e_fci_ha) << ',' << fmt("%.6f", r.error_mha)
           << '\n';
    }
}

TransferResult run_transfer(const DatasetManifest &manifest,
                            const TransferRequest &request) {
    require(!request.seeds.empty(), ErrorKind::Config, "no seeds given");
    const MoleculeRecord &target = manifest.find(request.target);
    const AnsatzProgram program = uccsd_program(target);
    const std::vector<std::string> sets{"without-" + request.extra,
                                        "with-" + request.extra};
    const std::size_t n_seeds = request.seeds.size();

    auto models = parallel_map(2 * n_seeds, request.threads, [&](std::size_t job) {
        MetaTrainRequest mt;
        mt.train = request.train;
        mt.train.gradient = request.gradient;
        mt.train.seed = request.seeds[job % n_seeds];
        mt.train.training_molecules = request.base_training;
        if (job / n_seeds == 1) {
            mt.train.training_molecules =
                with_extra(request.base_training, request.extra);
        }
        mt.train.adapt_molecules = {request.target};
        return std::make_shared<const MetaModel>(meta_train(manifest, mt).model);
    });

    const std::vector<OptimizerKind> opts{OptimizerKind::SGD, OptimizerKind::Adam};
    // Curve order: training set, optimizer, seed.
    auto traces = parallel_map(2 * opts.size() * n_seeds, request.threads,
                               [&](std::size_t job) {
        const std::size_t set = job / (opts.size() * n_seeds);
        const std::size_t opt = (job / n_seeds) % opts.size();
        const std::size_t s = job % n_seeds;
        OptimizerConfig cfg = OptimizerConfig::defaults(opts[opt]);
        cfg.max_iterations = request.max_iterations;
        cfg.gradient = request.gradient;
        cfg.seed = request.seeds[s];
        return run_vqe(target, program,
                       InitStrategy{InitKind::LstmFc, models[set * n_seeds + s]},
                       cfg);
    });

    TransferResult out;
    for (std::size_t set = 0; set < 2; ++set) {
        for (std::size_t opt = 0; opt < opts.size(); ++opt) {
            std::vector<double> hit, fin, ini;
            for (std::size_t s = 0; s < n_seeds; ++s) {
                RunTrace &t = traces[(set * opts.size() + opt) * n_seeds + s];
                hit.push_back(static_cast<double>(t.iterations_to(request.threshold_mha)));
                fin.push_back(t.final_error_mha);
                ini.push_back(t.error_mha(0));
                out.curves.push_back(
                    {sets[set], to_string(opts[opt]), request.seeds[s], std::move(t)});
            }
            out.summary.push_back({sets[set], to_string(opts[opt]), median(hit),
                                   median(fin), median(ini)});
        }
    }
    return out;
}

void write_transfer_curves_csv(std::ostream &os, const TransferResult &result) {
    os << "training_set,optimizer,seed,iteration,error_mha\n";
    for (const auto &c : result.curves) {
        for (std::size_t k = 0; k < c.trace.energies.size(); ++k) {
            os << c.training_set << ',' << c.optimizer << ',' << c.seed << ',' << k
               << ',' << fmt("%.6f", c.trace.error_mha(k)) << '\n';
        }
    }
}

void write_transfer_summary_csv(std::ostream &os, const TransferResult &result) {
    os << "training_set,optimizer,iterations_to_threshold,final_error_mha,"
          "initial_error_mha\n";
    for (const auto &s : result.summary) {
        os << s.training_set << ',' << s.optimizer << ','
           << fmt_count(s.iterations_to_threshold) << ','
           << fmt("%.6f", s.final_error_mha) << ','
           << fmt("%.6f", s.initial_error_mha) << '\n';
    }
}

} // namespace lstmfc
