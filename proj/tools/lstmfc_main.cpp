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
// Command-line front end: single runs, meta-training and the batch studies.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lstmfc/ansatz.hpp"
#include "lstmfc/dataset.hpp"
#include "lstmfc/error.hpp"
#include "lstmfc/experiments.hpp"
#include "lstmfc/meta.hpp"
#include "lstmfc/vqe.hpp"

using namespace lstmfc;

namespace {

constexpr int kPartialReport = 8;

struct Globals {
    std::string fixtures_dir = "fixtures";
    std::uint64_t seed = 0;
    bool strict = false;
    std::string grad = "adjoint";
    std::size_t threads = 1;

    [[nodiscard]] LoadMode mode() const {
        return strict ? LoadMode::Strict : LoadMode::Lenient;
    }
    [[nodiscard]] GradientMethod method() const { return parse_gradient_method(grad); }
    [[nodiscard]] DatasetManifest manifest() const {
        return DatasetManifest::load_directory(fixtures_dir, mode());
    }
    [[nodiscard]] std::vector<std::uint64_t>
    seeds(const std::vector<std::uint64_t> &given, std::size_t count) const {
        if (!given.empty()) {
            return given;
        }
        std::vector<std::uint64_t> out;
        for (std::size_t i = 0; i < count; ++i) {
            out.push_back(seed + i);
        }
        return out;
    }
};

/// Run `emit` against a file, or stdout when the path is empty.
template <typename Emit> void write_to(const std::string &path, Emit &&emit) {
    if (path.empty()) {
        emit(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), ErrorKind::Config, "cannot write '" + path + "'");
    emit(out);
}

std::shared_ptr<const MetaModel> maybe_checkpoint(const std::string &path) {
    if (path.empty()) {
        return nullptr;
    }
    return std::make_shared<const MetaModel>(load_checkpoint(path));
}

struct VqeFlags {
    std::string init = "zero";
    std::string opt = "adam";
    std::string sched = "const";
    std::optional<double> lr;
    std::size_t max_iter = 500;
    std::size_t conv_window = 5;
    double conv_tol = 1e-6;
    std::string checkpoint;

    void attach(CLI::App *cmd) {
        cmd->add_option("--init", init, "random|zero|lstm|lstm-fc")->capture_default_str();
        cmd->add_option("--opt", opt, "sgd|adam")->capture_default_str();
        cmd->add_option("--sched", sched, "const|decay")->capture_default_str();
        cmd->add_option("--lr", lr, "initial learning rate (sgd 0.1, adam 0.05)");
        cmd->add_option("--max-iter", max_iter, "optimizer update cap")->capture_default_str();
        cmd->add_option("--conv-window", conv_window)->capture_default_str();
        cmd->add_option("--conv-tol", conv_tol, "Hartree")->capture_default_str();
        cmd->add_option("--checkpoint", checkpoint, "meta-model for lstm inits");
    }

    [[nodiscard]] OptimizerConfig config(const Globals &g) const {
        OptimizerConfig cfg =
            OptimizerConfig::defaults(parse_optimizer(opt), parse_schedule(sched));
        if (lr) {
            cfg.lr0 = *lr;
        }
        cfg.max_iterations = max_iter;
        cfg.conv_window = conv_window;
        cfg.conv_tol = conv_tol;
        cfg.seed = g.seed;
        cfg.gradient = g.method();
        return cfg;
    }

    [[nodiscard]] InitStrategy strategy() const {
        const InitKind kind = parse_init_kind(init);
        auto model = maybe_checkpoint(checkpoint);
        if ((kind == InitKind::LstmFc || kind == InitKind::LstmPadTruncate) && !model) {
            throw Error(ErrorKind::Model, "--init " + init + " requires --checkpoint");
        }
        return {kind, std::move(model)};
    }
};

struct TrainFlags {
    std::vector<std::string> train{"H2", "H3+"};
    std::vector<std::string> adapt;
    std::string mode = "fc-heads";
    std::size_t latent = kDefaultHiddenDim;
    std::optional<std::size_t> input_dim;
    std::size_t T = kDefaultUnrollSteps;
    double lr = 0.005;
    std::size_t epochs = 300;
    double tol = 1e-4;

    void attach(CLI::App *cmd, bool with_latent = true) {
        cmd->add_option("--train", train, "training molecules")->delimiter(',')->capture_default_str();
        cmd->add_option("--adapt", adapt, "molecules whose heads are fitted afterwards")
            ->delimiter(',');
        cmd->add_option("--mode", mode, "fc-heads|pad-truncate")->capture_default_str();
        if (with_latent) {
            cmd->add_option("--latent", latent, "LSTM hidden size")->capture_default_str();
        }
        cmd->add_option("--input-dim", input_dim, "LSTM input width (default latent + 1)");
        cmd->add_option("--steps", T, "unroll length")->capture_default_str();
        cmd->add_option("--meta-lr", lr)->capture_default_str();
        cmd->add_option("--epochs", epochs)->capture_default_str();
        cmd->add_option("--early-stop-tol", tol)->capture_default_str();
    }

    [[nodiscard]] TrainConfig config(const Globals &g) const {
        TrainConfig cfg;
        cfg.T = T;
        cfg.lstm_lr = lr;
        cfg.epochs_max = epochs;
        cfg.adapt_epochs_max = epochs;
        cfg.early_stop_rel_tol = tol;
        cfg.seed = g.seed;
        cfg.training_molecules = train;
        cfg.adapt_molecules = adapt;
        cfg.gradient = g.method();
        return cfg;
    }
};

void print_error(const std::string &what) { std::cerr << "lstmfc: error: " << what << '\n'; }

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"LSTM-FC-VQE: meta-learned initialization for variational "
                 "eigensolvers on a statevector simulator"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--fixtures-dir", g.fixtures_dir, "molecule fixture directory")
        ->capture_default_str();
    app.add_option("--seed", g.seed)->capture_default_str();
    app.add_flag("--strict-fixtures", g.strict, "recheck FCI energies on load");
    app.add_option("--grad", g.grad, "adjoint|shift|fd")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads for batch studies")
        ->capture_default_str();

    int status = 0;

    // fci
    auto *fci = app.add_subcommand("fci", "sector ground-state energy of a fixture");
    std::string fci_molecule;
    fci->add_option("--molecule", fci_molecule)->required();
    fci->callback([&] {
        const DatasetManifest manifest = g.manifest();
        const MoleculeRecord &m = manifest.find(fci_molecule);
        GroundStateOptions opts;
        opts.particle_number = m.n_electrons;
        const auto r = ground_state(m.hamiltonian, opts);
        require(r.converged, ErrorKind::NonConvergence,
                "ground state of '" + fci_molecule + "' did not converge (residual " +
                    std::to_string(r.residual_norm) + ")");
        std::printf("molecule,n_qubits,n_electrons,energy_ha,residual\n%s,%zu,%zu,%.10f,%.3e\n",
                    m.name.c_str(), m.n_qubits, m.n_electrons, r.energy, r.residual_norm);
    });

    // vqe
    auto *vqe = app.add_subcommand("vqe", "single VQE run; CSV trace and JSON summary");
    std::string vqe_molecule;
    std::string ansatz = "uccsd";
    std::size_t layers = 2;
    bool describe_only = false;
    std::string vqe_csv, vqe_summary;
    VqeFlags vqe_flags;
    vqe->add_option("--molecule", vqe_molecule)->required();
    vqe->add_option("--ansatz", ansatz, "uccsd|hea|strongly-entangling")->capture_default_str();
    vqe->add_option("--layers", layers, "layers for hea/strongly-entangling")->capture_default_str();
    vqe->add_flag("--describe", describe_only, "print the circuit summary and exit");
    vqe->add_option("--csv", vqe_csv, "trace output (default stdout)");
    vqe->add_option("--summary", vqe_summary, "JSON summary output (default stderr)");
    vqe_flags.attach(vqe);
    vqe->callback([&] {
        const DatasetManifest manifest = g.manifest();
        const MoleculeRecord &m = manifest.find(vqe_molecule);
        AnsatzProgram program;
        const std::string hf = hartree_fock_occupation(m.n_electrons, m.n_qubits);
        if (ansatz == "uccsd") {
            program = uccsd_program(m);
        } else if (ansatz == "hea") {
            program = build_hea(m.n_qubits, layers, hf);
        } else if (ansatz == "strongly-entangling") {
            program = build_strongly_entangling(m.n_qubits, layers, hf);
        } else {
            throw Error(ErrorKind::Config, "unknown ansatz '" + ansatz + "'");
        }
        program.molecule_tag = m.tag();
        if (describe_only) {
            std::cout << describe(program) << '\n';
            return;
        }
        const OptimizerConfig cfg = vqe_flags.config(g);
        const RunTrace trace = run_vqe(m, program, vqe_flags.strategy(), cfg);
        write_to(vqe_csv, [&](std::ostream &os) { write_trace_csv(os, trace); });
        const std::string summary = trace_summary_json(trace, cfg);
        if (vqe_summary.empty()) {
            std::cerr << summary << '\n';
        } else {
            write_to(vqe_summary, [&](std::ostream &os) { os << summary << '\n'; });
        }
    });

    // meta-train
    auto *mtrain = app.add_subcommand("meta-train", "train a meta-model and write a checkpoint");
    TrainFlags train_flags;
    std::string ckpt_out, history_out;
    train_flags.attach(mtrain);
    mtrain->add_option("--checkpoint", ckpt_out, "checkpoint output")->required();
    mtrain->add_option("--history", history_out, "loss-history CSV (default stdout)");
    mtrain->callback([&] {
        MetaTrainRequest rq;
        rq.mode = parse_meta_mode(train_flags.mode);
        rq.hidden_dim = train_flags.latent;
        rq.input_dim = train_flags.input_dim;
        rq.train = train_flags.config(g);
        const TrainResult res = meta_train(g.manifest(), rq);
        save_checkpoint(res.model, ckpt_out);
        write_to(history_out, [&](std::ostream &os) { write_loss_history_csv(os, res); });
        std::cerr << "epochs " << res.epochs << ", stop " << to_string(res.stop_reason)
                  << ", heads " << res.model.heads.size() << '\n';
    });

    // meta-eval
    auto *meval = app.add_subcommand("meta-eval", "unroll a trained model on a molecule");
    std::string eval_ckpt, eval_molecule, eval_csv;
    meval->add_option("--checkpoint", eval_ckpt)->required();
    meval->add_option("--molecule", eval_molecule)->required();
    meval->add_option("--csv", eval_csv, "output (default stdout)");
    meval->callback([&] {
        const MetaModel model = load_checkpoint(eval_ckpt);
        const DatasetManifest manifest = g.manifest();
        const MoleculeRecord &m = manifest.find(eval_molecule);
        const AnsatzProgram program = uccsd_program(m);
        const UnrollResult u = unroll(model, m, program, g.method());
        const double ref = reference_energy(m);
        write_to(eval_csv, [&](std::ostream &os) {
            os << "step,energy_ha,error_mha,correlation_recovered\n";
            char buf[128];
            for (std::size_t t = 0; t < u.energies.size(); ++t) {
                const double e = u.energies[t];
                const double frac = (m.hf_energy_ha - e) / (m.hf_energy_ha - ref);
                std::snprintf(buf, sizeof buf, "%zu,%.12f,%.6f,%.6f\n", t + 1, e,
                              (e - ref) * 1000.0, frac);
                os << buf;
            }
        });
    });

    // scan
    auto *scan = app.add_subcommand("scan", "VQE and exact energies along a bond-length series");
    std::string series_name = "H4", scan_csv;
    VqeFlags scan_flags;
    scan->add_option("--series", series_name)->capture_default_str();
    scan->add_option("--csv", scan_csv, "output (default stdout)");
    scan_flags.attach(scan);
    scan->callback([&] {
        const auto series = load_series(g.fixtures_dir, series_name, g.mode());
        ScanRequest rq{scan_flags.strategy(), scan_flags.config(g), g.threads};
        const auto rows = run_scan(series, rq);
        write_to(scan_csv, [&](std::ostream &os) { write_scan_csv(os, rows); });
    });

    // bench-table1
    auto *t1 = app.add_subcommand("bench-table1", "initialization x optimizer x schedule grid");
    std::string t1_molecule = "H4", t1_csv, t1_fc, t1_pt;
    std::vector<std::uint64_t> t1_seeds;
    std::optional<double> t1_lr;
    std::size_t t1_max_iter = 500;
    t1->add_option("--molecule", t1_molecule)->capture_default_str();
    t1->add_option("--seeds", t1_seeds, "default: seed, seed+1, seed+2")->delimiter(',');
    t1->add_option("--checkpoint-fc", t1_fc, "fc-heads model for lstm-fc rows");
    t1->add_option("--checkpoint-lstm", t1_pt, "pad-truncate model for lstm rows");
    t1->add_option("--lr", t1_lr, "override both optimizers' learning rate");
    t1->add_option("--max-iter", t1_max_iter)->capture_default_str();
    t1->add_option("--csv", t1_csv, "output (default stdout)");
    t1->callback([&] {
        Table1Request rq;
        rq.molecule = t1_molecule;
        rq.seeds = g.seeds(t1_seeds, 3);
        rq.fc_model = maybe_checkpoint(t1_fc);
        rq.pad_truncate_model = maybe_checkpoint(t1_pt);
        rq.base.max_iterations = t1_max_iter;
        rq.base.gradient = g.method();
        rq.lr0 = t1_lr;
        rq.threads = g.threads;
        const BenchReport report = bench_table1(g.manifest(), rq);
        write_to(t1_csv, [&](std::ostream &os) { write_bench_csv(os, report); });
        if (report.partial) {
            std::cerr << "lstmfc: partial report, LSTM rows without a checkpoint are "
                         "marked unavailable\n";
            status = kPartialReport;
        }
    });

    // bench-table2
    auto *t2 = app.add_subcommand("bench-table2", "latent-size sweep of the FC-head model");
    std::string t2_molecule = "H4", t2_csv;
    std::vector<std::size_t> t2_latent{10, 15, 20, 25, 30, 35, 40};
    std::vector<std::uint64_t> t2_seeds;
    TrainFlags t2_train;
    VqeFlags t2_vqe;
    t2->add_option("--molecule", t2_molecule)->capture_default_str();
    t2->add_option("--latent-sizes", t2_latent)->delimiter(',')->capture_default_str();
    t2->add_option("--seeds", t2_seeds, "default: seed, seed+1, seed+2")->delimiter(',');
    t2->add_option("--csv", t2_csv, "output (default stdout)");
    t2_train.attach(t2, false);
    t2->add_option("--max-iter", t2_vqe.max_iter)->capture_default_str();
    t2->callback([&] {
        Table2Request rq;
        rq.molecule = t2_molecule;
        rq.latent_sizes = t2_latent;
        rq.seeds = g.seeds(t2_seeds, 3);
        rq.training = t2_train.train;
        rq.train = t2_train.config(g);
        rq.vqe = t2_vqe.config(g);
        rq.threads = g.threads;
        const auto rows = bench_table2(g.manifest(), rq);
        write_to(t2_csv, [&](std::ostream &os) { write_table2_csv(os, rows); });
    });

    // transfer
    auto *tr = app.add_subcommand("transfer", "initializer transfer with and without an extra training molecule");
    TransferRequest tr_rq;
    std::vector<std::uint64_t> tr_seeds;
    std::string tr_curves, tr_summary;
    TrainFlags tr_train;
    tr->add_option("--target", tr_rq.target)->capture_default_str();
    tr->add_option("--extra", tr_rq.extra, "molecule added to the second training set")
        ->capture_default_str();
    tr->add_option("--seeds", tr_seeds, "default: seed, seed+1, seed+2")->delimiter(',');
    tr->add_option("--max-iter", tr_rq.max_iterations)->capture_default_str();
    tr->add_option("--threshold", tr_rq.threshold_mha, "mHa")->capture_default_str();
    tr->add_option("--curves", tr_curves, "per-iteration error CSV (default stdout)");
    tr->add_option("--summary", tr_summary, "per-series summary CSV (default stderr)");
    tr_train.attach(tr);
    tr->callback([&] {
        tr_rq.seeds = g.seeds(tr_seeds, 3);
        tr_rq.base_training = tr_train.train;
        tr_rq.train = tr_train.config(g);
        tr_rq.gradient = g.method();
        tr_rq.threads = g.threads;
        const TransferResult res = run_transfer(g.manifest(), tr_rq);
        write_to(tr_curves, [&](std::ostream &os) { write_transfer_curves_csv(os, res); });
        if (tr_summary.empty()) {
            write_transfer_summary_csv(std::cerr, res);
        } else {
            write_to(tr_summary, [&](std::ostream &os) { write_transfer_summary_csv(os, res); });
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_code(ErrorKind::Config);
    } catch (const Error &e) {
        print_error(e.what());
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        print_error(e.what());
        return 1;
    }
    return status;
}
