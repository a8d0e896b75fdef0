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
#include "lstmfc/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>

#include <nlohmann/json.hpp>

#include "lstmfc/error.hpp"

namespace lstmfc {

OptimizerKind parse_optimizer(std::string_view name) {
    if (name == "sgd") {
        return OptimizerKind::SGD;
    }
    if (name == "adam") {
        return OptimizerKind::Adam;
    }
    throw Error(ErrorKind::Config,
                "unknown optimizer '" + std::string(name) + "' (sgd|adam)");
}

ScheduleKind parse_schedule(std::string_view name) {
    if (name == "const") {
        return ScheduleKind::Constant;
    }
    if (name == "decay") {
        return ScheduleKind::ExpDecay;
    }
    throw Error(ErrorKind::Config,
                "unknown schedule '" + std::string(name) + "' (const|decay)");
}

std::string to_string(OptimizerKind kind) {
    return kind == OptimizerKind::SGD ? "sgd" : "adam";
}

std::string to_string(ScheduleKind kind) {
    return kind == ScheduleKind::Constant ? "const" : "decay";
}

double default_learning_rate(OptimizerKind kind) {
    return kind == OptimizerKind::SGD ? 0.1 : 0.05;
}

OptimizerConfig OptimizerConfig::defaults(OptimizerKind kind,
                                          ScheduleKind schedule) {
    OptimizerConfig cfg;
    cfg.kind = kind;
    cfg.schedule = schedule;
    cfg.lr0 = default_learning_rate(kind);
    return cfg;
}

void OptimizerConfig::validate() const {
    require(lr0 > 0.0 && std::isfinite(lr0), ErrorKind::Config,
            "learning rate must be positive");
    require(decay_factor > 0.0 && decay_factor <= 1.0, ErrorKind::Config,
            "decay factor must lie in (0, 1]");
    require(adam.beta1 > 0.0 && adam.beta1 < 1.0 && adam.beta2 > 0.0 &&
                adam.beta2 < 1.0,
            ErrorKind::Config, "Adam betas must lie in (0, 1)");
    require(max_iterations >= 1, ErrorKind::Config, "max iterations must be >= 1");
    require(conv_window >= 1, ErrorKind::Config, "convergence window must be >= 1");
    require(conv_tol > 0.0, ErrorKind::Config, "convergence tolerance must be > 0");
}

double OptimizerConfig::learning_rate(std::size_t t) const {
    if (schedule == ScheduleKind::Constant) {
        return lr0;
    }
    return lr0 * std::pow(decay_factor, static_cast<double>(t));
}

InitKind parse_init_kind(std::string_view name) {
    if (name == "random") {
        return InitKind::RandomUniform01;
    }
    if (name == "zero") {
        return InitKind::AllZero;
    }
    if (name == "lstm") {
        return InitKind::LstmPadTruncate;
    }
    if (name == "lstm-fc") {
        return InitKind::LstmFc;
    }
    throw Error(ErrorKind::Config, "unknown init '" + std::string(name) +
                                       "' (random|zero|lstm|lstm-fc)");
}

std::string to_string(InitKind kind) {
    switch (kind) {
    case InitKind::RandomUniform01:
        return "random";
    case InitKind::AllZero:
        return "zero";
    case InitKind::LstmPadTruncate:
        return "lstm";
    case InitKind::LstmFc:
        return "lstm-fc";
    }
    return "?";
}

std::vector<double> init_parameters(const InitStrategy &strategy,
                                    const AnsatzProgram &program,
                                    const MoleculeRecord &molecule,
                                    std::uint64_t seed) {
    switch (strategy.kind) {
    case InitKind::AllZero:
        return std::vector<double>(program.param_count, 0.0);
    case InitKind::RandomUniform01: {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> dist(0.0, 1.0);
        std::vector<double> theta(program.param_count);
        for (double &v : theta) {
            v = dist(rng);
        }
        return theta;
    }
    case InitKind::LstmPadTruncate:
    case InitKind::LstmFc: {
        const MetaMode want = strategy.kind == InitKind::LstmFc
                                  ? MetaMode::FcHeads
                                  : MetaMode::PadTruncate;
        require(strategy.model != nullptr, ErrorKind::Model,
                "init '" + to_string(strategy.kind) + "' needs a trained model");
        require(strategy.model->mode == want, ErrorKind::Model,
                "init '" + to_string(strategy.kind) + "' needs a " +
                    to_string(want) + " model, got " +
                    to_string(strategy.model->mode));
        auto theta = infer_init(*strategy.model, molecule, program);
        require(theta.size() == program.param_count, ErrorKind::Model,
                "model emitted the wrong number of parameters");
        return theta;
    }
    }
    throw Error(ErrorKind::Config, "unhandled init kind");
}

std::size_t RunTrace::iterations_to(double threshold_mha) const {
    for (std::size_t k = 0; k < energies.size(); ++k) {
        if (error_mha(k) < threshold_mha) {
            return k;
        }
    }
    return kNotConverged;
}

RunTrace run_vqe(const MoleculeRecord &molecule, const AnsatzProgram &program,
                 const InitStrategy &init, const OptimizerConfig &cfg) {
    cfg.validate();
    require(program.n_qubits == molecule.n_qubits, ErrorKind::Dimension,
            "circuit has " + std::to_string(program.n_qubits) +
                " qubits but the molecule has " +
                std::to_string(molecule.n_qubits));

    RunTrace trace;
    trace.molecule_tag = molecule.tag();
    trace.init_kind = to_string(init.kind);
    trace.optimizer = to_string(cfg.kind);
    trace.schedule = to_string(cfg.schedule);
    trace.reference_energy = reference_energy(molecule);

    std::vector<double> theta = init_parameters(init, program, molecule, cfg.seed);
    AdamState adam;
    double best = std::numeric_limits<double>::infinity();
    std::size_t quiet = 0;

    for (std::size_t k = 0;; ++k) {
        const bool last = k == cfg.max_iterations;
        GradientResult g;
        if (last) {
            g.energy = energy(molecule.hamiltonian, program, theta);
        } else {
            g = compute_gradient(cfg.gradient, molecule.hamiltonian, program, theta);
        }
        require(std::isfinite(g.energy), ErrorKind::Divergence,
                "VQE energy became non-finite at iteration " + std::to_string(k));
        trace.energies.push_back(g.energy);
        if (g.energy < best) {
            best = g.energy;
            trace.best_theta = theta;
        }
        if (cfg.theta_stride != 0 && k % cfg.theta_stride == 0) {
            trace.thetas.emplace_back(k, theta);
        }
        if (k >= 1) {
            const double delta = std::abs(g.energy - trace.energies[k - 1]);
            quiet = delta < cfg.conv_tol ? quiet + 1 : 0;
            if (quiet >= cfg.conv_window) {
                trace.iterations_to_converge = k;
                break;
            }
        }
        if (last) {
            break;
        }
        const double lr = cfg.learning_rate(k);
        if (cfg.kind == OptimizerKind::SGD) {
            theta = sgd_step(theta, g.gradient, lr);
        } else {
            adam_step(adam, theta, g.gradient, lr, k + 1, cfg.adam);
        }
    }
    trace.final_error_mha = (best - trace.reference_energy) * 1000.0;
    return trace;
}

void write_trace_csv(std::ostream &os, const RunTrace &trace) {
    os << "iteration,energy_ha,error_mha\n";
    char buf[96];
    for (std::size_t k = 0; k < trace.energies.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%zu,%.12f,%.6f\n", k, trace.energies[k],
                      trace.error_mha(k));
        os << buf;
    }
}

std::string trace_summary_json(const RunTrace &trace, const OptimizerConfig &cfg) {
    nlohmann::ordered_json j = {
        {"molecule", trace.molecule_tag},
        {"init", trace.init_kind},
        {"optimizer", trace.optimizer},
        {"schedule", trace.schedule},
        {"lr0", cfg.lr0},
        {"seed", cfg.seed},
        {"updates", trace.updates()},
        {"iterations_to_converge", trace.iterations_to_converge},
        {"iterations_to_chemical_accuracy", trace.iterations_to(1.6)},
        {"initial_error_mha", trace.energies.empty() ? 0.0 : trace.error_mha(0)},
        {"final_error_mha", trace.final_error_mha},
        {"reference_energy_ha", trace.reference_energy}};
    return j.dump();
}

} // namespace lstmfc
