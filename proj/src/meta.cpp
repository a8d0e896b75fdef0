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
#include "lstmfc/meta.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "lstmfc/error.hpp"

namespace lstmfc {

namespace {

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Eigen::VectorXd to_eigen(std::span<const double> v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(),
                                             static_cast<Eigen::Index>(v.size()));
}

std::span<double> view(Eigen::MatrixXd &m) {
    return {m.data(), static_cast<std::size_t>(m.size())};
}
std::span<double> view(Eigen::VectorXd &v) {
    return {v.data(), static_cast<std::size_t>(v.size())};
}

/// Concatenated copy of several blocks.
std::vector<double> flatten(const std::vector<std::span<double>> &blocks) {
    std::vector<double> out;
    for (auto b : blocks) {
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

void scatter(std::span<const double> flat,
             const std::vector<std::span<double>> &blocks) {
    std::size_t at = 0;
    for (auto b : blocks) {
        std::copy_n(flat.begin() + static_cast<std::ptrdiff_t>(at), b.size(),
                    b.begin());
        at += b.size();
    }
}

bool all_finite(std::span<const double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            return false;
        }
    }
    return true;
}

/// Optimizer state for one group of parameter blocks.
struct BlockAdam {
    AdamState state;
    std::size_t t = 0;

    void step(const std::vector<std::span<double>> &params,
              const std::vector<std::span<double>> &grads, double lr,
              const AdamParams &p) {
        std::vector<double> theta = flatten(params);
        const std::vector<double> g = flatten(grads);
        adam_step(state, theta, g, lr, ++t, p);
        scatter(theta, params);
    }
};

struct StepRecord {
    LstmCache cache;
    Eigen::VectorXd phi;
    std::vector<double> gradient; // dE_t / dtheta_t
};

UnrollResult run_unroll(const MetaModel &model, const MoleculeRecord &mol,
                        const AnsatzProgram &program, GradientMethod method,
                        std::vector<StepRecord> *records) {
    model.check_compatible(mol.tag(), program);
    const std::size_t width = model.input_dim - 1;
    const FcHead *head = nullptr;
    if (model.mode == MetaMode::FcHeads) {
        head = &model.heads.at(mol.tag());
    }

    UnrollResult out;
    LstmState state = LstmState::zeros(model.hidden_dim);
    std::vector<double> prev = pad_or_truncate(mol.features, width);
    double prev_y = 0.0;
    for (std::size_t t = 1; t <= model.T; ++t) {
        std::vector<double> x = pad_or_truncate(prev, width);
        x.push_back(prev_y);

        StepRecord rec;
        auto step = lstm_step(model.lstm, state, to_eigen(x),
                              records != nullptr ? &rec.cache : nullptr);
        state = std::move(step.state);

        std::vector<double> theta =
            head != nullptr
                ? fc_project(*head, step.phi)
                : truncate_output({step.phi.data(), model.hidden_dim},
                                  program.param_count);

        double e = 0.0;
        if (records != nullptr) {
            GradientResult g =
                compute_gradient(method, mol.hamiltonian, program, theta);
            e = g.energy;
            rec.phi = std::move(step.phi);
            rec.gradient = std::move(g.gradient);
            records->push_back(std::move(rec));
        } else {
            e = energy(mol.hamiltonian, program, theta);
        }
        out.energies.push_back(e);
        prev_y = e - mol.hf_energy_ha;
        prev = theta;
        out.thetas.push_back(std::move(theta));
    }
    out.loss = trajectory_loss(out.energies);
    return out;
}

std::vector<const TrainingItem *>
select_items(std::span<const TrainingItem> pool,
             const std::vector<std::string> &tags, bool empty_means_all) {
    std::vector<const TrainingItem *> out;
    if (tags.empty() && empty_means_all) {
        for (const auto &item : pool) {
            out.push_back(&item);
        }
        return out;
    }
    for (const auto &tag : tags) {
        const TrainingItem *found = nullptr;
        for (const auto &item : pool) {
            if (item.molecule.tag() == tag) {
                found = &item;
                break;
            }
        }
        require(found != nullptr, ErrorKind::Config,
                "training pool has no molecule '" + tag + "'");
        out.push_back(found);
    }
    return out;
}

bool converged(double prev, double cur, double tol) {
    const double scale = std::max(std::abs(prev), 1e-300);
    return std::abs(cur - prev) / scale < tol;
}

} // namespace

std::string to_string(MetaMode mode) {
    return mode == MetaMode::FcHeads ? "fc-heads" : "pad-truncate";
}

MetaMode parse_meta_mode(std::string_view name) {
    if (name == "fc-heads" || name == "lstm-fc") {
        return MetaMode::FcHeads;
    }
    if (name == "pad-truncate" || name == "lstm") {
        return MetaMode::PadTruncate;
    }
    throw Error(ErrorKind::Config,
                "unknown meta mode '" + std::string(name) +
                    "' (expected fc-heads or pad-truncate)");
}

std::string to_string(StopReason reason) {
    return reason == StopReason::EarlyStop ? "early-stop" : "epoch-cap";
}

FcHead FcHead::zeros(std::string tag, std::size_t hidden_dim,
                     ParamSplit split) {
    const auto m = static_cast<Eigen::Index>(hidden_dim);
    const auto ns = static_cast<Eigen::Index>(split.singles);
    const auto nd = static_cast<Eigen::Index>(split.doubles);
    return {std::move(tag), Eigen::MatrixXd::Zero(ns, m),
            Eigen::VectorXd::Zero(ns), Eigen::MatrixXd::Zero(nd, m),
            Eigen::VectorXd::Zero(nd)};
}

FcHead FcHead::random(std::string tag, std::size_t hidden_dim,
                      ParamSplit split, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ fnv1a(tag));
    FcHead h = zeros(std::move(tag), hidden_dim, split);
    std::uniform_real_distribution<double> dist(-0.01, 0.01);
    for (double &v : view(h.W_s)) {
        v = dist(rng);
    }
    for (double &v : view(h.W_d)) {
        v = dist(rng);
    }
    return h;
}

std::vector<std::span<double>> FcHead::blocks() {
    return {view(W_s), view(b_s), view(W_d), view(b_d)};
}

ParamSplit head_split(const AnsatzProgram &program) {
    if (program.param_split) {
        return *program.param_split;
    }
    return {program.param_count, 0};
}

std::vector<double> fc_project(const FcHead &head, const Eigen::VectorXd &phi) {
    require(static_cast<std::size_t>(phi.size()) == head.hidden_dim(),
            ErrorKind::Model,
            "fc_project: head '" + head.molecule_tag + "' expects latent size " +
                std::to_string(head.hidden_dim()) + ", got " +
                std::to_string(phi.size()));
    std::vector<double> theta(head.n_singles() + head.n_doubles());
    Eigen::Map<Eigen::VectorXd> s(theta.data(), head.b_s.size());
    Eigen::Map<Eigen::VectorXd> d(theta.data() + head.n_singles(),
                                  head.b_d.size());
    s = head.W_s * phi + head.b_s;
    d = head.W_d * phi + head.b_d;
    return theta;
}

MetaModel MetaModel::create(MetaMode mode, std::size_t hidden_dim,
                            std::size_t T, std::uint64_t seed,
                            std::optional<std::size_t> input_dim) {
    require(hidden_dim >= 1, ErrorKind::Config, "latent size must be >= 1");
    require(T >= 1, ErrorKind::Config, "unroll length must be >= 1");
    const std::size_t in = input_dim.value_or(hidden_dim + 1);
    require(in >= 1, ErrorKind::Config, "input size must be >= 1");
    MetaModel model;
    model.mode = mode;
    model.hidden_dim = hidden_dim;
    model.input_dim = in;
    model.T = T;
    model.seed = seed;
    std::mt19937_64 rng(seed);
    model.lstm = LstmWeights::random(hidden_dim, in, rng);
    return model;
}

void MetaModel::ensure_head(const std::string &tag,
                            const AnsatzProgram &program) {
    if (mode != MetaMode::FcHeads || heads.contains(tag)) {
        return;
    }
    heads.emplace(tag, FcHead::random(tag, hidden_dim, head_split(program), seed));
}

void MetaModel::check_compatible(const std::string &tag,
                                 const AnsatzProgram &program) const {
    require(lstm.hidden_dim() == hidden_dim && lstm.input_dim() == input_dim,
            ErrorKind::Model, "LSTM weight shapes disagree with model sizes");
    if (mode == MetaMode::PadTruncate) {
        require(program.param_count <= hidden_dim, ErrorKind::Model,
                "pad-truncate model with latent size " +
                    std::to_string(hidden_dim) + " cannot emit " +
                    std::to_string(program.param_count) + " parameters for '" +
                    tag + "'");
        return;
    }
    auto it = heads.find(tag);
    require(it != heads.end(), ErrorKind::Model,
            "model has no projection head for '" + tag + "'");
    const ParamSplit split = head_split(program);
    const FcHead &h = it->second;
    require(h.n_singles() == split.singles && h.n_doubles() == split.doubles &&
                h.hidden_dim() == hidden_dim,
            ErrorKind::Model,
            "head '" + tag + "' has shape (" + std::to_string(h.n_singles()) +
                "+" + std::to_string(h.n_doubles()) + ") but the circuit needs (" +
                std::to_string(split.singles) + "+" +
                std::to_string(split.doubles) + ")");
}

double trajectory_loss(std::span<const double> energies) {
    require(!energies.empty(), ErrorKind::Config, "empty trajectory");
    double acc = 0.0;
    for (std::size_t t = 1; t <= energies.size(); ++t) {
        acc += 0.1 * static_cast<double>(t) * energies[t - 1];
    }
    return acc / static_cast<double>(energies.size());
}

UnrollResult unroll(const MetaModel &model, const MoleculeRecord &molecule,
                    const AnsatzProgram &program, GradientMethod method) {
    return run_unroll(model, molecule, program, method, nullptr);
}

UnrollResult unroll_with_gradient(const MetaModel &model,
                                  const MoleculeRecord &molecule,
                                  const AnsatzProgram &program,
                                  MetaGradient &grad, GradientMethod method) {
    std::vector<StepRecord> rec;
    UnrollResult out = run_unroll(model, molecule, program, method, &rec);

    const std::size_t T = model.T;
    const std::size_t width = model.input_dim - 1;
    const std::size_t n = program.param_count;
    const auto m = static_cast<Eigen::Index>(model.hidden_dim);

    grad.lstm = LstmWeights::zeros(model.hidden_dim, model.input_dim);
    const FcHead *head = nullptr;
    if (model.mode == MetaMode::FcHeads) {
        head = &model.heads.at(molecule.tag());
        grad.head = FcHead::zeros(head->molecule_tag, model.hidden_dim,
                                  {head->n_singles(), head->n_doubles()});
    } else {
        grad.head.reset();
    }

    Eigen::VectorXd d_h_next = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd d_c_next = Eigen::VectorXd::Zero(m);
    Eigen::VectorXd d_theta_fed = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    double d_y_fed = 0.0;

    for (std::size_t t = T; t >= 1; --t) {
        const StepRecord &r = rec[t - 1];
        // E_t enters the loss directly and, through y_t, the next input.
        const double d_e = 0.1 * static_cast<double>(t) / static_cast<double>(T) + d_y_fed;
        Eigen::VectorXd d_theta = d_e * to_eigen(r.gradient) + d_theta_fed;

        Eigen::VectorXd d_phi;
        if (head != nullptr) {
            const auto ns = static_cast<Eigen::Index>(head->n_singles());
            const auto nd = static_cast<Eigen::Index>(head->n_doubles());
            const Eigen::VectorXd ds = d_theta.head(ns);
            const Eigen::VectorXd dd = d_theta.tail(nd);
            grad.head->W_s.noalias() += ds * r.phi.transpose();
            grad.head->b_s += ds;
            grad.head->W_d.noalias() += dd * r.phi.transpose();
            grad.head->b_d += dd;
            d_phi = head->W_s.transpose() * ds;
            d_phi.noalias() += head->W_d.transpose() * dd;
        } else {
            d_phi = Eigen::VectorXd::Zero(m);
            d_phi.head(static_cast<Eigen::Index>(n)) = d_theta;
        }

        const Eigen::VectorXd d_h = d_phi + d_h_next;
        LstmStepGradient back =
            lstm_step_backward(model.lstm, r.cache, d_h, d_c_next, grad.lstm);
        d_h_next = std::move(back.d_h_prev);
        d_c_next = std::move(back.d_c_prev);

        // Input layout: [pad(theta_{t-1}, width); y_{t-1}]. Step 1 reads
        // constants, so nothing flows further back.
        d_theta_fed.setZero();
        const std::size_t kept = std::min(width, n);
        d_theta_fed.head(static_cast<Eigen::Index>(kept)) =
            back.d_x.head(static_cast<Eigen::Index>(kept));
        d_y_fed = back.d_x(static_cast<Eigen::Index>(width));
    }
    return out;
}

void TrainConfig::validate() const {
    require(T >= 1, ErrorKind::Config, "T must be >= 1");
    require(lstm_lr > 0.0, ErrorKind::Config, "meta learning rate must be > 0");
    require(early_stop_rel_tol > 0.0, ErrorKind::Config,
            "early-stop tolerance must be > 0");
    require(epochs_max >= 1, ErrorKind::Config, "epochs_max must be >= 1");
}

TrainResult train(MetaModel model, std::span<const TrainingItem> pool,
                  const TrainConfig &cfg) {
    cfg.validate();
    require(model.T == cfg.T, ErrorKind::Config,
            "model unroll length " + std::to_string(model.T) +
                " differs from training T " + std::to_string(cfg.T));
    const auto train_items = select_items(pool, cfg.training_molecules, true);
    const auto adapt_items = select_items(pool, cfg.adapt_molecules, false);
    require(!train_items.empty(), ErrorKind::Config, "empty training set");

    for (const auto *item : train_items) {
        model.ensure_head(item->molecule.tag(), item->program);
    }
    for (const auto *item : adapt_items) {
        model.ensure_head(item->molecule.tag(), item->program);
    }

    TrainResult res;
    BlockAdam lstm_opt;
    std::map<std::string, BlockAdam> head_opt;

    auto visit = [&](const TrainingItem &item, bool update_lstm,
                     std::size_t epoch) {
        const std::string &tag = item.molecule.tag();
        MetaGradient g;
        UnrollResult u =
            unroll_with_gradient(model, item.molecule, item.program, g, cfg.gradient);
        bool finite = std::isfinite(u.loss) && g.lstm.all_finite();
        if (g.head) {
            for (auto b : g.head->blocks()) {
                finite = finite && all_finite(b);
            }
        }
        if (!finite) {
            std::ostringstream os;
            os << "meta-training diverged at epoch " << epoch << " on '" << tag
               << "' (loss " << u.loss << ")";
            throw Error(ErrorKind::Divergence, os.str());
        }
        if (update_lstm) {
            lstm_opt.step(model.lstm.blocks(), g.lstm.blocks(), cfg.lstm_lr,
                          cfg.adam);
        }
        if (g.head) {
            head_opt[tag].step(model.heads.at(tag).blocks(), g.head->blocks(),
                               cfg.lstm_lr, cfg.adam);
        }
        return u.loss;
    };

    for (std::size_t epoch = 1; epoch <= cfg.epochs_max; ++epoch) {
        double sum = 0.0;
        for (const auto *item : train_items) {
            sum += visit(*item, true, epoch);
        }
        const double mean = sum / static_cast<double>(train_items.size());
        res.loss_history.push_back(mean);
        res.epochs = epoch;
        if (epoch > 1 && converged(res.loss_history[epoch - 2], mean,
                                   cfg.early_stop_rel_tol)) {
            res.stop_reason = StopReason::EarlyStop;
            break;
        }
    }

    // Heads for molecules outside the training set are fitted against the
    // frozen LSTM so the shared weights stay those learned above.
    if (model.mode == MetaMode::FcHeads) {
        for (const auto *item : adapt_items) {
            auto &hist = res.adapt_history[item->molecule.tag()];
            for (std::size_t epoch = 1; epoch <= cfg.adapt_epochs_max; ++epoch) {
                hist.push_back(visit(*item, false, epoch));
                if (epoch > 1 && converged(hist[epoch - 2], hist.back(),
                                           cfg.early_stop_rel_tol)) {
                    break;
                }
            }
        }
    }
    res.model = std::move(model);
    return res;
}

std::vector<double> infer_init(const MetaModel &model,
                               const MoleculeRecord &molecule,
                               const AnsatzProgram &program) {
    UnrollResult u = unroll(model, molecule, program);
    return std::move(u.thetas.back());
}

} // namespace lstmfc
