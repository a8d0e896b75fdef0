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
// Python bindings for datasets, circuits, gradients, VQE and meta-training.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>
#include <sstream>

#include "lstmfc/ansatz.hpp"
#include "lstmfc/dataset.hpp"
#include "lstmfc/error.hpp"
#include "lstmfc/experiments.hpp"
#include "lstmfc/gradient.hpp"
#include "lstmfc/meta.hpp"
#include "lstmfc/vqe.hpp"

namespace py = pybind11;
using namespace lstmfc;

namespace {

py::tuple as_pair(const GradientResult &r) { return py::make_tuple(r.energy, r.gradient); }

OptimizerConfig vqe_config(const std::string &opt, const std::string &sched,
                           std::optional<double> lr, std::size_t max_iter, std::uint64_t seed,
                           const std::string &grad) {
    auto cfg = OptimizerConfig::defaults(parse_optimizer(opt), parse_schedule(sched));
    if (lr) {
        cfg.lr0 = *lr;
    }
    cfg.max_iterations = max_iter;
    cfg.seed = seed;
    cfg.gradient = parse_gradient_method(grad);
    cfg.validate();
    return cfg;
}

} // namespace

PYBIND11_MODULE(_lstmfc, m) {
    m.doc() = "Meta-learned VQE parameter initialization";

    // Owned by the module for the life of the interpreter; never released.
    static py::handle error_type =
        py::exception<Error>(m, "LstmfcError", PyExc_RuntimeError).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            py::object exc = error_type(e.what());
            exc.attr("exit_code") = exit_code(e.kind());
            PyErr_SetObject(error_type.ptr(), exc.ptr());
        }
    });

    py::class_<MoleculeRecord>(m, "Molecule")
        .def_readonly("name", &MoleculeRecord::name)
        .def_readonly("geometry_label", &MoleculeRecord::geometry_label)
        .def_readonly("bond_length_angstrom", &MoleculeRecord::bond_length_angstrom)
        .def_readonly("n_qubits", &MoleculeRecord::n_qubits)
        .def_readonly("n_electrons", &MoleculeRecord::n_electrons)
        .def_readonly("hf_energy_ha", &MoleculeRecord::hf_energy_ha)
        .def_readonly("fci_energy_ha", &MoleculeRecord::fci_energy_ha)
        .def_readonly("features", &MoleculeRecord::features)
        .def_property_readonly("n_terms",
                               [](const MoleculeRecord &r) { return r.hamiltonian.terms().size(); })
        .def("__repr__", [](const MoleculeRecord &r) {
            return "<Molecule " + r.name + " " + r.geometry_label + ", " +
                   std::to_string(r.n_qubits) + " qubits>";
        });

    m.def("load_molecule", [](const std::filesystem::path &p, bool strict) {
        return load_molecule(p, strict ? LoadMode::Strict : LoadMode::Lenient);
    }, py::arg("path"), py::arg("strict") = false);
    m.def("load_directory", [](const std::filesystem::path &dir, bool strict) {
        return DatasetManifest::load_directory(dir, strict ? LoadMode::Strict : LoadMode::Lenient)
            .records();
    }, py::arg("path"), py::arg("strict") = false, "Every fixture at the top of a directory.");
    m.def("load_series", [](const std::filesystem::path &dir, const std::string &name) {
        return load_series(dir, name, LoadMode::Lenient);
    }, py::arg("fixtures_dir"), py::arg("name"));
    m.def("reference_energy", &reference_energy, py::arg("molecule"));
    m.def("ground_state_energy", [](const MoleculeRecord &mol) {
        GroundStateOptions opts;
        opts.particle_number = mol.n_electrons;
        const auto gs = ground_state(mol.hamiltonian, opts);
        require(gs.converged, ErrorKind::NonConvergence, "ground state did not converge");
        return gs.energy;
    }, py::arg("molecule"), "Lowest energy in the molecule's electron-number sector.");

    py::class_<AnsatzProgram>(m, "Circuit")
        .def_readonly("n_qubits", &AnsatzProgram::n_qubits)
        .def_readonly("param_count", &AnsatzProgram::param_count)
        .def_readonly("reference_occupation", &AnsatzProgram::reference_occupation)
        .def_property_readonly("gate_count", [](const AnsatzProgram &p) { return p.gates.size(); })
        .def("describe", &describe);
    m.def("uccsd", &uccsd_program, py::arg("molecule"));
    m.def("hardware_efficient", [](const MoleculeRecord &mol, std::size_t layers) {
        return build_hea(mol.n_qubits, layers, hartree_fock_occupation(mol.n_electrons, mol.n_qubits));
    }, py::arg("molecule"), py::arg("layers") = 1);

    m.def("energy", [](const MoleculeRecord &mol, const AnsatzProgram &p,
                       const std::vector<double> &theta) {
        return energy(mol.hamiltonian, p, theta);
    }, py::arg("molecule"), py::arg("circuit"), py::arg("theta"));
    m.def("gradient", [](const MoleculeRecord &mol, const AnsatzProgram &p,
                         const std::vector<double> &theta, const std::string &method) {
        return as_pair(compute_gradient(parse_gradient_method(method), mol.hamiltonian, p, theta));
    }, py::arg("molecule"), py::arg("circuit"), py::arg("theta"), py::arg("method") = "adjoint",
       "Returns (energy, gradient); method is adjoint, shift or fd.");

    py::class_<MetaModel, std::shared_ptr<MetaModel>>(m, "MetaModel")
        .def_property_readonly("mode", [](const MetaModel &mm) { return to_string(mm.mode); })
        .def_readonly("hidden_dim", &MetaModel::hidden_dim)
        .def_readonly("input_dim", &MetaModel::input_dim)
        .def_readonly("unroll_steps", &MetaModel::T)
        .def_property_readonly("heads", [](const MetaModel &mm) {
            std::vector<std::string> tags;
            for (const auto &[tag, head] : mm.heads) {
                tags.push_back(tag);
            }
            return tags;
        })
        .def("save", [](const MetaModel &mm, const std::filesystem::path &p) { save_checkpoint(mm, p); })
        .def("to_json", &checkpoint_json)
        .def("initial_parameters", [](const MetaModel &mm, const MoleculeRecord &mol) {
            return infer_init(mm, mol, uccsd_program(mol));
        }, py::arg("molecule"));
    m.def("load_checkpoint", [](const std::filesystem::path &p) {
        return std::make_shared<MetaModel>(load_checkpoint(p));
    }, py::arg("path"));

    m.def("meta_train", [](const std::filesystem::path &fixtures, const std::vector<std::string> &train,
                           const std::vector<std::string> &adapt, const std::string &mode,
                           std::size_t latent, std::size_t steps, std::size_t epochs,
                           double meta_lr, std::uint64_t seed) {
        const auto manifest = DatasetManifest::load_directory(fixtures, LoadMode::Lenient);
        MetaTrainRequest rq;
        rq.mode = parse_meta_mode(mode);
        rq.hidden_dim = latent;
        rq.train.T = steps;
        rq.train.epochs_max = epochs;
        rq.train.adapt_epochs_max = epochs;
        rq.train.lstm_lr = meta_lr;
        rq.train.seed = seed;
        rq.train.training_molecules = train;
        rq.train.adapt_molecules = adapt;
        auto r = meta_train(manifest, rq);
        return py::make_tuple(std::make_shared<MetaModel>(std::move(r.model)), r.loss_history);
    }, py::arg("fixtures_dir"), py::arg("train"), py::arg("adapt") = std::vector<std::string>{},
       py::arg("mode") = "fc-heads", py::arg("latent") = kDefaultHiddenDim,
       py::arg("steps") = kDefaultUnrollSteps, py::arg("epochs") = 300,
       py::arg("meta_lr") = 0.005, py::arg("seed") = 0,
       "Returns (model, epoch loss history).");

    py::class_<RunTrace>(m, "RunTrace")
        .def_readonly("energies", &RunTrace::energies)
        .def_readonly("reference_energy", &RunTrace::reference_energy)
        .def_readonly("best_theta", &RunTrace::best_theta)
        .def_readonly("iterations_to_converge", &RunTrace::iterations_to_converge)
        .def_readonly("final_error_mha", &RunTrace::final_error_mha)
        .def_property_readonly("updates", &RunTrace::updates)
        .def("iterations_to", &RunTrace::iterations_to, py::arg("threshold_mha") = 1.6)
        .def("to_csv", [](const RunTrace &t) {
            std::ostringstream os;
            write_trace_csv(os, t);
            return os.str();
        });
    m.attr("NOT_CONVERGED") = kNotConverged;

    m.def("run_vqe", [](const MoleculeRecord &mol, const std::string &init,
                        std::shared_ptr<MetaModel> model, const std::string &opt,
                        const std::string &sched, std::optional<double> lr,
                        std::size_t max_iter, std::uint64_t seed, const std::string &grad) {
        const auto cfg = vqe_config(opt, sched, lr, max_iter, seed, grad);
        const InitStrategy strategy{parse_init_kind(init), std::move(model)};
        py::gil_scoped_release release;
        return run_vqe(mol, uccsd_program(mol), strategy, cfg);
    }, py::arg("molecule"), py::arg("init") = "zero", py::arg("model") = nullptr,
       py::arg("opt") = "adam", py::arg("sched") = "const", py::arg("lr") = py::none(),
       py::arg("max_iter") = 500, py::arg("seed") = 0, py::arg("grad") = "adjoint",
       "UCCSD VQE; init is random, zero, lstm or lstm-fc (the last two need a model).");
}
