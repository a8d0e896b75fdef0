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
#include "lstmfc/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <utility>

#include <nlohmann/json.hpp>

#include "lstmfc/error.hpp"

namespace lstmfc {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(std::string_view source,
                               const std::string &what) {
    throw Error(ErrorKind::Fixture,
                std::string(source) + ": " + what);
}

const json &field(const json &doc, const char *key, std::string_view source) {
    if (!doc.contains(key)) {
        schema_error(source, std::string("missing field '") + key + "'");
    }
    return doc.at(key);
}

double number(const json &v, const std::string &what,
              std::string_view source) {
    if (!v.is_number()) {
        schema_error(source, what + " must be a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        schema_error(source, what + " must be finite");
    }
    return d;
}

std::size_t count(const json &v, const std::string &what,
                  std::string_view source) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        schema_error(source, what + " must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::optional<double> optional_number(const json &doc, const char *key,
                                      std::string_view source) {
    if (!doc.contains(key) || doc.at(key).is_null()) {
        return std::nullopt;
    }
    return number(doc.at(key), key, source);
}

double coefficient(const json &c, std::size_t index, std::string_view source) {
    const std::string what = "term " + std::to_string(index) + " coefficient";
    if (c.is_array()) {
        // Complex coefficients [re, im] are accepted only when real.
        if (c.size() != 2) {
            schema_error(source, what + " must be a number or [re, im]");
        }
        const double im = number(c[1], what, source);
        if (std::abs(im) > 1e-12) {
            schema_error(source, what +
                                     " has a non-zero imaginary part "
                                     "(Hamiltonian is not Hermitian)");
        }
        return number(c[0], what, source);
    }
    return number(c, what, source);
}

} // namespace

MoleculeRecord parse_molecule(const json &doc, LoadMode mode,
                              std::string_view source) {
    if (!doc.is_object()) {
        schema_error(source, "fixture must be a JSON object");
    }
    if (doc.contains("format_version")) {
        const auto v = count(doc.at("format_version"), "format_version", source);
        if (v != kFixtureFormatVersion) {
            schema_error(source, "unsupported format_version " +
                                     std::to_string(v));
        }
    }
    MoleculeRecord rec;
    const auto &name = field(doc, "name", source);
    if (!name.is_string() || name.get<std::string>().empty()) {
        schema_error(source, "name must be a non-empty string");
    }
    rec.name = name.get<std::string>();
    const auto &label = field(doc, "geometry_label", source);
    if (!label.is_string()) {
        schema_error(source, "geometry_label must be a string");
    }
    rec.geometry_label = label.get<std::string>();
    rec.bond_length_angstrom =
        optional_number(doc, "bond_length_angstrom", source);
    rec.n_qubits = count(field(doc, "n_qubits", source), "n_qubits", source);
    rec.n_electrons =
        count(field(doc, "n_electrons", source), "n_electrons", source);
    rec.hf_energy_ha =
        number(field(doc, "hf_energy_ha", source), "hf_energy_ha", source);
    rec.fci_energy_ha = optional_number(doc, "fci_energy_ha", source);

    if (rec.n_qubits < 1 || rec.n_qubits > kMaxGroundStateQubits) {
        schema_error(source, "n_qubits must be in [1, " +
                                 std::to_string(kMaxGroundStateQubits) + "]");
    }
    if (rec.n_electrons < 1 || rec.n_electrons > rec.n_qubits) {
        schema_error(source, "n_electrons must be in [1, n_qubits]");
    }

    const auto &features = field(doc, "features", source);
    if (!features.is_array()) {
        schema_error(source, "features must be an array");
    }
    rec.features.reserve(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) {
        rec.features.push_back(
            number(features[i], "features[" + std::to_string(i) + "]", source));
    }

    const auto &ham = field(doc, "hamiltonian", source);
    if (!ham.is_array() || ham.empty()) {
        schema_error(source, "hamiltonian must be a non-empty array");
    }
    std::vector<PauliTerm> terms;
    terms.reserve(ham.size());
    for (std::size_t k = 0; k < ham.size(); ++k) {
        const auto &t = ham[k];
        if (!t.is_object() || !t.contains("coeff") || !t.contains("paulis") ||
            !t.at("paulis").is_string()) {
            schema_error(source, "term " + std::to_string(k) +
                                     " must be {coeff, paulis}");
        }
        const std::string text = t.at("paulis").get<std::string>();
        PauliString p;
        try {
            p = PauliString::parse(text);
        } catch (const Error &e) {
            schema_error(source,
                         "term " + std::to_string(k) + ": " + e.what());
        }
        if (p.size() != rec.n_qubits) {
            schema_error(source, "term " + std::to_string(k) + " \"" + text +
                                     "\" has length " +
                                     std::to_string(p.size()) +
                                     ", expected n_qubits = " +
                                     std::to_string(rec.n_qubits));
        }
        terms.push_back(PauliTerm{coefficient(t.at("coeff"), k, source), p});
    }
    rec.hamiltonian = QubitHamiltonian(rec.n_qubits, terms);

    if (rec.fci_energy_ha && rec.hf_energy_ha < *rec.fci_energy_ha - 1e-9) {
        schema_error(source, "hf_energy_ha lies below fci_energy_ha");
    }

    if (mode == LoadMode::Strict && rec.fci_energy_ha) {
        GroundStateOptions opts;
        opts.particle_number = rec.n_electrons;
        const auto gs = ground_state(rec.hamiltonian, opts);
        if (!gs.converged) {
            throw Error(ErrorKind::NonConvergence,
                        std::string(source) +
                            ": ground-state solver did not converge");
        }
        if (std::abs(gs.energy - *rec.fci_energy_ha) > kStrictFciTolerance) {
            schema_error(source,
                         "fci_energy_ha " + std::to_string(*rec.fci_energy_ha) +
                             " disagrees with the exact ground state " +
                             std::to_string(gs.energy));
        }
    }
    return rec;
}

MoleculeRecord load_molecule(const std::filesystem::path &path, LoadMode mode) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Fixture,
                    "cannot open fixture " + path.string());
    }
    json doc;
    try {
        in >> doc;
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Fixture,
                    path.string() + ": invalid JSON: " + e.what());
    }
    return parse_molecule(doc, mode, path.string());
}

std::vector<MoleculeRecord> scan_series(std::span<const MoleculeRecord> records,
                                        std::string_view name) {
    std::vector<MoleculeRecord> out;
    for (const auto &r : records) {
        if (r.name != name) {
            continue;
        }
        require(r.bond_length_angstrom.has_value(), ErrorKind::Fixture,
                "series '" + std::string(name) + "' has record '" +
                    r.geometry_label + "' without a bond length");
        out.push_back(r);
    }
    require(!out.empty(), ErrorKind::Fixture,
            "no records for series '" + std::string(name) + "'");
    std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        return *a.bond_length_angstrom < *b.bond_length_angstrom;
    });
    return out;
}

double reference_energy(const MoleculeRecord &molecule) {
    if (molecule.fci_energy_ha) {
        return *molecule.fci_energy_ha;
    }
    GroundStateOptions opts;
    opts.particle_number = molecule.n_electrons;
    const auto gs = ground_state(molecule.hamiltonian, opts);
    require(gs.converged, ErrorKind::NonConvergence,
            "reference ground state did not converge for " + molecule.name);
    return gs.energy;
}

namespace {
std::vector<std::filesystem::path> json_files(const std::filesystem::path &dir) {
    std::vector<std::filesystem::path> files;
    if (!std::filesystem::is_directory(dir)) {
        throw Error(ErrorKind::Fixture,
                    "fixture directory not found: " + dir.string());
    }
    for (const auto &entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}
} // namespace

DatasetManifest DatasetManifest::load_directory(const std::filesystem::path &dir,
                                                LoadMode mode) {
    DatasetManifest m;
    std::set<std::pair<std::string, std::string>> keys;
    for (const auto &file : json_files(dir)) {
        auto rec = load_molecule(file, mode);
        const auto key = std::make_pair(rec.name, rec.geometry_label);
        require(keys.insert(key).second, ErrorKind::Fixture,
                "duplicate fixture (" + rec.name + ", " + rec.geometry_label +
                    ") in " + dir.string());
        m.records_.push_back(std::move(rec));
    }
    return m;
}

const MoleculeRecord &DatasetManifest::find(std::string_view name) const {
    const MoleculeRecord *hit = nullptr;
    for (const auto &r : records_) {
        if (r.name == name) {
            require(hit == nullptr, ErrorKind::Config,
                    "molecule name '" + std::string(name) + "' is ambiguous");
            hit = &r;
        }
    }
    require(hit != nullptr, ErrorKind::Config,
            "unknown molecule '" + std::string(name) + "'");
    return *hit;
}

bool DatasetManifest::contains(std::string_view name) const {
    return std::any_of(records_.begin(), records_.end(),
                       [&](const auto &r) { return r.name == name; });
}

std::vector<MoleculeRecord> load_series(const std::filesystem::path &fixtures_dir,
                                        std::string_view name, LoadMode mode) {
    const auto dir = fixtures_dir / "scan" / std::string(name);
    std::vector<MoleculeRecord> records;
    if (std::filesystem::is_directory(dir)) {
        for (const auto &file : json_files(dir)) {
            records.push_back(load_molecule(file, mode));
        }
    }
    return scan_series(records, name);
}

} // namespace lstmfc
