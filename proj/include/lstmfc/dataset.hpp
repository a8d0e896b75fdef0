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
 * @file dataset.hpp
 * Molecule fixtures: one JSON document per (molecule, geometry).
 *
 * Schema (format_version 1):
 *   name, geometry_label, bond_length_angstrom (number or null), n_qubits,
 *   n_electrons, hf_energy_ha, fci_energy_ha (number or null),
 *   features (array of numbers),
 *   hamiltonian (array of {"coeff": number, "paulis": "IXYZ..."}).
 */
#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lstmfc/pauli.hpp"

namespace lstmfc {

inline constexpr int kFixtureFormatVersion = 1;

struct MoleculeRecord {
    std::string name;
    std::string geometry_label;
    std::optional<double> bond_length_angstrom;
    std::size_t n_qubits = 0;
    std::size_t n_electrons = 0;
    double hf_energy_ha = 0.0;
    std::optional<double> fci_energy_ha;
    std::vector<double> features;
    QubitHamiltonian hamiltonian{1, {}};

    /// Key used for meta-model heads; shared by every geometry of a molecule.
    [[nodiscard]] const std::string &tag() const { return name; }
};

enum class LoadMode { Lenient, Strict };

/// Tolerance of the strict-mode FCI cross-check, in Hartree.
inline constexpr double kStrictFciTolerance = 1e-6;

/**
 * @brief Validate and build a record from parsed JSON.
 *
 * Strict mode additionally recomputes the ground-state energy in the
 * n_electrons sector and compares it with fci_energy_ha. `source` is used
 * in error messages.
 */
[[nodiscard]] MoleculeRecord parse_molecule(const nlohmann::json &doc,
                                            LoadMode mode,
                                            std::string_view source = "<json>");

[[nodiscard]] MoleculeRecord load_molecule(const std::filesystem::path &path,
                                           LoadMode mode = LoadMode::Lenient);

/// Records of one molecule ordered by bond length.
[[nodiscard]] std::vector<MoleculeRecord>
scan_series(std::span<const MoleculeRecord> records, std::string_view name);

/// Exact energy used as the error reference: the fixture value when present,
/// otherwise the sector ground state.
[[nodiscard]] double reference_energy(const MoleculeRecord &molecule);

/**
 * @brief Fixture directory: core records at the top level and bond-length
 * series under scan/<name>/.
 */
class DatasetManifest {
  public:
    static DatasetManifest load_directory(const std::filesystem::path &dir,
                                          LoadMode mode);

    [[nodiscard]] const std::vector<MoleculeRecord> &records() const {
        return records_;
    }
    [[nodiscard]] int format_version() const { return kFixtureFormatVersion; }
    [[nodiscard]] const MoleculeRecord &find(std::string_view name) const;
    [[nodiscard]] bool contains(std::string_view name) const;

  private:
    std::vector<MoleculeRecord> records_;
};

/// Load scan/<name>/*.json below a fixture directory and order it.
[[nodiscard]] std::vector<MoleculeRecord>
load_series(const std::filesystem::path &fixtures_dir, std::string_view name,
            LoadMode mode);

} // namespace lstmfc
