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
#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "lstmfc/dataset.hpp"
#include "lstmfc/error.hpp"
#include "oracles.hpp"

using namespace lstmfc;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using nlohmann::json;

namespace {

const std::filesystem::path kFixtures = LSTMFC_FIXTURES_DIR;

json two_qubit_doc() {
    return json::parse(R"({
        "format_version": 1, "name": "T", "geometry_label": "g",
        "bond_length_angstrom": 1.0, "n_qubits": 2, "n_electrons": 1,
        "hf_energy_ha": 0.5, "fci_energy_ha": -1.0, "features": [0.1, 0.2],
        "hamiltonian": [{"coeff": -0.5, "paulis": "ZI"}, {"coeff": 0.5, "paulis": "IZ"},
                        {"coeff": 0.5, "paulis": "XX"}]})");
}

/// Fixture error whose message mentions `needle`.
void expect_fixture_error(const json &doc, const std::string &needle,
                          LoadMode mode = LoadMode::Lenient) {
    try {
        (void)parse_molecule(doc, mode, "case");
        FAIL("expected a fixture error mentioning " << needle);
    } catch (const Error &e) {
        CHECK(e.kind() == ErrorKind::Fixture);
        CHECK_THAT(e.what(), ContainsSubstring(needle));
    }
}

} // namespace

TEST_CASE("core fixtures load", "[dataset]") {
    const auto h2 = load_molecule(kFixtures / "H2.json");
    CHECK(h2.n_qubits == 4);
    CHECK(h2.n_electrons == 2);
    CHECK(h2.tag() == "H2");
    CHECK(h2.hamiltonian.n_qubits() == 4);
    CHECK(h2.fci_energy_ha.has_value());
    CHECK(h2.hf_energy_ha > *h2.fci_energy_ha);

    const auto m = DatasetManifest::load_directory(kFixtures, LoadMode::Lenient);
    for (const char *name : {"H2", "H3+", "H4", "OH-", "H2O"}) {
        CHECK(m.contains(name));
    }
    CHECK_FALSE(m.contains("LiH"));
    CHECK_THROWS_AS(m.find("LiH"), Error);
}

TEST_CASE("fixture Hamiltonians are Hermitian with the recorded energies", "[dataset][oracle]") {
    const auto m = DatasetManifest::load_directory(kFixtures, LoadMode::Lenient);
    for (const auto &rec : m.records()) {
        INFO(rec.name);
        // Real coefficients on Pauli strings make H Hermitian by construction;
        // the dense oracle confirms it for the small systems.
        if (rec.n_qubits > 8) {
            continue;
        }
        const auto h = oracle::hamiltonian(rec.hamiltonian);
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK_THAT(oracle::lowest_eigenvalue(h, static_cast<int>(rec.n_electrons)),
                   WithinAbs(*rec.fci_energy_ha, 1e-8));
        std::string occ(rec.n_qubits, '0');
        std::fill_n(occ.begin(), rec.n_electrons, '1');
        CHECK_THAT(oracle::energy(h, oracle::basis(occ)), WithinAbs(rec.hf_energy_ha, 1e-8));
    }
}

TEST_CASE("schema violations", "[dataset]") {
    CHECK_NOTHROW(parse_molecule(two_qubit_doc(), LoadMode::Lenient));

    auto doc = two_qubit_doc();
    doc["hamiltonian"][1]["paulis"] = "QZ";
    expect_fixture_error(doc, "term 1");

    doc = two_qubit_doc();
    doc["hamiltonian"][2]["paulis"] = "XXX";
    expect_fixture_error(doc, "\"XXX\"");

    doc = two_qubit_doc();
    doc["hamiltonian"][0]["coeff"] = json::array({0.1, 0.3});
    expect_fixture_error(doc, "Hermitian");

    doc = two_qubit_doc();
    doc.erase("features");
    expect_fixture_error(doc, "features");

    doc = two_qubit_doc();
    doc["n_electrons"] = 3;
    expect_fixture_error(doc, "n_electrons");

    doc = two_qubit_doc();
    doc["format_version"] = 2;
    expect_fixture_error(doc, "format_version");

    doc = two_qubit_doc();
    doc["hf_energy_ha"] = -2.0;
    expect_fixture_error(doc, "below");
}

TEST_CASE("strict mode recomputes the reference energy", "[dataset]") {
    // Sector with one electron: lowest eigenvalue of the 2x2 block
    // [[-1, 0.5], [0.5, 1]] is -sqrt(1.25).
    auto doc = two_qubit_doc();
    expect_fixture_error(doc, "disagrees", LoadMode::Strict);
    doc["fci_energy_ha"] = -std::sqrt(1.25);
    const auto rec = parse_molecule(doc, LoadMode::Strict);
    CHECK_THAT(reference_energy(rec), WithinAbs(-std::sqrt(1.25), 1e-15));

    doc.erase("fci_energy_ha");
    CHECK_THAT(reference_energy(parse_molecule(doc, LoadMode::Strict)),
               WithinAbs(-std::sqrt(1.25), 1e-9));
    CHECK_NOTHROW(load_molecule(kFixtures / "H2.json", LoadMode::Strict));
}

TEST_CASE("bond-length series", "[dataset]") {
    const auto series = load_series(kFixtures, "H4", LoadMode::Lenient);
    REQUIRE(series.size() == 10);
    for (std::size_t k = 1; k < series.size(); ++k) {
        CHECK(*series[k].bond_length_angstrom > *series[k - 1].bond_length_angstrom);
    }
    CHECK_THAT(*series.front().bond_length_angstrom, WithinAbs(0.5, 1e-12));
    CHECK_THAT(*series.back().bond_length_angstrom, WithinAbs(2.5, 1e-12));

    const std::vector<MoleculeRecord> one{series[3]};
    CHECK(scan_series(one, "H4").size() == 1);
    CHECK_THROWS_AS(scan_series(one, "H2"), Error);
    CHECK_THROWS_AS(load_series(kFixtures, "LiH", LoadMode::Lenient), Error);

    auto no_length = series;
    no_length[2].bond_length_angstrom.reset();
    CHECK_THROWS_AS(scan_series(no_length, "H4"), Error);
}

TEST_CASE("directory loading", "[dataset]") {
    const auto dir = std::filesystem::temp_directory_path() / "lstmfc_dup_fixtures";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    for (const char *file : {"a.json", "b.json"}) {
        std::ofstream(dir / file) << two_qubit_doc().dump();
    }
    CHECK_THROWS_AS(DatasetManifest::load_directory(dir, LoadMode::Lenient), Error);
    std::filesystem::remove(dir / "b.json");
    std::ofstream(dir / "broken.json") << "{ not json";
    CHECK_THROWS_AS(DatasetManifest::load_directory(dir, LoadMode::Lenient), Error);
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(DatasetManifest::load_directory(dir, LoadMode::Lenient), Error);
}

TEST_CASE("loading is deterministic", "[dataset]") {
    const auto a = load_molecule(kFixtures / "H4.json");
    const auto b = load_molecule(kFixtures / "H4.json");
    CHECK(a.features == b.features);
    REQUIRE(a.hamiltonian.terms().size() == b.hamiltonian.terms().size());
    for (std::size_t k = 0; k < a.hamiltonian.terms().size(); ++k) {
        CHECK(a.hamiltonian.terms()[k].coeff == b.hamiltonian.terms()[k].coeff);
    }
}
