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
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lstmfc/error.hpp"
#include "lstmfc/meta.hpp"

namespace lstmfc {

namespace {

using nlohmann::json;

constexpr const char *kFormatTag = "lstmfc-checkpoint";

json matrix_json(const Eigen::MatrixXd &m) {
    json data = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            data.push_back(m(r, c));
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

json vector_json(const Eigen::VectorXd &v) {
    return json(std::vector<double>(v.data(), v.data() + v.size()));
}

Eigen::MatrixXd matrix_from(const json &j, Eigen::Index rows, Eigen::Index cols,
                            const std::string &what) {
    const auto r = j.at("rows").get<Eigen::Index>();
    const auto c = j.at("cols").get<Eigen::Index>();
    const auto &data = j.at("data");
    require(r == rows && c == cols &&
                data.size() == static_cast<std::size_t>(r * c),
            ErrorKind::Model, "checkpoint matrix '" + what + "' has wrong shape");
    Eigen::MatrixXd m(r, c);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < r; ++i) {
        for (Eigen::Index q = 0; q < c; ++q) {
            m(i, q) = data[k++].get<double>();
        }
    }
    return m;
}

Eigen::VectorXd vector_from(const json &j, Eigen::Index size,
                            const std::string &what) {
    const auto v = j.get<std::vector<double>>();
    require(static_cast<Eigen::Index>(v.size()) == size, ErrorKind::Model,
            "checkpoint vector '" + what + "' has wrong size");
    return Eigen::Map<const Eigen::VectorXd>(v.data(), size);
}

} // namespace

std::string checkpoint_json(const MetaModel &model) {
    const auto &w = model.lstm;
    json lstm = {{"W_f", matrix_json(w.W_f)}, {"W_i", matrix_json(w.W_i)},
                 {"W_c", matrix_json(w.W_c)}, {"W_o", matrix_json(w.W_o)},
                 {"b_f", vector_json(w.b_f)}, {"b_i", vector_json(w.b_i)},
                 {"b_c", vector_json(w.b_c)}, {"b_o", vector_json(w.b_o)}};
    json heads = json::object();
    for (const auto &[tag, h] : model.heads) {
        heads[tag] = {{"W_s", matrix_json(h.W_s)}, {"b_s", vector_json(h.b_s)},
                      {"W_d", matrix_json(h.W_d)}, {"b_d", vector_json(h.b_d)}};
    }
    json doc = {{"format", kFormatTag},
                {"version", kCheckpointVersion},
                {"mode", to_string(model.mode)},
                {"hidden_dim", model.hidden_dim},
                {"input_dim", model.input_dim},
                {"T", model.T},
                {"seed", model.seed},
                {"lstm", std::move(lstm)},
                {"heads", std::move(heads)}};
    return doc.dump(1) + "\n";
}

MetaModel parse_checkpoint(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Model, std::string("checkpoint is not JSON: ") + e.what());
    }
    try {
        require(doc.value("format", "") == kFormatTag, ErrorKind::Model,
                "not an lstmfc checkpoint");
        const int version = doc.at("version").get<int>();
        require(version == kCheckpointVersion, ErrorKind::Model,
                "unsupported checkpoint version " + std::to_string(version));

        MetaModel m;
        m.mode = parse_meta_mode(doc.at("mode").get<std::string>());
        m.hidden_dim = doc.at("hidden_dim").get<std::size_t>();
        m.input_dim = doc.at("input_dim").get<std::size_t>();
        m.T = doc.at("T").get<std::size_t>();
        m.seed = doc.at("seed").get<std::uint64_t>();
        require(m.hidden_dim >= 1 && m.input_dim >= 1 && m.T >= 1,
                ErrorKind::Model, "checkpoint sizes must be positive");

        const auto M = static_cast<Eigen::Index>(m.hidden_dim);
        const auto cols = static_cast<Eigen::Index>(m.hidden_dim + m.input_dim);
        const json &l = doc.at("lstm");
        m.lstm.W_f = matrix_from(l.at("W_f"), M, cols, "W_f");
        m.lstm.W_i = matrix_from(l.at("W_i"), M, cols, "W_i");
        m.lstm.W_c = matrix_from(l.at("W_c"), M, cols, "W_c");
        m.lstm.W_o = matrix_from(l.at("W_o"), M, cols, "W_o");
        m.lstm.b_f = vector_from(l.at("b_f"), M, "b_f");
        m.lstm.b_i = vector_from(l.at("b_i"), M, "b_i");
        m.lstm.b_c = vector_from(l.at("b_c"), M, "b_c");
        m.lstm.b_o = vector_from(l.at("b_o"), M, "b_o");
        require(m.lstm.all_finite(), ErrorKind::Model,
                "checkpoint LSTM weights are not finite");

        for (const auto &[tag, h] : doc.at("heads").items()) {
            const auto ns = static_cast<Eigen::Index>(h.at("b_s").size());
            const auto nd = static_cast<Eigen::Index>(h.at("b_d").size());
            FcHead head;
            head.molecule_tag = tag;
            head.W_s = matrix_from(h.at("W_s"), ns, M, tag + ".W_s");
            head.b_s = vector_from(h.at("b_s"), ns, tag + ".b_s");
            head.W_d = matrix_from(h.at("W_d"), nd, M, tag + ".W_d");
            head.b_d = vector_from(h.at("b_d"), nd, tag + ".b_d");
            m.heads.emplace(tag, std::move(head));
        }
        return m;
    } catch (const json::exception &e) {
        throw Error(ErrorKind::Model, std::string("malformed checkpoint: ") + e.what());
    }
}

void save_checkpoint(const MetaModel &model, const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), ErrorKind::Config,
            "cannot write checkpoint '" + path.string() + "'");
    out << checkpoint_json(model);
}

MetaModel load_checkpoint(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorKind::Model,
            "cannot read checkpoint '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_checkpoint(ss.str());
}

} // namespace lstmfc
