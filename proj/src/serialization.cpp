// Copyright 2026 The sgad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "sgad/serialization.hpp"

#include <stdexcept>

namespace sgad {

void to_json(nlohmann::json& j, const Matrix2& m) {
    j = nlohmann::json::array();
    for (const Complex& c : m.entries()) j.push_back({c.real(), c.imag()});
}

void from_json(const nlohmann::json& j, Matrix2& m) {
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("a 2x2 matrix needs 4 [re, im] entries");
    }
    for (int k = 0; k < 4; ++k) {
        const auto& e = j.at(k);
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("matrix entries must be [re, im] pairs");
        }
        m(k / 2, k % 2) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
}

void to_json(nlohmann::json& j, const BathSpec& b) {
    j = {{"T", b.temperature},
         {"r", b.squeezing},
         {"Phi", b.phase},
         {"gamma0", b.gamma0},
         {"omega", b.omega}};
}

void from_json(const nlohmann::json& j, BathSpec& b) {
    b.temperature = j.at("T").get<double>();
    b.squeezing = j.at("r").get<double>();
    b.phase = j.at("Phi").get<double>();
    b.gamma0 = j.at("gamma0").get<double>();
    b.omega = j.at("omega").get<double>();
    b.validate();
}

void to_json(nlohmann::json& j, const KrausSet& k) {
    j = {{"label", k.label}, {"operators", k.operators}};
    if (k.source) {
        j["source"] = {{"bath", k.source->bath}, {"t", k.source->t}};
    } else {
        j["source"] = nullptr;
    }
}

void from_json(const nlohmann::json& j, KrausSet& k) {
    k.label = j.at("label").get<std::string>();
    k.operators = j.at("operators").get<std::vector<Matrix2>>();
    k.source.reset();
    if (j.contains("source") && !j.at("source").is_null()) {
        const auto& s = j.at("source");
        k.source = ChannelSource{s.at("bath").get<BathSpec>(), s.at("t").get<double>()};
    }
}

void to_json(nlohmann::json& j, const SgadParams& p) {
    j = {{"p1", p.p1},
         {"p2", p.p2},
         {"alpha", p.alpha},
         {"mu", p.mu},
         {"nu", p.nu},
         {"theta", p.theta},
         {"branch", to_string(p.branch)}};
}

}  // namespace sgad
