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


#include <cmath>

#include "catch_amalgamated.hpp"
#include "sgad/serialization.hpp"

using namespace sgad;
using nlohmann::json;

TEST_CASE("Matrix2 JSON form", "[serialization]") {
    const Matrix2 m{Complex(0.1, -0.2), 1.0 / 3.0, Complex(0.0, std::sqrt(2.0)), -1e-300};
    const json j = m;
    CHECK(j.size() == 4);
    CHECK(j[1][0].get<double>() == 1.0 / 3.0);
    CHECK(j[2][1].get<double>() == std::sqrt(2.0));
    CHECK(json::parse(j.dump()).get<Matrix2>() == m);
    CHECK_THROWS(json::parse("[[1, 0], [0, 0]]").get<Matrix2>());
}

TEST_CASE("BathSpec round trip", "[serialization]") {
    BathSpec b;
    b.temperature = 4.1;
    b.squeezing = 1.0 / 7.0;
    b.phase = 2.0;
    b.gamma0 = 0.031;
    b.omega = 1.5;
    const json j = b;
    CHECK(j.at("T").get<double>() == 4.1);
    const BathSpec back = json::parse(j.dump()).get<BathSpec>();
    CHECK(back.temperature == b.temperature);
    CHECK(back.squeezing == b.squeezing);
    CHECK(back.phase == b.phase);
    CHECK(back.gamma0 == b.gamma0);
    CHECK(back.omega == b.omega);
}

TEST_CASE("KrausSet round trip", "[serialization]") {
    BathSpec b;
    b.temperature = 1.0;
    b.squeezing = 1.0;
    b.phase = 0.6;
    const KrausSet k = synthesize_channel(b, 5.0).kraus;
    const std::string text = json(k).dump();
    const KrausSet back = json::parse(text).get<KrausSet>();

    CHECK(back.label == "SGAD");
    REQUIRE(back.operators.size() == k.operators.size());
    for (std::size_t i = 0; i < k.operators.size(); ++i) CHECK(back.operators[i] == k.operators[i]);
    REQUIRE(back.source.has_value());
    CHECK(back.source->t == 5.0);
    CHECK(back.source->bath.phase == 0.6);

    KrausSet bare{{Matrix2::identity()}, "I", std::nullopt};
    const json jb = bare;
    CHECK(jb.at("source").is_null());
    CHECK_FALSE(jb.get<KrausSet>().source.has_value());
}

TEST_CASE("SgadParams JSON fields", "[serialization]") {
    BathSpec b;
    b.temperature = 3.0;
    b.squeezing = 0.5;
    const SgadParams p = sgad_params(b, 1.0);
    const json j = p;
    for (const char* key : {"p1", "p2", "alpha", "mu", "nu", "theta", "branch"}) {
        CHECK(j.contains(key));
    }
    CHECK(j.at("mu").get<double>() == p.mu);
    CHECK(j.at("branch").get<std::string>() == "plus");
}
