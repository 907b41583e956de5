/*
   Copyright 2026 The flagbott Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include "flagbott/errors.hpp"
#include "flagbott/io.hpp"
#include "support.hpp"

using namespace flagbott;
using namespace flagbott::testing;

namespace {

/// Position of the ParseError raised by `text`, as "line:col".
std::string error_position(const std::string& text) {
    try {
        parse_tower_spec(text);
    } catch (const ParseError& e) {
        return std::to_string(e.line()) + ":" + std::to_string(e.column());
    }
    return "no error";
}

}  // namespace

TEST_CASE("tower-spec files parse into towers") {
    auto spec = parse_tower_spec(
        "# comment line\n"
        "ring Fp:3   # trailing comment\n"
        "\n"
        "stage SU:4 torus\n"
        "stage U:3 [1, 1, 2]\n"
        "stage G2\n"
        "matrix 3 2 = [1, 1, 0;\n"
        "              0, 0, 1]\n");
    CHECK(spec.ring == CoefficientRing::prime_field(3));
    REQUIRE(spec.size() == 3);
    CHECK(spec.stages[0].group == GroupSpec::special_unitary(4));
    CHECK(spec.stages[1].centralizer.cocharacter == IntVector{1, 1, 2});
    CHECK(spec.stages[2].centralizer.cocharacter == torus_centralizer(GroupSpec::g2()).cocharacter);
    CHECK(spec.connection(3, 2) == IntMatrix(2, 3, {1, 1, 0, 0, 0, 1}));
    CHECK(spec.connection(2, 1).is_zero());
    auto flat = parse_tower_spec("ring Q\nstage U:2 torus\nstage U:2 torus\nmatrix 2 1 = [1, 2, 3, 4]\n");
    CHECK(flat.connection(2, 1) == IntMatrix(2, 2, {1, 2, 3, 4}));
    CHECK(parse_tower_spec("").size() == 0);
    CHECK(parse_tower_spec("").ring == CoefficientRing::integers());
}

TEST_CASE("parse errors carry positions") {
    CHECK(error_position("ring Q\nstage U:3 [1, 2]\n") == "2:11");
    CHECK(error_position("ring Q\nstage U:2\nstage U:2\nmatrix 2 1 = [1, 2, 3]\n") == "4:14");
    CHECK(error_position("ring W\n") == "1:6");
    CHECK(error_position("ring Q\nstage U:2 [1, 2] extra\n") == "2:18");
    CHECK(error_position("ring Q\nstage X:2\n") == "2:7");
    CHECK(error_position("ring Q\nfoo\n") == "2:1");
    CHECK(error_position("ring Q\nstage U:2\nmatrix 2 1 = [1, 0; 0, 1]\n") == "3:14");
    CHECK(error_position("ring Q\nstage U:2\nstage U:2\nmatrix 2 1 = [1, 0; 0]\n") == "4:14");
    CHECK(error_position("ring Q\nstage U:2 [1, 2\n") == "3:1");
    CHECK(error_position("ring Q\nstage U:2 [1, $]\n") == "2:15");
    CHECK(error_position("ring Q\nring Z\n") == "2:1");

    try {
        parse_tower_spec("ring Q\nstage U:2\nstage U:3\nmatrix 2 1 = [1, 0; 0, 1]\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "4:14: matrix 2 1 must be 3x2 (6 entries), got 4 entries");
    }
}

TEST_CASE("format and parse are inverse on random towers") {
    TowerGenerator gen(99);
    for (int trial = 0; trial < 50; ++trial) {
        TowerSpec spec = gen.random_tower(3, trial % 2 ? CoefficientRing::rationals() : CoefficientRing::prime_field(5));
        std::string text = format_tower_spec(spec);
        TowerSpec back = parse_tower_spec(text);
        CHECK(format_tower_spec(back) == text);
        CHECK(back.ring == spec.ring);
        CHECK(back.size() == spec.size());
    }
}

TEST_CASE("machine-readable presentations round-trip") {
    TowerGenerator gen(5);
    for (int trial = 0; trial < 30; ++trial) {
        TowerSpec spec = gen.random_tower();
        Presentation p;
        try {
            p = equivariant_presentation(spec);
        } catch (const UnsupportedCentralizer&) {
            continue;
        }
        for (auto order : {TermOrder::Grevlex, TermOrder::Lex}) {
            std::string first = render_machine(p, order);
            Presentation back = presentation_from_json(nlohmann::ordered_json::parse(first));
            CHECK(render_machine(back, order) == first);
            CHECK(render_text(back, order) == render_text(p, order));
            CHECK(back.relations == p.relations);
        }
    }
    auto doc = presentation_to_json(equivariant_presentation(parse_tower_spec("ring Z\nstage SU:2\n")));
    CHECK(doc["schema"] == 1);
    CHECK(doc["kind"] == "presentation");
    CHECK(doc["ring"] == "Z");
    CHECK(doc["relations"][0] == "u[1,1]^2 - y[1,1]^2");
    CHECK(doc["generators"][1]["name"] == "y[1,1]");

    auto bad = doc;
    bad["schema"] = 2;
    CHECK_THROWS_AS(presentation_from_json(bad), InvalidSpec);
    bad = doc;
    bad["relations"][0] = "u[1,1]^2 - z";
    CHECK_THROWS_AS(presentation_from_json(bad), InvalidSpec);
    bad = doc;
    bad.erase("generators");
    CHECK_THROWS_AS(presentation_from_json(bad), InvalidSpec);
}

TEST_CASE("text rendering") {
    auto p = equivariant_presentation(parse_tower_spec("ring Z\nstage SU:2\n"));
    CHECK(render_text(p) ==
          "# equivariant cohomology of a 1-stage flag Bott tower over ZZ\n"
          "ring: ZZ\n"
          "generators (2): u[1,1]:2 y[1,1]:2\n"
          "relations (1):\n"
          "  u[1,1]^2 - y[1,1]^2\n");
    CHECK(parse_term_order("lex") == TermOrder::Lex);
    CHECK(term_order_name(TermOrder::Grevlex) == "grevlex");
    CHECK_THROWS_AS(parse_term_order("deglex"), DomainError);
}
