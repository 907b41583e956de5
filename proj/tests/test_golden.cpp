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

#include <fstream>
#include <sstream>

#include "flagbott/examples.hpp"

using namespace flagbott;

namespace {

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(FLAGBOTT_GOLDEN_DIR) + "/" + name + ".txt", std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "missing golden file for " << name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void compare(const std::string& golden, std::string_view name, const ExampleOptions& options = {}) {
    ExampleResult r = run_example(name, options);
    CHECK(r.passed);
    CHECK(r.text == read_golden(golden));
}

}  // namespace

TEST_CASE("worked examples match their golden files byte for byte") {
    for (const auto& name : example_names()) {
        CAPTURE(name);
        compare(name, name);
    }
    ExampleOptions zero;
    zero.zero_matrices = true;
    compare("typeC-zero", "typeC", zero);
    ExampleOptions twist;
    twist.twist = 3;
    compare("hirzebruch-a3", "hirzebruch", twist);
}

TEST_CASE("the projective example ends in the reference relation") {
    auto text = run_example("u3-projective").text;
    CHECK(text.find("relations:\n  x^3 - x^2*c[1] + x*c[2] - c[3]\n") != std::string::npos);
    CHECK(text.find("e[1,2,1] = -y[1,1] + c[1]") != std::string::npos);
}

TEST_CASE("unknown example names are rejected") { CHECK_THROWS(run_example("e8")); }
