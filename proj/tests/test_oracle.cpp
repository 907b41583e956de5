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

#include <chrono>

#include "flagbott/errors.hpp"
#include "flagbott/oracle.hpp"
#include "support.hpp"

using namespace flagbott;
using namespace flagbott::testing;

namespace {

/// Gaussian binomial [n choose k] in t^2, counted by subsets.
TPolynomial subset_count(int n, int k) {
    TPolynomial out(static_cast<std::size_t>(2 * k * (n - k) + 1), 0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        int inv = 0, seen = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) inv += i - seen++;
        ++out[static_cast<std::size_t>(2 * inv)];
    }
    return out;
}

GradedSeries poly(TPolynomial p) { return GradedSeries(std::move(p)); }

}  // namespace

TEST_CASE("fiber series of familiar flag manifolds") {
    CHECK(fiber_poincare(GroupSpec::unitary(3), {GroupSpec::unitary(3), {1, 1, 2}}) == poly({1, 0, 1, 0, 1}));
    CHECK(fiber_poincare(GroupSpec::unitary(3), {GroupSpec::unitary(3), {1, 2, 3}}) == poly({1, 0, 2, 0, 2, 0, 1}));
    for (int n = 2; n <= 5; ++n)
        for (int k = 1; k < n; ++k) {
            IntVector v(static_cast<std::size_t>(n), 0);
            for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = 1;
            CHECK(fiber_poincare(GroupSpec::unitary(n), {GroupSpec::unitary(n), v}) == poly(subset_count(n, k)));
        }
    CHECK(fiber_poincare(GroupSpec::symplectic(2), {GroupSpec::symplectic(2), {1, 0}}) == poly({1, 0, 1, 0, 1, 0, 1}));
    CHECK(fiber_poincare(GroupSpec::symplectic(2), {GroupSpec::symplectic(2), {1, 1}}) == poly({1, 0, 1, 0, 1, 0, 1}));
    CHECK(fiber_poincare(GroupSpec::special_unitary(2), torus_centralizer(GroupSpec::special_unitary(2))) ==
          poly({1, 0, 1}));
    CHECK(fiber_poincare(GroupSpec::g2(), torus_centralizer(GroupSpec::g2())).at_one() == 12);
    CHECK(fiber_poincare(GroupSpec::symplectic(3), {GroupSpec::symplectic(3), {1, -1, 0}}).at_one() == 12);
    CHECK(fiber_poincare(GroupSpec::unitary(3), {GroupSpec::unitary(3), {0, 0, 0}}) == GradedSeries::one());
}

TEST_CASE("both fiber routes agree, including non-dominant cocharacters") {
    for (const auto& g : {GroupSpec::unitary(3), GroupSpec::unitary(4), GroupSpec::symplectic(2), GroupSpec::symplectic(3),
                          GroupSpec::g2(), GroupSpec::special_unitary(3)}) {
        std::mt19937 rng(static_cast<unsigned>(g.coordinate_count() * 7 + static_cast<int>(g.type)));
        for (int trial = 0; trial < 10; ++trial) {
            IntVector v(static_cast<std::size_t>(g.coordinate_count()));
            for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
            CentralizerSpec z{g, v};
            CHECK(fiber_poincare_by_division(g, z) == fiber_poincare_by_cosets(g, z));
        }
    }
}

TEST_CASE("tower series is the product of fiber series") {
    TowerSpec spec;
    spec.stages = {{GroupSpec::unitary(3), {GroupSpec::unitary(3), {1, 1, 2}}}, torus_stage(GroupSpec::unitary(2))};
    CHECK(tower_poincare(spec) == poly({1, 0, 2, 0, 2, 0, 1}));
    CHECK(euler_characteristic(spec) == 6);
    TowerSpec cp2;
    cp2.stages = {{GroupSpec::unitary(3), {GroupSpec::unitary(3), {1, 1, 2}}}};
    CHECK(euler_characteristic(cp2) == 3);
    CHECK(euler_characteristic(TowerSpec{}) == 1);
}

TEST_CASE("invariance checks") {
    const auto qq = CoefficientRing::rationals();
    auto elements = weyl_elements(root_datum(GroupSpec::g2()));
    Polynomial y1 = var(qq, Variable::y(1, 1)), y2 = var(qq, Variable::y(1, 2));
    CHECK(check_invariance(y1 * y1 + y1 * y2 + y2 * y2, elements));
    CHECK_FALSE(check_invariance(y1, elements));
    auto w = centralizer_weyl({GroupSpec::unitary(3), {1, 0, 0}});
    CHECK(check_invariance(var(qq, Variable::y(1, 2)) + var(qq, Variable::y(1, 3)), w));
    CHECK_FALSE(check_invariance(var(qq, Variable::y(1, 2)), w));
}

TEST_CASE("cross-check reports a divergence") {
    TowerSpec spec;
    spec.ring = CoefficientRing::rationals();
    spec.stages = {torus_stage(GroupSpec::unitary(2))};
    auto eq = equivariant_presentation(spec);
    auto wrong = ordinary_presentation(spec);
    wrong.relations.pop_back();
    auto report = cross_check(spec, wrong, eq);
    CHECK_FALSE(report.passed());
    bool found = false;
    for (const auto& c : report.checks)
        if (!c.passed && c.divergence) {
            found = true;
            CHECK(*c.divergence == 4);
        }
    CHECK(found);
    auto doc = report.to_json();
    CHECK(doc["schema"] == 1);
    CHECK(doc["kind"] == "cross-check");
    CHECK(doc["passed"] == false);
    CHECK(report.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("property: builders agree with the Weyl group oracle on random towers") {
    TowerGenerator gen(20261018);
    int checked = 0;
    auto start = std::chrono::steady_clock::now();
    for (int trial = 0; checked < 60 && trial < 200; ++trial) {
        TowerSpec spec = gen.random_tower();
        CAPTURE(describe(spec));
        CrossCheckReport report;
        try {
            report = cross_check(spec);
        } catch (const UnsupportedCentralizer&) {
            continue;
        }
        ++checked;
        CHECK(report.passed());
        if (!report.passed()) MESSAGE(report.to_text());
    }
    CHECK(checked >= 50);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::minutes(10));
}
