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

#include <algorithm>
#include <numeric>

#include "flagbott/errors.hpp"
#include "flagbott/oracle.hpp"
#include "flagbott/rootdata.hpp"
#include "support.hpp"

using namespace flagbott;
using flagbott::testing::var;

namespace {

const CoefficientRing QQ = CoefficientRing::rationals();

/// Inversion count over all permutations of n letters, as t^{2 inv}.
TPolynomial permutation_inversions(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    TPolynomial out(static_cast<std::size_t>(n * (n - 1) + 1), 0);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) inv += p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)];
        ++out[static_cast<std::size_t>(2 * inv)];
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

TPolynomial from_degrees(std::initializer_list<int> degrees) {
    TPolynomial out{1};
    for (int d : degrees) out = tpoly_mul(out, tpoly_geometric(d, 2));
    return out;
}

}  // namespace

TEST_CASE("group tags round-trip") {
    for (const char* tag : {"U:1", "U:3", "SU:2", "SU:4", "Sp:1", "Sp:3", "G2"})
        CHECK(GroupSpec::parse(tag).tag() == tag);
    for (const char* bad : {"U:0", "SU:1", "Sp:0", "E8", "U3", "U:x"}) CHECK_THROWS(GroupSpec::parse(bad));
    CHECK(GroupSpec::special_unitary(4).rank() == 3);
    CHECK(GroupSpec::special_unitary(4).coordinate_count() == 4);
    CHECK(GroupSpec::g2().coordinate_count() == 2);
}

TEST_CASE("torsion primes and admissible coefficients") {
    const GroupSpec g2 = GroupSpec::g2();
    CHECK(torsion_primes(g2) == std::set<std::uint32_t>{2});
    CHECK(torsion_primes(GroupSpec::symplectic(3)).empty());
    CHECK(torsion_primes(GroupSpec::special_unitary(4)).empty());
    std::vector<GroupSpec> gs{GroupSpec::unitary(2), g2};
    CHECK_FALSE(admissible_coefficients(gs, CoefficientRing::integers()));
    CHECK(admissible_coefficients(gs, QQ));
    CHECK(admissible_coefficients(gs, CoefficientRing::prime_field(3)));
    CHECK_FALSE(admissible_coefficients(gs, CoefficientRing::prime_field(2)));
    CHECK_THROWS_AS(require_admissible(gs, CoefficientRing::integers()), InadmissibleCoefficients);
}

TEST_CASE("root systems have the expected sizes") {
    CHECK(root_datum(GroupSpec::unitary(4)).positive_roots.size() == 6);
    CHECK(root_datum(GroupSpec::special_unitary(3)).positive_roots.size() == 3);
    CHECK(root_datum(GroupSpec::symplectic(3)).positive_roots.size() == 9);
    CHECK(root_datum(GroupSpec::g2()).positive_roots.size() == 6);
    CHECK(root_datum(GroupSpec::symplectic(2)).simple_roots.size() == 2);
    for (const auto& g : {GroupSpec::unitary(3), GroupSpec::symplectic(2), GroupSpec::g2()}) {
        const auto& rd = root_datum(g);
        for (const auto& s : rd.simple_reflections)
            for (const auto& r : rd.positive_roots) CHECK(is_root(rd, s.apply(r)));
    }
}

TEST_CASE("Weyl groups: orders and length generating functions") {
    CHECK(weyl_elements(root_datum(GroupSpec::unitary(4))).size() == 24);
    CHECK(weyl_elements(root_datum(GroupSpec::special_unitary(3))).size() == 6);
    CHECK(weyl_elements(root_datum(GroupSpec::symplectic(3))).size() == 48);
    CHECK(weyl_elements(root_datum(GroupSpec::g2())).size() == 12);

    for (int n = 1; n <= 4; ++n)
        CHECK(weyl_poincare(root_datum(GroupSpec::unitary(n))) == GradedSeries(permutation_inversions(n)));
    CHECK(weyl_poincare(root_datum(GroupSpec::symplectic(2))) == GradedSeries(from_degrees({2, 4})));
    CHECK(weyl_poincare(root_datum(GroupSpec::symplectic(3))) == GradedSeries(from_degrees({2, 4, 6})));
    CHECK(weyl_poincare(root_datum(GroupSpec::g2())) == GradedSeries(from_degrees({2, 6})));
}

TEST_CASE("fundamental invariants are invariant and have the Weyl degrees") {
    for (const auto& g : {GroupSpec::unitary(3), GroupSpec::special_unitary(3), GroupSpec::symplectic(3),
                          GroupSpec::g2()}) {
        const auto& rd = root_datum(g);
        auto elements = weyl_elements(rd);
        auto inv = fundamental_invariants(g, QQ, 2);
        REQUIRE(inv.size() == rd.weyl_degrees.size());
        for (std::size_t i = 0; i < inv.size(); ++i) {
            CHECK(inv[i].is_homogeneous());
            CHECK(inv[i].max_weight() == rd.weyl_degrees[i]);
            CHECK(check_invariance(inv[i], elements, 2));
        }
    }
    std::vector<Polynomial> ys;
    for (int k = 1; k <= 3; ++k) ys.push_back(var(QQ, Variable::y(1, k)));
    auto u3 = fundamental_invariants(GroupSpec::unitary(3), QQ);
    for (int k = 1; k <= 3; ++k) CHECK(u3[static_cast<std::size_t>(k - 1)] == elementary_symmetric(k, ys, QQ));
}

TEST_CASE("G2 invariants over GF(3) match the reference forms") {
    const auto f3 = CoefficientRing::prime_field(3);
    auto inv = fundamental_invariants(GroupSpec::g2(), f3);
    Polynomial y1 = var(f3, Variable::y(1, 1)), y2 = var(f3, Variable::y(1, 2));
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == (y1 - y2).pow(2));
    CHECK(inv[1] == (y1 * y2 * (y1 + y2)).pow(2));
    auto elements = weyl_elements(root_datum(GroupSpec::g2()));
    CHECK(check_invariance((y1 - y2).pow(2), elements));
    // Over Q the square (y1 - y2)^2 is not invariant in these coordinates.
    Polynomial q1 = var(QQ, Variable::y(1, 1)), q2 = var(QQ, Variable::y(1, 2));
    CHECK_FALSE(check_invariance((q1 - q2).pow(2), elements));
}

TEST_CASE("centralizer of a circle in U(3)") {
    CentralizerSpec z{GroupSpec::unitary(3), {1, 0, 0}};
    auto w = centralizer_weyl(z);
    CHECK(w.elements.size() == 2);
    REQUIRE(w.generators.size() == 1);
    IntMatrix s2(3, 3, {1, 0, 0, 0, 0, 1, 0, 1, 0});
    CHECK(w.generators.front() == s2);
    auto gens = invariant_generators(w, QQ);
    Polynomial y1 = var(QQ, Variable::y(1, 1)), y2 = var(QQ, Variable::y(1, 2)), y3 = var(QQ, Variable::y(1, 3));
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == y1);
    CHECK(gens[1] == y2 + y3);
    CHECK(gens[2] == y2 * y3);
    CHECK(w.factors.describe() == "A0 x A1");
}

TEST_CASE("centralizer structures and their orders") {
    CHECK(centralizer_weyl(torus_centralizer(GroupSpec::g2())).elements.size() == 1);
    CHECK(centralizer_weyl({GroupSpec::symplectic(3), {1, 1, 0}}).elements.size() == 4);
    CHECK(centralizer_weyl({GroupSpec::symplectic(3), {0, 0, 0}}).elements.size() == 48);
    CHECK(centralizer_weyl({GroupSpec::unitary(4), {2, 2, 2, 2}}).elements.size() == 24);
    CHECK_FALSE(centralizer_weyl({GroupSpec::g2(), {1, 0}}).factors.supported);
    CHECK_THROWS_AS(invariant_generators(centralizer_weyl({GroupSpec::g2(), {1, 0}}), QQ), UnsupportedCentralizer);
}

TEST_CASE("invariants rewrite into block generators and back") {
    for (const auto& z : {CentralizerSpec{GroupSpec::unitary(3), {1, 0, 0}},
                          CentralizerSpec{GroupSpec::symplectic(3), {1, -1, 0}},
                          CentralizerSpec{GroupSpec::symplectic(2), {0, 0}}}) {
        auto w = centralizer_weyl(z);
        SubstitutionValues back;
        for (const auto& g : block_generators(w.factors, 1, QQ)) back.emplace(g.symbol, g.value);
        for (const auto& h : fundamental_invariants(z.group, QQ)) {
            Polynomial rewritten = rewrite_invariant(h, w.factors, 1);
            CHECK(substitute(rewritten, back) == h);
        }
    }
    auto w = centralizer_weyl({GroupSpec::unitary(3), {1, 0, 0}});
    CHECK_THROWS_AS(rewrite_invariant(var(QQ, Variable::y(1, 2)), w.factors, 1), NotInvariant);
}
