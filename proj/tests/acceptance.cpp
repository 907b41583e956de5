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

// Acceptance runner: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "flagbott/errors.hpp"
#include "flagbott/examples.hpp"
#include "flagbott/oracle.hpp"
#include "flagbott/tower.hpp"
#include "support.hpp"

using namespace flagbott;
using namespace flagbott::testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note = what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.ok = false;
        out.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > limit_seconds) out.require(false, "took longer than " + std::to_string(limit_seconds) + " s");
    std::ostringstream line;
    line << (out.ok ? "PASS" : "FAIL") << " " << id << " " << title << " (" << std::fixed << std::setprecision(3) << secs
         << " s)";
    if (!out.ok) line << ": " << out.note;
    std::cout << line.str() << std::endl;
    if (!out.ok) ++failures;
}

TowerSpec single(const GroupSpec& g, CoefficientRing ring) {
    TowerSpec spec;
    spec.ring = ring;
    spec.stages.push_back(torus_stage(g));
    return spec;
}

}  // namespace

int main() {
    const auto ZZ = CoefficientRing::integers();
    const auto QQ = CoefficientRing::rationals();
    const auto F3 = CoefficientRing::prime_field(3);

    criterion(1, "Borel-Hirzebruch relation and elimination steps", 1.0, [&](Outcome& o) {
        ExampleResult r = run_example("u3-projective");
        o.require(r.passed, "example checks failed");
        o.require(r.text.find("relations:\n  x^3 - x^2*c[1] + x*c[2] - c[3]\n") != std::string::npos,
                  "relation x^3 - x^2*c[1] + x*c[2] - c[3] not emitted");

        std::vector<Polynomial> c;
        for (int k = 1; k <= 3; ++k) c.push_back(var(ZZ, Variable::c(k)));
        auto p = flag_bundle_step(chern_base(3), GroupSpec::unitary(3), {GroupSpec::unitary(3), {1, 0, 0}},
                                  InvariantImages{c}, 1);
        std::vector<Variable> block{Variable::e(1, 2, 1), Variable::e(1, 2, 2)};
        auto e = derive_elimination(p, block);
        Polynomial x1 = var(ZZ, Variable::y(1, 1));
        // y2 + y3 = c1 - y1 and y2*y3 = c2 - y1*(y2 + y3).
        Polynomial sum = c[0] - x1;
        Polynomial prod = c[1] - x1 * sum;
        o.require(e.steps.size() == 2 && e.steps[0].value == sum && e.steps[1].value == prod,
                  "elimination steps differ");
        auto renamed = rename_generators(e.presentation, {{Variable::y(1, 1), Variable::x()}});
        o.require(renamed.relations.size() == 1 &&
                      renamed.relations[0] == parse_polynomial("x^3 - x^2*c[1] + x*c[2] - c[3]", ZZ),
                  "eliminated relation differs");
    });

    criterion(2, "SU(2) equivariant ring and its Hilbert series", 1.0, [&](Outcome& o) {
        auto eq = equivariant_presentation(single(GroupSpec::special_unitary(2), ZZ));
        std::vector<Generator> gens{Generator::of(Variable::u(1, 1)), Generator::of(Variable::y(1, 1))};
        o.require(eq.generators == gens, "generators differ from u[1,1], y[1,1]");
        Polynomial u = var(ZZ, Variable::u(1, 1)), y = var(ZZ, Variable::y(1, 1));
        o.require(eq.relations.size() == 1 && eq.relations[0] == u * u - y * y, "relation differs");
        o.require(eq.hilbert_series() == GradedSeries(TPolynomial{1, 0, 1}, {2}), "series is not (1 + t^2)/(1 - t^2)");
    });

    auto type_c_case = [&](const TowerSpec& spec, Outcome& o) {
        auto eq = equivariant_presentation(spec);
        std::vector<Polynomial> all;
        for (int l = 1; l <= 3; ++l) {
            auto ref = product_form_pieces(squared(own_coordinates(spec, l)), squared(shifted_arguments(spec, l)), spec.ring);
            o.require(ideal_equal(relations_of_stage(eq, l), ref), "stage " + std::to_string(l) + " ideal differs from the product form");
            all.insert(all.end(), ref.begin(), ref.end());
        }
        o.require(ideal_equal(eq.relations, all), "full ideal differs from the product form");
    };
    {
        std::mt19937 rng(7);
        std::uniform_int_distribution<long> entry(-2, 2);
        auto random_entries = [&](int n) {
            std::vector<long> v(static_cast<std::size_t>(n));
            for (auto& x : v) x = entry(rng);
            return v;
        };
        std::vector<std::pair<std::string, TowerSpec>> sets{
            {"zero matrices", type_c({}, {}, {})},
            {"fixed matrices", type_c({1, 0, 2, 0, -1, 0, 1, 1, 1}, {2, -1, 0, 0, 1, -2}, {1, 1, 0, -2, 0, 1})},
            {"random matrices in [-2, 2]", type_c(random_entries(9), random_entries(6), random_entries(6))}};
        criterion(3, "type C product form for zero, fixed and random matrices", 180.0, [&](Outcome& o) {
            for (const auto& [name, spec] : sets) {
                auto start = std::chrono::steady_clock::now();
                Outcome one;
                type_c_case(spec, one);
                o.require(one.ok, name + ": " + one.note);
                o.require(std::chrono::steady_clock::now() - start < std::chrono::seconds(60), name + ": over 60 s");
            }
        });
    }

    criterion(4, "G2 over GF(3): invariants and stage 3 product form", 60.0, [&](Outcome& o) {
        auto elements = weyl_elements(root_datum(GroupSpec::g2()));
        o.require(elements.size() == 12, "W(G2) does not have 12 elements");
        Polynomial y1 = var(F3, Variable::y(1, 1)), y2 = var(F3, Variable::y(1, 2));
        Polynomial h4 = (y1 - y2).pow(2), h12 = (y1 * y2 * (y1 + y2)).pow(2);
        o.require(check_invariance(h4, elements), "h4 not invariant");
        o.require(check_invariance(h12, elements), "h12 not invariant");
        auto inv = fundamental_invariants(GroupSpec::g2(), F3);
        o.require(inv.size() == 2 && inv[0] == h4 && inv[1] == h12, "builder invariants differ from h4, h12");

        TowerSpec spec = g2_tower();
        auto eq = equivariant_presentation(spec);
        auto h = [](const std::vector<Polynomial>& x) {
            return std::vector<Polynomial>{(x[0] - x[1]).pow(2), (x[0] * x[1] * (x[0] + x[1])).pow(2)};
        };
        auto ref = product_form_pieces(h(own_coordinates(spec, 3)), h(shifted_arguments(spec, 3)), F3);
        o.require(ideal_equal(relations_of_stage(eq, 3), ref), "stage 3 ideal differs from the product form");
    });

    criterion(5, "Hilbert series agree with the Weyl coset oracle on random towers", 600.0, [&](Outcome& o) {
        TowerGenerator gen(4242);
        int done = 0;
        for (int trial = 0; done < 60 && trial < 300; ++trial) {
            TowerSpec spec = gen.random_tower(3, QQ);
            Presentation ord, eq;
            try {
                ord = ordinary_presentation(spec);
                eq = equivariant_presentation(spec);
            } catch (const UnsupportedCentralizer&) {
                continue;
            }
            ++done;
            GradedSeries tower = tower_poincare(spec);
            o.require(ord.hilbert_series() == tower, "ordinary series differs for " + describe(spec));
            o.require(eq.hilbert_series().times_one_minus(2, spec.total_rank()) == tower,
                      "equivariant series differs for " + describe(spec));
        }
        o.require(done >= 50, "fewer than 50 towers generated");
    });

    criterion(6, "CP^1 x CP^1 for five twists", 5.0, [&](Outcome& o) {
        for (const auto& m : {std::vector<std::int64_t>{0, 0, 0, 0}, {1, 0, -1, 0}, {2, -1, -2, 1}, {-3, 3, 3, -3},
                              {1, 2, -1, -2}}) {
            TowerSpec spec;
            spec.stages = {torus_stage(GroupSpec::special_unitary(2)), torus_stage(GroupSpec::special_unitary(2))};
            spec.connections.emplace(std::make_pair(2, 1), IntMatrix(2, 2, m));
            o.require(ordinary_presentation(spec).hilbert_series() == GradedSeries(TPolynomial{1, 0, 2, 0, 1}),
                      "series is not (1 + t^2)^2");
        }
    });

    criterion(7, "coefficient gate for G2", 1.0, [&](Outcome& o) {
        auto rejected = [&](CoefficientRing ring) {
            try {
                equivariant_presentation(single(GroupSpec::g2(), ring));
            } catch (const InadmissibleCoefficients& e) {
                return std::string(e.what()).find("torsion prime 2") != std::string::npos;
            }
            return false;
        };
        o.require(rejected(ZZ), "not rejected over ZZ");
        o.require(!rejected(QQ), "rejected over QQ");
        o.require(!rejected(F3), "rejected over GF(3)");
        o.require(rejected(CoefficientRing::prime_field(2)), "not rejected over GF(2)");
    });

    criterion(8, "effective torus for U(2)", 1.0, [&](Outcome& o) {
        auto eff = effective_presentation(single(GroupSpec::unitary(2), ZZ));
        bool has = std::find(eff.relations.begin(), eff.relations.end(), var(ZZ, Variable::u(1, 2))) != eff.relations.end();
        o.require(has, "relation u[1,2] missing");
        o.require(eff.hilbert_series() == GradedSeries(TPolynomial{1, 0, 1}, {2}), "series is not (1 + t^2)/(1 - t^2)");
    });

    std::cout << (failures == 0 ? "all criteria passed" : "failed criteria: " + std::to_string(failures)) << std::endl;
    return failures == 0 ? 0 : 1;
}
