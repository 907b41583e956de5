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

#include "flagbott/examples.hpp"

#include <algorithm>
#include <sstream>

#include "flagbott/errors.hpp"
#include "flagbott/io.hpp"
#include "flagbott/oracle.hpp"

namespace flagbott {

namespace {

class Checks {
   public:
    void add(const std::string& name, bool ok) { items_.emplace_back(name, ok); }
    bool passed() const {
        return std::all_of(items_.begin(), items_.end(), [](const auto& it) { return it.second; });
    }
    void print(std::ostream& out) const {
        out << "checks:\n";
        for (const auto& [name, ok] : items_) out << (ok ? "  ok    " : "  FAIL  ") << name << "\n";
    }

   private:
    std::vector<std::pair<std::string, bool>> items_;
};

Polynomial var(const CoefficientRing& ring, const Variable& v) { return Polynomial::variable(ring, v); }

void print_generators(std::ostream& out, std::span<const Generator> gens) {
    out << "generators:";
    if (gens.empty()) out << " (none)";
    for (const auto& g : gens) out << " " << g.var.name() << ":" << g.degree;
    out << "\n";
}

void print_relations(std::ostream& out, std::span<const Polynomial> rels, const char* indent = "  ") {
    for (const auto& r : rels) out << indent << r.to_string() << "\n";
}

/// Latest stage whose fiber symbols (y, e, q) occur in p; 0 if none.
int top_stage(const Polynomial& p) {
    int top = 0;
    for (const auto& v : p.variables())
        if (v.family == Family::Y || v.family == Family::E || v.family == Family::Q) top = std::max(top, v.stage);
    return top;
}

std::vector<Polynomial> stage_relations(const Presentation& p, int stage) {
    std::vector<Polynomial> out;
    for (const auto& r : p.relations)
        if (top_stage(r) == stage) out.push_back(r);
    return out;
}

/// SU stages with torus centralizers carry a dependent last coordinate.
/// The builders remove y[j,N] and u[j,N]; the reference product form has to
/// see the same substitution.
SubstitutionValues su_pivots(const TowerSpec& spec) {
    SubstitutionValues out;
    for (int j = 1; j <= spec.size(); ++j) {
        const auto& g = spec.stages[static_cast<std::size_t>(j - 1)].group;
        if (g.type != LieType::SU) continue;
        const int n = g.coordinate_count();
        Polynomial ys(spec.ring), us(spec.ring);
        for (int k = 1; k < n; ++k) {
            ys -= var(spec.ring, Variable::y(j, k));
            us -= var(spec.ring, Variable::u(j, k));
        }
        out.emplace(Variable::y(j, n), ys);
        out.emplace(Variable::u(j, n), us);
    }
    return out;
}

/// Arguments u[l,k] + sum_j sum_h A(k,h) y[j,h] of stage l, torus stages only.
std::vector<Polynomial> stage_arguments(const TowerSpec& spec, int l) {
    auto map = substitution_map(spec, true);
    auto pivots = su_pivots(spec);
    std::vector<Polynomial> out;
    const int n = spec.stages[static_cast<std::size_t>(l - 1)].group.coordinate_count();
    for (int k = 1; k <= n; ++k) out.push_back(substitute(map.at(Variable::y(l, k)), pivots));
    return out;
}

std::vector<Polynomial> stage_coordinates(const TowerSpec& spec, int l) {
    std::vector<Polynomial> out;
    const int n = spec.stages[static_cast<std::size_t>(l - 1)].group.coordinate_count();
    for (int k = 1; k <= n; ++k) out.push_back(var(spec.ring, Variable::y(l, k)));
    return out;
}

std::vector<Polynomial> squares(const std::vector<Polynomial>& xs) {
    std::vector<Polynomial> out;
    for (const auto& x : xs) out.push_back(x * x);
    return out;
}

std::string degree_list(std::span<const Polynomial> ps) {
    std::string out;
    for (const auto& p : ps) {
        if (!out.empty()) out += ", ";
        out += std::to_string(2 * p.max_weight());
    }
    return out;
}

std::string cocharacter_text(const IntVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
    return out + "]";
}

ExampleResult u3_projective() {
    std::ostringstream out;
    Checks checks;
    const auto ring = CoefficientRing::integers();
    const GroupSpec g = GroupSpec::unitary(3);
    const CentralizerSpec z{g, {1, 0, 0}};

    out << "example u3-projective: projectivization of a rank-3 bundle E\n";
    out << "base: free on the Chern classes of E\n";
    Presentation base = chern_base(3, ring);
    print_generators(out, base.generators);

    std::vector<Polynomial> chern;
    for (int k = 1; k <= 3; ++k) chern.push_back(var(ring, Variable::c(k)));
    Presentation p = flag_bundle_step(base, g, z, InvariantImages{chern}, 1);

    auto weyl = centralizer_weyl(z);
    out << "\nflag bundle step: " << g.name() << ", cocharacter " << cocharacter_text(z.cocharacter)
        << ", W(Z) of type " << weyl.factors.describe() << "\n";
    print_generators(out, p.generators);
    std::vector<Variable> eliminate;
    for (const auto& gen : block_generators(weyl.factors, 1, ring)) {
        if (gen.symbol.family == Family::Y) continue;
        eliminate.push_back(gen.symbol);
        out << "  " << gen.symbol.name() << " stands for " << gen.value.to_string() << "\n";
    }
    out << "relations:\n";
    print_relations(out, p.relations);

    Elimination e = derive_elimination(p, eliminate);
    out << "\nelimination:\n";
    for (const auto& s : e.steps) out << "  " << s.to_string() << "\n";
    Presentation result = rename_generators(e.presentation, {{Variable::y(1, 1), Variable::x()}});
    out << "writing x for y[1,1]:\n";
    print_generators(out, result.generators);
    out << "relations:\n";
    print_relations(out, result.relations);

    Polynomial reference = projective_bundle_relation(2, chern, ring);
    out << "\nreference formula (n = 2): " << reference.to_string() << "\n";
    checks.add("eliminated presentation equals the reference formula",
               result.relations.size() == 1 && result.relations.front() == reference);

    bool steps_ok = e.steps.size() == 2 &&
                    e.steps[0].value == chern[0] - var(ring, Variable::y(1, 1)) &&
                    e.steps[1].value == var(ring, Variable::y(1, 1)).pow(2) -
                                            var(ring, Variable::y(1, 1)) * chern[0] + chern[1];
    checks.add("y[1,2] + y[1,3] = c[1] - y[1,1] and y[1,2]*y[1,3] = y[1,1]^2 - y[1,1]*c[1] + c[2]", steps_ok);

    SubstitutionValues point;
    for (int k = 1; k <= 3; ++k) point.emplace(Variable::c(k), Polynomial(ring));
    Polynomial over_point = substitute(result.relations.front(), point);
    out << "over a point: " << over_point.to_string() << "\n";
    checks.add("over a point the relation is x^3", over_point == var(ring, Variable::x()).pow(3));

    GradedSeries expected = fiber_poincare(g, z) * GradedSeries(TPolynomial{1}, {2, 4, 6});
    GradedSeries hs = result.hilbert_series();
    out << "Hilbert series (over QQ): " << hs.to_string() << "\n";
    checks.add("Hilbert series equals P(CP^2) times the free Chern ring", hs == expected);

    checks.print(out);
    return {out.str(), checks.passed()};
}

ExampleResult full_flag() {
    std::ostringstream out;
    Checks checks;
    const auto ring = CoefficientRing::integers();
    TowerSpec spec;
    spec.ring = ring;
    spec.stages.push_back(torus_stage(GroupSpec::unitary(3)));

    out << "example full-flag: U(3)/T over a point\n\n";
    out << format_tower_spec(spec) << "\n";
    Presentation ord = ordinary_presentation(spec);
    out << render_text(ord) << "\n";

    std::vector<Polynomial> zeros(3, Polynomial(ring));
    auto reference = full_flag_relation(2, zeros, ring);
    out << "reference relations e_k(x) - c_k with every c_k = 0:\n";
    print_relations(out, reference);
    std::map<Variable, Variable> renames;
    for (int k = 1; k <= 3; ++k) renames.emplace(Variable::y(1, k), Variable::x(k));
    Presentation renamed = rename_generators(ord, renames);
    checks.add("ordinary presentation generates the reference ideal",
               ideal_equal(renamed.relations, reference));

    GradedSeries hs = ord.hilbert_series();
    GradedSeries cells = fiber_poincare(GroupSpec::unitary(3), spec.stages[0].centralizer);
    out << "\nHilbert series (over QQ): " << hs.to_string() << "\n";
    out << "Weyl coset count: " << cells.to_string() << "\n";
    checks.add("Hilbert series equals 1 + 2t^2 + 2t^4 + t^6", hs == GradedSeries(TPolynomial{1, 0, 2, 0, 2, 0, 1}));
    checks.add("Hilbert series equals the coset count", hs == cells);

    Presentation eq = equivariant_presentation(spec);
    out << "\n" << render_text(eq);
    CrossCheckReport report = cross_check(spec, ord, eq);
    checks.add("cross-check against the Weyl group oracle", report.passed());

    checks.print(out);
    return {out.str(), checks.passed()};
}

ExampleResult su2() {
    std::ostringstream out;
    Checks checks;
    const auto ring = CoefficientRing::integers();
    TowerSpec spec;
    spec.ring = ring;
    spec.stages.push_back(torus_stage(GroupSpec::special_unitary(2)));

    out << "example su2: SU(2)/T with the left torus action\n\n";
    out << format_tower_spec(spec) << "\n";
    Presentation eq = equivariant_presentation(spec);
    out << render_text(eq);

    std::vector<Generator> want_gens{Generator::of(Variable::u(1, 1)), Generator::of(Variable::y(1, 1))};
    Polynomial want = parse_polynomial("u[1,1]^2 - y[1,1]^2", ring);
    checks.add("generators are u[1,1], y[1,1]", eq.generators == want_gens);
    checks.add("single relation u[1,1]^2 - y[1,1]^2", eq.relations.size() == 1 && eq.relations.front() == want);

    GradedSeries hs = eq.hilbert_series();
    out << "Hilbert series (over QQ): " << hs.to_string() << "\n\n";
    checks.add("Hilbert series equals (1 + t^2)/(1 - t^2)", hs == GradedSeries(TPolynomial{1, 0, 1}, {2}));

    Presentation ord = ordinary_presentation(spec);
    out << render_text(ord);
    out << "Hilbert series (over QQ): " << ord.hilbert_series().to_string() << "\n";
    checks.add("cross-check against the Weyl group oracle", cross_check(spec, ord, eq).passed());

    checks.print(out);
    return {out.str(), checks.passed()};
}

ExampleResult type_c(bool zero) {
    std::ostringstream out;
    Checks checks;
    TowerSpec spec = type_c_tower(zero);
    const auto& ring = spec.ring;

    out << "example typeC: Sp(3), Sp(3), Sp(2) with maximal tori"
        << (zero ? ", zero connecting matrices" : "") << "\n\n";
    out << format_tower_spec(spec) << "\n";
    Presentation eq = equivariant_presentation(spec);
    out << render_text(eq) << "\n";

    std::vector<Polynomial> all_reference;
    for (int l = 1; l <= spec.size(); ++l) {
        auto reference = generating_function_relations(squares(stage_coordinates(spec, l)),
                                                       squares(stage_arguments(spec, l)), ring);
        auto ours = stage_relations(eq, l);
        out << "stage " << l << ": product form prod(1 + y^2) - prod(1 + (u + Ay)^2) has graded pieces in degrees "
            << degree_list(reference) << "\n";
        checks.add("stage " + std::to_string(l) + " relations generate the product-form ideal",
                   ideal_equal(ours, reference));
        all_reference.insert(all_reference.end(), reference.begin(), reference.end());
    }
    checks.add("all relations generate the product-form ideal", ideal_equal(eq.relations, all_reference));

    if (zero) {
        std::map<Variable, Polynomial> shift;
        for (int k = 1; k <= 3; ++k) {
            shift.emplace(Variable::y(1, k), var(ring, Variable::y(2, k)));
            shift.emplace(Variable::u(1, k), var(ring, Variable::u(2, k)));
        }
        auto first = stage_relations(eq, 1);
        for (auto& r : first) r = substitute(r, shift);
        out << "with zero matrices the stage 2 relations are the stage 1 relations in u[2,*], y[2,*]\n";
        checks.add("stage 2 relations repeat stage 1 in the stage 2 variables", first == stage_relations(eq, 2));
    }

    CrossCheckReport report = cross_check(spec, ordinary_presentation(spec), eq);
    out << "\n" << report.to_text();
    checks.add("cross-check against the Weyl group oracle", report.passed());

    checks.print(out);
    return {out.str(), checks.passed()};
}

ExampleResult g2_f3() {
    std::ostringstream out;
    Checks checks;
    TowerSpec spec = g2_tower();
    const auto& ring = spec.ring;
    const GroupSpec g2 = GroupSpec::g2();

    out << "example g2-f3: SU(4), Sp(3), G2 with maximal tori over " << ring.display_name() << "\n";
    out << "2 is a torsion prime of G2, so the coefficients are GF(3)\n\n";
    out << format_tower_spec(spec) << "\n";

    auto elements = weyl_elements(root_datum(g2));
    auto invariants = fundamental_invariants(g2, ring, 3);
    out << "fundamental invariants of W(G2), " << elements.size() << " elements:\n";
    const char* names[] = {"h4", "h12"};
    for (std::size_t i = 0; i < invariants.size() && i < 2; ++i) {
        bool fixed = check_invariance(invariants[i], elements, 3);
        out << "  " << names[i] << " = " << invariants[i].to_string() << "\n";
        checks.add(std::string(names[i]) + " is fixed by all " + std::to_string(elements.size()) + " Weyl elements",
                   fixed);
    }
    Polynomial y1 = var(ring, Variable::y(3, 1)), y2 = var(ring, Variable::y(3, 2));
    Polynomial h4_ref = (y1 - y2).pow(2);
    Polynomial h12_ref = (y1 * y2 * (y1 + y2)).pow(2);
    out << "  reference forms: (y[3,1] - y[3,2])^2 and y[3,1]^2*y[3,2]^2*(y[3,1] + y[3,2])^2\n";
    checks.add("h4 agrees with (y[3,1] - y[3,2])^2 over GF(3)", invariants.size() == 2 && invariants[0] == h4_ref);
    checks.add("h12 agrees with y[3,1]^2*y[3,2]^2*(y[3,1] + y[3,2])^2",
               invariants.size() == 2 && invariants[1] == h12_ref);

    Presentation eq = equivariant_presentation(spec);
    out << "\n" << render_text(eq) << "\n";

    auto h_pair = [&](const std::vector<Polynomial>& x) {
        return std::vector<Polynomial>{(x[0] - x[1]).pow(2), (x[0] * x[1] * (x[0] + x[1])).pow(2)};
    };
    auto l3 = generating_function_relations(h_pair(stage_coordinates(spec, 3)), h_pair(stage_arguments(spec, 3)), ring);
    out << "stage 3: product form (1 + h4(y))(1 + h12(y)) - (1 + h4(x))(1 + h12(x)) has graded pieces in degrees "
        << degree_list(l3) << "\n";
    checks.add("stage 3 relations generate the product-form ideal over GF(3)", ideal_equal(stage_relations(eq, 3), l3));

    auto l2 = generating_function_relations(squares(stage_coordinates(spec, 2)), squares(stage_arguments(spec, 2)), ring);
    out << "stage 2: product form prod(1 + y^2) - prod(1 + (u + Ay)^2) has graded pieces in degrees "
        << degree_list(l2) << "\n";
    checks.add("stage 2 relations generate the product-form ideal over GF(3)", ideal_equal(stage_relations(eq, 2), l2));

    // The reference form for stage 1 is written with three coordinates and
    // every elementary symmetric function, i.e. a U(3) model.
    std::vector<Polynomial> ys, us;
    for (int k = 1; k <= 3; ++k) {
        ys.push_back(var(ring, Variable::y(1, k)));
        us.push_back(var(ring, Variable::u(1, k)));
    }
    auto l1 = generating_function_relations(ys, us, ring);
    bool same = ideal_equal(stage_relations(eq, 1), l1);
    out << "stage 1: the reference product form prod_{k<=3}(1 + y[1,k]) - prod_{k<=3}(1 + u[1,k]) uses three\n"
        << "  coordinates and all of e_1, e_2, e_3, which is a U(3) model. This build models SU(4) with four\n"
        << "  coordinates subject to e_1 = 0 (relations in degrees " << degree_list(stage_relations(eq, 1)) << ").\n"
        << "  The two stage 1 ideals " << (same ? "coincide" : "differ") << "; the SU(4) model is used throughout.\n";

    CrossCheckReport report = cross_check(spec, ordinary_presentation(spec), eq);
    out << "\n" << report.to_text();
    checks.add("cross-check against the Weyl group oracle", report.passed());

    checks.print(out);
    return {out.str(), checks.passed()};
}

ExampleResult hirzebruch(int a) {
    std::ostringstream out;
    Checks checks;
    const auto ring = CoefficientRing::integers();
    TowerSpec spec;
    spec.ring = ring;
    spec.stages = {torus_stage(GroupSpec::unitary(2)), torus_stage(GroupSpec::unitary(2))};
    spec.connections.emplace(std::make_pair(2, 1), IntMatrix(2, 2, {a, 0, 0, 0}));

    out << "example hirzebruch: two U(2)/T stages twisted by a = " << a << "\n\n";
    out << format_tower_spec(spec) << "\n";
    Presentation ord = ordinary_presentation(spec);
    out << render_text(ord) << "\n";

    std::vector<Variable> eliminate{Variable::y(1, 2), Variable::y(2, 2)};
    Elimination e = derive_elimination(ord, eliminate);
    out << "elimination:\n";
    for (const auto& s : e.steps) out << "  " << s.to_string() << "\n";
    print_generators(out, e.presentation.generators);
    out << "relations:\n";
    print_relations(out, e.presentation.relations);

    Polynomial y11 = var(ring, Variable::y(1, 1)), y21 = var(ring, Variable::y(2, 1));
    Polynomial twist = Polynomial::constant(ring, Scalar(a));
    std::vector<Polynomial> expected{y11 * y11, y21 * (y21 - twist * y11)};
    out << "expected ideal: <y[1,1]^2, y[2,1]*(y[2,1] - a*y[1,1])>; y[1,1] -> -y[1,1] turns the sign of a\n";
    checks.add("two-variable presentation generates the expected ideal",
               ideal_equal(e.presentation.relations, expected));

    GradedSeries hs = e.presentation.hilbert_series();
    out << "Hilbert series (over QQ): " << hs.to_string() << "\n";
    checks.add("Betti numbers 1, 2, 1", hs == GradedSeries(TPolynomial{1, 0, 2, 0, 1}));
    checks.add("cross-check against the Weyl group oracle", cross_check(spec).passed());

    checks.print(out);
    return {out.str(), checks.passed()};
}

}  // namespace

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names{"u3-projective", "full-flag", "su2", "typeC", "g2-f3", "hirzebruch"};
    return names;
}

TowerSpec type_c_tower(bool zero_matrices) {
    TowerSpec spec;
    spec.ring = CoefficientRing::integers();
    spec.stages = {torus_stage(GroupSpec::symplectic(3)), torus_stage(GroupSpec::symplectic(3)),
                   torus_stage(GroupSpec::symplectic(2))};
    if (!zero_matrices) {
        spec.connections.emplace(std::make_pair(2, 1), IntMatrix(3, 3, {1, 0, 2, 0, -1, 0, 1, 1, 1}));
        spec.connections.emplace(std::make_pair(3, 1), IntMatrix(2, 3, {2, -1, 0, 0, 1, -2}));
        spec.connections.emplace(std::make_pair(3, 2), IntMatrix(2, 3, {1, 1, 0, -2, 0, 1}));
    }
    return spec;
}

TowerSpec g2_tower() {
    TowerSpec spec;
    spec.ring = CoefficientRing::prime_field(3);
    spec.stages = {torus_stage(GroupSpec::special_unitary(4)), torus_stage(GroupSpec::symplectic(3)),
                   torus_stage(GroupSpec::g2())};
    spec.connections.emplace(std::make_pair(2, 1), IntMatrix(3, 4, {1, 0, 0, 0, 0, 2, 0, 0, 1, 1, 0, 0}));
    spec.connections.emplace(std::make_pair(3, 1), IntMatrix(2, 4, {1, 0, 1, 0, 0, 1, 0, 0}));
    spec.connections.emplace(std::make_pair(3, 2), IntMatrix(2, 3, {1, 1, 0, 0, 0, 1}));
    return spec;
}

ExampleResult run_example(std::string_view name, const ExampleOptions& options) {
    if (name == "u3-projective") return u3_projective();
    if (name == "full-flag") return full_flag();
    if (name == "su2") return su2();
    if (name == "typeC") return type_c(options.zero_matrices);
    if (name == "g2-f3") return g2_f3();
    if (name == "hirzebruch") return hirzebruch(options.twist);
    std::string known;
    for (const auto& n : example_names()) known += (known.empty() ? "" : ", ") + n;
    throw DomainError("unknown example '" + std::string(name) + "' (known: " + known + ")");
}

}  // namespace flagbott
