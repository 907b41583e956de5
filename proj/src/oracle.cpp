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

#include "flagbott/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "flagbott/errors.hpp"

namespace flagbott {

namespace {

struct WeylData {
    std::vector<IntMatrix> elements;
    std::set<IntVector> positive;
    std::vector<IntVector> positive_list;
    std::vector<IntMatrix> simple;
    std::vector<IntVector> simple_roots;
};

WeylData weyl_data(const GroupSpec& g) {
    const RootDatum& rd = root_datum(g);
    WeylData d;
    d.elements = weyl_elements(rd);
    d.positive_list = rd.positive_roots;
    d.positive = {rd.positive_roots.begin(), rd.positive_roots.end()};
    d.simple = rd.simple_reflections;
    d.simple_roots = rd.simple_roots;
    return d;
}

IntVector negated(IntVector v) {
    for (auto& x : v) x = -x;
    return v;
}

/// Positive roots in `roots` sent to negative roots by w.
int inversions(const WeylData& d, const IntMatrix& w, std::span<const IntVector> roots) {
    int n = 0;
    for (const auto& a : roots)
        if (d.positive.contains(negated(w.apply(a)))) ++n;
    return n;
}

int length(const WeylData& d, const IntMatrix& w) { return inversions(d, w, d.positive_list); }

bool fixes(const IntMatrix& w, const IntVector& v) { return w.transposed().apply(v) == v; }

TPolynomial length_polynomial(const std::vector<int>& lengths) {
    TPolynomial out;
    for (int l : lengths) {
        auto k = static_cast<std::size_t>(2 * l);
        if (out.size() <= k) out.resize(k + 1, 0);
        ++out[k];
    }
    return out;
}

void check_cocharacter(const GroupSpec& g, const CentralizerSpec& z) {
    if (!(z.group == g)) throw InvalidSpec("centralizer of " + z.group.name() + " used with " + g.name());
    if (z.cocharacter.size() != static_cast<std::size_t>(g.coordinate_count()))
        throw InvalidSpec("cocharacter length does not match " + g.name());
}

}  // namespace

GradedSeries fiber_poincare_by_division(const GroupSpec& g, const CentralizerSpec& z) {
    check_cocharacter(g, z);
    WeylData d = weyl_data(g);
    std::vector<IntVector> orthogonal;
    for (const auto& a : d.positive_list)
        if (pairing(z.cocharacter, a) == 0) orthogonal.push_back(a);

    std::vector<int> all, stabilizer;
    for (const auto& w : d.elements) {
        all.push_back(length(d, w));
        if (fixes(w, z.cocharacter)) stabilizer.push_back(inversions(d, w, orthogonal));
    }
    auto quotient = tpoly_divide(length_polynomial(all), length_polynomial(stabilizer));
    if (!quotient)
        throw ConsistencyError("Poincare series of W(" + g.name() + ") is not divisible by that of the stabilizer");
    return GradedSeries(*quotient);
}

GradedSeries fiber_poincare_by_cosets(const GroupSpec& g, const CentralizerSpec& z) {
    check_cocharacter(g, z);
    WeylData d = weyl_data(g);

    // Move the cocharacter into the dominant chamber.
    const IntMatrix* to_dominant = nullptr;
    for (const auto& w : d.elements) {
        bool dominant = std::all_of(d.simple_roots.begin(), d.simple_roots.end(),
                                    [&](const IntVector& a) { return pairing(z.cocharacter, w.apply(a)) >= 0; });
        if (dominant) {
            to_dominant = &w;
            break;
        }
    }
    if (!to_dominant) throw ConsistencyError("no Weyl element makes the cocharacter dominant");
    IntVector dominant = to_dominant->transposed().apply(z.cocharacter);

    std::vector<std::size_t> parabolic;
    for (std::size_t i = 0; i < d.simple_roots.size(); ++i)
        if (pairing(dominant, d.simple_roots[i]) == 0) parabolic.push_back(i);

    // Minimal representatives of the right cosets W_J w. They are closed
    // under prefixes, so right multiplication reaches all of them.
    auto minimal = [&](const IntMatrix& w, int lw) {
        return std::all_of(parabolic.begin(), parabolic.end(),
                           [&](std::size_t j) { return length(d, d.simple[j] * w) > lw; });
    };

    std::set<IntMatrix> seen;
    std::deque<std::pair<IntMatrix, int>> queue;
    IntMatrix id = IntMatrix::identity(g.coordinate_count());
    seen.insert(id);
    queue.emplace_back(id, 0);
    std::vector<int> lengths;
    while (!queue.empty()) {
        auto [w, lw] = queue.front();
        queue.pop_front();
        lengths.push_back(lw);
        for (const auto& s : d.simple) {
            IntMatrix next = w * s;
            int ln = length(d, next);
            if (ln != lw + 1 || seen.contains(next) || !minimal(next, ln)) continue;
            seen.insert(next);
            queue.emplace_back(next, ln);
        }
    }
    return GradedSeries(length_polynomial(lengths));
}

GradedSeries fiber_poincare(const GroupSpec& g, const CentralizerSpec& z) {
    auto a = fiber_poincare_by_division(g, z);
    auto b = fiber_poincare_by_cosets(g, z);
    if (!(a == b))
        throw ConsistencyError("fiber series disagree for " + g.name() + ": division gives " + a.to_string() +
                               ", coset enumeration gives " + b.to_string());
    return a;
}

GradedSeries tower_poincare(const TowerSpec& spec) {
    GradedSeries out;
    for (const auto& st : spec.stages) out = out * fiber_poincare(st.group, st.centralizer);
    return out;
}

std::int64_t euler_characteristic(const TowerSpec& spec) { return tower_poincare(spec).at_one(); }

bool check_invariance(const Polynomial& p, std::span<const IntMatrix> elements, int stage) {
    return std::all_of(elements.begin(), elements.end(),
                       [&](const IntMatrix& w) { return weyl_act(w, p, stage) == p; });
}

bool check_invariance(const Polynomial& p, const ReflectionSubgroup& group, int stage) {
    return check_invariance(p, group.elements, stage);
}

bool CrossCheckReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string CrossCheckReport::to_text() const {
    std::ostringstream out;
    if (tower) out << "tower Poincare series:   " << tower->to_string() << "\n";
    if (ordinary) out << "ordinary Hilbert series: " << ordinary->to_string() << "\n";
    if (equivariant) out << "equivariant Hilbert series: " << equivariant->to_string() << "\n";
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        if (c.divergence) out << " (first divergence in degree " << *c.divergence << ")";
        out << "\n";
    }
    out << (passed() ? "all checks passed" : "some checks failed") << "\n";
    return out.str();
}

nlohmann::ordered_json CrossCheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "cross-check";
    j["passed"] = passed();
    j["total_rank"] = total_rank;
    j["tower_poincare"] = tower ? nlohmann::ordered_json(tower->to_string()) : nlohmann::ordered_json();
    j["ordinary_series"] = ordinary ? nlohmann::ordered_json(ordinary->to_string()) : nlohmann::ordered_json();
    j["equivariant_series"] = equivariant ? nlohmann::ordered_json(equivariant->to_string()) : nlohmann::ordered_json();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        e["detail"] = c.detail;
        e["first_divergence"] = c.divergence ? nlohmann::ordered_json(*c.divergence) : nlohmann::ordered_json();
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    return j;
}

namespace {

int top_degree(const GradedSeries& s) {
    auto p = s.as_polynomial();
    return p ? static_cast<int>(p->size()) - 1 : -1;
}

CheckResult compare(std::string name, const GradedSeries& got, const GradedSeries& want) {
    CheckResult r{std::move(name), got == want, "", std::nullopt};
    if (!r.passed) {
        int bound = std::max(top_degree(want), 0) + 4;
        r.divergence = first_divergence(got, want, bound);
        r.detail = "got " + got.to_string() + ", expected " + want.to_string();
    }
    return r;
}

int expected_top_degree(const TowerSpec& spec) {
    int top = 0;
    for (const auto& st : spec.stages) {
        const RootDatum& rd = root_datum(st.group);
        for (const auto& a : rd.positive_roots)
            if (pairing(st.centralizer.cocharacter, a) != 0) top += 2;
    }
    return top;
}

}  // namespace

CrossCheckReport cross_check(const TowerSpec& spec, const GroebnerOptions& options) {
    return cross_check(spec, ordinary_presentation(spec), equivariant_presentation(spec), options);
}

CrossCheckReport cross_check(const TowerSpec& spec, const Presentation& ordinary, const Presentation& equivariant,
                             const GroebnerOptions& options) {
    CrossCheckReport report;
    report.total_rank = spec.total_rank();
    try {
        report.tower = tower_poincare(spec);
    } catch (const Error& e) {
        report.checks.push_back({"tower Poincare series", false, e.what(), std::nullopt});
        return report;
    }

    try {
        report.ordinary = ordinary.hilbert_series(MonomialOrder::grevlex(), options);
        report.checks.push_back(compare("ordinary Hilbert series equals tower Poincare series", *report.ordinary,
                                        *report.tower));
    } catch (const Error& e) {
        report.checks.push_back({"ordinary Hilbert series equals tower Poincare series", false, e.what(), std::nullopt});
    }

    try {
        report.equivariant = equivariant.hilbert_series(MonomialOrder::grevlex(), options);
        auto freed = report.equivariant->times_one_minus(2, report.total_rank);
        report.checks.push_back(compare("equivariant series times (1 - t^2)^" + std::to_string(report.total_rank) +
                                            " equals tower Poincare series",
                                        freed, *report.tower));
    } catch (const Error& e) {
        report.checks.push_back({"equivariant Hilbert series is free over the torus", false, e.what(), std::nullopt});
    }

    {
        int want = expected_top_degree(spec);
        int got = top_degree(*report.tower);
        bool ok = report.tower->is_palindromic() && got == want;
        report.checks.push_back({"tower Poincare series is palindromic of degree " + std::to_string(want), ok,
                                 ok ? "" : "top degree " + std::to_string(got), std::nullopt});
    }

    {
        CheckResult inv{"invariants are fixed by their Weyl groups", true, "", std::nullopt};
        for (int l = 1; l <= spec.size() && inv.passed; ++l) {
            const Stage& st = spec.stages[static_cast<std::size_t>(l - 1)];
            auto elements = weyl_elements(root_datum(st.group));
            for (const auto& h : fundamental_invariants(st.group, spec.ring, l))
                if (!check_invariance(h, elements, l)) {
                    inv.passed = false;
                    inv.detail = "stage " + std::to_string(l) + ": " + h.to_string() + " is not W(K)-invariant";
                    break;
                }
            std::vector<IntMatrix> stabilizer;
            for (const auto& w : elements)
                if (fixes(w, st.centralizer.cocharacter)) stabilizer.push_back(w);
            auto weyl = centralizer_weyl(st.centralizer);
            if (!weyl.factors.supported) continue;
            for (const auto& gen : block_generators(weyl.factors, l, spec.ring))
                if (inv.passed && !check_invariance(gen.value, stabilizer, l)) {
                    inv.passed = false;
                    inv.detail = "stage " + std::to_string(l) + ": " + gen.symbol.name() + " = " +
                                 gen.value.to_string() + " is not W(Z)-invariant";
                }
        }
        report.checks.push_back(std::move(inv));
    }
    return report;
}

}  // namespace flagbott
