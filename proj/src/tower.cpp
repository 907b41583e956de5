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

#include "flagbott/tower.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "flagbott/errors.hpp"

namespace flagbott {

namespace {

std::string stage_name(int l) { return "stage " + std::to_string(l); }

Polynomial y_var(const CoefficientRing& ring, int stage, int k) { return Polynomial::variable(ring, Variable::y(stage, k)); }

Polynomial linear_form(const CoefficientRing& ring, const IntMatrix& a, int row, int source) {
    Polynomial form(ring);
    for (int h = 0; h < a.cols(); ++h)
        if (a(row, h) != 0)
            form += y_var(ring, source, h + 1).scaled(Scalar(static_cast<long>(a(row, h))));
    return form;
}

bool is_unit(const CoefficientRing& ring, const Scalar& c) {
    if (sgn(c) == 0) return false;
    if (ring.is_field()) return true;
    return c == 1 || c == -1;
}

/// Makes the leading coefficient positive; a unit change in every ring.
Polynomial with_positive_lead(const Polynomial& p) {
    if (p.is_zero()) return p;
    auto lead = p.ring().display_value(p.terms().front().second);
    return sgn(lead) < 0 ? -p : p;
}

struct StageData {
    ReflectionSubgroup weyl;
    /// Eliminated degree-2 symbol and its value (SU stages only).
    std::map<Variable, Polynomial> solved;
};

/// Appends one flag-bundle stage to `pres`. Relations are h(y) - image(h)
/// with both sides rewritten in the block generators of W(Z).
StageData append_stage(Presentation& pres, const GroupSpec& g, const CentralizerSpec& z,
                       const std::vector<Polynomial>& invariant_images, int stage) {
    const CoefficientRing& ring = pres.ring;
    StageData data{centralizer_weyl(z), {}};
    const auto& factors = data.weyl.factors;
    if (!factors.supported)
        throw UnsupportedCentralizer(g.name() + " at " + stage_name(stage) + ": " + factors.describe());

    std::vector<Polynomial> fresh;
    for (const auto& gen : block_generators(factors, stage, ring)) pres.generators.push_back(Generator::of(gen.symbol));

    auto invariants = fundamental_invariants(g, ring, stage);
    if (invariants.size() != invariant_images.size())
        throw DomainError(g.name() + " has " + std::to_string(invariants.size()) + " fundamental invariants, got " +
                          std::to_string(invariant_images.size()) + " images");
    for (std::size_t i = 0; i < invariants.size(); ++i) {
        Polynomial rel = rewrite_invariant(invariants[i], factors, stage) - invariant_images[i];
        if (!rel.is_zero()) fresh.push_back(std::move(rel));
    }

    if (g.type == LieType::SU) {
        // e_1(y) = 0: solve for its most junior degree-2 symbol.
        std::vector<Polynomial> coords;
        for (int k = 1; k <= g.coordinate_count(); ++k) coords.push_back(y_var(ring, stage, k));
        Polynomial e1 = rewrite_invariant(elementary_symmetric(1, coords, ring), factors, stage);
        Variable pivot = e1.terms().back().first.entries().front().first;
        for (const auto& [m, c] : e1.terms())
            if (m.entries().front().first > pivot && (c == 1 || c == -1)) pivot = m.entries().front().first;
        Scalar a = e1.coefficient(Monomial(pivot));
        Polynomial value = (e1 - Polynomial::monomial(ring, Monomial(pivot), a)).scaled(Scalar(-1) / a);
        data.solved.emplace(pivot, value);
        for (auto& rel : fresh) rel = substitute(rel, data.solved);
        std::erase_if(fresh, [](const Polynomial& p) { return p.is_zero(); });
        std::erase_if(pres.generators, [&](const Generator& gen) { return gen.var == pivot; });
    }
    for (auto& rel : fresh) pres.relations.push_back(std::move(rel));
    return data;
}

std::vector<Polynomial> images_of(const GroupSpec& g, std::span<const Polynomial> chern_map, const CoefficientRing& ring,
                                  int stage) {
    if (static_cast<int>(chern_map.size()) != g.coordinate_count())
        throw DomainError(g.name() + " needs " + std::to_string(g.coordinate_count()) + " images, got " +
                          std::to_string(chern_map.size()));
    SubstitutionValues values;
    for (int k = 0; k < g.coordinate_count(); ++k) values.emplace(Variable::y(stage, k + 1), chern_map[static_cast<std::size_t>(k)]);
    std::vector<Polynomial> out;
    for (const auto& h : fundamental_invariants(g, ring, stage)) out.push_back(substitute(h, values));
    return out;
}

void check_su_chern_map(const GroupSpec& g, std::span<const Polynomial> chern_map, const CoefficientRing& ring,
                        int stage) {
    if (g.type != LieType::SU) return;
    Polynomial sum(ring);
    for (const auto& c : chern_map) sum += c;
    if (!sum.is_zero())
        throw InvalidSpec(stage_name(stage) + ": images of an SU stage must sum to zero, got " + sum.to_string());
}

enum class Mode { Equivariant, Ordinary };

Presentation build(const TowerSpec& spec, Mode mode) {
    spec.validate();
    const CoefficientRing& ring = spec.ring;
    Presentation pres;
    pres.ring = ring;
    std::map<Variable, Polynomial> solved;
    std::vector<FactorStructure> factors;

    for (int l = 1; l <= spec.size(); ++l) {
        const Stage& st = spec.stages[static_cast<std::size_t>(l - 1)];
        const int n = st.group.coordinate_count();
        std::vector<Polynomial> chern(static_cast<std::size_t>(n), Polynomial(ring));

        if (mode == Mode::Equivariant) {
            Polynomial sum(ring);
            for (int k = 1; k <= n; ++k) {
                bool dependent = st.group.type == LieType::SU && k == n;
                if (dependent) {
                    chern[static_cast<std::size_t>(k - 1)] = -sum;
                    break;
                }
                pres.generators.push_back(Generator::of(Variable::u(l, k)));
                chern[static_cast<std::size_t>(k - 1)] = Polynomial::variable(ring, Variable::u(l, k));
                sum += chern[static_cast<std::size_t>(k - 1)];
            }
        }
        for (int j = 1; j < l; ++j) {
            IntMatrix a = spec.connection(l, j);
            if (a.is_zero()) continue;
            for (int k = 0; k < n; ++k) {
                Polynomial form = linear_form(ring, a, k, j);
                if (form.is_zero()) continue;
                form = substitute(rewrite_invariant(form, factors[static_cast<std::size_t>(j - 1)], j), solved);
                chern[static_cast<std::size_t>(k)] += form;
            }
        }
        check_su_chern_map(st.group, chern, ring, l);
        auto data = append_stage(pres, st.group, st.centralizer, images_of(st.group, chern, ring, l), l);
        solved.insert(data.solved.begin(), data.solved.end());
        factors.push_back(data.weyl.factors);
    }
    std::string what = mode == Mode::Equivariant ? "equivariant" : "ordinary";
    pres.label = what + " cohomology of a " + std::to_string(spec.size()) + "-stage flag Bott tower over " +
                 ring.display_name();
    return pres;
}

}  // namespace

IntMatrix TowerSpec::connection(int l, int j) const {
    auto it = connections.find({l, j});
    if (it != connections.end()) return it->second;
    return IntMatrix(stages.at(static_cast<std::size_t>(l - 1)).group.coordinate_count(),
                     stages.at(static_cast<std::size_t>(j - 1)).group.coordinate_count());
}

std::vector<GroupSpec> TowerSpec::groups() const {
    std::vector<GroupSpec> out;
    for (const auto& s : stages) out.push_back(s.group);
    return out;
}

int TowerSpec::total_rank() const {
    int r = 0;
    for (const auto& s : stages) r += s.group.rank();
    return r;
}

void TowerSpec::validate() const {
    for (int l = 1; l <= size(); ++l) {
        const Stage& st = stages[static_cast<std::size_t>(l - 1)];
        if (!(st.centralizer.group == st.group))
            throw InvalidSpec(stage_name(l) + ": centralizer belongs to " + st.centralizer.group.name() + ", not " +
                              st.group.name());
        auto want = static_cast<std::size_t>(st.group.coordinate_count());
        if (st.centralizer.cocharacter.size() != want)
            throw InvalidSpec(stage_name(l) + ": cocharacter has " + std::to_string(st.centralizer.cocharacter.size()) +
                              " entries, " + st.group.name() + " needs " + std::to_string(want));
    }
    for (const auto& [key, a] : connections) {
        auto [l, j] = key;
        if (l < 1 || l > size() || j < 1 || j >= l)
            throw InvalidSpec("connection (" + std::to_string(l) + ", " + std::to_string(j) +
                              ") must satisfy 1 <= j < l <= " + std::to_string(size()));
        int rows = stages[static_cast<std::size_t>(l - 1)].group.coordinate_count();
        int cols = stages[static_cast<std::size_t>(j - 1)].group.coordinate_count();
        if (a.rows() != rows || a.cols() != cols)
            throw InvalidSpec("connection (" + std::to_string(l) + ", " + std::to_string(j) + ") is " +
                              std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + ", expected " +
                              std::to_string(rows) + "x" + std::to_string(cols));
    }
    auto gs = groups();
    require_admissible(gs, ring);

    // SU targets: the images must respect e_1 = 0 on both ends.
    for (const auto& [key, a] : connections) {
        auto [l, j] = key;
        if (stages[static_cast<std::size_t>(l - 1)].group.type != LieType::SU) continue;
        bool source_su = stages[static_cast<std::size_t>(j - 1)].group.type == LieType::SU;
        Polynomial sum(ring);
        for (int k = 0; k < a.rows(); ++k) sum += linear_form(ring, a, k, j);
        if (source_su && !sum.is_zero()) {
            std::vector<Polynomial> coords;
            for (int h = 1; h <= a.cols(); ++h) coords.push_back(y_var(ring, j, h));
            sum -= elementary_symmetric(1, coords, ring).scaled(sum.coefficient(Monomial(Variable::y(j, 1))));
        }
        if (!sum.is_zero())
            throw InvalidSpec("connection (" + std::to_string(l) + ", " + std::to_string(j) +
                              ") does not land in the SU torus: its rows sum to " + sum.to_string());
    }

    // Non-torus sources: every image form must be W(Z_j)-invariant.
    for (const auto& [key, a] : connections) {
        auto [l, j] = key;
        auto weyl = centralizer_weyl(stages[static_cast<std::size_t>(j - 1)].centralizer);
        if (weyl.elements.size() <= 1) continue;
        for (int k = 0; k < a.rows(); ++k) {
            Polynomial form = linear_form(ring, a, k, j);
            for (const auto& w : weyl.elements)
                if (!(weyl_act(w, form, j) == form))
                    throw InvalidSpec("connection (" + std::to_string(l) + ", " + std::to_string(j) + ") row " +
                                      std::to_string(k + 1) + " is not invariant under W(Z) of " + stage_name(j) +
                                      ": " + form.to_string());
        }
    }
}

Stage torus_stage(const GroupSpec& g) { return {g, torus_centralizer(g)}; }

void Presentation::validate() const {
    std::set<Variable> known;
    for (const auto& g : generators) {
        if (!known.insert(g.var).second) throw InvalidSpec("duplicate generator " + g.var.name());
        if (g.degree != g.var.degree())
            throw InvalidSpec("generator " + g.var.name() + " has degree " + std::to_string(g.degree));
    }
    for (const auto& r : relations) {
        if (!(r.ring() == ring)) throw RingMismatch("relation over " + r.ring().display_name());
        if (!r.is_homogeneous()) throw InvalidSpec("inhomogeneous relation " + r.to_string());
        for (const auto& v : r.variables())
            if (!known.contains(v)) throw InvalidSpec("relation uses " + v.name() + ", which is not a generator");
    }
}

GradedSeries Presentation::hilbert_series(const MonomialOrder& order, const GroebnerOptions& options) const {
    return flagbott::hilbert_series(generators, relations, order, options);
}

bool Presentation::has_generator(const Variable& v) const {
    return std::any_of(generators.begin(), generators.end(), [&](const Generator& g) { return g.var == v; });
}

std::map<Variable, Polynomial> substitution_map(const TowerSpec& spec, bool with_u) {
    std::map<Variable, Polynomial> out;
    for (int l = 1; l <= spec.size(); ++l) {
        int n = spec.stages[static_cast<std::size_t>(l - 1)].group.coordinate_count();
        for (int k = 1; k <= n; ++k) {
            Polynomial form = with_u ? Polynomial::variable(spec.ring, Variable::u(l, k)) : Polynomial(spec.ring);
            for (int j = 1; j < l; ++j) form += linear_form(spec.ring, spec.connection(l, j), k - 1, j);
            out.emplace(Variable::y(l, k), std::move(form));
        }
    }
    return out;
}

Presentation equivariant_presentation(const TowerSpec& spec) { return build(spec, Mode::Equivariant); }

Presentation ordinary_presentation(const TowerSpec& spec) { return build(spec, Mode::Ordinary); }

Presentation effective_presentation(const TowerSpec& spec) {
    for (int l = 1; l <= spec.size(); ++l) {
        const Stage& st = spec.stages[static_cast<std::size_t>(l - 1)];
        if (st.group.type != LieType::U || centralizer_weyl(st.centralizer).elements.size() != 1)
            throw InvalidSpec("effective presentation needs U(n) stages with torus centralizers; " + stage_name(l) +
                              " is " + st.group.name());
    }
    Presentation pres = equivariant_presentation(spec);
    for (int l = 1; l <= spec.size(); ++l) {
        int n = spec.stages[static_cast<std::size_t>(l - 1)].group.coordinate_count();
        pres.relations.push_back(Polynomial::variable(spec.ring, Variable::u(l, n)));
    }
    pres.label = "equivariant cohomology for the effective torus of a " + std::to_string(spec.size()) +
                 "-stage flag Bott tower over " + spec.ring.display_name();
    return pres;
}

Presentation flag_bundle_step(const Presentation& base, const GroupSpec& g, const CentralizerSpec& z,
                              std::span<const Polynomial> chern_map, int stage) {
    check_su_chern_map(g, chern_map, base.ring, stage);
    Presentation out = base;
    append_stage(out, g, z, images_of(g, chern_map, base.ring, stage), stage);
    return out;
}

Presentation flag_bundle_step(const Presentation& base, const GroupSpec& g, const CentralizerSpec& z,
                              const InvariantImages& images, int stage) {
    Presentation out = base;
    append_stage(out, g, z, images.values, stage);
    return out;
}

Presentation chern_base(int rank, CoefficientRing ring) {
    Presentation p;
    p.ring = ring;
    for (int k = 1; k <= rank; ++k) p.generators.push_back(Generator::of(Variable::c(k)));
    p.label = "free base on Chern classes c[1.." + std::to_string(rank) + "]";
    return p;
}

namespace {

std::vector<Polynomial> chern_symbols(int count, std::span<const Polynomial> given, const CoefficientRing& ring) {
    if (!given.empty()) {
        if (static_cast<int>(given.size()) != count)
            throw DomainError("expected " + std::to_string(count) + " Chern classes, got " + std::to_string(given.size()));
        return {given.begin(), given.end()};
    }
    std::vector<Polynomial> out;
    for (int k = 1; k <= count; ++k) out.push_back(Polynomial::variable(ring, Variable::c(k)));
    return out;
}

}  // namespace

Polynomial projective_bundle_relation(int n, std::span<const Polynomial> chern, CoefficientRing ring) {
    if (n < 0) throw DomainError("projective bundle rank must be positive");
    auto c = chern_symbols(n + 1, chern, ring);
    Polynomial x = Polynomial::variable(ring, Variable::x());
    Polynomial out = x.pow(static_cast<unsigned>(n + 1));
    for (int k = 1; k <= n + 1; ++k) {
        Polynomial term = x.pow(static_cast<unsigned>(n + 1 - k)) * c[static_cast<std::size_t>(k - 1)];
        out += (k % 2 == 0) ? term : -term;
    }
    return out;
}

std::vector<Polynomial> full_flag_relation(int n, std::span<const Polynomial> chern, CoefficientRing ring) {
    if (n < 0) throw DomainError("flag bundle rank must be positive");
    auto c = chern_symbols(n + 1, chern, ring);
    std::vector<Polynomial> xs;
    for (int k = 1; k <= n + 1; ++k) xs.push_back(Polynomial::variable(ring, Variable::x(k)));
    std::vector<Polynomial> out;
    for (int k = 1; k <= n + 1; ++k) out.push_back(elementary_symmetric(k, xs, ring) - c[static_cast<std::size_t>(k - 1)]);
    return out;
}

std::vector<Polynomial> generating_function_relations(std::span<const Polynomial> a, std::span<const Polynomial> b,
                                                      CoefficientRing ring) {
    Polynomial one = Polynomial::constant(ring, 1);
    Polynomial pa = one, pb = one;
    for (const auto& f : a) pa = pa * (one + f);
    for (const auto& f : b) pb = pb * (one + f);
    Polynomial diff = pa - pb;
    std::vector<Polynomial> out;
    for (int w = 1; w <= diff.max_weight(); ++w)
        if (auto piece = diff.homogeneous_component(w); !piece.is_zero()) out.push_back(std::move(piece));
    return out;
}

std::string EliminationStep::to_string() const {
    if (projected) return variable.name() + " eliminated by projection";
    return variable.name() + " = " + value.to_string();
}

Elimination derive_elimination(const Presentation& p, std::span<const Variable> eliminate,
                               const GroebnerOptions& options) {
    p.validate();
    Elimination out{p, {}};
    Presentation& cur = out.presentation;
    for (const auto& v : eliminate) {
        if (!cur.has_generator(v)) throw EliminationError(v.name() + " is not a generator");
        std::optional<std::size_t> pick;
        for (std::size_t i = 0; i < cur.relations.size() && !pick; ++i) {
            const auto& rel = cur.relations[i];
            int hits = 0;
            bool linear = false;
            for (const auto& [m, c] : rel.terms()) {
                if (m.exponent(v) == 0) continue;
                ++hits;
                linear = m == Monomial(v) && is_unit(cur.ring, c);
            }
            if (hits == 1 && linear) pick = i;
        }
        if (pick) {
            const Polynomial rel = cur.relations[*pick];
            Scalar a = rel.coefficient(Monomial(v));
            Polynomial value = (rel - Polynomial::monomial(cur.ring, Monomial(v), a)).scaled(cur.ring.inverse(-a));
            cur.relations.erase(cur.relations.begin() + static_cast<std::ptrdiff_t>(*pick));
            SubstitutionValues values{{v, value}};
            for (auto& r : cur.relations) r = substitute(r, values);
            out.steps.push_back({v, std::move(value)});
        } else {
            if (!cur.ring.is_field())
                throw EliminationError(v.name() + " occurs linearly with a unit coefficient in no relation");
            auto gb = buchberger(cur.relations, MonomialOrder::elimination({v}), options);
            cur.relations.clear();
            for (const auto& g : gb.elements())
                if (!g.contains(v)) cur.relations.push_back(g);
            out.steps.push_back({v, Polynomial(cur.ring), true});
        }
        std::erase_if(cur.generators, [&](const Generator& g) { return g.var == v; });
        std::erase_if(cur.relations, [](const Polynomial& r) { return r.is_zero(); });
    }
    for (auto& r : cur.relations) r = with_positive_lead(r);
    if (!eliminate.empty()) {
        auto before = p.hilbert_series(MonomialOrder::grevlex(), options);
        auto after = cur.hilbert_series(MonomialOrder::grevlex(), options);
        if (!(before == after))
            throw ConsistencyError("elimination changed the Hilbert series from " + before.to_string() + " to " +
                                   after.to_string());
    }
    return out;
}

Presentation rename_generators(const Presentation& p, const std::map<Variable, Variable>& renames) {
    SubstitutionValues values;
    for (const auto& [from, to] : renames) {
        if (from.weight() != to.weight())
            throw DomainError("cannot rename " + from.name() + " to " + to.name() + ": weights differ");
        values.emplace(from, Polynomial::variable(p.ring, to));
    }
    Presentation out = p;
    for (auto& g : out.generators)
        if (auto it = renames.find(g.var); it != renames.end()) g = Generator::of(it->second);
    for (auto& r : out.relations) r = substitute(r, values);
    out.validate();
    return out;
}

}  // namespace flagbott
