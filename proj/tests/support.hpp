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


// Helpers shared by the unit tests and the acceptance runner. Everything
// here is built from first principles so that it can serve as an oracle.

#ifndef FLAGBOTT_TESTS_SUPPORT_HPP
#define FLAGBOTT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "flagbott/errors.hpp"
#include "flagbott/rootdata.hpp"
#include "flagbott/tower.hpp"

namespace flagbott::testing {

inline Polynomial var(const CoefficientRing& ring, const Variable& v) { return Polynomial::variable(ring, v); }

inline Polynomial integer(const CoefficientRing& ring, long v) { return Polynomial::constant(ring, Scalar(v)); }

/// Random polynomial in the given variables, up to `terms` terms.
inline Polynomial random_polynomial(std::mt19937& rng, const CoefficientRing& ring, const std::vector<Variable>& vars,
                                    int terms = 4, int max_exponent = 2) {
    std::uniform_int_distribution<int> coeff(-4, 4), expo(0, max_exponent);
    std::vector<Polynomial::Term> out;
    for (int t = 0; t < terms; ++t) {
        std::vector<Monomial::Entry> entries;
        for (const auto& v : vars)
            if (int e = expo(rng); e > 0) entries.emplace_back(v, static_cast<std::uint32_t>(e));
        out.emplace_back(Monomial::from_entries(std::move(entries)), Scalar(coeff(rng)));
    }
    return Polynomial::from_terms(ring, std::move(out));
}

/// Nonzero graded pieces of prod(1 + a_i) - prod(1 + b_i),
/// expanded by brute force.
inline std::vector<Polynomial> product_form_pieces(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b,
                                                   const CoefficientRing& ring) {
    Polynomial left = integer(ring, 1), right = integer(ring, 1);
    for (const auto& x : a) left *= integer(ring, 1) + x;
    for (const auto& x : b) right *= integer(ring, 1) + x;
    Polynomial diff = left - right;
    std::vector<Polynomial> out;
    for (int w = 1; w <= diff.max_weight(); ++w)
        if (auto piece = diff.homogeneous_component(w); !piece.is_zero()) out.push_back(piece);
    return out;
}

/// u[l,k] + sum_j sum_h A(k,h) y[j,h], torus stages only. For SU stages the
/// last coordinate is written as minus the sum of the others.
inline Polynomial coordinate(const TowerSpec& spec, Family f, int j, int h) {
    const auto& g = spec.stages[static_cast<std::size_t>(j - 1)].group;
    const int n = g.coordinate_count();
    auto make = [&](int k) { return var(spec.ring, f == Family::U ? Variable::u(j, k) : Variable::y(j, k)); };
    if (g.type != LieType::SU || h < n) return make(h);
    Polynomial s(spec.ring);
    for (int k = 1; k < n; ++k) s -= make(k);
    return s;
}

inline std::vector<Polynomial> shifted_arguments(const TowerSpec& spec, int l, bool with_u = true) {
    const int n = spec.stages[static_cast<std::size_t>(l - 1)].group.coordinate_count();
    std::vector<Polynomial> out;
    for (int k = 1; k <= n; ++k) {
        Polynomial x = with_u ? coordinate(spec, Family::U, l, k) : Polynomial(spec.ring);
        for (int j = 1; j < l; ++j) {
            auto it = spec.connections.find({l, j});
            if (it == spec.connections.end()) continue;
            for (int h = 1; h <= it->second.cols(); ++h)
                if (auto c = it->second(k - 1, h - 1); c != 0) x += integer(spec.ring, c) * coordinate(spec, Family::Y, j, h);
        }
        out.push_back(x);
    }
    return out;
}

inline std::vector<Polynomial> own_coordinates(const TowerSpec& spec, int l) {
    const int n = spec.stages[static_cast<std::size_t>(l - 1)].group.coordinate_count();
    std::vector<Polynomial> out;
    for (int k = 1; k <= n; ++k) out.push_back(var(spec.ring, Variable::y(l, k)));
    return out;
}

inline std::vector<Polynomial> squared(std::vector<Polynomial> xs) {
    for (auto& x : xs) x = x * x;
    return xs;
}

/// Relations whose latest fiber symbol belongs to `stage`.
inline std::vector<Polynomial> relations_of_stage(const Presentation& p, int stage) {
    std::vector<Polynomial> out;
    for (const auto& r : p.relations) {
        int top = 0;
        for (const auto& v : r.variables())
            if (v.family == Family::Y || v.family == Family::E || v.family == Family::Q) top = std::max(top, v.stage);
        if (top == stage) out.push_back(r);
    }
    return out;
}

/// Three Sp stages with the given matrices; an empty vector means zero.
inline TowerSpec type_c(const std::vector<long>& a21, const std::vector<long>& a31, const std::vector<long>& a32,
                        CoefficientRing ring = CoefficientRing::integers()) {
    TowerSpec spec;
    spec.ring = ring;
    spec.stages = {torus_stage(GroupSpec::symplectic(3)), torus_stage(GroupSpec::symplectic(3)),
                   torus_stage(GroupSpec::symplectic(2))};
    auto put = [&](int l, int j, int r, int c, const std::vector<long>& v) {
        if (!v.empty()) spec.connections.emplace(std::make_pair(l, j), IntMatrix(r, c, {v.begin(), v.end()}));
    };
    put(2, 1, 3, 3, a21);
    put(3, 1, 2, 3, a31);
    put(3, 2, 2, 3, a32);
    return spec;
}

/// Random tower whose matrices satisfy the compatibility rules: a row read
/// on a non-torus source is invariant under W(Z_j) (constant up to sign on
/// type A blocks, zero on type C blocks) and SU targets get rows summing to 0.
class TowerGenerator {
   public:
    explicit TowerGenerator(std::uint32_t seed) : rng_(seed) {}

    Stage random_stage() {
        static const std::vector<GroupSpec> groups{
            GroupSpec::unitary(1),    GroupSpec::unitary(2),    GroupSpec::unitary(3),
            GroupSpec::special_unitary(2), GroupSpec::symplectic(1), GroupSpec::symplectic(2),
            GroupSpec::g2()};
        const GroupSpec g = groups[pick(groups.size())];
        if (g.type == LieType::G2 || g.type == LieType::SU || coin()) return torus_stage(g);
        std::uniform_int_distribution<int> entry(-1, 2);
        CentralizerSpec z{g, IntVector(static_cast<std::size_t>(g.coordinate_count()))};
        for (auto& x : z.cocharacter) x = entry(rng_);
        return {g, z};
    }

    TowerSpec random_tower(int max_stages = 3, CoefficientRing ring = CoefficientRing::rationals()) {
        TowerSpec spec;
        spec.ring = ring;
        const int m = 1 + static_cast<int>(pick(static_cast<std::size_t>(max_stages)));
        for (int i = 0; i < m; ++i) spec.stages.push_back(random_stage());
        for (int l = 2; l <= m; ++l)
            for (int j = 1; j < l; ++j) spec.connections.emplace(std::make_pair(l, j), random_matrix(spec, l, j));
        return spec;
    }

   private:
    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin() { return pick(2) == 0; }
    long entry() { return std::uniform_int_distribution<long>(-3, 3)(rng_); }

    std::vector<long> random_row(const Stage& source) {
        const int n = source.group.coordinate_count();
        std::vector<long> row(static_cast<std::size_t>(n), 0);
        auto weyl = centralizer_weyl(source.centralizer);
        for (const auto& b : weyl.factors.blocks) {
            if (b.kind == Block::Kind::C) continue;
            long c = entry();
            for (std::size_t i = 0; i < b.size(); ++i)
                row[static_cast<std::size_t>(b.coordinates[i])] = c * (b.signs.empty() ? 1 : b.signs[i]);
        }
        return row;
    }

    IntMatrix random_matrix(const TowerSpec& spec, int l, int j) {
        const Stage& target = spec.stages[static_cast<std::size_t>(l - 1)];
        const Stage& source = spec.stages[static_cast<std::size_t>(j - 1)];
        const int rows = target.group.coordinate_count(), cols = source.group.coordinate_count();
        std::vector<std::int64_t> data;
        std::vector<long> previous;
        for (int r = 0; r < rows; ++r) {
            std::vector<long> row = random_row(source);
            if (target.group.type == LieType::SU && r == rows - 1) {
                // SU(2) only in the pool: the last row cancels the first.
                for (auto& x : row) x = 0;
                for (int c = 0; c < cols; ++c) row[static_cast<std::size_t>(c)] = -previous[static_cast<std::size_t>(c)];
            }
            data.insert(data.end(), row.begin(), row.end());
            previous = row;
        }
        return IntMatrix(rows, cols, std::move(data));
    }

    std::mt19937 rng_;
};

inline std::string describe(const TowerSpec& spec) {
    std::string out;
    for (const auto& st : spec.stages) {
        out += st.group.tag() + "[";
        for (std::size_t i = 0; i < st.centralizer.cocharacter.size(); ++i)
            out += (i ? "," : "") + std::to_string(st.centralizer.cocharacter[i]);
        out += "] ";
    }
    for (const auto& [key, a] : spec.connections)
        out += "A" + std::to_string(key.first) + std::to_string(key.second) + "=" + a.to_string() + " ";
    return out;
}

}  // namespace flagbott::testing

#endif  // FLAGBOTT_TESTS_SUPPORT_HPP
