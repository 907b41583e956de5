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

#include "flagbott/rootdata.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "flagbott/errors.hpp"

namespace flagbott {

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::unitary(int n_plus_1) {
    if (n_plus_1 < 1) throw DomainError("U(n) requires n >= 1");
    return {LieType::U, n_plus_1};
}

GroupSpec GroupSpec::special_unitary(int n_plus_1) {
    if (n_plus_1 < 2) throw DomainError("SU(n) requires n >= 2");
    return {LieType::SU, n_plus_1};
}

GroupSpec GroupSpec::symplectic(int n) {
    if (n < 1) throw DomainError("Sp(n) requires n >= 1");
    return {LieType::Sp, n};
}

GroupSpec GroupSpec::parse(std::string_view tag) {
    if (tag == "G2") return g2();
    auto colon = tag.find(':');
    if (colon == std::string_view::npos) throw DomainError("unknown group tag '" + std::string(tag) + "'");
    auto kind = tag.substr(0, colon);
    auto digits = tag.substr(colon + 1);
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
        throw DomainError("malformed group size in '" + std::string(tag) + "'");
    if (kind == "U") return unitary(n);
    if (kind == "SU") return special_unitary(n);
    if (kind == "Sp") return symplectic(n);
    throw DomainError("unknown group tag '" + std::string(tag) + "'");
}

int GroupSpec::rank() const noexcept { return type == LieType::SU ? size - 1 : size; }

int GroupSpec::coordinate_count() const noexcept { return size; }

std::string GroupSpec::tag() const {
    switch (type) {
        case LieType::U:
            return "U:" + std::to_string(size);
        case LieType::SU:
            return "SU:" + std::to_string(size);
        case LieType::Sp:
            return "Sp:" + std::to_string(size);
        case LieType::G2:
            return "G2";
    }
    return {};
}

std::string GroupSpec::name() const {
    switch (type) {
        case LieType::U:
            return "U(" + std::to_string(size) + ")";
        case LieType::SU:
            return "SU(" + std::to_string(size) + ")";
        case LieType::Sp:
            return "Sp(" + std::to_string(size) + ")";
        case LieType::G2:
            return "G2";
    }
    return {};
}

std::set<std::uint32_t> torsion_primes(const GroupSpec& g) {
    if (g.type == LieType::G2) return {2};
    return {};
}

bool admissible_coefficients(std::span<const GroupSpec> groups, const CoefficientRing& ring) {
    return std::all_of(groups.begin(), groups.end(), [&](const GroupSpec& g) {
        auto primes = torsion_primes(g);
        return std::all_of(primes.begin(), primes.end(), [&](std::uint32_t p) { return ring.inverts(p); });
    });
}

void require_admissible(std::span<const GroupSpec> groups, const CoefficientRing& ring) {
    for (const auto& g : groups)
        for (auto p : torsion_primes(g))
            if (!ring.inverts(p))
                throw InadmissibleCoefficients("torsion prime " + std::to_string(p) + " of " + g.name() +
                                               " is not invertible in " + ring.display_name());
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(int rows, int cols, std::vector<std::int64_t> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != static_cast<std::size_t>(rows * cols))
        throw DomainError("matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                          std::to_string(rows * cols));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::apply(const IntVector& v) const {
    IntVector out(static_cast<std::size_t>(rows_), 0);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out[static_cast<std::size_t>(r)] += (*this)(r, c) * v[static_cast<std::size_t>(c)];
    return out;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const noexcept {
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t v) { return v == 0; });
}

std::string IntMatrix::to_string() const {
    std::string out = "[";
    for (int r = 0; r < rows_; ++r) {
        out += r ? "; " : "";
        for (int c = 0; c < cols_; ++c) out += (c ? " " : "") + std::to_string((*this)(r, c));
    }
    return out + "]";
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix dimension mismatch in product");
    IntMatrix out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            auto v = a(r, k);
            if (v == 0) continue;
            for (int c = 0; c < b.cols_; ++c) out(r, c) += v * b(k, c);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Root data

namespace {

IntVector unit(int n, int i) {
    IntVector v(static_cast<std::size_t>(n), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

IntVector combine(const IntVector& a, std::int64_t ca, const IntVector& b, std::int64_t cb) {
    IntVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = ca * a[i] + cb * b[i];
    return out;
}

std::int64_t form_value(const IntMatrix& form, const IntVector& a, const IntVector& b) {
    std::int64_t s = 0;
    for (int i = 0; i < form.rows(); ++i)
        for (int j = 0; j < form.cols(); ++j)
            s += a[static_cast<std::size_t>(i)] * form(i, j) * b[static_cast<std::size_t>(j)];
    return s;
}

RootDatum build_root_datum(const GroupSpec& g) {
    RootDatum rd;
    rd.group = g;
    const int n = g.coordinate_count();
    switch (g.type) {
        case LieType::U:
        case LieType::SU:
            rd.form = IntMatrix::identity(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) rd.positive_roots.push_back(combine(unit(n, i), 1, unit(n, j), -1));
            for (int i = 0; i + 1 < n; ++i) rd.simple_roots.push_back(combine(unit(n, i), 1, unit(n, i + 1), -1));
            for (int d = g.type == LieType::U ? 1 : 2; d <= n; ++d) rd.weyl_degrees.push_back(d);
            break;
        case LieType::Sp:
            rd.form = IntMatrix::identity(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    rd.positive_roots.push_back(combine(unit(n, i), 1, unit(n, j), -1));
                    rd.positive_roots.push_back(combine(unit(n, i), 1, unit(n, j), 1));
                }
            for (int i = 0; i < n; ++i) rd.positive_roots.push_back(combine(unit(n, i), 2, unit(n, i), 0));
            for (int i = 0; i + 1 < n; ++i) rd.simple_roots.push_back(combine(unit(n, i), 1, unit(n, i + 1), -1));
            rd.simple_roots.push_back(combine(unit(n, n - 1), 2, unit(n, n - 1), 0));
            for (int d = 1; d <= n; ++d) rd.weyl_degrees.push_back(2 * d);
            break;
        case LieType::G2:
            // Torus diag(t1, t2, 1/(t1 t2)) of SU(3); the weights of the
            // 3-dimensional representation are y1, y2, -y1-y2.
            rd.form = IntMatrix(2, 2, {2, -1, -1, 2});
            rd.positive_roots = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}, {2, 1}, {1, 2}};
            rd.simple_roots = {{1, 0}, {-1, 1}};
            rd.weyl_degrees = {2, 6};
            break;
    }
    for (const auto& a : rd.simple_roots) rd.simple_reflections.push_back(reflection(rd, a));
    return rd;
}

}  // namespace

const RootDatum& root_datum(const GroupSpec& g) {
    static std::mutex mutex;
    static std::map<std::pair<LieType, int>, std::unique_ptr<RootDatum>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{g.type, g.size}];
    if (!slot) slot = std::make_unique<RootDatum>(build_root_datum(g));
    return *slot;
}

IntMatrix reflection(const RootDatum& rd, const IntVector& root) {
    const int n = rd.group.coordinate_count();
    auto norm = form_value(rd.form, root, root);
    IntMatrix s(n, n);
    for (int k = 0; k < n; ++k) {
        auto ek = unit(n, k);
        auto num = 2 * form_value(rd.form, ek, root);
        if (num % norm != 0) throw ConsistencyError("non-integral coroot pairing in " + rd.group.name());
        auto image = combine(ek, 1, root, -(num / norm));
        for (int r = 0; r < n; ++r) s(r, k) = image[static_cast<std::size_t>(r)];
    }
    return s;
}

bool is_root(const RootDatum& rd, const IntVector& v) {
    for (const auto& a : rd.positive_roots) {
        if (a == v) return true;
        if (combine(a, -1, a, 0) == v) return true;
    }
    return false;
}

std::int64_t pairing(const IntVector& cocharacter, const IntVector& character) {
    if (cocharacter.size() != character.size()) throw DomainError("pairing of vectors of different lengths");
    return std::inner_product(cocharacter.begin(), cocharacter.end(), character.begin(), std::int64_t{0});
}

namespace {

std::vector<IntMatrix> closure(const std::vector<IntMatrix>& generators, int n) {
    std::vector<IntMatrix> elements{IntMatrix::identity(n)};
    std::set<IntMatrix> seen{elements.front()};
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (const auto& s : generators) {
            IntMatrix next = elements[i] * s;
            if (seen.insert(next).second) elements.push_back(std::move(next));
        }
    return elements;
}

}  // namespace

std::vector<IntMatrix> weyl_elements(const RootDatum& rd, int rank_bound) {
    if (rd.group.rank() > rank_bound)
        throw DomainError("rank " + std::to_string(rd.group.rank()) + " of " + rd.group.name() +
                          " exceeds the enumeration bound " + std::to_string(rank_bound));
    return closure(rd.simple_reflections, rd.group.coordinate_count());
}

int weyl_length(const RootDatum& rd, const IntMatrix& w) {
    std::set<IntVector> positive(rd.positive_roots.begin(), rd.positive_roots.end());
    int length = 0;
    for (const auto& a : rd.positive_roots)
        if (!positive.contains(w.apply(a))) ++length;
    return length;
}

GradedSeries weyl_poincare(const RootDatum& rd) {
    TPolynomial by_length;
    for (const auto& w : weyl_elements(rd)) {
        auto degree = static_cast<std::size_t>(2 * weyl_length(rd, w));
        if (by_length.size() <= degree) by_length.resize(degree + 1, 0);
        ++by_length[degree];
    }
    TPolynomial from_degrees{1};
    for (int d : rd.weyl_degrees) from_degrees = tpoly_mul(from_degrees, tpoly_geometric(d, 2));
    if (by_length != from_degrees)
        throw ConsistencyError("length generating function of W(" + rd.group.name() +
                               ") disagrees with its degrees");
    return GradedSeries(by_length);
}

Polynomial weyl_act(const IntMatrix& w, const Polynomial& p, int stage) {
    const CoefficientRing& ring = p.ring();
    SubstitutionValues values;
    for (int k = 0; k < w.cols(); ++k) {
        Polynomial image(ring);
        for (int i = 0; i < w.rows(); ++i)
            if (w(i, k) != 0) image += Polynomial::variable(ring, Variable::y(stage, i + 1)).scaled(w(i, k));
        values.emplace(Variable::y(stage, k + 1), std::move(image));
    }
    return substitute(p, values);
}

std::vector<Polynomial> fundamental_invariants(const GroupSpec& g, CoefficientRing ring, int stage) {
    std::array<GroupSpec, 1> groups{g};
    require_admissible(groups, ring);
    const int n = g.coordinate_count();
    std::vector<Polynomial> y;
    for (int k = 1; k <= n; ++k) y.push_back(Polynomial::variable(ring, Variable::y(stage, k)));
    std::vector<Polynomial> out;
    switch (g.type) {
        case LieType::U:
            for (int k = 1; k <= n; ++k) out.push_back(elementary_symmetric(k, y, ring));
            break;
        case LieType::SU:
            for (int k = 2; k <= n; ++k) out.push_back(elementary_symmetric(k, y, ring));
            break;
        case LieType::Sp: {
            std::vector<Polynomial> squares;
            for (const auto& v : y) squares.push_back(v * v);
            for (int k = 1; k <= n; ++k) out.push_back(elementary_symmetric(k, squares, ring));
            break;
        }
        case LieType::G2: {
            // y1^2 + y1 y2 + y2^2 coincides with (y1 - y2)^2 modulo 3.
            const auto& a = y[0];
            const auto& b = y[1];
            out.push_back(a * a + a * b + b * b);
            auto s = a + b;
            out.push_back(a * a * b * b * s * s);
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Centralizers

CentralizerSpec torus_centralizer(const GroupSpec& g) {
    IntVector v;
    if (g.type == LieType::G2) {
        v = {1, 3};
    } else {
        for (int i = 1; i <= g.coordinate_count(); ++i) v.push_back(i);
    }
    return {g, v};
}

std::string FactorStructure::describe() const {
    if (!supported) return "unsupported: " + note;
    std::string out;
    for (const auto& b : blocks) {
        if (!out.empty()) out += " x ";
        if (b.kind == Block::Kind::A)
            out += "A" + std::to_string(b.size() - 1);
        else
            out += "C" + std::to_string(b.size());
    }
    return out.empty() ? "trivial" : out;
}

std::size_t FactorStructure::group_order() const {
    std::size_t order = 1;
    for (const auto& b : blocks) {
        for (std::size_t i = 2; i <= b.size(); ++i) order *= i;
        if (b.kind == Block::Kind::C) order <<= b.size();
    }
    return order;
}

namespace {

FactorStructure identify_factors(const GroupSpec& g, const IntVector& v, bool has_orthogonal_roots) {
    FactorStructure f;
    const int n = g.coordinate_count();
    auto group_by = [&](auto key_of, auto sign_of, const std::vector<int>& coords) {
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (int i : coords) {
            if (used[static_cast<std::size_t>(i)]) continue;
            Block b;
            b.kind = Block::Kind::A;
            for (int j : coords)
                if (!used[static_cast<std::size_t>(j)] && key_of(j) == key_of(i)) {
                    used[static_cast<std::size_t>(j)] = true;
                    b.coordinates.push_back(j);
                    b.signs.push_back(sign_of(j) * sign_of(i));
                }
            f.blocks.push_back(std::move(b));
        }
    };
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    auto value = [&](int i) { return v[static_cast<std::size_t>(i)]; };
    switch (g.type) {
        case LieType::U:
        case LieType::SU:
            group_by(value, [](int) { return 1; }, all);
            break;
        case LieType::Sp: {
            std::vector<int> nonzero, zero;
            for (int i : all) (value(i) == 0 ? zero : nonzero).push_back(i);
            group_by([&](int i) { return value(i) < 0 ? -value(i) : value(i); },
                     [&](int i) { return value(i) < 0 ? -1 : 1; }, nonzero);
            if (!zero.empty()) {
                Block c;
                c.kind = Block::Kind::C;
                c.coordinates = zero;
                c.signs.assign(zero.size(), 1);
                f.blocks.push_back(std::move(c));
            }
            break;
        }
        case LieType::G2:
            if (has_orthogonal_roots) {
                f.supported = false;
                f.note = "G2 centralizer with a nontrivial root subsystem";
            } else {
                group_by(value, [](int) { return 1; }, all);
                // Distinct singleton blocks regardless of coincident values.
                f.blocks.clear();
                for (int i : all) f.blocks.push_back(Block{Block::Kind::A, {i}, {1}});
            }
            break;
    }
    std::sort(f.blocks.begin(), f.blocks.end(),
              [](const Block& a, const Block& b) { return a.coordinates.front() < b.coordinates.front(); });
    return f;
}

}  // namespace

ReflectionSubgroup centralizer_weyl(const CentralizerSpec& c) {
    const RootDatum& rd = root_datum(c.group);
    const int n = c.group.coordinate_count();
    if (static_cast<int>(c.cocharacter.size()) != n)
        throw InvalidSpec("cocharacter for " + c.group.name() + " needs " + std::to_string(n) + " entries, got " +
                          std::to_string(c.cocharacter.size()));
    ReflectionSubgroup w;
    for (const auto& a : rd.positive_roots)
        if (pairing(c.cocharacter, a) == 0) {
            w.roots.push_back(a);
            w.generators.push_back(reflection(rd, a));
        }
    w.elements = closure(w.generators, n);
    w.factors = identify_factors(c.group, c.cocharacter, !w.roots.empty());
    if (w.factors.supported && w.factors.group_order() != w.elements.size())
        throw ConsistencyError("factor structure " + w.factors.describe() + " of " + c.group.name() +
                               " has order " + std::to_string(w.factors.group_order()) + " but W(Z) has " +
                               std::to_string(w.elements.size()) + " elements");
    return w;
}

// ---------------------------------------------------------------------------
// Block invariants

namespace {

struct BlockTables {
    /// e_k of the block in the symbols and in y; index 0 is the constant 1.
    std::vector<Polynomial> symbolic;
    std::vector<Polynomial> value;
};

Polynomial signed_y(CoefficientRing ring, int stage, const Block& b, std::size_t i) {
    return Polynomial::variable(ring, Variable::y(stage, b.coordinates[i] + 1)).scaled(b.signs[i]);
}

BlockTables block_tables(const Block& b, int block_number, int stage, CoefficientRing ring) {
    BlockTables t;
    std::vector<Polynomial> w;
    for (std::size_t i = 0; i < b.size(); ++i) {
        auto yi = signed_y(ring, stage, b, i);
        w.push_back(b.kind == Block::Kind::C ? yi * yi : yi);
    }
    t.symbolic.push_back(Polynomial::constant(ring, 1));
    t.value.push_back(Polynomial::constant(ring, 1));
    for (int k = 1; k <= static_cast<int>(b.size()); ++k) {
        t.value.push_back(elementary_symmetric(k, w, ring));
        if (b.kind == Block::Kind::C)
            t.symbolic.push_back(Polynomial::variable(ring, Variable::q(stage, block_number, k)));
        else if (b.size() == 1)
            t.symbolic.push_back(signed_y(ring, stage, b, 0));
        else
            t.symbolic.push_back(Polynomial::variable(ring, Variable::e(stage, block_number, k)));
    }
    return t;
}

}  // namespace

std::vector<InvariantGenerator> block_generators(const FactorStructure& f, int stage, CoefficientRing ring) {
    if (!f.supported) throw UnsupportedCentralizer("no invariant generators for " + f.describe());
    std::vector<InvariantGenerator> out;
    for (std::size_t b = 0; b < f.blocks.size(); ++b) {
        const Block& block = f.blocks[b];
        auto tables = block_tables(block, static_cast<int>(b) + 1, stage, ring);
        for (std::size_t k = 1; k <= block.size(); ++k) {
            Variable symbol = block.kind == Block::Kind::C
                                  ? Variable::q(stage, static_cast<int>(b) + 1, static_cast<int>(k))
                                  : (block.size() == 1 ? Variable::y(stage, block.coordinates[0] + 1)
                                                       : Variable::e(stage, static_cast<int>(b) + 1, static_cast<int>(k)));
            Polynomial value = tables.value[k];
            if (block.kind == Block::Kind::A && block.size() == 1)
                value = Polynomial::variable(ring, symbol);
            out.push_back({symbol, std::move(value)});
        }
    }
    return out;
}

std::vector<Polynomial> invariant_generators(const ReflectionSubgroup& w, CoefficientRing ring, int stage) {
    std::vector<Polynomial> out;
    for (auto& g : block_generators(w.factors, stage, ring)) out.push_back(std::move(g.value));
    return out;
}

Polynomial rewrite_invariant(const Polynomial& p, const FactorStructure& f, int stage) {
    if (!f.supported) throw UnsupportedCentralizer("cannot rewrite invariants for " + f.describe());
    const CoefficientRing& ring = p.ring();
    std::vector<BlockTables> tables;
    for (std::size_t b = 0; b < f.blocks.size(); ++b)
        tables.push_back(block_tables(f.blocks[b], static_cast<int>(b) + 1, stage, ring));

    // Coordinates in block order; the lex order on transformed exponents
    // below follows this sequence.
    struct Slot {
        std::size_t block;
        std::size_t position;
        Variable var;
    };
    std::vector<Slot> slots;
    for (std::size_t b = 0; b < f.blocks.size(); ++b)
        for (std::size_t i = 0; i < f.blocks[b].size(); ++i)
            slots.push_back({b, i, Variable::y(stage, f.blocks[b].coordinates[i] + 1)});

    auto is_stage_y = [stage](const Variable& v) { return v.family == Family::Y && v.stage == stage; };

    // Exponent vector in the transformed variables w_i (= s_i y_i or y_i^2).
    auto transformed = [&](const Monomial& m) {
        std::vector<std::uint32_t> ex;
        for (const auto& s : slots) {
            auto e = m.exponent(s.var);
            if (f.blocks[s.block].kind == Block::Kind::C) {
                if (e % 2 != 0) throw NotInvariant("odd power of " + s.var.name() + " in a type C block");
                e /= 2;
            }
            ex.push_back(e);
        }
        return ex;
    };

    Polynomial remainder = p;
    Polynomial result(ring);
    std::vector<Polynomial::Term> passthrough;
    while (!remainder.is_zero()) {
        const Polynomial::Term* lead = nullptr;
        std::vector<std::uint32_t> lead_ex;
        for (const auto& t : remainder.terms()) {
            auto ex = transformed(t.first);
            if (!lead || ex > lead_ex) {
                lead = &t;
                lead_ex = std::move(ex);
            }
        }
        if (std::all_of(lead_ex.begin(), lead_ex.end(), [](std::uint32_t e) { return e == 0; })) {
            // Nothing left that involves this stage.
            for (const auto& t : remainder.terms()) passthrough.push_back(t);
            break;
        }
        std::vector<Monomial::Entry> rest;
        for (const auto& [v, e] : lead->first.entries())
            if (!is_stage_y(v)) rest.emplace_back(v, e);
        Monomial other = Monomial::from_entries(std::move(rest));
        Scalar coeff = lead->second;
        Polynomial y_product = Polynomial::monomial(ring, other, 1);
        Polynomial symbol_product = Polynomial::monomial(ring, other, 1);
        std::size_t s = 0;
        for (std::size_t b = 0; b < f.blocks.size(); ++b) {
            const Block& block = f.blocks[b];
            for (std::size_t i = 0; i < block.size(); ++i) {
                auto a = lead_ex[s + i];
                auto next = i + 1 < block.size() ? lead_ex[s + i + 1] : 0;
                if (next > a)
                    throw NotInvariant(p.to_string() + " is not invariant under the block " + std::to_string(b + 1) +
                                       " permutations");
                if (block.kind == Block::Kind::A && block.signs[i] < 0 && a % 2 == 1) coeff = -coeff;
                if (a > next) {
                    y_product *= tables[b].value[i + 1].pow(a - next);
                    symbol_product *= tables[b].symbolic[i + 1].pow(a - next);
                }
            }
            s += block.size();
        }
        remainder -= y_product.scaled(coeff);
        result += symbol_product.scaled(coeff);
    }
    return result + Polynomial::from_terms(ring, std::move(passthrough));
}

}  // namespace flagbott
