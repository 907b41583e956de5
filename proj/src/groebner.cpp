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

#include "flagbott/groebner.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>

#include "flagbott/errors.hpp"

namespace flagbott {

GroebnerOptions GroebnerOptions::from_environment() {
    GroebnerOptions options;
    if (const char* env = std::getenv("FLAGBOTT_BUDGET")) {
        char* end = nullptr;
        auto value = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) options.pair_budget = value;
    }
    return options;
}

CoefficientRing groebner_field(const CoefficientRing& ring) {
    return ring.kind() == CoefficientRing::Kind::Integers ? CoefficientRing::rationals() : ring;
}

namespace {

constexpr int kMaxVars = 48;
constexpr std::uint32_t kMaxExponent = 255;

struct Mono {
    std::array<std::uint8_t, kMaxVars> e{};
    int deg = 0;
    std::uint64_t mask = 0;
};

struct MonoHash {
    std::size_t operator()(const Mono& m) const noexcept {
        std::uint64_t h = 1469598103934665603ull ^ m.mask;
        for (std::size_t i = 0; i < m.e.size(); i += 8) {
            std::uint64_t word;
            std::memcpy(&word, m.e.data() + i, 8);
            h = (h ^ word) * 1099511628211ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

struct MonoEq {
    bool operator()(const Mono& a, const Mono& b) const noexcept { return a.e == b.e; }
};

/// Engine significance of a variable, most significant first. Later stages
/// come before earlier ones and fiber classes before acting-torus classes,
/// so each stage's relations lead in that stage's own symbols.
auto engine_key(const Variable& v) {
    int group = 0;
    switch (v.family) {
        case Family::Y:
        case Family::E:
        case Family::Q: group = 0; break;
        case Family::X: group = 1; break;
        case Family::U: group = 2; break;
        case Family::C: group = 3; break;
    }
    return std::make_tuple(group, -v.stage, static_cast<int>(v.family), v.block, v.index);
}

/// Variable universe and monomial order of one computation. Index 0 is the
/// most significant variable.
class Context {
   public:
    Context(std::vector<Variable> vars, const MonomialOrder& order) : vars_(std::move(vars)), order_(order) {
        std::sort(vars_.begin(), vars_.end(), [](const Variable& a, const Variable& b) { return engine_key(a) < engine_key(b); });
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
        if (vars_.size() > static_cast<std::size_t>(kMaxVars))
            throw DomainError("Groebner engine supports at most " + std::to_string(kMaxVars) + " variables, got " +
                              std::to_string(vars_.size()));
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            index_.emplace(vars_[i], static_cast<int>(i));
            weights_.push_back(vars_[i].weight());
            in_block_.push_back(std::find(order.eliminate.begin(), order.eliminate.end(), vars_[i]) !=
                                order.eliminate.end());
        }
    }

    int size() const noexcept { return static_cast<int>(vars_.size()); }

    Mono to_mono(const Monomial& m) const {
        Mono out;
        for (const auto& [v, e] : m.entries()) {
            auto it = index_.find(v);
            if (it == index_.end()) throw DomainError("variable " + v.name() + " outside the universe");
            if (e > kMaxExponent) throw BudgetExceeded("exponent exceeds engine limit");
            out.e[static_cast<std::size_t>(it->second)] = static_cast<std::uint8_t>(e);
        }
        finish(out);
        return out;
    }

    Monomial to_monomial(const Mono& m) const {
        std::vector<Monomial::Entry> entries;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (m.e[i]) entries.emplace_back(vars_[i], m.e[i]);
        return Monomial::from_entries(std::move(entries));
    }

    void finish(Mono& m) const {
        m.deg = 0;
        m.mask = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto x = m.e[i];
            m.deg += x * weights_[i];
            if (x) m.mask |= std::uint64_t{1} << i;
        }
    }

    Mono mul(const Mono& a, const Mono& b) const {
        Mono out;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            unsigned s = unsigned{a.e[i]} + b.e[i];
            if (s > kMaxExponent) throw BudgetExceeded("exponent exceeds engine limit");
            out.e[i] = static_cast<std::uint8_t>(s);
        }
        out.deg = a.deg + b.deg;
        out.mask = a.mask | b.mask;
        return out;
    }

    Mono div(const Mono& a, const Mono& b) const {
        Mono out;
        for (std::size_t i = 0; i < vars_.size(); ++i) out.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
        finish(out);
        return out;
    }

    Mono lcm(const Mono& a, const Mono& b) const {
        Mono out;
        for (std::size_t i = 0; i < vars_.size(); ++i) out.e[i] = std::max(a.e[i], b.e[i]);
        finish(out);
        return out;
    }

    bool divides(const Mono& a, const Mono& b) const {
        if ((a.mask & ~b.mask) != 0 || a.deg > b.deg) return false;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (a.e[i] > b.e[i]) return false;
        return true;
    }

    static bool coprime(const Mono& a, const Mono& b) { return (a.mask & b.mask) == 0; }
    static bool equal(const Mono& a, const Mono& b) { return a.mask == b.mask && a.e == b.e; }

    /// Positive when a is more significant than b.
    int cmp(const Mono& a, const Mono& b) const {
        if (order_.is_elimination()) {
            if (int c = grevlex(a, b, true); c != 0) return c;
            return grevlex(a, b, false);
        }
        if (order_.kind == TermOrder::Lex) {
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            return 0;
        }
        if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
        for (int i = size() - 1; i >= 0; --i) {
            auto x = a.e[static_cast<std::size_t>(i)], y = b.e[static_cast<std::size_t>(i)];
            if (x != y) return x < y ? 1 : -1;
        }
        return 0;
    }

   private:
    int grevlex(const Mono& a, const Mono& b, bool block) const {
        int da = 0, db = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (in_block_[i] == block) {
                da += a.e[i] * weights_[i];
                db += b.e[i] * weights_[i];
            }
        if (da != db) return da > db ? 1 : -1;
        for (int i = size() - 1; i >= 0; --i) {
            auto k = static_cast<std::size_t>(i);
            if (in_block_[k] != block) continue;
            if (a.e[k] != b.e[k]) return a.e[k] < b.e[k] ? 1 : -1;
        }
        return 0;
    }

    std::vector<Variable> vars_;
    std::map<Variable, int> index_;
    MonomialOrder order_;
    std::vector<int> weights_;
    std::vector<bool> in_block_;
};

struct RationalField {
    using T = mpq_class;
    T from(const Scalar& s) const { return s; }
    Scalar to(const T& a) const { return a; }
    static bool is_zero(const T& a) { return sgn(a) == 0; }
    T inv(const T& a) const { return T(1) / a; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    void add_to(T& acc, const T& b) const { acc += b; }
    /// acc -= a * b
    void submul(T& acc, const T& a, const T& b) const { acc -= a * b; }
};

struct PrimeFieldArith {
    using T = std::uint64_t;
    std::uint64_t p;
    T from(const Scalar& s) const {
        mpz_class m(static_cast<unsigned long>(p));
        mpz_class num = s.get_num() % m;
        if (num < 0) num += m;
        mpz_class den = s.get_den() % m;
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
        mpz_class r = (num * inv) % m;
        return r.get_ui();
    }
    Scalar to(const T& a) const { return Scalar(static_cast<unsigned long>(a)); }
    static bool is_zero(const T& a) { return a == 0; }
    T inv(T a) const {
        T result = 1, base = a % p;
        for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
        }
        return result;
    }
    T mul(const T& a, const T& b) const { return a * b % p; }
    T neg(const T& a) const { return a == 0 ? 0 : p - a; }
    void add_to(T& acc, const T& b) const { acc = (acc + b) % p; }
    void submul(T& acc, const T& a, const T& b) const { acc = (acc + p - a * b % p) % p; }
};

template <class Field>
class Engine {
   public:
    using Coeff = typename Field::T;
    struct Term {
        Mono m;
        Coeff c;
    };
    using Poly = std::vector<Term>;

    Engine(const Context& ctx, Field field, CoefficientRing ring) : ctx_(ctx), field_(field), ring_(ring) {}

    Poly convert(const Polynomial& p) const {
        Poly out;
        out.reserve(p.size());
        for (const auto& [m, c] : p.terms()) {
            Coeff v = field_.from(c);
            if (!Field::is_zero(v)) out.push_back({ctx_.to_mono(m), v});
        }
        sort_terms(out);
        return out;
    }

    Polynomial back(const Poly& p) const {
        std::vector<Polynomial::Term> terms;
        terms.reserve(p.size());
        for (const auto& t : p) terms.emplace_back(ctx_.to_monomial(t.m), field_.to(t.c));
        return Polynomial::from_terms(ring_, std::move(terms));
    }

    void make_monic(Poly& p) const {
        if (p.empty()) return;
        Coeff inv = field_.inv(p.front().c);
        for (auto& t : p) t.c = field_.mul(t.c, inv);
    }

    /// Reduction modulo monic reducers. With `full` false only the leading
    /// term is made irreducible and the tail is returned as is.
    Poly reduce(const Poly& f, const std::vector<const Poly*>& reducers, bool full = true) const {
        auto less = [this](const Mono& a, const Mono& b) { return ctx_.cmp(a, b) < 0; };
        std::priority_queue<Mono, std::vector<Mono>, decltype(less)> heap(less);
        std::unordered_map<Mono, Coeff, MonoHash, MonoEq> acc;
        acc.reserve(f.size() * 2);
        auto add = [&](const Mono& m, const Coeff& c) {
            auto [it, inserted] = acc.try_emplace(m, c);
            if (inserted)
                heap.push(m);
            else
                field_.add_to(it->second, c);
        };
        for (const auto& t : f) add(t.m, t.c);

        Poly done;
        while (!heap.empty()) {
            Mono m = heap.top();
            heap.pop();
            auto it = acc.find(m);
            Coeff c = std::move(it->second);
            acc.erase(it);
            if (Field::is_zero(c)) continue;
            const Poly* divisor = nullptr;
            if (full || done.empty())
                for (const Poly* g : reducers)
                    if (ctx_.divides(g->front().m, m)) {
                        divisor = g;
                        break;
                    }
            if (!divisor) {
                done.push_back({m, std::move(c)});
                continue;
            }
            Mono shift = ctx_.div(m, divisor->front().m);
            Coeff factor = field_.neg(c);
            for (std::size_t k = 1; k < divisor->size(); ++k) {
                const Term& t = (*divisor)[k];
                add(ctx_.mul(t.m, shift), field_.mul(factor, t.c));
            }
        }
        return done;
    }

    Poly spoly(const Poly& f, const Poly& g) const {
        Mono l = ctx_.lcm(f.front().m, g.front().m);
        Mono sf = ctx_.div(l, f.front().m);
        Mono sg = ctx_.div(l, g.front().m);
        std::unordered_map<Mono, Coeff, MonoHash, MonoEq> acc;
        for (std::size_t k = 1; k < f.size(); ++k) acc.try_emplace(ctx_.mul(f[k].m, sf), f[k].c);
        for (std::size_t k = 1; k < g.size(); ++k) {
            auto [it, inserted] = acc.try_emplace(ctx_.mul(g[k].m, sg), field_.neg(g[k].c));
            if (!inserted) field_.submul(it->second, Coeff(1), g[k].c);
        }
        Poly out;
        for (auto& [m, c] : acc)
            if (!Field::is_zero(c)) out.push_back({m, c});
        sort_terms(out);
        return out;
    }

    const Context& context() const noexcept { return ctx_; }

   private:
    void sort_terms(Poly& p) const {
        std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return ctx_.cmp(a.m, b.m) > 0; });
    }

    const Context& ctx_;
    Field field_;
    CoefficientRing ring_;
};

struct Pair {
    std::size_t i;
    std::size_t j;
    Mono lcm;
    std::size_t seq;
};

template <class Field>
struct BuchbergerRun {
    using E = Engine<Field>;
    using Poly = typename E::Poly;

    struct PairLess {
        const Context* ctx;
        bool operator()(const Pair& a, const Pair& b) const {
            if (a.lcm.deg != b.lcm.deg) return a.lcm.deg < b.lcm.deg;
            if (int c = ctx->cmp(a.lcm, b.lcm); c != 0) return c < 0;
            return a.seq < b.seq;
        }
    };

    const E& engine;
    const GroebnerOptions& options;
    std::vector<Poly> polys{};
    std::vector<bool> active{};
    std::set<Pair, PairLess> pairs{PairLess{&engine.context()}};
    std::size_t seq = 0;
    std::size_t reduced = 0;

    const Context& ctx() const { return engine.context(); }
    const Mono& lm(std::size_t i) const { return polys[i].front().m; }

    std::vector<const Poly*> reducers() const {
        std::vector<const Poly*> out;
        for (std::size_t i = 0; i < polys.size(); ++i)
            if (active[i]) out.push_back(&polys[i]);
        return out;
    }

    // Gebauer-Moeller installation of a new basis element.
    void update(Poly h) {
        const std::size_t hi = polys.size();
        polys.push_back(std::move(h));
        active.push_back(false);
        const Mono& lh = lm(hi);

        std::vector<Pair> candidates;
        for (std::size_t g = 0; g < hi; ++g)
            if (active[g]) candidates.push_back({g, hi, ctx().lcm(lm(g), lh), 0});

        std::vector<Pair> kept;
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            const Pair& p = candidates[a];
            bool keep = Context::coprime(lm(p.i), lh);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < candidates.size() && keep; ++b)
                    if (ctx().divides(candidates[b].lcm, p.lcm)) keep = false;
                for (const Pair& q : kept)
                    if (keep && ctx().divides(q.lcm, p.lcm)) keep = false;
            }
            if (keep) kept.push_back(p);
        }

        for (auto it = pairs.begin(); it != pairs.end();) {
            const Mono& l = it->lcm;
            bool drop = ctx().divides(lh, l) && !Context::equal(ctx().lcm(lm(it->i), lh), l) &&
                        !Context::equal(ctx().lcm(lm(it->j), lh), l);
            it = drop ? pairs.erase(it) : std::next(it);
        }
        for (Pair& p : kept)
            if (!Context::coprime(lm(p.i), lh)) {
                p.seq = seq++;
                pairs.insert(p);
            }

        for (std::size_t g = 0; g < hi; ++g)
            if (active[g] && ctx().divides(lh, lm(g))) active[g] = false;
        active[hi] = true;
    }

    void add_input(const Poly& f) {
        Poly h = engine.reduce(f, reducers(), false);
        if (h.empty()) return;
        engine.make_monic(h);
        update(std::move(h));
    }

    void run() {
        while (!pairs.empty()) {
            Pair p = *pairs.begin();
            pairs.erase(pairs.begin());
            if (options.degree_cap > 0 && 2 * p.lcm.deg > options.degree_cap)
                throw BudgetExceeded("S-pair degree " + std::to_string(2 * p.lcm.deg) + " exceeds the cap " +
                                     std::to_string(options.degree_cap));
            if (++reduced > options.pair_budget)
                throw BudgetExceeded("S-pair budget of " + std::to_string(options.pair_budget) + " exhausted");
            Poly h = engine.reduce(engine.spoly(polys[p.i], polys[p.j]), reducers(), false);
            if (h.empty()) continue;
            engine.make_monic(h);
            update(std::move(h));
        }
    }

    /// Minimal, tail-reduced, sorted by increasing leading monomial.
    std::vector<Poly> reduced_basis() const {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (!active[i]) continue;
            bool redundant = false;
            for (std::size_t j = 0; j < polys.size() && !redundant; ++j)
                if (j != i && active[j] && ctx().divides(lm(j), lm(i)) && (!Context::equal(lm(j), lm(i)) || j < i))
                    redundant = true;
            if (!redundant) keep.push_back(i);
        }
        std::sort(keep.begin(), keep.end(), [&](std::size_t a, std::size_t b) { return ctx().cmp(lm(a), lm(b)) < 0; });
        // Reduce tails from the smallest leading monomial up so every reducer
        // used is already in final form.
        std::vector<Poly> out;
        for (std::size_t i : keep) {
            std::vector<const Poly*> others;
            for (const auto& q : out) others.push_back(&q);
            Poly tail(polys[i].begin() + 1, polys[i].end());
            Poly reduced_tail = engine.reduce(tail, others, true);
            Poly full{polys[i].front()};
            full.insert(full.end(), reduced_tail.begin(), reduced_tail.end());
            out.push_back(std::move(full));
        }
        return out;
    }
};

std::vector<Variable> universe_of(std::span<const Polynomial> polys) {
    std::set<Variable> vars;
    for (const auto& p : polys) {
        auto v = p.variables();
        vars.insert(v.begin(), v.end());
    }
    return {vars.begin(), vars.end()};
}

std::vector<Polynomial> promote(std::span<const Polynomial> polys, const CoefficientRing& field) {
    std::vector<Polynomial> out;
    out.reserve(polys.size());
    for (const auto& p : polys) out.push_back(p.ring() == field ? p : reduce_coefficients(p, field));
    return out;
}

template <class Field>
void run_buchberger(std::span<const Polynomial> relations, const Context& ctx, Field field, const CoefficientRing& ring,
                    const GroebnerOptions& options, std::vector<Polynomial>& elements, std::vector<Monomial>& leading,
                    std::size_t& reduced) {
    Engine<Field> engine(ctx, field, ring);
    BuchbergerRun<Field> run{engine, options};
    std::vector<typename Engine<Field>::Poly> input;
    for (const auto& r : relations) input.push_back(engine.convert(r));
    // Low degrees first keeps the input phase close to the normal strategy.
    std::stable_sort(input.begin(), input.end(), [&](const auto& a, const auto& b) {
        if (a.empty() || b.empty()) return !a.empty() && b.empty();
        return ctx.cmp(a.front().m, b.front().m) < 0;
    });
    for (const auto& r : input)
        if (!r.empty()) run.add_input(r);
    run.run();
    for (const auto& p : run.reduced_basis()) {
        elements.push_back(engine.back(p));
        leading.push_back(ctx.to_monomial(p.front().m));
    }
    reduced = run.reduced;
}

template <class Fn>
decltype(auto) with_field(const CoefficientRing& ring, Fn&& fn) {
    if (ring.kind() == CoefficientRing::Kind::PrimeField) return fn(PrimeFieldArith{ring.characteristic()});
    return fn(RationalField{});
}

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> relations, const MonomialOrder& order,
                         const GroebnerOptions& options) {
    CoefficientRing ring = relations.empty() ? CoefficientRing::rationals() : groebner_field(relations.front().ring());
    for (const auto& r : relations)
        if (!(groebner_field(r.ring()) == ring)) throw RingMismatch("relations over different coefficient rings");
    auto input = promote(relations, ring);
    Context ctx(universe_of(input), order);
    GroebnerBasis gb;
    gb.order_ = order;
    gb.ring_ = ring;
    with_field(ring, [&](auto field) {
        run_buchberger(input, ctx, field, ring, options, gb.elements_, gb.leading_, gb.pairs_reduced_);
    });
    return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    Polynomial input = p.ring() == gb.ring() ? p : reduce_coefficients(p, gb.ring());
    std::vector<Polynomial> all = gb.elements();
    all.push_back(input);
    Context ctx(universe_of(all), gb.order());
    return with_field(gb.ring(), [&](auto field) {
        using Field = decltype(field);
        Engine<Field> engine(ctx, field, gb.ring());
        std::vector<typename Engine<Field>::Poly> basis;
        for (const auto& g : gb.elements()) basis.push_back(engine.convert(g));
        std::vector<const typename Engine<Field>::Poly*> reducers;
        for (const auto& b : basis) reducers.push_back(&b);
        return engine.back(engine.reduce(engine.convert(input), reducers));
    });
}

bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p) { return normal_form(p, gb).is_zero(); }

bool ideal_equal(std::span<const Polynomial> a, std::span<const Polynomial> b, const MonomialOrder& order,
                 const GroebnerOptions& options) {
    auto ga = buchberger(a, order, options);
    for (const auto& p : b)
        if (!ideal_contains(ga, p)) return false;
    auto gb = buchberger(b, order, options);
    for (const auto& p : a)
        if (!ideal_contains(gb, p)) return false;
    return true;
}

bool satisfies_buchberger_criterion(const GroebnerBasis& gb) {
    const auto& elems = gb.elements();
    if (elems.empty()) return true;
    Context ctx(universe_of(elems), gb.order());
    return with_field(gb.ring(), [&](auto field) {
        using Field = decltype(field);
        Engine<Field> engine(ctx, field, gb.ring());
        std::vector<typename Engine<Field>::Poly> basis;
        for (const auto& g : elems) basis.push_back(engine.convert(g));
        std::vector<const typename Engine<Field>::Poly*> reducers;
        for (const auto& b : basis) reducers.push_back(&b);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                if (!engine.reduce(engine.spoly(basis[i], basis[j]), reducers).empty()) return false;
        return true;
    });
}


// ---------------------------------------------------------------------------
// Hilbert series

namespace {

using Staircase = std::vector<std::vector<std::uint32_t>>;

bool divides_exp(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Staircase minimalize(Staircase gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Staircase out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && divides_exp(gens[j], gens[i])) redundant = true;
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

int exp_degree(const std::vector<std::uint32_t>& m, const std::vector<int>& degrees) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<int>(m[i]) * degrees[i];
    return d;
}

TPolynomial shifted(const TPolynomial& p, int by) {
    TPolynomial out(static_cast<std::size_t>(by), 0);
    out.insert(out.end(), p.begin(), p.end());
    return out;
}

TPolynomial add(TPolynomial a, const TPolynomial& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

/// Numerator N(t) of k[x]/I = N(t) / prod (1 - t^{deg x_i}).
TPolynomial hilbert_numerator(Staircase gens, const std::vector<int>& degrees) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    const std::size_t n = degrees.size();
    std::vector<int> count(n, 0);
    for (const auto& g : gens)
        for (std::size_t i = 0; i < n; ++i)
            if (g[i]) ++count[i];
    auto pivot_var = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());
    if (count[pivot_var] <= 1) {
        TPolynomial out{1};
        for (const auto& g : gens) {
            TPolynomial factor(static_cast<std::size_t>(exp_degree(g, degrees)) + 1, 0);
            factor.front() = 1;
            factor.back() -= 1;
            out = tpoly_mul(out, factor);
        }
        return out;
    }
    std::uint32_t e = 0;
    for (const auto& g : gens)
        if (g[pivot_var] && (e == 0 || g[pivot_var] < e)) e = g[pivot_var];
    // HN(I) = HN(I + p) + t^deg(p) HN(I : p), p = x^e
    Staircase plus;
    Staircase colon;
    std::vector<std::uint32_t> p(n, 0);
    p[pivot_var] = e;
    plus.push_back(p);
    for (const auto& g : gens) {
        if (!g[pivot_var]) plus.push_back(g);
        auto q = g;
        q[pivot_var] = q[pivot_var] > e ? q[pivot_var] - e : 0;
        colon.push_back(std::move(q));
    }
    auto a = hilbert_numerator(std::move(plus), degrees);
    auto b = hilbert_numerator(std::move(colon), degrees);
    return add(a, shifted(b, static_cast<int>(e) * degrees[pivot_var]));
}

}  // namespace

GradedSeries monomial_quotient_series(std::span<const Generator> gens, std::span<const Monomial> monomials) {
    std::vector<Variable> vars;
    std::vector<int> degrees;
    for (const auto& g : gens) {
        vars.push_back(g.var);
        degrees.push_back(g.degree);
    }
    Staircase stairs;
    for (const auto& m : monomials) {
        std::vector<std::uint32_t> ex(vars.size(), 0);
        for (const auto& [v, e] : m.entries()) {
            auto it = std::find(vars.begin(), vars.end(), v);
            if (it == vars.end()) throw DomainError("monomial uses " + v.name() + " which is not a generator");
            ex[static_cast<std::size_t>(it - vars.begin())] = e;
        }
        stairs.push_back(std::move(ex));
    }
    return GradedSeries(hilbert_numerator(std::move(stairs), degrees), degrees).simplified();
}

GradedSeries hilbert_series(std::span<const Generator> gens, std::span<const Polynomial> relations,
                            const MonomialOrder& order, const GroebnerOptions& options) {
    std::set<Variable> known;
    for (const auto& g : gens) {
        if (g.degree != g.var.degree())
            throw DomainError("generator " + g.var.name() + " declared with degree " + std::to_string(g.degree) +
                              ", expected " + std::to_string(g.var.degree()));
        known.insert(g.var);
    }
    for (const auto& r : relations) {
        if (!r.is_homogeneous()) throw DomainError("relation is not homogeneous: " + r.to_string());
        for (const auto& v : r.variables())
            if (!known.contains(v)) throw DomainError("relation uses " + v.name() + " which is not a generator");
    }
    auto gb = buchberger(relations, order, options);
    return monomial_quotient_series(gens, gb.leading_monomials());
}

}  // namespace flagbott
