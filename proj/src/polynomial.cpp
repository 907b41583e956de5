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

#include "flagbott/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "flagbott/errors.hpp"

namespace flagbott {

namespace {

void require_positive(int value, const char* what) {
    if (value < 1) throw DomainError(std::string(what) + " must be positive, got " + std::to_string(value));
}

void require_same_ring(const CoefficientRing& a, const CoefficientRing& b) {
    if (!(a == b)) throw RingMismatch("coefficient rings differ: " + a.tag() + " vs " + b.tag());
}

}  // namespace

Variable Variable::u(int stage, int index) {
    require_positive(stage, "stage");
    require_positive(index, "index");
    return {Family::U, stage, 0, index};
}

Variable Variable::y(int stage, int index) {
    require_positive(stage, "stage");
    require_positive(index, "index");
    return {Family::Y, stage, 0, index};
}

Variable Variable::e(int stage, int block, int index) {
    require_positive(stage, "stage");
    require_positive(block, "block");
    require_positive(index, "index");
    return {Family::E, stage, block, index};
}

Variable Variable::q(int stage, int block, int index) {
    require_positive(stage, "stage");
    require_positive(block, "block");
    require_positive(index, "index");
    return {Family::Q, stage, block, index};
}

Variable Variable::x(int index) {
    require_positive(index, "index");
    return {Family::X, 0, 0, index};
}

Variable Variable::c(int index) {
    require_positive(index, "index");
    return {Family::C, 0, 0, index};
}

int Variable::weight() const noexcept {
    switch (family) {
        case Family::U:
        case Family::Y:
        case Family::X:
            return 1;
        case Family::E:
        case Family::C:
            return index;
        case Family::Q:
            return 2 * index;
    }
    return 1;
}

std::string Variable::name() const {
    auto pair = [](char f, int a, int b) {
        return std::string(1, f) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
    };
    auto triple = [](char f, int a, int b, int c) {
        return std::string(1, f) + "[" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "]";
    };
    switch (family) {
        case Family::U:
            return pair('u', stage, index);
        case Family::Y:
            return pair('y', stage, index);
        case Family::E:
            return triple('e', stage, block, index);
        case Family::Q:
            return triple('q', stage, block, index);
        case Family::X:
            return index == 0 ? std::string("x") : "x[" + std::to_string(index) + "]";
        case Family::C:
            return "c[" + std::to_string(index) + "]";
    }
    return {};
}

Variable parse_variable(std::string_view token) {
    auto fail = [&]() -> Variable { throw DomainError("malformed variable '" + std::string(token) + "'"); };
    if (token.empty()) return fail();
    char f = token.front();
    if (token.size() == 1) return f == 'x' ? Variable::x() : fail();
    if (token[1] != '[' || token.back() != ']') return fail();
    std::vector<int> args;
    std::string_view body = token.substr(2, token.size() - 3);
    while (true) {
        auto comma = body.find(',');
        auto piece = body.substr(0, comma);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc() || ptr != piece.data() + piece.size() || piece.empty()) return fail();
        args.push_back(value);
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
    }
    switch (f) {
        case 'u':
            return args.size() == 2 ? Variable::u(args[0], args[1]) : fail();
        case 'y':
            return args.size() == 2 ? Variable::y(args[0], args[1]) : fail();
        case 'e':
            return args.size() == 3 ? Variable::e(args[0], args[1], args[2]) : fail();
        case 'q':
            return args.size() == 3 ? Variable::q(args[0], args[1], args[2]) : fail();
        case 'x':
            return args.size() == 1 ? Variable::x(args[0]) : fail();
        case 'c':
            return args.size() == 1 ? Variable::c(args[0]) : fail();
        default:
            return fail();
    }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(const Variable& v, std::uint32_t exponent) {
    if (exponent > 0) entries_.emplace_back(v, exponent);
}

Monomial Monomial::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [v, e] : entries) {
        if (e == 0) continue;
        if (!m.entries_.empty() && m.entries_.back().first == v)
            m.entries_.back().second += e;
        else
            m.entries_.emplace_back(v, e);
    }
    return m;
}

std::uint32_t Monomial::exponent(const Variable& v) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& a, const Variable& key) { return a.first < key; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

int Monomial::weight() const noexcept {
    int w = 0;
    for (const auto& [v, e] : entries_) w += static_cast<int>(e) * v.weight();
    return w;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    auto it = other.entries_.begin();
    for (const auto& [v, e] : entries_) {
        while (it != other.entries_.end() && it->first < v) ++it;
        if (it == other.entries_.end() || !(it->first == v) || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
    if (!divisor.divides(*this)) throw DomainError("monomial " + divisor.to_string() + " does not divide " + to_string());
    Monomial out;
    for (const auto& [v, e] : entries_) {
        std::uint32_t rest = e - divisor.exponent(v);
        if (rest > 0) out.entries_.emplace_back(v, rest);
    }
    return out;
}

std::string Monomial::to_string() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : entries_) {
        if (!out.empty()) out += '*';
        out += v.name();
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
        if (i->first < j->first) {
            out.entries_.push_back(*i++);
        } else if (j->first < i->first) {
            out.entries_.push_back(*j++);
        } else {
            out.entries_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.entries_.insert(out.entries_.end(), i, a.entries_.end());
    out.entries_.insert(out.entries_.end(), j, b.entries_.end());
    return out;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder order) {
    auto ea = a.entries();
    auto eb = b.entries();
    if (order == TermOrder::Grevlex) {
        if (auto c = a.weight() <=> b.weight(); c != 0) return c;
        // Scan from the least significant variable; smaller exponent there wins.
        auto i = ea.size();
        auto j = eb.size();
        while (i > 0 && j > 0) {
            const auto& [va, xa] = ea[i - 1];
            const auto& [vb, xb] = eb[j - 1];
            if (vb < va) return std::strong_ordering::less;
            if (va < vb) return std::strong_ordering::greater;
            if (xa != xb) return xb <=> xa;
            --i;
            --j;
        }
        if (i > 0) return std::strong_ordering::less;
        if (j > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        const auto& [va, xa] = ea[i];
        const auto& [vb, xb] = eb[j];
        if (va < vb) return std::strong_ordering::greater;
        if (vb < va) return std::strong_ordering::less;
        if (xa != xb) return xa <=> xb;
        ++i;
        ++j;
    }
    if (i < ea.size()) return std::strong_ordering::greater;
    if (j < eb.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(CoefficientRing ring, const Scalar& value) {
    return monomial(ring, Monomial(), value);
}

Polynomial Polynomial::variable(CoefficientRing ring, const Variable& v) { return monomial(ring, Monomial(v), 1); }

Polynomial Polynomial::monomial(CoefficientRing ring, Monomial m, const Scalar& coefficient) {
    Polynomial p(ring);
    Scalar c = ring.normalize(coefficient);
    if (c != 0) p.terms_.emplace_back(std::move(m), std::move(c));
    return p;
}

Polynomial Polynomial::from_terms(CoefficientRing ring, std::vector<Term> terms) {
    std::map<Monomial, Scalar> collected;
    for (auto& [m, c] : terms) collected[std::move(m)] += c;
    Polynomial p(ring);
    p.terms_.reserve(collected.size());
    for (auto& [m, c] : collected) {
        Scalar v = ring.normalize(c);
        if (v != 0) p.terms_.emplace_back(m, std::move(v));
    }
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return compare(a.first, b.first, TermOrder::Grevlex) > 0; });
    return p;
}

bool Polynomial::is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    int w = terms_.front().first.weight();
    return std::all_of(terms_.begin(), terms_.end(), [w](const Term& t) { return t.first.weight() == w; });
}

int Polynomial::max_weight() const noexcept {
    // Grevlex sorts by weight first.
    return terms_.empty() ? -1 : terms_.front().first.weight();
}

Polynomial Polynomial::homogeneous_component(int weight) const {
    Polynomial out(ring_);
    for (const auto& t : terms_)
        if (t.first.weight() == weight) out.terms_.push_back(t);
    return out;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    for (const auto& [mono, c] : terms_)
        if (mono == m) return c;
    return 0;
}

std::set<Variable> Polynomial::variables() const {
    std::set<Variable> out;
    for (const auto& t : terms_)
        for (const auto& [v, e] : t.first.entries()) out.insert(v);
    return out;
}

bool Polynomial::contains(const Variable& v) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.first.exponent(v) > 0; });
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, ring_.normalize(-c));
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_ring(ring_, rhs.ring_);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + rhs.terms_.size());
    auto i = terms_.begin();
    auto j = rhs.terms_.begin();
    while (i != terms_.end() && j != rhs.terms_.end()) {
        auto c = compare(i->first, j->first, TermOrder::Grevlex);
        if (c > 0) {
            merged.push_back(std::move(*i++));
        } else if (c < 0) {
            merged.push_back(*j++);
        } else {
            Scalar sum = ring_.normalize(i->second + j->second);
            if (sum != 0) merged.emplace_back(std::move(i->first), std::move(sum));
            ++i;
            ++j;
        }
    }
    std::move(i, terms_.end(), std::back_inserter(merged));
    merged.insert(merged.end(), j, rhs.terms_.end());
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::map<Monomial, Scalar> collected;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) collected[ma * mb] += ca * cb;
    std::vector<Polynomial::Term> terms;
    terms.reserve(collected.size());
    for (auto& [m, c] : collected) terms.emplace_back(m, std::move(c));
    return Polynomial::from_terms(a.ring_, std::move(terms));
}

Polynomial Polynomial::scaled(const Scalar& factor) const {
    Polynomial out(ring_);
    Scalar f = ring_.normalize(factor);
    if (f == 0) return out;
    for (const auto& [m, c] : terms_) {
        Scalar v = ring_.normalize(c * f);
        if (v != 0) out.terms_.emplace_back(m, std::move(v));
    }
    return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(ring_, 1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::string Polynomial::to_string(TermOrder order) const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    if (order != TermOrder::Grevlex)
        std::sort(sorted.begin(), sorted.end(),
                  [order](const Term* a, const Term* b) { return compare(a->first, b->first, order) > 0; });
    std::string out;
    bool first = true;
    for (const Term* t : sorted) {
        Scalar shown = ring_.display_value(t->second);
        bool negative = shown < 0;
        if (negative) shown = -shown;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (t->first.is_one()) {
            out += shown.get_str();
        } else {
            if (shown != 1) out += shown.get_str() + "*";
            out += t->first.to_string();
        }
    }
    return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) { return a + b; }

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

Polynomial substitute(const Polynomial& p, const SubstitutionValues& values) {
    for (const auto& [v, value] : values) {
        require_same_ring(p.ring(), value.ring());
        if (value.is_zero()) continue;
        if (!value.is_homogeneous() || value.max_weight() != v.weight())
            throw InhomogeneousSubstitution("value for " + v.name() + " is not homogeneous of degree " +
                                            std::to_string(v.degree()) + ": " + value.to_string());
    }
    std::map<std::pair<Variable, std::uint32_t>, Polynomial> powers;
    auto power_of = [&](const Variable& v, std::uint32_t e) -> const Polynomial& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it == powers.end()) it = powers.emplace(key, values.at(v).pow(e)).first;
        return it->second;
    };
    Polynomial out(p.ring());
    std::vector<Polynomial::Term> plain;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Entry> fixed;
        std::vector<const Polynomial*> factors;
        for (const auto& [v, e] : m.entries()) {
            if (values.contains(v))
                factors.push_back(&power_of(v, e));
            else
                fixed.emplace_back(v, e);
        }
        if (factors.empty()) {
            plain.emplace_back(m, c);
            continue;
        }
        Polynomial term = Polynomial::monomial(p.ring(), Monomial::from_entries(std::move(fixed)), c);
        for (const Polynomial* f : factors) term *= *f;
        out += term;
    }
    out += Polynomial::from_terms(p.ring(), std::move(plain));
    return out;
}

Polynomial elementary_symmetric(int k, std::span<const Polynomial> forms, CoefficientRing ring) {
    if (k < 0 || static_cast<std::size_t>(k) > forms.size())
        throw DomainError("elementary symmetric index " + std::to_string(k) + " out of range 0.." +
                          std::to_string(forms.size()));
    std::vector<Polynomial> e(static_cast<std::size_t>(k) + 1, Polynomial(ring));
    e[0] = Polynomial::constant(ring, 1);
    for (std::size_t i = 0; i < forms.size(); ++i) {
        require_same_ring(ring, forms[i].ring());
        auto top = std::min<std::size_t>(static_cast<std::size_t>(k), i + 1);
        for (std::size_t j = top; j >= 1; --j) e[j] += e[j - 1] * forms[i];
    }
    return e[static_cast<std::size_t>(k)];
}

Polynomial reduce_coefficients(const Polynomial& p, CoefficientRing target) {
    std::vector<Polynomial::Term> terms(p.terms().begin(), p.terms().end());
    return Polynomial::from_terms(target, std::move(terms));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyParser {
   public:
    PolyParser(std::string_view text, CoefficientRing ring) : text_(text), ring_(ring) {}

    Polynomial parse() {
        std::vector<Polynomial::Term> terms;
        skip_space();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        while (true) {
            auto term = parse_term();
            if (negative) term.second = -term.second;
            terms.push_back(std::move(term));
            skip_space();
            if (pos_ == text_.size()) break;
            char op = text_[pos_++];
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            negative = op == '-';
        }
        return Polynomial::from_terms(ring_, std::move(terms));
    }

   private:
    [[noreturn]] void fail(const std::string& what) const {
        throw DomainError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                          std::string(text_) + "'");
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view take_digits() {
        auto start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    Polynomial::Term parse_term() {
        Scalar coefficient = 1;
        std::vector<Monomial::Entry> entries;
        while (true) {
            skip_space();
            char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string number(take_digits());
                if (peek() == '/') {
                    ++pos_;
                    number += "/" + std::string(take_digits());
                }
                coefficient *= Scalar(number);
            } else if (std::isalpha(static_cast<unsigned char>(ch))) {
                auto start = pos_++;
                if (peek() == '[') {
                    auto close = text_.find(']', pos_);
                    if (close == std::string_view::npos) fail("unterminated variable");
                    pos_ = close + 1;
                }
                Variable v = parse_variable(text_.substr(start, pos_ - start));
                std::uint32_t e = 1;
                if (peek() == '^') {
                    ++pos_;
                    auto digits = take_digits();
                    std::from_chars(digits.data(), digits.data() + digits.size(), e);
                }
                entries.emplace_back(v, e);
            } else {
                fail("expected coefficient or variable");
            }
            skip_space();
            if (peek() != '*') break;
            ++pos_;
        }
        return {Monomial::from_entries(std::move(entries)), coefficient};
    }

    std::string_view text_;
    CoefficientRing ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, CoefficientRing ring) {
    return PolyParser(text, ring).parse();
}

}  // namespace flagbott
