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

#ifndef FLAGBOTT_POLYNOMIAL_HPP
#define FLAGBOTT_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagbott/coefficient.hpp"

namespace flagbott {

/// Generator families. Declaration order is the global variable order:
/// earlier families are more significant in every monomial order.
///   U  acting-torus class u[j,k]
///   Y  fiber-torus class y[j,k]
///   E  k-th elementary symmetric class of a type-A block, e[j,b,k]
///   Q  k-th elementary symmetric class of the squares of a type-C block, q[j,b,k]
///   X  Borel-Hirzebruch / flag-bundle generator, x or x[k]
///   C  Chern class symbol c[k]
enum class Family : std::uint8_t { U, Y, E, Q, X, C };

struct Variable {
    Family family = Family::Y;
    int stage = 0;
    int block = 0;
    int index = 0;

    static Variable u(int stage, int index);
    static Variable y(int stage, int index);
    static Variable e(int stage, int block, int index);
    static Variable q(int stage, int block, int index);
    static Variable x() { return Variable{Family::X, 0, 0, 0}; }
    static Variable x(int index);
    static Variable c(int index);

    /// Polynomial degree of the generator; its cohomological degree is twice this.
    int weight() const noexcept;
    int degree() const noexcept { return 2 * weight(); }
    std::string name() const;

    friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// A presentation generator with its cohomological degree.
struct Generator {
    Variable var;
    int degree = 2;

    static Generator of(const Variable& v) { return {v, v.degree()}; }
    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Parses a variable token as printed by Variable::name().
Variable parse_variable(std::string_view token);

enum class TermOrder : std::uint8_t { Grevlex, Lex };

class Monomial {
   public:
    using Entry = std::pair<Variable, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(const Variable& v, std::uint32_t exponent = 1);
    /// Sorts by variable, merges repeats and drops zero exponents.
    static Monomial from_entries(std::vector<Entry> entries);

    std::span<const Entry> entries() const noexcept { return entries_; }
    bool is_one() const noexcept { return entries_.empty(); }
    std::uint32_t exponent(const Variable& v) const noexcept;
    int weight() const noexcept;
    int degree() const noexcept { return 2 * weight(); }
    bool divides(const Monomial& other) const noexcept;
    /// Exact quotient; requires divisor.divides(*this).
    Monomial divided_by(const Monomial& divisor) const;
    std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Structural order, only for use as a container key.
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

   private:
    std::vector<Entry> entries_;
};

/// Monomial comparison under the given order; `greater` means more significant.
std::strong_ordering compare(const Monomial& a, const Monomial& b, TermOrder order);

class Polynomial {
   public:
    using Term = std::pair<Monomial, Scalar>;

    explicit Polynomial(CoefficientRing ring = CoefficientRing::integers()) : ring_(ring) {}
    static Polynomial constant(CoefficientRing ring, const Scalar& value);
    static Polynomial variable(CoefficientRing ring, const Variable& v);
    static Polynomial monomial(CoefficientRing ring, Monomial m, const Scalar& coefficient = 1);
    /// Collects like terms and normalizes coefficients into `ring`.
    static Polynomial from_terms(CoefficientRing ring, std::vector<Term> terms);

    const CoefficientRing& ring() const noexcept { return ring_; }
    /// Terms in descending graded-reverse-lexicographic order, no zero coefficients.
    std::span<const Term> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_homogeneous() const noexcept;
    /// Largest monomial weight; -1 for the zero polynomial.
    int max_weight() const noexcept;
    Polynomial homogeneous_component(int weight) const;
    Scalar coefficient(const Monomial& m) const;
    std::set<Variable> variables() const;
    bool contains(const Variable& v) const noexcept;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial scaled(const Scalar& factor) const;
    Polynomial pow(unsigned exponent) const;

    /// Text form: descending terms in `order`, explicit `*`, `^` for powers.
    std::string to_string(TermOrder order = TermOrder::Grevlex) const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

   private:
    CoefficientRing ring_;
    std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

using SubstitutionValues = std::map<Variable, Polynomial>;

/// Simultaneous substitution. Each value must be zero or homogeneous of the
/// replaced variable's weight; variables absent from `values` are fixed.
Polynomial substitute(const Polynomial& p, const SubstitutionValues& values);

/// e_k of the given forms; e_0 = 1. Throws DomainError unless 0 <= k <= forms.size().
Polynomial elementary_symmetric(int k, std::span<const Polynomial> forms, CoefficientRing ring);

/// Coefficient-wise image of an integer polynomial in Q or F_p.
Polynomial reduce_coefficients(const Polynomial& p, CoefficientRing target);

/// Inverse of Polynomial::to_string. Throws DomainError on malformed input.
Polynomial parse_polynomial(std::string_view text, CoefficientRing ring);

}  // namespace flagbott

#endif  // FLAGBOTT_POLYNOMIAL_HPP
