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

#ifndef FLAGBOTT_GROEBNER_HPP
#define FLAGBOTT_GROEBNER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "flagbott/polynomial.hpp"
#include "flagbott/series.hpp"

namespace flagbott {

/// Variables are ranked for the engine, not by the printing order: fiber
/// classes (y, e, q) of later stages first, then x, then u by descending
/// stage, then c. Within a stage the printing order is kept. This makes the
/// relations of each stage lead in that stage's own symbols.
/// An elimination order compares the `eliminate` block first (grevlex
/// within the block), then the remaining variables by grevlex.
struct MonomialOrder {
    TermOrder kind = TermOrder::Grevlex;
    std::vector<Variable> eliminate;

    static MonomialOrder grevlex() { return {}; }
    static MonomialOrder lex() { return {TermOrder::Lex, {}}; }
    static MonomialOrder elimination(std::vector<Variable> block) { return {TermOrder::Grevlex, std::move(block)}; }

    bool is_elimination() const noexcept { return !eliminate.empty(); }
};

struct GroebnerOptions {
    /// Maximum number of S-pairs reduced before giving up.
    std::size_t pair_budget = 1'000'000;
    /// Largest admissible S-pair lcm degree (cohomological); 0 disables the cap.
    int degree_cap = 0;

    /// Defaults, with FLAGBOTT_BUDGET overriding the pair budget when set.
    static GroebnerOptions from_environment();
};

/// Reduced Groebner basis over Q or F_p with monic elements. Integer input
/// is promoted to Q.
class GroebnerBasis {
   public:
    const MonomialOrder& order() const noexcept { return order_; }
    const CoefficientRing& ring() const noexcept { return ring_; }
    /// Sorted by increasing leading monomial.
    const std::vector<Polynomial>& elements() const noexcept { return elements_; }
    /// Leading monomials under order(), parallel to elements().
    const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }
    /// Number of S-pairs that were reduced while building the basis.
    std::size_t pairs_reduced() const noexcept { return pairs_reduced_; }

   private:
    friend GroebnerBasis buchberger(std::span<const Polynomial>, const MonomialOrder&, const GroebnerOptions&);
    friend Polynomial normal_form(const Polynomial&, const GroebnerBasis&);

    MonomialOrder order_;
    CoefficientRing ring_ = CoefficientRing::rationals();
    std::vector<Polynomial> elements_;
    std::vector<Monomial> leading_;
    std::size_t pairs_reduced_ = 0;
};

/// The field a Groebner computation over `ring` runs in.
CoefficientRing groebner_field(const CoefficientRing& ring);

/// Buchberger's algorithm, normal selection strategy, with the coprime and
/// chain criteria. Deterministic for a fixed order and input sequence.
/// Throws BudgetExceeded when a budget in `options` is exhausted.
GroebnerBasis buchberger(std::span<const Polynomial> relations, const MonomialOrder& order = MonomialOrder::grevlex(),
                         const GroebnerOptions& options = {});

/// Fully reduced remainder of p modulo the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const Polynomial& p);

/// Two-sided membership test.
bool ideal_equal(std::span<const Polynomial> a, std::span<const Polynomial> b,
                 const MonomialOrder& order = MonomialOrder::grevlex(), const GroebnerOptions& options = {});

/// True when every S-polynomial of basis pairs reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& gb);

/// Graded ranks of k[gens]/(relations), from the leading-term ideal.
/// Relations must be homogeneous.
GradedSeries hilbert_series(std::span<const Generator> gens, std::span<const Polynomial> relations,
                            const MonomialOrder& order = MonomialOrder::grevlex(), const GroebnerOptions& options = {});

/// Hilbert series of k[gens]/(monomials) by pivot recursion on the staircase.
GradedSeries monomial_quotient_series(std::span<const Generator> gens, std::span<const Monomial> monomials);

}  // namespace flagbott

#endif  // FLAGBOTT_GROEBNER_HPP
