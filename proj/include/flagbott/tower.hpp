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

#ifndef FLAGBOTT_TOWER_HPP
#define FLAGBOTT_TOWER_HPP

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flagbott/coefficient.hpp"
#include "flagbott/groebner.hpp"
#include "flagbott/polynomial.hpp"
#include "flagbott/rootdata.hpp"

namespace flagbott {

struct Stage {
    GroupSpec group;
    CentralizerSpec centralizer;
};

/// An m-stage flag Bott tower. Stage numbers are 1-based. The connection
/// A^(l)_j maps stage j coordinates to stage l coordinates and has shape
/// coordinate_count(l) x coordinate_count(j); absent matrices are zero.
struct TowerSpec {
    CoefficientRing ring = CoefficientRing::integers();
    std::vector<Stage> stages;
    std::map<std::pair<int, int>, IntMatrix> connections;

    int size() const noexcept { return static_cast<int>(stages.size()); }
    /// Zero matrix of the right shape when no matrix was given.
    IntMatrix connection(int l, int j) const;
    std::vector<GroupSpec> groups() const;
    /// Sum of torus ranks over all stages.
    int total_rank() const;

    /// Checks stage indices, matrix shapes, cocharacter lengths (InvalidSpec)
    /// and coefficient admissibility (InadmissibleCoefficients).
    void validate() const;
};

/// Convenience: stage whose centralizer is the maximal torus.
Stage torus_stage(const GroupSpec& g);

struct Presentation {
    CoefficientRing ring = CoefficientRing::integers();
    std::vector<Generator> generators;
    std::vector<Polynomial> relations;
    std::string label;

    /// Every relation homogeneous and written in the generators.
    void validate() const;
    GradedSeries hilbert_series(const MonomialOrder& order = MonomialOrder::grevlex(),
                                const GroebnerOptions& options = {}) const;
    bool has_generator(const Variable& v) const;
};

/// Image of y[l,k] under the structure map: u[l,k] (equivariant only) plus
/// sum_{j<l} sum_h A^(l)_j(k,h) y[j,h]. Raw y-coordinates, no elimination.
std::map<Variable, Polynomial> substitution_map(const TowerSpec& spec, bool with_u = true);

Presentation equivariant_presentation(const TowerSpec& spec);
/// The equivariant construction with every u set to zero.
Presentation ordinary_presentation(const TowerSpec& spec);
/// Type U stages with torus centralizers only: adds u[j, n_j+1] = 0.
Presentation effective_presentation(const TowerSpec& spec);

/// One Leray-Hirsch step. `chern_map` holds the images of y[stage,1..N] as
/// polynomials in the base generators. Adds the block generators of W(Z) and
/// the relations h(y) - h(chern_map) for every fundamental invariant h.
/// SU stages also impose e_1(y) = 0, solved for the last degree-2 generator.
Presentation flag_bundle_step(const Presentation& base, const GroupSpec& g, const CentralizerSpec& z,
                              std::span<const Polynomial> chern_map, int stage);

/// Images of the fundamental invariants themselves, e.g. Chern class symbols.
struct InvariantImages {
    std::vector<Polynomial> values;
};

/// Same step when only f^*(h) is known rather than f^*(y_k).
Presentation flag_bundle_step(const Presentation& base, const GroupSpec& g, const CentralizerSpec& z,
                              const InvariantImages& images, int stage);

/// Free base ring on c[1..rank] with deg c[k] = 2k.
Presentation chern_base(int rank, CoefficientRing ring = CoefficientRing::integers());

/// x^{n+1} - x^n c[1] + x^{n-1} c[2] - ... + (-1)^{n+1} c[n+1].
/// Chern symbols default to c[1..n+1].
Polynomial projective_bundle_relation(int n, std::span<const Polynomial> chern = {},
                                      CoefficientRing ring = CoefficientRing::integers());
/// e_k(x[1..n+1]) - c_k for k = 1..n+1.
std::vector<Polynomial> full_flag_relation(int n, std::span<const Polynomial> chern = {},
                                           CoefficientRing ring = CoefficientRing::integers());

/// Graded pieces of prod(1 + a_i) - prod(1 + b_i). Both sides are taken as
/// total classes, so a_i and b_i may be inhomogeneous sums of pieces.
std::vector<Polynomial> generating_function_relations(std::span<const Polynomial> a, std::span<const Polynomial> b,
                                                      CoefficientRing ring);

struct EliminationStep {
    Variable variable;
    Polynomial value;
    /// Removed by a Groebner elimination order rather than solved for.
    bool projected = false;

    /// "e[1,2,1] = c[1] - y[1,1]"
    std::string to_string() const;
};

struct Elimination {
    Presentation presentation;
    std::vector<EliminationStep> steps;
};

/// Removes the listed generators. Each is solved from a relation in which it
/// occurs linearly with a unit coefficient; otherwise a Groebner elimination
/// order is used (fields only). Surviving relations get a positive leading
/// coefficient. The Hilbert series is compared before and after and a
/// ConsistencyError raised on mismatch.
Elimination derive_elimination(const Presentation& p, std::span<const Variable> eliminate,
                               const GroebnerOptions& options = {});

/// Renames generators, e.g. y[1,1] -> x. Targets must have the same weight.
Presentation rename_generators(const Presentation& p, const std::map<Variable, Variable>& renames);

}  // namespace flagbott

#endif  // FLAGBOTT_TOWER_HPP
