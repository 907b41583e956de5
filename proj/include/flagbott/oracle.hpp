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

#ifndef FLAGBOTT_ORACLE_HPP
#define FLAGBOTT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "flagbott/groebner.hpp"
#include "flagbott/rootdata.hpp"
#include "flagbott/series.hpp"
#include "flagbott/tower.hpp"

// Independent checks. Nothing here uses the invariant tables or the
// presentation builders to produce an expected answer; Weyl data is taken
// from the enumerated element list and the root system only.

namespace flagbott {

/// W(K) length generating function divided by that of the cocharacter
/// stabilizer. Throws ConsistencyError when the division is not exact.
GradedSeries fiber_poincare_by_division(const GroupSpec& g, const CentralizerSpec& z);
/// Sum of t^{2 l(w)} over minimal coset representatives, found by BFS.
GradedSeries fiber_poincare_by_cosets(const GroupSpec& g, const CentralizerSpec& z);
/// Both of the above; ConsistencyError if they disagree.
GradedSeries fiber_poincare(const GroupSpec& g, const CentralizerSpec& z);

GradedSeries tower_poincare(const TowerSpec& spec);
std::int64_t euler_characteristic(const TowerSpec& spec);

/// True iff every element fixes p. Only y[stage, *] is acted on.
bool check_invariance(const Polynomial& p, std::span<const IntMatrix> elements, int stage = 1);
bool check_invariance(const Polynomial& p, const ReflectionSubgroup& group, int stage = 1);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    /// First degree at which two series differ.
    std::optional<int> divergence;
};

struct CrossCheckReport {
    std::vector<CheckResult> checks;
    std::optional<GradedSeries> tower;
    std::optional<GradedSeries> ordinary;
    std::optional<GradedSeries> equivariant;
    int total_rank = 0;

    bool passed() const;
    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

/// (i) ordinary Hilbert series = tower Poincare polynomial,
/// (ii) equivariant series times (1 - t^2)^{total rank} = the same,
/// (iii) palindromic with the expected top degree,
/// (iv) every invariant the builders rely on is fixed by its Weyl group.
CrossCheckReport cross_check(const TowerSpec& spec, const GroebnerOptions& options = {});
/// Same checks against caller-supplied presentations.
CrossCheckReport cross_check(const TowerSpec& spec, const Presentation& ordinary, const Presentation& equivariant,
                             const GroebnerOptions& options = {});

}  // namespace flagbott

#endif  // FLAGBOTT_ORACLE_HPP
