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


#ifndef FLAGBOTT_EXAMPLES_HPP
#define FLAGBOTT_EXAMPLES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "flagbott/tower.hpp"

namespace flagbott {

struct ExampleOptions {
    /// typeC: use zero connecting matrices.
    bool zero_matrices = false;
    /// hirzebruch: the twisting integer.
    int twist = 1;
};

struct ExampleResult {
    std::string text;
    bool passed = true;
};

/// u3-projective, full-flag, su2, typeC, g2-f3, hirzebruch.
const std::vector<std::string>& example_names();

/// Rebuilds a named worked example and the checks in scope for it.
/// Output is deterministic. Throws DomainError for an unknown name.
ExampleResult run_example(std::string_view name, const ExampleOptions& options = {});

/// Tower used by the typeC example: Sp(3), Sp(3), Sp(2) with maximal tori.
TowerSpec type_c_tower(bool zero_matrices = false);

/// Tower used by g2-f3: SU(4), Sp(3), G2 with maximal tori, over GF(3).
TowerSpec g2_tower();

}  // namespace flagbott

#endif  // FLAGBOTT_EXAMPLES_HPP
