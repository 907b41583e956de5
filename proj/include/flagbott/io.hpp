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

#ifndef FLAGBOTT_IO_HPP
#define FLAGBOTT_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "flagbott/tower.hpp"

namespace flagbott {

/// Tower description file.
///
///   # comment
///   ring Z                       Z | Q | Fp:<p>, default Z
///   stage U:3 [1, 1, 2]          group tag, then a cocharacter or `torus`
///   stage G2 torus
///   matrix 2 1 = [1, 0, 0;       A^(l)_j, rows separated by `;`, may span
///                 0, 2, 0]       lines; absent matrices are zero
///
/// Errors carry the line and column of the offending token. Shapes are
/// checked against the stages; admissibility is left to TowerSpec::validate.
TowerSpec parse_tower_spec(std::string_view text);
/// Canonical file text; parse_tower_spec(format_tower_spec(s)) == s.
std::string format_tower_spec(const TowerSpec& spec);

/// Human-readable presentation.
std::string render_text(const Presentation& p, TermOrder order = TermOrder::Grevlex);

/// {"schema": 1, "kind": "presentation", ...}. Relations are stored as
/// polynomial text in `order`.
nlohmann::ordered_json presentation_to_json(const Presentation& p, TermOrder order = TermOrder::Grevlex);
Presentation presentation_from_json(const nlohmann::ordered_json& j);
/// Two-space indented JSON followed by a newline.
std::string render_machine(const Presentation& p, TermOrder order = TermOrder::Grevlex);

TermOrder parse_term_order(std::string_view name);
std::string term_order_name(TermOrder order);

}  // namespace flagbott

#endif  // FLAGBOTT_IO_HPP
