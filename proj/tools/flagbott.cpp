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

// Command-line front end: present, check, example, render.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "flagbott/errors.hpp"
#include "flagbott/examples.hpp"
#include "flagbott/io.hpp"
#include "flagbott/oracle.hpp"
#include "flagbott/tower.hpp"

namespace {

using namespace flagbott;

enum Exit : int {
    Ok = 0,
    CheckFailed = 1,
    BadInput = 2,
    Unsupported = 3,
    Inadmissible = 4,
    Internal = 5,
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidSpec("cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

/// Prefix for positioned parse errors.
std::string current_file;

TowerSpec load_spec(const std::string& path, const std::string& coeff) {
    current_file = path == "-" ? "<stdin>" : path;
    TowerSpec spec = parse_tower_spec(slurp(path));
    if (!coeff.empty()) spec.ring = CoefficientRing::parse(coeff);
    spec.validate();
    return spec;
}

GroebnerOptions options_with(std::optional<std::size_t> budget) {
    GroebnerOptions options = GroebnerOptions::from_environment();
    if (budget) options.pair_budget = *budget;
    return options;
}

struct PresentArgs {
    std::string file;
    std::string mode = "equivariant";
    std::string out = "text";
    std::string coeff;
    std::string order = "grevlex";
    std::optional<std::size_t> budget;
    bool series = false;
};

int cmd_present(const PresentArgs& a) {
    TowerSpec spec = load_spec(a.file, a.coeff);
    TermOrder order = parse_term_order(a.order);
    Presentation p = a.mode == "ordinary"    ? ordinary_presentation(spec)
                     : a.mode == "effective" ? effective_presentation(spec)
                                             : equivariant_presentation(spec);
    std::optional<GradedSeries> series;
    if (a.series) series = p.hilbert_series(MonomialOrder::grevlex(), options_with(a.budget));
    if (a.out == "machine") {
        auto doc = presentation_to_json(p, order);
        if (series) doc["hilbert_series"] = series->to_string();
        std::cout << doc.dump(2) << "\n";
        return Ok;
    }
    std::cout << render_text(p, order);
    if (series)
        std::cout << "Hilbert series (over " << groebner_field(p.ring).display_name() << "): " << series->to_string()
                  << "\n";
    return Ok;
}

struct CheckArgs {
    std::string file;
    std::string out = "text";
    std::string coeff;
    std::optional<std::size_t> budget;
};

int cmd_check(const CheckArgs& a) {
    TowerSpec spec = load_spec(a.file, a.coeff);
    CrossCheckReport report = cross_check(spec, options_with(a.budget));
    if (a.out == "machine")
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_text();
    return report.passed() ? Ok : CheckFailed;
}

int cmd_example(const std::string& name, const ExampleOptions& options) {
    ExampleResult r = run_example(name, options);
    std::cout << r.text;
    return r.passed ? Ok : CheckFailed;
}

int cmd_render(const std::string& file, const std::string& out, const std::optional<std::string>& order_name) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(slurp(file));
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidSpec(std::string("not a JSON document: ") + e.what());
    }
    Presentation p = presentation_from_json(doc);
    std::string stored = doc.value("order", std::string("grevlex"));
    TermOrder order = parse_term_order(order_name ? *order_name : stored);
    std::cout << (out == "machine" ? render_machine(p, order) : render_text(p, order));
    return Ok;
}

int report(const char* kind, const std::exception& e, int code) {
    std::cerr << "flagbott: " << kind << ": " << e.what() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"flagbott: cohomology presentations of flag Bott towers"};
    app.require_subcommand(1);

    const std::vector<std::string> out_modes{"text", "machine"};
    const std::vector<std::string> orders{"grevlex", "lex"};

    PresentArgs present;
    auto* p = app.add_subcommand("present", "Print a presentation of the cohomology ring");
    p->add_option("file", present.file, "Tower-spec file, or - for stdin")->required();
    p->add_option("--mode", present.mode, "equivariant, ordinary or effective")
        ->check(CLI::IsMember({"equivariant", "ordinary", "effective"}));
    p->add_option("--out", present.out, "text or machine")->check(CLI::IsMember(out_modes));
    p->add_option("--coeff", present.coeff, "Override the coefficient ring (Z, Q, Fp:<p>)");
    p->add_option("--order", present.order, "Term order used for printing")->check(CLI::IsMember(orders));
    p->add_option("--budget", present.budget, "S-pair budget for Groebner computations");
    p->add_flag("--series", present.series, "Also print the Hilbert series");

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Compare the presentations with the Weyl group oracle");
    c->add_option("file", check.file, "Tower-spec file, or - for stdin")->required();
    c->add_option("--out", check.out, "text or machine")->check(CLI::IsMember(out_modes));
    c->add_option("--coeff", check.coeff, "Override the coefficient ring (Z, Q, Fp:<p>)");
    c->add_option("--budget", check.budget, "S-pair budget for Groebner computations");

    std::string example_name;
    ExampleOptions example_options;
    auto* x = app.add_subcommand("example", "Rebuild a worked example with its checks");
    x->add_option("name", example_name, "One of: u3-projective, full-flag, su2, typeC, g2-f3, hirzebruch")
        ->required()
        ->check(CLI::IsMember(example_names()));
    x->add_flag("--zero", example_options.zero_matrices, "typeC: use zero connecting matrices");
    x->add_option("--a", example_options.twist, "hirzebruch: twisting integer");

    std::string render_file;
    std::string render_out = "text";
    std::optional<std::string> render_order;
    auto* r = app.add_subcommand("render", "Re-render a machine-readable presentation");
    r->add_option("file", render_file, "JSON document, or - for stdin")->required();
    r->add_option("--out", render_out, "text or machine")->check(CLI::IsMember(out_modes));
    r->add_option("--order", render_order, "Term order; defaults to the one stored in the document")
        ->check(CLI::IsMember(orders));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : BadInput;
    }

    try {
        if (*p) return cmd_present(present);
        if (*c) return cmd_check(check);
        if (*x) return cmd_example(example_name, example_options);
        if (*r) return cmd_render(render_file, render_out, render_order);
    } catch (const UnsupportedCentralizer& e) {
        return report("error", e, Unsupported);
    } catch (const InadmissibleCoefficients& e) {
        return report("inadmissible coefficients", e, Inadmissible);
    } catch (const ParseError& e) {
        std::cerr << "flagbott: parse error: " << current_file << ":" << e.what() << "\n";
        return BadInput;
    } catch (const InvalidSpec& e) {
        return report("invalid input", e, BadInput);
    } catch (const DomainError& e) {
        return report("invalid input", e, BadInput);
    } catch (const std::exception& e) {
        return report("error", e, Internal);
    }
    return Internal;
}
