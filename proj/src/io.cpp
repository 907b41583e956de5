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

#include "flagbott/io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <vector>

#include "flagbott/errors.hpp"

namespace flagbott {

namespace {

struct Token {
    enum class Kind { Word, Int, Open, Close, Comma, Semicolon, Equals, Newline, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, column = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        i += n;
        column += static_cast<int>(n);
    };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            out.push_back({Token::Kind::Newline, "\n", line, column});
            ++i;
            ++line;
            column = 1;
        } else if (ch == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
        } else if (ch == '[' || ch == ']' || ch == ',' || ch == ';' || ch == '=') {
            auto kind = ch == '['   ? Token::Kind::Open
                        : ch == ']' ? Token::Kind::Close
                        : ch == ',' ? Token::Kind::Comma
                        : ch == ';' ? Token::Kind::Semicolon
                                    : Token::Kind::Equals;
            out.push_back({kind, std::string(1, ch), line, column});
            advance(1);
        } else if (ch == '-' || ch == '+' || std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i + 1 && !std::isdigit(static_cast<unsigned char>(ch)))
                throw ParseError(line, column, std::string("expected a digit after '") + ch + "'");
            out.push_back({Token::Kind::Int, std::string(text.substr(i, j - i)), line, column});
            advance(j - i);
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t j = i + 1;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == ':' || text[j] == '_'))
                ++j;
            out.push_back({Token::Kind::Word, std::string(text.substr(i, j - i)), line, column});
            advance(j - i);
        } else {
            throw ParseError(line, column, std::string("unexpected character '") + ch + "'");
        }
    }
    out.push_back({Token::Kind::End, "", line, column});
    return out;
}

std::string describe(const Token& t) {
    switch (t.kind) {
        case Token::Kind::Newline: return "end of line";
        case Token::Kind::End: return "end of file";
        default: return "'" + t.text + "'";
    }
}

template <class Fn>
auto guarded(const Token& t, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const Error& e) {
        throw ParseError(t.line, t.column, e.what());
    }
}

struct PendingMatrix {
    int l;
    int j;
    std::vector<std::vector<std::int64_t>> rows;
    Token at;
};

class SpecParser {
   public:
    explicit SpecParser(std::string_view text) : tokens_(tokenize(text)) {}

    TowerSpec parse() {
        TowerSpec spec;
        bool ring_seen = false;
        std::vector<PendingMatrix> matrices;
        while (peek().kind != Token::Kind::End) {
            if (peek().kind == Token::Kind::Newline) {
                next();
                continue;
            }
            Token head = expect(Token::Kind::Word, "a statement keyword");
            if (head.text == "ring") {
                if (ring_seen) throw ParseError(head.line, head.column, "ring given twice");
                ring_seen = true;
                Token tag = expect(Token::Kind::Word, "a coefficient ring (Z, Q or Fp:<p>)");
                spec.ring = guarded(tag, [&] { return CoefficientRing::parse(tag.text); });
            } else if (head.text == "stage") {
                Token tag = next();
                if (tag.kind != Token::Kind::Word)
                    throw ParseError(tag.line, tag.column, "expected a group tag, found " + describe(tag));
                GroupSpec g = guarded(tag, [&] { return GroupSpec::parse(tag.text); });
                CentralizerSpec z = torus_centralizer(g);
                if (peek().kind == Token::Kind::Word && peek().text == "torus") {
                    next();
                } else if (peek().kind == Token::Kind::Open) {
                    Token open = peek();
                    auto v = vector();
                    if (v.size() != static_cast<std::size_t>(g.coordinate_count()))
                        throw ParseError(open.line, open.column,
                                         "cocharacter of " + g.name() + " needs " +
                                             std::to_string(g.coordinate_count()) + " entries, got " +
                                             std::to_string(v.size()));
                    z.cocharacter = v;
                }
                spec.stages.push_back({g, z});
            } else if (head.text == "matrix") {
                Token lt = expect(Token::Kind::Int, "a target stage number");
                Token jt = expect(Token::Kind::Int, "a source stage number");
                expect(Token::Kind::Equals, "'='");
                Token open = peek();
                matrices.push_back({static_cast<int>(to_int(lt)), static_cast<int>(to_int(jt)), rows(), open});
            } else {
                throw ParseError(head.line, head.column, "unknown keyword '" + head.text + "'");
            }
            Token end = next();
            if (end.kind != Token::Kind::Newline && end.kind != Token::Kind::End)
                throw ParseError(end.line, end.column, "expected end of line, found " + describe(end));
            if (end.kind == Token::Kind::End) break;
        }

        for (const auto& m : matrices) {
            if (m.l < 1 || m.l > spec.size() || m.j < 1 || m.j >= m.l)
                throw ParseError(m.at.line, m.at.column,
                                 "matrix " + std::to_string(m.l) + " " + std::to_string(m.j) +
                                     " must satisfy 1 <= j < l <= " + std::to_string(spec.size()));
            if (spec.connections.contains({m.l, m.j}))
                throw ParseError(m.at.line, m.at.column, "matrix given twice");
            int want_rows = spec.stages[static_cast<std::size_t>(m.l - 1)].group.coordinate_count();
            int want_cols = spec.stages[static_cast<std::size_t>(m.j - 1)].group.coordinate_count();
            std::vector<std::int64_t> flat;
            if (m.rows.size() == 1) {
                flat = m.rows.front();
            } else {
                for (const auto& r : m.rows) {
                    if (static_cast<int>(r.size()) != want_cols)
                        throw ParseError(m.at.line, m.at.column,
                                         "matrix " + std::to_string(m.l) + " " + std::to_string(m.j) + " rows need " +
                                             std::to_string(want_cols) + " entries, got " + std::to_string(r.size()));
                    flat.insert(flat.end(), r.begin(), r.end());
                }
            }
            if (flat.size() != static_cast<std::size_t>(want_rows * want_cols))
                throw ParseError(m.at.line, m.at.column,
                                 "matrix " + std::to_string(m.l) + " " + std::to_string(m.j) + " must be " +
                                     std::to_string(want_rows) + "x" + std::to_string(want_cols) + " (" +
                                     std::to_string(want_rows * want_cols) + " entries), got " +
                                     std::to_string(flat.size()) + " entries");
            spec.connections.emplace(std::make_pair(m.l, m.j), IntMatrix(want_rows, want_cols, std::move(flat)));
        }
        return spec;
    }

   private:
    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    /// Newlines inside brackets are layout only.
    Token next_in_brackets() {
        while (peek().kind == Token::Kind::Newline) next();
        return next();
    }

    Token expect(Token::Kind kind, const std::string& what) {
        Token t = next();
        if (t.kind != kind) throw ParseError(t.line, t.column, "expected " + what + ", found " + describe(t));
        return t;
    }

    static std::int64_t to_int(const Token& t) {
        std::int64_t v = 0;
        const char* first = t.text.data() + (t.text.front() == '+' ? 1 : 0);
        auto [ptr, ec] = std::from_chars(first, t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size())
            throw ParseError(t.line, t.column, "integer out of range: " + t.text);
        return v;
    }

    std::vector<std::vector<std::int64_t>> rows() {
        Token open = next_in_brackets();
        if (open.kind != Token::Kind::Open) throw ParseError(open.line, open.column, "expected '[', found " + describe(open));
        std::vector<std::vector<std::int64_t>> out(1);
        bool want_value = true;
        while (true) {
            Token t = next_in_brackets();
            if (want_value) {
                if (t.kind == Token::Kind::Close && out.size() == 1 && out.front().empty()) return {{}};
                if (t.kind != Token::Kind::Int) throw ParseError(t.line, t.column, "expected an integer, found " + describe(t));
                out.back().push_back(to_int(t));
                want_value = false;
                continue;
            }
            if (t.kind == Token::Kind::Close) return out;
            if (t.kind == Token::Kind::Comma) {
                want_value = true;
            } else if (t.kind == Token::Kind::Semicolon) {
                out.emplace_back();
                want_value = true;
            } else {
                throw ParseError(t.line, t.column, "expected ',', ';' or ']', found " + describe(t));
            }
        }
    }

    IntVector vector() {
        Token open = peek();
        auto r = rows();
        if (r.size() != 1) throw ParseError(open.line, open.column, "a cocharacter is a single row");
        return r.front();
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

std::string join_ints(const std::vector<std::int64_t>& v, std::size_t from, std::size_t count) {
    std::string out;
    for (std::size_t i = 0; i < count; ++i) {
        if (i) out += ", ";
        out += std::to_string(v[from + i]);
    }
    return out;
}

}  // namespace

TowerSpec parse_tower_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string format_tower_spec(const TowerSpec& spec) {
    std::ostringstream out;
    out << "ring " << spec.ring.tag() << "\n";
    for (const auto& st : spec.stages)
        out << "stage " << st.group.tag() << " ["
            << join_ints(st.centralizer.cocharacter, 0, st.centralizer.cocharacter.size()) << "]\n";
    for (const auto& [key, a] : spec.connections) {
        out << "matrix " << key.first << " " << key.second << " = [";
        for (int r = 0; r < a.rows(); ++r) {
            if (r) out << "; ";
            out << join_ints(a.data(), static_cast<std::size_t>(r * a.cols()), static_cast<std::size_t>(a.cols()));
        }
        out << "]\n";
    }
    return out.str();
}

TermOrder parse_term_order(std::string_view name) {
    if (name == "grevlex") return TermOrder::Grevlex;
    if (name == "lex") return TermOrder::Lex;
    throw DomainError("unknown term order '" + std::string(name) + "' (expected grevlex or lex)");
}

std::string term_order_name(TermOrder order) { return order == TermOrder::Lex ? "lex" : "grevlex"; }

std::string render_text(const Presentation& p, TermOrder order) {
    std::ostringstream out;
    out << "# " << p.label << "\n";
    out << "ring: " << p.ring.display_name() << "\n";
    out << "generators (" << p.generators.size() << "):";
    for (const auto& g : p.generators) out << " " << g.var.name() << ":" << g.degree;
    out << "\n";
    out << "relations (" << p.relations.size() << "):\n";
    for (const auto& r : p.relations) out << "  " << r.to_string(order) << "\n";
    return out.str();
}

nlohmann::ordered_json presentation_to_json(const Presentation& p, TermOrder order) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["kind"] = "presentation";
    j["label"] = p.label;
    j["ring"] = p.ring.tag();
    j["order"] = term_order_name(order);
    auto gens = nlohmann::ordered_json::array();
    for (const auto& g : p.generators) {
        nlohmann::ordered_json e;
        e["name"] = g.var.name();
        e["degree"] = g.degree;
        gens.push_back(std::move(e));
    }
    j["generators"] = std::move(gens);
    auto rels = nlohmann::ordered_json::array();
    for (const auto& r : p.relations) rels.push_back(r.to_string(order));
    j["relations"] = std::move(rels);
    return j;
}

Presentation presentation_from_json(const nlohmann::ordered_json& j) {
    try {
        if (j.at("schema").get<int>() != 1) throw InvalidSpec("unsupported schema version");
        if (j.at("kind").get<std::string>() != "presentation") throw InvalidSpec("not a presentation document");
        Presentation p;
        p.ring = CoefficientRing::parse(j.at("ring").get<std::string>());
        p.label = j.at("label").get<std::string>();
        for (const auto& g : j.at("generators"))
            p.generators.push_back({parse_variable(g.at("name").get<std::string>()), g.at("degree").get<int>()});
        for (const auto& r : j.at("relations")) p.relations.push_back(parse_polynomial(r.get<std::string>(), p.ring));
        p.validate();
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpec(std::string("malformed presentation document: ") + e.what());
    } catch (const DomainError& e) {
        throw InvalidSpec(std::string("malformed presentation document: ") + e.what());
    }
}

std::string render_machine(const Presentation& p, TermOrder order) {
    return presentation_to_json(p, order).dump(2) + "\n";
}

}  // namespace flagbott
