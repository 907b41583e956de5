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

#include "flagbott/series.hpp"

#include <algorithm>
#include <map>

#include "flagbott/errors.hpp"

namespace flagbott {

namespace {

void trim(TPolynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

TPolynomial one_minus(int d) {
    TPolynomial p(static_cast<std::size_t>(d) + 1, 0);
    p[0] += 1;
    p[static_cast<std::size_t>(d)] -= 1;
    trim(p);
    return p;
}

std::string render_tpoly(const TPolynomial& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto c = p[i];
        if (c == 0) continue;
        auto mag = c < 0 ? -c : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (i == 0) {
            out += std::to_string(mag);
            continue;
        }
        if (mag != 1) out += std::to_string(mag);
        out += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace

TPolynomial tpoly_mul(const TPolynomial& a, const TPolynomial& b) {
    if (a.empty() || b.empty()) return {};
    TPolynomial out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

std::optional<TPolynomial> tpoly_divide(const TPolynomial& dividend, const TPolynomial& divisor) {
    TPolynomial rem = dividend;
    trim(rem);
    TPolynomial d = divisor;
    trim(d);
    if (d.empty()) throw DomainError("division by the zero polynomial");
    if (rem.empty()) return TPolynomial{};
    if (rem.size() < d.size()) return std::nullopt;
    TPolynomial quotient(rem.size() - d.size() + 1, 0);
    auto lead = d.back();
    for (std::size_t k = quotient.size(); k-- > 0;) {
        auto top = rem[k + d.size() - 1];
        if (top % lead != 0) return std::nullopt;
        auto q = top / lead;
        quotient[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
    }
    trim(rem);
    if (!rem.empty()) return std::nullopt;
    trim(quotient);
    return quotient;
}

TPolynomial tpoly_geometric(int count, int step) {
    if (count <= 0) return {};
    TPolynomial p(static_cast<std::size_t>((count - 1) * step) + 1, 0);
    for (int i = 0; i < count; ++i) p[static_cast<std::size_t>(i * step)] = 1;
    return p;
}

GradedSeries::GradedSeries(TPolynomial numerator, std::vector<int> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    trim(numerator_);
    for (int d : denominator_)
        if (d <= 0) throw DomainError("denominator degrees must be positive");
    std::sort(denominator_.begin(), denominator_.end());
}

GradedSeries GradedSeries::simplified() const {
    GradedSeries out = *this;
    std::vector<int> kept;
    for (int d : denominator_) {
        if (auto q = tpoly_divide(out.numerator_, one_minus(d)))
            out.numerator_ = *q;
        else
            kept.push_back(d);
    }
    out.denominator_ = std::move(kept);
    return out;
}

std::optional<TPolynomial> GradedSeries::as_polynomial() const {
    auto s = simplified();
    if (!s.denominator_.empty()) return std::nullopt;
    return s.numerator_;
}

std::int64_t GradedSeries::coefficient(int degree) const {
    if (degree < 0) return 0;
    // Multiply the numerator by each 1/(1 - t^d) truncated at `degree`.
    std::vector<std::int64_t> series(static_cast<std::size_t>(degree) + 1, 0);
    for (std::size_t i = 0; i < numerator_.size() && i <= static_cast<std::size_t>(degree); ++i) series[i] = numerator_[i];
    for (int d : denominator_)
        for (std::size_t i = static_cast<std::size_t>(d); i < series.size(); ++i) series[i] += series[i - static_cast<std::size_t>(d)];
    return series.back();
}

GradedSeries GradedSeries::times_one_minus(int d, int power) const {
    GradedSeries out = *this;
    for (int i = 0; i < power; ++i) out.numerator_ = tpoly_mul(out.numerator_, one_minus(d));
    return out.simplified();
}

bool GradedSeries::is_palindromic() const {
    auto p = as_polynomial();
    if (!p || p->empty()) return false;
    std::size_t lo = 0;
    while ((*p)[lo] == 0) ++lo;
    for (std::size_t i = lo, j = p->size() - 1; i < j; ++i, --j)
        if ((*p)[i] != (*p)[j]) return false;
    return true;
}

std::int64_t GradedSeries::at_one() const {
    auto p = as_polynomial();
    if (!p) throw DomainError("series " + to_string() + " is not a polynomial");
    std::int64_t sum = 0;
    for (auto c : *p) sum += c;
    return sum;
}

std::string GradedSeries::to_string() const {
    auto s = simplified();
    if (s.denominator_.empty()) return render_tpoly(s.numerator_);
    std::map<int, int> counts;
    for (int d : s.denominator_) ++counts[d];
    std::string den;
    for (auto [d, k] : counts) {
        den += "(1 - t^" + std::to_string(d) + ")";
        if (k > 1) den += "^" + std::to_string(k);
    }
    return "(" + render_tpoly(s.numerator_) + ")/" + (counts.size() == 1 && counts.begin()->second == 1 ? den : "(" + den + ")");
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    std::vector<int> den = a.denominator_;
    den.insert(den.end(), b.denominator_.begin(), b.denominator_.end());
    return GradedSeries(tpoly_mul(a.numerator_, b.numerator_), std::move(den)).simplified();
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
    TPolynomial lhs = a.numerator_;
    for (int d : b.denominator_) lhs = tpoly_mul(lhs, one_minus(d));
    TPolynomial rhs = b.numerator_;
    for (int d : a.denominator_) rhs = tpoly_mul(rhs, one_minus(d));
    return lhs == rhs;
}

std::optional<int> first_divergence(const GradedSeries& a, const GradedSeries& b, int max_degree) {
    for (int d = 0; d <= max_degree; ++d)
        if (a.coefficient(d) != b.coefficient(d)) return d;
    return std::nullopt;
}

}  // namespace flagbott
