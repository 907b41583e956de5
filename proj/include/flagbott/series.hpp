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

#ifndef FLAGBOTT_SERIES_HPP
#define FLAGBOTT_SERIES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace flagbott {

/// Integer polynomial in t, dense, index = exponent. Trailing zeros trimmed.
using TPolynomial = std::vector<std::int64_t>;

TPolynomial tpoly_mul(const TPolynomial& a, const TPolynomial& b);
/// Exact division in Z[t]; nullopt when the divisor does not divide.
std::optional<TPolynomial> tpoly_divide(const TPolynomial& dividend, const TPolynomial& divisor);
/// 1 + t^step + t^(2 step) + ... + t^((count-1) step)
TPolynomial tpoly_geometric(int count, int step);

/// Generating function of graded ranks, N(t) / prod_i (1 - t^{d_i}).
/// Exponents of t are cohomological degrees, so they are even in practice.
class GradedSeries {
   public:
    GradedSeries() : numerator_{1} {}
    explicit GradedSeries(TPolynomial numerator, std::vector<int> denominator = {});

    static GradedSeries one() { return GradedSeries(); }

    const TPolynomial& numerator() const noexcept { return numerator_; }
    /// Degrees d of the (1 - t^d) factors, sorted ascending.
    const std::vector<int>& denominator() const noexcept { return denominator_; }

    /// Cancels every denominator factor that divides the numerator.
    GradedSeries simplified() const;
    bool is_polynomial() const { return simplified().denominator_.empty(); }
    /// The polynomial this series equals, if it is one.
    std::optional<TPolynomial> as_polynomial() const;
    /// Coefficient of t^degree in the power-series expansion.
    std::int64_t coefficient(int degree) const;
    GradedSeries times_one_minus(int d, int power = 1) const;

    /// True when finite and palindromic.
    bool is_palindromic() const;
    /// Value at t = 1; requires a polynomial.
    std::int64_t at_one() const;

    std::string to_string() const;

    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    /// Equality as rational functions.
    friend bool operator==(const GradedSeries& a, const GradedSeries& b);

   private:
    TPolynomial numerator_;
    std::vector<int> denominator_;
};

/// Smallest degree at which the expansions differ, scanning up to max_degree.
std::optional<int> first_divergence(const GradedSeries& a, const GradedSeries& b, int max_degree);

}  // namespace flagbott

#endif  // FLAGBOTT_SERIES_HPP
