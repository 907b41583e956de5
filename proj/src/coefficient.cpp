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

#include "flagbott/coefficient.hpp"

#include <charconv>

#include "flagbott/errors.hpp"

namespace flagbott {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

CoefficientRing CoefficientRing::prime_field(std::uint32_t p) {
    if (!is_prime(p)) throw DomainError("F_p requires a prime p, got " + std::to_string(p));
    return CoefficientRing(Kind::PrimeField, p);
}

CoefficientRing CoefficientRing::parse(std::string_view tag) {
    if (tag == "Z") return integers();
    if (tag == "Q") return rationals();
    if (tag.starts_with("Fp:")) {
        std::uint32_t p = 0;
        auto body = tag.substr(3);
        auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
        if (ec != std::errc() || ptr != body.data() + body.size() || body.empty())
            throw DomainError("malformed prime field tag '" + std::string(tag) + "'");
        return prime_field(p);
    }
    throw DomainError("unknown coefficient ring '" + std::string(tag) + "'");
}

std::string CoefficientRing::tag() const {
    switch (kind_) {
        case Kind::Integers:
            return "Z";
        case Kind::Rationals:
            return "Q";
        case Kind::PrimeField:
            return "Fp:" + std::to_string(p_);
    }
    return {};
}

std::string CoefficientRing::display_name() const {
    switch (kind_) {
        case Kind::Integers:
            return "ZZ";
        case Kind::Rationals:
            return "QQ";
        case Kind::PrimeField:
            return "GF(" + std::to_string(p_) + ")";
    }
    return {};
}

bool CoefficientRing::inverts(std::uint32_t q) const noexcept {
    switch (kind_) {
        case Kind::Integers:
            return false;
        case Kind::Rationals:
            return true;
        case Kind::PrimeField:
            return q != p_;
    }
    return false;
}

Scalar CoefficientRing::normalize(const Scalar& raw) const {
    // Values built from a numerator/denominator pair need not be reduced.
    Scalar value = raw;
    if (value.get_den() != 1) value.canonicalize();
    switch (kind_) {
        case Kind::Integers:
            if (value.get_den() != 1) throw DomainError("non-integral coefficient over Z: " + value.get_str());
            return value;
        case Kind::Rationals:
            return value;
        case Kind::PrimeField: {
            mpz_class m(p_);
            mpz_class num = value.get_num() % m;
            if (num < 0) num += m;
            if (value.get_den() == 1) return Scalar(num);
            mpz_class den = value.get_den() % m;
            if (den == 0) throw DomainError("denominator divisible by " + std::to_string(p_));
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
            mpz_class r = (num * inv) % m;
            return Scalar(r);
        }
    }
    return value;
}

Scalar CoefficientRing::inverse(const Scalar& value) const {
    if (value == 0) throw DomainError("division by zero");
    switch (kind_) {
        case Kind::Integers:
            if (value == 1 || value == -1) return value;
            throw DomainError("non-unit " + value.get_str() + " has no inverse over Z");
        case Kind::Rationals:
            return Scalar(1) / value;
        case Kind::PrimeField: {
            mpz_class m(p_), inv;
            mpz_class v = normalize(value).get_num();
            mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
            return Scalar(inv);
        }
    }
    return value;
}

Scalar CoefficientRing::display_value(const Scalar& value) const {
    if (kind_ != Kind::PrimeField) return value;
    Scalar v = normalize(value);
    if (2 * v > Scalar(p_)) v -= p_;
    return v;
}

}  // namespace flagbott
