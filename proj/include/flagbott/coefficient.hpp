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

#ifndef FLAGBOTT_COEFFICIENT_HPP
#define FLAGBOTT_COEFFICIENT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace flagbott {

/// Exact scalar used for every coefficient. Integers and prime-field
/// residues are stored with denominator 1.
using Scalar = mpq_class;

/// One of Z, Q or F_p. Values are small and freely copyable.
class CoefficientRing {
   public:
    enum class Kind : std::uint8_t { Integers, Rationals, PrimeField };

    static CoefficientRing integers() noexcept { return CoefficientRing(Kind::Integers, 0); }
    static CoefficientRing rationals() noexcept { return CoefficientRing(Kind::Rationals, 0); }
    /// Throws DomainError unless p is prime.
    static CoefficientRing prime_field(std::uint32_t p);
    /// Accepts the tags produced by tag(): "Z", "Q", "Fp:<p>".
    static CoefficientRing parse(std::string_view tag);

    Kind kind() const noexcept { return kind_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    bool is_field() const noexcept { return kind_ != Kind::Integers; }
    std::string tag() const;
    std::string display_name() const;

    /// True iff the prime q is a unit of this ring.
    bool inverts(std::uint32_t q) const noexcept;

    /// Canonical representative: exact integer over Z, reduced fraction over
    /// Q, residue in [0, p) over F_p. Throws DomainError for a non-integral
    /// value over Z or a denominator divisible by p.
    Scalar normalize(const Scalar& value) const;
    Scalar inverse(const Scalar& value) const;
    /// Prime-field residues print in the symmetric range (-p/2, p/2].
    Scalar display_value(const Scalar& value) const;

    friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

   private:
    CoefficientRing(Kind kind, std::uint32_t p) noexcept : kind_(kind), p_(p) {}

    Kind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace flagbott

#endif  // FLAGBOTT_COEFFICIENT_HPP
