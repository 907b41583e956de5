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

#ifndef FLAGBOTT_ROOTDATA_HPP
#define FLAGBOTT_ROOTDATA_HPP

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagbott/coefficient.hpp"
#include "flagbott/polynomial.hpp"
#include "flagbott/series.hpp"

namespace flagbott {

enum class LieType : std::uint8_t { U, SU, Sp, G2 };

/// A compact connected group of one of the supported types.
/// `size` is the number in the tag: U:<n+1>, SU:<n+1>, Sp:<n>; 2 for G2.
struct GroupSpec {
    LieType type = LieType::U;
    int size = 1;

    static GroupSpec unitary(int n_plus_1);
    static GroupSpec special_unitary(int n_plus_1);
    static GroupSpec symplectic(int n);
    static GroupSpec g2() { return {LieType::G2, 2}; }
    /// "U:3", "SU:2", "Sp:3", "G2"
    static GroupSpec parse(std::string_view tag);

    /// Dimension of the maximal torus.
    int rank() const noexcept;
    /// Number of y-coordinates used to model the torus. Differs from rank()
    /// only for SU, which carries n+1 coordinates subject to e_1 = 0.
    int coordinate_count() const noexcept;
    std::string tag() const;
    std::string name() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

std::set<std::uint32_t> torsion_primes(const GroupSpec& g);
bool admissible_coefficients(std::span<const GroupSpec> groups, const CoefficientRing& ring);
/// Throws InadmissibleCoefficients naming the offending group and prime.
void require_admissible(std::span<const GroupSpec> groups, const CoefficientRing& ring);

using IntVector = std::vector<std::int64_t>;

/// Small dense integer matrix, row-major. Weyl group elements act on
/// character vectors by left multiplication; column k is the image of y_k.
class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0) {}
    IntMatrix(int rows, int cols, std::vector<std::int64_t> row_major);
    static IntMatrix identity(int n);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::int64_t& operator()(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    std::int64_t operator()(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
    const std::vector<std::int64_t>& data() const noexcept { return data_; }

    IntVector apply(const IntVector& v) const;
    IntMatrix transposed() const;
    bool is_zero() const noexcept;
    std::string to_string() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

   private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> data_;
};

struct RootDatum {
    GroupSpec group;
    /// Roots are characters written in the y-coordinates.
    std::vector<IntVector> positive_roots;
    std::vector<IntVector> simple_roots;
    std::vector<IntMatrix> simple_reflections;
    std::vector<int> weyl_degrees;
    /// W-invariant symmetric form on characters, used to build reflections.
    IntMatrix form;
};

/// Cached; safe to call concurrently.
const RootDatum& root_datum(const GroupSpec& g);
IntMatrix reflection(const RootDatum& rd, const IntVector& root);
bool is_root(const RootDatum& rd, const IntVector& v);
std::int64_t pairing(const IntVector& cocharacter, const IntVector& character);

/// All Weyl group elements, identity first, in breadth-first order.
/// Throws DomainError when the rank exceeds `rank_bound`.
std::vector<IntMatrix> weyl_elements(const RootDatum& rd, int rank_bound = 6);
/// Number of positive roots sent to negative roots.
int weyl_length(const RootDatum& rd, const IntMatrix& w);
/// sum_w t^{2 l(w)}; throws ConsistencyError if it disagrees with the Weyl degrees.
GradedSeries weyl_poincare(const RootDatum& rd);

/// Action of a Weyl element on polynomials in y[stage, *].
Polynomial weyl_act(const IntMatrix& w, const Polynomial& p, int stage);

/// Generators of R[y]^{W(K)} in y[stage, 1..coordinate_count].
std::vector<Polynomial> fundamental_invariants(const GroupSpec& g, CoefficientRing ring, int stage = 1);

struct CentralizerSpec {
    GroupSpec group;
    IntVector cocharacter;
};

/// Maximal-torus centralizer: a cocharacter pairing to zero with no root.
CentralizerSpec torus_centralizer(const GroupSpec& g);

/// Irreducible piece of W(Z) acting on a block of coordinates (0-based).
/// Type A permutes s_i * y_i; type C acts by signed permutations.
struct Block {
    enum class Kind : std::uint8_t { A, C };
    Kind kind = Kind::A;
    std::vector<int> coordinates;
    std::vector<int> signs;

    std::size_t size() const noexcept { return coordinates.size(); }
};

struct FactorStructure {
    bool supported = true;
    std::string note;
    std::vector<Block> blocks;

    /// e.g. "A1 x A0 x C2"; "unsupported: <note>" otherwise.
    std::string describe() const;
    std::size_t group_order() const;
};

struct ReflectionSubgroup {
    std::vector<IntMatrix> generators;
    std::vector<IntMatrix> elements;
    FactorStructure factors;
    /// Positive roots of K orthogonal to the cocharacter.
    std::vector<IntVector> roots;
};

ReflectionSubgroup centralizer_weyl(const CentralizerSpec& c);

/// Generators of R[y]^{W(Z)} as polynomials in y[stage, *]; throws
/// UnsupportedCentralizer when the factor structure is not block type A/C.
std::vector<Polynomial> invariant_generators(const ReflectionSubgroup& w, CoefficientRing ring, int stage = 1);

/// A named generator of H*(BZ) together with its value in y[stage, *].
struct InvariantGenerator {
    Variable symbol;
    Polynomial value;
};

/// Per block: singletons of type A keep their y-variable; larger A blocks get
/// e[stage,b,k]; C blocks get q[stage,b,k].
std::vector<InvariantGenerator> block_generators(const FactorStructure& f, int stage, CoefficientRing ring);

/// Expresses a W(Z)-invariant polynomial in the block generator symbols.
/// Variables other than y[stage, *] are treated as coefficients.
/// Throws NotInvariant when `p` is not block-symmetric.
Polynomial rewrite_invariant(const Polynomial& p, const FactorStructure& f, int stage);

}  // namespace flagbott

#endif  // FLAGBOTT_ROOTDATA_HPP
