/*
   Copyright 2026 The canalyze Authors

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

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "canalyze/field.hpp"
#include "canalyze/function.hpp"

namespace canalyze {

/// <i:a:b>: fixing x_i (1-based) to a forces the output b.
struct CanalyzingTriple {
    int i;
    Element a;
    Element b;

    friend auto operator<=>(const CanalyzingTriple&, const CanalyzingTriple&) = default;
};

/// Which components of a family are fixed. Names list the fixed parts.
enum class FamilyShape {
    kVarInputOutput,  // C^i_{a,b}
    kVarInput,        // C^i_{a,*}
    kVarOutput,       // C^i_{*,b}
    kInputOutput,     // C^*_{a,b}
    kInput,           // C^*_{a,*}
    kOutput,          // C^*_{*,b}
    kVar,             // C^i_{*,*}
    kNone,            // C^*_{*,*}
};

inline constexpr std::array<FamilyShape, 8> kAllShapes = {
    FamilyShape::kVarInputOutput, FamilyShape::kVarInput, FamilyShape::kVarOutput, FamilyShape::kInputOutput,
    FamilyShape::kInput,          FamilyShape::kOutput,   FamilyShape::kVar,       FamilyShape::kNone,
};

/// "C^i_{a,b}" style notation.
std::string_view notation(FamilyShape shape);

/// A canalyzing family: each of variable, input and output is either fixed
/// or free. Serialized as `i=<k|*>,a=<c|*>,b=<c|*>`.
struct FamilySpec {
    std::optional<int> var;
    std::optional<Element> input;
    std::optional<Element> output;

    /// Throws ParseError on malformed text.
    static FamilySpec parse(std::string_view text);

    /// The family of the given shape with fixed parts i=1, a=0, b=0.
    static FamilySpec representative(FamilyShape shape);

    FamilyShape shape() const noexcept;
    bool fully_fixed() const noexcept { return var && input && output; }
    std::string to_string() const;

    /// Throws DimensionMismatch if a fixed part is out of range for (q, n).
    void validate(int q, int n) const;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// restrict(f, i, a) is the constant-b table.
bool is_canalyzing(const TruthTable& f, int i, Element a, Element b);

/// Every <i:a:b> that f satisfies, sorted by (i, a, b).
std::vector<CanalyzingTriple> canalyzing_triples(const TruthTable& f);

/// True iff some triple of f agrees with every fixed part of spec.
bool member(const TruthTable& f, const FamilySpec& spec);

/// Divides the ANF of f - b by (x_i - a) along axis i. Returns the quotient
/// Q (deg_i Q <= q-2) when the remainder vanishes, i.e. when
/// f = (x_i - a) Q + b.
std::optional<AnfPolynomial> try_decompose(const TruthTable& f, int i, Element a, Element b);

/// As try_decompose, but throws NotCanalyzing on a nonzero remainder.
AnfPolynomial decompose(const TruthTable& f, int i, Element a, Element b);

/// Table of (x_i - a) Q + b. Q must satisfy deg_i Q <= q-2.
TruthTable canalyzing_from_quotient(const AnfPolynomial& quotient, int i, Element a, Element b);

/// SplitMix64 output number t of a generator seeded with seed.
std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t t);

/// Uniform member of C^i_{a,b}: the admissible coefficients of Q (exponent
/// of x_i at most q-2, ascending index order) are counter_hash(seed, t) mod
/// q for t = stream*M, ..., stream*M + M - 1, with M = (q-1) q^(n-1).
/// spec must be fully fixed.
TruthTable sample(const Field& field, int n, const FamilySpec& spec, std::uint64_t seed, std::uint64_t stream = 0);

struct InputOutput {
    Element a;
    Element b;
};

/// Newton-form coefficients A_0 = b_1, ..., A_{k-1} of the one-variable
/// interpolant through the pairs, solved by forward substitution.
std::vector<Element> newton_coefficients(const Field& field, std::span<const InputOutput> pairs);

/// Table of Q prod_j (x_i - a_j) + sum_t A_t prod_{j<=t} (x_i - a_j), which
/// is <i:a_j:b_j> canalyzing for every pair. Requires distinct a_j,
/// 1 <= k <= q and deg_i Q <= q-k-1 (Q = 0 when k = q).
TruthTable construct_multi(int i, std::span<const InputOutput> pairs, const AnfPolynomial& quotient);

}  // namespace canalyze
