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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "canalyze/field.hpp"

namespace canalyze {

class AnfPolynomial;
class TableCursor;

/// Single-table operations refuse more than this many points.
inline constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 24;
/// Exhaustive enumeration refuses more than this many functions.
inline constexpr std::uint64_t kMaxFunctions = std::uint64_t{1} << 40;

/// q^n, throwing SizeLimitExceeded above kMaxPoints.
std::size_t point_count(int q, int n);

/// Coordinates (x_1, ..., x_n) as element codes.
using Point = std::vector<Element>;

/// Little-endian base-q index, x_1 fastest varying. Shared by points and
/// exponent tuples.
std::size_t point_index(int q, std::span<const Element> coords);
Point point_at(int q, int n, std::size_t index);

/// Values of a function F_q^n -> F_q in canonical point order.
class TruthTable {
   public:
    /// Validates the length (q^n) and every code.
    TruthTable(Field field, int n, std::vector<Element> values);

    static TruthTable constant(Field field, int n, Element b);

    const Field& field() const noexcept { return field_; }
    int arity() const noexcept { return n_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::span<const Element> values() const noexcept { return values_; }
    Element operator[](std::size_t index) const noexcept { return values_[index]; }
    Element at(std::span<const Element> point) const;

    bool is_constant() const noexcept;

    friend bool operator==(const TruthTable& lhs, const TruthTable& rhs) {
        return lhs.field_ == rhs.field_ && lhs.n_ == rhs.n_ && lhs.values_ == rhs.values_;
    }

   private:
    TruthTable(Field field, int n, std::vector<Element> values, bool /*trusted*/)
        : field_(std::move(field)), n_(n), values_(std::move(values)) {}

    Field field_;
    int n_;
    std::vector<Element> values_;

    friend class TableCursor;
    friend TruthTable restrict(const TruthTable&, int, Element);
    friend TruthTable anf_to_table(const AnfPolynomial&);
};

struct Term {
    Element coeff;
    std::vector<int> exps;
};

/// Algebraic normal form: coefficient of x_1^k_1 ... x_n^k_n stored at the
/// index of (k_1, ..., k_n), every k_i in [0, q-1]. The representation is
/// unique, so equality is coefficient-wise.
class AnfPolynomial {
   public:
    AnfPolynomial(Field field, int n, std::vector<Element> coeffs);

    static AnfPolynomial zero(Field field, int n);
    static AnfPolynomial constant(Field field, int n, Element b);
    /// Terms with equal exponents are summed.
    static AnfPolynomial from_terms(Field field, int n, std::span<const Term> terms);

    const Field& field() const noexcept { return field_; }
    int arity() const noexcept { return n_; }
    std::size_t size() const noexcept { return coeffs_.size(); }
    std::span<const Element> coeffs() const noexcept { return coeffs_; }
    Element operator[](std::size_t index) const noexcept { return coeffs_[index]; }
    Element coeff(std::span<const int> exps) const;

    bool is_zero() const noexcept;

    /// Nonzero terms in index order.
    std::vector<Term> terms() const;

    friend bool operator==(const AnfPolynomial& lhs, const AnfPolynomial& rhs) {
        return lhs.field_ == rhs.field_ && lhs.n_ == rhs.n_ && lhs.coeffs_ == rhs.coeffs_;
    }

   private:
    Field field_;
    int n_;
    std::vector<Element> coeffs_;
};

Element evaluate(const AnfPolynomial& f, std::span<const Element> point);

TruthTable anf_to_table(const AnfPolynomial& f);

/// Interpolates one axis at a time with the inverse Vandermonde matrix of
/// the field elements; O(n q^(n+1)).
AnfPolynomial table_to_anf(const TruthTable& t);

/// Largest total degree over nonzero terms; -1 for the zero polynomial.
int degree(const AnfPolynomial& f);

/// Largest exponent of x_i (1-based) over nonzero terms; -1 for zero.
int degree_in_variable(const AnfPolynomial& f, int i);

/// Table of f with x_i fixed to a, on n-1 variables.
TruthTable restrict(const TruthTable& f, int i, Element a);

bool is_essential(const TruthTable& f, int i);

/// 1-based indices, ascending.
std::vector<int> essential_variables(const TruthTable& f);

/// Human-readable form such as "2*x1^3*x2 + 1"; "0" for zero.
std::string to_string(const AnfPolynomial& f);

/// The q^(q^n) functions on n variables, indexed so that index order is
/// the lexicographic order of value sequences.
class TableSpace {
   public:
    /// Throws SizeLimitExceeded when q^(q^n) > kMaxFunctions.
    TableSpace(Field field, int n);

    const Field& field() const noexcept { return field_; }
    int arity() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return size_; }

    TruthTable at(std::uint64_t index) const;

    /// Contiguous slice [begin, end) of the enumeration.
    TableCursor cursor(std::uint64_t begin, std::uint64_t end) const;
    TableCursor cursor() const;

   private:
    Field field_;
    int n_;
    std::uint64_t size_;
};

/// Walks a contiguous index range of a TableSpace:
///
///     for (auto c = space.cursor(); c.next();) use(c.table());
class TableCursor {
   public:
    TableCursor(const TableSpace& space, std::uint64_t begin, std::uint64_t end);

    bool next();
    const TruthTable& table() const noexcept { return table_; }
    std::uint64_t index() const noexcept { return index_; }

   private:
    TruthTable table_;
    std::uint64_t index_;
    std::uint64_t end_;
    bool started_ = false;
};

}  // namespace canalyze
