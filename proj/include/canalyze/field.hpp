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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace canalyze {

/// Canonical element code in [0, q). An element whose polynomial
/// representative is sum c_j x^j is encoded as sum c_j p^j; for prime
/// fields the code is the residue. Code 0 is zero, code 1 is one.
using Element = std::uint8_t;

/// Largest order for which arithmetic tables are built.
inline constexpr int kMaxFieldOrder = 256;

struct PrimePower {
    std::uint64_t p;
    int m;
};

bool is_prime(std::uint64_t n);

/// Returns (p, m) with q = p^m, or nullopt if q < 2 or q has two distinct
/// prime factors.
std::optional<PrimePower> factor_prime_power(std::uint64_t q);

/// GF(p^m) with precomputed q x q addition and multiplication tables.
///
/// Copies share the same immutable tables, so a Field is cheap to pass by
/// value and safe to use from several threads.
class Field {
   public:
    int characteristic() const noexcept { return tables_->p; }
    int degree() const noexcept { return tables_->m; }
    int order() const noexcept { return tables_->q; }

    /// Coefficients of the defining polynomial, constant term first,
    /// length m+1. Empty for prime fields.
    std::span<const int> modulus() const noexcept { return tables_->modulus; }

    bool contains(int code) const noexcept { return code >= 0 && code < order(); }

    Element add(Element x, Element y) const noexcept { return tables_->add[slot(x, y)]; }
    Element mul(Element x, Element y) const noexcept { return tables_->mul[slot(x, y)]; }
    Element neg(Element x) const noexcept { return tables_->neg[x]; }
    Element sub(Element x, Element y) const noexcept { return add(x, neg(y)); }

    /// Throws DivisionByZero for x = 0.
    Element inv(Element x) const;
    Element div(Element x, Element y) const { return mul(x, inv(y)); }

    /// x^e with x^0 = 1 for every x, including 0.
    Element pow(Element x, std::uint64_t e) const noexcept;

    /// Base-p digits of the code (length m), constant coefficient first.
    std::vector<int> decode(Element x) const;
    Element encode(std::span<const int> coefficients) const;

    friend bool operator==(const Field& lhs, const Field& rhs) noexcept {
        return lhs.order() == rhs.order();
    }

   private:
    struct Tables {
        int p = 0;
        int m = 0;
        int q = 0;
        std::vector<int> modulus;
        std::vector<Element> add;
        std::vector<Element> mul;
        std::vector<Element> neg;
        std::vector<Element> inv;
    };

    explicit Field(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}
    std::size_t slot(Element x, Element y) const noexcept {
        return static_cast<std::size_t>(x) * static_cast<std::size_t>(tables_->q) + y;
    }

    std::shared_ptr<const Tables> tables_;

    friend Field make_field(int q);
};

/// Builds GF(q). For m > 1 the modulus is the monic irreducible polynomial
/// of degree m with the smallest base-p value (constant term least
/// significant), so the same q always gives the same tables.
///
/// Throws NotPrimePower when q is not a prime power and SizeLimitExceeded
/// when q > kMaxFieldOrder.
Field make_field(int q);

}  // namespace canalyze
