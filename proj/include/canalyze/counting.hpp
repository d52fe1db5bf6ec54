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

#include <compare>
#include <optional>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "canalyze/canalyzing.hpp"

namespace canalyze {

/// Exact integer for cardinalities. Signed so that alternating sums can be
/// accumulated directly; every count it reports is nonnegative.
using BigCount = boost::multiprecision::cpp_int;

struct CountReport {
    FamilySpec spec;
    int q = 0;
    int n = 0;
    BigCount formula;
    std::optional<BigCount> brute;
    /// Result that produced the closed form, e.g. "Thm 1".
    std::string theorem;

    bool matches() const { return !brute || *brute == formula; }
};

/// Exact ratio with positive denominator in lowest terms.
class BigRatio {
   public:
    BigRatio(BigCount numerator, BigCount denominator);

    const BigCount& numerator() const noexcept { return num_; }
    const BigCount& denominator() const noexcept { return den_; }

    /// "num/den".
    std::string to_string() const;
    /// Rounded half-to-even at the given number of fractional digits.
    std::string to_decimal(int digits = 12) const;

    /// |this - 1|.
    BigRatio distance_to_one() const;

    friend bool operator==(const BigRatio&, const BigRatio&) = default;
    friend std::strong_ordering operator<=>(const BigRatio& lhs, const BigRatio& rhs);

   private:
    BigCount num_;
    BigCount den_;
};

BigCount binomial(int n, int k);
/// k! / (k_1! ... k_r!) with k = sum of parts.
BigCount multinomial(std::span<const int> parts);

/// Closed-form |C| for the family shape of spec; the fixed values do not
/// change the count. Throws NotPrimePower, and SizeLimitExceeded when
/// q^(q^n) would exceed 2^26 bits.
CountReport count_formula(const FamilySpec& spec, int q, int n);

/// Number of functions F_q^n -> F_q in the family, by exhaustive
/// enumeration split into contiguous chunks over the given number of
/// worker threads. Identical for any worker count.
BigCount count_brute(const FamilySpec& spec, int q, int n, int workers = 1);

/// |intersection of C^i_{a_j,b}|, k distinct inputs, shared output.
BigCount count_intersection_inputs(int q, int n, int k);
/// |intersection of C^{i_j}_{a,b}|, k distinct variables.
BigCount count_intersection_vars(int q, int n, int k);
/// Shared output b, parts[i-1] distinct inputs on variable i.
BigCount count_intersection_grid(int q, int n, std::span<const int> parts);
/// |intersection of C^i_{a_j,b_j}|, k distinct inputs, any outputs.
BigCount count_intersection_pairs(int q, int n, int k);
/// r output groups of sizes groups[j] >= 1 on one variable, all inputs
/// distinct.
BigCount count_intersection_grouped(int q, int n, std::span<const int> groups);

/// n (q^(q-1) - 1), as stated for one-essential-variable functions with a
/// fixed canalyzed value. Does not agree with enumeration; see README.
BigCount count_single_essential(int q, int n);

/// |C^*_{*,*}| at q = 2 through the reduced Boolean expression.
BigCount boolean_specialization(int n);

struct IdentitySides {
    BigCount lhs;
    BigCount rhs;
};

/// lhs = sum_{3<=k<=2n} (-1)^(k-1) sum_{1<=t<=k/2} C(n,t) C(n-t,k-2t) 2^(k-2t+1),
/// rhs = 2((-1)^n + n).
IdentitySides identity_sides(int n);

/// Leading-order estimate c * q^((q-1) q^(n-1)) with c in
/// {1, q, q, n, nq, nq, q^2, n q^2} by family shape.
BigCount asymptote(const FamilySpec& spec, int q, int n);
BigRatio asymptote_ratio(const FamilySpec& spec, int q, int n);

/// n q^2 q^((q-1) q^(n-1)).
BigCount upper_bound(int q, int n);
/// |C^*_{*,*}| <= upper_bound(q, n).
bool upper_bound_check(int q, int n);

}  // namespace canalyze
