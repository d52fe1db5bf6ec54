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

#include "canalyze/counting.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <vector>

#include "canalyze/compositions.hpp"
#include "canalyze/errors.hpp"

namespace canalyze {

namespace {

constexpr std::uint64_t kMaxResultBits = std::uint64_t{1} << 26;

int bit_length(std::uint64_t x) {
    int bits = 0;
    for (; x > 0; x >>= 1) ++bits;
    return bits;
}

// q^n as an integer; the guard below keeps it far from overflow.
std::uint64_t ipow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

void check_count_args(int q, int n) {
    if (q < 2 || !factor_prime_power(static_cast<std::uint64_t>(q))) {
        throw NotPrimePower(std::to_string(q) + " is not a prime power");
    }
    if (n < 1) throw InvalidArgument("n must be at least 1");
    // bit length of q^(q^n) is about q^n * log2(q)
    const std::uint64_t limit = kMaxResultBits / static_cast<std::uint64_t>(bit_length(q));
    std::uint64_t points = 1;
    for (int j = 0; j < n; ++j) {
        points *= static_cast<std::uint64_t>(q);
        if (points > limit) {
            throw SizeLimitExceeded("q^(q^n) exceeds 2^26 bits for q=" + std::to_string(q) + ", n=" +
                                    std::to_string(n));
        }
    }
}

// Memoized powers of q; the inclusion-exclusion sums revisit few exponents.
class Powers {
   public:
    explicit Powers(int q) : q_(q) {}

    const BigCount& operator()(std::uint64_t e) {
        auto it = cache_.find(e);
        if (it == cache_.end()) {
            it = cache_.emplace(e, boost::multiprecision::pow(BigCount(q_), static_cast<unsigned>(e))).first;
        }
        return it->second;
    }

   private:
    int q_;
    std::unordered_map<std::uint64_t, BigCount> cache_;
};

int sign(int k) { return k % 2 == 1 ? 1 : -1; }  // (-1)^(k-1)

// sum over compositions of k into q parts of multinomial(k; parts).
BigCount multinomial_sum(int k, int q) {
    BigCount sum = 0;
    for_each_bounded_composition(k, q, q, [&](std::span<const int> parts) { sum += multinomial(parts); });
    return sum;
}

// Terms of sum over compositions (k_1..k_n) of prod C(q, k_j) q^(prod (q - k_j)),
// grouped by the histogram c_v = #{j : k_j = v}. Every composition with
// the same histogram contributes the same term, n! / prod c_v! times.
// include(k, largest_part) selects which compositions count toward the
// sum for k; the result is indexed by k in [0, n q].
template <class Include>
std::vector<BigCount> grid_sums(int n, int q, Include include) {
    const auto choose_q = [&] {
        std::vector<BigCount> row;
        for (int v = 0; v <= q; ++v) row.push_back(binomial(q, v));
        return row;
    }();
    Powers powers(q);
    std::vector<BigCount> sums(static_cast<std::size_t>(n) * q + 1, 0);
    for_each_bounded_composition(n, q + 1, n, [&](std::span<const int> hist) {
        int k = 0;
        int largest = 0;
        for (int v = 0; v <= q; ++v) {
            k += v * hist[v];
            if (hist[v] > 0) largest = v;
        }
        if (!include(k, largest)) return;
        BigCount coeff = multinomial(hist);
        std::uint64_t free_points = 1;
        for (int v = 0; v <= q; ++v) {
            coeff *= boost::multiprecision::pow(choose_q[v], static_cast<unsigned>(hist[v]));
            free_points *= ipow(static_cast<std::uint64_t>(q - v), hist[v]);
        }
        sums[k] += coeff * powers(free_points);
    });
    return sums;
}

BigCount single_slice(int q, int n) {  // C^i_{a,b}
    return boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(ipow(q, n) - ipow(q, n - 1)));
}

BigCount some_slice_constant_b(int q, int n) {  // C^i_{*,b}
    const BigCount slices = boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(ipow(q, n - 1)));
    return boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(ipow(q, n))) -
           boost::multiprecision::pow(slices - 1, static_cast<unsigned>(q));
}

BigCount some_variable_input_output(int q, int n) {  // C^*_{a,b}
    BigCount sum = 0;
    for (int k = 1; k <= n; ++k) {
        const auto e = ipow(q - 1, k) * ipow(q, n - k);
        sum += sign(k) * binomial(n, k) * boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(e));
    }
    return sum;
}

BigCount some_pair_output_b(int q, int n) {  // C^*_{*,b}
    const auto sums = grid_sums(n, q, [](int, int) { return true; });
    BigCount sum = 0;
    for (int k = 1; k <= n * q; ++k) sum += sign(k) * sums[k];
    return sum;
}

BigCount one_variable_any(int q, int n) {  // C^i_{*,*}
    BigCount sum = 0;
    for (int k = 1; k <= q; ++k) {
        const auto e = static_cast<std::uint64_t>(q - k) * ipow(q, n - 1);
        sum += sign(k) * binomial(q, k) * multinomial_sum(k, q) *
               boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(e));
    }
    return sum;
}

BigCount all_canalyzing(int q, int n) {  // C^*_{*,*}
    BigCount u_sum = 0;
    for (int k = 1; k <= q; ++k) {
        const auto e = static_cast<std::uint64_t>(q - k) * ipow(q, n - 1);
        const BigCount u = n * binomial(q, k) * multinomial_sum(k, q) *
                           boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(e));
        u_sum += sign(k) * u;
    }
    // Compositions with every part <= k-1 involve at least two variables;
    // V_1 is empty.
    const auto v = grid_sums(n, q, [](int k, int largest) { return largest <= k - 1; });
    BigCount v_sum = 0;
    for (int k = 1; k <= n * q; ++k) v_sum += sign(k) * q * v[k];
    return u_sum + v_sum;
}

BigCount pow_q(int q, std::uint64_t e) {
    return boost::multiprecision::pow(BigCount(q), static_cast<unsigned>(e));
}

}  // namespace

// BigRatio

BigRatio::BigRatio(BigCount numerator, BigCount denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ == 0) throw DivisionByZero("ratio with zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const BigCount g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::string BigRatio::to_string() const { return num_.str() + "/" + den_.str(); }

std::string BigRatio::to_decimal(int digits) const {
    if (digits < 0) throw InvalidArgument("digits must be nonnegative");
    const bool negative = num_ < 0;
    const BigCount magnitude = negative ? BigCount(-num_) : num_;
    BigCount whole = magnitude / den_;
    const BigCount scale = boost::multiprecision::pow(BigCount(10), static_cast<unsigned>(digits));
    const BigCount scaled = (magnitude % den_) * scale;
    BigCount frac = scaled / den_;
    const BigCount twice_rest = 2 * (scaled % den_);
    if (twice_rest > den_ || (twice_rest == den_ && (digits > 0 ? frac % 2 == 1 : whole % 2 == 1))) {
        if (digits == 0) {
            whole += 1;
        } else {
            frac += 1;
            if (frac == scale) {
                frac = 0;
                whole += 1;
            }
        }
    }
    std::string out = (negative && (whole != 0 || frac != 0)) ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(static_cast<std::size_t>(digits) - f.size(), '0') + f;
    }
    return out;
}

BigRatio BigRatio::distance_to_one() const {
    BigCount diff = num_ - den_;
    if (diff < 0) diff = -diff;
    return BigRatio(diff, den_);
}

std::strong_ordering operator<=>(const BigRatio& lhs, const BigRatio& rhs) {
    const BigCount l = lhs.num_ * rhs.den_;
    const BigCount r = rhs.num_ * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// Combinatorics

BigCount binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigCount r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

BigCount multinomial(std::span<const int> parts) {
    BigCount r = 1;
    int total = 0;
    for (int part : parts) {
        if (part < 0) throw InvalidArgument("multinomial part must be nonnegative");
        total += part;
        r *= binomial(total, part);
    }
    return r;
}

// Family counts

CountReport count_formula(const FamilySpec& spec, int q, int n) {
    check_count_args(q, n);
    spec.validate(q, n);
    CountReport report{spec, q, n, 0, std::nullopt, ""};
    switch (spec.shape()) {
        case FamilyShape::kVarInputOutput:
            report.formula = single_slice(q, n);
            report.theorem = "Lemma 3.2";
            break;
        case FamilyShape::kVarInput:
            report.formula = q * single_slice(q, n);
            report.theorem = "Cor. 1";
            break;
        case FamilyShape::kVarOutput:
            report.formula = some_slice_constant_b(q, n);
            report.theorem = "Thm 1";
            break;
        case FamilyShape::kInputOutput:
            report.formula = some_variable_input_output(q, n);
            report.theorem = "Thm 2";
            break;
        case FamilyShape::kInput:
            report.formula = q * some_variable_input_output(q, n);
            report.theorem = "Cor. 2";
            break;
        case FamilyShape::kOutput:
            report.formula = some_pair_output_b(q, n);
            report.theorem = "Thm 3";
            break;
        case FamilyShape::kVar:
            report.formula = one_variable_any(q, n);
            report.theorem = "Thm 4";
            break;
        case FamilyShape::kNone:
            report.formula = all_canalyzing(q, n);
            report.theorem = "Thm 5";
            break;
    }
    return report;
}

BigCount count_brute(const FamilySpec& spec, int q, int n, int workers) {
    if (workers < 1) throw InvalidArgument("workers must be at least 1");
    if (n < 1) throw InvalidArgument("n must be at least 1");
    const Field field = make_field(q);
    spec.validate(q, n);
    const TableSpace space(field, n);

    const auto chunks = static_cast<std::uint64_t>(workers);
    std::vector<std::uint64_t> counts(chunks, 0);
    auto work = [&](std::uint64_t chunk) {
        const std::uint64_t begin = space.size() * chunk / chunks;
        const std::uint64_t end = space.size() * (chunk + 1) / chunks;
        if (begin >= end) return;
        std::uint64_t local = 0;
        for (auto cursor = space.cursor(begin, end); cursor.next();) {
            if (member(cursor.table(), spec)) ++local;
        }
        counts[chunk] = local;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(chunks);
        for (std::uint64_t c = 0; c < chunks; ++c) threads.emplace_back(work, c);
    }
    return BigCount(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
}

BigCount count_intersection_inputs(int q, int n, int k) {
    check_count_args(q, n);
    if (k < 1 || k > q) throw InvalidArgument("k must be in [1, q]");
    return pow_q(q, ipow(q, n) - static_cast<std::uint64_t>(k) * ipow(q, n - 1));
}

BigCount count_intersection_vars(int q, int n, int k) {
    check_count_args(q, n);
    if (k < 1 || k > n) throw InvalidArgument("k must be in [1, n]");
    return pow_q(q, ipow(q - 1, k) * ipow(q, n - k));
}

BigCount count_intersection_grid(int q, int n, std::span<const int> parts) {
    check_count_args(q, n);
    if (static_cast<int>(parts.size()) != n) throw DimensionMismatch("grid needs one part per variable");
    std::uint64_t free_points = 1;
    for (int k : parts) {
        if (k < 0 || k > q) throw InvalidArgument("grid part must be in [0, q]");
        free_points *= static_cast<std::uint64_t>(q - k);
    }
    return pow_q(q, free_points);
}

BigCount count_intersection_pairs(int q, int n, int k) {
    check_count_args(q, n);
    if (k < 1 || k > q) throw InvalidArgument("k must be in [1, q]");
    return pow_q(q, static_cast<std::uint64_t>(q - k) * ipow(q, n - 1));
}

BigCount count_intersection_grouped(int q, int n, std::span<const int> groups) {
    check_count_args(q, n);
    if (groups.empty()) throw InvalidArgument("at least one group needed");
    int total = 0;
    for (int k : groups) {
        if (k < 1) throw InvalidArgument("group sizes must be positive");
        total += k;
    }
    if (total > q) throw InvalidArgument("group sizes exceed q distinct inputs");
    return pow_q(q, static_cast<std::uint64_t>(q - total) * ipow(q, n - 1));
}

BigCount count_single_essential(int q, int n) {
    check_count_args(q, n);
    return n * (pow_q(q, static_cast<std::uint64_t>(q - 1)) - 1);
}

BigCount boolean_specialization(int n) {
    check_count_args(2, n);
    BigCount total = -4 * BigCount(n);
    for (int k = 1; k <= n; ++k) {
        total += sign(k) * binomial(n, k) * pow_q(2, static_cast<std::uint64_t>(k + 1)) * pow_q(2, ipow(2, n - k));
    }
    return total + identity_sides(n).lhs;
}

IdentitySides identity_sides(int n) {
    if (n < 1) throw InvalidArgument("n must be at least 1");
    BigCount lhs = 0;
    for (int k = 3; k <= 2 * n; ++k) {
        BigCount inner = 0;
        for (int t = 1; t <= k / 2; ++t) {
            inner += binomial(n, t) * binomial(n - t, k - 2 * t) * pow_q(2, static_cast<std::uint64_t>(k - 2 * t + 1));
        }
        lhs += sign(k) * inner;
    }
    const BigCount rhs = 2 * ((n % 2 == 0 ? 1 : -1) + BigCount(n));
    return {lhs, rhs};
}

BigCount asymptote(const FamilySpec& spec, int q, int n) {
    check_count_args(q, n);
    spec.validate(q, n);
    BigCount factor = 1;
    switch (spec.shape()) {
        case FamilyShape::kVarInputOutput: factor = 1; break;
        case FamilyShape::kVarInput:
        case FamilyShape::kVarOutput: factor = q; break;
        case FamilyShape::kInputOutput: factor = n; break;
        case FamilyShape::kInput:
        case FamilyShape::kOutput: factor = BigCount(n) * q; break;
        case FamilyShape::kVar: factor = BigCount(q) * q; break;
        case FamilyShape::kNone: factor = BigCount(n) * q * q; break;
    }
    return factor * pow_q(q, static_cast<std::uint64_t>(q - 1) * ipow(q, n - 1));
}

BigRatio asymptote_ratio(const FamilySpec& spec, int q, int n) {
    return BigRatio(count_formula(spec, q, n).formula, asymptote(spec, q, n));
}

BigCount upper_bound(int q, int n) { return asymptote(FamilySpec{}, q, n); }

bool upper_bound_check(int q, int n) { return count_formula(FamilySpec{}, q, n).formula <= upper_bound(q, n); }

}  // namespace canalyze
