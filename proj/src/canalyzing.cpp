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

#include "canalyze/canalyzing.hpp"

#include <charconv>

#include "canalyze/errors.hpp"

namespace canalyze {

namespace {

std::size_t stride(int q, int i) {
    std::size_t s = 1;
    for (int j = 1; j < i; ++j) s *= static_cast<std::size_t>(q);
    return s;
}

void check_variable(int n, int i) {
    if (i < 1 || i > n) {
        throw IndexOutOfRange("variable index " + std::to_string(i) + " not in [1, " + std::to_string(n) + "]");
    }
}

void check_element(const Field& field, Element x) {
    if (!field.contains(x)) throw InvalidArgument("element code " + std::to_string(x) + " out of range");
}

// True iff every value on the slice x_i = a equals b.
bool slice_is(const TruthTable& f, std::size_t s, Element a, Element b) {
    const auto q = static_cast<std::size_t>(f.field().order());
    const std::size_t block = s * q;
    for (std::size_t base = a * s; base < f.size(); base += block) {
        for (std::size_t lo = 0; lo < s; ++lo) {
            if (f[base + lo] != b) return false;
        }
    }
    return true;
}

std::optional<int> parse_component(std::string_view text) {
    if (text == "*") return std::nullopt;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("expected integer or '*', got '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::string_view notation(FamilyShape shape) {
    switch (shape) {
        case FamilyShape::kVarInputOutput: return "C^i_{a,b}";
        case FamilyShape::kVarInput: return "C^i_{a,*}";
        case FamilyShape::kVarOutput: return "C^i_{*,b}";
        case FamilyShape::kInputOutput: return "C^*_{a,b}";
        case FamilyShape::kInput: return "C^*_{a,*}";
        case FamilyShape::kOutput: return "C^*_{*,b}";
        case FamilyShape::kVar: return "C^i_{*,*}";
        case FamilyShape::kNone: return "C^*_{*,*}";
    }
    return "?";
}

FamilySpec FamilySpec::parse(std::string_view text) {
    FamilySpec spec;
    bool seen[3] = {false, false, false};
    while (!text.empty()) {
        const std::size_t comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
        if (comma != std::string_view::npos && text.empty()) throw ParseError("trailing comma in family spec");

        const std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key=value in family spec, got '" + std::string(item) + "'");
        const std::string_view key = item.substr(0, eq);
        const auto value = parse_component(item.substr(eq + 1));
        int slot = 0;
        if (key == "i") {
            slot = 0;
            spec.var = value;
        } else if (key == "a" || key == "b") {
            slot = key == "a" ? 1 : 2;
            if (value && (*value < 0 || *value >= kMaxFieldOrder)) throw ParseError("element code out of range");
            auto& target = key == "a" ? spec.input : spec.output;
            target = value ? std::optional<Element>(static_cast<Element>(*value)) : std::nullopt;
        } else {
            throw ParseError("unknown family key '" + std::string(key) + "'");
        }
        if (seen[slot]) throw ParseError("duplicate family key '" + std::string(key) + "'");
        seen[slot] = true;
    }
    if (!seen[0] || !seen[1] || !seen[2]) throw ParseError("family spec needs i, a and b");
    return spec;
}

FamilySpec FamilySpec::representative(FamilyShape shape) {
    FamilySpec spec;
    switch (shape) {
        case FamilyShape::kVarInputOutput: spec = {1, 0, 0}; break;
        case FamilyShape::kVarInput: spec = {1, 0, std::nullopt}; break;
        case FamilyShape::kVarOutput: spec = {1, std::nullopt, 0}; break;
        case FamilyShape::kInputOutput: spec = {std::nullopt, 0, 0}; break;
        case FamilyShape::kInput: spec = {std::nullopt, 0, std::nullopt}; break;
        case FamilyShape::kOutput: spec = {std::nullopt, std::nullopt, 0}; break;
        case FamilyShape::kVar: spec = {1, std::nullopt, std::nullopt}; break;
        case FamilyShape::kNone: break;
    }
    return spec;
}

FamilyShape FamilySpec::shape() const noexcept {
    if (var) {
        if (input) return output ? FamilyShape::kVarInputOutput : FamilyShape::kVarInput;
        return output ? FamilyShape::kVarOutput : FamilyShape::kVar;
    }
    if (input) return output ? FamilyShape::kInputOutput : FamilyShape::kInput;
    return output ? FamilyShape::kOutput : FamilyShape::kNone;
}

std::string FamilySpec::to_string() const {
    auto part = [](auto& v) { return v ? std::to_string(static_cast<int>(*v)) : std::string("*"); };
    return "i=" + part(var) + ",a=" + part(input) + ",b=" + part(output);
}

void FamilySpec::validate(int q, int n) const {
    if (var && (*var < 1 || *var > n)) {
        throw DimensionMismatch("family variable " + std::to_string(*var) + " not in [1, " + std::to_string(n) + "]");
    }
    if (input && *input >= q) throw DimensionMismatch("family input " + std::to_string(*input) + " not below q");
    if (output && *output >= q) throw DimensionMismatch("family output " + std::to_string(*output) + " not below q");
}

bool is_canalyzing(const TruthTable& f, int i, Element a, Element b) {
    check_variable(f.arity(), i);
    check_element(f.field(), a);
    check_element(f.field(), b);
    return slice_is(f, stride(f.field().order(), i), a, b);
}

std::vector<CanalyzingTriple> canalyzing_triples(const TruthTable& f) {
    std::vector<CanalyzingTriple> out;
    const int q = f.field().order();
    for (int i = 1; i <= f.arity(); ++i) {
        const std::size_t s = stride(q, i);
        for (int a = 0; a < q; ++a) {
            const Element b = f[a * s];
            if (slice_is(f, s, static_cast<Element>(a), b)) out.push_back({i, static_cast<Element>(a), b});
        }
    }
    return out;
}

bool member(const TruthTable& f, const FamilySpec& spec) {
    spec.validate(f.field().order(), f.arity());
    const int q = f.field().order();
    const int i_lo = spec.var.value_or(1), i_hi = spec.var.value_or(f.arity());
    const int a_lo = spec.input.value_or(0), a_hi = spec.input.value_or(q - 1);
    for (int i = i_lo; i <= i_hi; ++i) {
        const std::size_t s = stride(q, i);
        for (int a = a_lo; a <= a_hi; ++a) {
            const Element b = f[a * s];
            if (spec.output && b != *spec.output) continue;
            if (slice_is(f, s, static_cast<Element>(a), b)) return true;
        }
    }
    return false;
}

std::optional<AnfPolynomial> try_decompose(const TruthTable& f, int i, Element a, Element b) {
    check_variable(f.arity(), i);
    check_element(f.field(), a);
    check_element(f.field(), b);
    const Field& field = f.field();
    const auto q = static_cast<std::size_t>(field.order());
    const std::size_t s = stride(field.order(), i);

    const AnfPolynomial anf = table_to_anf(f);
    std::vector<Element> c(anf.coeffs().begin(), anf.coeffs().end());
    c[0] = field.sub(c[0], b);

    std::vector<Element> quotient(c.size(), 0);
    for (std::size_t base = 0; base < c.size(); base += s * q) {
        for (std::size_t lo = 0; lo < s; ++lo) {
            auto at = [&](std::size_t k) { return base + k * s + lo; };
            // Synthetic division of sum_k c_k x^k by (x - a).
            Element carry = c[at(q - 1)];
            for (std::size_t k = q - 1; k-- > 0;) {
                quotient[at(k)] = carry;
                carry = field.add(c[at(k)], field.mul(a, carry));
            }
            if (carry != 0) return std::nullopt;
        }
    }
    return AnfPolynomial(field, f.arity(), std::move(quotient));
}

AnfPolynomial decompose(const TruthTable& f, int i, Element a, Element b) {
    auto quotient = try_decompose(f, i, a, b);
    if (!quotient) {
        throw NotCanalyzing("function is not <" + std::to_string(i) + ":" + std::to_string(a) + ":" +
                            std::to_string(b) + "> canalyzing");
    }
    return *std::move(quotient);
}

TruthTable canalyzing_from_quotient(const AnfPolynomial& quotient, int i, Element a, Element b) {
    const Field& field = quotient.field();
    check_variable(quotient.arity(), i);
    check_element(field, a);
    check_element(field, b);
    if (degree_in_variable(quotient, i) > field.order() - 2) {
        throw InvalidArgument("quotient degree in x_" + std::to_string(i) + " exceeds q-2");
    }
    const auto q = static_cast<std::size_t>(field.order());
    const std::size_t s = stride(field.order(), i);
    const TruthTable qt = anf_to_table(quotient);
    std::vector<Element> values(qt.size());
    for (std::size_t index = 0; index < values.size(); ++index) {
        const auto x = static_cast<Element>(index / s % q);
        values[index] = field.add(field.mul(field.sub(x, a), qt[index]), b);
    }
    return TruthTable(field, quotient.arity(), std::move(values));
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t t) {
    std::uint64_t z = seed + (t + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

TruthTable sample(const Field& field, int n, const FamilySpec& spec, std::uint64_t seed, std::uint64_t stream) {
    if (!spec.fully_fixed()) throw InvalidArgument("sampling needs a family with i, a and b fixed");
    if (n < 1) throw InvalidArgument("sampling needs n >= 1");
    spec.validate(field.order(), n);
    const auto q = static_cast<std::size_t>(field.order());
    const std::size_t s = stride(field.order(), *spec.var);
    std::vector<Element> coeffs(point_count(field.order(), n), 0);
    const std::uint64_t draws = coeffs.size() / q * (q - 1);
    std::uint64_t t = stream * draws;
    for (std::size_t index = 0; index < coeffs.size(); ++index) {
        if (index / s % q <= q - 2) coeffs[index] = static_cast<Element>(counter_hash(seed, t++) % q);
    }
    return canalyzing_from_quotient(AnfPolynomial(field, n, std::move(coeffs)), *spec.var, *spec.input, *spec.output);
}

std::vector<Element> newton_coefficients(const Field& field, std::span<const InputOutput> pairs) {
    std::vector<Element> coeffs;
    coeffs.reserve(pairs.size());
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        check_element(field, pairs[t].a);
        check_element(field, pairs[t].b);
        // Value of the partial interpolant at a_t, and prod_{j<t} (a_t - a_j).
        Element partial = 0;
        Element basis = 1;
        for (std::size_t j = 0; j < t; ++j) {
            partial = field.add(partial, field.mul(coeffs[j], basis));
            basis = field.mul(basis, field.sub(pairs[t].a, pairs[j].a));
        }
        if (basis == 0) throw DuplicateInputValues("input value " + std::to_string(pairs[t].a) + " repeated");
        coeffs.push_back(field.div(field.sub(pairs[t].b, partial), basis));
    }
    return coeffs;
}

TruthTable construct_multi(int i, std::span<const InputOutput> pairs, const AnfPolynomial& quotient) {
    const Field& field = quotient.field();
    const int q = field.order();
    check_variable(quotient.arity(), i);
    if (pairs.empty()) throw InvalidArgument("construct_multi needs at least one pair");
    if (static_cast<int>(pairs.size()) > q) throw TooManyPairs("more than q input/output pairs");
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        for (std::size_t j = 0; j < t; ++j) {
            if (pairs[t].a == pairs[j].a) {
                throw DuplicateInputValues("input value " + std::to_string(pairs[t].a) + " repeated");
            }
        }
    }
    const int k = static_cast<int>(pairs.size());
    if (degree_in_variable(quotient, i) > q - k - 1) {
        throw InvalidArgument("quotient degree in x_" + std::to_string(i) + " exceeds q-k-1");
    }
    const auto newton = newton_coefficients(field, pairs);

    // Per value x of x_i: prod_j (x - a_j) and the Newton sum.
    std::vector<Element> vanishing(q), interpolant(q);
    for (int x = 0; x < q; ++x) {
        Element basis = 1;
        Element sum = 0;
        for (int t = 0; t < k; ++t) {
            sum = field.add(sum, field.mul(newton[t], basis));
            basis = field.mul(basis, field.sub(static_cast<Element>(x), pairs[t].a));
        }
        vanishing[x] = basis;
        interpolant[x] = sum;
    }

    const std::size_t s = stride(q, i);
    const TruthTable qt = anf_to_table(quotient);
    std::vector<Element> values(qt.size());
    for (std::size_t index = 0; index < values.size(); ++index) {
        const std::size_t x = index / s % static_cast<std::size_t>(q);
        values[index] = field.add(field.mul(qt[index], vanishing[x]), interpolant[x]);
    }
    return TruthTable(field, quotient.arity(), std::move(values));
}

}  // namespace canalyze
