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

#include "canalyze/function.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "canalyze/errors.hpp"

namespace canalyze {

namespace {

void check_arity(int n) {
    if (n < 0) throw InvalidArgument("variable count must be nonnegative");
}

void check_variable(int n, int i) {
    if (i < 1 || i > n) {
        throw IndexOutOfRange("variable index " + std::to_string(i) + " not in [1, " +
                              std::to_string(n) + "]");
    }
}

void check_codes(const Field& field, std::span<const Element> codes) {
    for (Element c : codes) {
        if (!field.contains(c)) throw InvalidArgument("element code " + std::to_string(c) + " out of range");
    }
}

std::size_t stride(int q, int i) {
    std::size_t s = 1;
    for (int j = 1; j < i; ++j) s *= static_cast<std::size_t>(q);
    return s;
}

// Applies the q x q matrix (row-major, out[r] = sum_c m[r*q + c] in[c]) to
// every line of data parallel to axis i.
void transform_axis(const Field& field, std::vector<Element>& data, int i, std::span<const Element> matrix) {
    const auto q = static_cast<std::size_t>(field.order());
    const std::size_t s = stride(field.order(), i);
    const std::size_t block = s * q;
    std::vector<Element> line(q);
    for (std::size_t base = 0; base < data.size(); base += block) {
        for (std::size_t lo = 0; lo < s; ++lo) {
            for (std::size_t x = 0; x < q; ++x) line[x] = data[base + x * s + lo];
            for (std::size_t r = 0; r < q; ++r) {
                Element acc = 0;
                for (std::size_t c = 0; c < q; ++c) {
                    acc = field.add(acc, field.mul(matrix[r * q + c], line[c]));
                }
                data[base + r * s + lo] = acc;
            }
        }
    }
}

// V[x][k] = x^k over the elements in code order.
std::vector<Element> vandermonde(const Field& field) {
    const auto q = static_cast<std::size_t>(field.order());
    std::vector<Element> v(q * q);
    for (std::size_t x = 0; x < q; ++x) {
        for (std::size_t k = 0; k < q; ++k) v[x * q + k] = field.pow(static_cast<Element>(x), k);
    }
    return v;
}

std::vector<Element> invert(const Field& field, std::vector<Element> a) {
    const auto q = static_cast<std::size_t>(field.order());
    std::vector<Element> inv(q * q, 0);
    for (std::size_t r = 0; r < q; ++r) inv[r * q + r] = 1;
    for (std::size_t col = 0; col < q; ++col) {
        std::size_t pivot = col;
        while (a[pivot * q + col] == 0) ++pivot;  // nonsingular
        if (pivot != col) {
            for (std::size_t c = 0; c < q; ++c) {
                std::swap(a[pivot * q + c], a[col * q + c]);
                std::swap(inv[pivot * q + c], inv[col * q + c]);
            }
        }
        const Element scale = field.inv(a[col * q + col]);
        for (std::size_t c = 0; c < q; ++c) {
            a[col * q + c] = field.mul(a[col * q + c], scale);
            inv[col * q + c] = field.mul(inv[col * q + c], scale);
        }
        for (std::size_t r = 0; r < q; ++r) {
            const Element factor = a[r * q + col];
            if (r == col || factor == 0) continue;
            for (std::size_t c = 0; c < q; ++c) {
                a[r * q + c] = field.sub(a[r * q + c], field.mul(factor, a[col * q + c]));
                inv[r * q + c] = field.sub(inv[r * q + c], field.mul(factor, inv[col * q + c]));
            }
        }
    }
    return inv;
}

const std::vector<Element>& inverse_vandermonde(const Field& field) {
    static std::mutex mutex;
    static std::map<int, std::vector<Element>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(field.order());
    if (it == cache.end()) it = cache.emplace(field.order(), invert(field, vandermonde(field))).first;
    return it->second;
}

}  // namespace

std::size_t point_count(int q, int n) {
    check_arity(n);
    std::uint64_t count = 1;
    for (int j = 0; j < n; ++j) {
        count *= static_cast<std::uint64_t>(q);
        if (count > kMaxPoints) {
            throw SizeLimitExceeded(std::to_string(q) + "^" + std::to_string(n) + " points exceeds 2^24");
        }
    }
    return static_cast<std::size_t>(count);
}

std::size_t point_index(int q, std::span<const Element> coords) {
    std::size_t index = 0;
    for (std::size_t j = coords.size(); j-- > 0;) index = index * static_cast<std::size_t>(q) + coords[j];
    return index;
}

Point point_at(int q, int n, std::size_t index) {
    Point point(static_cast<std::size_t>(n));
    for (auto& c : point) {
        c = static_cast<Element>(index % static_cast<std::size_t>(q));
        index /= static_cast<std::size_t>(q);
    }
    return point;
}

// TruthTable

TruthTable::TruthTable(Field field, int n, std::vector<Element> values)
    : field_(std::move(field)), n_(n), values_(std::move(values)) {
    if (values_.size() != point_count(field_.order(), n_)) {
        throw DimensionMismatch("table needs " + std::to_string(point_count(field_.order(), n_)) +
                                " values, got " + std::to_string(values_.size()));
    }
    check_codes(field_, values_);
}

TruthTable TruthTable::constant(Field field, int n, Element b) {
    if (!field.contains(b)) throw InvalidArgument("element code out of range");
    const std::size_t count = point_count(field.order(), n);
    return TruthTable(std::move(field), n, std::vector<Element>(count, b), true);
}

Element TruthTable::at(std::span<const Element> point) const {
    if (static_cast<int>(point.size()) != n_) throw DimensionMismatch("point has wrong length");
    check_codes(field_, point);
    return values_[point_index(field_.order(), point)];
}

bool TruthTable::is_constant() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [&](Element v) { return v == values_.front(); });
}

// AnfPolynomial

AnfPolynomial::AnfPolynomial(Field field, int n, std::vector<Element> coeffs)
    : field_(std::move(field)), n_(n), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != point_count(field_.order(), n_)) {
        throw DimensionMismatch("polynomial needs " + std::to_string(point_count(field_.order(), n_)) +
                                " coefficients, got " + std::to_string(coeffs_.size()));
    }
    check_codes(field_, coeffs_);
}

AnfPolynomial AnfPolynomial::zero(Field field, int n) {
    const std::size_t count = point_count(field.order(), n);
    return AnfPolynomial(std::move(field), n, std::vector<Element>(count, 0));
}

AnfPolynomial AnfPolynomial::constant(Field field, int n, Element b) {
    const std::size_t count = point_count(field.order(), n);
    std::vector<Element> coeffs(count, 0);
    coeffs[0] = b;
    return AnfPolynomial(std::move(field), n, std::move(coeffs));
}

AnfPolynomial AnfPolynomial::from_terms(Field field, int n, std::span<const Term> terms) {
    std::vector<Element> coeffs(point_count(field.order(), n), 0);
    for (const Term& term : terms) {
        if (static_cast<int>(term.exps.size()) != n) throw DimensionMismatch("term has wrong number of exponents");
        if (!field.contains(term.coeff)) throw InvalidArgument("coefficient out of range");
        std::size_t index = 0;
        for (std::size_t j = term.exps.size(); j-- > 0;) {
            if (term.exps[j] < 0 || term.exps[j] >= field.order()) {
                throw InvalidArgument("exponent out of range [0, q-1]");
            }
            index = index * static_cast<std::size_t>(field.order()) + static_cast<std::size_t>(term.exps[j]);
        }
        coeffs[index] = field.add(coeffs[index], term.coeff);
    }
    return AnfPolynomial(std::move(field), n, std::move(coeffs));
}

Element AnfPolynomial::coeff(std::span<const int> exps) const {
    if (static_cast<int>(exps.size()) != n_) throw DimensionMismatch("exponent tuple has wrong length");
    std::size_t index = 0;
    for (std::size_t j = exps.size(); j-- > 0;) {
        if (exps[j] < 0 || exps[j] >= field_.order()) throw InvalidArgument("exponent out of range");
        index = index * static_cast<std::size_t>(field_.order()) + static_cast<std::size_t>(exps[j]);
    }
    return coeffs_[index];
}

bool AnfPolynomial::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Element c) { return c == 0; });
}

std::vector<Term> AnfPolynomial::terms() const {
    std::vector<Term> out;
    for (std::size_t index = 0; index < coeffs_.size(); ++index) {
        if (coeffs_[index] == 0) continue;
        const Point exps = point_at(field_.order(), n_, index);
        out.push_back({coeffs_[index], std::vector<int>(exps.begin(), exps.end())});
    }
    return out;
}

// Conversions and queries

Element evaluate(const AnfPolynomial& f, std::span<const Element> point) {
    const Field& field = f.field();
    const int n = f.arity();
    const int q = field.order();
    if (static_cast<int>(point.size()) != n) {
        throw DimensionMismatch("point has " + std::to_string(point.size()) + " coordinates, expected " +
                                std::to_string(n));
    }
    check_codes(field, point);
    // powers[j*q + k] = x_j^k
    std::vector<Element> powers(static_cast<std::size_t>(n) * q);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < q; ++k) powers[static_cast<std::size_t>(j) * q + k] = field.pow(point[j], k);
    }
    Element sum = 0;
    for (std::size_t index = 0; index < f.size(); ++index) {
        if (f[index] == 0) continue;
        Element term = f[index];
        std::size_t rest = index;
        for (int j = 0; j < n && term != 0; ++j) {
            term = field.mul(term, powers[static_cast<std::size_t>(j) * q + rest % q]);
            rest /= q;
        }
        sum = field.add(sum, term);
    }
    return sum;
}

TruthTable anf_to_table(const AnfPolynomial& f) {
    std::vector<Element> data(f.coeffs().begin(), f.coeffs().end());
    const auto v = vandermonde(f.field());
    for (int i = 1; i <= f.arity(); ++i) transform_axis(f.field(), data, i, v);
    return TruthTable(f.field(), f.arity(), std::move(data), true);
}

AnfPolynomial table_to_anf(const TruthTable& t) {
    std::vector<Element> data(t.values().begin(), t.values().end());
    const auto& inv = inverse_vandermonde(t.field());
    for (int i = 1; i <= t.arity(); ++i) transform_axis(t.field(), data, i, inv);
    return AnfPolynomial(t.field(), t.arity(), std::move(data));
}

int degree(const AnfPolynomial& f) {
    const auto q = static_cast<std::size_t>(f.field().order());
    int best = -1;
    for (std::size_t index = 0; index < f.size(); ++index) {
        if (f[index] == 0) continue;
        int total = 0;
        for (std::size_t rest = index; rest > 0; rest /= q) total += static_cast<int>(rest % q);
        best = std::max(best, total);
    }
    return best;
}

int degree_in_variable(const AnfPolynomial& f, int i) {
    check_variable(f.arity(), i);
    const auto q = static_cast<std::size_t>(f.field().order());
    const std::size_t s = stride(f.field().order(), i);
    int best = -1;
    for (std::size_t index = 0; index < f.size(); ++index) {
        if (f[index] != 0) best = std::max(best, static_cast<int>(index / s % q));
    }
    return best;
}

TruthTable restrict(const TruthTable& f, int i, Element a) {
    check_variable(f.arity(), i);
    if (!f.field().contains(a)) throw InvalidArgument("element code out of range");
    const auto q = static_cast<std::size_t>(f.field().order());
    const std::size_t s = stride(f.field().order(), i);
    std::vector<Element> out(f.size() / q);
    for (std::size_t hi = 0; hi < out.size() / s; ++hi) {
        for (std::size_t lo = 0; lo < s; ++lo) out[hi * s + lo] = f[hi * s * q + a * s + lo];
    }
    return TruthTable(f.field(), f.arity() - 1, std::move(out), true);
}

bool is_essential(const TruthTable& f, int i) {
    check_variable(f.arity(), i);
    const auto q = static_cast<std::size_t>(f.field().order());
    const std::size_t s = stride(f.field().order(), i);
    for (std::size_t base = 0; base < f.size(); base += s * q) {
        for (std::size_t lo = 0; lo < s; ++lo) {
            for (std::size_t x = 1; x < q; ++x) {
                if (f[base + x * s + lo] != f[base + lo]) return true;
            }
        }
    }
    return false;
}

std::vector<int> essential_variables(const TruthTable& f) {
    std::vector<int> out;
    for (int i = 1; i <= f.arity(); ++i) {
        if (is_essential(f, i)) out.push_back(i);
    }
    return out;
}

std::string to_string(const AnfPolynomial& f) {
    const auto terms = f.terms();
    if (terms.empty()) return "0";
    std::ostringstream os;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (it != terms.rbegin()) os << " + ";
        const bool monomial = std::any_of(it->exps.begin(), it->exps.end(), [](int k) { return k > 0; });
        bool first = true;
        if (it->coeff != 1 || !monomial) {
            os << static_cast<int>(it->coeff);
            first = false;
        }
        for (std::size_t j = 0; j < it->exps.size(); ++j) {
            if (it->exps[j] == 0) continue;
            if (!first) os << '*';
            os << 'x' << j + 1;
            if (it->exps[j] > 1) os << '^' << it->exps[j];
            first = false;
        }
    }
    return os.str();
}

// Enumeration

TableSpace::TableSpace(Field field, int n) : field_(std::move(field)), n_(n), size_(1) {
    const std::size_t points = point_count(field_.order(), n_);
    const auto q = static_cast<std::uint64_t>(field_.order());
    for (std::size_t j = 0; j < points; ++j) {
        size_ *= q;
        if (size_ > kMaxFunctions) {
            throw SizeLimitExceeded("q^(q^n) functions exceeds 2^40 for q=" + std::to_string(q) +
                                    ", n=" + std::to_string(n_));
        }
    }
}

TruthTable TableSpace::at(std::uint64_t index) const {
    if (index >= size_) throw IndexOutOfRange("function index out of range");
    const auto q = static_cast<std::uint64_t>(field_.order());
    std::vector<Element> values(point_count(field_.order(), n_));
    for (std::size_t j = values.size(); j-- > 0;) {
        values[j] = static_cast<Element>(index % q);
        index /= q;
    }
    return TruthTable(field_, n_, std::move(values));
}

TableCursor TableSpace::cursor(std::uint64_t begin, std::uint64_t end) const { return TableCursor(*this, begin, end); }

TableCursor TableSpace::cursor() const { return TableCursor(*this, 0, size_); }

TableCursor::TableCursor(const TableSpace& space, std::uint64_t begin, std::uint64_t end)
    : table_(space.at(begin < end && begin < space.size() ? begin : 0)), index_(begin), end_(std::min(end, space.size())) {}

bool TableCursor::next() {
    if (!started_) {
        started_ = true;
        return index_ < end_;
    }
    if (index_ >= end_ || ++index_ >= end_) return false;
    const Element top = static_cast<Element>(table_.field().order() - 1);
    for (std::size_t j = table_.values_.size(); j-- > 0;) {
        if (table_.values_[j] != top) {
            ++table_.values_[j];
            break;
        }
        table_.values_[j] = 0;
    }
    return true;
}

}  // namespace canalyze
