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

#include "canalyze/field.hpp"

#include <string>

#include "canalyze/errors.hpp"

namespace canalyze {

namespace {

using Poly = std::vector<int>;  // coefficients over F_p, constant term first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int inverse_mod(int x, int p) {
    int result = 1;
    for (int e = p - 2, base = x % p; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
    }
    return result;
}

// Remainder of a modulo b over F_p; b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, int p) {
    trim(a);
    const int lead_inv = inverse_mod(b.back(), p);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const int factor = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) {
            a[shift + j] = ((a[shift + j] - factor * b[j]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

// Monic polynomial of the given degree whose lower coefficients are the
// base-p digits of index.
Poly monic_from_index(std::uint64_t index, int degree, int p) {
    Poly poly(static_cast<std::size_t>(degree) + 1, 0);
    for (int j = 0; j < degree; ++j) {
        poly[j] = static_cast<int>(index % p);
        index /= p;
    }
    poly[degree] = 1;
    return poly;
}

std::uint64_t ipow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= base;
    return r;
}

bool is_irreducible(const Poly& f, int p) {
    const int m = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= m; ++d) {
        const std::uint64_t count = ipow(p, d);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (poly_mod(f, monic_from_index(idx, d, p), p).empty()) return false;
        }
    }
    return true;
}

Poly smallest_irreducible(int degree, int p) {
    const std::uint64_t count = ipow(p, degree);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = monic_from_index(idx, degree, p);
        if (is_irreducible(f, p)) return f;
    }
    // Irreducible polynomials exist for every degree.
    throw Error("no irreducible polynomial found");
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::optional<PrimePower> factor_prime_power(std::uint64_t q) {
    if (q < 2) return std::nullopt;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePower{q, 1};
    int m = 0;
    while (q % p == 0) {
        q /= p;
        ++m;
    }
    if (q != 1) return std::nullopt;
    return PrimePower{p, m};
}

Field make_field(int q) {
    const auto pp = q >= 2 ? factor_prime_power(static_cast<std::uint64_t>(q)) : std::nullopt;
    if (!pp) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    if (q > kMaxFieldOrder) {
        throw SizeLimitExceeded("field order " + std::to_string(q) + " exceeds " +
                                std::to_string(kMaxFieldOrder));
    }

    auto t = std::make_shared<Field::Tables>();
    t->p = static_cast<int>(pp->p);
    t->m = pp->m;
    t->q = q;
    const int p = t->p;
    const int m = t->m;
    if (m > 1) t->modulus = smallest_irreducible(m, p);

    std::vector<Poly> digits(q, Poly(m, 0));
    for (int code = 0; code < q; ++code) {
        int rest = code;
        for (int j = 0; j < m; ++j) {
            digits[code][j] = rest % p;
            rest /= p;
        }
    }
    auto pack = [&](const Poly& poly) {
        int code = 0;
        for (int j = m - 1; j >= 0; --j) {
            code = code * p + (j < static_cast<int>(poly.size()) ? poly[j] : 0);
        }
        return static_cast<Element>(code);
    };

    const auto qq = static_cast<std::size_t>(q) * q;
    t->add.resize(qq);
    t->mul.resize(qq);
    t->neg.resize(q);
    t->inv.assign(q, 0);
    for (int x = 0; x < q; ++x) {
        Poly negated(m);
        for (int j = 0; j < m; ++j) negated[j] = (p - digits[x][j]) % p;
        t->neg[x] = pack(negated);
        for (int y = 0; y < q; ++y) {
            Poly sum(m);
            for (int j = 0; j < m; ++j) sum[j] = (digits[x][j] + digits[y][j]) % p;
            Poly prod(2 * m - 1, 0);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    prod[i + j] = (prod[i + j] + digits[x][i] * digits[y][j]) % p;
                }
            }
            if (m > 1) prod = poly_mod(prod, t->modulus, p);
            const std::size_t s = static_cast<std::size_t>(x) * q + y;
            t->add[s] = pack(sum);
            t->mul[s] = pack(prod);
        }
    }
    for (int x = 1; x < q; ++x) {
        for (int y = 1; y < q; ++y) {
            if (t->mul[static_cast<std::size_t>(x) * q + y] == 1) {
                t->inv[x] = static_cast<Element>(y);
                break;
            }
        }
    }
    return Field(std::move(t));
}

Element Field::inv(Element x) const {
    if (x == 0) throw DivisionByZero("inverse of zero");
    return tables_->inv[x];
}

Element Field::pow(Element x, std::uint64_t e) const noexcept {
    Element result = 1;
    Element base = x;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::vector<int> Field::decode(Element x) const {
    std::vector<int> coefficients(degree());
    int rest = x;
    for (int j = 0; j < degree(); ++j) {
        coefficients[j] = rest % characteristic();
        rest /= characteristic();
    }
    return coefficients;
}

Element Field::encode(std::span<const int> coefficients) const {
    if (static_cast<int>(coefficients.size()) != degree()) {
        throw DimensionMismatch("expected " + std::to_string(degree()) + " coefficients");
    }
    int code = 0;
    for (int j = degree() - 1; j >= 0; --j) {
        if (coefficients[j] < 0 || coefficients[j] >= characteristic()) {
            throw InvalidArgument("coefficient out of range");
        }
        code = code * characteristic() + coefficients[j];
    }
    return static_cast<Element>(code);
}

}  // namespace canalyze
