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

#include <doctest.h>

#include <random>
#include <sstream>
#include <set>
#include <vector>

#include "canalyze/errors.hpp"
#include "canalyze/function.hpp"
#include "canalyze/io.hpp"

using namespace canalyze;

namespace {

TruthTable random_table(const Field& f, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(0, f.order() - 1);
    std::vector<Element> values(point_count(f.order(), n));
    for (auto& v : values) v = static_cast<Element>(dist(rng));
    return TruthTable(f, n, std::move(values));
}

// 2 (x_1 - 3)^3 (x_1 - 2) x_2 + 1 over GF(5), n = 3, evaluated pointwise.
TruthTable worked_example() {
    const Field f = make_field(5);
    std::vector<Element> values(125);
    for (std::size_t index = 0; index < values.size(); ++index) {
        const Point x = point_at(5, 3, index);
        const Element d = f.sub(x[0], 3);
        const Element cube = f.mul(d, f.mul(d, d));
        values[index] = f.add(f.mul(2, f.mul(cube, f.mul(f.sub(x[0], 2), x[1]))), 1);
    }
    return TruthTable(f, 3, std::move(values));
}

std::vector<Element> codes(std::initializer_list<int> list) {
    std::vector<Element> out;
    for (int v : list) out.push_back(static_cast<Element>(v));
    return out;
}

}  // namespace

TEST_CASE("point index encoding") {
    CHECK(point_index(3, codes({2, 1})) == 2 + 1 * 3);
    CHECK(point_at(2, 2, 2) == codes({0, 1}));
    for (std::size_t index = 0; index < 125; ++index) REQUIRE(point_index(5, point_at(5, 3, index)) == index);
    CHECK(point_count(2, 24) == (std::size_t{1} << 24));
    CHECK_THROWS_AS(point_count(2, 25), SizeLimitExceeded);
    CHECK_THROWS_AS(point_count(256, 4), SizeLimitExceeded);
}

TEST_CASE("table and polynomial validation") {
    const Field f = make_field(3);
    CHECK_THROWS_AS(TruthTable(f, 2, codes({0, 1, 2})), DimensionMismatch);
    CHECK_THROWS_AS(TruthTable(f, 1, codes({0, 1, 3})), InvalidArgument);
    CHECK_THROWS_AS(AnfPolynomial(f, 1, codes({0, 1})), DimensionMismatch);
    const std::vector<Term> bad{{1, {3}}};
    CHECK_THROWS_AS(AnfPolynomial::from_terms(f, 1, bad), InvalidArgument);
}

TEST_CASE("evaluate") {
    const Field f3 = make_field(3);
    CHECK(evaluate(AnfPolynomial::zero(f3, 2), codes({1, 2})) == 0);

    const std::vector<Term> square{{1, {2}}};
    CHECK(evaluate(AnfPolynomial::from_terms(f3, 1, square), codes({2})) == 1);

    const AnfPolynomial example = table_to_anf(worked_example());
    CHECK(evaluate(example, codes({3, 4, 0})) == 1);
    CHECK_THROWS_AS(evaluate(example, codes({3, 4})), DimensionMismatch);
}

TEST_CASE("anf_to_table examples") {
    const Field f2 = make_field(2);
    const std::vector<Term> and_terms{{1, {1, 1}}};
    CHECK(anf_to_table(AnfPolynomial::from_terms(f2, 2, and_terms)) == TruthTable(f2, 2, codes({0, 0, 0, 1})));

    const Field f3 = make_field(3);
    const std::vector<Term> square{{1, {2}}};
    CHECK(anf_to_table(AnfPolynomial::from_terms(f3, 1, square)) == TruthTable(f3, 1, codes({0, 1, 1})));

    const Field f4 = make_field(4);
    CHECK(anf_to_table(AnfPolynomial::constant(f4, 2, 3)) == TruthTable::constant(f4, 2, 3));
}

TEST_CASE("table_to_anf examples") {
    const Field f2 = make_field(2);
    const std::vector<Term> x1{{1, {1}}};
    CHECK(table_to_anf(TruthTable(f2, 1, codes({0, 1}))) == AnfPolynomial::from_terms(f2, 1, x1));
    const std::vector<Term> x1x2{{1, {1, 1}}};
    CHECK(table_to_anf(TruthTable(f2, 2, codes({0, 0, 0, 1}))) == AnfPolynomial::from_terms(f2, 2, x1x2));
}

TEST_CASE("worked example: degrees and essential variables") {
    const TruthTable t = worked_example();
    const AnfPolynomial anf = table_to_anf(t);
    CHECK(degree(anf) == 5);
    CHECK(degree_in_variable(anf, 1) == 4);
    CHECK(degree_in_variable(anf, 2) == 1);
    CHECK(degree_in_variable(anf, 3) == 0);
    CHECK(essential_variables(t) == std::vector<int>{1, 2});
    CHECK_FALSE(is_essential(t, 3));
    // leading term 2 x_1^4 x_2
    CHECK(anf.coeff(std::vector<int>{4, 1, 0}) == 2);
    CHECK(restrict(t, 1, 3) == TruthTable::constant(t.field(), 2, 1));
}

TEST_CASE("degree conventions") {
    const Field f5 = make_field(5);
    CHECK(degree(AnfPolynomial::constant(f5, 2, 3)) == 0);
    CHECK(degree(AnfPolynomial::zero(f5, 2)) == -1);
    CHECK(degree_in_variable(AnfPolynomial::zero(f5, 2), 1) == -1);
    CHECK_THROWS_AS(degree_in_variable(AnfPolynomial::zero(f5, 2), 3), IndexOutOfRange);
    CHECK_THROWS_AS(degree_in_variable(AnfPolynomial::zero(f5, 2), 0), IndexOutOfRange);
}

TEST_CASE("restrict") {
    const Field f2 = make_field(2);
    const TruthTable conj(f2, 2, codes({0, 0, 0, 1}));
    CHECK(restrict(conj, 1, 0) == TruthTable::constant(f2, 1, 0));
    CHECK(restrict(conj, 1, 1) == TruthTable(f2, 1, codes({0, 1})));
    CHECK(restrict(conj, 2, 1) == TruthTable(f2, 1, codes({0, 1})));

    const TruthTable single = restrict(TruthTable(f2, 1, codes({1, 0})), 1, 1);
    CHECK(single.arity() == 0);
    CHECK(single.size() == 1);
    CHECK(single[0] == 0);

    CHECK_THROWS_AS(restrict(conj, 0, 0), IndexOutOfRange);
    CHECK_THROWS_AS(restrict(conj, 3, 0), IndexOutOfRange);
}

TEST_CASE("essential variables") {
    const Field f2 = make_field(2);
    CHECK(essential_variables(TruthTable(f2, 2, codes({0, 1, 1, 0}))) == std::vector<int>{1, 2});
    CHECK(essential_variables(TruthTable::constant(make_field(3), 2, 2)).empty());
    CHECK(essential_variables(TruthTable(f2, 2, codes({0, 0, 1, 1}))) == std::vector<int>{2});
    CHECK_THROWS_AS(is_essential(TruthTable::constant(f2, 2, 0), 3), IndexOutOfRange);
}

TEST_CASE("round trip: exhaustive at q = 2") {
    for (int n = 1; n <= 3; ++n) {
        const TableSpace space(make_field(2), n);
        for (auto c = space.cursor(); c.next();) REQUIRE(anf_to_table(table_to_anf(c.table())) == c.table());
    }
}

TEST_CASE("round trip and evaluation consistency on random tables") {
    std::mt19937_64 rng(20260101);
    for (auto [q, n] : {std::pair{3, 2}, {5, 1}, {4, 2}, {7, 2}, {8, 1}, {9, 2}}) {
        const Field f = make_field(q);
        for (int trial = 0; trial < 1000; ++trial) {
            const TruthTable t = random_table(f, n, rng);
            const AnfPolynomial anf = table_to_anf(t);
            REQUIRE(anf_to_table(anf) == t);
            if (trial < 20) {
                for (std::size_t index = 0; index < t.size(); ++index) {
                    REQUIRE(evaluate(anf, point_at(q, n, index)) == t[index]);
                }
            }
        }
    }
}

TEST_CASE("distinct tables have distinct normal forms") {
    std::mt19937_64 rng(7);
    const Field f = make_field(4);
    for (int trial = 0; trial < 500; ++trial) {
        const TruthTable a = random_table(f, 2, rng);
        const TruthTable b = random_table(f, 2, rng);
        REQUIRE((a == b) == (table_to_anf(a) == table_to_anf(b)));
    }
}

TEST_CASE("degree in a variable vanishes exactly for inessential variables") {
    for (auto [q, n] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
        const TableSpace space(make_field(q), n);
        for (auto c = space.cursor(); c.next();) {
            const AnfPolynomial anf = table_to_anf(c.table());
            for (int i = 1; i <= n; ++i) REQUIRE((degree_in_variable(anf, i) <= 0) == !is_essential(c.table(), i));
        }
    }
}

TEST_CASE("table enumeration") {
    CHECK(TableSpace(make_field(2), 1).size() == 4);
    CHECK(TableSpace(make_field(2), 2).size() == 16);
    CHECK(TableSpace(make_field(3), 2).size() == 19683);
    CHECK_THROWS_AS(TableSpace(make_field(2), 6), SizeLimitExceeded);
    CHECK_THROWS_AS(TableSpace(make_field(3), 3), SizeLimitExceeded);
    CHECK_NOTHROW(TableSpace(make_field(2), 5));

    const TableSpace space(make_field(3), 2);
    CHECK(space.at(0) == TruthTable::constant(make_field(3), 2, 0));
    CHECK(space.at(1)[8] == 1);
    CHECK(space.at(space.size() - 1) == TruthTable::constant(make_field(3), 2, 2));

    // every table once, in lexicographic order, also across chunks
    std::set<std::vector<Element>> seen;
    std::vector<Element> previous;
    std::uint64_t visited = 0;
    for (std::uint64_t chunk = 0; chunk < 7; ++chunk) {
        const std::uint64_t begin = space.size() * chunk / 7;
        const std::uint64_t end = space.size() * (chunk + 1) / 7;
        for (auto c = space.cursor(begin, end); c.next();) {
            std::vector<Element> v(c.table().values().begin(), c.table().values().end());
            REQUIRE(c.index() == visited);
            if (visited > 0) REQUIRE(previous < v);
            REQUIRE(c.table() == space.at(c.index()));
            seen.insert(v);
            previous = std::move(v);
            ++visited;
        }
    }
    CHECK(visited == space.size());
    CHECK(seen.size() == space.size());

    auto empty = space.cursor(5, 5);
    CHECK_FALSE(empty.next());
}

TEST_CASE("polynomial rendering") {
    const Field f5 = make_field(5);
    const std::vector<Term> terms{{2, {3, 1}}, {1, {0, 0}}, {1, {1, 0}}};
    CHECK(to_string(AnfPolynomial::from_terms(f5, 2, terms)) == "2*x1^3*x2 + x1 + 1");
    CHECK(to_string(AnfPolynomial::zero(f5, 2)) == "0");
}

TEST_CASE("function file records") {
    const TruthTable worked = worked_example();
    const Json table = table_to_json(worked);
    CHECK(table["q"] == 5);
    CHECK(table["n"] == 3);
    CHECK(table["table"].size() == 125);
    CHECK(function_from_json(table) == worked);

    Json anf = anf_to_json(table_to_anf(worked));
    anf["q"] = 5;
    anf["n"] = 3;
    CHECK(function_from_json(anf) == worked);

    std::istringstream in(R"({"q": 4, "n": 1, "anf": [{"coeff": 2, "exps": [1]}, {"coeff": 1, "exps": [1]}]})");
    const TruthTable f4 = read_function(in);
    CHECK(f4 == anf_to_table(AnfPolynomial::from_terms(make_field(4), 1, std::vector<Term>{{3, {1}}})));

    for (const char* bad : {
             R"({"q": 2, "n": 1})",
             R"({"q": 2, "n": 1, "table": [0, 1], "anf": []})",
             R"({"q": 2, "n": 0, "table": [0]})",
             R"({"q": 2, "n": 1, "table": [0, 2]})",
             R"({"q": 2, "n": 1, "table": [0, 1, 1]})",
             R"({"q": 3, "n": 1, "anf": [{"coeff": 1, "exps": [3]}]})",
             R"({"q": 3, "n": 2, "anf": [{"coeff": 1, "exps": [1]}]})",
             R"({"q": "3", "n": 1, "table": [0, 1, 2]})",
             R"([1, 2])",
         }) {
        CHECK_THROWS_AS(function_from_json(Json::parse(bad)), ParseError);
    }
    CHECK_THROWS_AS(function_from_json(Json::parse(R"({"q": 6, "n": 1, "table": [0, 1, 2, 3, 4, 5]})")), NotPrimePower);
    std::istringstream garbage("{not json");
    CHECK_THROWS_AS(read_function(garbage), ParseError);
}
