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

#include "canalyze/io.hpp"

#include "canalyze/errors.hpp"

namespace canalyze {

namespace {

int get_int(const Json& value, const char* what) {
    if (!value.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    return value.get<int>();
}

Element get_code(const Json& value, const Field& field, const char* what) {
    const int code = get_int(value, what);
    if (!field.contains(code)) throw ParseError(std::string(what) + " " + std::to_string(code) + " not in [0, q-1]");
    return static_cast<Element>(code);
}

}  // namespace

TruthTable function_from_json(const Json& record) {
    if (!record.is_object()) throw ParseError("function record must be a JSON object");
    if (!record.contains("q") || !record.contains("n")) throw ParseError("function record needs q and n");
    const int q = get_int(record["q"], "q");
    const int n = get_int(record["n"], "n");
    if (n < 1) throw ParseError("n must be at least 1");
    const bool has_table = record.contains("table");
    const bool has_anf = record.contains("anf");
    if (has_table == has_anf) throw ParseError("function record needs exactly one of table or anf");

    const Field field = make_field(q);
    const std::size_t points = point_count(q, n);
    if (has_table) {
        const Json& table = record["table"];
        if (!table.is_array() || table.size() != points) {
            throw ParseError("table must be an array of " + std::to_string(points) + " codes");
        }
        std::vector<Element> values;
        values.reserve(points);
        for (const auto& v : table) values.push_back(get_code(v, field, "table entry"));
        return TruthTable(field, n, std::move(values));
    }

    const Json& anf = record["anf"];
    if (!anf.is_array()) throw ParseError("anf must be an array of terms");
    std::vector<Term> terms;
    for (const auto& term : anf) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("exps")) {
            throw ParseError("anf term needs coeff and exps");
        }
        const Json& exps = term["exps"];
        if (!exps.is_array() || static_cast<int>(exps.size()) != n) {
            throw ParseError("anf exps must list " + std::to_string(n) + " exponents");
        }
        Term t{get_code(term["coeff"], field, "coeff"), {}};
        for (const auto& e : exps) {
            const int k = get_int(e, "exponent");
            if (k < 0 || k >= q) throw ParseError("exponent " + std::to_string(k) + " not in [0, q-1]");
            t.exps.push_back(k);
        }
        terms.push_back(std::move(t));
    }
    return anf_to_table(AnfPolynomial::from_terms(field, n, terms));
}

TruthTable read_function(std::istream& in) {
    Json record;
    try {
        record = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return function_from_json(record);
}

Json table_to_json(const TruthTable& f) {
    Json values = Json::array();
    for (Element v : f.values()) values.push_back(static_cast<int>(v));
    return Json{{"q", f.field().order()}, {"n", f.arity()}, {"table", std::move(values)}};
}

Json anf_to_json(const AnfPolynomial& f) {
    Json terms = Json::array();
    for (const Term& t : f.terms()) terms.push_back(Json{{"coeff", static_cast<int>(t.coeff)}, {"exps", t.exps}});
    return Json{{"q", f.field().order()}, {"n", f.arity()}, {"anf", std::move(terms)}};
}

Json to_json(const CanalyzingTriple& triple) {
    return Json{{"i", triple.i}, {"a", static_cast<int>(triple.a)}, {"b", static_cast<int>(triple.b)}};
}

Json to_json(const CountReport& report) {
    Json out{{"family", report.spec.to_string()},
             {"notation", std::string(notation(report.spec.shape()))},
             {"q", report.q},
             {"n", report.n},
             {"formula", report.formula.str()},
             {"theorem", report.theorem}};
    if (report.brute) {
        out["brute"] = report.brute->str();
        out["match"] = report.matches();
    }
    return out;
}

}  // namespace canalyze
