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

#include "canalyze/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <vector>

#include <CLI11.hpp>

#include "canalyze/canalyzing.hpp"
#include "canalyze/counting.hpp"
#include "canalyze/errors.hpp"
#include "canalyze/function.hpp"
#include "canalyze/io.hpp"

namespace canalyze {

namespace {

using Row = std::vector<std::string>;

// Left-aligned columns padded to the widest cell.
void print_table(std::ostream& out, const std::vector<Row>& rows) {
    std::vector<std::size_t> widths;
    for (const Row& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    for (const Row& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out << line << '\n';
    }
}

std::string join(const std::vector<int>& values) {
    std::string s;
    for (std::size_t j = 0; j < values.size(); ++j) s += (j ? "," : "") + std::to_string(values[j]);
    return s;
}

struct Options {
    int q = 0;
    int n = 0;
    std::string family;
    std::string method = "formula";
    int workers = 1;
    bool json = false;
    std::string file;
    int i = 0;
    int a = 0;
    int b = 0;
    std::uint64_t seed = 0;
    int count = 1;
    int n_max = 0;
    int digits = 12;
};

// Checks q before anything else, so a bad field order reports as such.
void check_q(int q) {
    if (q < 2 || !factor_prime_power(static_cast<std::uint64_t>(q))) {
        throw NotPrimePower(std::to_string(q) + " is not a prime power");
    }
}

FamilySpec parse_family(const Options& o) {
    check_q(o.q);
    FamilySpec spec = FamilySpec::parse(o.family);
    spec.validate(o.q, o.n);
    return spec;
}

int cmd_count(const Options& o, std::ostream& out) {
    const FamilySpec spec = parse_family(o);
    if (o.method == "brute") {
        const BigCount brute = count_brute(spec, o.q, o.n, o.workers);
        if (o.json) {
            out << Json{{"family", spec.to_string()}, {"q", o.q}, {"n", o.n}, {"brute", brute.str()}}.dump(2) << '\n';
        } else {
            print_table(out, {{"family", "notation", "q", "n", "brute"},
                              {spec.to_string(), std::string(notation(spec.shape())), std::to_string(o.q),
                               std::to_string(o.n), brute.str()}});
        }
        return kExitOk;
    }
    CountReport report = count_formula(spec, o.q, o.n);
    if (o.method == "both") report.brute = count_brute(spec, o.q, o.n, o.workers);
    if (o.json) {
        out << to_json(report).dump(2) << '\n';
    } else {
        Row header{"family", "notation", "q", "n", "theorem", "formula"};
        Row row{spec.to_string(), std::string(notation(spec.shape())), std::to_string(o.q), std::to_string(o.n),
                report.theorem, report.formula.str()};
        if (report.brute) {
            header.insert(header.end(), {"brute", "match"});
            row.insert(row.end(), {report.brute->str(), report.matches() ? "yes" : "NO"});
        }
        print_table(out, {header, row});
    }
    return report.matches() ? kExitOk : kExitMismatch;
}

int cmd_brute(const Options& o, std::ostream& out) {
    Options copy = o;
    copy.method = "brute";
    return cmd_count(copy, out);
}

int cmd_verify(const Options& o, std::ostream& out) {
    check_q(o.q);
    if (o.n < 1) throw InvalidArgument("--n must be at least 1");
    bool all = true;
    std::vector<Row> rows{{"family", "notation", "theorem", "formula", "brute", "match"}};
    Json reports = Json::array();
    for (FamilyShape shape : kAllShapes) {
        const FamilySpec spec = FamilySpec::representative(shape);
        CountReport report = count_formula(spec, o.q, o.n);
        report.brute = count_brute(spec, o.q, o.n, o.workers);
        all = all && report.matches();
        rows.push_back({spec.to_string(), std::string(notation(shape)), report.theorem, report.formula.str(),
                        report.brute->str(), report.matches() ? "yes" : "NO"});
        reports.push_back(to_json(report));
    }
    if (o.json) {
        out << Json{{"q", o.q}, {"n", o.n}, {"workers", o.workers}, {"all_match", all}, {"families", reports}}.dump(2)
            << '\n';
    } else {
        out << "q=" << o.q << " n=" << o.n << " workers=" << o.workers << '\n';
        print_table(out, rows);
    }
    return all ? kExitOk : kExitMismatch;
}

int cmd_analyze(const Options& o, std::ostream& out) {
    std::ifstream in(o.file);
    if (!in) throw ParseError("cannot open " + o.file);
    const TruthTable f = read_function(in);
    const AnfPolynomial anf = table_to_anf(f);
    std::vector<int> var_degrees;
    for (int i = 1; i <= f.arity(); ++i) var_degrees.push_back(degree_in_variable(anf, i));
    const auto essential = essential_variables(f);
    const auto triples = canalyzing_triples(f);

    if (o.json) {
        Json doc = anf_to_json(anf);
        Json triple_list = Json::array();
        for (const auto& t : triples) triple_list.push_back(to_json(t));
        doc["polynomial"] = to_string(anf);
        doc["degree"] = degree(anf);
        doc["variable_degrees"] = var_degrees;
        doc["essential"] = essential;
        doc["triples"] = std::move(triple_list);
        out << doc.dump(2) << '\n';
        return kExitOk;
    }
    std::vector<Row> rows{{"q", std::to_string(f.field().order())},
                          {"n", std::to_string(f.arity())},
                          {"anf", to_string(anf)},
                          {"degree", std::to_string(degree(anf))},
                          {"variable degrees", join(var_degrees)},
                          {"essential", join(essential)}};
    print_table(out, rows);
    out << "triples (" << triples.size() << ")\n";
    std::vector<Row> triple_rows{{"i", "a", "b"}};
    for (const auto& t : triples) {
        triple_rows.push_back({std::to_string(t.i), std::to_string(t.a), std::to_string(t.b)});
    }
    if (!triples.empty()) print_table(out, triple_rows);
    return kExitOk;
}

int cmd_sample(const Options& o, std::ostream& out) {
    check_q(o.q);
    if (o.n < 1) throw InvalidArgument("--n must be at least 1");
    if (o.count < 0) throw InvalidArgument("--count must be nonnegative");
    if (o.i < 1 || o.i > o.n) throw InvalidArgument("--i must be in [1, n]");
    if (o.a < 0 || o.a >= o.q || o.b < 0 || o.b >= o.q) throw InvalidArgument("--a and --b must be in [0, q-1]");
    const FamilySpec spec{o.i, static_cast<Element>(o.a), static_cast<Element>(o.b)};
    const Field field = make_field(o.q);
    for (int c = 0; c < o.count; ++c) {
        out << table_to_json(sample(field, o.n, spec, o.seed, static_cast<std::uint64_t>(c))).dump() << '\n';
    }
    return kExitOk;
}

int cmd_identity(const Options& o, std::ostream& out) {
    if (o.n_max < 1) throw InvalidArgument("--n-max must be at least 1");
    bool all = true;
    std::vector<Row> rows{{"n", "lhs", "rhs", "equal"}};
    Json list = Json::array();
    for (int n = 1; n <= o.n_max; ++n) {
        const auto sides = identity_sides(n);
        const bool equal = sides.lhs == sides.rhs;
        all = all && equal;
        rows.push_back({std::to_string(n), sides.lhs.str(), sides.rhs.str(), equal ? "yes" : "NO"});
        list.push_back(Json{{"n", n}, {"lhs", sides.lhs.str()}, {"rhs", sides.rhs.str()}, {"equal", equal}});
    }
    if (o.json) {
        out << Json{{"all_equal", all}, {"rows", list}}.dump(2) << '\n';
    } else {
        print_table(out, rows);
    }
    return all ? kExitOk : kExitMismatch;
}

int cmd_asymptote(const Options& o, std::ostream& out) {
    const FamilySpec spec = parse_family(o);
    if (o.digits < 0) throw InvalidArgument("--digits must be nonnegative");
    const BigCount count = count_formula(spec, o.q, o.n).formula;
    const BigCount estimate = asymptote(spec, o.q, o.n);
    const BigRatio ratio(count, estimate);
    if (o.json) {
        out << Json{{"family", spec.to_string()},    {"q", o.q},
                    {"n", o.n},                      {"count", count.str()},
                    {"asymptote", estimate.str()},   {"ratio", ratio.to_string()},
                    {"decimal", ratio.to_decimal(o.digits)}}
                       .dump(2)
            << '\n';
    } else {
        print_table(out, {{"family", spec.to_string()},
                          {"count", count.str()},
                          {"asymptote", estimate.str()},
                          {"ratio", ratio.to_string()},
                          {"decimal", ratio.to_decimal(o.digits)}});
    }
    return kExitOk;
}

int cmd_bound(const Options& o, std::ostream& out) {
    check_q(o.q);
    const BigCount count = count_formula(FamilySpec{}, o.q, o.n).formula;
    const BigCount bound = upper_bound(o.q, o.n);
    const bool holds = count <= bound;
    if (o.json) {
        out << Json{{"q", o.q}, {"n", o.n}, {"count", count.str()}, {"bound", bound.str()}, {"holds", holds}}.dump(2)
            << '\n';
    } else {
        print_table(out, {{"count", count.str()}, {"bound", bound.str()}, {"holds", holds ? "yes" : "NO"}});
    }
    return holds ? kExitOk : kExitMismatch;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Analyze, construct, count and verify canalyzing functions over finite fields", "canalyze"};
    app.require_subcommand(1);
    Options o;

    auto add_qn = [&](CLI::App* cmd) {
        cmd->add_option("--q", o.q, "field order (prime power)")->required();
        cmd->add_option("--n", o.n, "number of variables")->required();
    };
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json, "emit one JSON document"); };
    auto add_workers = [&](CLI::App* cmd) {
        cmd->add_option("--workers", o.workers, "threads for exhaustive enumeration")->check(CLI::PositiveNumber);
    };
    const char* family_help = "family as i=<k|*>,a=<c|*>,b=<c|*>";

    auto* count = app.add_subcommand("count", "cardinality of a canalyzing family");
    add_qn(count);
    count->add_option("--family", o.family, family_help)->required();
    count->add_option("--method", o.method, "formula, brute or both")
        ->check(CLI::IsMember({"formula", "brute", "both"}));
    add_workers(count);
    add_json(count);

    auto* brute = app.add_subcommand("brute", "cardinality by exhaustive enumeration");
    add_qn(brute);
    brute->add_option("--family", o.family, family_help)->required();
    add_workers(brute);
    add_json(brute);

    auto* verify = app.add_subcommand("verify", "closed forms against enumeration for all eight families");
    add_qn(verify);
    add_workers(verify);
    add_json(verify);

    auto* analyze = app.add_subcommand("analyze", "ANF, degrees, essential variables and canalyzing triples");
    analyze->add_option("--file", o.file, "function file (JSON)")->required();
    add_json(analyze);

    auto* sample_cmd = app.add_subcommand("sample", "seeded uniform members of C^i_{a,b}");
    add_qn(sample_cmd);
    sample_cmd->add_option("--i", o.i, "canalyzing variable (1-based)")->required();
    sample_cmd->add_option("--a", o.a, "canalyzing input code")->required();
    sample_cmd->add_option("--b", o.b, "canalyzed output code")->required();
    sample_cmd->add_option("--seed", o.seed, "generator seed")->required();
    sample_cmd->add_option("--count", o.count, "number of functions");

    auto* identity = app.add_subcommand("identity", "both sides of the Boolean combinatorial identity");
    identity->add_option("--n-max", o.n_max, "largest n")->required();
    add_json(identity);

    auto* asym = app.add_subcommand("asymptote", "exact ratio of a count to its leading-order estimate");
    add_qn(asym);
    asym->add_option("--family", o.family, family_help)->required();
    asym->add_option("--digits", o.digits, "decimal digits");
    add_json(asym);

    auto* bound = app.add_subcommand("bound", "the n q^2 q^((q-1) q^(n-1)) upper bound on all canalyzing functions");
    add_qn(bound);
    add_json(bound);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (count->parsed()) return cmd_count(o, out);
        if (brute->parsed()) return cmd_brute(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (analyze->parsed()) return cmd_analyze(o, out);
        if (sample_cmd->parsed()) return cmd_sample(o, out);
        if (identity->parsed()) return cmd_identity(o, out);
        if (asym->parsed()) return cmd_asymptote(o, out);
        if (bound->parsed()) return cmd_bound(o, out);
    } catch (const NotPrimePower& e) {
        err << "NotPrimePower: " << e.what() << '\n';
        return kExitLimit;
    } catch (const SizeLimitExceeded& e) {
        err << "SizeLimitExceeded: " << e.what() << '\n';
        return kExitLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace canalyze
