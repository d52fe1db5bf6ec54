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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "canalyze/cli.hpp"
#include "canalyze/io.hpp"

using namespace canalyze;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has_float(const Json& value) {
    if (value.is_number_float()) return true;
    if (value.is_structured()) {
        for (const auto& item : value) {
            if (has_float(item)) return true;
        }
    }
    return false;
}

class TempFile {
   public:
    explicit TempFile(const std::string& text)
        : path_(std::filesystem::temp_directory_path() / ("canalyze_cli_" + std::to_string(counter_++) + ".json")) {
        std::ofstream(path_) << text;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

   private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("count") {
    const Outcome both = invoke({"count", "--q", "2", "--n", "3", "--family", "i=*,a=*,b=*", "--method", "both", "--json"});
    CHECK(both.code == kExitOk);
    const Json doc = Json::parse(both.out);
    CHECK(doc["formula"] == "120");
    CHECK(doc["brute"] == "120");
    CHECK(doc["match"] == true);
    CHECK(doc["theorem"] == "Thm 5");
    CHECK_FALSE(has_float(doc));

    const Outcome table = invoke({"count", "--q", "2", "--n", "4", "--family", "i=*,a=*,b=*"});
    CHECK(table.code == kExitOk);
    CHECK(table.out.find("3514") != std::string::npos);
    CHECK(table.err.empty());

    const Outcome brute = invoke({"brute", "--q", "3", "--n", "1", "--family", "i=1,a=0,b=0", "--json"});
    CHECK(brute.code == kExitOk);
    CHECK(Json::parse(brute.out)["brute"] == "9");
}

TEST_CASE("exit codes") {
    CHECK(invoke({"count", "--q", "6", "--n", "2", "--family", "i=*,a=*,b=*"}).code == kExitLimit);
    CHECK(invoke({"count", "--q", "2", "--n", "30", "--family", "i=*,a=*,b=*"}).code == kExitLimit);
    CHECK(invoke({"count", "--q", "3", "--n", "3", "--family", "i=*,a=*,b=*", "--method", "brute"}).code == kExitLimit);
    CHECK(invoke({"verify", "--q", "6", "--n", "1"}).code == kExitLimit);

    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"count", "--q", "2"},
             {"count", "--q", "2", "--n", "2", "--family", "i=1,a=0"},
             {"count", "--q", "2", "--n", "2", "--family", "i=3,a=0,b=0"},
             {"count", "--q", "2", "--n", "2", "--family", "i=*,a=*,b=*", "--method", "guess"},
             {"count", "--q", "two", "--n", "2", "--family", "i=*,a=*,b=*"},
             {"sample", "--q", "2", "--n", "2", "--i", "1", "--a", "2", "--b", "0", "--seed", "1"},
             {"analyze", "--file", "/nonexistent/canalyze.json"},
         }) {
        const Outcome o = invoke(args);
        CHECK(o.code == kExitUsage);
        CHECK(o.out.empty());
        CHECK_FALSE(o.err.empty());
    }
    CHECK(invoke({"--help"}).code == kExitOk);
}

TEST_CASE("verify") {
    const Outcome o = invoke({"verify", "--q", "3", "--n", "2", "--workers", "4", "--json"});
    CHECK(o.code == kExitOk);
    const Json doc = Json::parse(o.out);
    CHECK(doc["all_match"] == true);
    REQUIRE(doc["families"].size() == 8);
    CHECK(doc["families"][7]["formula"] == "9933");
    CHECK_FALSE(has_float(doc));

    const Outcome text = invoke({"verify", "--q", "2", "--n", "2"});
    CHECK(text.code == kExitOk);
    CHECK(text.out.find("C^*_{*,*}") != std::string::npos);
}

TEST_CASE("analyze") {
    // x1 + 1 over GF(3), zero exactly at x1 = 2
    const TempFile file(R"({"q":3,"n":2,"anf":[{"coeff":1,"exps":[1,0]},{"coeff":1,"exps":[0,0]}]})");
    const Outcome o = invoke({"analyze", "--file", file.path(), "--json"});
    REQUIRE(o.code == kExitOk);
    const Json doc = Json::parse(o.out);
    CHECK(doc["degree"] == 1);
    CHECK(doc["essential"] == Json::array({1}));
    CHECK(doc["variable_degrees"] == Json::array({1, 0}));
    CHECK(doc["triples"].size() == 3);
    CHECK(doc["triples"][0] == Json({{"i", 1}, {"a", 0}, {"b", 1}}));
    CHECK_FALSE(has_float(doc));

    const Outcome text = invoke({"analyze", "--file", file.path()});
    CHECK(text.code == kExitOk);
    CHECK(text.out.find("x1 + 1") != std::string::npos);

    const TempFile broken(R"({"q":3,"n":2,"table":[0,1]})");
    CHECK(invoke({"analyze", "--file", broken.path()}).code == kExitUsage);
    const TempFile composite(R"({"q":6,"n":1,"table":[0,1,2,3,4,5]})");
    CHECK(invoke({"analyze", "--file", composite.path()}).code == kExitLimit);
}

TEST_CASE("sample") {
    const std::vector<std::string> args{"sample", "--q", "5", "--n", "2", "--i", "2", "--a", "3", "--b", "4", "--seed", "11", "--count", "5"};
    const Outcome first = invoke(args);
    const Outcome second = invoke(args);
    REQUIRE(first.code == kExitOk);
    CHECK(first.out == second.out);

    std::istringstream lines(first.out);
    std::string line;
    int read = 0;
    std::vector<std::string> seen;
    while (std::getline(lines, line)) {
        const Json record = Json::parse(line);
        CHECK_FALSE(has_float(record));
        const TruthTable f = function_from_json(record);
        CHECK(is_canalyzing(f, 2, 3, 4));
        seen.push_back(line);
        ++read;
    }
    CHECK(read == 5);
    CHECK(seen[0] != seen[1]);

    const Outcome other = invoke({"sample", "--q", "5", "--n", "2", "--i", "2", "--a", "3", "--b", "4", "--seed", "12"});
    CHECK(other.out != seen[0] + "\n");
}

TEST_CASE("identity, asymptote and bound") {
    const Outcome identity = invoke({"identity", "--n-max", "4"});
    CHECK(identity.code == kExitOk);
    const Json rows = Json::parse(invoke({"identity", "--n-max", "4", "--json"}).out)["rows"];
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) CHECK(row["lhs"] == row["rhs"]);

    const Outcome ratio = invoke({"asymptote", "--q", "2", "--n", "3", "--family", "i=*,a=*,b=*", "--digits", "3", "--json"});
    CHECK(ratio.code == kExitOk);
    const Json r = Json::parse(ratio.out);
    CHECK(r["ratio"] == "5/8");
    CHECK(r["decimal"] == "0.625");
    CHECK_FALSE(has_float(r));

    const Outcome bound = invoke({"bound", "--q", "3", "--n", "2", "--json"});
    CHECK(bound.code == kExitOk);
    CHECK(Json::parse(bound.out)["holds"] == true);
}

TEST_CASE("repeated invocations are byte-identical") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"count", "--q", "3", "--n", "2", "--family", "i=*,a=*,b=0", "--method", "both", "--workers", "3"},
             {"verify", "--q", "2", "--n", "2", "--json"},
             {"asymptote", "--q", "4", "--n", "3", "--family", "i=1,a=*,b=*"},
             {"identity", "--n-max", "10"},
         }) {
        CHECK(invoke(args).out == invoke(args).out);
    }
}
