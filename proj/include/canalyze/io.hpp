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

#include <istream>

#include <json.hpp>

#include "canalyze/canalyzing.hpp"
#include "canalyze/counting.hpp"
#include "canalyze/function.hpp"

namespace canalyze {

using Json = nlohmann::ordered_json;

/// Function file: {"q": Q, "n": N, "table": [...]} or
/// {"q": Q, "n": N, "anf": [{"coeff": c, "exps": [k_1, ..., k_n]}, ...]}.
/// An anf record is converted to its table. Throws ParseError on malformed
/// records and NotPrimePower for a bad q.
TruthTable function_from_json(const Json& record);
TruthTable read_function(std::istream& in);

Json table_to_json(const TruthTable& f);
Json anf_to_json(const AnfPolynomial& f);

Json to_json(const CanalyzingTriple& triple);

/// Counts are decimal strings.
Json to_json(const CountReport& report);

}  // namespace canalyze
