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

#include "canalyze/compositions.hpp"

#include <algorithm>

#include "canalyze/errors.hpp"

namespace canalyze {

namespace {

void fill(std::vector<int>& tuple, std::size_t pos, int remaining, int bound,
          const std::function<void(std::span<const int>)>& visit) {
    if (pos == tuple.size()) {
        if (remaining == 0) visit(tuple);
        return;
    }
    const auto after = static_cast<long long>(tuple.size() - pos - 1) * bound;
    const int lo = static_cast<int>(std::max<long long>(0, remaining - after));
    const int hi = std::min(bound, remaining);
    for (int v = lo; v <= hi; ++v) {
        tuple[pos] = v;
        fill(tuple, pos + 1, remaining - v, bound, visit);
    }
}

}  // namespace

void for_each_bounded_composition(int k, int parts, int bound, const std::function<void(std::span<const int>)>& visit) {
    if (parts < 0 || bound < 0) throw InvalidArgument("composition needs parts >= 0 and bound >= 0");
    if (k < 0) return;
    std::vector<int> tuple(static_cast<std::size_t>(parts), 0);
    fill(tuple, 0, k, bound, visit);
}

std::vector<std::vector<int>> bounded_compositions(int k, int parts, int bound) {
    std::vector<std::vector<int>> out;
    for_each_bounded_composition(k, parts, bound, [&](std::span<const int> t) { out.emplace_back(t.begin(), t.end()); });
    return out;
}

}  // namespace canalyze
