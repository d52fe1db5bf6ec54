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

#include <functional>
#include <span>
#include <vector>

namespace canalyze {

/// Calls visit on every tuple of length parts with entries in [0, bound]
/// summing to k, in lexicographic order. The span is only valid during the
/// call.
void for_each_bounded_composition(int k, int parts, int bound, const std::function<void(std::span<const int>)>& visit);

std::vector<std::vector<int>> bounded_compositions(int k, int parts, int bound);

}  // namespace canalyze
