// Copyright 2026 The cvlint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string_view>

namespace cvlint {

/// Unrestricted Damerau-Levenshtein distance over bytes: insertions,
/// deletions, substitutions and adjacent transpositions, each of cost 1.
/// Unlike the optimal-string-alignment variant this is a true metric.
std::size_t dl_distance(std::string_view a, std::string_view b);

/// Same value as dl_distance when it is <= limit, otherwise some value > limit.
/// Rejects on the length difference before running the DP.
std::size_t dl_distance_bounded(std::string_view a, std::string_view b, std::size_t limit);

}  // namespace cvlint
