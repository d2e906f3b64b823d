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

#include <string>
#include <string_view>
#include <vector>

namespace cvlint {

/// Grouping key for surface variants: ASCII-lowercased, apostrophes deleted,
/// remaining punctuation turned into spaces, whitespace collapsed and trimmed.
/// Bytes >= 0x80 other than UTF-8 general punctuation pass through untouched.
/// normalize(normalize(s)) == normalize(s).
std::string normalize(std::string_view s);

/// Splits an already normalized key on single spaces.
std::vector<std::string_view> tokens(std::string_view key);

/// ASCII case-insensitive equality.
bool iequals(std::string_view a, std::string_view b);

}  // namespace cvlint
