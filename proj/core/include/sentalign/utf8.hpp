// Copyright 2026 The sentalign Authors
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

#include <optional>
#include <string>
#include <string_view>

namespace sentalign::utf8 {

/// Byte offset of the first ill-formed sequence, or nullopt if `text` is valid.
std::optional<std::size_t> find_invalid(std::string_view text) noexcept;

inline bool is_valid(std::string_view text) noexcept { return !find_invalid(text); }

/// Decodes to code points. Ill-formed sequences become U+FFFD.
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view text);

}  // namespace sentalign::utf8
