// Copyright 2026 The Mindmap Authors.
// Licensed under the Apache License, Version 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <string>
#include <string_view>

namespace mindmap::utf8 {

/// Decodes UTF-8 into Unicode scalar values. Throws std::invalid_argument on
/// malformed input (overlong forms, surrogates, truncated sequences).
std::u32string decode(std::string_view text);

std::string encode(std::u32string_view text);

/// Number of Unicode scalar values in `text`.
std::size_t length(std::string_view text);

bool valid(std::string_view text) noexcept;

}  // namespace mindmap::utf8
