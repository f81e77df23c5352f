#pragma once

#include <string>
#include <string_view>

namespace vdl::js {

// Strings in the AST are UTF-8. Lone surrogates (reachable through \u escapes)
// are carried in the generalized form, three bytes each, so every sequence of
// UTF-16 code units survives a round trip.

std::u16string utf8_to_utf16(std::string_view s);
std::string utf16_to_utf8(std::u16string_view s);
void append_code_point(std::string& out, char32_t cp);

/// Length in UTF-16 code units.
std::size_t utf16_length(std::string_view s);

}  // namespace vdl::js
