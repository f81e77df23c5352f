#pragma once

#include <string>

#include "vdl/js/ast.hpp"

namespace vdl::js {

/// One statement per line, two-space indentation, trailing newline.
std::string print_pretty(const Node& node);

/// Whole program on one line; a space appears only where two tokens would
/// otherwise fuse.
std::string print_compact(const Node& node);

/// Honours the program's `compact` flag.
std::string print_program(const Node& program);

/// JavaScript Number::toString for finite and non-finite doubles.
std::string number_to_string(double value);

/// Double-quoted literal with escapes; non-ASCII is written as \uXXXX.
std::string quote_string(const std::string& utf8);

}  // namespace vdl::js
