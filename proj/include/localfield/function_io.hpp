#pragma once

#include <string>
#include <string_view>

#include "localfield/step_function.hpp"

namespace lf {

/// Function files are JSON documents:
///
///   {"field": {"p": 2, "c": 1}, "side": "spatial", "resolution": 1,
///    "support": 1, "terms": [{"center": "q=2^1; 1@-1", "level": 1,
///    "coef": [1.0, 0.0]}]}
///
/// Terms are summed as coef * indicator(center + P^level). `side` is optional
/// and defaults to spatial.
///
/// Syntax errors throw ParseError with the byte offset; structural errors
/// throw InvalidArgument naming the JSON path.
StepFunction parse_function(std::string_view text, FieldOptions options = {});

/// One term per nonzero coset at the function's resolution. Parsing the output
/// gives back the same function.
std::string emit_function(const StepFunction& f);

StepFunction read_function_file(const std::string& path, FieldOptions options = {});
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lf
