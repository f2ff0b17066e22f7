#pragma once

#include <string>
#include <string_view>

#include "rsp/model.hpp"

namespace rsp::cli {

// Parses instance text: lines are blank, '#' comments, or
// "item <cycle> <size>" with single-space separation.  Malformed lines
// raise parse_error with the 1-based line number; derived-quantity
// violations surface from instance::make.
instance parse_instance(std::string_view text, const instance_limits& limits = {});

// Reads and parses a file; a missing or unreadable file raises
// std::runtime_error.
instance load_instance(const std::string& path, const instance_limits& limits = {});

// One "item <cycle> <size>" line per item; parses back to an equal instance.
std::string render_instance(const instance& inst);

}  // namespace rsp::cli
