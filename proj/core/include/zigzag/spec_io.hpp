#pragma once

#include <string>

#include "zigzag/code_model.hpp"

namespace zigzag {

/// Canonical text form of a CodeSpec: one key per line, fixed order,
/// integers only, so save(load(text)) == text byte for byte.
std::string spec_to_text(const CodeSpec& spec);
CodeSpec spec_from_text(const std::string& text);

void save_spec(const CodeSpec& spec, const std::string& path);
CodeSpec load_spec(const std::string& path);

} // namespace zigzag
