#pragma once

#include <string>

namespace evofs {

/// Writes to a sibling temp file and renames into place, so readers never
/// observe a partially written file.
void write_file_atomic(const std::string& path, const std::string& content);

/// Fixed-format double for reproducible text output (printf %.<sig>g).
std::string format_double(double v, int significant_digits);

}  // namespace evofs
