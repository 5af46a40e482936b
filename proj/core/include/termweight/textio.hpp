#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace termweight {

// Shortest decimal rendering that round-trips the exact double value
// (std::to_chars). Used by every emitted table and model file.
std::string format_double(double value);

// Strict double parser; throws FormatError on trailing garbage.
double parse_double(std::string_view text, std::string_view what);

std::string read_file(const std::filesystem::path& path);

// Writes via a temporary file in the same directory followed by a
// rename, so interrupted runs never leave partial output behind.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// Splits on '\n', dropping one trailing '\r' per line. A trailing
// newline does not produce an extra empty line.
std::vector<std::string_view> split_lines(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char sep);

} // namespace termweight
