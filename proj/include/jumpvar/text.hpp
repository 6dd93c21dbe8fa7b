#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jumpvar {

/// Formats a double with 9 significant digits. All emitted artifacts use this
/// so that golden-file comparisons are stable.
std::string fmt_g9(double x);

std::vector<std::string> split_csv_line(const std::string& line);

/// FNV-1a 64-bit over a file's bytes, hex-encoded. Used for manifest hashes.
std::string fnv1a64_file(const std::string& path);
std::string fnv1a64_bytes(const std::string& bytes);

std::string read_file(const std::string& path);

}  // namespace jumpvar
