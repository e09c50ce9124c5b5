#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "evoviz/core.hpp"

namespace evoviz {

inline constexpr int history_format_version = 1;

// History files are JSON lines, UTF-8, LF line endings. Line 1 is a header
// object:
//
//   {"format_version":1,"problem":"dtlz2","M":3,"D":12,"k":10,
//    "algorithm":"nsga2","population_size":92,"evaluation_budget":4600,
//    "seed":42,"reference_partitions":0,
//    "operators":{"crossover_probability":0.8,"mutation_probability":0.1,
//                 "sbx_eta":15,"pm_eta":7},
//    "rng_algorithm":"mt19937_64;..."}
//
// followed by one object per generation: {"gen":t,"x":[[...],...],"y":[[...],...]}.
// Every real is written with 17 significant digits.

void write_history(const RunHistory& history, std::ostream& out);
// Throws IoError naming the path.
void write_history(const RunHistory& history, const std::filesystem::path& path);

// Throws VersionMismatch, MalformedLine or InvariantViolation, each with the
// 1-based line number; IoError when the file cannot be opened.
[[nodiscard]] RunHistory read_history(std::istream& in);
[[nodiscard]] RunHistory read_history(const std::filesystem::path& path);

// "%.17g" formatting shared by every writer.
[[nodiscard]] std::string format_real(double value);

}  // namespace evoviz
