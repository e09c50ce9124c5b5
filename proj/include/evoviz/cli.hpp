#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

namespace evoviz::cli {

enum ExitCode : int { success = 0, data_error = 1, usage_error = 2 };

// Plain-text configuration: one `key = value` per line, `#` starts a comment,
// blank lines ignored. Keys are the long flag names with '-' replaced by '_'
// (e.g. max_points). Unknown keys and duplicate keys throw ConfigError.
using ConfigValues = std::map<std::string, std::string>;

[[nodiscard]] ConfigValues parse_config(std::istream& in);
[[nodiscard]] ConfigValues read_config_file(const std::filesystem::path& path);

// Entry point shared by the executable and the tests. Subcommands: run,
// embed, hv, render, pipeline. Returns the process exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evoviz::cli
