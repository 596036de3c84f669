#pragma once

#include <string>
#include <utility>
#include <vector>

namespace boostcoh::cli {

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Reads `key = value` lines. Blank lines and lines starting with '#' are
/// skipped; keys may be written with or without a leading "--".
/// Throws DomainError on unreadable files or lines without '='.
ConfigEntries load_config(const std::string& path);

/// Removes `--config <path>` / `--config=<path>` from args and appends
/// `--key value` for every config entry whose flag is not already present,
/// so explicit flags win.
std::vector<std::string> apply_config(const std::vector<std::string>& args);

}  // namespace boostcoh::cli
