#pragma once

#include <string_view>

namespace goat::cli {

enum class LogLevel { quiet = 0, info = 1, debug = 2 };

/// Reads GOAT_LOG (debug | info | quiet). Unset or unrecognised means info.
LogLevel log_level_from_env();

void set_log_level(LogLevel level);
LogLevel log_level();

/// Diagnostics go to stderr only.
void log_info(std::string_view message);
void log_debug(std::string_view message);

}  // namespace goat::cli
