#include "goat/cli/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <string>

namespace goat::cli {

namespace {
std::atomic<LogLevel> g_level{LogLevel::info};

void emit(std::string_view tag, std::string_view message) {
    std::cerr << "[goat " << tag << "] " << message << '\n';
}
}  // namespace

LogLevel log_level_from_env() {
    const char* raw = std::getenv("GOAT_LOG");
    if (raw == nullptr) return LogLevel::info;
    const std::string value(raw);
    if (value == "debug") return LogLevel::debug;
    if (value == "quiet") return LogLevel::quiet;
    return LogLevel::info;
}

void set_log_level(LogLevel level) { g_level.store(level); }
LogLevel log_level() { return g_level.load(); }

void log_info(std::string_view message) {
    if (log_level() >= LogLevel::info) emit("info", message);
}

void log_debug(std::string_view message) {
    if (log_level() >= LogLevel::debug) emit("debug", message);
}

}  // namespace goat::cli
