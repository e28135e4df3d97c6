#include "duct3d/log.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace duct3d::log {

namespace {

Level level_from_env() {
    const char* v = std::getenv("DUCT3D_LOG");
    if (!v) return Level::Warn;
    if (std::strcmp(v, "debug") == 0) return Level::Debug;
    if (std::strcmp(v, "info") == 0) return Level::Info;
    if (std::strcmp(v, "warn") == 0) return Level::Warn;
    if (std::strcmp(v, "error") == 0) return Level::Error;
    return Level::Warn;
}

std::atomic<Level>& level_slot() {
    static std::atomic<Level> lv{level_from_env()};
    return lv;
}

const char* tag(Level lv) {
    switch (lv) {
        case Level::Debug: return "debug";
        case Level::Info: return "info";
        case Level::Warn: return "warn";
        case Level::Error: return "error";
    }
    return "?";
}

}  // namespace

Level level() { return level_slot().load(std::memory_order_relaxed); }

void set_level(Level lv) { level_slot().store(lv, std::memory_order_relaxed); }

void write(Level lv, const std::string& msg) {
    if (static_cast<int>(lv) < static_cast<int>(level())) return;
    std::fprintf(stderr, "[duct3d %s] %s\n", tag(lv), msg.c_str());
}

}  // namespace duct3d::log
