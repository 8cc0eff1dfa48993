#include <mzv/config.hpp>
#include <mzv/error.hpp>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <shared_mutex>

namespace mzv {

namespace {

std::shared_mutex config_mutex;
Config current;

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n <= 0) throw ParseError(std::string(name) + " must be a positive integer", 0);
    return static_cast<int>(n);
}

} // namespace

const Config& config() {
    std::shared_lock lock(config_mutex);
    return current;
}

void set_config(const Config& c) {
    std::unique_lock lock(config_mutex);
    current = c;
}

Config load_config(const std::string& path) {
    Config c;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open config file " + path, 0);
        nlohmann::json j;
        try {
            in >> j;
            if (j.contains("weight_cap")) c.weight_cap = j.at("weight_cap").get<int>();
            if (j.contains("digits_cap")) c.digits_cap = j.at("digits_cap").get<unsigned>();
            if (j.contains("product_cache_entries")) c.product_cache_entries = j.at("product_cache_entries").get<std::size_t>();
            if (j.contains("denominator_bound")) c.denominator_bound = Integer(j.at("denominator_bound").get<std::string>());
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("config: ") + e.what(), 0);
        }
    }
    c.weight_cap = env_int("MZV_WEIGHT_CAP", c.weight_cap);
    c.digits_cap = static_cast<unsigned>(env_int("MZV_DIGITS_CAP", static_cast<int>(c.digits_cap)));
    return c;
}

} // namespace mzv
