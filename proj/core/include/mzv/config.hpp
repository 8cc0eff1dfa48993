#pragma once

#include <mzv/rational.hpp>

#include <cstddef>
#include <string>

namespace mzv {

struct Config {
    int weight_cap = 12;          // relation engine
    unsigned digits_cap = 1000;   // numeric engine
    std::size_t product_cache_entries = 1u << 19;
    Integer denominator_bound = Integer("1000000000000");
};

const Config& config();
void set_config(const Config& c);

// Reads an optional JSON file with keys weight_cap, digits_cap,
// product_cache_entries, denominator_bound, then applies MZV_WEIGHT_CAP and
// MZV_DIGITS_CAP from the environment. Throws ParseError on malformed input.
Config load_config(const std::string& path);

} // namespace mzv
