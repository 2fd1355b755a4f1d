#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace icalign {

inline constexpr const char* kVersion = "0.1.0";

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) {
    throw Error(msg);
}

inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string to_hex(std::uint64_t v);

// Shortest decimal form that round-trips the exact double value.
std::string format_double(double v);
double parse_double(std::string_view s, const std::string& context);
long long parse_int(std::string_view s, const std::string& context);

// Uniform double in [0,1) built only from raw mt19937_64 output. The standard
// pins the engine but not the distributions, so distributions are avoided
// everywhere reproducibility matters.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Fisher-Yates with explicit index draws (std::shuffle is unspecified).
template <class T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(v[i - 1], v[j]);
    }
}

std::string base64_encode(std::string_view bytes);

std::vector<std::string> split_fields(std::string_view line, char sep);
std::string lower_ascii(std::string_view s);
std::string read_file(const std::string& path);

}  // namespace icalign
