#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace prufer {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int floor_rat(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);
    if (r < 0 && q * rat_den(r) != rat_num(r)) --q;
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q = rat_num(r) / rat_den(r);
    if (r > 0 && q * rat_den(r) != rat_num(r)) ++q;
    return q;
}

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline std::string rat_to_string(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

/// Parses "p" or "p/q". Returns nullopt on malformed input.
std::optional<Rat> parse_rat(const std::string& text);

}  // namespace prufer
