#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace catwalk {

// Exact arbitrary-precision integer. Catalan counts overflow 64 bits near
// n = 33, so every count in this library is a cpp_int; no floating point
// participates in counting, ranking or sampling.
using Integer = boost::multiprecision::cpp_int;

// Same representation, non-negative by contract. Used for counts, codes
// and table cells.
using Natural = Integer;

/// Number of bits needed to address K distinct values: ceil(log2(K)).
/// K = 1 needs 0 bits. Requires K >= 1.
inline int ceil_log2(const Natural& k) {
    if (k < 1) throw std::invalid_argument("ceil_log2: argument must be >= 1");
    if (k == 1) return 0;
    const Natural highest = k - 1;
    return static_cast<int>(boost::multiprecision::msb(highest)) + 1;
}

/// Strict decimal parser: digits only, no sign, no whitespace.
inline Natural parse_natural(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("parse_natural: empty string");
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("parse_natural: non-digit character in \"" +
                                        std::string(text) + "\"");
    }
    return Natural(std::string(text));
}

inline std::string to_decimal(const Integer& v) { return v.str(); }

}  // namespace catwalk
