#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace charclass {

// Exact integer used for every coefficient and weight. Enumeration can push
// values like n*sum(l_i^2) and Chern-product coefficients past any fixed
// width, so the engine never uses machine integers for math.
using Int = boost::multiprecision::cpp_int;

// 0 or 1, correct for negative values.
inline int parity(const Int& v) { return v % 2 == 0 ? 0 : 1; }

inline bool fits_int64(const Int& v) {
    return v >= std::numeric_limits<long long>::min() &&
           v <= std::numeric_limits<long long>::max();
}

inline long long to_int64(const Int& v) { return v.convert_to<long long>(); }

// Strict integer literal: optional sign followed by digits only.
inline std::optional<Int> parse_int(std::string_view s) {
    if (s.empty())
        return std::nullopt;
    const bool negative = s[0] == '-';
    size_t pos = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (pos == s.size())
        return std::nullopt;
    for (size_t i = pos; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return std::nullopt;
    Int value(std::string(s.substr(pos)));
    return negative ? Int(-value) : value;
}

}  // namespace charclass
