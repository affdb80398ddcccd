#pragma once

#include <string>
#include <vector>

#include "charclass/ints.hpp"

namespace charclass {

// All class computations happen in Z[c]/(c^(cap+1)) where c is a single
// generator of cohomological degree 2. The default cap retains 1, c, c^2,
// i.e. cohomological degree <= 4; higher caps are used by cross-checks.
inline constexpr int kDefaultCap = 2;

class TruncSeriesMod2;

class TruncSeries {
public:
    explicit TruncSeries(int cap = kDefaultCap);
    // Coefficients above the cap are dropped silently (quotient semantics),
    // missing ones are zero.
    TruncSeries(std::vector<Int> coeffs, int cap);

    static TruncSeries zero(int cap = kDefaultCap);
    static TruncSeries one(int cap = kDefaultCap);
    static TruncSeries constant(Int value, int cap = kDefaultCap);
    static TruncSeries monomial(Int coeff, int power, int cap = kDefaultCap);

    int cap() const { return cap_; }
    const Int& coeff(int power) const;
    TruncSeries& set_coeff(int power, Int value);

    bool is_zero() const;
    bool is_one() const;

    // Negative exponents invert first; requires a unit constant term then.
    TruncSeries pow(const Int& exponent) const;
    TruncSeries inverse() const;
    TruncSeriesMod2 mod2() const;

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

    bool operator==(const TruncSeries&) const = default;

    std::string str() const;

private:
    int cap_ = kDefaultCap;
    std::vector<Int> coeffs_;  // size cap_+1, coeffs_[i] multiplies c^i
};

// The same quotient ring with coefficients in Z/2; houses Stiefel-Whitney
// data, where coefficient i sits in cohomological degree 2i.
class TruncSeriesMod2 {
public:
    explicit TruncSeriesMod2(int cap = kDefaultCap);

    static TruncSeriesMod2 zero(int cap = kDefaultCap);
    static TruncSeriesMod2 one(int cap = kDefaultCap);

    int cap() const { return cap_; }
    int coeff(int power) const;
    TruncSeriesMod2& set_coeff(int power, int bit);

    bool is_zero() const;
    bool is_one() const;

    friend TruncSeriesMod2 operator+(const TruncSeriesMod2& a, const TruncSeriesMod2& b);
    friend TruncSeriesMod2 operator*(const TruncSeriesMod2& a, const TruncSeriesMod2& b);

    bool operator==(const TruncSeriesMod2&) const = default;

    std::string str() const;

private:
    int cap_ = kDefaultCap;
    std::vector<unsigned char> bits_;
};

}  // namespace charclass
