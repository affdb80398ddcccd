#include "charclass/ring.hpp"

#include <sstream>

#include "charclass/errors.hpp"

namespace charclass {

namespace {

int checked_cap(int cap) {
    if (cap < 0)
        throw usage_error("series cap must be nonnegative, got " + std::to_string(cap));
    return cap;
}

void require_same_cap(int a, int b) {
    if (a != b)
        throw usage_error("cap mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

TruncSeries::TruncSeries(int cap)
    : cap_(checked_cap(cap)), coeffs_(static_cast<size_t>(cap_) + 1) {}

TruncSeries::TruncSeries(std::vector<Int> coeffs, int cap)
    : cap_(checked_cap(cap)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<size_t>(cap_) + 1);
}

TruncSeries TruncSeries::zero(int cap) { return TruncSeries(cap); }

TruncSeries TruncSeries::one(int cap) { return constant(1, cap); }

TruncSeries TruncSeries::constant(Int value, int cap) {
    TruncSeries s(cap);
    s.coeffs_[0] = std::move(value);
    return s;
}

TruncSeries TruncSeries::monomial(Int coeff, int power, int cap) {
    TruncSeries s(cap);
    s.set_coeff(power, std::move(coeff));
    return s;
}

const Int& TruncSeries::coeff(int power) const {
    static const Int zero_value = 0;
    if (power < 0)
        throw usage_error("coefficient index must be nonnegative");
    if (power > cap_)
        return zero_value;  // terms above the cap are identically zero
    return coeffs_[static_cast<size_t>(power)];
}

TruncSeries& TruncSeries::set_coeff(int power, Int value) {
    if (power < 0)
        throw usage_error("coefficient index must be nonnegative");
    if (power <= cap_)
        coeffs_[static_cast<size_t>(power)] = std::move(value);
    return *this;  // above-cap writes vanish in the quotient
}

bool TruncSeries::is_zero() const {
    for (const Int& v : coeffs_)
        if (v != 0)
            return false;
    return true;
}

bool TruncSeries::is_one() const {
    if (coeffs_[0] != 1)
        return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    require_same_cap(a.cap_, b.cap_);
    TruncSeries out(a.cap_);
    for (int i = 0; i <= a.cap_; ++i)
        out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    require_same_cap(a.cap_, b.cap_);
    TruncSeries out(a.cap_);
    for (int i = 0; i <= a.cap_; ++i)
        out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return out;
}

TruncSeries operator-(const TruncSeries& a) {
    TruncSeries out(a.cap_);
    for (int i = 0; i <= a.cap_; ++i)
        out.coeffs_[i] = -a.coeffs_[i];
    return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    require_same_cap(a.cap_, b.cap_);
    TruncSeries out(a.cap_);
    for (int i = 0; i <= a.cap_; ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (int j = 0; i + j <= a.cap_; ++j) {
            if (b.coeffs_[j] == 0)
                continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TruncSeries TruncSeries::pow(const Int& exponent) const {
    if (exponent < 0)
        return inverse().pow(-exponent);
    TruncSeries result = one(cap_);
    TruncSeries base = *this;
    Int e = exponent;
    while (e > 0) {
        if (parity(e))
            result = result * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return result;
}

TruncSeries TruncSeries::inverse() const {
    const Int& a0 = coeffs_[0];
    if (a0 != 1 && a0 != -1)
        throw not_invertible_error("constant term " + a0.str() + " is not a unit");
    // Solve (a*b)_t = 0 for t >= 1 coefficient by coefficient; a0^{-1} = a0.
    TruncSeries b(cap_);
    b.coeffs_[0] = a0;
    for (int t = 1; t <= cap_; ++t) {
        Int acc = 0;
        for (int i = 1; i <= t; ++i)
            acc += coeffs_[i] * b.coeffs_[t - i];
        b.coeffs_[t] = -a0 * acc;
    }
    return b;
}

TruncSeriesMod2 TruncSeries::mod2() const {
    TruncSeriesMod2 out(cap_);
    for (int i = 0; i <= cap_; ++i)
        out.set_coeff(i, parity(coeffs_[i]));
    return out;
}

std::string TruncSeries::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= cap_; ++i) {
        const Int& v = coeffs_[i];
        if (v == 0)
            continue;
        Int a = abs(v);
        if (first) {
            if (v < 0)
                out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << a.str();
        } else {
            if (a != 1)
                out << a.str() << "*";
            out << "c";
            if (i > 1)
                out << "^" << i;
        }
    }
    return first ? "0" : out.str();
}

TruncSeriesMod2::TruncSeriesMod2(int cap)
    : cap_(checked_cap(cap)), bits_(static_cast<size_t>(cap_) + 1, 0) {}

TruncSeriesMod2 TruncSeriesMod2::zero(int cap) { return TruncSeriesMod2(cap); }

TruncSeriesMod2 TruncSeriesMod2::one(int cap) {
    TruncSeriesMod2 s(cap);
    s.bits_[0] = 1;
    return s;
}

int TruncSeriesMod2::coeff(int power) const {
    if (power < 0)
        throw usage_error("coefficient index must be nonnegative");
    if (power > cap_)
        return 0;
    return bits_[static_cast<size_t>(power)];
}

TruncSeriesMod2& TruncSeriesMod2::set_coeff(int power, int bit) {
    if (power < 0)
        throw usage_error("coefficient index must be nonnegative");
    if (power <= cap_)
        bits_[static_cast<size_t>(power)] = static_cast<unsigned char>(bit & 1);
    return *this;
}

bool TruncSeriesMod2::is_zero() const {
    for (unsigned char b : bits_)
        if (b)
            return false;
    return true;
}

bool TruncSeriesMod2::is_one() const {
    if (!bits_[0])
        return false;
    for (size_t i = 1; i < bits_.size(); ++i)
        if (bits_[i])
            return false;
    return true;
}

TruncSeriesMod2 operator+(const TruncSeriesMod2& a, const TruncSeriesMod2& b) {
    require_same_cap(a.cap_, b.cap_);
    TruncSeriesMod2 out(a.cap_);
    for (int i = 0; i <= a.cap_; ++i)
        out.bits_[i] = a.bits_[i] ^ b.bits_[i];
    return out;
}

TruncSeriesMod2 operator*(const TruncSeriesMod2& a, const TruncSeriesMod2& b) {
    require_same_cap(a.cap_, b.cap_);
    TruncSeriesMod2 out(a.cap_);
    for (int i = 0; i <= a.cap_; ++i) {
        if (!a.bits_[i])
            continue;
        for (int j = 0; i + j <= a.cap_; ++j)
            out.bits_[i + j] ^= (a.bits_[i] & b.bits_[j]);
    }
    return out;
}

std::string TruncSeriesMod2::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= cap_; ++i) {
        if (!bits_[i])
            continue;
        if (!first)
            out << " + ";
        first = false;
        if (i == 0)
            out << "1";
        else if (i == 1)
            out << "c";
        else
            out << "c^" << i;
    }
    return first ? "0" : out.str();
}

}  // namespace charclass
