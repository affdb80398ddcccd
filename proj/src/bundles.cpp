#include "charclass/bundles.hpp"

#include <sstream>
#include <stdexcept>

#include "charclass/errors.hpp"

namespace charclass {

BundleExpr BundleExpr::zero() { return BundleExpr{}; }

BundleExpr BundleExpr::line(Int exponent, Int multiplicity) {
    BundleExpr e;
    e.add_line(exponent, multiplicity);
    return e;
}

BundleExpr BundleExpr::trivial_complex(Int multiplicity) {
    BundleExpr e;
    e.trivial_complex_ = std::move(multiplicity);
    return e;
}

BundleExpr BundleExpr::trivial_real(Int multiplicity) {
    BundleExpr e;
    e.trivial_real_ = std::move(multiplicity);
    return e;
}

void BundleExpr::add_line(const Int& exponent, const Int& multiplicity) {
    if (multiplicity == 0)
        return;
    if (exponent == 0) {  // xi^0 = eps_C
        trivial_complex_ += multiplicity;
        return;
    }
    Int& slot = line_terms_[exponent];
    slot += multiplicity;
    if (slot == 0)
        line_terms_.erase(exponent);
}

Int BundleExpr::complex_rank() const {
    Int rank = trivial_complex_;
    for (const auto& [m, mult] : line_terms_)
        rank += mult;
    return rank;
}

Int BundleExpr::real_rank() const { return 2 * complex_rank() + trivial_real_; }

bool BundleExpr::is_zero() const {
    return line_terms_.empty() && trivial_complex_ == 0 && trivial_real_ == 0;
}

BundleExpr operator+(const BundleExpr& a, const BundleExpr& b) {
    BundleExpr out = a;
    for (const auto& [m, mult] : b.line_terms_)
        out.add_line(m, mult);
    out.trivial_complex_ += b.trivial_complex_;
    out.trivial_real_ += b.trivial_real_;
    return out;
}

BundleExpr operator-(const BundleExpr& a, const BundleExpr& b) { return a + (-b); }

BundleExpr operator-(const BundleExpr& a) {
    BundleExpr out;
    for (const auto& [m, mult] : a.line_terms_)
        out.line_terms_.emplace(m, -mult);
    out.trivial_complex_ = -a.trivial_complex_;
    out.trivial_real_ = -a.trivial_real_;
    return out;
}

BundleExpr operator*(const Int& scale, const BundleExpr& e) {
    if (scale == 0)
        return BundleExpr::zero();
    BundleExpr out;
    for (const auto& [m, mult] : e.line_terms_)
        out.line_terms_.emplace(m, scale * mult);
    out.trivial_complex_ = scale * e.trivial_complex_;
    out.trivial_real_ = scale * e.trivial_real_;
    return out;
}

std::string BundleExpr::str() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](const Int& mult, const std::string& symbol) {
        Int a = abs(mult);
        if (first) {
            if (mult < 0)
                out << "-";
            first = false;
        } else {
            out << (mult < 0 ? " - " : " + ");
        }
        if (a != 1)
            out << a.str() << "*";
        out << symbol;
    };
    for (const auto& [m, mult] : line_terms_)
        emit(mult, "xi^" + m.str());
    if (trivial_complex_ != 0)
        emit(trivial_complex_, "eps_C");
    if (trivial_real_ != 0)
        emit(trivial_real_, "eps_R");
    return out.str();
}

BundleExpr tensor_lines(const Int& m1, const Int& m2) {
    return BundleExpr::line(m1 + m2);
}

TruncSeries chern_of_complex_part(const BundleExpr& e, int cap) {
    TruncSeries acc = TruncSeries::one(cap);
    for (const auto& [m, mult] : e.line_terms()) {
        TruncSeries line = TruncSeries::one(cap).set_coeff(1, m);  // 1 + m c
        acc = acc * line.pow(mult);
    }
    return acc;  // trivial summands contribute the factor 1
}

TruncSeries total_chern(const BundleExpr& e, int cap) {
    if (!e.is_complex())
        throw not_complex_error("total Chern class requires a purely complex expression "
                                "(real trivial multiplicity " +
                                e.trivial_real_mult().str() + ")");
    return chern_of_complex_part(e, cap);
}

TruncSeries total_pontrjagin(const BundleExpr& e, int cap) {
    TruncSeries c = chern_of_complex_part(e, cap);
    TruncSeries alternated(cap);
    for (int i = 0; i <= cap; ++i)
        alternated.set_coeff(i, (i % 2 == 0) ? c.coeff(i) : -c.coeff(i));
    TruncSeries product = alternated * c;  // 1 - p_1 + p_2 - ...
    TruncSeries p = TruncSeries::one(cap);
    for (int t = 1; 2 * t <= cap; ++t)
        p.set_coeff(2 * t, (t % 2 == 1) ? -product.coeff(2 * t) : product.coeff(2 * t));
    for (int i = 1; i <= cap; i += 2) {
        // the alternated product is even; a nonzero odd slot is a sign bug
        if (product.coeff(i) != 0)
            throw std::logic_error("Chern-Pontrjagin product has an odd-degree term");
    }
    return p;
}

TruncSeriesMod2 total_sw(const BundleExpr& e, int cap) {
    return chern_of_complex_part(e, cap).mod2();
}

CharClassReport solve_stable(const BundleExpr& known, const BundleExpr& rhs, int cap) {
    BundleExpr difference = rhs - known;
    CharClassReport report;
    report.total_chern = chern_of_complex_part(difference, cap);
    report.total_pontrjagin = total_pontrjagin(difference, cap);
    report.total_sw = total_sw(difference, cap);
    report.complex_rank = difference.complex_rank();
    report.chern_from_complex_part = difference.trivial_real_mult() != 0;
    return report;
}

}  // namespace charclass
