#pragma once

#include <map>
#include <string>

#include "charclass/ints.hpp"
#include "charclass/ring.hpp"

namespace charclass {

// Formal Z-linear combination of powers xi^m of one complex line bundle,
// plus trivial complex and real summands. Multiplicities may be negative:
// virtual differences are what the stable tangent equation is solved in.
// xi^0 is identified with eps_C; zero multiplicities are not stored.
class BundleExpr {
public:
    BundleExpr() = default;

    static BundleExpr zero();
    static BundleExpr line(Int exponent, Int multiplicity = 1);
    static BundleExpr trivial_complex(Int multiplicity);
    static BundleExpr trivial_real(Int multiplicity);

    const std::map<Int, Int>& line_terms() const { return line_terms_; }
    const Int& trivial_complex_mult() const { return trivial_complex_; }
    const Int& trivial_real_mult() const { return trivial_real_; }

    Int complex_rank() const;  // sum of line multiplicities + eps_C count
    Int real_rank() const;     // 2 * complex_rank + eps_R count

    bool is_zero() const;
    bool is_complex() const { return trivial_real_ == 0; }

    friend BundleExpr operator+(const BundleExpr& a, const BundleExpr& b);
    friend BundleExpr operator-(const BundleExpr& a, const BundleExpr& b);
    friend BundleExpr operator-(const BundleExpr& a);
    friend BundleExpr operator*(const Int& scale, const BundleExpr& e);

    bool operator==(const BundleExpr&) const = default;

    std::string str() const;

private:
    std::map<Int, Int> line_terms_;  // exponent (never 0) -> multiplicity
    Int trivial_complex_ = 0;
    Int trivial_real_ = 0;

    void add_line(const Int& exponent, const Int& multiplicity);
};

// xi^{m1} (x) xi^{m2} = xi^{m1+m2}; first Chern classes of lines add.
BundleExpr tensor_lines(const Int& m1, const Int& m2);

// Chern series of the complex summands only; real trivial summands are
// skipped rather than rejected. This is the caveat route for stable
// differences that carry eps_R terms.
TruncSeries chern_of_complex_part(const BundleExpr& e, int cap = kDefaultCap);

// Whitney product over the line factors, prod_m (1 + m c)^mult, with
// negative multiplicities handled by series inversion. Rejects expressions
// with real trivial summands.
TruncSeries total_chern(const BundleExpr& e, int cap = kDefaultCap);

// Via the Chern-Pontrjagin relation
//   1 - p_1 + p_2 - ... = (1 - c_1 + c_2 - ...)(1 + c_1 + c_2 + ...),
// so p_t sits at index 2t. Real trivial summands change nothing.
TruncSeries total_pontrjagin(const BundleExpr& e, int cap = kDefaultCap);

// Mod-2 reduction of the Chern series, index i read as w_{2i}; odd
// Stiefel-Whitney classes of these expressions vanish. Trivial summands of
// either kind contribute the factor 1.
TruncSeriesMod2 total_sw(const BundleExpr& e, int cap = kDefaultCap);

struct CharClassReport {
    TruncSeries total_chern{kDefaultCap};
    TruncSeries total_pontrjagin{kDefaultCap};
    TruncSeriesMod2 total_sw{kDefaultCap};
    Int complex_rank = 0;
    // The expression carried real trivial summands, so the Chern series is
    // that of its complex part only.
    bool chern_from_complex_part = false;
};

// Classes of the virtual difference rhs - known: the Whitney factor of the
// known summand is divided out by series inversion. This is the move from
// the stable tangent equation to p_1(tau) and w_2(tau).
CharClassReport solve_stable(const BundleExpr& known, const BundleExpr& rhs,
                             int cap = kDefaultCap);

}  // namespace charclass
