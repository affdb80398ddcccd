#pragma once

#include <span>
#include <string>
#include <vector>

#include "charclass/bundles.hpp"
#include "charclass/ints.hpp"

namespace charclass {

// Parameters of W_{n,k;l}: orthonormal k-frames in C^n modulo the circle
// acting on the i-th frame vector with weight l_i. A manifold exactly when
// gcd(|l_1|,...,|l_k|) = 1.
struct StiefelParams {
    long long n = 0;
    long long k = 0;
    std::vector<Int> l;

    std::string str() const;  // "W(5,2; 1,2)"
    bool operator==(const StiefelParams&) const = default;
};

// gcd of absolute values, gcd(0,x) = |x|; 0 iff all weights are zero.
Int weight_gcd(std::span<const Int> l);

// Throws validation_error: invalid_parameters for bad (n, k, length), and
// not_a_manifold when the gcd condition fails (all-zero weights included).
StiefelParams validate(long long n, long long k, std::vector<Int> l);

// Real dimension 2nk - k^2 - 1 = dim U(n) - dim U(n-k) - 1.
Int dimension(const StiefelParams& p);

// The stable description of the tangent bundle:
//   tau + (k+1) eps_R + sum_{j<i} xi^{l_j - l_i}  ~  n * sum_i xi^{-l_i}.
// Both sides have total real rank 2nk once tau is counted at dimension(p).
struct TangentEquation {
    BundleExpr known_summand;  // (k+1) eps_R + sum_{1<=j<i<=k} xi^{l_j-l_i}
    BundleExpr rhs;            // sum_i n * xi^{-l_i}
};

TangentEquation tangent_stable_equation(const StiefelParams& p);
// Same construction without the manifold validation; the class formulas are
// pure algebra in (n, l), which the identity test suites exploit.
TangentEquation tangent_equation_raw(long long n, std::span<const Int> l);

// Low-degree structure of H*(W_{n,k;l}): for k < n-1 the degree-2 and
// degree-4 groups are free on c_1 and c_1^2, which is what upgrades nonzero
// coefficients to nonvanishing classes. Outside that range nothing here may
// be concluded.
struct CohomologyFacts {
    bool applicable = false;  // k < n-1
    bool h2_free_on_c1 = false;
    bool h4_free_on_c1_sq = false;

    bool operator==(const CohomologyFacts&) const = default;
};

CohomologyFacts cohomology_facts(const StiefelParams& p);

}  // namespace charclass
