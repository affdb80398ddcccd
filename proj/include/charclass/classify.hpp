#pragma once

#include <set>
#include <span>

#include "charclass/stiefel.hpp"

namespace charclass {

// Full verdict for one W_{n,k;l}.
struct Classification {
    StiefelParams params;
    Int dimension = 0;
    bool orientable = true;  // quotient of SU(n) by a connected closed subgroup
    bool parallelizable = false;
    bool stably_parallelizable = false;
    Int p1_coefficient = 0;          // of c_1(xi)^2 in p_1(tau)
    int w2_coefficient = 0;          // of w_2(xi) in w_2(tau)
    bool w2_possibly_nonzero = false;
    std::set<int> span_cases;        // subset of {1,2,3}; empty = unknown
    bool cohomology_applicable = false;

    bool operator==(const Classification&) const = default;
};

// r: how many of the weights are even.
long long even_weight_count(std::span<const Int> l);

// p_1(tau) = p1 * c_1(xi)^2, three independent evaluators (k = l.size()):
//   closed form        (n-k) sum l_i^2 + (sum l_i)^2
//   intermediate form  n sum l_i^2 - sum_{j<i} (l_j - l_i)^2
//   symbolic route     solve_stable over the tangent equation
Int p1_closed_form(long long n, std::span<const Int> l);
Int p1_intermediate_form(long long n, std::span<const Int> l);
Int p1_via_bundles(long long n, std::span<const Int> l, int cap = kDefaultCap);

// w_2(tau) = w2 * w_2(xi), again three ways:
//   closed form        (n+r)(k-r) mod 2
//   intermediate form  [n sum l_i - sum_{j<i} (l_j - l_i)] mod 2
//   symbolic route     total_sw over the tangent equation
int w2_closed_form(long long n, std::span<const Int> l);
int w2_intermediate_form(long long n, std::span<const Int> l);
int w2_via_bundles(long long n, std::span<const Int> l, int cap = kDefaultCap);

// (n, k odd and r even) or (n, k even and r odd) -- exactly when the w2
// coefficient is odd.
bool w2_parity_characterization(long long n, std::span<const Int> l);

// Sufficient conditions for Span = Stable Span:
//   1: k odd, k > 1
//   2: k = 2 mod 4, k > 2, n odd
//   3: k = 2 mod 4, k > 2, n even, r even
std::set<int> span_equal_stable_cases(long long n, std::span<const Int> l);

inline Int p1_closed_form(const StiefelParams& p) { return p1_closed_form(p.n, p.l); }
inline Int p1_intermediate_form(const StiefelParams& p) { return p1_intermediate_form(p.n, p.l); }
inline Int p1_via_bundles(const StiefelParams& p, int cap = kDefaultCap) { return p1_via_bundles(p.n, p.l, cap); }
inline int w2_closed_form(const StiefelParams& p) { return w2_closed_form(p.n, p.l); }
inline int w2_intermediate_form(const StiefelParams& p) { return w2_intermediate_form(p.n, p.l); }
inline int w2_via_bundles(const StiefelParams& p, int cap = kDefaultCap) { return w2_via_bundles(p.n, p.l, cap); }

// Total decision procedure. Evaluates every coefficient through all three
// routes and refuses to return inconsistent data (logic_error; never
// expected). Parallelizable iff k in {n-1, n} and (n,k) != (2,1); stably
// parallelizable iff k in {n-1, n}.
Classification classify(const StiefelParams& p);

}  // namespace charclass
