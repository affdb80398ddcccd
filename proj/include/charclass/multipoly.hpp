#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "charclass/ints.hpp"
#include "charclass/ring.hpp"

namespace charclass {

// Exact polynomials in formal variables x_0..x_{m-1}, truncated by total
// degree. This is the splitting-principle side of the engine: formal Chern
// roots live here and are only ever substituted by integer multiples of c.
class MultiPoly {
public:
    MultiPoly(int num_vars, int cap);

    static MultiPoly zero(int num_vars, int cap);
    static MultiPoly one(int num_vars, int cap);
    static MultiPoly constant(Int value, int num_vars, int cap);
    static MultiPoly var(int index, int num_vars, int cap);
    // sum coeffs[v] * x_v
    static MultiPoly linear(std::span<const Int> coeffs, int cap);

    int num_vars() const { return num_vars_; }
    int cap() const { return cap_; }
    size_t term_count() const { return terms_.size(); }
    // coefficient of the monomial with the given exponent vector
    Int coeff(const std::vector<int>& exponents) const;

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    // Substitute x_v -> images[v] * c. Every variable that actually occurs
    // must be mapped; the result lives at the same cap.
    TruncSeries eval_linear(const std::map<int, Int>& images) const;
    TruncSeries eval_linear(std::span<const Int> images) const;

    // perm[v] is the new index of variable v.
    MultiPoly rename_vars(std::span<const int> perm) const;

    bool operator==(const MultiPoly&) const = default;

    std::string str() const;

private:
    int num_vars_;
    int cap_;
    // exponent vector (length num_vars_) -> coefficient; no zero entries,
    // no term of total degree > cap_
    std::map<std::vector<int>, Int> terms_;

    void add_term(const std::vector<int>& exponents, const Int& coeff);
};

// Multiset of linear forms in the formal variables. A bag stands for a sum
// of line bundles whose total Chern class is prod (1 + root); tensoring two
// bags forms all pairwise sums of roots. Used as the brute-force oracle for
// the tensor and Whitney rules.
class RootBag {
public:
    explicit RootBag(int num_vars);

    void add_root(std::vector<Int> form);  // length num_vars
    size_t size() const { return roots_.size(); }
    int num_vars() const { return num_vars_; }

    RootBag direct_sum(const RootBag& other) const;
    RootBag tensor(const RootBag& other) const;

    MultiPoly total_chern(int cap) const;

    bool operator==(const RootBag&) const = default;

private:
    int num_vars_;
    std::vector<std::vector<Int>> roots_;
};

}  // namespace charclass
