#include "charclass/classify.hpp"

#include <stdexcept>

namespace charclass {

long long even_weight_count(std::span<const Int> l) {
    long long r = 0;
    for (const Int& w : l)
        if (parity(w) == 0)
            ++r;
    return r;
}

Int p1_closed_form(long long n, std::span<const Int> l) {
    const auto k = static_cast<long long>(l.size());
    Int sum_sq = 0;
    Int sum = 0;
    for (const Int& w : l) {
        sum_sq += w * w;
        sum += w;
    }
    return Int(n - k) * sum_sq + sum * sum;
}

Int p1_intermediate_form(long long n, std::span<const Int> l) {
    const auto k = static_cast<long long>(l.size());
    Int sum_sq = 0;
    for (const Int& w : l)
        sum_sq += w * w;
    Int pair_sq = 0;
    for (long long i = 0; i < k; ++i)
        for (long long j = 0; j < i; ++j) {
            Int d = l[j] - l[i];
            pair_sq += d * d;
        }
    return Int(n) * sum_sq - pair_sq;
}

Int p1_via_bundles(long long n, std::span<const Int> l, int cap) {
    TangentEquation eq = tangent_equation_raw(n, l);
    CharClassReport report = solve_stable(eq.known_summand, eq.rhs, cap);
    return report.total_pontrjagin.coeff(2);
}

int w2_closed_form(long long n, std::span<const Int> l) {
    const auto k = static_cast<long long>(l.size());
    const long long r = even_weight_count(l);
    return static_cast<int>(((n + r) % 2) * ((k - r) % 2));
}

int w2_intermediate_form(long long n, std::span<const Int> l) {
    const auto k = static_cast<long long>(l.size());
    Int sum = 0;
    for (const Int& w : l)
        sum += w;
    Int pairs = 0;
    for (long long i = 0; i < k; ++i)
        for (long long j = 0; j < i; ++j)
            pairs += l[j] - l[i];
    return parity(Int(n) * sum - pairs);
}

int w2_via_bundles(long long n, std::span<const Int> l, int cap) {
    TangentEquation eq = tangent_equation_raw(n, l);
    CharClassReport report = solve_stable(eq.known_summand, eq.rhs, cap);
    return report.total_sw.coeff(1);
}

bool w2_parity_characterization(long long n, std::span<const Int> l) {
    const auto k = static_cast<long long>(l.size());
    const long long r = even_weight_count(l);
    const bool n_odd = (n % 2) != 0;
    const bool k_odd = (k % 2) != 0;
    const bool r_odd = (r % 2) != 0;
    return (n_odd && k_odd && !r_odd) || (!n_odd && !k_odd && r_odd);
}

std::set<int> span_equal_stable_cases(long long n, std::span<const Int> l) {
    const auto k = static_cast<long long>(l.size());
    const long long r = even_weight_count(l);
    std::set<int> cases;
    if (k % 2 == 1 && k > 1)
        cases.insert(1);
    if (k % 4 == 2 && k > 2) {
        if (n % 2 == 1)
            cases.insert(2);
        else if (r % 2 == 0)
            cases.insert(3);
    }
    return cases;
}

Classification classify(const StiefelParams& p) {
    Classification out;
    out.params = p;
    out.dimension = dimension(p);
    out.orientable = true;
    out.stably_parallelizable = (p.k == p.n - 1) || (p.k == p.n);
    out.parallelizable = out.stably_parallelizable && !(p.n == 2 && p.k == 1);

    Int p1 = p1_closed_form(p);
    if (p1 != p1_intermediate_form(p) || p1 != p1_via_bundles(p))
        throw std::logic_error("p1 evaluators disagree for " + p.str());
    out.p1_coefficient = p1;

    int w2 = w2_closed_form(p);
    if (w2 != w2_intermediate_form(p) || w2 != w2_via_bundles(p))
        throw std::logic_error("w2 evaluators disagree for " + p.str());
    if ((w2 == 1) != w2_parity_characterization(p.n, p.l))
        throw std::logic_error("w2 parity characterization disagrees for " + p.str());
    out.w2_coefficient = w2;

    CohomologyFacts facts = cohomology_facts(p);
    out.cohomology_applicable = facts.applicable;
    // a nonzero coefficient upgrades to a nonzero class only where the
    // low-degree cohomology is free on the generator
    out.w2_possibly_nonzero = (w2 == 1) && facts.applicable;

    out.span_cases = span_equal_stable_cases(p.n, p.l);
    return out;
}

}  // namespace charclass
