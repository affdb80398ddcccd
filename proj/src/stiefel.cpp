#include "charclass/stiefel.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "charclass/errors.hpp"

namespace charclass {

std::string StiefelParams::str() const {
    std::ostringstream out;
    out << "W(" << n << "," << k << "; ";
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i > 0)
            out << ",";
        out << l[i].str();
    }
    out << ")";
    return out.str();
}

Int weight_gcd(std::span<const Int> l) {
    Int g = 0;
    for (const Int& w : l)
        g = boost::multiprecision::gcd(g, abs(w));
    return g;
}

StiefelParams validate(long long n, long long k, std::vector<Int> l) {
    if (n < 2)
        throw validation_error(validation_error::reason::invalid_parameters,
                               "n must be at least 2, got " + std::to_string(n));
    if (k < 1 || k > n)
        throw validation_error(validation_error::reason::invalid_parameters,
                               "k must satisfy 1 <= k <= n, got k = " + std::to_string(k) +
                                   " with n = " + std::to_string(n));
    if (static_cast<long long>(l.size()) != k)
        throw validation_error(validation_error::reason::invalid_parameters,
                               "expected " + std::to_string(k) + " weights, got " +
                                   std::to_string(l.size()));
    Int g = weight_gcd(l);
    if (g == 0)
        throw validation_error(validation_error::reason::not_a_manifold,
                               "not a manifold: all weights are zero, gcd is undefined");
    if (g != 1) {
        validation_error err(validation_error::reason::not_a_manifold,
                             "not a manifold: gcd(l) = " + g.str());
        err.gcd = g;
        throw err;
    }
    return StiefelParams{n, k, std::move(l)};
}

Int dimension(const StiefelParams& p) {
    Int n = p.n;
    Int k = p.k;
    return 2 * n * k - k * k - 1;
}

TangentEquation tangent_equation_raw(long long n, std::span<const Int> l) {
    const auto k = static_cast<long long>(l.size());
    TangentEquation eq;
    eq.known_summand = BundleExpr::trivial_real(k + 1);
    for (long long i = 0; i < k; ++i)
        for (long long j = 0; j < i; ++j)
            eq.known_summand = eq.known_summand + BundleExpr::line(l[j] - l[i]);
    for (long long i = 0; i < k; ++i)
        eq.rhs = eq.rhs + BundleExpr::line(-l[i], n);
    return eq;
}

TangentEquation tangent_stable_equation(const StiefelParams& p) {
    return tangent_equation_raw(p.n, p.l);
}

CohomologyFacts cohomology_facts(const StiefelParams& p) {
    CohomologyFacts facts;
    facts.applicable = p.k < p.n - 1;
    facts.h2_free_on_c1 = facts.applicable;
    facts.h4_free_on_c1_sq = facts.applicable;
    return facts;
}

}  // namespace charclass
