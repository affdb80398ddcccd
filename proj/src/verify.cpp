#include "charclass/verify.hpp"

#include <algorithm>
#include <random>
#include <string_view>

#include "charclass/classify.hpp"
#include "charclass/enumerate.hpp"
#include "charclass/multipoly.hpp"

namespace charclass {

namespace {

// All randomness flows through mt19937_64 with plain modulo reduction, so a
// seed pins the whole run bit for bit.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(
                        eng() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// FNV-1a over the suite name keeps the per-suite streams independent of the
// order suites run in.
std::uint64_t suite_seed(std::uint64_t base, std::string_view name) {
    std::uint64_t h = 14695981039346656037ull;
    for (char ch : name) {
        h ^= static_cast<unsigned char>(ch);
        h *= 1099511628211ull;
    }
    return h ^ base;
}

class Checker {
public:
    Checker(std::string name, std::uint64_t base_seed)
        : rng(suite_seed(base_seed, name)) {
        result_.name = std::move(name);
    }

    void check(bool ok, std::string_view context) {
        ++result_.checked;
        if (!ok) {
            ++result_.failed;
            if (result_.counterexample.empty())
                result_.counterexample = std::string(context);
        }
    }

    SuiteResult take() { return std::move(result_); }

    Rng rng;

private:
    SuiteResult result_;
};

std::string tuple_str(std::span<const Int> l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i > 0)
            s += ",";
        s += l[i].str();
    }
    return s + ")";
}

std::vector<Int> random_weights(Rng& rng, long long k, long long bound) {
    std::vector<Int> l;
    l.reserve(static_cast<std::size_t>(k));
    for (long long i = 0; i < k; ++i)
        l.emplace_back(rng.range(-bound, bound));
    return l;
}

TruncSeries random_series(Rng& rng, int cap) {
    TruncSeries s(cap);
    for (int i = 0; i <= cap; ++i)
        s.set_coeff(i, rng.range(-99, 99));
    return s;
}

TruncSeries random_unit_series(Rng& rng, int cap) {
    TruncSeries s = random_series(rng, cap);
    s.set_coeff(0, rng.range(0, 1) == 0 ? 1 : -1);
    return s;
}

BundleExpr random_complex_expr(Rng& rng, bool allow_negative) {
    BundleExpr e;
    const long long lines = rng.range(0, 3);
    for (long long i = 0; i < lines; ++i) {
        Int exponent = rng.range(-20, 20);
        Int mult = allow_negative ? rng.range(-3, 3) : rng.range(0, 3);
        e = e + BundleExpr::line(exponent, mult);
    }
    e = e + BundleExpr::trivial_complex(rng.range(0, 2));
    return e;
}

std::vector<int> caps_for(const VerifyOptions& opts) {
    std::vector<int> caps = {kDefaultCap};
    if (opts.degree_cap > kDefaultCap)
        caps.push_back(opts.degree_cap);
    return caps;
}

// geometric series sum_i (-m)^i c^i, the Chern series of -[xi^m]
TruncSeries dual_series(const Int& m, int cap) {
    TruncSeries s(cap);
    Int term = 1;
    for (int i = 0; i <= cap; ++i) {
        s.set_coeff(i, term);
        term *= -m;
    }
    return s;
}

MultiPoly elementary_symmetric(int degree, int num_vars, int cap) {
    MultiPoly acc = MultiPoly::zero(num_vars, cap);
    std::vector<int> pick;
    // num_vars stays <= 3 here, an explicit recursion is overkill
    for (int a = 0; a < num_vars; ++a) {
        if (degree == 1) {
            acc = acc + MultiPoly::var(a, num_vars, cap);
            continue;
        }
        for (int b = a + 1; b < num_vars; ++b) {
            if (degree == 2) {
                acc = acc + MultiPoly::var(a, num_vars, cap) *
                                MultiPoly::var(b, num_vars, cap);
                continue;
            }
            for (int c = b + 1; c < num_vars; ++c)
                if (degree == 3)
                    acc = acc + MultiPoly::var(a, num_vars, cap) *
                                    MultiPoly::var(b, num_vars, cap) *
                                    MultiPoly::var(c, num_vars, cap);
        }
    }
    return acc;
}

void suite_ring_axioms(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const int cap = caps[static_cast<std::size_t>(trial) % caps.size()];
        TruncSeries a = random_series(t.rng, cap);
        TruncSeries b = random_series(t.rng, cap);
        TruncSeries c = random_series(t.rng, cap);
        std::string ctx = "cap=" + std::to_string(cap) + " a=" + a.str() +
                          " b=" + b.str() + " c=" + c.str();
        t.check((a + b) + c == a + (b + c), ctx);
        t.check(a + b == b + a, ctx);
        t.check((a * b) * c == a * (b * c), ctx);
        t.check(a * b == b * a, ctx);
        t.check(a * (b + c) == a * b + a * c, ctx);
        t.check(a + TruncSeries::zero(cap) == a, ctx);
        t.check(a * TruncSeries::one(cap) == a, ctx);
        t.check((a - a).is_zero(), ctx);
    }
}

void suite_ring_inverse(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const int cap = caps[static_cast<std::size_t>(trial) % caps.size()];
        TruncSeries u = random_unit_series(t.rng, cap);
        std::string ctx = "cap=" + std::to_string(cap) + " u=" + u.str();
        t.check(u * u.inverse() == TruncSeries::one(cap), ctx);
        t.check(u.inverse() * u == TruncSeries::one(cap), ctx);
        t.check(u.inverse().inverse() == u, ctx);
        t.check(u.pow(3) == u * u * u, ctx);
        t.check(u.pow(0) == TruncSeries::one(cap), ctx);
        t.check(u.pow(-2) == (u * u).inverse(), ctx);
        t.check(u.pow(-2) * u.pow(2) == TruncSeries::one(cap), ctx);
    }
}

void suite_ring_mod2(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const int cap = caps[static_cast<std::size_t>(trial) % caps.size()];
        TruncSeries a = random_series(t.rng, cap);
        TruncSeries b = random_series(t.rng, cap);
        std::string ctx = "cap=" + std::to_string(cap) + " a=" + a.str() +
                          " b=" + b.str();
        t.check((a + b).mod2() == a.mod2() + b.mod2(), ctx);
        t.check((a * b).mod2() == a.mod2() * b.mod2(), ctx);
    }
}

MultiPoly random_multipoly(Rng& rng, int num_vars, int cap) {
    MultiPoly p = MultiPoly::zero(num_vars, cap);
    const long long terms = rng.range(1, 4);
    for (long long trm = 0; trm < terms; ++trm) {
        MultiPoly mono = MultiPoly::constant(rng.range(-9, 9), num_vars, cap);
        for (int v = 0; v < num_vars; ++v) {
            long long e = rng.range(0, 2);
            for (long long rep = 0; rep < e; ++rep)
                mono = mono * MultiPoly::var(v, num_vars, cap);
        }
        p = p + mono;
    }
    return p;
}

void suite_multipoly_eval(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const int cap = caps[static_cast<std::size_t>(trial) % caps.size()];
        const int nv = static_cast<int>(t.rng.range(1, 3));
        MultiPoly p = random_multipoly(t.rng, nv, cap);
        MultiPoly q = random_multipoly(t.rng, nv, cap);
        std::vector<Int> images = random_weights(t.rng, nv, 9);
        std::string ctx = "cap=" + std::to_string(cap) + " p=" + p.str() +
                          " q=" + q.str() + " images=" + tuple_str(images);
        t.check((p + q).eval_linear(images) ==
                    p.eval_linear(images) + q.eval_linear(images),
                ctx);
        t.check((p * q).eval_linear(images) ==
                    p.eval_linear(images) * q.eval_linear(images),
                ctx);
    }
}

void suite_bundles_whitney(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const int cap = caps[static_cast<std::size_t>(trial) % caps.size()];
        BundleExpr e1 = random_complex_expr(t.rng, true);
        BundleExpr e2 = random_complex_expr(t.rng, true);
        std::string ctx = "cap=" + std::to_string(cap) + " e1=" + e1.str() +
                          " e2=" + e2.str();
        t.check(total_chern(e1 + e2, cap) ==
                    total_chern(e1, cap) * total_chern(e2, cap),
                ctx);
        t.check(total_chern(e1 + (-e1), cap) == TruncSeries::one(cap), ctx);
    }
}

void suite_bundles_dual(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const int cap = caps[static_cast<std::size_t>(trial) % caps.size()];
        Int m = t.rng.range(-50, 50);
        std::string ctx = "cap=" + std::to_string(cap) + " m=" + m.str();
        t.check(total_chern(BundleExpr::line(m, -1), cap) == dual_series(m, cap),
                ctx);
        TruncSeries dual_line = TruncSeries::one(cap).set_coeff(1, -m);
        t.check(total_chern(BundleExpr::line(-m), cap) == dual_line, ctx);
    }
}

void suite_bundles_tensor_oracle(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const int cap = caps[static_cast<std::size_t>(trial) % caps.size()];
        const int na = static_cast<int>(t.rng.range(1, 3));
        const int nb = static_cast<int>(t.rng.range(1, 2));
        std::vector<Int> a = random_weights(t.rng, na, 20);
        std::vector<Int> b = random_weights(t.rng, nb, 20);

        const int nv = na + nb;
        RootBag bag_a(nv);
        RootBag bag_b(nv);
        std::vector<Int> images;
        for (int i = 0; i < na; ++i) {
            std::vector<Int> unit(static_cast<std::size_t>(nv), Int(0));
            unit[static_cast<std::size_t>(i)] = 1;
            bag_a.add_root(std::move(unit));
            images.push_back(a[static_cast<std::size_t>(i)]);
        }
        for (int j = 0; j < nb; ++j) {
            std::vector<Int> unit(static_cast<std::size_t>(nv), Int(0));
            unit[static_cast<std::size_t>(na + j)] = 1;
            bag_b.add_root(std::move(unit));
            images.push_back(b[static_cast<std::size_t>(j)]);
        }

        BundleExpr sum_a;
        BundleExpr sum_b;
        BundleExpr tensor_sum;
        for (const Int& ma : a)
            sum_a = sum_a + BundleExpr::line(ma);
        for (const Int& mb : b)
            sum_b = sum_b + BundleExpr::line(mb);
        for (const Int& ma : a)
            for (const Int& mb : b)
                tensor_sum = tensor_sum + tensor_lines(ma, mb);

        std::string ctx = "cap=" + std::to_string(cap) + " a=" + tuple_str(a) +
                          " b=" + tuple_str(b);
        t.check(bag_a.tensor(bag_b).total_chern(cap).eval_linear(images) ==
                    total_chern(tensor_sum, cap),
                ctx);
        t.check(bag_a.direct_sum(bag_b).total_chern(cap).eval_linear(images) ==
                    total_chern(sum_a + sum_b, cap),
                ctx);
    }
}

void suite_bundles_pontrjagin(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const int cap = caps[static_cast<std::size_t>(trial) % caps.size()];
        BundleExpr e = random_complex_expr(t.rng, true);
        // splitting principle: p of a line sum is prod (1 + m^2 c^2)^mult
        TruncSeries expected = TruncSeries::one(cap);
        for (const auto& [m, mult] : e.line_terms())
            expected = expected * TruncSeries::one(cap).set_coeff(2, m * m).pow(mult);
        std::string ctx = "cap=" + std::to_string(cap) + " e=" + e.str();
        t.check(total_pontrjagin(e, cap) == expected, ctx);
    }
}

void suite_bundles_stability(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const int cap = caps[static_cast<std::size_t>(trial) % caps.size()];
        BundleExpr e = random_complex_expr(t.rng, true);
        BundleExpr padded = e + BundleExpr::trivial_complex(t.rng.range(-4, 4)) +
                            BundleExpr::trivial_real(t.rng.range(-4, 4));
        std::string ctx = "cap=" + std::to_string(cap) + " e=" + e.str() +
                          " padded=" + padded.str();
        t.check(chern_of_complex_part(padded, cap) == chern_of_complex_part(e, cap),
                ctx);
        t.check(total_pontrjagin(padded, cap) == total_pontrjagin(e, cap), ctx);
        t.check(total_sw(padded, cap) == total_sw(e, cap), ctx);
    }
}

void suite_bundles_sw(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const int cap = caps[static_cast<std::size_t>(trial) % caps.size()];
        BundleExpr e1 = random_complex_expr(t.rng, true);
        BundleExpr e2 = random_complex_expr(t.rng, true);
        Int m = t.rng.range(-20, 20);
        std::string ctx = "cap=" + std::to_string(cap) + " e1=" + e1.str() +
                          " e2=" + e2.str() + " m=" + m.str();
        t.check(total_sw(e1 + e2, cap) == total_sw(e1, cap) * total_sw(e2, cap),
                ctx);
        t.check(total_sw(e1 + (-e1), cap) == TruncSeriesMod2::one(cap), ctx);
        TruncSeriesMod2 w_line = TruncSeriesMod2::one(cap).set_coeff(1, parity(m));
        t.check(total_sw(BundleExpr::line(m), cap) == w_line, ctx);
    }
}

// The sign-alternation route to p equals the splitting-principle expansion
// as an identity between symmetric polynomials, checked for 2 and 3 roots.
void suite_bundles_pontrjagin_symbolic(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (int nv = 2; nv <= 3; ++nv) {
        for (int cap : caps) {
            MultiPoly pos = MultiPoly::one(nv, cap);
            MultiPoly neg = MultiPoly::one(nv, cap);
            for (int v = 0; v < nv; ++v) {
                pos = pos * (MultiPoly::one(nv, cap) + MultiPoly::var(v, nv, cap));
                neg = neg * (MultiPoly::one(nv, cap) - MultiPoly::var(v, nv, cap));
            }
            MultiPoly e1 = elementary_symmetric(1, nv, cap);
            MultiPoly e2 = elementary_symmetric(2, nv, cap);
            MultiPoly e3 = elementary_symmetric(3, nv, cap);
            MultiPoly p1 = e1 * e1 - (e2 + e2);
            MultiPoly p2 = e2 * e2 - (e1 * e3 + e1 * e3);
            MultiPoly p3 = e3 * e3;
            MultiPoly expected = MultiPoly::one(nv, cap) - p1 + p2 - p3;
            std::string ctx =
                "roots=" + std::to_string(nv) + " cap=" + std::to_string(cap);
            t.check(neg * pos == expected, ctx);
        }
    }
}

void suite_stiefel_rank_identity(Checker& t, const VerifyOptions& opts) {
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const long long k = t.rng.range(1, 8);
        const long long n = t.rng.range(std::max(2ll, k), 12);
        std::vector<Int> l = random_weights(t.rng, k, 50);
        StiefelParams p{n, k, l};
        TangentEquation eq = tangent_equation_raw(n, l);
        std::string ctx = "n=" + std::to_string(n) + " l=" + tuple_str(l);
        t.check(eq.rhs.real_rank() == Int(2) * n * k, ctx);
        t.check(eq.known_summand.real_rank() == Int(k) * k + 1, ctx);
        t.check(eq.rhs.real_rank() - eq.known_summand.real_rank() == dimension(p),
                ctx);
        t.check(dimension(p) == Int(2) * n * k - Int(k) * k - 1, ctx);
    }
}

void suite_stiefel_permutation(Checker& t, const VerifyOptions& opts) {
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const long long k = t.rng.range(1, 6);
        const long long n = t.rng.range(std::max(2ll, k), 12);
        std::vector<Int> l = random_weights(t.rng, k, 9);
        l[static_cast<std::size_t>(t.rng.range(0, k - 1))] = 1;  // keep gcd 1
        std::vector<Int> shuffled = l;
        for (long long i = k - 1; i > 0; --i) {
            long long j = t.rng.range(0, i);
            std::swap(shuffled[static_cast<std::size_t>(i)],
                      shuffled[static_cast<std::size_t>(j)]);
        }
        Classification base = classify(StiefelParams{n, k, l});
        Classification perm = classify(StiefelParams{n, k, shuffled});
        std::string ctx = "n=" + std::to_string(n) + " l=" + tuple_str(l) +
                          " shuffled=" + tuple_str(shuffled);
        t.check(base.dimension == perm.dimension, ctx);
        t.check(base.p1_coefficient == perm.p1_coefficient, ctx);
        t.check(base.w2_coefficient == perm.w2_coefficient, ctx);
        t.check(base.span_cases == perm.span_cases, ctx);
        t.check(base.stably_parallelizable == perm.stably_parallelizable, ctx);
    }
}

void suite_stiefel_sign(Checker& t, const VerifyOptions& opts) {
    {
        std::vector<Int> plus = {1, 2};
        std::vector<Int> minus = {1, -2};
        t.check(p1_via_bundles(5, plus) == 24, "n=5 l=(1,2)");
        t.check(p1_via_bundles(5, minus) == 16, "n=5 l=(1,-2)");
    }
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const long long k = t.rng.range(1, 6);
        const long long n = t.rng.range(std::max(2ll, k), 12);
        std::vector<Int> l = random_weights(t.rng, k, 9);
        std::vector<Int> flipped = l;
        const auto pos = static_cast<std::size_t>(t.rng.range(0, k - 1));
        flipped[pos] = -flipped[pos];
        Int sum = 0;
        for (const Int& w : l)
            sum += w;
        // flipping l_t moves (sum l)^2 by (sum - 2 l_t)^2 - sum^2
        Int shifted = sum - 2 * l[pos];
        Int predicted_delta = shifted * shifted - sum * sum;
        std::string ctx = "n=" + std::to_string(n) + " l=" + tuple_str(l) +
                          " flip_index=" + std::to_string(pos);
        t.check(p1_via_bundles(n, flipped) - p1_via_bundles(n, l) ==
                    predicted_delta,
                ctx);
        t.check(w2_via_bundles(n, flipped) == w2_via_bundles(n, l), ctx);
    }
}

void suite_classify_p1_forms(Checker& t, const VerifyOptions& opts) {
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const long long k = t.rng.range(1, 8);
        const long long n = t.rng.range(std::max(2ll, k), 12);
        std::vector<Int> l = random_weights(t.rng, k, 50);
        std::string ctx = "n=" + std::to_string(n) + " l=" + tuple_str(l);
        t.check(p1_closed_form(n, l) == p1_intermediate_form(n, l), ctx);
    }
}

void suite_classify_w2_forms(Checker& t, const VerifyOptions& opts) {
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const long long k = t.rng.range(1, 8);
        const long long n = t.rng.range(std::max(2ll, k), 12);
        std::vector<Int> l = random_weights(t.rng, k, 50);
        std::string ctx = "n=" + std::to_string(n) + " l=" + tuple_str(l);
        int w2 = w2_closed_form(n, l);
        t.check(w2 == w2_intermediate_form(n, l), ctx);
        t.check((w2 == 1) == w2_parity_characterization(n, l), ctx);
    }
}

void suite_classify_three_way(Checker& t, const VerifyOptions& opts) {
    const auto caps = caps_for(opts);
    for (long long trial = 0; trial < opts.samples; ++trial) {
        const int cap = caps[static_cast<std::size_t>(trial) % caps.size()];
        const long long k = t.rng.range(1, 8);
        const long long n = t.rng.range(std::max(2ll, k), 12);
        std::vector<Int> l = random_weights(t.rng, k, 50);
        std::string ctx = "n=" + std::to_string(n) + " l=" + tuple_str(l) +
                          " cap=" + std::to_string(cap);
        Int p1 = p1_closed_form(n, l);
        t.check(p1 == p1_via_bundles(n, l, cap), ctx);
        t.check(w2_closed_form(n, l) == w2_via_bundles(n, l, cap), ctx);
    }
}

void suite_classify_grid(Checker& t, const VerifyOptions& opts) {
    (void)opts;
    std::vector<StiefelParams> points = canonical_grid(10, 3);
    std::vector<StiefelParams> signed_points = canonical_grid_signed(8, 2);
    points.insert(points.end(), signed_points.begin(), signed_points.end());
    for (const StiefelParams& p : points) {
        Classification c = classify(p);  // the three-way check runs inside
        std::string ctx = p.str();
        t.check(c.orientable, ctx);
        t.check(c.dimension == Int(2) * p.n * p.k - Int(p.k) * p.k - 1, ctx);
        t.check(c.stably_parallelizable == (p.k == p.n - 1 || p.k == p.n), ctx);
        t.check(c.parallelizable ==
                    (c.stably_parallelizable && !(p.n == 2 && p.k == 1)),
                ctx);
        t.check(c.w2_coefficient == 0 || c.w2_coefficient == 1, ctx);
        t.check(c.cohomology_applicable == (p.k < p.n - 1), ctx);
        t.check(c.w2_possibly_nonzero ==
                    (c.w2_coefficient == 1 && c.cohomology_applicable),
                ctx);
    }
}

void suite_classify_span_cases(Checker& t, const VerifyOptions& opts) {
    (void)opts;
    for (const StiefelParams& p : canonical_grid_signed(9, 2)) {
        Classification c = classify(p);
        const long long r = even_weight_count(p.l);
        std::string ctx = p.str();
        t.check(c.span_cases.contains(1) == (p.k % 2 == 1 && p.k > 1), ctx);
        t.check(c.span_cases.contains(2) ==
                    (p.k % 4 == 2 && p.k > 2 && p.n % 2 == 1),
                ctx);
        t.check(c.span_cases.contains(3) == (p.k % 4 == 2 && p.k > 2 &&
                                             p.n % 2 == 0 && r % 2 == 0),
                ctx);
        if (p.k == 1)
            t.check(c.span_cases.empty(), ctx);
    }
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& opts) {
    std::vector<SuiteResult> results;
    auto run = [&](std::string_view name, auto&& body) {
        Checker t(std::string(name), opts.seed);
        body(t, opts);
        results.push_back(t.take());
    };

    run("ring.axioms", suite_ring_axioms);
    run("ring.inverse", suite_ring_inverse);
    run("ring.mod2_homomorphism", suite_ring_mod2);
    run("ring.multipoly_eval_homomorphism", suite_multipoly_eval);
    run("bundles.whitney", suite_bundles_whitney);
    run("bundles.virtual_dual_series", suite_bundles_dual);
    run("bundles.tensor_oracle", suite_bundles_tensor_oracle);
    run("bundles.chern_pontrjagin_consistency", suite_bundles_pontrjagin);
    run("bundles.stability", suite_bundles_stability);
    run("bundles.sw_is_mod2_chern", suite_bundles_sw);
    run("bundles.pontrjagin_symbolic", suite_bundles_pontrjagin_symbolic);
    run("stiefel.dimension_rank_identity", suite_stiefel_rank_identity);
    run("stiefel.permutation_invariance", suite_stiefel_permutation);
    run("stiefel.weight_sign_sensitivity", suite_stiefel_sign);
    run("classify.p1_two_forms_identity", suite_classify_p1_forms);
    run("classify.w2_parity_identity", suite_classify_w2_forms);
    run("classify.three_way_agreement", suite_classify_three_way);
    run("classify.grid_invariants", suite_classify_grid);
    run("classify.span_cases_grid", suite_classify_span_cases);
    return results;
}

}  // namespace charclass
