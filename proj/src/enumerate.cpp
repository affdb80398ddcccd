#include "charclass/enumerate.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

#include "charclass/classify.hpp"

namespace charclass {

namespace {

// Nondecreasing tuples over [lo, hi], one representative per weight multiset.
void extend_tuples(std::vector<StiefelParams>& out, long long n, long long k,
                   long long lo, long long hi, std::vector<Int>& partial) {
    if (static_cast<long long>(partial.size()) == k) {
        if (weight_gcd(partial) == 1)
            out.push_back(StiefelParams{n, k, partial});
        return;
    }
    long long from = partial.empty() ? lo : partial.back().convert_to<long long>();
    for (long long v = std::max(lo, from); v <= hi; ++v) {
        partial.push_back(v);
        extend_tuples(out, n, k, lo, hi, partial);
        partial.pop_back();
    }
}

std::vector<StiefelParams> grid(long long n_max, long long lo, long long hi) {
    std::vector<StiefelParams> out;
    for (long long n = 2; n <= n_max; ++n)
        for (long long k = 1; k <= n; ++k) {
            std::vector<Int> partial;
            extend_tuples(out, n, k, lo, hi, partial);
        }
    return out;
}

std::string join_ints(const std::vector<Int>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            s += ",";
        s += values[i].str();
    }
    return s;
}

std::string join_cases(const std::set<int>& cases) {
    std::string s;
    for (int c : cases) {
        if (!s.empty())
            s += ",";
        s += std::to_string(c);
    }
    return s;
}

}  // namespace

std::vector<StiefelParams> canonical_grid(long long n_max, long long l_max) {
    return grid(n_max, 1, l_max);
}

std::vector<StiefelParams> canonical_grid_signed(long long n_max, long long l_abs_max) {
    return grid(n_max, -l_abs_max, l_abs_max);
}

void write_enumeration(std::ostream& os, long long n_max, long long l_max,
                       EnumFormat format) {
    const std::vector<StiefelParams> points = canonical_grid(n_max, l_max);
    if (format == EnumFormat::tsv)
        os << "n\tk\tl\tdim\tparallelizable\tstably\tp1\tw2\tspan_cases\n";
    for (const StiefelParams& p : points) {
        Classification c = classify(p);
        if (format == EnumFormat::tsv) {
            os << p.n << "\t" << p.k << "\t" << join_ints(p.l) << "\t"
               << c.dimension.str() << "\t" << (c.parallelizable ? "true" : "false")
               << "\t" << (c.stably_parallelizable ? "true" : "false") << "\t"
               << c.p1_coefficient.str() << "\t" << c.w2_coefficient << "\t"
               << join_cases(c.span_cases) << "\n";
        } else {
            nlohmann::ordered_json row;
            row["n"] = p.n;
            row["k"] = p.k;
            row["l"] = join_ints(p.l);
            row["dim"] = c.dimension.str();
            row["parallelizable"] = c.parallelizable;
            row["stably"] = c.stably_parallelizable;
            row["p1"] = c.p1_coefficient.str();
            row["w2"] = c.w2_coefficient;
            row["span_cases"] = join_cases(c.span_cases);
            os << row.dump() << "\n";
        }
    }
}

}  // namespace charclass
