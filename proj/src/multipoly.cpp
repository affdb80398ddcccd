#include "charclass/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "charclass/errors.hpp"

namespace charclass {

namespace {

int checked_nvars(int num_vars) {
    if (num_vars < 0)
        throw usage_error("number of variables must be nonnegative");
    return num_vars;
}

void require_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars() != b.num_vars())
        throw usage_error("variable count mismatch: " + std::to_string(a.num_vars()) +
                          " vs " + std::to_string(b.num_vars()));
    if (a.cap() != b.cap())
        throw usage_error("cap mismatch: " + std::to_string(a.cap()) + " vs " +
                          std::to_string(b.cap()));
}

int total_degree(const std::vector<int>& exponents) {
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

}  // namespace

MultiPoly::MultiPoly(int num_vars, int cap) : num_vars_(checked_nvars(num_vars)), cap_(cap) {
    if (cap < 0)
        throw usage_error("total-degree cap must be nonnegative");
}

MultiPoly MultiPoly::zero(int num_vars, int cap) { return MultiPoly(num_vars, cap); }

MultiPoly MultiPoly::one(int num_vars, int cap) { return constant(1, num_vars, cap); }

MultiPoly MultiPoly::constant(Int value, int num_vars, int cap) {
    MultiPoly p(num_vars, cap);
    p.add_term(std::vector<int>(static_cast<size_t>(num_vars), 0), value);
    return p;
}

MultiPoly MultiPoly::var(int index, int num_vars, int cap) {
    MultiPoly p(num_vars, cap);
    if (index < 0 || index >= num_vars)
        throw usage_error("variable index " + std::to_string(index) + " out of range");
    std::vector<int> e(static_cast<size_t>(num_vars), 0);
    e[static_cast<size_t>(index)] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::linear(std::span<const Int> coeffs, int cap) {
    MultiPoly p(static_cast<int>(coeffs.size()), cap);
    std::vector<int> e(coeffs.size(), 0);
    for (size_t v = 0; v < coeffs.size(); ++v) {
        e[v] = 1;
        p.add_term(e, coeffs[v]);
        e[v] = 0;
    }
    return p;
}

Int MultiPoly::coeff(const std::vector<int>& exponents) const {
    if (exponents.size() != static_cast<size_t>(num_vars_))
        throw usage_error("exponent vector length mismatch");
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Int(0) : it->second;
}

void MultiPoly::add_term(const std::vector<int>& exponents, const Int& coeff) {
    if (coeff == 0 || total_degree(exponents) > cap_)
        return;
    Int& slot = terms_[exponents];
    slot += coeff;
    if (slot == 0)
        terms_.erase(exponents);
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b);
    MultiPoly out = a;
    for (const auto& [e, v] : b.terms_)
        out.add_term(e, v);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b);
    MultiPoly out = a;
    for (const auto& [e, v] : b.terms_)
        out.add_term(e, -v);
    return out;
}

MultiPoly operator-(const MultiPoly& a) {
    MultiPoly out(a.num_vars_, a.cap_);
    for (const auto& [e, v] : a.terms_)
        out.terms_.emplace(e, -v);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_compatible(a, b);
    MultiPoly out(a.num_vars_, a.cap_);
    std::vector<int> e(static_cast<size_t>(a.num_vars_), 0);
    for (const auto& [ea, va] : a.terms_) {
        for (const auto& [eb, vb] : b.terms_) {
            for (size_t v = 0; v < e.size(); ++v)
                e[v] = ea[v] + eb[v];
            out.add_term(e, va * vb);
        }
    }
    return out;
}

TruncSeries MultiPoly::eval_linear(const std::map<int, Int>& images) const {
    TruncSeries out(cap_);
    for (const auto& [exponents, coeff] : terms_) {
        Int factor = coeff;
        int degree = 0;
        for (int v = 0; v < num_vars_; ++v) {
            int e = exponents[static_cast<size_t>(v)];
            if (e == 0)
                continue;
            auto it = images.find(v);
            if (it == images.end())
                throw usage_error("eval_linear: variable x" + std::to_string(v) +
                                  " is not mapped");
            degree += e;
            factor *= boost::multiprecision::pow(it->second, static_cast<unsigned>(e));
        }
        out.set_coeff(degree, out.coeff(degree) + factor);
    }
    return out;
}

TruncSeries MultiPoly::eval_linear(std::span<const Int> images) const {
    if (images.size() != static_cast<size_t>(num_vars_))
        throw usage_error("eval_linear: expected " + std::to_string(num_vars_) +
                          " images, got " + std::to_string(images.size()));
    std::map<int, Int> m;
    for (size_t v = 0; v < images.size(); ++v)
        m.emplace(static_cast<int>(v), images[v]);
    return eval_linear(m);
}

MultiPoly MultiPoly::rename_vars(std::span<const int> perm) const {
    if (perm.size() != static_cast<size_t>(num_vars_))
        throw usage_error("rename_vars: permutation length mismatch");
    MultiPoly out(num_vars_, cap_);
    std::vector<int> e(static_cast<size_t>(num_vars_), 0);
    for (const auto& [exponents, coeff] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (int v = 0; v < num_vars_; ++v) {
            int target = perm[static_cast<size_t>(v)];
            if (target < 0 || target >= num_vars_)
                throw usage_error("rename_vars: image out of range");
            e[static_cast<size_t>(target)] = exponents[static_cast<size_t>(v)];
        }
        out.add_term(e, coeff);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exponents, coeff] : terms_) {
        Int a = abs(coeff);
        if (first) {
            if (coeff < 0)
                out << "-";
            first = false;
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (a != 1 || total_degree(exponents) == 0) {
            out << a.str();
            printed = true;
        }
        for (int v = 0; v < num_vars_; ++v) {
            int e = exponents[static_cast<size_t>(v)];
            if (e == 0)
                continue;
            if (printed)
                out << "*";
            out << "x" << v;
            if (e > 1)
                out << "^" << e;
            printed = true;
        }
    }
    return out.str();
}

RootBag::RootBag(int num_vars) : num_vars_(checked_nvars(num_vars)) {}

void RootBag::add_root(std::vector<Int> form) {
    if (form.size() != static_cast<size_t>(num_vars_))
        throw usage_error("root form length mismatch");
    roots_.push_back(std::move(form));
    std::sort(roots_.begin(), roots_.end());  // multiset: keep canonical
}

RootBag RootBag::direct_sum(const RootBag& other) const {
    if (num_vars_ != other.num_vars_)
        throw usage_error("variable count mismatch between root bags");
    RootBag out(num_vars_);
    out.roots_ = roots_;
    out.roots_.insert(out.roots_.end(), other.roots_.begin(), other.roots_.end());
    std::sort(out.roots_.begin(), out.roots_.end());
    return out;
}

RootBag RootBag::tensor(const RootBag& other) const {
    if (num_vars_ != other.num_vars_)
        throw usage_error("variable count mismatch between root bags");
    RootBag out(num_vars_);
    for (const auto& a : roots_) {
        for (const auto& b : other.roots_) {
            std::vector<Int> sum(a.size());
            for (size_t v = 0; v < a.size(); ++v)
                sum[v] = a[v] + b[v];
            out.roots_.push_back(std::move(sum));
        }
    }
    std::sort(out.roots_.begin(), out.roots_.end());
    return out;
}

MultiPoly RootBag::total_chern(int cap) const {
    MultiPoly acc = MultiPoly::one(num_vars_, cap);
    for (const auto& root : roots_) {
        MultiPoly factor = MultiPoly::one(num_vars_, cap) + MultiPoly::linear(root, cap);
        acc = acc * factor;
    }
    return acc;
}

}  // namespace charclass
