#include "wlab/laurent.hpp"

#include <atomic>

namespace wlab {

namespace {
std::atomic<std::size_t> g_term_cap{100'000'000};

void check_exponent(std::int64_t e) {
    if (e > kExponentGuard || e < -kExponentGuard)
        throw ResourceError("LaurentPoly: exponent guard exceeded");
}
} // namespace

std::size_t term_cap() { return g_term_cap.load(); }
void set_term_cap(std::size_t cap) { g_term_cap.store(cap); }

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1)
        throw UsageError("LaurentPoly: nvars must be positive");
}

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly r(nvars);
    if (!c.is_zero())
        r.terms_.emplace(Exponents(nvars, 0), Poly(c));
    return r;
}

LaurentPoly LaurentPoly::monomial(Exponents e, Poly coeff) {
    LaurentPoly r(static_cast<int>(e.size()));
    for (auto x : e)
        check_exponent(x);
    if (!coeff.is_zero())
        r.terms_.emplace(std::move(e), std::move(coeff));
    return r;
}

LaurentPoly LaurentPoly::variable(int nvars, int var) {
    if (var < 1 || var > nvars)
        throw UsageError("LaurentPoly: variable index out of range");
    Exponents e(nvars, 0);
    e[var - 1] = 1;
    return monomial(std::move(e), Poly(Rational(1)));
}

Poly LaurentPoly::coefficient_at(const Exponents& e) const {
    if (static_cast<int>(e.size()) != nvars_)
        throw UsageError("LaurentPoly: exponent vector length mismatch");
    auto it = terms_.find(e);
    return it == terms_.end() ? Poly() : it->second;
}

void LaurentPoly::check_same_vars(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_)
        throw UsageError("LaurentPoly: variable count mismatch");
}

void LaurentPoly::add_term(Exponents e, Poly coeff) {
    if (static_cast<int>(e.size()) != nvars_)
        throw UsageError("LaurentPoly: exponent vector length mismatch");
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), std::move(coeff));
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
    if (terms_.size() > term_cap())
        throw ResourceError("LaurentPoly: term cap exceeded");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    if (terms_.size() > term_cap())
        throw ResourceError("LaurentPoly: term cap exceeded");
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same_vars(o);
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same_vars(b);
    LaurentPoly r(a.nvars_);
    const std::size_t cap = term_cap();
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int k = 0; k < a.nvars_; ++k) {
                std::int64_t s = std::int64_t(ea[k]) + std::int64_t(eb[k]);
                check_exponent(s);
                e[k] = static_cast<std::int32_t>(s);
            }
            Poly prod = ca * cb;
            if (prod.is_zero())
                continue;
            auto [it, inserted] = r.terms_.try_emplace(e, std::move(prod));
            if (!inserted) {
                it->second += prod;
                if (it->second.is_zero())
                    r.terms_.erase(it);
            }
        }
        if (r.terms_.size() > cap)
            throw ResourceError("LaurentPoly: term cap exceeded");
    }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r(nvars_);
    if (c.is_zero())
        return r;
    for (const auto& [e, coeff] : terms_)
        r.terms_.emplace(e, coeff.scaled(c));
    return r;
}

LaurentPoly vandermonde_power(int nvars, int p) {
    if (nvars < 2)
        throw UsageError("vandermonde_power: need at least two variables");
    if (p < 1)
        throw UsageError("vandermonde_power: power must be positive");
    LaurentPoly r = LaurentPoly::constant(nvars, Rational(1));
    for (int i = 1; i <= nvars; ++i) {
        for (int j = i + 1; j <= nvars; ++j) {
            LaurentPoly factor =
                LaurentPoly::variable(nvars, i) - LaurentPoly::variable(nvars, j);
            for (int k = 0; k < p; ++k)
                r = r * factor;
        }
    }
    return r;
}

LaurentPoly elementary_symmetric(int nvars, int m, const std::set<int>& excluded) {
    if (nvars < 1)
        throw UsageError("elementary_symmetric: nvars must be positive");
    for (int v : excluded)
        if (v < 1 || v > nvars)
            throw UsageError("elementary_symmetric: excluded index out of range");
    std::vector<int> vars;
    for (int v = 1; v <= nvars; ++v)
        if (!excluded.count(v))
            vars.push_back(v);

    LaurentPoly r(nvars);
    if (m < 0 || m > static_cast<int>(vars.size()))
        return r;
    if (m == 0)
        return LaurentPoly::constant(nvars, Rational(1));

    // enumerate m-subsets of the included variables
    std::vector<int> pick(m);
    for (int k = 0; k < m; ++k)
        pick[k] = k;
    while (true) {
        Exponents e(nvars, 0);
        for (int k = 0; k < m; ++k)
            e[vars[pick[k]] - 1] = 1;
        r.add_term(std::move(e), Poly(Rational(1)));

        int k = m - 1;
        while (k >= 0 && pick[k] == static_cast<int>(vars.size()) - m + k)
            --k;
        if (k < 0)
            break;
        ++pick[k];
        for (int j = k + 1; j < m; ++j)
            pick[j] = pick[j - 1] + 1;
    }
    return r;
}

LaurentPoly j_factor(int pair_index, int m, int n) {
    if (n < 1)
        throw UsageError("j_factor: n must be positive");
    if (pair_index < 1 || pair_index > n)
        throw UsageError("j_factor: pair index out of range");
    if (m < 0)
        throw UsageError("j_factor: m must be nonnegative");
    const int nvars = 2 * n + 1;
    const std::set<int> excl{2 * pair_index - 1, 2 * pair_index};
    LaurentPoly diff = elementary_symmetric(nvars, m, excl) -
                       elementary_symmetric(nvars, m - 1, excl);
    return LaurentPoly::variable(nvars, 2 * pair_index) * diff;
}

LaurentPoly permute_variables(const LaurentPoly& f, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != f.nvars())
        throw UsageError("permute_variables: permutation length mismatch");
    std::vector<bool> seen(perm.size(), false);
    for (int v : perm) {
        if (v < 0 || v >= static_cast<int>(perm.size()) || seen[v])
            throw UsageError("permute_variables: not a permutation");
        seen[v] = true;
    }
    LaurentPoly r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Exponents out(e.size());
        for (std::size_t j = 0; j < e.size(); ++j)
            out[perm[j]] = e[j];
        r.add_term(std::move(out), c);
    }
    return r;
}

} // namespace wlab
