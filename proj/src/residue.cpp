#include "wlab/residue.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace wlab {

namespace {

void validate(const ResidueParams& params) {
    if (params.n < 1)
        throw UsageError("residue: n must be positive");
    if (params.p < 1 || params.p % 2 == 0)
        throw UsageError("residue: p must be odd and positive");
    if (params.m < 0 || params.m > 2 * params.n + 1)
        throw UsageError("residue: m must lie in [0, 2n+1]");
}

struct MonomialRef {
    const Exponents* exps;
    Rational coeff;
};

std::vector<MonomialRef> collect(const LaurentPoly& numerator) {
    std::vector<MonomialRef> out;
    out.reserve(numerator.term_count());
    for (const auto& [e, c] : numerator.terms()) {
        if (c.degree() > 0)
            throw UsageError("residue: numerator coefficients must be scalars");
        out.push_back({&e, c.coeff(0)});
    }
    return out;
}

// One monomial of the expanded numerator. The (1+x_j)^t factors are forced:
// variable j must be raised by e_j >= 0 to reach exponent -1, contributing
// binom(t, e_j). For a log pair the two compensations are coupled through
// the log index l, and the sums over the n pairs are independent, so they
// multiply.
Poly monomial_contribution(const Exponents& E, const Rational& coeff, long i, int n,
                           bool include_log, const std::vector<Poly>& binom_table) {
    const int nvars = 2 * n + 1;
    if (!include_log) {
        Poly acc(Rational(1));
        for (int j = 0; j < nvars; ++j) {
            long e = i - 1 - E[j];
            if (e < 0)
                return Poly();
            acc = acc * binom_table[static_cast<std::size_t>(e)];
        }
        return acc.scaled(coeff);
    }

    long e_last = i - 1 - E[nvars - 1];
    if (e_last < 0)
        return Poly();
    Poly acc = binom_table[static_cast<std::size_t>(e_last)];
    for (int a = 1; a <= n; ++a) {
        const long E_odd = E[2 * a - 2];
        const long E_even = E[2 * a - 1];
        const long lo = std::max<long>(1, E_odd - i + 1);
        const long hi = i - 1 - E_even;
        if (lo > hi)
            return Poly();
        Poly pair_sum;
        for (long l = lo; l <= hi; ++l) {
            const long e_odd = i - 1 - E_odd + l;
            const long e_even = i - 1 - E_even - l;
            Poly term = binom_table[static_cast<std::size_t>(e_odd)] *
                        binom_table[static_cast<std::size_t>(e_even)];
            pair_sum += term.scaled(Rational(1, l));
        }
        if (pair_sum.is_zero())
            return Poly();
        acc = acc * pair_sum;
    }
    Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
    return acc.scaled(coeff * sign);
}

} // namespace

unsigned resolve_worker_count(unsigned requested) {
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("WLAB_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

long log_order_bound(const ResidueParams& params) {
    return params.i >= 1 ? params.i - 1 : 0;
}

namespace detail {

Poly residue_of_expanded(const LaurentPoly& numerator, long i, int n, bool include_log,
                         const OracleOptions& opts) {
    if (numerator.nvars() != 2 * n + 1)
        throw UsageError("residue: numerator variable count must be 2n+1");

    // Largest compensation exponent any branch can request.
    const long max_e = i >= 1 ? 2 * (i - 1) : 0;
    std::vector<Poly> binom_table;
    binom_table.reserve(static_cast<std::size_t>(max_e) + 1);
    for (long e = 0; e <= max_e; ++e)
        binom_table.push_back(binom_poly(Rational(0), static_cast<unsigned>(e)));

    const std::vector<MonomialRef> monomials = collect(numerator);
    constexpr std::size_t kBlock = 512;
    const std::size_t nblocks = (monomials.size() + kBlock - 1) / kBlock;
    std::vector<Poly> block_sums(nblocks);

    std::atomic<std::size_t> next_block{0};
    std::atomic<bool> out_of_budget{false};
    auto work = [&]() {
        for (;;) {
            std::size_t b = next_block.fetch_add(1);
            if (b >= nblocks || out_of_budget.load(std::memory_order_relaxed))
                return;
            if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline) {
                out_of_budget.store(true, std::memory_order_relaxed);
                return;
            }
            Poly sum;
            const std::size_t end = std::min(monomials.size(), (b + 1) * kBlock);
            for (std::size_t k = b * kBlock; k < end; ++k)
                sum += monomial_contribution(*monomials[k].exps, monomials[k].coeff, i, n,
                                             include_log, binom_table);
            block_sums[b] = std::move(sum);
        }
    };

    const unsigned workers =
        std::min<unsigned>(resolve_worker_count(opts.workers),
                           std::max<std::size_t>(nblocks, 1));
    if (workers <= 1 || nblocks <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& th : pool)
            th.join();
    }
    if (out_of_budget.load())
        throw BudgetExceeded("residue: oracle budget exceeded");

    // Fixed block partition and in-order reduction: results are identical
    // for any worker count.
    Poly total;
    for (auto& s : block_sums)
        total += s;
    return total;
}

} // namespace detail

ResidueResult brute_residue(const ResidueParams& params, const OracleOptions& opts) {
    validate(params);
    const auto start = std::chrono::steady_clock::now();
    const int nvars = 2 * params.n + 1;

    LaurentPoly numerator = elementary_symmetric(nvars, params.m) *
                            vandermonde_power(nvars, params.p);
    Poly value =
        detail::residue_of_expanded(numerator, params.i, params.n, params.include_log, opts);

    // Structural degree bound: every surviving branch has total
    // compensation degree (2n+1)(i-1-pn) - m exactly.
    const long bound =
        (2 * params.n + 1) * (params.i - 1 - static_cast<long>(params.p) * params.n) -
        params.m;
    if (!value.is_zero() && value.degree() > bound)
        throw std::logic_error("residue: degree bound violated");

    ResidueResult result;
    result.params = params;
    result.value = std::move(value);
    result.provenance = Provenance::oracle;
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return result;
}

Rational brute_residue_at(const ResidueParams& params, const Rational& t_value,
                          const OracleOptions& opts) {
    validate(params);
    const int nvars = 2 * params.n + 1;
    const long i = params.i;
    const int n = params.n;

    const long max_e = i >= 1 ? 2 * (i - 1) : 0;
    std::vector<Rational> binom_at;
    binom_at.reserve(static_cast<std::size_t>(max_e) + 1);
    Rational running(1);
    binom_at.push_back(running);
    for (long e = 1; e <= max_e; ++e) {
        running *= (t_value - Rational(e - 1)) / Rational(e);
        binom_at.push_back(running);
    }

    LaurentPoly numerator = elementary_symmetric(nvars, params.m) *
                            vandermonde_power(nvars, params.p);
    (void)opts;
    Rational total;
    for (const auto& [E, c] : numerator.terms()) {
        if (c.degree() > 0)
            throw UsageError("residue: numerator coefficients must be scalars");
        const Rational coeff = c.coeff(0);
        if (!params.include_log) {
            Rational acc(1);
            bool dead = false;
            for (int j = 0; j < nvars && !dead; ++j) {
                long e = i - 1 - E[j];
                if (e < 0)
                    dead = true;
                else
                    acc *= binom_at[static_cast<std::size_t>(e)];
            }
            if (!dead)
                total += coeff * acc;
            continue;
        }
        long e_last = i - 1 - E[nvars - 1];
        if (e_last < 0)
            continue;
        Rational acc = binom_at[static_cast<std::size_t>(e_last)];
        bool dead = false;
        for (int a = 1; a <= n && !dead; ++a) {
            const long E_odd = E[2 * a - 2];
            const long E_even = E[2 * a - 1];
            const long lo = std::max<long>(1, E_odd - i + 1);
            const long hi = i - 1 - E_even;
            if (lo > hi) {
                dead = true;
                break;
            }
            Rational pair_sum;
            for (long l = lo; l <= hi; ++l) {
                pair_sum += binom_at[static_cast<std::size_t>(i - 1 - E_odd + l)] *
                            binom_at[static_cast<std::size_t>(i - 1 - E_even - l)] *
                            Rational(1, l);
            }
            acc *= pair_sum;
        }
        if (dead)
            continue;
        if (n % 2 == 1)
            acc = -acc;
        total += coeff * acc;
    }
    return total;
}

} // namespace wlab
