#include "wlab/recursion.hpp"

namespace wlab {

StepFactor step_factor(int n, long i, int p, int m) {
    if (n < 1)
        throw UsageError("step_factor: n must be positive");
    if (p < 1 || p % 2 == 0)
        throw UsageError("step_factor: p must be odd and positive");
    if (m < 0 || m > 2 * n)
        throw UsageError("step_factor: m must lie in [0, 2n]");

    const Rational pr(p);
    const Rational mr(m);
    // Denominator (2n+1-m)(pm+2i-2-2pn)/2: the coefficient of I_m in the
    // total-derivative identity behind the recursion. The brute-force
    // oracle pins its sign; see the step-factor tests.
    Rational den = Rational(2 * n + 1 - m) *
                   (pr * mr + Rational(2 * i - 2) - Rational(2) * pr * Rational(n)) /
                   Rational(2);
    if (den.is_zero())
        throw BaseCaseError("step_factor: constant base case at (n=" + std::to_string(n) +
                            ", i=" + std::to_string(i) + ", m=" + std::to_string(m) + ")");
    Rational shift = pr * Rational(2 * n - m) + pr * mr / Rational(2) - Rational(i) + Rational(2);
    Poly num = Poly::linear(Rational(1), shift).scaled(Rational(m + 1));
    return {num, den};
}

Poly ClosedForm::value() const {
    if (!base_constant)
        throw UsageError("ClosedForm: base constant absent");
    return factor_product.scaled(*base_constant);
}

ClosedForm closed_form(int n, long i_start, int p, std::optional<Rational> base,
                       BaseSource base_source) {
    if (n < 1)
        throw UsageError("closed_form: n must be positive");
    if (p < 1 || p % 2 == 0)
        throw UsageError("closed_form: p must be odd and positive");
    const long base_pole = static_cast<long>(p) * n + 1;
    if (i_start < base_pole)
        throw UsageError("closed_form: i_start must be at least pn+1");

    ClosedForm cf;
    cf.n = n;
    cf.p = p;
    cf.i_start = i_start;
    cf.factor_product = Poly(Rational(1));

    // Fixed sweep order m = 0..2n at each pole order, then the linking
    // identity I_{i,2n+1} = I_{i-1,0} drops the pole order by one.
    for (long i = i_start; i > base_pole; --i) {
        for (int m = 0; m <= 2 * n; ++m) {
            StepFactor f = step_factor(n, i, p, m);
            cf.factor_product =
                cf.factor_product * f.numerator.scaled(Rational(1) / f.denominator);
        }
    }

    const long expected_degree = (i_start - base_pole) * (2 * n + 1);
    if (cf.factor_product.degree() != expected_degree)
        throw std::logic_error("closed_form: factor product degree mismatch");

    if (base) {
        cf.base_constant = *base;
        cf.base_source = base_source;
    }
    return cf;
}

Poly theorem_ct_rhs(int k, int p) {
    if (k < 0)
        throw UsageError("theorem_ct_rhs: k must be nonnegative");
    if (p < 1 || p % 2 == 0)
        throw UsageError("theorem_ct_rhs: p must be odd and positive");
    const unsigned choose = static_cast<unsigned>((k + 1) * p - 1);
    Poly r(Rational(1));
    for (int i = 0; i <= 2 * k; ++i)
        r = r * binom_poly(Rational(static_cast<long>(p) * i, 2), choose);
    return r;
}

Rational conjectured_base_constant(int k, int m) {
    if (k < 1 || m < 1)
        throw UsageError("conjectured_base_constant: k and m must be positive");
    const unsigned long K = 2 * static_cast<unsigned long>(k) + 1;
    const unsigned long M = 2 * static_cast<unsigned long>(m) + 1;
    BigInt num = double_factorial(K * M);
    BigInt den = double_factorial(K);
    BigInt mf = double_factorial(M);
    for (unsigned long j = 0; j < K; ++j)
        den *= mf;
    return Rational(num, den);
}

CtVerification verify_theorem_ct(int k, int p, std::chrono::seconds oracle_budget,
                                 unsigned workers) {
    if (k < 1)
        throw UsageError("verify_theorem_ct: k must be positive");
    const auto start = std::chrono::steady_clock::now();

    CtVerification v;
    v.k = k;
    v.p = p;
    v.rhs = theorem_ct_rhs(k, p);

    ClosedForm cf = closed_form(k, static_cast<long>(2 * k + 1) * p, p);
    v.factor_product = cf.factor_product;

    OracleOptions opts;
    opts.workers = workers;
    opts.deadline = start + oracle_budget;
    ResidueParams base_params{k, static_cast<long>(p) * k + 1, p, 0, true};

    std::optional<Rational> base;
    try {
        ResidueResult base_result = brute_residue(base_params, opts);
        if (base_result.value.degree() > 0)
            throw std::logic_error("verify_theorem_ct: base is not constant");
        base = base_result.value.coeff(0);
    } catch (const BudgetExceeded&) {
        base.reset();
    }

    if (base) {
        v.base_source = BaseSource::oracle;
        v.base_constant = *base;
        Proportionality prop = proportional_ratio(v.factor_product.scaled(*base), v.rhs);
        if (prop.ratio && !prop.degenerate && !prop.ratio->is_zero()) {
            v.lambda = prop.ratio;
            v.status = VerifyStatus::pass;
        } else {
            v.status = VerifyStatus::fail;
        }
    } else {
        // Budget ran out: proportionality of the factor product alone.
        v.base_source = BaseSource::unset;
        Proportionality prop = proportional_ratio(v.factor_product, v.rhs);
        if (prop.ratio && !prop.degenerate && !prop.ratio->is_zero()) {
            v.lambda = prop.ratio;
            v.status = VerifyStatus::shape_only;
        } else {
            v.status = VerifyStatus::fail;
        }
    }

    v.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return v;
}

const char* to_string(BaseSource s) {
    switch (s) {
    case BaseSource::unset: return "unset";
    case BaseSource::oracle: return "oracle";
    case BaseSource::conjecture: return "conjecture";
    case BaseSource::supplied: return "supplied";
    }
    return "unset";
}

const char* to_string(VerifyStatus s) {
    switch (s) {
    case VerifyStatus::pass: return "pass";
    case VerifyStatus::shape_only: return "shape-only";
    case VerifyStatus::fail: return "fail";
    }
    return "fail";
}

} // namespace wlab
