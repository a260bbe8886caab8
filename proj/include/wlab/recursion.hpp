#pragma once

#include <chrono>

#include "wlab/residue.hpp"

namespace wlab {

/// One step of the first-order recursion in the insertion index m:
/// I_m = (numerator / denominator) * I_{m+1}, numerator linear in t with
/// leading coefficient m+1.
struct StepFactor {
    Poly numerator;
    Rational denominator;
};

/// numerator = (m+1)(t + p(2n-m) + pm/2 - i + 2),
/// denominator = (m-2n-1)(pm + 2i - 2 - 2pn)/2.
/// Throws BaseCaseError when the denominator vanishes, which happens
/// exactly at the constant base case (m = 0, i = pn+1).
StepFactor step_factor(int n, long i, int p, int m);

enum class BaseSource { unset, oracle, conjecture, supplied };

/// Telescoped closed form of I_{2n+1,i_start,p,0}(t): repeated m-sweeps
/// followed by the linking identity drop the pole order from i_start down
/// to the constant base at pn+1.
struct ClosedForm {
    int n = 0;
    int p = 1;
    long i_start = 0;
    Poly factor_product;
    std::optional<Rational> base_constant;
    BaseSource base_source = BaseSource::unset;

    Poly value() const; // factor_product * base; throws if base absent
};

ClosedForm closed_form(int n, long i_start, int p,
                       std::optional<Rational> base = std::nullopt,
                       BaseSource base_source = BaseSource::supplied);

/// prod_{i=0}^{2k} binom(t + p*i/2, (k+1)p - 1); degree (2k+1)((k+1)p-1).
Poly theorem_ct_rhs(int k, int p);

/// ((2k+1)(2m+1))!! / ((2k+1)!! * ((2m+1)!!)^(2k+1)) -- the conjectured
/// magnitude of the base constant at p = 2m+1, constant-term pole order
/// (2m+1)k.
Rational conjectured_base_constant(int k, int m);

enum class VerifyStatus { pass, shape_only, fail };

struct CtVerification {
    int k = 0;
    int p = 1;
    VerifyStatus status = VerifyStatus::fail;
    std::optional<Rational> lambda;
    BaseSource base_source = BaseSource::unset;
    std::optional<Rational> base_constant;
    Poly factor_product;
    Poly rhs;
    std::chrono::milliseconds elapsed{0};
};

/// Checks that the closed form of I_{2k+1,(2k+1)p,p,0}, with its base
/// constant taken from the brute-force oracle at pole order pk+1, is
/// exactly proportional to theorem_ct_rhs(k, p) with nonzero lambda.
/// If the oracle runs out of budget, downgrades to a shape-only check
/// (factor product proportional to the rhs, base unverified).
CtVerification verify_theorem_ct(int k, int p, std::chrono::seconds oracle_budget,
                                 unsigned workers = 0);

const char* to_string(BaseSource s);
const char* to_string(VerifyStatus s);

} // namespace wlab
