#pragma once

#include <chrono>
#include <optional>

#include "wlab/laurent.hpp"

namespace wlab {

/// Parameters of the logarithmic residue I_{2n+1,i,p,m}(t): n log pairs
/// (2n+1 variables), per-variable pole order i, odd Vandermonde power p,
/// symmetric-function insertion index m. F_{2n+1,i,p} is the m = 0 case.
struct ResidueParams {
    int n = 1;
    long i = 0;
    int p = 1;
    int m = 0;
    bool include_log = true;
};

enum class Provenance { oracle, recursion };

struct ResidueResult {
    ResidueParams params;
    Poly value;
    Provenance provenance = Provenance::oracle;
    std::chrono::milliseconds elapsed{0};
};

struct OracleOptions {
    unsigned workers = 0; // 0: WLAB_WORKERS env var, else hardware concurrency
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// Exact truncation bound for the log expansion: a term x_{2a}^l/(l x_{2a-1}^l)
/// contributes to the residue only if the x_{2a} exponent can still be
/// brought to -1 by nonnegative compensation, forcing l <= i-1.
long log_order_bound(const ResidueParams& params);

/// Brute-force residue: the exact coefficient of (x_1...x_{2n+1})^{-1} in
/// S_m * Delta^p * (x_1...x_{2n+1})^{-i} * prod (1+x_j)^t * prod ln(1 - x_{2a}/x_{2a-1}),
/// as a polynomial in t. No series truncation error anywhere.
ResidueResult brute_residue(const ResidueParams& params, const OracleOptions& opts = {});

/// Same residue evaluated at a fixed t, without building the polynomial.
Rational brute_residue_at(const ResidueParams& params, const Rational& t_value,
                          const OracleOptions& opts = {});

unsigned resolve_worker_count(unsigned requested);

namespace detail {
/// Residue pipeline on an already-expanded numerator polynomial; exposed
/// so tests can feed relabeled variants of S_m * Delta^p through the same
/// enumeration.
Poly residue_of_expanded(const LaurentPoly& numerator, long i, int n, bool include_log,
                         const OracleOptions& opts = {});
} // namespace detail

} // namespace wlab
