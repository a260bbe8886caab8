#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "wlab/poly.hpp"

namespace wlab {

/// Exponent vector of a Laurent monomial; length equals the ambient
/// variable count, entries signed and guard-checked.
using Exponents = std::vector<std::int32_t>;

// Process-wide caps. Multiplication fails fast with ResourceError instead
// of exhausting memory; exponents are kept well inside int32 range.
std::size_t term_cap();
void set_term_cap(std::size_t cap);
constexpr std::int32_t kExponentGuard = 1 << 20;

/// Sparse multivariate Laurent polynomial with Poly coefficients,
/// canonical form (no zero terms), keyed lexicographically by exponent
/// vector. Variables are 1-based in every public interface (x1..xn).
class LaurentPoly {
public:
    explicit LaurentPoly(int nvars);

    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly monomial(Exponents e, Poly coeff);
    static LaurentPoly variable(int nvars, int var); // x_var, 1-based

    int nvars() const { return nvars_; }
    const std::map<Exponents, Poly>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Poly coefficient_at(const Exponents& e) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    LaurentPoly scaled(const Rational& c) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    void add_term(Exponents e, Poly coeff); // accumulating insert

private:
    void check_same_vars(const LaurentPoly& o) const;
    int nvars_;
    std::map<Exponents, Poly> terms_;
};

/// Vandermonde power: prod_{i<j} (x_i - x_j)^p, index order as written.
LaurentPoly vandermonde_power(int nvars, int p);

/// m-th elementary symmetric polynomial in the non-excluded variables.
/// m = 0 gives 1; m < 0 or m beyond the variable count gives 0.
/// Excluded indices are 1-based.
LaurentPoly elementary_symmetric(int nvars, int m, const std::set<int>& excluded = {});

/// J_{i,m} = x_{2i} (S_m(both pair vars excluded) - S_{m-1}(same)) in
/// 2n+1 variables; the m = 0 case uses S_{-1} = 0.
LaurentPoly j_factor(int pair_index, int m, int n);

/// Relabels variables: the exponent of old variable j (0-based) moves to
/// slot perm[j]. perm must be a permutation of {0..nvars-1}.
LaurentPoly permute_variables(const LaurentPoly& f, const std::vector<int>& perm);

} // namespace wlab
