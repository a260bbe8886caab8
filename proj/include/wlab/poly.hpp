#pragma once

#include <optional>
#include <vector>

#include "wlab/rational.hpp"

namespace wlab {

/// Dense univariate polynomial over Rational, coefficients ascending,
/// no trailing zeros. The zero polynomial has an empty coefficient list.
/// Used both for polynomials in the residue parameter t and for the Zhu
/// polynomials in x; the variable name is contextual.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(std::vector<Rational> coeffs);

    static Poly variable();                             // t
    static Poly linear(const Rational& a, const Rational& b); // a*t + b

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // coefficient of t^k, zero beyond the degree
    Rational coeff(std::size_t k) const;
    Rational leading() const;
    Rational eval(const Rational& x) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator-() const;
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const Rational& c) const;

    // Exact division by (x - root); throws UsageError if the remainder is
    // nonzero, i.e. root is not actually a root.
    Poly divided_by_linear_factor(const Rational& root) const;

    // Remainder modulo a monic-or-not divisor, exact arithmetic.
    Poly mod(const Poly& divisor) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const char* var = "t") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// (t+shift)(t+shift-1)...(t+shift-choose+1)/choose!; choose = 0 gives 1.
Poly binom_poly(const Rational& shift, unsigned choose);

struct Proportionality {
    std::optional<Rational> ratio; // lambda with a = lambda * b
    bool degenerate = false;       // a was the zero polynomial
};

/// Finds lambda with a = lambda*b. Absent when none exists (including
/// b = 0 with a != 0). a = 0 yields ratio 0 with the degenerate flag set.
Proportionality proportional_ratio(const Poly& a, const Poly& b);

} // namespace wlab
