#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wlab/poly.hpp"

namespace wlab {

/// Exact truncated power series in q with rational exponents on the
/// lattice (1/denom)Z. Stored exponents are (offset + k)/denom for
/// k = 0..coeffs.size()-1. `valid` is the exactness bound: every
/// coefficient at an exponent < valid is exact (nullopt means the series
/// is exact at all orders, e.g. a finite q-polynomial). Arithmetic aligns
/// lattices to the lcm and propagates the tightest correct bound.
class QSeries {
public:
    QSeries() : denom_(1), offset_(0) {}

    static QSeries monomial(const Rational& exponent, const Rational& coeff);
    static QSeries from_lattice(long denom, long long offset, std::vector<Rational> coeffs,
                                std::optional<Rational> valid);

    long denom() const { return denom_; }
    long long offset() const { return offset_; }
    const std::vector<Rational>& raw_coeffs() const { return coeffs_; }
    const std::optional<Rational>& valid() const { return valid_; }
    bool known_zero() const { return coeffs_.empty(); }

    /// Coefficient at an exact exponent; throws UsageError at or beyond
    /// the validity bound.
    Rational coefficient(const Rational& exponent) const;

    /// Nonzero (exponent, coefficient) pairs in ascending exponent order.
    std::vector<std::pair<Rational, Rational>> entries() const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator+=(const QSeries& o) { *this = *this + o; return *this; }
    QSeries& operator-=(const QSeries& o) { *this = *this - o; return *this; }
    QSeries& operator*=(const QSeries& o) { *this = *this * o; return *this; }

    QSeries scaled(const Rational& c) const;
    QSeries truncated(const Rational& bound) const;

    /// Exact coefficient comparison for all exponents < bound; both
    /// operands must be valid at least up to bound.
    static bool equal_below(const QSeries& a, const QSeries& b, const Rational& bound);

    bool nonneg_integer_below(const Rational& bound) const;

private:
    void normalize();
    QSeries aligned(long new_denom) const;
    std::optional<Rational> effective_lead() const;
    void require_valid_at(const Rational& bound) const;

    long denom_;
    long long offset_;
    std::vector<Rational> coeffs_;
    std::optional<Rational> valid_; // nullopt: exact everywhere
};

/// Euler product phi(q) = prod_{n>=1} (1 - q^n), exact below `order`.
QSeries euler_phi(long order);

/// 1/phi(q): the partition generating series.
QSeries phi_inverse(long order);

/// Dedekind eta = q^{1/24} phi(q) and its reciprocal.
QSeries eta(long order);
QSeries eta_inverse(long order);

/// Theta constant theta_{r,2p} = sum_{j in r/4p + Z} q^{2p j^2};
/// exponents live on the lattice (1/8p)Z.
QSeries theta(long r, int p, long order);

/// j-insertion derivatives: sum (normalization*j) q^{2p j^2} and the
/// squared-insertion variant. Default insertion normalization is 4p*j.
QSeries dtheta(long r, int p, long order, const Rational& normalization);
QSeries ddtheta(long r, int p, long order, const Rational& normalization);

} // namespace wlab
