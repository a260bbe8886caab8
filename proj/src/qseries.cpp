#include "wlab/qseries.hpp"

#include <algorithm>
#include <numeric>

namespace wlab {

namespace {

std::optional<Rational> opt_min(const std::optional<Rational>& a,
                                const std::optional<Rational>& b) {
    if (!a)
        return b;
    if (!b)
        return a;
    return *a < *b ? a : b;
}

std::optional<Rational> opt_add(const std::optional<Rational>& a,
                                const std::optional<Rational>& b) {
    if (!a || !b)
        return std::nullopt;
    return *a + *b;
}

long lcm_long(long a, long b) {
    return std::lcm(a, b);
}

// Largest lattice index with exponent < bound: idx/denom < bound.
long long last_index_below(const Rational& bound, long denom) {
    // floor(bound*denom) minus one when bound*denom is integral
    Rational scaled = bound * Rational(denom);
    BigInt num = scaled.num(), den = scaled.den();
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    long long f = q.get_si();
    if (den == 1)
        return f - 1;
    return f;
}

} // namespace

void QSeries::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero())
        ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        offset_ += static_cast<long long>(lead);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
    if (coeffs_.empty())
        offset_ = 0;
    // never store anything at or beyond the validity bound
    if (valid_ && !coeffs_.empty()) {
        long long last = last_index_below(*valid_, denom_);
        if (offset_ > last) {
            coeffs_.clear();
            offset_ = 0;
        } else if (offset_ + static_cast<long long>(coeffs_.size()) - 1 > last) {
            coeffs_.resize(static_cast<std::size_t>(last - offset_ + 1));
            while (!coeffs_.empty() && coeffs_.back().is_zero())
                coeffs_.pop_back();
            if (coeffs_.empty())
                offset_ = 0;
        }
    }
}

QSeries QSeries::monomial(const Rational& exponent, const Rational& coeff) {
    QSeries s;
    if (coeff.is_zero())
        return s;
    BigInt den = exponent.den();
    if (!den.fits_slong_p())
        throw UsageError("QSeries: exponent denominator too large");
    s.denom_ = den.get_si();
    Rational idx = exponent * Rational(s.denom_);
    s.offset_ = idx.num().get_si();
    s.coeffs_ = {coeff};
    return s;
}

QSeries QSeries::from_lattice(long denom, long long offset, std::vector<Rational> coeffs,
                              std::optional<Rational> valid) {
    if (denom < 1)
        throw UsageError("QSeries: lattice denominator must be positive");
    QSeries s;
    s.denom_ = denom;
    s.offset_ = offset;
    s.coeffs_ = std::move(coeffs);
    s.valid_ = std::move(valid);
    s.normalize();
    return s;
}

QSeries QSeries::aligned(long new_denom) const {
    if (new_denom == denom_)
        return *this;
    if (new_denom % denom_ != 0)
        throw UsageError("QSeries: incompatible lattice alignment");
    const long f = new_denom / denom_;
    QSeries s;
    s.denom_ = new_denom;
    s.offset_ = offset_ * f;
    s.valid_ = valid_;
    if (!coeffs_.empty()) {
        s.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(f) + 1, Rational(0));
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            s.coeffs_[k * static_cast<std::size_t>(f)] = coeffs_[k];
    }
    return s;
}

std::optional<Rational> QSeries::effective_lead() const {
    if (!coeffs_.empty())
        return Rational(static_cast<long>(offset_), denom_);
    return valid_; // zero at least up to the validity bound
}

void QSeries::require_valid_at(const Rational& bound) const {
    if (valid_ && *valid_ < bound)
        throw UsageError("QSeries: requested order exceeds validity bound");
}

Rational QSeries::coefficient(const Rational& exponent) const {
    if (valid_ && exponent >= *valid_)
        throw UsageError("QSeries: coefficient beyond validity bound");
    Rational idx = exponent * Rational(denom_);
    if (!idx.is_integer())
        return Rational(0); // off-lattice exponents carry no terms
    BigInt k = idx.num();
    if (!k.fits_slong_p())
        return Rational(0);
    long long kk = k.get_si();
    if (kk < offset_ || kk >= offset_ + static_cast<long long>(coeffs_.size()))
        return Rational(0);
    return coeffs_[static_cast<std::size_t>(kk - offset_)];
}

std::vector<std::pair<Rational, Rational>> QSeries::entries() const {
    std::vector<std::pair<Rational, Rational>> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero())
            out.emplace_back(Rational(static_cast<long>(offset_) + static_cast<long>(k), denom_),
                             coeffs_[k]);
    return out;
}

QSeries QSeries::operator-() const {
    QSeries s(*this);
    for (auto& c : s.coeffs_)
        c = -c;
    return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    const long D = lcm_long(a.denom_, b.denom_);
    QSeries A = a.aligned(D), B = b.aligned(D);
    QSeries s;
    s.denom_ = D;
    s.valid_ = opt_min(A.valid_, B.valid_);
    if (A.coeffs_.empty() && B.coeffs_.empty()) {
        s.normalize();
        return s;
    }
    long long lo, hi; // inclusive index window
    if (A.coeffs_.empty()) {
        lo = B.offset_;
        hi = B.offset_ + static_cast<long long>(B.coeffs_.size()) - 1;
    } else if (B.coeffs_.empty()) {
        lo = A.offset_;
        hi = A.offset_ + static_cast<long long>(A.coeffs_.size()) - 1;
    } else {
        lo = std::min(A.offset_, B.offset_);
        hi = std::max(A.offset_ + static_cast<long long>(A.coeffs_.size()),
                      B.offset_ + static_cast<long long>(B.coeffs_.size())) -
             1;
    }
    s.offset_ = lo;
    s.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (std::size_t k = 0; k < A.coeffs_.size(); ++k)
        s.coeffs_[static_cast<std::size_t>(A.offset_ - lo) + k] += A.coeffs_[k];
    for (std::size_t k = 0; k < B.coeffs_.size(); ++k)
        s.coeffs_[static_cast<std::size_t>(B.offset_ - lo) + k] += B.coeffs_[k];
    s.normalize();
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    return a + (-b);
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const long D = lcm_long(a.denom_, b.denom_);
    QSeries A = a.aligned(D), B = b.aligned(D);
    QSeries s;
    s.denom_ = D;
    s.valid_ = opt_min(opt_add(A.valid_, B.effective_lead()),
                       opt_add(B.valid_, A.effective_lead()));
    if (A.coeffs_.empty() || B.coeffs_.empty()) {
        s.normalize();
        return s;
    }
    const long long lo = A.offset_ + B.offset_;
    long long hi = A.offset_ + static_cast<long long>(A.coeffs_.size()) - 1 + B.offset_ +
                   static_cast<long long>(B.coeffs_.size()) - 1;
    if (s.valid_)
        hi = std::min(hi, last_index_below(*s.valid_, D));
    if (hi < lo) {
        s.normalize();
        return s;
    }
    s.offset_ = lo;
    s.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (std::size_t i = 0; i < A.coeffs_.size(); ++i) {
        if (A.coeffs_[i].is_zero())
            continue;
        const long long base = A.offset_ + static_cast<long long>(i) + B.offset_;
        for (std::size_t j = 0; j < B.coeffs_.size(); ++j) {
            if (B.coeffs_[j].is_zero())
                continue;
            const long long idx = base + static_cast<long long>(j);
            if (idx > hi)
                break;
            s.coeffs_[static_cast<std::size_t>(idx - lo)] += A.coeffs_[i] * B.coeffs_[j];
        }
    }
    s.normalize();
    return s;
}

QSeries QSeries::scaled(const Rational& c) const {
    if (c.is_zero()) {
        QSeries s;
        s.valid_ = valid_;
        return s;
    }
    QSeries s(*this);
    for (auto& x : s.coeffs_)
        x *= c;
    return s;
}

QSeries QSeries::truncated(const Rational& bound) const {
    QSeries s(*this);
    s.valid_ = opt_min(valid_, bound);
    s.normalize();
    return s;
}

bool QSeries::equal_below(const QSeries& a, const QSeries& b, const Rational& bound) {
    a.require_valid_at(bound);
    b.require_valid_at(bound);
    const long D = lcm_long(a.denom_, b.denom_);
    QSeries A = a.aligned(D), B = b.aligned(D);
    const long long last = last_index_below(bound, D);
    auto at = [last](const QSeries& s, long long idx) -> Rational {
        if (idx > last || idx < s.offset_ ||
            idx >= s.offset_ + static_cast<long long>(s.coeffs_.size()))
            return Rational(0);
        return s.coeffs_[static_cast<std::size_t>(idx - s.offset_)];
    };
    long long lo = std::min(A.coeffs_.empty() ? last + 1 : A.offset_,
                            B.coeffs_.empty() ? last + 1 : B.offset_);
    for (long long idx = lo; idx <= last; ++idx)
        if (at(A, idx) != at(B, idx))
            return false;
    return true;
}

bool QSeries::nonneg_integer_below(const Rational& bound) const {
    require_valid_at(bound);
    const long long last = last_index_below(bound, denom_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (offset_ + static_cast<long long>(k) > last)
            break;
        if (!coeffs_[k].is_integer() || coeffs_[k].sign() < 0)
            return false;
    }
    return true;
}

QSeries euler_phi(long order) {
    if (order < 1)
        throw UsageError("euler_phi: order must be positive");
    std::vector<Rational> c(static_cast<std::size_t>(order), Rational(0));
    c[0] = Rational(1);
    for (long n = 1; n < order; ++n)
        for (long long j = order - 1; j >= n; --j)
            c[static_cast<std::size_t>(j)] -= c[static_cast<std::size_t>(j - n)];
    return QSeries::from_lattice(1, 0, std::move(c), Rational(order));
}

QSeries phi_inverse(long order) {
    if (order < 1)
        throw UsageError("phi_inverse: order must be positive");
    QSeries phi = euler_phi(order);
    std::vector<Rational> a(static_cast<std::size_t>(order), Rational(0));
    for (std::size_t k = 0;
         k < phi.raw_coeffs().size() && k < static_cast<std::size_t>(order); ++k)
        a[k] = phi.raw_coeffs()[k]; // phi has offset 0 on the integer lattice
    std::vector<Rational> b(static_cast<std::size_t>(order), Rational(0));
    b[0] = Rational(1);
    for (long k = 1; k < order; ++k) {
        Rational acc;
        for (long j = 1; j <= k; ++j)
            if (!a[static_cast<std::size_t>(j)].is_zero())
                acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
        b[static_cast<std::size_t>(k)] = -acc;
    }
    return QSeries::from_lattice(1, 0, std::move(b), Rational(order));
}

QSeries eta(long order) {
    QSeries phi = euler_phi(order);
    return QSeries::monomial(Rational(1, 24), Rational(1)) * phi;
}

QSeries eta_inverse(long order) {
    return QSeries::monomial(Rational(-1, 24), Rational(1)) * phi_inverse(order);
}

namespace {

// Shared lattice walk for theta and its j-insertion derivatives:
// exponent (r+4pk)^2 / (8p), insertion weight w((r+4pk)/(4p)).
template <typename Weight>
QSeries theta_sum(long r, int p, long order, Weight&& weight) {
    if (p < 1)
        throw UsageError("theta: p must be positive");
    if (order < 1)
        throw UsageError("theta: order must be positive");
    const long long fourp = 4LL * p;
    const long long eightp = 8LL * p;
    const long long max_num = eightp * order; // need (r+4pk)^2 < max_num
    std::vector<std::pair<long long, Rational>> terms;
    for (long long k = 0;; ++k) {
        long long u = r + fourp * k;
        if (u * u >= max_num && u > 0)
            break;
        if (u * u < max_num)
            terms.emplace_back(u * u, weight(u));
    }
    for (long long k = -1;; --k) {
        long long u = r + fourp * k;
        if (u * u >= max_num && u < 0)
            break;
        if (u * u < max_num)
            terms.emplace_back(u * u, weight(u));
    }
    if (terms.empty())
        return QSeries::from_lattice(eightp, 0, {}, Rational(order));
    long long lo = terms[0].first, hi = terms[0].first;
    for (auto& [e, c] : terms) {
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (auto& [e, c] : terms)
        coeffs[static_cast<std::size_t>(e - lo)] += c;
    return QSeries::from_lattice(eightp, lo, std::move(coeffs), Rational(order));
}

} // namespace

QSeries theta(long r, int p, long order) {
    return theta_sum(r, p, order, [](long long) { return Rational(1); });
}

QSeries dtheta(long r, int p, long order, const Rational& normalization) {
    const Rational scale = normalization / Rational(4L * p); // j = u/(4p)
    return theta_sum(r, p, order, [&](long long u) { return scale * Rational(u); });
}

QSeries ddtheta(long r, int p, long order, const Rational& normalization) {
    const Rational scale = normalization / Rational(4L * p);
    return theta_sum(r, p, order, [&](long long u) {
        Rational w = scale * Rational(u);
        return w * w;
    });
}

} // namespace wlab
