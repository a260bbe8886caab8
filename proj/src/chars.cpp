#include "wlab/chars.hpp"

#include <algorithm>
#include <numeric>

namespace wlab {

namespace {

void check_p(int p) {
    if (p < 3 || p % 2 == 0)
        throw UsageError("characters: p must be odd and >= 3");
}

long long rational_ceil(const Rational& x) {
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.num().get_mpz_t(), x.den().get_mpz_t());
    return q.get_si();
}

// q^{lead} (1 - q^{sv_level}) / phi, exact below `order`.
QSeries char_over_phi(const Rational& lead, long sv_level, long order) {
    long pad = order + 1;
    if (lead.sign() < 0)
        pad += rational_ceil(-lead);
    QSeries numerator = QSeries::monomial(lead, Rational(1));
    if (sv_level > 0)
        numerator = numerator - QSeries::monomial(lead + Rational(sv_level), Rational(1));
    return (numerator * phi_inverse(pad)).truncated(Rational(order));
}

void enforce_character_coefficients(const QSeries& s, long order, const char* what) {
    if (!s.nonneg_integer_below(Rational(order)))
        throw std::logic_error(std::string(what) +
                               ": character has a negative or non-integer coefficient");
}

} // namespace

Rational central_charge(int p) {
    check_p(p);
    Rational d(p - 2);
    return Rational(1) - Rational(6) * d * d / Rational(2L * p);
}

Rational conformal_weight(int p, long r, long s) {
    check_p(p);
    Rational a(static_cast<long>(p) * r - 2 * s);
    Rational b(p - 2);
    return (a * a - b * b) / Rational(8L * p);
}

Rational fock_lowest_weight(int p, const Rational& x) {
    return (Rational(p) * x * x - Rational(p - 2) * x) / Rational(2);
}

QSeries virasoro_char(int p, long r, long s, long order) {
    check_p(p);
    if (r < 2 || s < 1 || s > p)
        throw UsageError("virasoro_char: (r,s) outside the supported range");
    Rational lead = conformal_weight(p, r, s) - central_charge(p) / Rational(24);
    QSeries chi = char_over_phi(lead, r * s, order);
    enforce_character_coefficients(chi, order, "virasoro_char");
    return chi;
}

QSeries minimal_model_char(int p, int r, long order) {
    check_p(p);
    if (r < 1 || r > (p - 1) / 2)
        throw UsageError("minimal_model_char: r outside [1, (p-1)/2]");
    const long pad = order + 1;
    QSeries numerator = theta(p - 2L * r, p, pad) - theta(p + 2L * r, p, pad);
    QSeries chi = (numerator * eta_inverse(pad)).truncated(Rational(order));
    enforce_character_coefficients(chi, order, "minimal_model_char");
    return chi;
}

QSeries minimal_model_alternating_sum(int p, int r, long order) {
    check_p(p);
    if (r < 1 || r > (p - 1) / 2)
        throw UsageError("minimal_model_alternating_sum: r outside [1, (p-1)/2]");
    const Rational c24 = central_charge(p) / Rational(24);
    const Rational bound(order);
    QSeries numerator = QSeries().truncated(Rational(order + 1));
    for (long m = -(order + 1); m <= order + 1; ++m) {
        const Rational h = conformal_weight(p, 4 * m + 1, r);
        const Rational lead = h - c24;
        if (lead <= bound)
            numerator =
                numerator + QSeries::monomial(lead, Rational(1)).truncated(Rational(order + 1));
        const Rational reflected = h + Rational((4 * m + 1) * r) - c24;
        if (reflected <= bound)
            numerator = numerator -
                        QSeries::monomial(reflected, Rational(1)).truncated(Rational(order + 1));
    }
    return (numerator * phi_inverse(order + 2)).truncated(Rational(order));
}

TripletFamily triplet_family_from_string(const std::string& name) {
    if (name == "X1+" || name == "x1+")
        return TripletFamily::X1Plus;
    if (name == "X1-" || name == "x1-")
        return TripletFamily::X1Minus;
    if (name == "X2+" || name == "x2+")
        return TripletFamily::X2Plus;
    if (name == "X2-" || name == "x2-")
        return TripletFamily::X2Minus;
    throw UsageError("unknown triplet family '" + name + "'");
}

const char* to_string(TripletFamily f) {
    switch (f) {
    case TripletFamily::X1Plus: return "X1+";
    case TripletFamily::X1Minus: return "X1-";
    case TripletFamily::X2Plus: return "X2+";
    case TripletFamily::X2Minus: return "X2-";
    }
    return "?";
}

QSeries triplet_char_decomp(int p, TripletFamily family, int k, long order) {
    check_p(p);
    if (k < 1 || k > p)
        throw UsageError("triplet_char_decomp: k outside [1, p]");

    long n0 = 0, row_step = 4, row_base = 0, mult_base = 0;
    switch (family) {
    case TripletFamily::X1Plus: n0 = 0; row_base = 3; mult_base = 1; break; // (2n+1) L(h_{4n+3,k})
    case TripletFamily::X2Plus: n0 = 0; row_base = 2; mult_base = 1; break; // (2n+1) L(h_{4n+2,k})
    case TripletFamily::X1Minus: n0 = 1; row_base = 1; mult_base = 0; break; // (2n) L(h_{4n+1,k})
    case TripletFamily::X2Minus: n0 = 1; row_base = 0; mult_base = 0; break; // (2n) L(h_{4n,k})
    }

    const Rational c24 = central_charge(p) / Rational(24);
    QSeries sum = QSeries().truncated(Rational(order));
    for (long n = n0;; ++n) {
        const long row = row_step * n + row_base;
        const Rational lead = conformal_weight(p, row, k) - c24;
        if (lead > Rational(order))
            break;
        const Rational mult(2 * n + mult_base);
        sum = sum + virasoro_char(p, row, k, order).scaled(mult);
    }
    enforce_character_coefficients(sum, order, "triplet_char_decomp");
    return sum;
}

SingletFockCheck singlet_fock_check(int p, long order) {
    check_p(p);
    const Rational c24 = central_charge(p) / Rational(24);
    QSeries lhs = QSeries().truncated(Rational(order));
    for (long n = 0;; ++n) {
        const Rational lead = conformal_weight(p, 4 * n + 2, p) - c24;
        if (lead > Rational(order))
            break;
        lhs = lhs + virasoro_char(p, 4 * n + 2, p, order);
    }
    const Rational x0(static_cast<long>(p) - 2, 2L * p);
    QSeries rhs = char_over_phi(fock_lowest_weight(p, x0) - c24, 0, order);
    SingletFockCheck out;
    out.p = p;
    out.order = order;
    out.pass = QSeries::equal_below(lhs, rhs, Rational(order));
    return out;
}

QSeries fock_lattice_sum_x2p(int p, long order) {
    check_p(p);
    const Rational c24 = central_charge(p) / Rational(24);
    const Rational x0(static_cast<long>(p) - 2, 2L * p);
    QSeries monomials = QSeries().truncated(Rational(order + 1));
    for (long m = 0;; ++m) {
        Rational lead = fock_lowest_weight(p, x0 + Rational(2 * m)) - c24;
        if (lead > Rational(order))
            break;
        monomials = monomials + QSeries::monomial(lead, Rational(1)).truncated(Rational(order + 1));
    }
    for (long m = -1;; --m) {
        Rational lead = fock_lowest_weight(p, x0 + Rational(2 * m)) - c24;
        if (lead > Rational(order))
            break;
        monomials = monomials + QSeries::monomial(lead, Rational(1)).truncated(Rational(order + 1));
    }
    long pad = order + 2;
    return (monomials * phi_inverse(pad)).truncated(Rational(order));
}

LatticeSumCheck x2p_lattice_check(int p, long order) {
    LatticeSumCheck out;
    out.p = p;
    out.order = order;
    out.pass = QSeries::equal_below(triplet_char_decomp(p, TripletFamily::X2Plus, p, order),
                                    fock_lattice_sum_x2p(p, order), Rational(order));
    return out;
}

std::vector<ClosureElement> closure_basis(int p, long order) {
    check_p(p);
    const Rational norm(4L * p);
    const long pad = order + 1;
    const QSeries etainv = eta_inverse(pad);
    std::vector<ClosureElement> out;

    for (long r = 1; r <= (p - 1) / 2; ++r) {
        QSeries base = ((ddtheta(p - r, p, pad, norm) - ddtheta(p + r, p, pad, norm)) * etainv)
                           .truncated(Rational(order));
        for (int i = 0; i <= 2; ++i)
            out.push_back({i, 2, r, base});
    }
    for (long r = 1; r <= 2L * p - 1; ++r) {
        QSeries base = (dtheta(r, p, pad, norm) * etainv).truncated(Rational(order));
        for (int i = 0; i <= 1; ++i)
            out.push_back({i, 1, r, base});
    }
    for (long r = 0; r <= 2L * p; ++r) {
        QSeries base = (theta(r, p, pad) * etainv).truncated(Rational(order));
        out.push_back({0, 0, r, base});
    }
    return out;
}

namespace {

std::size_t stratum_rank(const std::vector<const QSeries*>& rows, const Rational& bound) {
    if (rows.empty())
        return 0;
    long D = 1;
    for (auto* s : rows)
        D = std::lcm(D, s->denom());
    long long lo = 0;
    bool have_lo = false;
    for (auto* s : rows) {
        if (s->known_zero())
            continue;
        long long o = s->offset() * (D / s->denom());
        if (!have_lo || o < lo) {
            lo = o;
            have_lo = true;
        }
    }
    if (!have_lo)
        return 0;
    // bound * D gives the exclusive end of the index window
    Rational endr = bound * Rational(D);
    long long end = rational_ceil(endr);
    if (end <= lo)
        return 0;
    const std::size_t cols = static_cast<std::size_t>(end - lo);

    std::vector<std::vector<Rational>> pivots; // normalized rows
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (auto* s : rows) {
        std::vector<Rational> row(cols, Rational(0));
        const long f = D / s->denom();
        const auto& cs = s->raw_coeffs();
        for (std::size_t k = 0; k < cs.size(); ++k) {
            long long idx = (s->offset() + static_cast<long long>(k)) * f - lo;
            if (idx >= 0 && idx < static_cast<long long>(cols))
                row[static_cast<std::size_t>(idx)] = cs[k];
        }
        for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
            const Rational& v = row[pivot_cols[pi]];
            if (v.is_zero())
                continue;
            const Rational factor = v;
            const auto& prow = pivots[pi];
            for (std::size_t cidx = pivot_cols[pi]; cidx < cols; ++cidx)
                if (!prow[cidx].is_zero())
                    row[cidx] -= factor * prow[cidx];
        }
        std::size_t first = cols;
        for (std::size_t cidx = 0; cidx < cols; ++cidx)
            if (!row[cidx].is_zero()) {
                first = cidx;
                break;
            }
        if (first == cols)
            continue;
        const Rational lead = row[first];
        for (std::size_t cidx = first; cidx < cols; ++cidx)
            if (!row[cidx].is_zero())
                row[cidx] /= lead;
        pivots.push_back(std::move(row));
        pivot_cols.push_back(first);
        ++rank;
    }
    return rank;
}

} // namespace

ClosureRank closure_rank(const std::vector<ClosureElement>& elements) {
    ClosureRank out;
    out.cardinality = elements.size();
    std::optional<Rational> bound;
    for (const auto& e : elements)
        if (e.series.valid())
            bound = bound ? std::min(*bound, *e.series.valid()) : *e.series.valid();
    if (!bound)
        throw UsageError("closure_rank: elements must carry a finite validity bound");

    for (int tau = 0; tau <= 2; ++tau) {
        std::vector<const QSeries*> rows;
        for (const auto& e : elements)
            if (e.tau_degree == tau)
                rows.push_back(&e.series);
        if (rows.empty())
            continue;
        std::size_t r = stratum_rank(rows, *bound);
        out.strata.emplace_back(tau, r);
        out.rank += r;
    }
    return out;
}

namespace {

// chi^+ and chi^- of the closed theta formula, built exactly as printed;
// `corrected` swaps the duplicated theta' subscript ps+2r in chi^+ for
// ps-2r.
QSeries theta_formula_plus(int p, int r, int s, const Rational& norm, bool corrected,
                           long order) {
    const long pad = order + 1;
    const long a = static_cast<long>(p) * s + 2L * r;
    const long b = static_cast<long>(p) * s - 2L * r;
    const long dup = corrected ? b : a;
    QSeries num = ddtheta(p - 2L * r, p, pad, norm) - ddtheta(p + 2L * r, p, pad, norm);
    num = num - dtheta(a, p, pad, norm).scaled(Rational(a)) +
          dtheta(dup, p, pad, norm).scaled(Rational(b));
    num = num + theta(a, p, pad).scaled(Rational(a) * Rational(a) / Rational(4)) -
          theta(b, p, pad).scaled(Rational(b) * Rational(b) / Rational(4));
    return (num * eta_inverse(pad)).scaled(Rational(1, 4L * p * p)).truncated(Rational(order));
}

QSeries theta_formula_minus(int p, int r, int s, const Rational& norm, long order) {
    const long pad = order + 1;
    const long a = static_cast<long>(p) * s + 2L * r;
    const long b = static_cast<long>(p) * s - 2L * r;
    const long u = 2L * p - a; // 2p - ps - 2r
    const long v = 2L * p + b; // 2p + ps - 2r
    QSeries num = ddtheta(u, p, pad, norm) - ddtheta(v, p, pad, norm);
    num = num + dtheta(u, p, pad, norm).scaled(Rational(a)) +
          dtheta(v, p, pad, norm).scaled(Rational(b));
    const Rational fourpsq(4L * p * p);
    num = num + theta(u, p, pad).scaled((Rational(a) * Rational(a) - fourpsq) / Rational(4)) -
          theta(v, p, pad).scaled((Rational(b) * Rational(b) - fourpsq) / Rational(4));
    return (num * eta_inverse(pad)).scaled(Rational(1, 4L * p * p)).truncated(Rational(order));
}

} // namespace

ThetaCalibration calibrate_theta_formula(int p, long order,
                                         std::vector<Rational> normalizations) {
    check_p(p);
    if (normalizations.empty())
        normalizations = {Rational(1), Rational(2L * p), Rational(4L * p)};

    ThetaCalibration out;
    out.p = p;
    out.order = order;
    const Rational bound(order);

    for (int s = 1; s <= 2; ++s) {
        for (int r = 1; r <= p; ++r) {
            TripletFamily fplus = (s == 1) ? TripletFamily::X1Plus : TripletFamily::X2Plus;
            TripletFamily fminus = (s == 1) ? TripletFamily::X1Minus : TripletFamily::X2Minus;
            const QSeries truth_plus = triplet_char_decomp(p, fplus, r, order);
            const QSeries truth_minus = triplet_char_decomp(p, fminus, r, order);
            for (const auto& norm : normalizations) {
                for (bool corrected : {false, true}) {
                    QSeries formula = theta_formula_plus(p, r, s, norm, corrected, order);
                    out.cases.push_back({s, r, '+', norm, corrected,
                                         QSeries::equal_below(formula, truth_plus, bound)});
                }
                QSeries formula = theta_formula_minus(p, r, s, norm, order);
                out.cases.push_back({s, r, '-', norm, false,
                                     QSeries::equal_below(formula, truth_minus, bound)});
            }
        }
    }
    return out;
}

} // namespace wlab
