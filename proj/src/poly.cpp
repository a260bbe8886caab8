#include "wlab/poly.hpp"

#include <sstream>

namespace wlab {

Poly::Poly(const Rational& c) {
    if (!c.is_zero())
        coeffs_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Poly Poly::variable() {
    return Poly(std::vector<Rational>{Rational(0), Rational(1)});
}

Poly Poly::linear(const Rational& a, const Rational& b) {
    return Poly(std::vector<Rational>{b, a});
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Poly::leading() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Poly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero())
        return Poly();
    Poly r(*this);
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

Poly Poly::divided_by_linear_factor(const Rational& root) const {
    if (is_zero())
        throw UsageError("Poly: dividing the zero polynomial");
    // synthetic division by (x - root)
    std::vector<Rational> q(coeffs_.size() - 1);
    Rational carry;
    for (std::size_t k = coeffs_.size(); k-- > 1;) {
        carry = coeffs_[k] + carry * root;
        q[k - 1] = carry;
    }
    Rational rem = coeffs_[0] + carry * root;
    if (!rem.is_zero())
        throw UsageError("Poly: " + root.str() + " is not a root");
    return Poly(std::move(q));
}

Poly Poly::mod(const Poly& divisor) const {
    if (divisor.is_zero())
        throw UsageError("Poly: modulus is zero");
    Poly rem(*this);
    const int d = divisor.degree();
    const Rational lead = divisor.leading();
    while (rem.degree() >= d) {
        Rational factor = rem.leading() / lead;
        std::size_t shift = static_cast<std::size_t>(rem.degree() - d);
        for (int k = 0; k <= d; ++k)
            rem.coeffs_[shift + k] -= factor * divisor.coeffs_[k];
        rem.trim();
    }
    return rem;
}

std::string Poly::str(const char* var) const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero())
            continue;
        if (!first)
            os << (coeffs_[k].sign() > 0 ? " + " : " - ");
        else if (coeffs_[k].sign() < 0)
            os << "-";
        first = false;
        Rational a = abs(coeffs_[k]);
        if (k == 0 || a != Rational(1))
            os << a.str();
        if (k > 0) {
            if (a != Rational(1))
                os << "*";
            os << var;
            if (k > 1)
                os << "^" << k;
        }
    }
    return os.str();
}

Poly binom_poly(const Rational& shift, unsigned choose) {
    Poly r{Rational(1)};
    for (unsigned j = 0; j < choose; ++j)
        r = r * Poly::linear(Rational(1), shift - Rational(static_cast<long>(j)));
    if (choose > 0)
        r = r.scaled(Rational(BigInt(1), factorial(choose)));
    return r;
}

Proportionality proportional_ratio(const Poly& a, const Poly& b) {
    if (a.is_zero())
        return {Rational(0), true};
    if (b.is_zero() || a.degree() != b.degree())
        return {std::nullopt, false};
    Rational lambda = a.leading() / b.leading();
    if (a == b.scaled(lambda))
        return {lambda, false};
    return {std::nullopt, false};
}

} // namespace wlab
