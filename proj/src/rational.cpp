#include "wlab/rational.hpp"

namespace wlab {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw UsageError("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0)
        throw UsageError("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(BigInt(std::string(s)));
        BigInt num(std::string(s.substr(0, slash)));
        BigInt den(std::string(s.substr(slash + 1)));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw UsageError("Rational: cannot parse '" + std::string(s) + "'");
    }
}

std::string Rational::str() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_str();
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw UsageError("Rational: " + str() + " is not a machine integer");
    return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw UsageError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt double_factorial(unsigned long n) {
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(const BigInt& n, unsigned long k) {
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

} // namespace wlab
