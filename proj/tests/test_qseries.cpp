#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wlab/qseries.hpp"

using namespace wlab;

namespace {

// independent pentagonal-number expansion of prod (1-q^n)
QSeries pentagonal_phi(long order) {
    QSeries acc = QSeries().truncated(Rational(order));
    for (long k = -order; k <= order; ++k) {
        Rational e(k * (3 * k - 1), 2);
        if (e >= Rational(order))
            continue;
        acc = acc + QSeries::monomial(e, Rational(k % 2 == 0 ? 1 : -1)).truncated(Rational(order));
    }
    return acc;
}

// independent partition counter
std::vector<long long> partition_numbers(int n) {
    std::vector<long long> dp(static_cast<std::size_t>(n) + 1, 0);
    dp[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int v = part; v <= n; ++v)
            dp[static_cast<std::size_t>(v)] += dp[static_cast<std::size_t>(v - part)];
    return dp;
}

QSeries random_series(std::mt19937& rng) {
    std::uniform_int_distribution<int> denom_pick(0, 3), offset(-6, 6), len(0, 8), num(-5, 5);
    const long denoms[] = {1, 2, 3, 8};
    long D = denoms[denom_pick(rng)];
    std::vector<Rational> coeffs(static_cast<std::size_t>(len(rng)));
    for (auto& c : coeffs)
        c = Rational(num(rng));
    return QSeries::from_lattice(D, offset(rng), std::move(coeffs), Rational(10));
}

} // namespace

TEST_CASE("lattice arithmetic basics") {
    QSeries a = QSeries::monomial(Rational(1, 2), Rational(3));
    QSeries b = QSeries::monomial(Rational(1, 3), Rational(2));
    QSeries prod = a * b;
    CHECK(prod.coefficient(Rational(5, 6)) == Rational(6));
    CHECK(prod.coefficient(Rational(1, 2)) == Rational(0));

    QSeries sum = a + b;
    CHECK(sum.coefficient(Rational(1, 2)) == Rational(3));
    CHECK(sum.coefficient(Rational(1, 3)) == Rational(2));
    CHECK((a - a).known_zero());
}

TEST_CASE("validity bounds propagate through products") {
    QSeries a = QSeries::from_lattice(1, 2, {Rational(1)}, Rational(10)); // q^2, exact < 10
    QSeries b = QSeries::from_lattice(1, 3, {Rational(1)}, Rational(7));  // q^3, exact < 7
    QSeries prod = a * b;
    REQUIRE(prod.valid().has_value());
    // min(10 + 3, 7 + 2) = 9
    CHECK(*prod.valid() == Rational(9));
    CHECK(prod.coefficient(Rational(5)) == Rational(1));
    CHECK_THROWS_AS(prod.coefficient(Rational(9)), UsageError);
}

TEST_CASE("series addition is associative and eta inverts phi") {
    std::mt19937 rng(991);
    for (int iter = 0; iter < 40; ++iter) {
        QSeries a = random_series(rng), b = random_series(rng), c = random_series(rng);
        QSeries lhs = (a + b) + c;
        QSeries rhs = a + (b + c);
        CHECK(QSeries::equal_below(lhs, rhs, Rational(10)));
    }

    const long order = 30;
    QSeries q124 = QSeries::monomial(Rational(1, 24), Rational(1));
    CHECK(QSeries::equal_below(eta(order) * phi_inverse(order), q124, Rational(order)));

    std::mt19937 rng2(17);
    for (int iter = 0; iter < 10; ++iter) {
        QSeries a = random_series(rng2);
        QSeries lhs = a * phi_inverse(order) * eta(order);
        QSeries rhs = a * q124;
        CHECK(QSeries::equal_below(lhs, rhs, Rational(9)));
    }
}

TEST_CASE("euler product against the pentagonal expansion") {
    const long order = 60;
    CHECK(QSeries::equal_below(euler_phi(order), pentagonal_phi(order), Rational(order)));

    QSeries e = eta(order);
    CHECK(e.coefficient(Rational(1, 24)) == Rational(1));
    CHECK(e.coefficient(Rational(1, 24) + Rational(1)) == Rational(-1));
    CHECK(e.coefficient(Rational(1, 24) + Rational(2)) == Rational(-1));
    CHECK(e.coefficient(Rational(1, 24) + Rational(5)) == Rational(1));
    CHECK(e.coefficient(Rational(1, 24) + Rational(7)) == Rational(1));
    CHECK(e.coefficient(Rational(1, 24) + Rational(3)) == Rational(0));
}

TEST_CASE("phi inverse generates partition numbers") {
    const long order = 40;
    QSeries pinv = phi_inverse(order);
    auto p = partition_numbers(order - 1);
    for (long n = 0; n < order; ++n)
        CHECK(pinv.coefficient(Rational(n)) == Rational(p[static_cast<std::size_t>(n)]));
}

TEST_CASE("theta constants") {
    for (int p : {3, 5}) {
        const long order = 20 * p;
        QSeries t0 = theta(0, p, order);
        CHECK(t0.coefficient(Rational(0)) == Rational(1));
        CHECK(t0.coefficient(Rational(2L * p)) == Rational(2));
        CHECK(t0.coefficient(Rational(8L * p)) == Rational(2));
        CHECK(t0.coefficient(Rational(p)) == Rational(0));

        QSeries t2p = theta(2L * p, p, order);
        CHECK(t2p.coefficient(Rational(p, 2)) == Rational(2));
        CHECK(t2p.coefficient(Rational(9L * p, 2)) == Rational(2));

        for (long r : {1L, 2L, 5L}) {
            CHECK(QSeries::equal_below(theta(r + 4L * p, p, order), theta(r, p, order),
                                       Rational(order)));
            CHECK(QSeries::equal_below(theta(-r, p, order), theta(r, p, order),
                                       Rational(order)));
        }
    }
}

TEST_CASE("theta derivative symmetries") {
    const int p = 3;
    const long order = 40;
    const Rational norm(4L * p);
    CHECK(dtheta(0, p, order, norm).known_zero());
    CHECK(dtheta(2L * p, p, order, norm).known_zero());
    for (long r : {1L, 2L, 3L, 7L}) {
        CHECK(QSeries::equal_below(dtheta(-r, p, order, norm), -dtheta(r, p, order, norm),
                                   Rational(order)));
        CHECK(QSeries::equal_below(ddtheta(-r, p, order, norm), ddtheta(r, p, order, norm),
                                   Rational(order)));
    }
    // insertion normalization scales linearly / quadratically
    CHECK(QSeries::equal_below(dtheta(1, p, order, Rational(1)).scaled(Rational(4L * p)),
                               dtheta(1, p, order, norm), Rational(order)));
    CHECK(QSeries::equal_below(
        ddtheta(1, p, order, Rational(1)).scaled(Rational(16L * p * p)),
        ddtheta(1, p, order, norm), Rational(order)));
}

TEST_CASE("off-lattice coefficients are zero and bounds are enforced") {
    QSeries t0 = theta(0, 3, 10);
    CHECK(t0.coefficient(Rational(1, 7)) == Rational(0));
    CHECK_THROWS_AS(t0.coefficient(Rational(10)), UsageError);
    CHECK_THROWS_AS(QSeries::equal_below(t0, t0, Rational(11)), UsageError);
    CHECK(t0.nonneg_integer_below(Rational(10)));
}
