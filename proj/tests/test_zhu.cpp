#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "wlab/zhu.hpp"

using namespace wlab;

namespace {

// expected multiplicity of every root value, read off the second
// displayed factorization with exponents summed per value
std::map<Rational, int> expected_multiplicities(int p) {
    std::map<Rational, int> out;
    auto add = [&](int s, long from, long to, int mult) {
        for (long i = from; i <= to; ++i)
            out[conformal_weight(p, s, i)] += mult;
    };
    add(1, 1, (p - 1) / 2, 3);
    add(1, p, 2L * p - 1, 2);
    add(2, 1, p - 1, 2);
    add(2, p, p, 1);
    add(1, 2L * p, 3L * p - 1, 1);
    add(2, 2L * p, 3L * p - 1, 1);
    return out;
}

} // namespace

TEST_CASE("lowest weight sets") {
    WeightSet ws3 = weight_set(3);
    CHECK(ws3.entries.size() == 13);
    CHECK(ws3.values.size() == 13); // 4p + (p-1)/2, all distinct
    bool has_zero = false;
    for (const auto& v : ws3.values)
        if (v == Rational(0))
            has_zero = true;
    CHECK(has_zero);

    CHECK(weight_set(5).values.size() == 22);
    CHECK(weight_set(7).values.size() == 31);
    CHECK_THROWS_AS(weight_set(4), UsageError);
}

TEST_CASE("the two displayed factorizations of f_{2,p} agree") {
    for (int p : {3, 5, 7}) {
        Poly f1 = f2p(p, 1);
        Poly f2 = f2p(p, 2);
        CHECK(f1.degree() == (15 * p - 5) / 2);
        CHECK(f1 == f2);
        CHECK(f1.eval(conformal_weight(p, 1, 1)).is_zero());
        CHECK(f1.leading() == Rational(1));
    }
    CHECK_THROWS_AS(f2p(3, 0), UsageError);
}

TEST_CASE("root multiplicities match the factored form") {
    for (int p : {3, 5}) {
        Poly f = f2p(p, 1);
        WeightSet ws = weight_set(p);
        auto mults = root_multiplicities(f, ws.values);
        auto expected = expected_multiplicities(p);
        CHECK(mults == expected);

        long total = 0;
        int threes = 0, twos = 0, ones = 0;
        for (const auto& [v, m] : mults) {
            total += m;
            if (m == 3) ++threes;
            if (m == 2) ++twos;
            if (m == 1) ++ones;
        }
        CHECK(total == (15 * p - 5) / 2);
        CHECK(threes == (p - 1) / 2);
        CHECK(twos == 2 * p - 1);
        CHECK(ones == 2 * p + 1);
    }

    // multiplicity of a non-root is zero
    auto m = root_multiplicities(f2p(3, 1), {Rational(1, 7)});
    CHECK(m.at(Rational(1, 7)) == 0);
}

TEST_CASE("every classified lowest weight annihilates f_{2,p}") {
    for (int p : {3, 5, 7}) {
        Poly f = f2p(p, 1);
        for (const auto& v : weight_set(p).values)
            CHECK(f.eval(v).is_zero());
    }
}

TEST_CASE("kernel polynomial p(x)") {
    for (int p : {3, 5}) {
        Poly k = ppoly(p);
        CHECK(k.degree() == 2 * p);
        CHECK(k.leading() == Rational(1));
        Poly f = f2p(p, 1);
        // every root of p(x) is a root of f_{2,p}
        for (long i = 2L * p; i <= 3L * p - 1; ++i) {
            CHECK(f.eval(conformal_weight(p, 1, i)).is_zero());
            CHECK(k.eval(conformal_weight(p, 1, i)).is_zero());
            CHECK(k.eval(conformal_weight(p, 2, i)).is_zero());
        }
    }
}

TEST_CASE("singlet relation shape") {
    for (int p : {3, 5}) {
        Poly s = singlet_relation_shape(p);
        CHECK(s.degree() == 3 * (2 * p - 1));
        CHECK(s.leading() == Rational(1));
        auto mults = root_multiplicities(s, weight_set(p).values);
        for (long i = 1; i <= 2L * p - 1; ++i)
            CHECK(mults.at(conformal_weight(p, 1, i)) >= 2);
    }
    CHECK(singlet_relation_shape(3).degree() == 15);
}

TEST_CASE("f_{2,p} degree equals the closure-basis cardinality") {
    for (int p : {3, 5})
        CHECK(static_cast<std::size_t>(f2p(p, 1).degree()) == closure_basis(p, 10).size());
}

TEST_CASE("center of the Zhu algebra") {
    for (int p : {3, 5}) {
        CHECK(center_reduce(f2p(p, 1), p).representative.is_zero());
        Poly x5 = binom_poly(Rational(0), 1); // t as x
        CHECK(center_reduce(x5, p).representative == x5);

        CHECK(center_nilpotency(conformal_weight(p, 1, 1), p) == 3);
        CHECK(center_nilpotency(conformal_weight(p, 1, p), p) == 2);
        CHECK(center_nilpotency(conformal_weight(p, 2, p), p) == 1);
        CHECK(center_nilpotency(Rational(1, 7), p) == 0);

        auto blocks = jordan_blocks(p);
        int threes = 0, twos = 0;
        for (const auto& b : blocks) {
            if (b.size == 3) ++threes;
            if (b.size == 2) ++twos;
            CHECK(center_nilpotency(b.h, p) == b.size);
        }
        CHECK(threes == (p - 1) / 2);
        CHECK(twos == p);
    }
}
