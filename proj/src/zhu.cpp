#include "wlab/zhu.hpp"

#include <algorithm>

namespace wlab {

namespace {

void check_p(int p) {
    if (p < 3 || p % 2 == 0)
        throw UsageError("zhu: p must be odd and >= 3");
}

Poly linear_root(const Rational& h) {
    return Poly::linear(Rational(1), -h); // x - h
}

Poly product_over(int p, int s, long from, long to, int power = 1) {
    Poly r(Rational(1));
    for (long i = from; i <= to; ++i) {
        Poly f = linear_root(conformal_weight(p, s, i));
        for (int k = 0; k < power; ++k)
            r = r * f;
    }
    return r;
}

} // namespace

WeightSet weight_set(int p) {
    check_p(p);
    WeightSet ws;
    ws.p = p;
    auto push = [&](int s, long index) {
        ws.entries.push_back({{s, index}, conformal_weight(p, s, index)});
    };
    for (long i = 1; i <= (p - 1) / 2; ++i)
        push(1, i);
    for (long j = p; j <= 3L * p - 1; ++j)
        push(1, j);
    for (long k = 1; k <= p; ++k)
        push(2, k);
    for (long l = 2L * p; l <= 3L * p - 1; ++l)
        push(2, l);

    for (const auto& e : ws.entries)
        ws.values.push_back(e.value);
    std::sort(ws.values.begin(), ws.values.end());
    ws.values.erase(std::unique(ws.values.begin(), ws.values.end()), ws.values.end());
    return ws;
}

Poly f2p(int p, int form) {
    check_p(p);
    if (form == 1) {
        Poly r = product_over(p, 1, 1, 3L * p - 1);
        for (long i = 1; i <= (3L * p - 1) / 2; ++i)
            r = r * linear_root(conformal_weight(p, 1, 2L * p - i));
        return r * product_over(p, 2, 1, 3L * p - 1);
    }
    if (form == 2) {
        Poly r = product_over(p, 1, 1, (p - 1) / 2, 3);
        r = r * product_over(p, 1, p, 2L * p - 1, 2);
        r = r * product_over(p, 2, 1, p - 1, 2);
        r = r * linear_root(conformal_weight(p, 2, p));
        r = r * product_over(p, 1, 2L * p, 3L * p - 1);
        return r * product_over(p, 2, 2L * p, 3L * p - 1);
    }
    throw UsageError("f2p: form must be 1 or 2");
}

std::map<Rational, int> root_multiplicities(const Poly& f,
                                            const std::vector<Rational>& candidates) {
    if (f.is_zero())
        throw UsageError("root_multiplicities: zero polynomial");
    std::map<Rational, int> out;
    for (const auto& v : candidates) {
        if (out.count(v))
            continue;
        Poly g = f;
        int mult = 0;
        while (!g.is_zero() && g.degree() > 0 && g.eval(v).is_zero()) {
            g = g.divided_by_linear_factor(v);
            ++mult;
        }
        out[v] = mult;
    }
    return out;
}

Poly ppoly(int p) {
    check_p(p);
    return product_over(p, 1, 2L * p, 3L * p - 1) * product_over(p, 2, 2L * p, 3L * p - 1);
}

Poly singlet_relation_shape(int p) {
    check_p(p);
    return product_over(p, 1, 1, 2L * p - 1, 2) * product_over(p, 2, 1, 2L * p - 1);
}

CenterElement center_reduce(const Poly& f, int p) {
    check_p(p);
    return {f.mod(f2p(p, 2)), p};
}

int center_nilpotency(const Rational& h, int p) {
    check_p(p);
    Poly f = f2p(p, 2);
    int mult = 0;
    while (!f.is_zero() && f.degree() > 0 && f.eval(h).is_zero()) {
        f = f.divided_by_linear_factor(h);
        ++mult;
    }
    return mult;
}

std::vector<JordanBlock> jordan_blocks(int p) {
    check_p(p);
    std::vector<JordanBlock> out;
    for (long i = 1; i <= (p - 1) / 2; ++i)
        out.push_back({{1, i}, conformal_weight(p, 1, i), 3});
    for (long i = p; i <= 2L * p - 1; ++i)
        out.push_back({{1, i}, conformal_weight(p, 1, i), 2});
    return out;
}

} // namespace wlab
