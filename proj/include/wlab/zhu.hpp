#pragma once

#include <map>
#include <vector>

#include "wlab/chars.hpp"
#include "wlab/poly.hpp"

namespace wlab {

struct WeightLabel {
    int s = 1;      // 1 or 2, the h_{s,*} family
    long index = 0; // the second Kac index
};

struct WeightEntry {
    WeightLabel label;
    Rational value;
};

/// The lowest-weight set S_{2,p}: h_{1,i} for 1<=i<=(p-1)/2,
/// h_{1,j} for p<=j<=3p-1, h_{2,k} for 1<=k<=p, h_{2,l} for 2p<=l<=3p-1.
struct WeightSet {
    int p = 0;
    std::vector<WeightEntry> entries;
    std::vector<Rational> values; // deduplicated, ascending
};

WeightSet weight_set(int p);

/// The Zhu relation polynomial f_{2,p}(x), degree (15p-5)/2, expanded
/// from either displayed factorization (form 1 or 2).
Poly f2p(int p, int form);

/// Multiplicity of each candidate as a root of f, by repeated exact
/// division. Candidates not dividing f map to 0.
std::map<Rational, int> root_multiplicities(const Poly& f,
                                            const std::vector<Rational>& candidates);

/// p(x) = prod_{i=2p}^{3p-1} (x - h_{1,i}) (x - h_{2,i}), degree 2p.
Poly ppoly(int p);

/// The scalar-independent factor of P(x,y) - y^2:
/// prod_{i=1}^{2p-1} (x - h_{1,i})^2 prod_{i=1}^{2p-1} (x - h_{2,i}),
/// degree 3(2p-1).
Poly singlet_relation_shape(int p);

struct CenterElement {
    Poly representative; // reduced mod f_{2,p}
    int p = 0;
};

CenterElement center_reduce(const Poly& f, int p);

/// Nilpotency of the class of (x - h) in C[x]/<f_{2,p}>: the multiplicity
/// of h as a root of f_{2,p} (0 when h is not a root).
int center_nilpotency(const Rational& h, int p);

struct JordanBlock {
    WeightLabel label;
    Rational h;
    int size = 1;
};

/// L(0) Jordan data read off the center: size-3 blocks at h_{1,i} for
/// 1<=i<=(p-1)/2 and size-2 blocks at h_{1,i} for p<=i<=2p-1.
std::vector<JordanBlock> jordan_blocks(int p);

} // namespace wlab
