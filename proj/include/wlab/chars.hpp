#pragma once

#include <string>
#include <vector>

#include "wlab/qseries.hpp"

namespace wlab {

/// c_{2,p} = 1 - 6(p-2)^2/(2p); p odd >= 3.
Rational central_charge(int p);

/// Kac-table weight h_{r,s} = ((pr-2s)^2 - (p-2)^2) / (8p).
Rational conformal_weight(int p, long r, long s);

/// Lowest conformal weight of the Fock module over e^{x*alpha}:
/// (p x^2 - (p-2) x) / 2.
Rational fock_lowest_weight(int p, const Rational& x);

/// Character of the irreducible L(c_{2,p}, h_{r,s}) for r >= 2, 1 <= s <= p:
/// q^{h - c/24} (1 - q^{rs}) / phi(q). The single-singular-vector formula;
/// its validity on this range is enforced by the decomposition checks.
QSeries virasoro_char(int p, long r, long s, long order);

/// chi_{r,1} = (theta_{p-2r} - theta_{p+2r}) / eta, 1 <= r <= (p-1)/2.
QSeries minimal_model_char(int p, int r, long order);

/// The same character as an alternating sum of Verma characters over the
/// weight lattice (rows 4m+1 and their reflections); independent of the
/// theta machinery and used to cross-check the theta-difference formula.
QSeries minimal_model_alternating_sum(int p, int r, long order);

enum class TripletFamily { X1Plus, X1Minus, X2Plus, X2Minus };
TripletFamily triplet_family_from_string(const std::string& name);
const char* to_string(TripletFamily f);

/// Triplet module character through its Virasoro decomposition:
/// X1+: sum (2n+1) L(h_{4n+3,k}), X2+: sum (2n+1) L(h_{4n+2,k}),
/// X1-: sum (2n) L(h_{4n+1,k}), X2-: sum (2n) L(h_{4n,k}).
QSeries triplet_char_decomp(int p, TripletFamily family, int k, long order);

struct SingletFockCheck {
    int p = 0;
    long order = 0;
    bool pass = false;
};

/// sum_n chi(L(c_{2,p}, h_{4n+2,p})) telescopes to the single Fock
/// character q^{fock(x0) - c/24} / phi with x0 = (p-2)/(2p).
SingletFockCheck singlet_fock_check(int p, long order);

/// Full lattice Fock sum sum_{m in Z} q^{fock(x0 + 2m) - c/24} / phi;
/// equals the X2+ character at k = p.
QSeries fock_lattice_sum_x2p(int p, long order);

struct LatticeSumCheck {
    int p = 0;
    long order = 0;
    bool pass = false;
};
LatticeSumCheck x2p_lattice_check(int p, long order);

// ---- SL(2,Z) closure basis ----------------------------------------------

struct ClosureElement {
    int tau_degree = 0; // 0..2, matching the family
    int family = 0;     // 0, 1, 2 for B0, B1, B2
    long r = 0;
    QSeries series;
};

/// The (15p-5)/2 elements: B2 = tau^i (theta''_{p-r} - theta''_{p+r})/eta
/// (1 <= r <= (p-1)/2, i <= 2), B1 = tau^i theta'_r/eta (1 <= r <= 2p-1,
/// i <= 1), B0 = theta_r/eta (0 <= r <= 2p).
std::vector<ClosureElement> closure_basis(int p, long order);

struct ClosureRank {
    std::size_t cardinality = 0;
    std::size_t rank = 0;
    std::vector<std::pair<int, std::size_t>> strata; // (tau_degree, rank)
};

/// Rank per tau-degree stratum by exact Gaussian elimination on the
/// q-coefficient vectors, summed over strata.
ClosureRank closure_rank(const std::vector<ClosureElement>& elements);

// ---- theta-formula calibration -------------------------------------------

struct CalibrationCase {
    int s = 0;
    int r = 0;
    char sign = '+';
    Rational normalization;
    bool corrected_reading = false; // second theta' subscript read as ps-2r
    bool match = false;
};

struct ThetaCalibration {
    int p = 0;
    long order = 0;
    std::vector<CalibrationCase> cases;
};

/// Compares the closed theta-formula characters chi^{+-}_{r,s} against the
/// decomposition-path characters (the ground truth) for every candidate
/// derivative normalization and for both readings of the duplicated
/// theta' subscript in the chi^+ formula. Emits agreement data only;
/// nothing is asserted.
ThetaCalibration calibrate_theta_formula(int p, long order,
                                         std::vector<Rational> normalizations = {});

} // namespace wlab
