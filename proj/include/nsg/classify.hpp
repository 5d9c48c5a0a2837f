#pragma once

#include "nsg/goto_numbers.hpp"
#include "nsg/order.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

struct Purity {
    bool pure = false;
    bool m_pure = false;
};

struct DeltaGamma {
    Int delta = 0;
    Int gamma = 0;
    std::vector<Int> delta_i; // indexed by Apery position
    std::vector<Int> gamma_i;
};

struct InvariantReport {
    Int delta = 0;
    Int gamma = 0;
    Int ord_conductor = 0;
    Int tau = 0;
    Int g_a1 = 0;
    Int reduction_number = 0;
    std::vector<Int> delta_i;
    std::vector<Int> gamma_i;
    std::vector<Int> beta;
    bool symmetric = false;
    bool pure = false;
    bool m_pure = false;
    bool m_additive = false;
    bool m_symmetric = false;
    bool gr_bar_gorenstein = false; // gr of R/x^{a_1}R is Gorenstein
    bool gr_gorenstein = false;     // gr of R is Gorenstein
};

// f odd and exactly half of {0,..,f} in S; cross-checked against #maxAp = 1.
bool is_symmetric(const NumericalSemigroup& s);

// pure: all of maxAp(S) share one order; m_pure: same for maxAp_M(S).
// Cross-checks m_pure == (pure and maxAp == maxAp_M).
Purity purity(const NumericalSemigroup& s);

// ord(u + a_1) = ord(u) + 1 for all u in S; the quantifier is finite because
// any failure has a maximal representation of u + a_1 that avoids a_1, which
// caps ord(u + a_1) at 2 a_1 - 2 and hence u at (2e-2) a_nu.
bool is_m_additive(const NumericalSemigroup& s);

// Independent route for a_2 = a_1 + 1: M-additive iff
// 0 <= w_i - a_1 ord(w_i) <= e - 1 for every Apery element.
bool m_additive_by_apery_window(const NumericalSemigroup& s);

// Least k such that m^{k+1} = x^{a_1} m^k, computed from the order function:
// the least k >= g(a_1) such that no v in S has ord(v) >= k+1 with
// v - a_1 in S and ord(v - a_1) <= k - 1.
Int reduction_number(const NumericalSemigroup& s);

// delta_i = max{ord(w_i) + ord(w)}, gamma_i = max{ord(w_i) + floor(w/a_1)}
// over w in S with w_i + w in Ap(S); delta/gamma are the minima.
DeltaGamma delta_gamma(const NumericalSemigroup& s);

// Semigroup form of the colon identity (x^{a_1}) : m^n = (x^{a_1}) + m^{g-n+1}
// for 1 <= n <= g; holds iff S is M-pure.
bool colon_identity_holds(const NumericalSemigroup& s);

// Full report, cached per semigroup (the reference stays valid while any copy
// of s is alive).  Construction asserts the invariant chain
// delta <= gamma <= ord(C) <= tau <= g(a_1) <= r, the purity/delta
// equivalences and M-additive => g(a_1) = r; violations throw AssertionFailed.
const InvariantReport& invariant_report(const NumericalSemigroup& s);

} // namespace nsg
