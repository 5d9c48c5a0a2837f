#pragma once

#include <optional>

#include "nsg/semigroup.hpp"

namespace nsg {

// sigma(alpha) = max{ord(w) | w in Ap(S;alpha)} for alpha in 1..e, computed
// by both defining formulas and cross-checked; tau = min sigma; rho is the
// largest Goto number of S, attained on a minimal generator.
struct GotoVector {
    std::vector<Int> sigma; // index alpha-1
    Int tau = 0;
    Int rho = 0;

    Int sigma_at(Int alpha) const { return sigma[static_cast<std::size_t>(alpha - 1)]; }
};

// Bracket from the Frobenius number: lower <= g(u) <= upper, plus the
// specialized bounds when u is the smallest or largest minimal generator.
struct GotoBounds {
    Int lower = 0;
    Int upper = 0;
    std::optional<Int> upper_at_a1;  // g(a_1) <= floor((f+a_1)/a_2)
    std::optional<Int> lower_at_anu; // g(a_nu) >= ceil((f+a_nu-pred)/a_{nu-1})
};

// A(u) = {alpha in 1..e | u - alpha in S}.  Computed by direct scan and
// cross-checked against the Apery-table form.
std::vector<Int> a_set(const NumericalSemigroup& s, Int u);

// Cached per semigroup; the reference stays valid while any copy of s is alive.
const GotoVector& goto_vector(const NumericalSemigroup& s);

// g(u) = min{sigma(alpha) | alpha in A(u)} for nonzero u in S.
Int goto_number(const NumericalSemigroup& s, Int u);

// Brute force from the definition: the largest q such that no member b < u
// satisfies b + s in u + S for every s in S with ord(s) >= q.  Independent of
// the Goto vector; used for differential testing.
Int goto_number_oracle(const NumericalSemigroup& s, Int u);

GotoBounds goto_bounds(const NumericalSemigroup& s, Int u);

} // namespace nsg
