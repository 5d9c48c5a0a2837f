#pragma once

#include "nsg/semigroup.hpp"

namespace nsg {

// beta_i = #{w in Ap(S) | ord(w) = i}, indexed 0..g where g is the largest
// order attained on the Apery set.  beta_0 = 1 and the entries sum to e.
std::vector<Int> beta_vector(const NumericalSemigroup& s);

// ord(C) = min{ord(f+1), ..., ord(f+a_1)} for the conductor C.
Int conductor_order(const NumericalSemigroup& s);

} // namespace nsg
