#include "nsg/order.hpp"

#include <algorithm>

namespace nsg {

std::vector<Int> beta_vector(const NumericalSemigroup& s) {
    s.require_proper();
    const AperyTable& ap = s.apery();
    Int g = 0;
    std::vector<Int> orders;
    orders.reserve(ap.w.size());
    for (Int w : ap.w) {
        const Int o = s.ord(w);
        orders.push_back(o);
        g = std::max(g, o);
    }
    std::vector<Int> beta(static_cast<std::size_t>(g) + 1, 0);
    for (Int o : orders) ++beta[static_cast<std::size_t>(o)];
    return beta;
}

Int conductor_order(const NumericalSemigroup& s) {
    s.require_proper();
    const Int f = s.frobenius();
    Int best = -1;
    for (Int alpha = 1; alpha <= s.multiplicity(); ++alpha) {
        const Int o = s.ord(f + alpha);
        if (best < 0 || o < best) best = o;
    }
    return best;
}

} // namespace nsg
