#include "nsg/goto_numbers.hpp"

#include <algorithm>
#include <sstream>

namespace nsg {

namespace {

Int ceil_div(Int a, Int b) { return (a + b - 1) / b; }

void check_member(const NumericalSemigroup& s, Int u) {
    if (u < 1 || !s.contains(u)) {
        std::ostringstream os;
        os << u << " is not a nonzero element of <" << format_generators(s.generators()) << ">";
        throw NotAMember(os.str());
    }
}

Int min_sigma_over(const std::vector<Int>& sigma, const std::vector<Int>& alphas) {
    Int best = -1;
    for (Int a : alphas) {
        const Int v = sigma[static_cast<std::size_t>(a - 1)];
        if (best < 0 || v < best) best = v;
    }
    return best;
}

std::vector<Int> a_set_direct(const NumericalSemigroup& s, Int u) {
    std::vector<Int> out;
    for (Int alpha = 1; alpha <= s.multiplicity(); ++alpha) {
        if (s.contains(u - alpha)) out.push_back(alpha);
    }
    return out;
}

} // namespace

std::vector<Int> a_set(const NumericalSemigroup& s, Int u) {
    s.require_proper();
    check_member(s, u);
    std::vector<Int> direct = a_set_direct(s, u);

    // Cross-check against the Apery form: with u = w_p + k a_1 and w_h the
    // largest Apery element below u,
    //   A(u) = { v(p^ - j^) - (ceil(v/a_1) - 1) a_1 | 0 <= j <= h }.
    const AperyTable& ap = s.apery();
    const Int e = s.multiplicity();
    Int r = u % e;
    const Int p_hat = r == 0 ? e : r;
    Int h = 0;
    while (h + 1 < e && ap.w[static_cast<std::size_t>(h + 1)] < u) ++h;
    std::vector<Int> from_apery;
    for (Int j = 0; j <= h; ++j) {
        const Int x = ap.v_at(p_hat - ap.hat_of(j));
        from_apery.push_back(x - (ceil_div(x, e) - 1) * e);
    }
    std::sort(from_apery.begin(), from_apery.end());
    if (from_apery != direct) {
        throw AssertionFailed("A(u) disagrees with its Apery-table form");
    }
    return direct;
}

const GotoVector& goto_vector(const NumericalSemigroup& s) {
    s.require_proper();
    return s.cached<GotoVector>(NumericalSemigroup::Slot::GotoVec, [&]() {
        GotoVector gv;
        const Int e = s.multiplicity();
        const Int f = s.frobenius();
        const std::vector<Int> t = s.t_set();
        auto snap = s.ord_snapshot(f + e);

        for (Int alpha = 1; alpha <= e; ++alpha) {
            // max order on Ap(S;alpha)
            Int by_apery = 0;
            for (Int w = 0; w <= f + alpha; ++w) {
                if (s.contains(w) && !s.contains(w - alpha)) {
                    by_apery = std::max(by_apery, NumericalSemigroup::ord_in(snap, w));
                }
            }
            // max order of p + alpha over p in T
            Int by_t = -1;
            for (Int p : t) {
                by_t = std::max(by_t, NumericalSemigroup::ord_in(snap, p + alpha));
            }
            if (by_apery != by_t) {
                throw AssertionFailed("the two sigma(alpha) formulas disagree");
            }
            gv.sigma.push_back(by_apery);
        }

        gv.tau = *std::min_element(gv.sigma.begin(), gv.sigma.end());

        Int apery_max_ord = 0;
        for (Int w : s.apery().w) {
            apery_max_ord = std::max(apery_max_ord, NumericalSemigroup::ord_in(snap, w));
        }
        if (gv.sigma.back() != apery_max_ord) {
            throw AssertionFailed("sigma(e) differs from the maximal Apery order");
        }

        gv.rho = 0;
        for (Int a : s.generators()) {
            gv.rho = std::max(gv.rho, min_sigma_over(gv.sigma, a_set_direct(s, a)));
        }

        if (gv.tau < ceil_div(f, s.generators().back()) || gv.rho > ceil_div(f, e)) {
            throw AssertionFailed("tau/rho violate their Frobenius bounds");
        }
        return gv;
    });
}

Int goto_number(const NumericalSemigroup& s, Int u) {
    s.require_proper();
    check_member(s, u);
    return min_sigma_over(goto_vector(s).sigma, a_set(s, u));
}

Int goto_number_oracle(const NumericalSemigroup& s, Int u) {
    s.require_proper();
    check_member(s, u);
    const Int f = s.frobenius();
    const Int a1 = s.multiplicity();
    // Past s > f + u every b + s lands in u + S, so the quantifier truncates.
    const Int s_limit = f + u;
    auto snap = s.ord_snapshot(s_limit);
    const std::vector<Int> members = s.members_upto(s_limit);

    auto valid = [&](Int q) {
        for (Int b : members) {
            if (b >= u) break;
            bool escapes = false;
            for (Int t : members) {
                if (NumericalSemigroup::ord_in(snap, t) >= q && !s.contains(b + t - u)) {
                    escapes = true;
                    break;
                }
            }
            if (!escapes) return false; // x^b sits in the colon ideal
        }
        return true;
    };

    // Proven cap: rho <= ceil(f/a_1), so any q past that is a bug.
    const Int cap = ceil_div(f, a1) + 1;
    Int q = 1;
    while (valid(q)) {
        if (q > cap) throw CapExceeded("goto oracle exceeded its proven cap");
        ++q;
    }
    return q - 1;
}

GotoBounds goto_bounds(const NumericalSemigroup& s, Int u) {
    s.require_proper();
    check_member(s, u);
    const Int f = s.frobenius();
    const std::vector<Int>& gens = s.generators();

    Int pred = u - 1;
    while (!s.contains(pred)) --pred;

    GotoBounds b;
    b.lower = ceil_div(f + u - pred, gens.back());
    b.upper = (f + u - pred) / gens.front();
    if (u == gens.front()) {
        b.upper_at_a1 = (f + u) / gens[1];
    }
    if (u == gens.back()) {
        Int p = u - 1;
        while (!s.contains(p)) --p;
        b.lower_at_anu = ceil_div(f + u - p, gens[gens.size() - 2]);
    }
    return b;
}

} // namespace nsg
