#include "nsg/classify.hpp"

#include <algorithm>

namespace nsg {

namespace {

bool all_same_order(const NumericalSemigroup& s, const std::vector<Int>& values) {
    for (Int v : values) {
        if (s.ord(v) != s.ord(values.front())) return false;
    }
    return true;
}

} // namespace

bool is_symmetric(const NumericalSemigroup& s) {
    s.require_proper();
    const Int f = s.frobenius();
    Int members = 0;
    for (Int n = 0; n <= f; ++n) {
        if (s.contains(n)) ++members;
    }
    const bool sym = (f % 2 == 1) && 2 * members == f + 1;
    const bool single_max = s.max_min_apery(Relation::Plain).max_set.size() == 1;
    if (sym != single_max) {
        throw AssertionFailed("symmetry test disagrees with #maxAp(S) = 1");
    }
    return sym;
}

Purity purity(const NumericalSemigroup& s) {
    s.require_proper();
    const std::vector<Int> max_plain = s.max_min_apery(Relation::Plain).max_set;
    const std::vector<Int> max_m = s.max_min_apery(Relation::M).max_set;
    Purity p;
    p.pure = all_same_order(s, max_plain);
    p.m_pure = all_same_order(s, max_m);
    if (p.m_pure != (p.pure && max_plain == max_m)) {
        throw AssertionFailed("M-purity disagrees with purity + maxAp = maxAp_M");
    }
    return p;
}

bool is_m_additive(const NumericalSemigroup& s) {
    s.require_proper();
    const Int a1 = s.multiplicity();
    const Int bound = (2 * a1 - 2) * s.generators().back();
    auto snap = s.ord_snapshot(bound + a1);
    for (Int u = 0; u <= bound; ++u) {
        const Int o = NumericalSemigroup::ord_in(snap, u);
        if (o < 0) continue;
        if (NumericalSemigroup::ord_in(snap, u + a1) != o + 1) return false;
    }
    return true;
}

bool m_additive_by_apery_window(const NumericalSemigroup& s) {
    s.require_proper();
    const Int a1 = s.multiplicity();
    if (s.generators()[1] != a1 + 1) {
        throw InvalidArgument("the Apery-window route needs a_2 = a_1 + 1");
    }
    for (Int w : s.apery().w) {
        const Int x = w - a1 * s.ord(w);
        if (x < 0 || x > a1 - 1) return false;
    }
    return true;
}

Int reduction_number(const NumericalSemigroup& s) {
    s.require_proper();
    const Int a1 = s.multiplicity();
    const Int g = goto_vector(s).sigma.back(); // g(a_1), the largest Apery order

    // Failures of order additivity are confined to u <= (2e-2) a_nu - a_1;
    // each one forbids k in [ord(u)+1, ord(u+a_1)-1].
    const Int bound = (2 * a1 - 2) * s.generators().back() - a1;
    auto snap = s.ord_snapshot(bound + a1);
    std::vector<std::pair<Int, Int>> forbidden;
    for (Int u = 0; u <= bound; ++u) {
        const Int o = NumericalSemigroup::ord_in(snap, u);
        if (o < 0) continue;
        const Int o1 = NumericalSemigroup::ord_in(snap, u + a1);
        if (o1 != o + 1) forbidden.emplace_back(o + 1, o1 - 1);
    }

    Int k = g;
    for (bool blocked = true; blocked;) {
        blocked = false;
        for (auto [lo, hi] : forbidden) {
            if (lo <= k && k <= hi) {
                blocked = true;
                ++k;
                break;
            }
        }
    }
    return k;
}

DeltaGamma delta_gamma(const NumericalSemigroup& s) {
    s.require_proper();
    const AperyTable& ap = s.apery();
    const Int a1 = s.multiplicity();
    DeltaGamma dg;
    for (Int wi : ap.w) {
        Int di = -1;
        Int gi = -1;
        // w_i + w in Ap(S) forces w itself into Ap(S).
        for (Int w : ap.w) {
            const Int sum = wi + w;
            if (!s.contains(sum) || s.contains(sum - a1)) continue;
            di = std::max(di, s.ord(wi) + s.ord(w));
            gi = std::max(gi, s.ord(wi) + w / a1);
        }
        dg.delta_i.push_back(di);
        dg.gamma_i.push_back(gi);
    }
    dg.delta = *std::min_element(dg.delta_i.begin(), dg.delta_i.end());
    dg.gamma = *std::min_element(dg.gamma_i.begin(), dg.gamma_i.end());
    return dg;
}

bool colon_identity_holds(const NumericalSemigroup& s) {
    s.require_proper();
    const AperyTable& ap = s.apery();
    const Int a1 = s.multiplicity();
    const Int f = s.frobenius();
    const Int g = goto_vector(s).sigma.back();
    const std::vector<Int> members = s.members_upto(f + a1);
    for (Int n = 1; n <= g; ++n) {
        for (Int w : ap.w) {
            // w is in the colon ideal iff w + t - a_1 in S for every t with
            // ord(t) >= n; t > f + a_1 is automatic.
            bool in_colon = true;
            for (Int t : members) {
                if (s.ord(t) < n) continue;
                if (!s.contains(w + t - a1)) {
                    in_colon = false;
                    break;
                }
            }
            const bool in_rhs = s.ord(w) >= g - n + 1;
            if (in_colon != in_rhs) return false;
        }
    }
    return true;
}

const InvariantReport& invariant_report(const NumericalSemigroup& s) {
    s.require_proper();
    return s.cached<InvariantReport>(NumericalSemigroup::Slot::Report, [&]() {
        InvariantReport r;
        const GotoVector& gv = goto_vector(s);
        DeltaGamma dg = delta_gamma(s);
        r.delta = dg.delta;
        r.gamma = dg.gamma;
        r.delta_i = std::move(dg.delta_i);
        r.gamma_i = std::move(dg.gamma_i);
        r.ord_conductor = conductor_order(s);
        r.tau = gv.tau;
        r.g_a1 = gv.sigma.back();
        r.reduction_number = reduction_number(s);
        r.beta = beta_vector(s);
        r.symmetric = is_symmetric(s);
        const Purity p = purity(s);
        r.pure = p.pure;
        r.m_pure = p.m_pure;
        r.m_additive = is_m_additive(s);
        r.m_symmetric = r.symmetric && r.m_pure && r.m_additive;
        r.gr_bar_gorenstein = r.symmetric && r.m_pure;
        r.gr_gorenstein = r.gr_bar_gorenstein && r.g_a1 == r.reduction_number;

        if (!(r.delta <= r.gamma && r.gamma <= r.ord_conductor &&
              r.ord_conductor <= r.tau && r.tau <= r.g_a1 &&
              r.g_a1 <= r.reduction_number)) {
            throw AssertionFailed("invariant chain delta<=gamma<=ord(C)<=tau<=g(a1)<=r failed");
        }
        if (r.m_pure != (r.delta == r.g_a1)) {
            throw AssertionFailed("M-pure <=> delta = g(a_1) failed");
        }
        if ((r.m_pure && r.m_additive) != (r.delta == r.reduction_number)) {
            throw AssertionFailed("M-pure and M-additive <=> delta = r failed");
        }
        if (r.m_additive && r.g_a1 != r.reduction_number) {
            throw AssertionFailed("M-additive => g(a_1) = r failed");
        }
        return r;
    });
}

} // namespace nsg
