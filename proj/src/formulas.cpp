#include "nsg/formulas.hpp"

#include <algorithm>

namespace nsg {

namespace {

void check_member(const NumericalSemigroup& s, Int u) {
    if (u < 1 || !s.contains(u)) {
        throw NotAMember("closed forms need a nonzero element of S");
    }
}

// w-index of u when u is a nonzero Apery element, -1 otherwise.
Int apery_index(const NumericalSemigroup& s, Int u) {
    const AperyTable& ap = s.apery();
    for (std::size_t i = 1; i < ap.w.size(); ++i) {
        if (ap.w[i] == u) return static_cast<Int>(i);
    }
    return -1;
}

std::string multiplicity_le4_case(const NumericalSemigroup& s) {
    const Int e = s.multiplicity();
    const Int nu = s.embedding_dim();
    if (e == 2) return "1";
    if (e == 3) return nu == 2 ? "2" : "3";
    if (nu == 2) return "4";
    if (nu == 4) return "6";
    if (is_symmetric(s)) return "5a";
    if (s.generators() == std::vector<Int>{4, 5, 7}) return "5c";
    return "5b";
}

std::string sym5_case(const NumericalSemigroup& s) {
    const Int nu = s.embedding_dim();
    if (nu == 2) return "1";
    if (nu == 4) return "4";
    if (s.generators() == std::vector<Int>{5, 6, 9}) return "3";
    return "2";
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::TwoGenerators: return "TwoGenerators";
        case Family::ArithmeticSeq: return "ArithmeticSeq";
        case Family::MaxEmbeddingDim: return "MaxEmbeddingDim";
        case Family::SymAlmostMaxEmbeddingDim: return "SymAlmostMaxEmbeddingDim";
        case Family::MultiplicityLE4: return "MultiplicityLE4";
        case Family::SymMultiplicity5: return "SymMultiplicity5";
        case Family::MAdditiveSymmetricTauEqGa1: return "MAdditiveSymmetricTauEqGa1";
        case Family::MSymmetric: return "MSymmetric";
        case Family::General: return "General";
    }
    return "General";
}

std::optional<Int> arithmetic_step(const NumericalSemigroup& s) {
    const std::vector<Int>& g = s.generators();
    if (g.size() < 2) return std::nullopt;
    const Int d = g[1] - g[0];
    for (std::size_t i = 2; i < g.size(); ++i) {
        if (g[i] - g[i - 1] != d) return std::nullopt;
    }
    return d;
}

FamilyTag detect_family(const NumericalSemigroup& s) {
    s.require_proper();
    const Int e = s.multiplicity();
    const Int nu = s.embedding_dim();
    FamilyTag tag;

    if (nu == 2) {
        tag.family = Family::TwoGenerators;
        tag.d = s.generators()[1] - e;
        tag.q = e - 2;
        return tag;
    }
    if (auto d = arithmetic_step(s); d && (e - 2) % (nu - 1) == 0) {
        tag.family = Family::ArithmeticSeq;
        tag.d = *d;
        tag.q = (e - 2) / (nu - 1);
        return tag;
    }
    if (nu == e) {
        tag.family = Family::MaxEmbeddingDim;
        return tag;
    }
    if (nu == e - 1 && is_symmetric(s)) {
        tag.family = Family::SymAlmostMaxEmbeddingDim;
        return tag;
    }
    if (e <= 4) {
        tag.family = Family::MultiplicityLE4;
        tag.case_id = multiplicity_le4_case(s);
        return tag;
    }
    if (e == 5 && is_symmetric(s)) {
        tag.family = Family::SymMultiplicity5;
        tag.case_id = sym5_case(s);
        return tag;
    }
    if (is_symmetric(s) && is_m_additive(s)) {
        const GotoVector& gv = goto_vector(s);
        if (gv.tau == gv.sigma.back()) {
            tag.family = Family::MAdditiveSymmetricTauEqGa1;
            return tag;
        }
        const Purity p = purity(s);
        if (p.m_pure) {
            tag.family = Family::MSymmetric;
            return tag;
        }
    }
    tag.family = Family::General;
    return tag;
}

Int goto_two_generators(const NumericalSemigroup& s, Int u) {
    check_member(s, u);
    const Int a1 = s.generators()[0];
    const Int a2 = s.generators()[1];
    if (u % a2 == 0 && u / a2 <= a1 - 1) {
        const Int k = u / a2;
        return a2 + k - 2 - (k * a2) / a1;
    }
    return a1 - 1;
}

Int goto_arithmetic_sequence(const NumericalSemigroup& s, Int u) {
    check_member(s, u);
    const std::vector<Int>& a = s.generators();
    const Int a1 = a.front();
    const Int anu = a.back();
    const Int nu = s.embedding_dim();
    const Int q = (a1 - 2) / (nu - 1);
    // Nonzero Apery elements are exactly a_n + k a_nu with 2 <= n+k(nu-1) <= e.
    for (Int n = 2; n <= nu; ++n) {
        for (Int k = 0; k <= q; ++k) {
            if (n + k * (nu - 1) < 2 || n + k * (nu - 1) > a1) continue;
            if (a[static_cast<std::size_t>(n - 1)] + k * anu != u) continue;
            if (n == 2) {
                return (a[1] + (q - k) * anu) / a1 + k;
            }
            // The (q-k-1) coefficient here is differential-tested against the
            // general algorithm; do not "fix" it to (q-k+1).
            return (a[static_cast<std::size_t>(nu - n + 2)] + (q - k - 1) * anu) / a1 + k + 1;
        }
    }
    return q + 1;
}

Int goto_max_embedding_dim(const NumericalSemigroup& s, Int u) {
    check_member(s, u);
    const AperyTable& ap = s.apery();
    const Int a1 = s.multiplicity();
    const Int i = apery_index(s, u);
    if (i < 0) return 1;
    Int m = -1;
    for (Int j = 0; j < i; ++j) {
        const Int x = ap.v_at(ap.hat_of(j) - ap.hat_of(i));
        if (m < 0 || x < m) m = x;
    }
    return m / a1;
}

Int goto_sym_almost_max(const NumericalSemigroup& s, Int u) {
    check_member(s, u);
    const AperyTable& ap = s.apery();
    const Int a1 = s.multiplicity();
    const Int e = a1;
    const Int i = apery_index(s, u);
    if (i < 0) return 2;
    if (i == e - 1) {
        return 1 + s.generators()[1] / a1; // g(a_2 + a_nu) = 1 + floor(a_2/a_1)
    }
    if (i == 1) {
        const Int x = ap.v_at(-ap.hat_of(1));
        if (x == ap.w.back()) return x / a1;
        return 1 + x / a1;
    }
    Int m = -1;
    for (Int j = 0; j < i; ++j) {
        const Int x = ap.v_at(ap.hat_of(j) - ap.hat_of(i));
        if (m < 0 || x < m) m = x;
    }
    return 1 + m / a1;
}

Int goto_multiplicity_le4(const NumericalSemigroup& s, Int u) {
    check_member(s, u);
    const std::vector<Int>& a = s.generators();
    const std::string c = multiplicity_le4_case(s);
    if (c == "1") {
        return u == a[1] ? a[1] / 2 : 1;
    }
    if (c == "2") {
        if (u == a[1]) return a[1] - a[1] / 3 - 1;
        if (u == 2 * a[1]) return a[1] - (2 * a[1]) / 3;
        return 2;
    }
    if (c == "3") {
        if (u == a[1]) return a[2] / 3;
        if (u == a[2]) return a[1] / 3;
        return 1;
    }
    if (c == "4") {
        if (u == a[1]) return a[1] - a[1] / 4 - 1;
        if (u == 2 * a[1]) return a[1] - (2 * a[1]) / 4;
        if (u == 3 * a[1]) return a[1] - (3 * a[1]) / 4 + 1;
        return 3;
    }
    if (c == "5a") {
        if (u == a[1]) return a[1] % 2 == 0 ? 1 + a[1] / 4 : (a[1] + a[2]) / 4;
        if (u == a[2]) return 1 + a[2] / 4;
        if (u == a[1] + a[2]) return 1 + a[1] / 4;
        return 2;
    }
    if (c == "5b") {
        if (u == a[1]) return a[2] / 4;
        if (u == a[2]) return 1 + a[1] / 4;
        if (u == 2 * a[1]) {
            if (2 * a[1] < a[2]) return (2 * a[1]) / 4;
            if (a[2] == a[1] + 2) return a[2] / 4;
            return 1 + a[1] / 4;
        }
        return 2;
    }
    if (c == "5c") {
        return (u == 4 || u == 7) ? 2 : 1;
    }
    // case "6": <4,a_2,a_3,a_4>
    const bool a2_even = a[1] % 2 == 0;
    const bool a4_even = a[3] % 2 == 0;
    if (u == a[1]) {
        if (a2_even) return a[1] / 4;
        if (a4_even) return a[2] / 4;
        return a[3] / 4; // a_3 even
    }
    if (u == a[2]) {
        return a4_even ? a[1] / 4 : a[2] / 4;
    }
    if (u == a[3]) return a[1] / 4;
    return 1;
}

Int goto_sym_multiplicity5(const NumericalSemigroup& s, Int u) {
    check_member(s, u);
    const std::vector<Int>& a = s.generators();
    const std::string c = sym5_case(s);
    if (c == "1") {
        if (u == a[1]) return a[1] - a[1] / 5 - 1;
        if (u == 2 * a[1]) return a[1] - (2 * a[1]) / 5;
        if (u == 3 * a[1]) return a[1] - (3 * a[1]) / 5 + 1;
        if (u == 4 * a[1]) return a[1] - (4 * a[1]) / 5 + 2;
        return 4;
    }
    if (c == "2") {
        if (u == a[1] || u == 2 * a[1]) return 1 + a[2] / 5;
        if (u == a[2] || u == 3 * a[1]) return 2 + a[1] / 5;
        return 3;
    }
    if (c == "3") {
        return (u == 5 || u == 9 || u == 14) ? 3 : 2;
    }
    // case "4": <5,a_2,a_3,a_4>
    const bool div5 = (a[1] + a[2]) % 5 == 0;
    if (u == a[1]) return div5 ? 1 + a[2] / 5 : (2 * a[2]) / 5;
    if (u == a[2]) return div5 ? 1 + a[1] / 5 : 1 + a[3] / 5;
    if (u == a[3]) return 1 + a[2] / 5;
    if (u == 2 * a[2]) return 1 + a[1] / 5;
    return 2;
}

Int goto_m_additive_symmetric(const NumericalSemigroup& s, Int u) {
    check_member(s, u);
    const AperyTable& ap = s.apery();
    const Int a1 = s.multiplicity();
    const Int i = apery_index(s, u);
    if (i < 0) return goto_vector(s).tau;
    const Int top_hat = ap.hat_of(a1 - 1); // hat of w_{e-1}
    Int best = -1;
    for (Int j = 0; j < i; ++j) {
        const Int x = ap.v_at(ap.hat_of(j) - ap.hat_of(i));
        const Int value = s.ord(ap.v_at(top_hat + ap.hat_of(i) - ap.hat_of(j))) + x / a1;
        if (best < 0 || value < best) best = value;
    }
    return best;
}

Int goto_m_symmetric(const NumericalSemigroup& s, Int u) {
    check_member(s, u);
    const AperyTable& ap = s.apery();
    const Int a1 = s.multiplicity();
    const Int tau = goto_vector(s).tau;
    const Int i = apery_index(s, u);
    if (i < 0) return tau;
    Int best = -1;
    for (Int j = 0; j < i; ++j) {
        const Int x = ap.v_at(ap.hat_of(j) - ap.hat_of(i));
        const Int value = tau + x / a1 - s.ord(x);
        if (best < 0 || value < best) best = value;
    }
    return best;
}

std::optional<Int> goto_closed_form(const NumericalSemigroup& s, Int u, const FamilyTag& tag) {
    check_member(s, u);
    switch (tag.family) {
        case Family::TwoGenerators: return goto_two_generators(s, u);
        case Family::ArithmeticSeq: return goto_arithmetic_sequence(s, u);
        case Family::MaxEmbeddingDim: return goto_max_embedding_dim(s, u);
        case Family::SymAlmostMaxEmbeddingDim: return goto_sym_almost_max(s, u);
        case Family::MultiplicityLE4: return goto_multiplicity_le4(s, u);
        case Family::SymMultiplicity5: return goto_sym_multiplicity5(s, u);
        case Family::MAdditiveSymmetricTauEqGa1: return goto_m_additive_symmetric(s, u);
        case Family::MSymmetric: return goto_m_symmetric(s, u);
        case Family::General: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Int> goto_closed_form(const NumericalSemigroup& s, Int u) {
    return goto_closed_form(s, u, detect_family(s));
}

} // namespace nsg
