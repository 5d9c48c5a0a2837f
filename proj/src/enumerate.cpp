#include "nsg/enumerate.hpp"

#include <algorithm>

#include "nsg/classify.hpp"

namespace nsg {

namespace {

constexpr Int kGenusCap = 32;
constexpr Int kFrobeniusCap = 48;

// Minimal generators of the semigroup described by `member` (valid through
// `limit`, everything above is a member): the members of (0, f+e] that are
// not sums of two nonzero members.
std::vector<Int> minimal_generators(const std::vector<std::uint8_t>& member, Int limit, Int f) {
    auto is_member = [&](Int n) {
        if (n < 0) return false;
        if (n > limit) return true;
        return member[static_cast<std::size_t>(n)] != 0;
    };
    Int e = 1;
    while (e <= f && !is_member(e)) ++e;
    std::vector<Int> gens;
    for (Int n = e; n <= f + e; ++n) {
        if (!is_member(n)) continue;
        bool redundant = false;
        for (Int s = e; s + s <= n; ++s) {
            if (is_member(s) && is_member(n - s)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) gens.push_back(n);
    }
    return gens;
}

NumericalSemigroup materialize(const std::vector<Int>& gens, Int f,
                               const std::vector<std::uint8_t>& member) {
    std::vector<std::uint8_t> low;
    if (f >= 0) low.assign(member.begin(), member.begin() + f + 1);
    return NumericalSemigroup::from_minimal_data(gens, f, std::move(low));
}

struct TreeWalker {
    const EnumSpec& spec;
    const SemigroupVisitor& visit;
    std::vector<std::uint8_t> member;
    Int limit = 0;

    void emit(const std::vector<Int>& gens, Int f) {
        if (spec.multiplicity && gens.front() != *spec.multiplicity) return;
        if (spec.multiplicity_max && gens.front() > *spec.multiplicity_max) return;
        if (spec.frobenius_max && f > *spec.frobenius_max) return;
        NumericalSemigroup s = materialize(gens, f, member);
        if (!filter_matches(s, spec.filter)) return;
        visit(s);
    }

    void walk(const std::vector<Int>& gens, Int f, Int genus) {
        emit(gens, f);
        if (genus == spec.genus_max) return;
        // Subtree pruning: e and f only grow when descending.
        if (spec.multiplicity && gens.front() > *spec.multiplicity) return;
        if (spec.multiplicity_max && gens.front() > *spec.multiplicity_max) return;
        for (Int g : gens) {
            if (g <= f) continue;
            if (spec.frobenius_max && g > *spec.frobenius_max) continue;
            member[static_cast<std::size_t>(g)] = 0;
            walk(minimal_generators(member, limit, g), g, genus + 1);
            member[static_cast<std::size_t>(g)] = 1;
        }
    }
};

struct GapSetWalker {
    Int frobenius_max = 0;
    std::optional<Int> multiplicity;
    std::optional<Int> multiplicity_max;
    Int genus_max = -1; // < 0: unbounded
    std::vector<std::uint8_t> member;
    Int gap_count = 0;
    std::function<void(const std::vector<Int>&, Int)> leaf; // (gens, f)

    bool forced(Int n) const {
        for (Int s = 1; s + s <= n; ++s) {
            if (member[static_cast<std::size_t>(s)] && member[static_cast<std::size_t>(n - s)]) {
                return true;
            }
        }
        return false;
    }

    void finish() {
        Int f = -1;
        for (Int n = frobenius_max; n >= 1; --n) {
            if (!member[static_cast<std::size_t>(n)]) {
                f = n;
                break;
            }
        }
        std::vector<Int> gens =
            f < 0 ? std::vector<Int>{1} : minimal_generators(member, frobenius_max, f);
        if (multiplicity && gens.front() != *multiplicity) return;
        if (multiplicity_max && gens.front() > *multiplicity_max) return;
        leaf(gens, f);
    }

    // Entry invariant: member[k] == 1 for all k >= n; restored on exit.
    void walk(Int n) {
        if (n > frobenius_max) {
            finish();
            return;
        }
        const bool must_be_member = forced(n) || (multiplicity && n == *multiplicity);
        const bool forbid_member = multiplicity && n < *multiplicity;
        if (!forbid_member) {
            walk(n + 1);
        }
        if (!must_be_member && (genus_max < 0 || gap_count < genus_max)) {
            member[static_cast<std::size_t>(n)] = 0;
            ++gap_count;
            walk(n + 1);
            --gap_count;
            member[static_cast<std::size_t>(n)] = 1;
        }
    }
};

} // namespace

void EnumSpec::validate() const {
    if (mode == Mode::ByGenus) {
        if (genus_max < 0) throw InvalidSpec("by-genus enumeration needs genus_max >= 0");
        if (genus_max > kGenusCap) throw InvalidSpec("genus_max above the supported cap");
    } else {
        if (!frobenius_max) {
            throw InvalidSpec("by-multiplicity enumeration needs frobenius_max");
        }
        if (*frobenius_max < 0 || *frobenius_max > kFrobeniusCap) {
            throw InvalidSpec("frobenius_max out of range");
        }
    }
    if (multiplicity && *multiplicity < 1) throw InvalidSpec("multiplicity must be positive");
    if (multiplicity_max && *multiplicity_max < 1) {
        throw InvalidSpec("multiplicity_max must be positive");
    }
    static const char* known[] = {"all", "symmetric", "pure", "m_pure", "m_additive", "m_symmetric"};
    if (std::find(std::begin(known), std::end(known), filter) == std::end(known)) {
        throw InvalidSpec("unknown filter '" + filter + "'");
    }
}

bool filter_matches(const NumericalSemigroup& s, const std::string& filter) {
    if (filter == "all") return true;
    if (s.embedding_dim() < 2) return false; // predicates are undefined on N_0
    if (filter == "symmetric") return is_symmetric(s);
    if (filter == "pure") return purity(s).pure;
    if (filter == "m_pure") return purity(s).m_pure;
    if (filter == "m_additive") return is_m_additive(s);
    if (filter == "m_symmetric") {
        return is_symmetric(s) && purity(s).m_pure && is_m_additive(s);
    }
    throw InvalidSpec("unknown filter '" + filter + "'");
}

void enumerate_semigroups(const EnumSpec& spec, const SemigroupVisitor& visit) {
    spec.validate();
    if (spec.mode == EnumSpec::Mode::ByGenus) {
        TreeWalker walker{spec, visit, {}, 0};
        walker.limit = 4 * spec.genus_max + 8;
        walker.member.assign(static_cast<std::size_t>(walker.limit) + 1, 1);
        walker.walk({1}, -1, 0);
        return;
    }
    GapSetWalker walker;
    walker.frobenius_max = *spec.frobenius_max;
    walker.multiplicity = spec.multiplicity;
    walker.multiplicity_max = spec.multiplicity_max;
    walker.member.assign(static_cast<std::size_t>(walker.frobenius_max) + 1, 1);
    walker.member[0] = 1;
    walker.leaf = [&](const std::vector<Int>& gens, Int f) {
        NumericalSemigroup s = materialize(gens, f, walker.member);
        if (filter_matches(s, spec.filter)) visit(s);
    };
    walker.walk(1);
}

std::vector<std::vector<Int>> enumerate_generator_lists(const EnumSpec& spec) {
    std::vector<std::vector<Int>> out;
    enumerate_semigroups(spec, [&](const NumericalSemigroup& s) { out.push_back(s.generators()); });
    return out;
}

std::vector<std::vector<Int>> gap_set_oracle_by_genus(Int genus_max) {
    if (genus_max < 0 || genus_max > kGenusCap) throw InvalidSpec("genus_max out of range");
    std::vector<std::vector<Int>> out;
    if (genus_max == 0) {
        out.push_back({1});
        return out;
    }
    GapSetWalker walker;
    walker.frobenius_max = 2 * genus_max - 1; // the Frobenius number is < 2*genus
    walker.genus_max = genus_max;
    walker.member.assign(static_cast<std::size_t>(walker.frobenius_max) + 1, 1);
    walker.leaf = [&](const std::vector<Int>& gens, Int) { out.push_back(gens); };
    walker.walk(1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace nsg
