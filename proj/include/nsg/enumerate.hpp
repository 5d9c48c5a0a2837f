#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nsg/semigroup.hpp"

namespace nsg {

// Bounds and filter for an enumeration run.
//
// ByGenus walks the semigroup tree (children of S are S \ {g} for minimal
// generators g > f(S), rooted at N_0) depth-first with children ordered by
// ascending removed generator, so every semigroup with genus <= genus_max is
// produced exactly once.  ByMultiplicityAndFrobenius enumerates gap sets
// inside [1, frobenius_max] directly and is the independent oracle route.
struct EnumSpec {
    enum class Mode { ByGenus, ByMultiplicityAndFrobenius };

    Mode mode = Mode::ByGenus;
    Int genus_max = -1;
    std::optional<Int> multiplicity;
    std::optional<Int> multiplicity_max;
    std::optional<Int> frobenius_max;
    std::string filter = "all"; // all|symmetric|pure|m_pure|m_additive|m_symmetric

    void validate() const; // throws InvalidSpec
};

using SemigroupVisitor = std::function<void(const NumericalSemigroup&)>;

// Streams every semigroup within the spec's bounds that passes the filter.
// Deterministic order; each semigroup visited exactly once.
void enumerate_semigroups(const EnumSpec& spec, const SemigroupVisitor& visit);

// Convenience: collect the minimal generator lists instead.
std::vector<std::vector<Int>> enumerate_generator_lists(const EnumSpec& spec);

// Independent enumeration oracle: exhaustive search over gap sets closed
// under the semigroup condition, no tree structure involved.  Returns the
// generator lists of all semigroups with genus <= genus_max, sorted.
std::vector<std::vector<Int>> gap_set_oracle_by_genus(Int genus_max);

bool filter_matches(const NumericalSemigroup& s, const std::string& filter);

} // namespace nsg
