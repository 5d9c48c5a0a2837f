#pragma once

#include <optional>
#include <string>

#include "nsg/classify.hpp"

namespace nsg {

enum class Family {
    TwoGenerators,
    ArithmeticSeq,
    MaxEmbeddingDim,
    SymAlmostMaxEmbeddingDim,
    MultiplicityLE4,
    SymMultiplicity5,
    MAdditiveSymmetricTauEqGa1,
    MSymmetric,
    General,
};

const char* family_name(Family f);

struct FamilyTag {
    Family family = Family::General;
    Int q = -1;          // (e-2)/(nu-1) for arithmetic sequences
    Int d = -1;          // common difference for arithmetic sequences
    std::string case_id; // printed sub-case for the e<=4 and e=5 tables
};

// Common difference d when the minimal generators are exactly
// a_1, a_1+d, ..., a_1+(nu-1)d; sub-runs of longer progressions do not count.
std::optional<Int> arithmetic_step(const NumericalSemigroup& s);

// Most specific family, tested in declaration order of Family.  The
// ArithmeticSeq tag additionally requires q = (e-2)/(nu-1) to be an integer,
// matching the hypothesis of its formula.
FamilyTag detect_family(const NumericalSemigroup& s);

// Closed-form Goto number when a family formula applies; nullopt for General.
std::optional<Int> goto_closed_form(const NumericalSemigroup& s, Int u);
std::optional<Int> goto_closed_form(const NumericalSemigroup& s, Int u, const FamilyTag& tag);

// Per-family evaluators; each assumes its family hypotheses and is
// cross-checked against goto_number in the test suites.
Int goto_two_generators(const NumericalSemigroup& s, Int u);
Int goto_arithmetic_sequence(const NumericalSemigroup& s, Int u);
Int goto_max_embedding_dim(const NumericalSemigroup& s, Int u);
Int goto_sym_almost_max(const NumericalSemigroup& s, Int u);
Int goto_multiplicity_le4(const NumericalSemigroup& s, Int u);
Int goto_sym_multiplicity5(const NumericalSemigroup& s, Int u);
Int goto_m_additive_symmetric(const NumericalSemigroup& s, Int u); // needs tau = g(a_1)
Int goto_m_symmetric(const NumericalSemigroup& s, Int u);

} // namespace nsg
