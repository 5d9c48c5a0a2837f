#pragma once

#include <string>
#include <utility>

#include "nsg/classify.hpp"
#include "nsg/verify.hpp"

namespace nsg {

// Everything `analyze` reports about one semigroup.
struct SemigroupReport {
    std::vector<Int> generators;
    Int multiplicity = 0;
    Int embedding_dim = 0;
    Int frobenius = 0;
    Int genus = 0;
    std::vector<Int> apery_w;
    std::vector<Int> apery_v;
    std::vector<Int> hat;
    std::vector<Int> t_set;
    std::vector<Int> goto_vector;
    Int tau = 0;
    Int rho = 0;
    std::vector<std::pair<Int, Int>> goto_numbers; // (nonzero Apery member, g)
    Int delta = 0;
    Int gamma = 0;
    Int ord_conductor = 0;
    Int g_a1 = 0;
    Int reduction_number = 0;
    std::vector<Int> beta;
    bool symmetric = false;
    bool pure = false;
    bool m_pure = false;
    bool m_additive = false;
    bool m_symmetric = false;
    bool gr_bar_gorenstein = false;
    bool gr_gorenstein = false;

    bool operator==(const SemigroupReport&) const = default;
};

SemigroupReport analyze(const NumericalSemigroup& s);

// Stable JSON with the documented key set; emitting, parsing and re-emitting
// is byte-identical.  Parsing rejects unknown or missing keys.
std::string to_json(const SemigroupReport& r);
SemigroupReport report_from_json(const std::string& text);

std::string to_json(const VerificationReport& r);

std::string to_text(const SemigroupReport& r);
std::string to_text(const VerificationReport& r);

} // namespace nsg
