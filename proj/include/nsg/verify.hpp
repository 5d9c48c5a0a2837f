#pragma once

#include <string>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/enumerate.hpp"

namespace nsg {

struct Witness {
    std::vector<Int> generators;
    std::string message;
    bool has_report = false;
    InvariantReport report;
};

struct VerificationReport {
    std::string property;
    std::string description;
    Int checked = 0;
    Int passed = 0;
    Int failed = 0;
    std::vector<Witness> witnesses; // at most 10, sorted by generators
    std::vector<std::string> notes;

    bool ok() const { return failed == 0; }
};

struct PropertyInfo {
    std::string id;
    std::string summary;
};

std::vector<PropertyInfo> list_properties();

// Runs the named property over the enumeration described by `spec`.
// Pointwise properties default to a genus <= 10 sweep when no bound is given;
// jobs <= 0 uses one worker per hardware thread.  Throws UnknownProperty.
VerificationReport verify(const std::string& property_id, const EnumSpec& spec, int jobs = 0);

} // namespace nsg
