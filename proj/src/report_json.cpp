#include "nsg/report_json.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

#include "nsg/formulas.hpp"
#include "nsg/goto_numbers.hpp"

namespace nsg {

using nlohmann::json;

namespace {

json flags_json(const SemigroupReport& r) {
    return json{{"symmetric", r.symmetric},
                {"pure", r.pure},
                {"m_pure", r.m_pure},
                {"m_additive", r.m_additive},
                {"m_symmetric", r.m_symmetric},
                {"gr_bar_gorenstein", r.gr_bar_gorenstein},
                {"gr_gorenstein", r.gr_gorenstein}};
}

json report_flags_json(const InvariantReport& r) {
    return json{{"symmetric", r.symmetric},
                {"pure", r.pure},
                {"m_pure", r.m_pure},
                {"m_additive", r.m_additive},
                {"m_symmetric", r.m_symmetric},
                {"gr_bar_gorenstein", r.gr_bar_gorenstein},
                {"gr_gorenstein", r.gr_gorenstein}};
}

void require_keys(const json& j, const std::set<std::string>& expected, const char* what) {
    if (!j.is_object()) throw InvalidArgument(std::string(what) + " is not a JSON object");
    std::set<std::string> seen;
    for (const auto& item : j.items()) seen.insert(item.key());
    if (seen != expected) {
        throw InvalidArgument(std::string("unexpected key set in ") + what);
    }
}

std::vector<Int> int_list(const json& j) {
    std::vector<Int> out;
    for (const auto& v : j) out.push_back(v.get<Int>());
    return out;
}

} // namespace

SemigroupReport analyze(const NumericalSemigroup& s) {
    s.require_proper();
    SemigroupReport r;
    r.generators = s.generators();
    r.multiplicity = s.multiplicity();
    r.embedding_dim = s.embedding_dim();
    r.frobenius = s.frobenius();
    r.genus = s.genus();
    const AperyTable& ap = s.apery();
    r.apery_w = ap.w;
    r.apery_v = ap.v;
    r.hat = ap.hat;
    r.t_set = s.t_set();
    const GotoVector& gv = goto_vector(s);
    r.goto_vector = gv.sigma;
    r.tau = gv.tau;
    r.rho = gv.rho;
    for (std::size_t i = 1; i < ap.w.size(); ++i) {
        r.goto_numbers.emplace_back(ap.w[i], goto_number(s, ap.w[i]));
    }
    const InvariantReport& inv = invariant_report(s);
    r.delta = inv.delta;
    r.gamma = inv.gamma;
    r.ord_conductor = inv.ord_conductor;
    r.g_a1 = inv.g_a1;
    r.reduction_number = inv.reduction_number;
    r.beta = inv.beta;
    r.symmetric = inv.symmetric;
    r.pure = inv.pure;
    r.m_pure = inv.m_pure;
    r.m_additive = inv.m_additive;
    r.m_symmetric = inv.m_symmetric;
    r.gr_bar_gorenstein = inv.gr_bar_gorenstein;
    r.gr_gorenstein = inv.gr_gorenstein;
    return r;
}

std::string to_json(const SemigroupReport& r) {
    json j;
    j["generators"] = r.generators;
    j["multiplicity"] = r.multiplicity;
    j["embedding_dim"] = r.embedding_dim;
    j["frobenius"] = r.frobenius;
    j["genus"] = r.genus;
    j["apery_w"] = r.apery_w;
    j["apery_v"] = r.apery_v;
    j["hat"] = r.hat;
    j["t_set"] = r.t_set;
    j["goto_vector"] = r.goto_vector;
    j["tau"] = r.tau;
    j["rho"] = r.rho;
    json gn = json::object();
    for (auto [w, g] : r.goto_numbers) gn[std::to_string(w)] = g;
    j["goto_numbers"] = gn;
    j["delta"] = r.delta;
    j["gamma"] = r.gamma;
    j["ord_conductor"] = r.ord_conductor;
    j["g_a1"] = r.g_a1;
    j["reduction_number"] = r.reduction_number;
    j["beta"] = r.beta;
    j["flags"] = flags_json(r);
    return j.dump(2) + "\n";
}

SemigroupReport report_from_json(const std::string& text) {
    json j = json::parse(text);
    static const std::set<std::string> top = {
        "generators", "multiplicity", "embedding_dim", "frobenius", "genus",
        "apery_w",    "apery_v",      "hat",           "t_set",     "goto_vector",
        "tau",        "rho",          "goto_numbers",  "delta",     "gamma",
        "ord_conductor", "g_a1",      "reduction_number", "beta",   "flags"};
    require_keys(j, top, "report");
    static const std::set<std::string> flag_keys = {
        "symmetric",   "pure",              "m_pure", "m_additive",
        "m_symmetric", "gr_bar_gorenstein", "gr_gorenstein"};
    require_keys(j["flags"], flag_keys, "flags");

    SemigroupReport r;
    r.generators = int_list(j["generators"]);
    r.multiplicity = j["multiplicity"].get<Int>();
    r.embedding_dim = j["embedding_dim"].get<Int>();
    r.frobenius = j["frobenius"].get<Int>();
    r.genus = j["genus"].get<Int>();
    r.apery_w = int_list(j["apery_w"]);
    r.apery_v = int_list(j["apery_v"]);
    r.hat = int_list(j["hat"]);
    r.t_set = int_list(j["t_set"]);
    r.goto_vector = int_list(j["goto_vector"]);
    r.tau = j["tau"].get<Int>();
    r.rho = j["rho"].get<Int>();
    for (const auto& item : j["goto_numbers"].items()) {
        r.goto_numbers.emplace_back(std::stoll(item.key()), item.value().get<Int>());
    }
    std::sort(r.goto_numbers.begin(), r.goto_numbers.end());
    r.delta = j["delta"].get<Int>();
    r.gamma = j["gamma"].get<Int>();
    r.ord_conductor = j["ord_conductor"].get<Int>();
    r.g_a1 = j["g_a1"].get<Int>();
    r.reduction_number = j["reduction_number"].get<Int>();
    r.beta = int_list(j["beta"]);
    const json& fl = j["flags"];
    r.symmetric = fl["symmetric"].get<bool>();
    r.pure = fl["pure"].get<bool>();
    r.m_pure = fl["m_pure"].get<bool>();
    r.m_additive = fl["m_additive"].get<bool>();
    r.m_symmetric = fl["m_symmetric"].get<bool>();
    r.gr_bar_gorenstein = fl["gr_bar_gorenstein"].get<bool>();
    r.gr_gorenstein = fl["gr_gorenstein"].get<bool>();
    return r;
}

std::string to_json(const VerificationReport& r) {
    json j;
    j["property"] = r.property;
    j["description"] = r.description;
    j["checked"] = r.checked;
    j["passed"] = r.passed;
    j["failed"] = r.failed;
    json ws = json::array();
    for (const Witness& w : r.witnesses) {
        json wj;
        wj["generators"] = w.generators;
        wj["message"] = w.message;
        if (w.has_report) {
            json rep;
            rep["delta"] = w.report.delta;
            rep["gamma"] = w.report.gamma;
            rep["ord_conductor"] = w.report.ord_conductor;
            rep["tau"] = w.report.tau;
            rep["g_a1"] = w.report.g_a1;
            rep["reduction_number"] = w.report.reduction_number;
            rep["beta"] = w.report.beta;
            rep["flags"] = report_flags_json(w.report);
            wj["report"] = rep;
        }
        ws.push_back(wj);
    }
    j["witnesses"] = ws;
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

std::string to_text(const SemigroupReport& r) {
    std::ostringstream os;
    os << "S = <" << format_generators(r.generators) << ">\n";
    os << "multiplicity e = " << r.multiplicity << ", embedding dimension nu = "
       << r.embedding_dim << "\n";
    os << "frobenius f = " << r.frobenius << ", genus = " << r.genus << "\n";
    os << "Apery set (w-order): " << format_generators(r.apery_w) << "\n";
    os << "Apery set (v-order): " << format_generators(r.apery_v) << "\n";
    os << "hat: " << format_generators(r.hat) << "\n";
    os << "T: " << format_generators(r.t_set) << "\n";
    os << "goto vector: (" << format_generators(r.goto_vector) << ")\n";
    os << "tau = " << r.tau << ", rho = " << r.rho << "\n";
    os << "goto numbers on the Apery set:";
    for (auto [w, g] : r.goto_numbers) os << " g(" << w << ")=" << g;
    os << "\n";
    os << "delta = " << r.delta << ", gamma = " << r.gamma << ", ord(C) = "
       << r.ord_conductor << ", tau = " << r.tau << ", g(a_1) = " << r.g_a1
       << ", r = " << r.reduction_number << "\n";
    os << "beta: (" << format_generators(r.beta) << ")\n";
    os << "flags: symmetric=" << (r.symmetric ? "yes" : "no")
       << " pure=" << (r.pure ? "yes" : "no") << " M-pure=" << (r.m_pure ? "yes" : "no")
       << " M-additive=" << (r.m_additive ? "yes" : "no")
       << " M-symmetric=" << (r.m_symmetric ? "yes" : "no")
       << " gr_bar_gorenstein=" << (r.gr_bar_gorenstein ? "yes" : "no")
       << " gr_gorenstein=" << (r.gr_gorenstein ? "yes" : "no") << "\n";
    return os.str();
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    os << "property: " << r.property << "\n";
    os << "description: " << r.description << "\n";
    os << "checked: " << r.checked << ", passed: " << r.passed << ", failed: " << r.failed
       << "\n";
    for (const std::string& n : r.notes) os << "note: " << n << "\n";
    for (const Witness& w : r.witnesses) {
        os << "witness: <" << format_generators(w.generators) << "> " << w.message << "\n";
        if (w.has_report) {
            os << "  delta=" << w.report.delta << " gamma=" << w.report.gamma
               << " ord(C)=" << w.report.ord_conductor << " tau=" << w.report.tau
               << " g(a_1)=" << w.report.g_a1 << " r=" << w.report.reduction_number << "\n";
        }
    }
    os << (r.failed == 0 ? "RESULT: ok" : "RESULT: FAILURES") << "\n";
    return os.str();
}

} // namespace nsg
