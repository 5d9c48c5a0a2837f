#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nsg/enumerate.hpp"
#include "nsg/formulas.hpp"
#include "nsg/report_json.hpp"
#include "nsg/verify.hpp"

namespace py = pybind11;
using namespace nsg;

namespace {

NumericalSemigroup make_semigroup(const py::object& gens) {
    if (py::isinstance<py::str>(gens)) {
        return NumericalSemigroup::parse(gens.cast<std::string>());
    }
    const auto values = gens.cast<std::vector<Int>>();
    return NumericalSemigroup::from_generators(
        std::span<const Int>(values.data(), values.size()));
}

py::dict report_dict(const NumericalSemigroup& s) {
    const SemigroupReport r = analyze(s);
    py::dict flags;
    flags["symmetric"] = r.symmetric;
    flags["pure"] = r.pure;
    flags["m_pure"] = r.m_pure;
    flags["m_additive"] = r.m_additive;
    flags["m_symmetric"] = r.m_symmetric;
    flags["gr_bar_gorenstein"] = r.gr_bar_gorenstein;
    flags["gr_gorenstein"] = r.gr_gorenstein;
    py::dict gn;
    for (auto [w, g] : r.goto_numbers) gn[py::int_(w)] = g;
    py::dict d;
    d["generators"] = r.generators;
    d["multiplicity"] = r.multiplicity;
    d["embedding_dim"] = r.embedding_dim;
    d["frobenius"] = r.frobenius;
    d["genus"] = r.genus;
    d["apery_w"] = r.apery_w;
    d["apery_v"] = r.apery_v;
    d["hat"] = r.hat;
    d["t_set"] = r.t_set;
    d["goto_vector"] = r.goto_vector;
    d["tau"] = r.tau;
    d["rho"] = r.rho;
    d["goto_numbers"] = gn;
    d["delta"] = r.delta;
    d["gamma"] = r.gamma;
    d["ord_conductor"] = r.ord_conductor;
    d["g_a1"] = r.g_a1;
    d["reduction_number"] = r.reduction_number;
    d["beta"] = r.beta;
    d["flags"] = flags;
    return d;
}

EnumSpec spec_from_kwargs(std::optional<Int> genus_max, std::optional<Int> multiplicity,
                          std::optional<Int> multiplicity_max, std::optional<Int> frobenius_max,
                          const std::string& filter) {
    EnumSpec spec;
    if (genus_max) {
        spec.genus_max = *genus_max;
        if (frobenius_max) spec.frobenius_max = frobenius_max;
    } else if (frobenius_max) {
        spec.mode = EnumSpec::Mode::ByMultiplicityAndFrobenius;
        spec.frobenius_max = frobenius_max;
    } else {
        spec.genus_max = 8;
    }
    spec.multiplicity = multiplicity;
    spec.multiplicity_max = multiplicity_max;
    spec.filter = filter;
    return spec;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Goto numbers and Gorenstein classification of numerical semigroup rings";

    py::register_exception<NotNumerical>(m, "NotNumericalError", PyExc_ValueError);
    py::register_exception<NotAMember>(m, "NotAMemberError", PyExc_ValueError);
    py::register_exception<RequiresProperSemigroup>(m, "RequiresProperSemigroupError",
                                                    PyExc_ValueError);
    py::register_exception<InvalidSpec>(m, "InvalidSpecError", PyExc_ValueError);
    py::register_exception<UnknownProperty>(m, "UnknownPropertyError", PyExc_KeyError);

    py::class_<NumericalSemigroup>(m, "Semigroup")
        .def(py::init(&make_semigroup), py::arg("generators"),
             "Build from a generator list or a string like '4,5,7'.")
        .def_property_readonly("generators", &NumericalSemigroup::generators)
        .def_property_readonly("multiplicity", &NumericalSemigroup::multiplicity)
        .def_property_readonly("embedding_dim", &NumericalSemigroup::embedding_dim)
        .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
        .def_property_readonly("gaps", &NumericalSemigroup::gaps)
        .def_property_readonly("genus", &NumericalSemigroup::genus)
        .def("contains", &NumericalSemigroup::contains, py::arg("n"))
        .def("__contains__", &NumericalSemigroup::contains)
        .def("ord", &NumericalSemigroup::ord, py::arg("n"))
        .def("apery_set", &NumericalSemigroup::apery_set, py::arg("n"))
        .def("apery",
             [](const NumericalSemigroup& s) {
                 const AperyTable& t = s.apery();
                 py::dict d;
                 d["w"] = t.w;
                 d["v"] = t.v;
                 d["hat"] = t.hat;
                 return d;
             })
        .def("t_set", &NumericalSemigroup::t_set)
        .def("max_min_apery",
             [](const NumericalSemigroup& s, const std::string& relation) {
                 const MinMaxApery mm = s.max_min_apery(
                     relation == "M" ? Relation::M : Relation::Plain);
                 return py::make_tuple(mm.min_set, mm.max_set);
             },
             py::arg("relation") = "plain")
        .def("a_set", [](const NumericalSemigroup& s, Int u) { return a_set(s, u); },
             py::arg("u"))
        .def("goto_vector",
             [](const NumericalSemigroup& s) {
                 const GotoVector& gv = goto_vector(s);
                 py::dict d;
                 d["sigma"] = gv.sigma;
                 d["tau"] = gv.tau;
                 d["rho"] = gv.rho;
                 return d;
             })
        .def("goto_number", [](const NumericalSemigroup& s, Int u) { return goto_number(s, u); },
             py::arg("u"))
        .def("goto_number_oracle",
             [](const NumericalSemigroup& s, Int u) { return goto_number_oracle(s, u); },
             py::arg("u"))
        .def("goto_bounds",
             [](const NumericalSemigroup& s, Int u) {
                 const GotoBounds b = goto_bounds(s, u);
                 py::dict d;
                 d["lower"] = b.lower;
                 d["upper"] = b.upper;
                 if (b.upper_at_a1) d["upper_at_a1"] = *b.upper_at_a1;
                 if (b.lower_at_anu) d["lower_at_anu"] = *b.lower_at_anu;
                 return d;
             },
             py::arg("u"))
        .def("is_symmetric", [](const NumericalSemigroup& s) { return is_symmetric(s); })
        .def("purity",
             [](const NumericalSemigroup& s) {
                 const Purity p = purity(s);
                 return py::make_tuple(p.pure, p.m_pure);
             })
        .def("is_m_additive", [](const NumericalSemigroup& s) { return is_m_additive(s); })
        .def("reduction_number",
             [](const NumericalSemigroup& s) { return reduction_number(s); })
        .def("delta_gamma",
             [](const NumericalSemigroup& s) {
                 const DeltaGamma dg = delta_gamma(s);
                 py::dict d;
                 d["delta"] = dg.delta;
                 d["gamma"] = dg.gamma;
                 d["delta_i"] = dg.delta_i;
                 d["gamma_i"] = dg.gamma_i;
                 return d;
             })
        .def("beta_vector", [](const NumericalSemigroup& s) { return beta_vector(s); })
        .def("conductor_order",
             [](const NumericalSemigroup& s) { return conductor_order(s); })
        .def("family",
             [](const NumericalSemigroup& s) {
                 const FamilyTag tag = detect_family(s);
                 py::dict d;
                 d["family"] = family_name(tag.family);
                 if (tag.q >= 0) d["q"] = tag.q;
                 if (tag.d >= 0) d["d"] = tag.d;
                 if (!tag.case_id.empty()) d["case"] = tag.case_id;
                 return d;
             })
        .def("goto_closed_form",
             [](const NumericalSemigroup& s, Int u) { return goto_closed_form(s, u); },
             py::arg("u"))
        .def("report", &report_dict)
        .def("report_json",
             [](const NumericalSemigroup& s) { return to_json(analyze(s)); })
        .def("__eq__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) {
            return a == b;
        })
        .def("__repr__", [](const NumericalSemigroup& s) {
            return "<" + format_generators(s.generators()) + ">";
        });

    m.def(
        "enumerate_semigroups",
        [](std::optional<Int> genus_max, std::optional<Int> multiplicity,
           std::optional<Int> multiplicity_max, std::optional<Int> frobenius_max,
           const std::string& filter) {
            std::vector<std::vector<Int>> out = enumerate_generator_lists(
                spec_from_kwargs(genus_max, multiplicity, multiplicity_max, frobenius_max,
                                 filter));
            return out;
        },
        py::arg("genus_max") = py::none(), py::arg("multiplicity") = py::none(),
        py::arg("multiplicity_max") = py::none(), py::arg("frobenius_max") = py::none(),
        py::arg("filter") = "all");

    m.def(
        "verify",
        [](const std::string& property, std::optional<Int> genus_max,
           std::optional<Int> multiplicity, std::optional<Int> multiplicity_max,
           std::optional<Int> frobenius_max, const std::string& filter, int jobs) {
            EnumSpec spec;
            if (genus_max) {
                spec.genus_max = *genus_max;
            } else if (frobenius_max) {
                spec.mode = EnumSpec::Mode::ByMultiplicityAndFrobenius;
                spec.frobenius_max = frobenius_max;
            }
            spec.multiplicity = multiplicity;
            spec.multiplicity_max = multiplicity_max;
            spec.filter = filter;
            const VerificationReport r = verify(property, spec, jobs);
            py::list witnesses;
            for (const Witness& w : r.witnesses) {
                py::dict wd;
                wd["generators"] = w.generators;
                wd["message"] = w.message;
                witnesses.append(wd);
            }
            py::dict d;
            d["property"] = r.property;
            d["description"] = r.description;
            d["checked"] = r.checked;
            d["passed"] = r.passed;
            d["failed"] = r.failed;
            d["witnesses"] = witnesses;
            d["notes"] = r.notes;
            return d;
        },
        py::arg("property"), py::arg("genus_max") = py::none(),
        py::arg("multiplicity") = py::none(), py::arg("multiplicity_max") = py::none(),
        py::arg("frobenius_max") = py::none(), py::arg("filter") = "all",
        py::arg("jobs") = 0);

    m.def("properties", [] {
        py::dict d;
        for (const PropertyInfo& p : list_properties()) d[py::str(p.id)] = p.summary;
        return d;
    });

    m.attr("__version__") = "0.1.0";
}
