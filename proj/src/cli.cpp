#include "nsg/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "nsg/formulas.hpp"
#include "nsg/report_json.hpp"

namespace nsg::cli {

namespace {

struct BoundFlags {
    Int genus_max = -1;
    Int multiplicity = -1;
    Int multiplicity_max = -1;
    Int frobenius_max = -1;
    std::string filter = "all";
    std::string mode = "genus";
};

void add_bound_flags(CLI::App* cmd, BoundFlags& b) {
    cmd->add_option("--genus-max", b.genus_max, "largest genus to enumerate");
    cmd->add_option("--multiplicity", b.multiplicity, "keep only this multiplicity");
    cmd->add_option("--max-multiplicity", b.multiplicity_max, "upper bound on multiplicity");
    cmd->add_option("--frobenius-max", b.frobenius_max, "largest Frobenius number");
    cmd->add_option("--filter", b.filter,
                    "all|symmetric|pure|m_pure|m_additive|m_symmetric")
        ->capture_default_str();
    cmd->add_option("--mode", b.mode, "genus|frobenius enumeration")->capture_default_str();
}

EnumSpec spec_from_flags(const BoundFlags& b) {
    EnumSpec spec;
    if (b.mode == "frobenius" || (b.mode == "genus" && b.genus_max < 0 && b.frobenius_max >= 0)) {
        spec.mode = EnumSpec::Mode::ByMultiplicityAndFrobenius;
        spec.frobenius_max = b.frobenius_max >= 0 ? b.frobenius_max : 20;
    } else {
        spec.mode = EnumSpec::Mode::ByGenus;
        spec.genus_max = b.genus_max;
        if (b.frobenius_max >= 0) spec.frobenius_max = b.frobenius_max;
    }
    if (b.multiplicity >= 1) spec.multiplicity = b.multiplicity;
    if (b.multiplicity_max >= 1) spec.multiplicity_max = b.multiplicity_max;
    spec.filter = b.filter;
    return spec;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

int run_analyze(const std::string& gens, const std::string& format, std::ostream& out) {
    NumericalSemigroup s = NumericalSemigroup::parse(gens);
    SemigroupReport r = analyze(s);
    if (format == "json") {
        out << to_json(r);
    } else {
        out << to_text(r);
    }
    return 0;
}

int run_goto(const std::string& gens, Int element, bool with_oracle, const std::string& format,
             std::ostream& out) {
    NumericalSemigroup s = NumericalSemigroup::parse(gens);
    const Int g = goto_number(s, element);
    const std::vector<Int> as = a_set(s, element);
    const GotoBounds b = goto_bounds(s, element);
    const FamilyTag tag = detect_family(s);
    const std::optional<Int> closed = goto_closed_form(s, element, tag);
    std::optional<Int> oracle;
    if (with_oracle) oracle = goto_number_oracle(s, element);

    std::ostringstream os;
    if (format == "json") {
        os << "{\n";
        os << "  \"element\": " << element << ",\n";
        os << "  \"goto_number\": " << g << ",\n";
        os << "  \"a_set\": [" << format_generators(as) << "],\n";
        os << "  \"bounds\": {\"lower\": " << b.lower << ", \"upper\": " << b.upper << "},\n";
        os << "  \"family\": \"" << family_name(tag.family) << "\",\n";
        os << "  \"closed_form\": " << (closed ? std::to_string(*closed) : "null");
        if (oracle) os << ",\n  \"oracle\": " << *oracle;
        os << "\n}\n";
    } else {
        os << "S = <" << format_generators(s.generators()) << ">\n";
        os << "g(" << element << ") = " << g << "\n";
        os << "A(" << element << ") = {" << format_generators(as) << "}\n";
        os << "bounds: " << b.lower << " <= g <= " << b.upper << "\n";
        os << "family: " << family_name(tag.family);
        if (closed) os << ", closed form: " << *closed;
        os << "\n";
        if (oracle) os << "oracle: " << *oracle << "\n";
    }
    out << os.str();
    return 0;
}

int run_enumerate(const EnumSpec& spec, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << "[";
        bool first = true;
        enumerate_semigroups(spec, [&](const NumericalSemigroup& s) {
            out << (first ? "" : ",") << "\n  [" << format_generators(s.generators()) << "]";
            first = false;
        });
        out << "\n]\n";
    } else if (format == "csv") {
        out << "generators,multiplicity,embedding_dim,frobenius,genus\n";
        enumerate_semigroups(spec, [&](const NumericalSemigroup& s) {
            out << csv_quote(format_generators(s.generators())) << "," << s.multiplicity()
                << "," << s.embedding_dim() << "," << s.frobenius() << "," << s.genus()
                << "\n";
        });
    } else {
        enumerate_semigroups(spec, [&](const NumericalSemigroup& s) {
            out << format_generators(s.generators()) << "\n";
        });
    }
    return 0;
}

int run_verify(const std::string& property, const EnumSpec& spec, int jobs,
               const std::string& format, std::ostream& out) {
    VerificationReport report = verify(property, spec, jobs);
    if (format == "json") {
        out << to_json(report);
    } else if (format == "csv") {
        out << "property,checked,passed,failed\n";
        out << csv_quote(report.property) << "," << report.checked << "," << report.passed
            << "," << report.failed << "\n";
        if (!report.witnesses.empty()) {
            out << "witness_generators,message\n";
            for (const Witness& w : report.witnesses) {
                out << csv_quote(format_generators(w.generators)) << ","
                    << csv_quote(w.message) << "\n";
            }
        }
    } else {
        out << to_text(report);
    }
    return report.failed == 0 ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Goto numbers and Gorenstein classification of numerical semigroups"};
    app.require_subcommand(1);

    std::string generators;
    std::string format = "text";
    Int element = -1;
    bool with_oracle = false;
    std::string property;
    bool list_props = false;
    int jobs = 0;
    BoundFlags bounds;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "full invariant report");
    analyze_cmd->add_option("generators", generators, "comma-separated generators")->required();
    analyze_cmd->add_option("--format", format, "text|json")->capture_default_str();

    CLI::App* goto_cmd = app.add_subcommand("goto", "Goto number of one element");
    goto_cmd->add_option("generators", generators, "comma-separated generators")->required();
    goto_cmd->add_option("--element", element, "nonzero element of S")->required();
    goto_cmd->add_flag("--oracle", with_oracle, "also run the brute-force definition");
    goto_cmd->add_option("--format", format, "text|json")->capture_default_str();

    CLI::App* verify_cmd = app.add_subcommand("verify", "check a named property");
    verify_cmd->add_option("--property", property, "property id (see --list)");
    verify_cmd->add_flag("--list", list_props, "list the available properties");
    verify_cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    verify_cmd->add_option("--format", format, "text|json|csv")->capture_default_str();
    add_bound_flags(verify_cmd, bounds);

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "list semigroups within bounds");
    enum_cmd->add_option("--format", format, "text|json|csv")->capture_default_str();
    add_bound_flags(enum_cmd, bounds);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend()); // CLI11 convention
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (analyze_cmd->parsed()) {
            if (format != "text" && format != "json") {
                err << "usage error: analyze supports --format text|json\n";
                return 2;
            }
            return run_analyze(generators, format, out);
        }
        if (goto_cmd->parsed()) {
            if (format != "text" && format != "json") {
                err << "usage error: goto supports --format text|json\n";
                return 2;
            }
            return run_goto(generators, element, with_oracle, format, out);
        }
        if (verify_cmd->parsed()) {
            if (list_props) {
                for (const PropertyInfo& p : list_properties()) {
                    out << p.id << ": " << p.summary << "\n";
                }
                return 0;
            }
            if (property.empty()) {
                err << "usage error: verify needs --property or --list\n";
                return 2;
            }
            return run_verify(property, spec_from_flags(bounds), jobs, format, out);
        }
        if (enum_cmd->parsed()) {
            EnumSpec spec = spec_from_flags(bounds);
            if (spec.mode == EnumSpec::Mode::ByGenus && spec.genus_max < 0) spec.genus_max = 8;
            return run_enumerate(spec, format, out);
        }
    } catch (const UnknownProperty& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidSpec& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyGenerators& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace nsg::cli
