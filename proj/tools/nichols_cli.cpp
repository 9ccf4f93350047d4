#include "nichols.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;

void render_text(const json& j, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [](const json& v) {
        if (!v.is_array()) return false;
        for (const auto& x : v)
            if (x.is_structured() && !(x.is_array() && std::all_of(x.begin(), x.end(), [](const json& y) { return !y.is_structured(); })))
                return false;
        return true;
    };
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !flat(v)) {
                os << pad << k << ":\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object()) {
                std::ostringstream inner;
                render_text(v, inner, indent + 2);
                std::string s = inner.str();
                s.replace(static_cast<std::size_t>(indent), 2, "- ");
                os << s;
            } else {
                os << pad << "- " << (v.is_structured() ? v.dump() : scalar(v)) << "\n";
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

nichols::BraidingMatrix load(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(path);
        if (!f) throw nichols::InputError(path, "cannot open file");
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    return nichols::parse_braiding_input(text, path).braiding();
}

void check_cap(int cap) {
    if (cap < 1) throw nichols::InputError("--cap", "must be positive");
    if (cap > nichols::max_degree_cap())
        throw nichols::InputError("--cap", "exceeds the maximum " + std::to_string(nichols::max_degree_cap()) +
                                               " (set NICHOLS_MAX_CAP to raise it)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nichols algebras of diagonal type: classification, PBW data, dimensions and presentations"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit the report as JSON");

    std::string input;
    int vertex = 0;
    int cap = 8;
    int relation_limit = 0;
    std::string family;
    int theta = 0, conductor = 0;

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Braiding JSON file, - for stdin")->required();
        sub->fallthrough();
        return sub;
    };
    auto* analyze = with_input(app.add_subcommand("analyze", "Cartan integers, standardness and classification"));
    auto* reflect_cmd = with_input(app.add_subcommand("reflect", "Reflected braiding at a vertex"));
    reflect_cmd->add_option("--vertex", vertex, "Vertex 1..theta")->required();
    auto* orbit = with_input(app.add_subcommand("orbit", "Weyl groupoid orbit"));
    auto* roots = with_input(app.add_subcommand("roots", "Positive roots with Lyndon words and root vectors"));
    auto* pbw = with_input(app.add_subcommand("pbw", "PBW generators read off the Nichols quotient"));
    pbw->add_option("--cap", cap, "Total degree cap");
    auto* hilbert = with_input(app.add_subcommand("hilbert", "Graded dimensions up to a total degree"));
    hilbert->add_option("--cap", cap, "Total degree cap");
    auto* dim = with_input(app.add_subcommand("dim", "Dimension from heights and from the closed formula"));
    auto* relations_cmd = with_input(app.add_subcommand("check-relations", "Verify the defining relations"));
    relations_cmd->add_option("--cap", cap, "Total degree cap for the Hilbert comparison");
    relations_cmd->add_option("--relation-limit", relation_limit, "Skip relations above this total degree");
    auto* coproducts = with_input(app.add_subcommand("check-coproducts", "Verify the coproduct identities"));
    auto* enumerate = app.add_subcommand("enumerate", "Standard braidings of a family");
    enumerate->fallthrough();
    enumerate->add_option("--family", family, "A, B or G")->required()->check(CLI::IsMember({"A", "B", "G"}));
    enumerate->add_option("--theta", theta, "Rank")->required();
    enumerate->add_option("--conductor", conductor, "Order of the parameter")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    json report{{"schema_version", nichols::schema_version}};
    int status = exit_ok;
    try {
        if (*enumerate) {
            if (theta < 1 || conductor < 1) throw nichols::InputError("--theta/--conductor", "must be positive");
            report["command"] = "enumerate";
            report["result"] = nichols::enumeration_json(nichols::enumerate_standard(family[0], theta, conductor));
        } else {
            const nichols::BraidingMatrix B = load(input);
            if (*analyze) {
                report["command"] = "analyze";
                report["result"] = nichols::analyze_json(B);
            } else if (*reflect_cmd) {
                if (vertex < 1 || vertex > B.theta())
                    throw nichols::InputError("--vertex", "must lie in [1, " + std::to_string(B.theta()) + "]");
                report["command"] = "reflect";
                report["result"] = nichols::reflect_json(B, vertex);
            } else if (*orbit) {
                report["command"] = "orbit";
                report["result"] = nichols::orbit_json(B);
            } else if (*roots) {
                report["command"] = "roots";
                report["result"] = nichols::roots_json(B);
            } else if (*pbw) {
                check_cap(cap);
                report["command"] = "pbw";
                report["result"] = nichols::pbw_json(nichols::pbw_generators(B, cap));
            } else if (*hilbert) {
                check_cap(cap);
                report["command"] = "hilbert";
                report["result"] = nichols::prefix_json(nichols::hilbert_prefix(B, cap));
            } else if (*dim) {
                report["command"] = "dim";
                report["result"] = nichols::dim_json(B);
                if (!report["result"]["agree"].get<bool>()) status = exit_failed;
            } else if (*relations_cmd) {
                check_cap(cap);
                report["command"] = "check-relations";
                const auto r = nichols::verify_presentation(B, cap, relation_limit);
                report["result"] = nichols::presentation_json(r);
                if (!r.ok()) status = exit_failed;
            } else if (*coproducts) {
                report["command"] = "check-coproducts";
                const auto r = nichols::coproduct_identities_check(B);
                report["result"] = nichols::coproduct_json(r);
                if (!r.ok()) status = exit_failed;
            }
        }
    } catch (const nichols::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    }
    if (as_json)
        std::cout << report.dump(2) << "\n";
    else
        render_text(report, std::cout, 0);
    return status;
}
