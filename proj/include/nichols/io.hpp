#pragma once

#include "nichols/coproduct.hpp"
#include "nichols/dimension.hpp"
#include "nichols/relations.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

constexpr int schema_version = 1;
constexpr int default_max_theta = 8;

/// Malformed input, with the location of the offending item.
class InputError : public std::runtime_error {
public:
    InputError(const std::string& location, const std::string& what)
        : std::runtime_error(location + ": " + what), location_(location) {}
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

/// A braiding as read from JSON: q_ij = zeta_N^{k_ij}.
struct BraidingInput {
    int theta = 0;
    int conductor = 0;
    std::vector<std::vector<int>> q_exponents;

    BraidingMatrix braiding() const { return BraidingMatrix(theta, conductor, q_exponents); }
};

namespace detail {

inline std::string line_column(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

inline int int_field(const nlohmann::json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw InputError(where, "missing field \"" + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw InputError(where + "." + key, "expected an integer");
    return v.get<int>();
}

}  // namespace detail

/// Parses {"theta": t, "conductor": N, "q_exponents": [[...], ...]} with 1 <= t <= max_theta and 0 <= k_ij < N.
inline BraidingInput parse_braiding_input(const std::string& text, const std::string& source = "input",
                                          int max_theta = default_max_theta) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(source + ":" + detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
    }
    if (!j.is_object()) throw InputError(source, "expected a JSON object");
    if (j.contains("schema_version")) {
        const auto& v = j.at("schema_version");
        if (!v.is_number_integer() || v.get<int>() != schema_version)
            throw InputError(source + ".schema_version", "unsupported schema version");
    }
    BraidingInput in;
    in.theta = detail::int_field(j, "theta", source);
    in.conductor = detail::int_field(j, "conductor", source);
    if (in.theta < 1 || in.theta > max_theta)
        throw InputError(source + ".theta", "must lie in [1, " + std::to_string(max_theta) + "]");
    if (in.conductor < 1) throw InputError(source + ".conductor", "must be positive");
    if (!j.contains("q_exponents")) throw InputError(source, "missing field \"q_exponents\"");
    const auto& q = j.at("q_exponents");
    const std::string qloc = source + ".q_exponents";
    if (!q.is_array() || static_cast<int>(q.size()) != in.theta)
        throw InputError(qloc, "expected " + std::to_string(in.theta) + " rows");
    for (int r = 0; r < in.theta; ++r) {
        const auto& row = q.at(static_cast<std::size_t>(r));
        const std::string rloc = qloc + "[" + std::to_string(r) + "]";
        if (!row.is_array() || static_cast<int>(row.size()) != in.theta)
            throw InputError(rloc, "expected " + std::to_string(in.theta) + " entries");
        std::vector<int> out;
        for (int c = 0; c < in.theta; ++c) {
            const auto& e = row.at(static_cast<std::size_t>(c));
            const std::string eloc = rloc + "[" + std::to_string(c) + "]";
            if (!e.is_number_integer()) throw InputError(eloc, "expected an integer");
            const long long k = e.get<long long>();
            if (k < 0 || k >= in.conductor)
                throw InputError(eloc, "exponent must lie in [0, " + std::to_string(in.conductor) + ")");
            out.push_back(static_cast<int>(k));
        }
        in.q_exponents.push_back(std::move(out));
    }
    return in;
}

// ---------------------------------------------------------------------------
// Reports

inline nlohmann::json braiding_json(const BraidingMatrix& B) {
    return {{"theta", B.theta()}, {"conductor", B.conductor()}, {"q_exponents", B.exponents()}};
}

inline nlohmann::json m_matrix_json(const MMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : m) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& e : row) r.push_back(e ? nlohmann::json(*e) : nlohmann::json(nullptr));
        out.push_back(r);
    }
    return out;
}

inline nlohmann::json class_json(const StandardClass& c) {
    nlohmann::json j{{"family", c.family()}, {"name", c.to_string()}, {"standard", c.standard()}};
    if (auto* d = std::get_if<ClassDisconnected>(&c.v)) {
        j["components"] = nlohmann::json::array();
        for (std::size_t i = 0; i < d->components.size(); ++i) {
            nlohmann::json comp = class_json(d->components[i]);
            comp["vertex_set"] = d->vertex_sets[i];
            j["components"].push_back(comp);
        }
    } else if (auto* n = std::get_if<ClassNotStandard>(&c.v)) {
        j["reason"] = n->reason;
    } else {
        j["vertices"] = c.vertices();
    }
    return j;
}

inline nlohmann::json prefix_json(const HilbertPrefix& H) {
    std::vector<std::pair<Degree, long long>> nonzero;
    for (const auto& [d, n] : H.dims)
        if (n != 0) nonzero.emplace_back(d, n);
    std::stable_sort(nonzero.begin(), nonzero.end(),
                     [](const auto& a, const auto& b) { return total_degree(a.first) < total_degree(b.first); });
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& [d, n] : nonzero) dims.push_back({{"degree", root_to_string(d)}, {"dim", n}});
    return {{"cap", H.cap}, {"total", H.total()}, {"dims", dims}};
}

inline nlohmann::json mismatches_json(const std::vector<PrefixMismatch>& ms) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& m : ms)
        out.push_back({{"degree", root_to_string(m.degree)}, {"expected", m.expected}, {"actual", m.actual}});
    return out;
}

inline nlohmann::json analyze_json(const BraidingMatrix& B) {
    const MMatrix m = m_matrix(B);
    nlohmann::json j{{"braiding", braiding_json(B)}, {"m_matrix", m_matrix_json(m)}};
    if (all_defined(m)) {
        const CartanMatrix C = cartan_matrix(m);
        j["cartan_matrix"] = C.a;
        j["cartan_type"] = finite_type(C).describe();
    } else {
        j["cartan_matrix"] = nullptr;
        j["cartan_type"] = "undefined";
    }
    try {
        const StandardResult s = is_standard(B);
        j["standard"] = s.standard;
        j["orbit_size"] = s.orbit.size();
        if (!s.standard) j["reason"] = s.reason;
    } catch (const std::runtime_error& e) {
        j["standard"] = nullptr;
        j["reason"] = e.what();
    }
    j["classification"] = class_json(classify_standard(B));
    return j;
}

inline nlohmann::json reflect_json(const BraidingMatrix& B, int vertex) {
    const BraidingMatrix R = reflect(B, vertex);
    std::vector<std::optional<int>> row;
    for (int j = 1; j <= B.theta(); ++j) row.push_back(cartan_entry(B, vertex, j));
    return {{"vertex", vertex}, {"m_row", m_matrix_json({row})[0]}, {"reflected", braiding_json(R)}};
}

inline nlohmann::json orbit_json(const BraidingMatrix& B) {
    const StandardResult s = is_standard(B);
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : s.orbit)
        pts.push_back({{"basis", p.basis_matrix}, {"braiding", braiding_json(p.braiding)}, {"m_matrix", m_matrix_json(p.m)}});
    nlohmann::json j{{"standard", s.standard}, {"size", s.orbit.size()}, {"points", pts}};
    if (!s.standard) j["reason"] = s.reason;
    return j;
}

inline nlohmann::json roots_json(const BraidingMatrix& B) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : root_vectors(B)) {
        Word w;
        for (int a : r.lyndon) w.push_back(r.letters[static_cast<std::size_t>(a - 1)]);
        out.push_back({{"root", root_to_string(r.alpha)},
                       {"word", word_to_string(w)},
                       {"root_vector", r.expr.to_string()},
                       {"height", r.height ? nlohmann::json(*r.height) : nlohmann::json("infinite")}});
    }
    return {{"count", out.size()}, {"roots", out}};
}

inline nlohmann::json pbw_json(const PbwGenerators& g) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : g.roots)
        out.push_back({{"word", word_to_string(r.lyndon)},
                       {"degree", root_to_string(r.alpha)},
                       {"height", r.height ? nlohmann::json(*r.height) : nlohmann::json("infinite")}});
    return {{"cap", g.cap}, {"partial", g.partial}, {"generators", out}};
}

inline nlohmann::json dim_json(const BraidingMatrix& B) {
    const NicholsDimension d = dim_nichols(B);
    const StandardClass c = classify_standard(B);
    const mpz_class f = closed_formula_dim(c);
    const mpz_class p = printed_formula_dim(c);
    nlohmann::json heights = nlohmann::json::array();
    for (const auto& [a, h] : d.heights)
        heights.push_back({{"root", root_to_string(a)}, {"height", h ? nlohmann::json(*h) : nlohmann::json("infinite")}});
    auto num = [](const mpz_class& z) -> nlohmann::json {
        if (z.fits_slong_p()) return z.get_si();
        return z.get_str();
    };
    return {{"class", c.to_string()},
            {"oracle", d.finite ? num(d.value) : nlohmann::json("infinite")},
            {"formula", num(f)},
            {"printed_formula", num(p)},
            {"agree", d.finite && d.value == f},
            {"heights", heights}};
}

inline nlohmann::json presentation_json(const PresentationReport& r) {
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& c : r.relations)
        rels.push_back({{"label", c.label},
                        {"relation", c.expr},
                        {"degree", root_to_string(c.degree)},
                        {"status", !c.checked ? "unchecked" : c.holds ? "pass" : "fail"}});
    return {{"cap", r.cap},
            {"relations", rels},
            {"relations_ok", r.relations_ok()},
            {"hilbert_ok", r.hilbert_ok()},
            {"expected", prefix_json(r.expected)},
            {"actual", prefix_json(r.actual)},
            {"mismatches", mismatches_json(r.mismatches)},
            {"ok", r.ok()}};
}

inline nlohmann::json identity_json(const IdentityCheck& c) {
    nlohmann::json j{{"identity", c.label()}, {"hypotheses", c.hypotheses}, {"holds", c.holds}, {"exact", c.exact}};
    if (!c.note.empty()) j["note"] = c.note;
    if (!c.constants.empty()) {
        nlohmann::json k = nlohmann::json::object();
        for (const auto& [name, v] : c.constants) k[name] = v ? nlohmann::json(v->to_string()) : nlohmann::json("undetermined");
        j["constants"] = k;
        if (!c.constants_ideal.empty()) j["constants_modulo"] = c.constants_ideal;
    }
    if (c.printed_holds) j["printed_product_holds"] = *c.printed_holds;
    return j;
}

inline nlohmann::json coproduct_json(const CoproductReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks) checks.push_back(identity_json(c));
    nlohmann::json j{{"checks", checks}, {"ok", r.ok()}};
    if (r.orthogonality)
        j["pbw_orthogonality"] = {{"max_degree", r.orthogonality->max_degree},
                                  {"monomials", r.orthogonality->monomials},
                                  {"pairs", r.orthogonality->pairs_checked},
                                  {"nonzero_off_diagonal", r.orthogonality->nonzero_off_diagonal},
                                  {"norm_mismatches", r.orthogonality->norm_mismatches},
                                  {"ok", r.orthogonality->ok()}};
    return j;
}

inline nlohmann::json enumeration_json(const Enumeration& e) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& it : e.items) items.push_back({{"class", it.expected.to_string()}, {"braiding", braiding_json(it.braiding)}});
    return {{"count", e.items.size()}, {"items", items}, {"diagnostics", e.diagnostics}};
}

}  // namespace nichols
