#pragma once

#include "nichols/dimension.hpp"
#include "nichols/gram.hpp"
#include "nichols/quotient.hpp"
#include "nichols/roots.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

/// Noncommutative expression in the generators built from letters, braided commutators and powers.
class Expr {
public:
    enum class Kind { Letter, Comm, Pow, Diff };

    static Expr letter(int i) {
        Expr e;
        e.node_ = std::make_shared<Node>(Node{Kind::Letter, i, 0, {}, {}, {}});
        return e;
    }
    static Expr comm(const Expr& a, const Expr& b) {
        Expr e;
        e.node_ = std::make_shared<Node>(Node{Kind::Comm, 0, 0, a.node_, b.node_, {}});
        return e;
    }
    static Expr pow(const Expr& a, int n) {
        if (n < 0) throw std::domain_error("Expr::pow: negative exponent");
        Expr e;
        e.node_ = std::make_shared<Node>(Node{Kind::Pow, 0, n, a.node_, {}, {}});
        return e;
    }
    /// a - c b for a, b of the same degree.
    static Expr diff(const Expr& a, const CycScalar& c, const Expr& b) {
        Expr e;
        e.node_ = std::make_shared<Node>(Node{Kind::Diff, 0, 0, a.node_, b.node_, c});
        return e;
    }
    /// (ad_c x_i)^r (y)
    static Expr ad(int i, int r, const Expr& y) {
        Expr out = y;
        for (int t = 0; t < r; ++t) out = comm(letter(i), out);
        return out;
    }
    static Expr ad(int i, int r, int j) { return ad(i, r, letter(j)); }

    /// Shirshov bracketing of a Lyndon word u, with letter a of u standing for x_{letters[a-1]}.
    static Expr bracket(const Word& u, const std::vector<int>& letters) {
        if (!is_lyndon(u)) throw std::domain_error("Expr::bracket: word is not Lyndon");
        if (u.size() == 1) return letter(letters.at(static_cast<std::size_t>(u[0] - 1)));
        auto [v, w] = shirshov_decomposition(u);
        return comm(bracket(v, letters), bracket(w, letters));
    }
    static Expr bracket(const Word& u) {
        std::vector<int> id(u.empty() ? 0 : static_cast<std::size_t>(*std::max_element(u.begin(), u.end())));
        std::iota(id.begin(), id.end(), 1);
        return bracket(u, id);
    }

    Kind kind() const { return node_->kind; }

    Degree degree(int theta) const {
        Degree d(theta, 0);
        add_degree(*node_, d, 1);
        return d;
    }

    std::string to_string() const { return render(*node_); }

    /// The element of T(V).
    NcPoly expand(const BraidingMatrix& B) const { return expand(*node_, B); }

    /// The class in B(V).
    NicholsQuotient::Element evaluate(NicholsQuotient& Q) const { return evaluate(*node_, Q); }

private:
    struct Node {
        Kind kind;
        int letter;
        int exponent;
        std::shared_ptr<const Node> a, b;
        CycScalar scalar;
    };
    std::shared_ptr<const Node> node_;

    static void add_degree(const Node& n, Degree& d, int mult) {
        switch (n.kind) {
            case Kind::Letter:
                if (n.letter < 1 || n.letter > static_cast<int>(d.size()))
                    throw std::domain_error("Expr: letter out of range");
                d[n.letter - 1] += mult;
                break;
            case Kind::Comm:
                add_degree(*n.a, d, mult);
                add_degree(*n.b, d, mult);
                break;
            case Kind::Pow:
                add_degree(*n.a, d, mult * n.exponent);
                break;
            case Kind::Diff:
                add_degree(*n.a, d, mult);
                break;
        }
    }

    static std::string render(const Node& n) {
        switch (n.kind) {
            case Kind::Letter:
                return "x" + std::to_string(n.letter);
            case Kind::Comm:
                return "[" + render(*n.a) + ", " + render(*n.b) + "]_c";
            case Kind::Pow: {
                std::string base = render(*n.a);
                return (n.a->kind == Kind::Letter ? base : "(" + base + ")") + "^" + std::to_string(n.exponent);
            }
            case Kind::Diff:
                return render(*n.a) + " - (" + n.scalar.to_string() + ")*" + render(*n.b);
        }
        return {};
    }

    static NcPoly expand(const Node& n, const BraidingMatrix& B) {
        switch (n.kind) {
            case Kind::Letter:
                return NcPoly::letter(n.letter);
            case Kind::Comm:
                return braided_commutator(B, expand(*n.a, B), expand(*n.b, B));
            case Kind::Pow: {
                const NcPoly base = expand(*n.a, B);
                NcPoly out = NcPoly::one();
                for (int k = 0; k < n.exponent; ++k) out = base * out;
                return out;
            }
            case Kind::Diff:
                return expand(*n.a, B) - n.scalar * expand(*n.b, B);
        }
        return {};
    }

    static NicholsQuotient::Element evaluate(const Node& n, NicholsQuotient& Q) {
        switch (n.kind) {
            case Kind::Letter:
                return Q.letter(n.letter);
            case Kind::Comm:
                return Q.commutator(evaluate(*n.a, Q), evaluate(*n.b, Q));
            case Kind::Pow:
                return Q.power(evaluate(*n.a, Q), n.exponent);
            case Kind::Diff: {
                auto a = evaluate(*n.a, Q);
                auto b = evaluate(*n.b, Q);
                if (a.deg != b.deg) throw std::domain_error("Expr: difference of elements of different degrees");
                return Q.add(a, Q.scale(-n.scalar, b));
            }
        }
        return {};
    }
};

struct Relation {
    std::string label;
    Expr expr;
    Degree degree;
};

/// Root vector x_alpha of a root of a connected standard class, in the numbering of the braiding.
struct RootVector {
    Degree alpha;
    Word lyndon;               // canonical numbering of the class
    std::vector<int> letters;  // canonical position p+1 is vertex letters[p]
    Expr expr;
    std::optional<int> height;
};

namespace detail {

inline std::string root_label(const Degree& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        if (!s.empty()) s += "+";
        if (a[i] != 1) s += std::to_string(a[i]);
        s += "a" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

inline void connected_classes(const StandardClass& c, std::vector<StandardClass>& out) {
    if (auto* d = std::get_if<ClassDisconnected>(&c.v)) {
        for (const auto& comp : d->components) connected_classes(comp, out);
        return;
    }
    out.push_back(c);
}

inline StandardClass require_standard(const BraidingMatrix& B, const char* who) {
    StandardClass c = classify_standard(B);
    if (!c.standard()) throw std::domain_error(std::string(who) + ": braiding is not standard");
    return c;
}

inline bool has_order(const CycScalar& x, int n) {
    const auto o = mult_order(x);
    return o.finite() && o.order == n;
}

}  // namespace detail

/// Which form of the G2 relation [x_k, [x_k^2 x_j x_k x_j]_c]_c to emit.
enum class G22Form {
    /// [x_k, X]_c - beta [x_k^2 x_j]_c^2 with beta from g22_coefficient; lies in I(V).
    corrected,
    /// [x_k, X]_c alone.
    printed,
};

/// Coefficient beta with [x_k, [x_k^2 x_j x_k x_j]_c]_c = beta [x_k^2 x_j]_c^2 in B(V) for a standard braiding of
/// type G2 with m_kj = 3:
/// beta = a^5 d q_kj^3 q_jk^2 (1 - a^2 p)(1 - d)(1 - a^2 p d) / ((1 + a)(1 - q_{e_k+e_j})(1 - q_{2e_k+e_j}^2)),
/// a = q_kk, d = q_jj, p = q_kj q_jk.
inline CycScalar g22_coefficient(const BraidingMatrix& B, int k, int j) {
    const CycScalar one(1);
    const CycScalar a = B.q(k, k), d = B.q(j, j), p = B.q(k, j) * B.q(j, k);
    const CycScalar q1 = a * p * d;
    const CycScalar q2 = a * a * a * a * p * p * d;
    const CycScalar den = (one + a) * (one - q1) * (one - q2 * q2);
    if (den.is_zero()) throw std::domain_error("g22_coefficient: braiding is not of standard G2 type");
    const CycScalar mono = a * a * a * a * a * d * B.q(k, j) * B.q(k, j) * B.q(k, j) * B.q(j, k) * B.q(j, k);
    return mono * (one - a * a * p) * (one - d) * (one - a * a * p * d) * den.inverse();
}

/// Renders a degree as a sum of simple roots, e.g. "3a1+2a2".
inline std::string root_to_string(const Degree& a) { return detail::root_label(a); }

/// Root vectors of every positive root, from the per-root Lyndon words of each connected component.
inline std::vector<RootVector> root_vectors(const BraidingMatrix& B) {
    const StandardClass c = detail::require_standard(B, "root_vectors");
    std::vector<StandardClass> comps;
    detail::connected_classes(c, comps);
    std::vector<RootVector> out;
    for (const auto& comp : comps) {
        const std::vector<int> verts = comp.vertices();
        for (const auto& a : class_positive_roots(comp)) {
            RootVector r;
            r.lyndon = lyndon_word_for_root(comp, a);
            r.letters = verts;
            r.alpha = Degree(B.theta(), 0);
            for (std::size_t p = 0; p < verts.size(); ++p) r.alpha[verts[p] - 1] = a[p];
            r.expr = Expr::bracket(r.lyndon, verts);
            r.height = height_of(B, r.alpha);
            out.push_back(std::move(r));
        }
    }
    std::sort(out.begin(), out.end(), [](const RootVector& x, const RootVector& y) {
        if (total_degree(x.alpha) != total_degree(y.alpha)) return total_degree(x.alpha) < total_degree(y.alpha);
        return x.alpha < y.alpha;
    });
    return out;
}

/// Defining relations of B(V) for a standard braiding of finite type: quantum Serre relations, powers of root
/// vectors and the extra relations of types A, B and G2 under their scalar conditions.
inline std::vector<Relation> relations(const BraidingMatrix& B, G22Form g22 = G22Form::corrected) {
    detail::require_standard(B, "relations");
    const int t = B.theta();
    const MMatrix mm = m_matrix(B);
    auto m = [&](int i, int j) { return *mm[i - 1][j - 1]; };
    auto qq = [&](int i) { return B.q(i, i); };
    const CycScalar minus1(-1);
    std::vector<Relation> out;
    auto emit = [&](std::string label, Expr e) {
        Degree d = e.degree(t);
        out.push_back({std::move(label), std::move(e), std::move(d)});
    };
    auto pair_label = [](std::initializer_list<int> v) {
        std::string s = "(";
        bool first = true;
        for (int x : v) {
            s += (first ? "" : ",") + std::to_string(x);
            first = false;
        }
        return s + ")";
    };

    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j)
            if (i != j) emit("serre" + pair_label({i, j}), Expr::ad(i, m(i, j) + 1, j));

    for (const auto& r : root_vectors(B)) {
        if (!r.height) throw std::domain_error("relations: root " + root_to_string(r.alpha) + " has infinite height");
        emit("power " + root_to_string(r.alpha), Expr::pow(r.expr, *r.height));
    }

    const bool cartan = detail::is_cartan_type(B, mm);
    for (int k = 1; k <= t; ++k) {
        if (qq(k) != minus1) continue;
        for (int j = 1; j <= t; ++j)
            for (int l = j + 1; l <= t; ++l) {
                if (j == k || l == k || m(k, j) != 1 || m(k, l) != 1) continue;
                if (m(j, l) == 0)
                    emit("relA" + pair_label({j, k, l}), Expr::comm(Expr::ad(j, 1, Expr::ad(k, 1, l)), Expr::letter(k)));
                if (cartan)
                    emit("Arel" + pair_label({k, j, l}), Expr::comm(Expr::ad(k, 1, j), Expr::ad(k, 1, l)));
            }
    }

    for (int k = 1; k <= t; ++k)
        for (int j = 1; j <= t; ++j) {
            if (j == k || m(k, j) != 2 || m(j, k) != 1) continue;
            if (!detail::has_order(qq(k), 3) && qq(j) != minus1) continue;
            emit("relB" + pair_label({k, j}), Expr::comm(Expr::ad(k, 2, j), Expr::ad(k, 1, j)));
            for (int l = 1; l <= t; ++l) {
                if (l == k || l == j || m(j, l) != 1) continue;
                emit("relB2" + pair_label({k, j, l}), Expr::comm(Expr::ad(k, 2, Expr::ad(j, 1, l)), Expr::ad(k, 1, j)));
            }
        }

    for (int k = 1; k <= t; ++k)
        for (int j = 1; j <= t; ++j) {
            if (j == k || m(k, j) != 3 || m(j, k) != 1) continue;
            if (!detail::has_order(qq(k), 4) && qq(j) != minus1) continue;
            const std::vector<int> kj{k, j};
            const Expr X = Expr::bracket({1, 1, 2, 1, 2}, kj);
            const std::string p = pair_label({k, j});
            emit("G21" + p, Expr::comm(Expr::ad(k, 3, j), Expr::ad(k, 2, j)));
            const Expr g = Expr::comm(Expr::letter(k), X);
            if (g22 == G22Form::printed)
                emit("G22" + p, g);
            else
                emit("G22" + p, Expr::diff(g, g22_coefficient(B, k, j), Expr::pow(Expr::bracket({1, 1, 2}, kj), 2)));
            emit("G23" + p, Expr::comm(X, Expr::bracket({1, 2}, kj)));
            emit("G24" + p, Expr::comm(Expr::bracket({1, 1, 2}, kj), X));
        }
    return out;
}

struct RelationCheck {
    std::string label;
    std::string expr;
    Degree degree;
    bool checked = false;
    bool holds = false;
};

struct PresentationReport {
    int cap = 0;
    std::vector<RelationCheck> relations;
    HilbertPrefix expected;  // PBW product prefix
    HilbertPrefix actual;    // Gram ranks
    std::vector<PrefixMismatch> mismatches;

    bool relations_ok() const {
        for (const auto& r : relations)
            if (r.checked && !r.holds) return false;
        return true;
    }
    bool hilbert_ok() const { return mismatches.empty(); }
    bool ok() const { return relations_ok() && hilbert_ok(); }
};

/// Checks each relation for membership in I(V) and compares the PBW product prefix with Gram ranks up to cap.
///
/// Relations of total degree above relation_limit (when positive) are listed unchecked.
inline PresentationReport verify_presentation(const BraidingMatrix& B, int cap, int relation_limit = 0,
                                              G22Form g22 = G22Form::corrected) {
    PresentationReport rep;
    rep.cap = cap;
    NicholsQuotient Q(B);
    for (const auto& r : relations(B, g22)) {
        RelationCheck rc;
        rc.label = r.label;
        rc.expr = r.expr.to_string();
        rc.degree = r.degree;
        if (relation_limit <= 0 || total_degree(r.degree) <= relation_limit) {
            rc.checked = true;
            rc.holds = Q.is_zero(r.expr.evaluate(Q));
        }
        rep.relations.push_back(std::move(rc));
    }
    rep.expected = pbw_product_prefix(B, cap);
    rep.actual = hilbert_prefix(B, cap);
    rep.mismatches = compare_prefixes(rep.expected, rep.actual);
    return rep;
}

/// Effect of dropping the relation x_alpha^{N_alpha} = 0 on the Hilbert series at degree N_alpha alpha.
struct HeightDropCheck {
    Degree alpha;
    Degree degree;  // N_alpha alpha
    long long with_bound = 0;
    long long without_bound = 0;
    long long actual = 0;
    bool power_nonzero_below = false;  // x_alpha^{N_alpha - 1} is not in I(V)
    bool breaks() const { return with_bound == actual && without_bound != actual; }
};

inline HeightDropCheck height_drop_check(const BraidingMatrix& B, const RootVector& r) {
    if (!r.height) throw std::domain_error("height_drop_check: infinite height");
    HeightDropCheck h;
    h.alpha = r.alpha;
    h.degree = r.alpha;
    for (int& x : h.degree) x *= *r.height;
    const int top = total_degree(h.degree);
    const auto d = dim_nichols(B);
    auto factors = d.heights;
    h.with_bound = pbw_product_prefix(factors, B.theta(), top).at(h.degree);
    for (auto& [a, n] : factors)
        if (a == r.alpha) n = std::nullopt;
    h.without_bound = pbw_product_prefix(factors, B.theta(), top).at(h.degree);
    NicholsQuotient Q(B);
    h.actual = Q.dim(h.degree);
    h.power_nonzero_below = !Q.is_zero(Expr::pow(r.expr, *r.height - 1).evaluate(Q));
    return h;
}

}  // namespace nichols
