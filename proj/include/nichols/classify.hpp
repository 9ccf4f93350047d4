#pragma once

#include "nichols/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nichols {

/// A root of unity zeta_order^k with gcd(k, order) = 1.
struct RootOfUnity {
    int order = 1;
    int k = 0;

    static RootOfUnity from_exponent(int N, long long e) {
        e = ((e % N) + N) % N;
        if (e == 0) return {1, 0};
        int g = std::gcd(static_cast<int>(e), N);
        return {N / g, static_cast<int>(e / g)};
    }
    /// Exponent of this root over a conductor that is a multiple of its order.
    int exponent_over(int N) const {
        if (N % order != 0) throw std::domain_error("root of unity: conductor not a multiple of the order");
        return k * (N / order);
    }
    CycScalar scalar() const { return root_of_unity(order, k); }
    RootOfUnity pow(long long e) const { return from_exponent(order, static_cast<long long>(k) * e); }
    RootOfUnity inverse() const { return pow(-1); }
    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
        int L = std::lcm(a.order, b.order);
        return from_exponent(L, a.exponent_over(L) + b.exponent_over(L));
    }
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) { return a.order == b.order && a.k == b.k; }
    friend bool operator!=(const RootOfUnity& a, const RootOfUnity& b) { return !(a == b); }
    friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
        return std::tie(a.order, a.k) < std::tie(b.order, b.k);
    }
    std::string to_string() const {
        if (order == 1) return "1";
        if (order == 2) return "-1";
        return "zeta" + std::to_string(order) + (k == 1 ? "" : "^" + std::to_string(k));
    }
};

inline RootOfUnity minus_one() { return {2, 1}; }

/// Generalized Dynkin diagram: vertex labels q_ii and edges q_ij q_ji != 1, as exponents over one conductor.
struct DynkinDiagram {
    int conductor = 1;
    std::vector<int> labels;                  // exponent of q_ii
    std::map<std::pair<int, int>, int> edges;  // (i, j) with i < j, exponent of q_ij q_ji, nonzero only

    int theta() const { return static_cast<int>(labels.size()); }
    CycScalar label(int i) const { return root_of_unity(conductor, labels[i - 1]); }
    CycScalar edge(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = edges.find({i, j});
        return root_of_unity(conductor, it == edges.end() ? 0 : it->second);
    }
    RootOfUnity label_root(int i) const { return RootOfUnity::from_exponent(conductor, labels[i - 1]); }
    RootOfUnity edge_root(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = edges.find({i, j});
        return RootOfUnity::from_exponent(conductor, it == edges.end() ? 0 : it->second);
    }
    /// Same diagram over conductor M.
    DynkinDiagram over(int M) const {
        if (M % conductor != 0) throw std::domain_error("diagram: conductor not a multiple");
        DynkinDiagram d = *this;
        d.conductor = M;
        for (int& e : d.labels) e *= M / conductor;
        for (auto& [k, e] : d.edges) e *= M / conductor;
        return d;
    }
    friend bool operator==(const DynkinDiagram& a, const DynkinDiagram& b) {
        if (a.theta() != b.theta()) return false;
        int L = std::lcm(a.conductor, b.conductor);
        DynkinDiagram x = a.over(L), y = b.over(L);
        return x.labels == y.labels && x.edges == y.edges;
    }
};

inline DynkinDiagram dynkin_diagram(const BraidingMatrix& B) {
    DynkinDiagram d;
    d.conductor = B.conductor();
    const int t = B.theta();
    for (int i = 1; i <= t; ++i) d.labels.push_back(B.exponent(i, i));
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j) {
            int e = (B.exponent(i, j) + B.exponent(j, i)) % B.conductor();
            if (e != 0) d.edges[{i, j}] = e;
        }
    return d;
}

/// Diagram on the vertices perm: new vertex p+1 is old vertex perm[p].
inline DynkinDiagram relabel(const DynkinDiagram& d, const std::vector<int>& perm) {
    DynkinDiagram r;
    r.conductor = d.conductor;
    const int t = static_cast<int>(perm.size());
    for (int p = 0; p < t; ++p) r.labels.push_back(d.labels[perm[p] - 1]);
    for (int p = 0; p < t; ++p)
        for (int q = p + 1; q < t; ++q) {
            int a = perm[p], b = perm[q];
            auto it = d.edges.find({std::min(a, b), std::max(a, b)});
            if (it != d.edges.end()) r.edges[{p + 1, q + 1}] = it->second;
        }
    return r;
}

/// Braiding on the vertices perm: new vertex p+1 is old vertex perm[p].
inline BraidingMatrix relabel(const BraidingMatrix& B, const std::vector<int>& perm) {
    const int t = static_cast<int>(perm.size());
    std::vector<std::vector<int>> k(t, std::vector<int>(t));
    for (int p = 0; p < t; ++p)
        for (int q = 0; q < t; ++q) k[p][q] = B.exponent(perm[p], perm[q]);
    return BraidingMatrix(t, B.conductor(), k);
}

/// Restriction of a braiding to a subset of vertices (in the given order).
inline BraidingMatrix restrict_braiding(const BraidingMatrix& B, const std::vector<int>& verts) {
    return relabel(B, verts).minimized();
}

/// Equality of generalized Dynkin diagrams; with allow_relabel, up to a vertex permutation.
inline bool twist_equivalent(const BraidingMatrix& B1, const BraidingMatrix& B2, bool allow_relabel = false) {
    if (B1.theta() != B2.theta()) return false;
    DynkinDiagram d1 = dynkin_diagram(B1), d2 = dynkin_diagram(B2);
    if (!allow_relabel) return d1 == d2;
    std::vector<int> perm(B1.theta());
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (relabel(d2, perm) == d1) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Symmetric braiding (q_ij = q_ji) realizing a diagram; the conductor doubles when a square root needs it.
inline BraidingMatrix symmetric_braiding(const DynkinDiagram& d) {
    int N = d.conductor;
    bool need_double = false;
    for (const auto& [k, e] : d.edges)
        if (e % 2 != 0 && N % 2 == 0) need_double = true;
    DynkinDiagram dd = need_double ? d.over(2 * N) : d;
    N = dd.conductor;
    const int t = dd.theta();
    std::vector<std::vector<int>> k(t, std::vector<int>(t, 0));
    for (int i = 0; i < t; ++i) k[i][i] = dd.labels[i];
    for (const auto& [ij, e] : dd.edges) {
        int half = e % 2 == 0 ? e / 2 : (e + N) / 2;
        k[ij.first - 1][ij.second - 1] = half;
        k[ij.second - 1][ij.first - 1] = half;
    }
    return BraidingMatrix(t, N, k).minimized();
}

/// Braiding realizing a diagram with q_ij = edge and q_ji = 1 for i < j, over the diagram's own conductor.
inline BraidingMatrix triangular_braiding(const DynkinDiagram& d) {
    const int t = d.theta();
    std::vector<std::vector<int>> k(t, std::vector<int>(t, 0));
    for (int i = 0; i < t; ++i) k[i][i] = d.labels[i];
    for (const auto& [ij, e] : d.edges) k[ij.first - 1][ij.second - 1] = e;
    return BraidingMatrix(t, d.conductor, k).minimized();
}

// ---------------------------------------------------------------------------
// Family templates

/// Chain C(theta, q; I) with vertices 1..theta, as a diagram over conductor lcm(2, ord q).
inline DynkinDiagram chain_diagram(int theta, const RootOfUnity& q, const std::vector<int>& I) {
    DynkinDiagram d;
    const int L = std::lcm(2, q.order);
    d.conductor = L;
    d.labels.assign(theta, 0);
    std::set<int> in(I.begin(), I.end());
    int E = (L - q.exponent_over(L)) % L;  // virtual edge to the right of vertex theta: q^{-1}
    for (int k = theta; k >= 1; --k) {
        int left;
        if (in.count(k)) {
            d.labels[k - 1] = L / 2;
            left = (L - E) % L;
        } else {
            d.labels[k - 1] = (L - E) % L;
            left = E;
        }
        if (k > 1 && left != 0) d.edges[{k - 1, k}] = left;
        E = left;
    }
    return d;
}

/// Finite-type Cartan matrix in canonical numbering for a series and rank.
inline CartanMatrix cartan_of_type(char series, int rank) {
    const int n = rank;
    CartanMatrix C;
    C.a.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) C.a[i][i] = 2;
    auto link = [&](int i, int j, int aij, int aji) {
        C.a[i - 1][j - 1] = aij;
        C.a[j - 1][i - 1] = aji;
    };
    switch (series) {
        case 'A':
            for (int i = 1; i < n; ++i) link(i, i + 1, -1, -1);
            break;
        case 'B':  // vertex 1 short, double edge between 1 and 2
            if (n < 2) throw std::domain_error("B needs rank >= 2");
            link(1, 2, -2, -1);
            for (int i = 2; i < n; ++i) link(i, i + 1, -1, -1);
            break;
        case 'C':  // vertex n long, double edge between n-1 and n
            if (n < 2) throw std::domain_error("C needs rank >= 2");
            for (int i = 1; i < n - 1; ++i) link(i, i + 1, -1, -1);
            link(n - 1, n, -2, -1);
            break;
        case 'D':
            if (n < 4) throw std::domain_error("D needs rank >= 4");
            for (int i = 1; i < n - 2; ++i) link(i, i + 1, -1, -1);
            link(n - 2, n - 1, -1, -1);
            link(n - 2, n, -1, -1);
            break;
        case 'E': {
            if (n < 6 || n > 8) throw std::domain_error("E needs rank 6, 7 or 8");
            link(1, 3, -1, -1);
            link(2, 4, -1, -1);
            for (int i = 3; i < n; ++i) link(i, i + 1, -1, -1);
            break;
        }
        case 'F':
            if (n != 4) throw std::domain_error("F needs rank 4");
            link(1, 2, -1, -1);
            link(2, 3, -1, -2);
            link(3, 4, -1, -1);
            break;
        case 'G':
            if (n != 2) throw std::domain_error("G needs rank 2");
            link(1, 2, -3, -1);
            break;
        default:
            throw std::domain_error("unknown Cartan series");
    }
    return C;
}

/// Cartan-type diagram q_ii = q^{d_i}, q_ij q_ji = q^{d_i a_ij}.
inline DynkinDiagram cartan_diagram(char series, int rank, const RootOfUnity& q) {
    CartanMatrix C = cartan_of_type(series, rank);
    std::vector<int> d = symmetrizer(C);
    DynkinDiagram D;
    const int N = std::max(q.order, 1);
    D.conductor = N;
    const int e = q.exponent_over(N);
    for (int i = 0; i < rank; ++i) D.labels.push_back(((d[i] * e) % N + N) % N);
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
            if (C.a[i][j] == 0) continue;
            int x = ((d[i] * C.a[i][j] * e) % N + N) % N;
            if (x != 0) D.edges[{i + 1, j + 1}] = x;
        }
    return D;
}

/// B_theta family (a): zeta - q^{-1} - q, theta = 2.
inline DynkinDiagram family_b_a(const RootOfUnity& zeta, const RootOfUnity& q) {
    const int L = std::lcm(zeta.order, q.order);
    DynkinDiagram d;
    d.conductor = L;
    d.labels = {zeta.exponent_over(L), q.exponent_over(L)};
    int e = (L - q.exponent_over(L)) % L;
    if (e != 0) d.edges[{1, 2}] = e;
    return d;
}

namespace detail {

/// Special vertex 1 with label s and edge to vertex 2 equal to `edge`; chain C(theta-1, p; I) on vertices theta..2.
inline DynkinDiagram b_with_chain(int theta, const RootOfUnity& s, const RootOfUnity& edge, const RootOfUnity& p,
                                  const std::vector<int>& I) {
    DynkinDiagram chain = chain_diagram(theta - 1, p, I);
    const int L = std::lcm(std::lcm(chain.conductor, s.order), edge.order);
    chain = chain.over(L);
    DynkinDiagram d;
    d.conductor = L;
    d.labels.assign(theta, 0);
    d.labels[0] = s.exponent_over(L);
    // chain vertex k sits at vertex theta + 1 - k
    for (int k = 1; k <= theta - 1; ++k) d.labels[theta - k] = chain.labels[k - 1];
    for (const auto& [kk, e] : chain.edges) {
        int a = theta + 1 - kk.first, b = theta + 1 - kk.second;
        d.edges[{std::min(a, b), std::max(a, b)}] = e;
    }
    int ee = edge.exponent_over(L);
    if (ee != 0) d.edges[{1, 2}] = ee;
    return d;
}

}  // namespace detail

/// B_theta family (b): chain C(theta-1, q^2; I), edge q^{-2}, special vertex q.
inline DynkinDiagram family_b_b(int theta, const RootOfUnity& q, const std::vector<int>& I) {
    return detail::b_with_chain(theta, q, q.pow(-2), q.pow(2), I);
}

/// B_theta family (c): chain C(theta-1, -zeta^{-1}; I), edge -zeta, special vertex zeta.
inline DynkinDiagram family_b_c(int theta, const RootOfUnity& zeta, const std::vector<int>& I) {
    return detail::b_with_chain(theta, zeta, minus_one() * zeta, minus_one() * zeta.inverse(), I);
}

/// G_2 family (a), Cartan type: q - q^{-3} - q^3.
inline DynkinDiagram family_g2_a(const RootOfUnity& q) { return cartan_diagram('G', 2, q); }

/// G_2 family (b), zeta of order 8, variant 1, 2, 3.
inline DynkinDiagram family_g2_b(const RootOfUnity& zeta, int variant) {
    const int L = 8;
    const int z = zeta.exponent_over(L);
    DynkinDiagram d;
    d.conductor = L;
    int l1, e, l2;
    switch (variant) {
        case 1: l1 = 2 * z; e = z; l2 = -z; break;
        case 2: l1 = 2 * z; e = 3 * z; l2 = 4; break;
        case 3: l1 = z; e = 5 * z; l2 = 4; break;
        default: throw std::domain_error("G2 family (b): variant must be 1, 2 or 3");
    }
    auto md = [&](int x) { return ((x % L) + L) % L; };
    d.labels = {md(l1), md(l2)};
    if (md(e) != 0) d.edges[{1, 2}] = md(e);
    return d;
}

// ---------------------------------------------------------------------------
// Classification records

struct ClassCartan {
    char series = 'A';
    int theta = 1;
    RootOfUnity q;
    std::vector<int> vertices;
};
struct ClassTypeA {
    int theta = 1;
    RootOfUnity q;
    std::vector<int> i_list;
    std::vector<int> vertices;
};
struct ClassTypeBa {
    RootOfUnity zeta;
    RootOfUnity q;
    std::vector<int> vertices;
};
struct ClassTypeBb {
    int theta = 2;
    RootOfUnity q;
    std::vector<int> i_list;
    std::vector<int> vertices;
};
struct ClassTypeBc {
    int theta = 2;
    RootOfUnity zeta;
    std::vector<int> i_list;
    std::vector<int> vertices;
};
struct ClassG2a {
    RootOfUnity q;
    std::vector<int> vertices;
};
struct ClassG2b {
    RootOfUnity zeta;
    int variant = 1;
    std::vector<int> vertices;
};
struct ClassNotStandard {
    std::string reason;
};
struct StandardClass;
struct ClassDisconnected {
    std::vector<std::vector<int>> vertex_sets;
    std::vector<StandardClass> components;
};

struct StandardClass {
    std::variant<ClassCartan, ClassTypeA, ClassTypeBa, ClassTypeBb, ClassTypeBc, ClassG2a, ClassG2b, ClassNotStandard,
                 ClassDisconnected>
        v;

    bool standard() const {
        if (std::holds_alternative<ClassNotStandard>(v)) return false;
        if (auto* d = std::get_if<ClassDisconnected>(&v)) {
            for (const auto& c : d->components)
                if (!c.standard()) return false;
        }
        return true;
    }
    std::string family() const {
        return std::visit(
            [](const auto& x) -> std::string {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, ClassCartan>) return "Cartan";
                if constexpr (std::is_same_v<T, ClassTypeA>) return "TypeA";
                if constexpr (std::is_same_v<T, ClassTypeBa>) return "TypeB_a";
                if constexpr (std::is_same_v<T, ClassTypeBb>) return "TypeB_b";
                if constexpr (std::is_same_v<T, ClassTypeBc>) return "TypeB_c";
                if constexpr (std::is_same_v<T, ClassG2a>) return "G2_a";
                if constexpr (std::is_same_v<T, ClassG2b>) return "G2_b";
                if constexpr (std::is_same_v<T, ClassNotStandard>) return "NotStandard";
                if constexpr (std::is_same_v<T, ClassDisconnected>) return "Disconnected";
            },
            v);
    }
    /// Cartan series letter of a connected standard class.
    char series() const {
        return std::visit(
            [](const auto& x) -> char {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, ClassCartan>) return x.series;
                if constexpr (std::is_same_v<T, ClassTypeA>) return 'A';
                if constexpr (std::is_same_v<T, ClassTypeBa> || std::is_same_v<T, ClassTypeBb> ||
                              std::is_same_v<T, ClassTypeBc>)
                    return 'B';
                if constexpr (std::is_same_v<T, ClassG2a> || std::is_same_v<T, ClassG2b>) return 'G';
                return '?';
            },
            v);
    }
    int rank() const {
        return std::visit(
            [](const auto& x) -> int {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, ClassCartan> || std::is_same_v<T, ClassTypeA> ||
                              std::is_same_v<T, ClassTypeBb> || std::is_same_v<T, ClassTypeBc>)
                    return x.theta;
                if constexpr (std::is_same_v<T, ClassTypeBa> || std::is_same_v<T, ClassG2a> ||
                              std::is_same_v<T, ClassG2b>)
                    return 2;
                if constexpr (std::is_same_v<T, ClassDisconnected>) {
                    int r = 0;
                    for (const auto& c : x.components) r += c.rank();
                    return r;
                }
                return 0;
            },
            v);
    }
    /// Canonical vertex order (canonical position p+1 holds vertex vertices()[p]).
    std::vector<int> vertices() const {
        return std::visit(
            [](const auto& x) -> std::vector<int> {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, ClassNotStandard> || std::is_same_v<T, ClassDisconnected>)
                    return {};
                else
                    return x.vertices;
            },
            v);
    }
    std::string to_string() const;
};

inline bool same_parameters(const StandardClass& a, const StandardClass& b);

inline std::string list_to_string(const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
}

inline std::string StandardClass::to_string() const {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ClassCartan>)
                return "Cartan{" + std::string(1, x.series) + std::to_string(x.theta) + ", q=" + x.q.to_string() + "}";
            if constexpr (std::is_same_v<T, ClassTypeA>)
                return "TypeA{theta=" + std::to_string(x.theta) + ", q=" + x.q.to_string() +
                       ", i_list=" + list_to_string(x.i_list) + "}";
            if constexpr (std::is_same_v<T, ClassTypeBa>)
                return "TypeB_a{zeta=" + x.zeta.to_string() + ", q=" + x.q.to_string() + "}";
            if constexpr (std::is_same_v<T, ClassTypeBb>)
                return "TypeB_b{theta=" + std::to_string(x.theta) + ", q=" + x.q.to_string() +
                       ", i_list=" + list_to_string(x.i_list) + "}";
            if constexpr (std::is_same_v<T, ClassTypeBc>)
                return "TypeB_c{theta=" + std::to_string(x.theta) + ", zeta=" + x.zeta.to_string() +
                       ", i_list=" + list_to_string(x.i_list) + "}";
            if constexpr (std::is_same_v<T, ClassG2a>) return "G2_a{q=" + x.q.to_string() + "}";
            if constexpr (std::is_same_v<T, ClassG2b>) {
                const char* names[] = {"", "i", "ii", "iii"};
                return "G2_b{zeta=" + x.zeta.to_string() + ", variant=" + names[x.variant] + "}";
            }
            if constexpr (std::is_same_v<T, ClassNotStandard>) return "NotStandard{" + x.reason + "}";
            if constexpr (std::is_same_v<T, ClassDisconnected>) {
                std::string s = "Disconnected{";
                for (std::size_t i = 0; i < x.components.size(); ++i) {
                    if (i) s += ", ";
                    s += list_to_string(x.vertex_sets[i]) + ": " + x.components[i].to_string();
                }
                return s + "}";
            }
        },
        v);
}

/// Diagram of a class in canonical numbering.
inline DynkinDiagram class_diagram(const StandardClass& c) {
    return std::visit(
        [](const auto& x) -> DynkinDiagram {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, ClassCartan>) return cartan_diagram(x.series, x.theta, x.q);
            if constexpr (std::is_same_v<T, ClassTypeA>) return chain_diagram(x.theta, x.q, x.i_list);
            if constexpr (std::is_same_v<T, ClassTypeBa>) return family_b_a(x.zeta, x.q);
            if constexpr (std::is_same_v<T, ClassTypeBb>) return family_b_b(x.theta, x.q, x.i_list);
            if constexpr (std::is_same_v<T, ClassTypeBc>) return family_b_c(x.theta, x.zeta, x.i_list);
            if constexpr (std::is_same_v<T, ClassG2a>) return family_g2_a(x.q);
            if constexpr (std::is_same_v<T, ClassG2b>) return family_g2_b(x.zeta, x.variant);
            throw std::domain_error("class has no single diagram");
        },
        c.v);
}

inline bool same_parameters(const StandardClass& a, const StandardClass& b) { return a.to_string() == b.to_string(); }

namespace detail {

inline bool is_cartan_type(const BraidingMatrix& B, const MMatrix& m) {
    const int t = B.theta();
    const int N = B.conductor();
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j) {
            if (i == j) continue;
            long long e = static_cast<long long>(B.exponent(i, i)) * *m[i - 1][j - 1] + B.exponent(i, j) + B.exponent(j, i);
            if (e % N != 0) return false;
        }
    return true;
}

inline std::vector<int> minus_one_positions(const DynkinDiagram& d, const std::vector<int>& verts) {
    std::vector<int> out;
    if (d.conductor % 2 != 0) return out;
    for (std::size_t p = 0; p < verts.size(); ++p)
        if (d.labels[verts[p] - 1] == d.conductor / 2) out.push_back(static_cast<int>(p) + 1);
    return out;
}

inline StandardClass classify_connected(const BraidingMatrix& B, int orbit_cap) {
    StandardClass out;
    const MMatrix m = m_matrix(B);
    if (!all_defined(m)) {
        out.v = ClassNotStandard{"Cartan integers undefined"};
        return out;
    }
    StandardResult st;
    try {
        st = is_standard(B, orbit_cap);
    } catch (const std::runtime_error& e) {
        out.v = ClassNotStandard{e.what()};
        return out;
    }
    if (!st.standard) {
        out.v = ClassNotStandard{st.reason};
        return out;
    }
    const CartanMatrix C = cartan_matrix(m);
    const FiniteTypeResult ft = finite_type(C);
    if (!ft.finite || ft.components.size() != 1) {
        out.v = ClassNotStandard{"standard but the Cartan matrix is not of finite type"};
        return out;
    }
    const CartanComponent& comp = ft.components[0];
    const std::vector<int>& verts = comp.vertices;
    const DynkinDiagram D = dynkin_diagram(B);
    const DynkinDiagram Dc = relabel(D, verts);
    const int t = comp.rank;

    if (is_cartan_type(B, m)) {
        const CartanMatrix Cc = cartan_of_type(comp.series, t);
        std::vector<int> d = symmetrizer(Cc);
        int shortv = 1;
        for (int p = 0; p < t; ++p)
            if (d[p] == 1) {
                shortv = p + 1;
                break;
            }
        RootOfUnity q = Dc.label_root(shortv);
        if (comp.series == 'G') {
            out.v = ClassG2a{q, verts};
            return out;
        }
        out.v = ClassCartan{comp.series, t, q, verts};
        return out;
    }

    if (comp.series == 'A') {
        for (int orient = 0; orient < 2; ++orient) {
            std::vector<int> vs = verts;
            if (orient == 1) std::reverse(vs.begin(), vs.end());
            DynkinDiagram Dv = relabel(D, vs);
            std::vector<int> I = minus_one_positions(D, vs);
            std::set<int> in(I.begin(), I.end());
            RootOfUnity q = in.count(t) ? Dv.edge_root(t - 1, t) : Dv.label_root(t);
            if (q.order < 2) continue;
            if (chain_diagram(t, q, I) == Dv) {
                out.v = ClassTypeA{t, q, I, vs};
                return out;
            }
        }
        out.v = ClassNotStandard{"type A diagram outside the chain families"};
        return out;
    }

    if (comp.series == 'B') {
        // canonical numbering: vertex 1 is the special vertex, chain 2..theta
        RootOfUnity s = Dc.label_root(1);
        std::vector<int> chain_verts;  // casos chain order: vertex theta first
        for (int k = 1; k <= t - 1; ++k) chain_verts.push_back(t + 1 - k);
        std::vector<int> I;
        if (Dc.conductor % 2 == 0)
            for (int k = 1; k <= t - 1; ++k)
                if (Dc.labels[chain_verts[k - 1] - 1] == Dc.conductor / 2) I.push_back(k);
        if (t == 2 && s.order == 3) {
            RootOfUnity q = Dc.label_root(2);
            if (family_b_a(s, q) == Dc) {
                out.v = ClassTypeBa{s, q, verts};
                return out;
            }
        }
        if (family_b_b(t, s, I) == Dc) {
            out.v = ClassTypeBb{t, s, I, verts};
            return out;
        }
        if (s.order == 3 && family_b_c(t, s, I) == Dc) {
            out.v = ClassTypeBc{t, s, I, verts};
            return out;
        }
        out.v = ClassNotStandard{"type B diagram outside the listed families"};
        return out;
    }

    if (comp.series == 'G') {
        RootOfUnity l1 = Dc.label_root(1), e = Dc.edge_root(1, 2);
        std::vector<RootOfUnity> candidates{e, e.pow(3), l1};
        for (int variant = 1; variant <= 3; ++variant) {
            RootOfUnity z = candidates[variant - 1];
            if (z.order != 8) continue;
            if (family_g2_b(z, variant) == Dc) {
                out.v = ClassG2b{z, variant, verts};
                return out;
            }
        }
        out.v = ClassNotStandard{"type G2 diagram outside the listed families"};
        return out;
    }

    out.v = ClassNotStandard{std::string("standard of type ") + comp.name() + " but not of Cartan type"};
    return out;
}

}  // namespace detail

/// Connected components of the Dynkin diagram, each sorted.
inline std::vector<std::vector<int>> diagram_components(const BraidingMatrix& B) {
    const DynkinDiagram d = dynkin_diagram(B);
    const int t = B.theta();
    std::vector<int> comp(t + 1, 0);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= t; ++s) {
        if (comp[s]) continue;
        std::vector<int> verts, stack{s};
        comp[s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            for (int v = 1; v <= t; ++v)
                if (!comp[v] && d.edges.count({std::min(u, v), std::max(u, v)})) {
                    comp[v] = 1;
                    stack.push_back(v);
                }
        }
        std::sort(verts.begin(), verts.end());
        out.push_back(verts);
    }
    return out;
}

/// Matches a braiding against the standard families; disconnected input is classified per component.
inline StandardClass classify_standard(const BraidingMatrix& B, int orbit_cap = default_orbit_cap) {
    auto comps = diagram_components(B);
    if (comps.size() == 1) return detail::classify_connected(B, orbit_cap);
    ClassDisconnected dc;
    for (const auto& verts : comps) {
        BraidingMatrix sub = restrict_braiding(B, verts);
        StandardClass c = detail::classify_connected(sub, orbit_cap);
        // express canonical vertices in the original numbering
        std::visit(
            [&](auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (!std::is_same_v<T, ClassNotStandard> && !std::is_same_v<T, ClassDisconnected>)
                    for (int& v : x.vertices) v = verts[v - 1];
            },
            c.v);
        dc.vertex_sets.push_back(verts);
        dc.components.push_back(c);
    }
    StandardClass out;
    out.v = dc;
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration

struct EnumeratedBraiding {
    BraidingMatrix braiding;  // symmetric representative
    StandardClass expected;   // the class the template was built from
};

struct Enumeration {
    std::vector<EnumeratedBraiding> items;
    std::vector<std::string> diagnostics;
};

namespace detail {

inline std::vector<std::vector<int>> subsets(int n) {
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

inline std::vector<RootOfUnity> primitive_roots(int N) {
    std::vector<RootOfUnity> out;
    for (int k = 1; k < N; ++k)
        if (std::gcd(k, N) == 1) out.push_back({N, k});
    if (N == 1) out.push_back({1, 0});
    return out;
}

}  // namespace detail

/// Standard braidings of family A, B or G with parameter of order N, one per Dynkin diagram.
/// The expected class applies the classifier's precedence (Cartan type first).
inline Enumeration enumerate_standard(char family, int theta, int N) {
    Enumeration res;
    std::vector<std::pair<DynkinDiagram, StandardClass>> cands;
    auto add = [&](const DynkinDiagram& d, StandardClass c) { cands.emplace_back(d, std::move(c)); };
    std::vector<int> ident(theta);
    std::iota(ident.begin(), ident.end(), 1);
    if (family == 'A') {
        if (N < 2) res.diagnostics.push_back("type A needs ord q >= 2");
        else
            for (const auto& q : detail::primitive_roots(N))
                for (const auto& I : detail::subsets(theta)) {
                    StandardClass c;
                    if (I.empty() || q.order == 2 || (theta == 1))
                        c.v = ClassCartan{'A', theta, theta == 1 && !I.empty() ? minus_one() : q, ident};
                    else
                        c.v = ClassTypeA{theta, q, I, ident};
                    add(chain_diagram(theta, q, I), c);
                }
    } else if (family == 'B') {
        if (theta < 2) {
            res.diagnostics.push_back("type B needs theta >= 2");
        } else {
            if (theta == 2 && N != 1 && N != 3)
                for (const auto& zeta : detail::primitive_roots(3))
                    for (const auto& q : detail::primitive_roots(N)) {
                        StandardClass c;
                        c.v = ClassTypeBa{zeta, q, ident};
                        add(family_b_a(zeta, q), c);
                    }
            if (N >= 3)
                for (const auto& q : detail::primitive_roots(N))
                    for (const auto& I : detail::subsets(theta - 1)) {
                        StandardClass c;
                        c.v = ClassTypeBb{theta, q, I, ident};
                        add(family_b_b(theta, q, I), c);
                    }
            if (N == 3)
                for (const auto& zeta : detail::primitive_roots(3))
                    for (const auto& I : detail::subsets(theta - 1)) {
                        StandardClass c;
                        if (theta == 2 && I.empty())  // coincides with family (a), q = -zeta^{-1}
                            c.v = ClassTypeBa{zeta, minus_one() * zeta.inverse(), ident};
                        else
                            c.v = ClassTypeBc{theta, zeta, I, ident};
                        add(family_b_c(theta, zeta, I), c);
                    }
        }
    } else if (family == 'G') {
        if (theta != 2) {
            res.diagnostics.push_back("type G needs theta = 2");
        } else {
            if (N >= 4)
                for (const auto& q : detail::primitive_roots(N)) {
                    StandardClass c;
                    c.v = ClassG2a{q, ident};
                    add(family_g2_a(q), c);
                }
            if (N == 8)
                for (const auto& zeta : detail::primitive_roots(8))
                    for (int variant = 1; variant <= 3; ++variant) {
                        StandardClass c;
                        c.v = ClassG2b{zeta, variant, ident};
                        add(family_g2_b(zeta, variant), c);
                    }
            if (N < 4 && N != 8) res.diagnostics.push_back("type G2 needs ord q >= 4");
        }
    } else {
        res.diagnostics.push_back(std::string("unknown family ") + family);
        return res;
    }
    std::vector<DynkinDiagram> seen;
    for (auto& [d, c] : cands) {
        bool dup = false;
        for (const auto& s : seen)
            if (s == d) dup = true;
        if (dup) continue;
        seen.push_back(d);
        BraidingMatrix B = symmetric_braiding(d);
        const MMatrix m = m_matrix(B);
        StandardClass expected = c;
        if (all_defined(m) && detail::is_cartan_type(B, m) &&
            !std::holds_alternative<ClassCartan>(c.v) && !std::holds_alternative<ClassG2a>(c.v)) {
            // the template landed on a Cartan-type diagram
            FiniteTypeResult ft = finite_type(cartan_matrix(m));
            if (ft.finite && ft.components.size() == 1) {
                const auto& comp = ft.components[0];
                std::vector<int> dd = symmetrizer(cartan_of_type(comp.series, comp.rank));
                int shortv = 1;
                for (int p = 0; p < comp.rank; ++p)
                    if (dd[p] == 1) {
                        shortv = p + 1;
                        break;
                    }
                expected.v = ClassCartan{comp.series, comp.rank,
                                         relabel(d, comp.vertices).label_root(shortv), comp.vertices};
            }
        }
        StandardResult st;
        try {
            st = is_standard(B);
        } catch (const std::runtime_error& e) {
            res.diagnostics.push_back(c.to_string() + ": " + e.what());
            continue;
        }
        if (!st.standard) {
            res.diagnostics.push_back(c.to_string() + ": not standard (" + st.reason + ")");
            continue;
        }
        res.items.push_back({B, expected});
    }
    return res;
}

}  // namespace nichols
