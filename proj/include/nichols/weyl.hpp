#pragma once

#include "nichols/freealgebra.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

using IntMatrix = std::vector<std::vector<int>>;
/// Matrix of Cartan integers; nullopt marks an entry undefined within the scan cap.
using MMatrix = std::vector<std::vector<std::optional<int>>>;

constexpr int default_m_cap = 8;
constexpr int default_orbit_cap = 200;

/// Minimal m in 0..cap with (m+1)_q (q^m p - 1) = 0 for q = zeta_N^a, p = zeta_N^b.
inline std::optional<int> cartan_integer(int N, long long a, long long b, int cap = default_m_cap) {
    for (int m = 0; m <= cap; ++m) {
        bool qnum_zero = a % N != 0 && ((m + 1) * a) % N == 0;
        bool second_zero = ((m * a + b) % N) == 0;
        if (qnum_zero || second_zero) return m;
    }
    return std::nullopt;
}

/// Minimal m in 0..cap with (m+1)_{q_ii} (q_ii^m q_ij q_ji - 1) = 0.
inline std::optional<int> cartan_entry(const BraidingMatrix& B, int i, int j, int cap = default_m_cap) {
    if (i == j) return 2;
    return cartan_integer(B.conductor(), B.exponent(i, i), B.exponent(i, j) + B.exponent(j, i), cap);
}

inline MMatrix m_matrix(const BraidingMatrix& B, int cap = default_m_cap) {
    const int t = B.theta();
    MMatrix m(t, std::vector<std::optional<int>>(t));
    for (int i = 1; i <= t; ++i)
        for (int j = 1; j <= t; ++j) m[i - 1][j - 1] = cartan_entry(B, i, j, cap);
    return m;
}

inline bool all_defined(const MMatrix& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e) return false;
    return true;
}

/// Generalized Cartan matrix a_ij = -m_ij, a_ii = 2.
struct CartanMatrix {
    IntMatrix a;
    int theta() const { return static_cast<int>(a.size()); }
    friend bool operator==(const CartanMatrix& x, const CartanMatrix& y) { return x.a == y.a; }
};

inline CartanMatrix cartan_matrix(const MMatrix& m) {
    if (!all_defined(m)) throw std::domain_error("cartan matrix: undefined Cartan integer");
    CartanMatrix C;
    const int t = static_cast<int>(m.size());
    C.a.assign(t, std::vector<int>(t));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) C.a[i][j] = i == j ? 2 : -*m[i][j];
    return C;
}

/// Matrix of the pseudo-reflection s_i: column j holds s_i(e_j) = e_j + m_ij e_i, s_i(e_i) = -e_i.
inline IntMatrix simple_reflection_matrix(const std::vector<std::optional<int>>& m_row, int i) {
    const int t = static_cast<int>(m_row.size());
    IntMatrix S(t, std::vector<int>(t, 0));
    for (int j = 1; j <= t; ++j) {
        if (j == i) {
            S[i - 1][i - 1] = -1;
            continue;
        }
        if (!m_row[j - 1]) throw std::domain_error("reflection undefined at vertex " + std::to_string(i));
        S[j - 1][j - 1] = 1;
        S[i - 1][j - 1] += *m_row[j - 1];
    }
    return S;
}

inline IntMatrix mat_mul(const IntMatrix& A, const IntMatrix& B) {
    const std::size_t n = A.size(), k = B.size(), m = B.empty() ? 0 : B[0].size();
    IntMatrix C(n, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l)
            if (A[i][l] != 0)
                for (std::size_t j = 0; j < m; ++j) C[i][j] += A[i][l] * B[l][j];
    return C;
}

inline IntMatrix identity_matrix(int t) {
    IntMatrix I(t, std::vector<int>(t, 0));
    for (int i = 0; i < t; ++i) I[i][i] = 1;
    return I;
}

/// Column j of M as a degree.
inline Degree matrix_column(const IntMatrix& M, int j) {
    Degree d(M.size());
    for (std::size_t r = 0; r < M.size(); ++r) d[r] = M[r][j];
    return d;
}

/// Braiding matrix with respect to the reflected basis s_i(e_1), ..., s_i(e_theta).
inline BraidingMatrix reflect(const BraidingMatrix& B, int i, int cap = default_m_cap) {
    const int t = B.theta();
    std::vector<std::optional<int>> row(t);
    for (int j = 1; j <= t; ++j) row[j - 1] = cartan_entry(B, i, j, cap);
    for (int j = 1; j <= t; ++j)
        if (!row[j - 1]) throw std::domain_error("reflection undefined at vertex " + std::to_string(i));
    IntMatrix S = simple_reflection_matrix(row, i);
    std::vector<std::vector<int>> k(t, std::vector<int>(t));
    for (int j = 0; j < t; ++j)
        for (int l = 0; l < t; ++l) k[j][l] = B.chi_exp(matrix_column(S, j), matrix_column(S, l));
    return BraidingMatrix(t, B.conductor(), k);
}

/// Key identifying a generalized Dynkin diagram: vertex exponents and edge-product exponents.
inline std::vector<int> diagram_key(const BraidingMatrix& B) {
    std::vector<int> key;
    const int t = B.theta();
    const int N = B.conductor();
    key.push_back(N);
    for (int i = 1; i <= t; ++i) key.push_back(B.exponent(i, i));
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j) key.push_back((B.exponent(i, j) + B.exponent(j, i)) % N);
    return key;
}

struct GroupoidPoint {
    IntMatrix basis_matrix;  // columns are the current basis in terms of e_1..e_theta
    BraidingMatrix braiding;
    MMatrix m;
};

struct StandardResult {
    bool standard = false;
    std::vector<GroupoidPoint> orbit;
    std::string reason;
};

/// Breadth-first closure of the Weyl groupoid orbit, deduplicated by Dynkin diagram.
inline StandardResult is_standard(const BraidingMatrix& B, int orbit_cap = default_orbit_cap, int m_cap = default_m_cap) {
    StandardResult res;
    const int t = B.theta();
    const MMatrix m0 = m_matrix(B, m_cap);
    GroupoidPoint start{identity_matrix(t), B, m0};
    res.orbit.push_back(start);
    if (!all_defined(m0)) {
        res.reason = "Cartan integers undefined within cap";
        return res;
    }
    std::set<std::vector<int>> seen{diagram_key(B)};
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        for (int i = 1; i <= t; ++i) {
            const GroupoidPoint& P = res.orbit[idx];
            BraidingMatrix R = reflect(P.braiding, i, m_cap);
            auto key = diagram_key(R);
            if (seen.count(key)) continue;
            seen.insert(key);
            IntMatrix S = simple_reflection_matrix(P.m[i - 1], i);
            GroupoidPoint Q{mat_mul(P.basis_matrix, S), R, m_matrix(R, m_cap)};
            const bool ok = all_defined(Q.m) && Q.m == m0;
            res.orbit.push_back(std::move(Q));
            if (!ok) {
                res.reason = all_defined(res.orbit.back().m) ? "Cartan matrix changes along the orbit"
                                                              : "Cartan integers undefined at an orbit point";
                return res;
            }
            if (static_cast<int>(res.orbit.size()) > orbit_cap)
                throw std::runtime_error("inconclusive: orbit not closed within cap");
            queue.push_back(res.orbit.size() - 1);
        }
    }
    res.standard = true;
    return res;
}

/// One connected component of a finite-type Cartan matrix.
struct CartanComponent {
    char series = 'A';  // A, B, C, D, E, F, G
    int rank = 1;
    /// vertices[p] is the 1-based vertex in canonical position p+1.
    std::vector<int> vertices;
    std::string name() const { return std::string(1, series) + std::to_string(rank); }
};

struct FiniteTypeResult {
    bool finite = false;
    std::vector<CartanComponent> components;
    std::string describe() const {
        if (!finite) return "not finite type";
        std::string s;
        for (const auto& c : components) {
            if (!s.empty()) s += " x ";
            s += c.name();
        }
        return s;
    }
};

namespace detail {

inline std::optional<CartanComponent> identify_component(const CartanMatrix& C, const std::vector<int>& verts) {
    const int n = static_cast<int>(verts.size());
    auto a = [&](int u, int v) { return C.a[u - 1][v - 1]; };
    CartanComponent comp;
    comp.rank = n;
    if (n == 1) {
        comp.series = 'A';
        comp.vertices = verts;
        return comp;
    }
    std::map<int, std::vector<int>> adj;
    int edges = 0;
    for (int u : verts)
        for (int v : verts) {
            if (u >= v) continue;
            const int p = a(u, v) * a(v, u);
            if ((a(u, v) == 0) != (a(v, u) == 0)) return std::nullopt;
            if (p == 0) continue;
            if (p > 3) return std::nullopt;
            adj[u].push_back(v);
            adj[v].push_back(u);
            ++edges;
        }
    if (edges != n - 1) return std::nullopt;
    int branch = 0, maxdeg = 0;
    for (int u : verts) {
        int d = static_cast<int>(adj[u].size());
        if (d > maxdeg) maxdeg = d;
        if (d == 3) branch = u;
    }
    if (maxdeg > 3) return std::nullopt;
    auto walk = [&](int from) {
        std::vector<int> path{from};
        int prev = 0, cur = from;
        while (true) {
            int next = 0;
            for (int v : adj[cur])
                if (v != prev) next = v;
            if (next == 0) break;
            prev = cur;
            cur = next;
            path.push_back(cur);
        }
        return path;
    };
    if (maxdeg <= 2) {
        std::vector<int> ends;
        for (int u : verts)
            if (adj[u].size() == 1) ends.push_back(u);
        std::sort(ends.begin(), ends.end());
        std::vector<int> path = walk(ends[0]);
        int triple = -1, doubles = 0, dpos = -1;
        for (int k = 0; k + 1 < n; ++k) {
            int p = a(path[k], path[k + 1]) * a(path[k + 1], path[k]);
            if (p == 3) triple = k;
            if (p == 2) {
                ++doubles;
                dpos = k;
            }
        }
        if (triple >= 0) {
            if (n != 2) return std::nullopt;
            comp.series = 'G';
            int u = path[0], v = path[1];
            comp.vertices = a(u, v) == -3 ? std::vector<int>{u, v} : std::vector<int>{v, u};
            return comp;
        }
        if (doubles > 1) return std::nullopt;
        if (doubles == 0) {
            comp.series = 'A';
            comp.vertices = path;
            return comp;
        }
        if (n == 2) {
            comp.series = 'B';
            int u = path[0], v = path[1];
            comp.vertices = a(u, v) == -2 ? std::vector<int>{u, v} : std::vector<int>{v, u};
            return comp;
        }
        if (dpos == 0 || dpos == n - 2) {
            if (dpos == n - 2) std::reverse(path.begin(), path.end());
            // the double edge now joins path[0] and path[1]
            if (a(path[0], path[1]) == -2) {
                comp.series = 'B';
                comp.vertices = path;
            } else {
                comp.series = 'C';
                std::reverse(path.begin(), path.end());
                comp.vertices = path;
            }
            return comp;
        }
        if (n == 4 && dpos == 1) {
            // long roots first: the row with -2 belongs to the short side
            if (a(path[2], path[1]) != -2) std::reverse(path.begin(), path.end());
            comp.series = 'F';
            comp.vertices = path;
            return comp;
        }
        return std::nullopt;
    }
    // simply laced with a single branch vertex
    for (int u : verts)
        for (int v : adj[u])
            if (a(u, v) * a(v, u) != 1) return std::nullopt;
    int branches = 0;
    for (int u : verts)
        if (adj[u].size() == 3) ++branches;
    if (branches != 1) return std::nullopt;
    std::vector<std::vector<int>> arms;
    for (int v : adj[branch]) {
        std::vector<int> arm{v};
        int prev = branch, cur = v;
        while (adj[cur].size() == 2) {
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = next;
            arm.push_back(cur);
        }
        arms.push_back(arm);
    }
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    const std::size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
    std::vector<int> order;
    if (p == 1 && q == 1) {
        comp.series = 'D';
        // long arm from its leaf towards the branch vertex, then the two short leaves
        std::vector<int> arm = arms[2];
        std::reverse(arm.begin(), arm.end());
        order = arm;
        order.push_back(branch);
        order.push_back(arms[0][0]);
        order.push_back(arms[1][0]);
    } else if (p == 1 && q == 2 && (r == 2 || r == 3 || r == 4)) {
        comp.series = 'E';
        // chain 1 - 3 - 4 - 5 - ... - n with vertex 2 attached to the branch vertex 4
        order = {arms[1][1], arms[0][0], arms[1][0], branch};
        order.insert(order.end(), arms[2].begin(), arms[2].end());
    } else {
        return std::nullopt;
    }
    comp.vertices = order;
    return comp;
}

}  // namespace detail

/// Component-wise identification of a generalized Cartan matrix against the finite-type list.
inline FiniteTypeResult finite_type(const CartanMatrix& C) {
    FiniteTypeResult res;
    const int t = C.theta();
    std::vector<int> comp_of(t + 1, 0);
    int ncomp = 0;
    for (int s = 1; s <= t; ++s) {
        if (comp_of[s]) continue;
        ++ncomp;
        std::vector<int> stack{s};
        comp_of[s] = ncomp;
        std::vector<int> verts;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            for (int v = 1; v <= t; ++v)
                if (v != u && !comp_of[v] && (C.a[u - 1][v - 1] != 0 || C.a[v - 1][u - 1] != 0)) {
                    comp_of[v] = ncomp;
                    stack.push_back(v);
                }
        }
        std::sort(verts.begin(), verts.end());
        auto c = detail::identify_component(C, verts);
        if (!c) {
            res.finite = false;
            res.components.clear();
            return res;
        }
        res.components.push_back(*c);
    }
    res.finite = true;
    return res;
}

/// Positive roots as the closure of the simple roots under the simple reflections, inside N^theta.
inline std::vector<Degree> positive_roots(const CartanMatrix& C) {
    if (!finite_type(C).finite) throw std::domain_error("positive_roots: Cartan matrix not of finite type");
    const int t = C.theta();
    std::set<Degree> seen;
    std::deque<Degree> queue;
    for (int i = 1; i <= t; ++i) {
        Degree e = unit_degree(t, i);
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        Degree b = queue.front();
        queue.pop_front();
        for (int i = 0; i < t; ++i) {
            int pairing = 0;
            for (int j = 0; j < t; ++j) pairing += C.a[i][j] * b[j];
            Degree r = b;
            r[i] -= pairing;
            bool positive = true;
            for (int x : r)
                if (x < 0) positive = false;
            if (!positive || seen.count(r)) continue;
            seen.insert(r);
            queue.push_back(r);
        }
    }
    std::vector<Degree> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Degree& x, const Degree& y) {
        int sx = total_degree(x), sy = total_degree(y);
        if (sx != sy) return sx < sy;
        return x > y;
    });
    return out;
}

/// Integral symmetrizer d with d_i a_ij = d_j a_ji and the short roots at d = 1, per component.
inline std::vector<int> symmetrizer(const CartanMatrix& C) {
    const int t = C.theta();
    std::vector<int> d(t, 0);
    for (int s = 0; s < t; ++s) {
        if (d[s]) continue;
        std::vector<long long> num(t, 0), den(t, 1);
        std::vector<int> comp{s};
        num[s] = 1;
        std::vector<bool> vis(t, false);
        vis[s] = true;
        for (std::size_t k = 0; k < comp.size(); ++k) {
            int u = comp[k];
            for (int v = 0; v < t; ++v) {
                if (vis[v] || C.a[u][v] == 0) continue;
                // d_v = d_u a_uv / a_vu
                num[v] = num[u] * C.a[u][v];
                den[v] = den[u] * C.a[v][u];
                vis[v] = true;
                comp.push_back(v);
            }
        }
        long long L = 1;
        for (int v : comp) L = std::lcm(L, std::abs(den[v]));
        std::vector<long long> val;
        long long g = 0;
        for (int v : comp) {
            long long x = num[v] * (L / den[v]);
            if (x < 0) x = -x;
            val.push_back(x);
            g = std::gcd(g, x);
        }
        for (std::size_t k = 0; k < comp.size(); ++k) d[comp[k]] = static_cast<int>(val[k] / g);
    }
    return d;
}

}  // namespace nichols
