#pragma once

#include "nichols/freealgebra.hpp"
#include "nichols/linalg.hpp"
#include "nichols/modular.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace nichols {

/// The Nichols algebra B(V) computed degree by degree as the image of T(V) under the skew derivations.
///
/// For every Z^theta-degree b the layer keeps the words G(b) whose classes are not spanned by greater words
/// (a basis of B(V)^b), the matrices of left multiplication by each x_k into degree b, and the matrices of
/// each D_i out of degree b.
class NicholsQuotient {
public:
    /// Homogeneous element of B(V) given by coordinates in the basis of its degree.
    struct Element {
        Degree deg;
        CycVector c;
    };

    explicit NicholsQuotient(BraidingMatrix B) : B_(std::move(B)), theta_(B_.theta()) {
        Layer zero;
        zero.basis.push_back({});
        zero.L.resize(theta_);
        zero.D.resize(theta_);
        layers_.emplace(Degree(theta_, 0), std::move(zero));
    }

    const BraidingMatrix& braiding() const { return B_; }
    int theta() const { return theta_; }

    /// Computes every degree bounded componentwise by box.
    void ensure_box(const Degree& box) {
        std::vector<Degree> todo;
        Degree d(theta_, 0);
        for (int x : box)
            if (x < 0) return;
        while (true) {
            if (!layers_.count(d)) todo.push_back(d);
            int p = 0;
            while (p < theta_ && d[p] == box[p]) d[p++] = 0;
            if (p == theta_) break;
            ++d[p];
        }
        process(std::move(todo));
    }

    /// Computes every degree of total degree at most cap.
    void ensure_total(int cap) {
        std::vector<Degree> todo;
        Degree d(theta_, 0);
        enumerate_total(d, 0, cap, todo);
        process(std::move(todo));
    }

    int dim(const Degree& b) {
        for (int x : b)
            if (x < 0) return 0;
        ensure_box(b);
        return static_cast<int>(layers_.at(b).basis.size());
    }
    const std::vector<Word>& basis(const Degree& b) {
        ensure_box(b);
        return layers_.at(b).basis;
    }

    /// Coordinates of the class of a word.
    CycVector coords(const Word& w) {
        Degree d = word_degree(w, theta_);
        ensure_box(d);
        Degree cur(theta_, 0);
        CycVector v{CycScalar(1)};
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const int k = *it;
            ++cur[k - 1];
            const Layer& lay = layers_.at(cur);
            v = mat_vec(lay.L[k - 1], v, lay.basis.size());
        }
        return v;
    }

    /// Class of a homogeneous polynomial.
    Element element(const NcPoly& p) {
        if (p.is_zero()) throw std::domain_error("element: zero polynomial has no degree");
        Degree d = p.degree(theta_);
        CycVector v(static_cast<std::size_t>(dim(d)), CycScalar(0));
        for (const auto& [w, c] : p.terms()) axpy(v, c, coords(w));
        return {d, v};
    }

    /// True iff p lies in the defining ideal of B(V); inhomogeneous input is tested per component.
    bool in_ideal(const NcPoly& p) {
        for (const auto& [d, comp] : p.homogeneous_components(theta_))
            if (!is_zero_vector(element(comp).c)) return false;
        return true;
    }

    Element letter(int i) { return {unit_degree(theta_, i), CycVector{CycScalar(1)}}; }
    Element one() { return {Degree(theta_, 0), CycVector{CycScalar(1)}}; }
    Element zero(const Degree& d) { return {d, CycVector(static_cast<std::size_t>(dim(d)), CycScalar(0))}; }

    Element mul(const Element& a, const Element& b) {
        Degree d = a.deg;
        for (int i = 0; i < theta_; ++i) d[i] += b.deg[i];
        ensure_box(d);
        const std::vector<Word>& ga = layers_.at(a.deg).basis;
        CycVector out(layers_.at(d).basis.size(), CycScalar(0));
        for (std::size_t g = 0; g < ga.size(); ++g) {
            if (a.c[g].is_zero()) continue;
            Degree cur = b.deg;
            CycVector v = b.c;
            const Word& w = ga[g];
            for (auto it = w.rbegin(); it != w.rend(); ++it) {
                const int k = *it;
                ++cur[k - 1];
                const Layer& lay = layers_.at(cur);
                v = mat_vec(lay.L[k - 1], v, lay.basis.size());
            }
            axpy(out, a.c[g], v);
        }
        return {d, out};
    }

    Element add(const Element& a, const Element& b) const {
        if (a.deg != b.deg) throw std::domain_error("add: degrees differ");
        Element out = a;
        axpy(out.c, CycScalar(1), b.c);
        return out;
    }
    Element scale(const CycScalar& s, const Element& a) const {
        Element out = a;
        for (auto& x : out.c) x = s * x;
        return out;
    }

    /// [a, b]_c = ab - chi(deg a, deg b) ba
    Element commutator(const Element& a, const Element& b) {
        Element ab = mul(a, b), ba = mul(b, a);
        axpy(ab.c, -B_.chi(a.deg, b.deg), ba.c);
        return ab;
    }

    Element power(const Element& a, int n) {
        Element out = one();
        for (int k = 0; k < n; ++k) out = mul(a, out);
        return out;
    }

    /// Class of the hyperletter [u]_c of a Lyndon word.
    Element hyperletter(const Word& u) {
        auto it = hyper_cache_.find(u);
        if (it != hyper_cache_.end()) return it->second;
        Element out;
        if (u.size() == 1) {
            out = letter(u[0]);
        } else {
            auto [v, w] = shirshov_decomposition(u);
            out = commutator(hyperletter(v), hyperletter(w));
        }
        hyper_cache_.emplace(u, out);
        return out;
    }

    bool is_zero(const Element& a) const { return is_zero_vector(a.c); }

    /// Coordinates of D_i applied to basis element g of degree b (a vector in degree b - e_i).
    const CycVector& derivation_column(const Degree& b, int i, std::size_t g) {
        ensure_box(b);
        return layers_.at(b).D[i - 1][g];
    }

    /// Degrees computed so far with their dimensions.
    std::map<Degree, int> dims() const {
        std::map<Degree, int> out;
        for (const auto& [d, lay] : layers_) out[d] = static_cast<int>(lay.basis.size());
        return out;
    }

private:
    struct Layer {
        std::vector<Word> basis;
        std::vector<CycMatrix> L;  // L[k]: one column per basis element of b - e_k
        std::vector<CycMatrix> D;  // D[i]: one column per basis element of b, living in b - e_i
    };

    BraidingMatrix B_;
    int theta_;
    std::map<Degree, Layer> layers_;
    std::map<Word, Element> hyper_cache_;

    void enumerate_total(Degree& d, int pos, int left, std::vector<Degree>& todo) {
        if (pos == theta_) {
            if (!layers_.count(d)) todo.push_back(d);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            d[pos] = x;
            enumerate_total(d, pos + 1, left - x, todo);
        }
        d[pos] = 0;
    }

    void process(std::vector<Degree> todo) {
        std::stable_sort(todo.begin(), todo.end(),
                         [](const Degree& a, const Degree& b) { return total_degree(a) < total_degree(b); });
        for (const Degree& d : todo)
            if (!layers_.count(d)) build(d);
    }

    const Layer* find(const Degree& d) const {
        for (int x : d)
            if (x < 0) return nullptr;
        auto it = layers_.find(d);
        if (it == layers_.end()) throw std::logic_error("quotient: missing lower layer");
        return &it->second;
    }

    static void eliminate_exact(const std::vector<CycVector>& vs, std::size_t n,
                                std::vector<std::optional<CycVector>>& deps) {
        deps.clear();
        TrackedEchelon ech(n);
        for (const auto& v : vs) deps.push_back(ech.add(v));
    }

    /// Elimination modulo primes p = 1 mod N; every reconstructed dependency is checked exactly.
    bool eliminate_modular(const std::vector<CycVector>& vs, std::size_t n,
                           std::vector<std::optional<CycVector>>& deps) const {
        for (int attempt = 0; attempt < 3; ++attempt) {
            try {
                ModTrackedEchelon ech(modp::Field::make(B_.conductor(), attempt), n);
                deps.clear();
                std::vector<std::size_t> kept;
                bool ok = true;
                for (std::size_t ci = 0; ci < vs.size() && ok; ++ci) {
                    std::vector<modp::Elem> mv;
                    mv.reserve(n);
                    for (const auto& x : vs[ci]) mv.push_back(ech.convert(x));
                    auto dep = ech.add(std::move(mv));
                    if (!dep) {
                        kept.push_back(ci);
                        deps.emplace_back(std::nullopt);
                        continue;
                    }
                    CycVector coords;
                    coords.reserve(dep->size());
                    for (const auto& e : *dep) {
                        auto lifted = ech.lift(e);
                        if (!lifted) {
                            ok = false;
                            break;
                        }
                        coords.push_back(std::move(*lifted));
                    }
                    if (!ok) break;
                    CycVector check(n, CycScalar(0));
                    for (std::size_t g = 0; g < coords.size(); ++g) axpy(check, coords[g], vs[kept[g]]);
                    for (std::size_t k = 0; k < n && ok; ++k)
                        if (check[k] != vs[ci][k]) ok = false;
                    deps.emplace_back(std::move(coords));
                }
                if (ok) return true;
            } catch (const ModTrackedEchelon::BadPrime&) {
            } catch (const std::domain_error&) {
            }
        }
        return false;
    }

    void build(const Degree& b) {
        const int t = theta_;
        std::vector<const Layer*> lower(t);      // layer b - e_i
        std::vector<std::size_t> offset(t + 1, 0);
        for (int i = 0; i < t; ++i) {
            Degree d = b;
            --d[i];
            lower[i] = find(d);
            offset[i + 1] = offset[i] + (lower[i] ? lower[i]->basis.size() : 0);
        }
        const std::size_t n = offset[t];

        struct Cand {
            int k;
            std::size_t idx;
            Word w;
        };
        std::vector<Cand> cands;
        for (int k = 0; k < t; ++k) {
            if (!lower[k]) continue;
            for (std::size_t g = 0; g < lower[k]->basis.size(); ++g) {
                Word w{k + 1};
                const Word& tail = lower[k]->basis[g];
                w.insert(w.end(), tail.begin(), tail.end());
                cands.push_back({k, g, std::move(w)});
            }
        }
        std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return lex_less(y.w, x.w); });

        Layer lay;
        lay.L.resize(t);
        lay.D.resize(t);
        for (int k = 0; k < t; ++k)
            if (lower[k]) lay.L[k].resize(lower[k]->basis.size());

        std::vector<CycVector> vs;
        vs.reserve(cands.size());
        for (const Cand& c : cands) {
            // D_i(x_k g) = x_k D_i(g) + delta_ik chi(e_i, deg g) g
            CycVector v(n, CycScalar(0));
            Degree bk = b;
            --bk[c.k];
            for (int i = 0; i < t; ++i) {
                if (!lower[i]) continue;
                if (bk[i] >= 1) {
                    const CycVector& dcol = lower[c.k]->D[i][c.idx];
                    const CycMatrix& Lk = lower[i]->L[c.k];
                    for (std::size_t j = 0; j < dcol.size(); ++j) {
                        if (dcol[j].is_zero()) continue;
                        const CycVector& col = Lk[j];
                        for (std::size_t r = 0; r < col.size(); ++r)
                            if (!col[r].is_zero()) v[offset[i] + r] += dcol[j] * col[r];
                    }
                }
                if (i == c.k) v[offset[i] + c.idx] += B_.chi(unit_degree(t, i + 1), bk);
            }
            vs.push_back(std::move(v));
        }

        std::vector<std::optional<CycVector>> deps;
        if (!eliminate_modular(vs, n, deps)) eliminate_exact(vs, n, deps);
        std::vector<CycVector> kept_vectors;
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            const Cand& c = cands[ci];
            if (deps[ci]) {
                lay.L[c.k][c.idx] = std::move(*deps[ci]);
            } else {
                CycVector unit(lay.basis.size() + 1, CycScalar(0));
                unit.back() = CycScalar(1);
                lay.L[c.k][c.idx] = std::move(unit);
                lay.basis.push_back(c.w);
                kept_vectors.push_back(std::move(vs[ci]));
            }
        }
        const std::size_t dimb = lay.basis.size();
        for (int k = 0; k < t; ++k)
            for (auto& col : lay.L[k]) col.resize(dimb, CycScalar(0));
        for (int i = 0; i < t; ++i) {
            if (!lower[i]) continue;
            const std::size_t len = lower[i]->basis.size();
            lay.D[i].reserve(dimb);
            for (const auto& v : kept_vectors)
                lay.D[i].emplace_back(v.begin() + static_cast<long>(offset[i]),
                                      v.begin() + static_cast<long>(offset[i] + len));
        }
        layers_.emplace(b, std::move(lay));
    }
};

/// p lies in the ideal iff every D_i(p) does; in degree zero iff p = 0.
inline bool in_ideal_recursive(const BraidingMatrix& B, const NcPoly& p) {
    if (p.is_zero()) return true;
    for (const auto& [d, comp] : p.homogeneous_components(B.theta())) {
        if (total_degree(d) == 0) return false;
        for (int i = 1; i <= B.theta(); ++i)
            if (!in_ideal_recursive(B, derivation_D(B, i, comp))) return false;
    }
    return true;
}

/// Ideal membership through the quotient engine.
inline bool in_ideal(const BraidingMatrix& B, const NcPoly& p) {
    NicholsQuotient Q(B);
    return Q.in_ideal(p);
}

}  // namespace nichols
