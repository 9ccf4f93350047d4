#pragma once

#include "nichols/freealgebra.hpp"
#include "nichols/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

constexpr int default_degree_cap = 10;

/// Degree cap, overridable through the NICHOLS_MAX_CAP environment variable.
inline int max_degree_cap() {
    if (const char* s = std::getenv("NICHOLS_MAX_CAP")) {
        try {
            int v = std::stoi(s);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
    }
    return default_degree_cap;
}

/// Graded dimensions of B(V) in all degrees of total degree at most cap (zero entries included).
struct HilbertPrefix {
    int cap = 0;
    std::map<Degree, long long> dims;

    long long at(const Degree& d) const {
        auto it = dims.find(d);
        return it == dims.end() ? 0 : it->second;
    }
    long long total() const {
        long long s = 0;
        for (const auto& [d, n] : dims) s += n;
        return s;
    }
};

/// All words of a given degree in lexicographic order.
inline std::vector<Word> words_of_degree(const Degree& d) {
    Word w;
    for (std::size_t i = 0; i < d.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(d[i]), static_cast<int>(i) + 1);
    std::vector<Word> out;
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// All degrees of total degree at most cap, by increasing total degree.
inline std::vector<Degree> degrees_up_to(int theta, int cap) {
    std::vector<Degree> out;
    for (int n = 0; n <= cap; ++n) {
        Degree d(theta, 0);
        std::vector<Degree> layer;
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == theta - 1) {
                d[pos] = left;
                layer.push_back(d);
                return;
            }
            for (int x = left; x >= 0; --x) {
                d[pos] = x;
                self(self, pos + 1, left - x);
            }
        };
        rec(rec, 0, n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

/// Gram matrix of the canonical form on the words of one degree (brute force).
inline std::vector<CycVector> gram_matrix(const BraidingMatrix& B, const Degree& d) {
    auto ws = words_of_degree(d);
    std::vector<CycVector> G(ws.size(), CycVector(ws.size(), CycScalar(0)));
    for (std::size_t a = 0; a < ws.size(); ++a)
        for (std::size_t b = 0; b < ws.size(); ++b)
            G[a][b] = bilinear_form(B, NcPoly::word(ws[a]), NcPoly::word(ws[b]));
    return G;
}

/// Ranks of Gram matrices of the canonical form, one degree at a time.
///
/// The row of (u x_i | -) equals the row of (u | -) in degree d - e_i composed with the matrix of D_i, so the
/// row space in degree d is spanned by the images of the row spaces one degree lower.
class GramEngine {
public:
    explicit GramEngine(BraidingMatrix B) : B_(std::move(B)), theta_(B_.theta()) {
        Layer zero;
        zero.words.push_back({});
        zero.index[{}] = 0;
        zero.rows.push_back(CycVector{CycScalar(1)});
        layers_.emplace(Degree(theta_, 0), std::move(zero));
    }

    const BraidingMatrix& braiding() const { return B_; }

    long long dim(const Degree& d) {
        for (int x : d)
            if (x < 0) return 0;
        ensure(d);
        return static_cast<long long>(layers_.at(d).rows.size());
    }

    /// Row-reduced basis of the row space of the Gram matrix in degree d, over the words of that degree.
    const std::vector<CycVector>& row_basis(const Degree& d) {
        ensure(d);
        return layers_.at(d).rows;
    }
    const std::vector<Word>& words(const Degree& d) {
        ensure(d);
        return layers_.at(d).words;
    }

    HilbertPrefix prefix(int cap) {
        HilbertPrefix h;
        h.cap = cap;
        for (const auto& d : degrees_up_to(theta_, cap)) h.dims[d] = dim(d);
        return h;
    }

private:
    struct Layer {
        std::vector<Word> words;
        std::map<Word, std::size_t> index;
        std::vector<CycVector> rows;
    };
    BraidingMatrix B_;
    int theta_;
    std::map<Degree, Layer> layers_;

    void ensure(const Degree& d) {
        if (layers_.count(d)) return;
        for (int i = 0; i < theta_; ++i) {
            if (d[i] == 0) continue;
            Degree e = d;
            --e[i];
            ensure(e);
        }
        build(d);
    }

    void build(const Degree& d) {
        Layer lay;
        lay.words = words_of_degree(d);
        for (std::size_t k = 0; k < lay.words.size(); ++k) lay.index[lay.words[k]] = k;
        const std::size_t n = lay.words.size();
        Echelon ech(n);
        for (int i = 1; i <= theta_; ++i) {
            if (d[i - 1] == 0) continue;
            Degree e = d;
            --e[i - 1];
            const Layer& low = layers_.at(e);
            if (low.rows.empty()) continue;
            // terms of D_i(w) for every word w of degree d: (index in degree e, coefficient)
            std::vector<std::vector<std::pair<std::size_t, CycScalar>>> dterms(n);
            const Degree ei = unit_degree(theta_, i);
            for (std::size_t k = 0; k < n; ++k) {
                const Word& w = lay.words[k];
                Degree after(theta_, 0);
                for (std::size_t l = w.size(); l-- > 0;) {
                    if (w[l] == i) {
                        Word u = w;
                        u.erase(u.begin() + static_cast<long>(l));
                        dterms[k].emplace_back(low.index.at(u), B_.chi(ei, after));
                    }
                    ++after[w[l] - 1];
                }
            }
            for (const auto& r : low.rows) {
                CycVector v(n, CycScalar(0));
                for (std::size_t k = 0; k < n; ++k)
                    for (const auto& [u, c] : dterms[k])
                        if (!r[u].is_zero()) v[k] += r[u] * c;
                ech.insert(std::move(v));
            }
        }
        lay.rows = ech.rows();
        layers_.emplace(d, std::move(lay));
    }
};

/// dim B(V)^alpha as the rank of the Gram matrix of the canonical form.
inline long long component_dim(const BraidingMatrix& B, const Degree& alpha, int cap = max_degree_cap()) {
    if (total_degree(alpha) > cap) throw std::domain_error("cap exceeded");
    GramEngine g(B);
    return g.dim(alpha);
}

/// Graded dimensions up to total degree cap, by Gram ranks.
inline HilbertPrefix hilbert_prefix(const BraidingMatrix& B, int cap = default_degree_cap) {
    if (cap > max_degree_cap()) throw std::domain_error("cap exceeded");
    GramEngine g(B);
    return g.prefix(cap);
}

}  // namespace nichols
