#pragma once

#include "nichols/cyclotomic.hpp"
#include "nichols/words.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nichols {

/// Diagonal braiding q_ij = zeta_N^{k_ij}. Vertex indices are 1-based throughout.
class BraidingMatrix {
public:
    BraidingMatrix() = default;
    BraidingMatrix(int theta, int conductor, std::vector<std::vector<int>> exponents)
        : theta_(theta), N_(conductor), k_(std::move(exponents)) {
        if (theta_ < 1) throw std::domain_error("braiding: theta must be positive");
        if (N_ < 1) throw std::domain_error("braiding: conductor must be positive");
        if (static_cast<int>(k_.size()) != theta_) throw std::domain_error("braiding: exponent matrix has wrong size");
        for (auto& row : k_) {
            if (static_cast<int>(row.size()) != theta_)
                throw std::domain_error("braiding: exponent matrix has wrong size");
            for (int& e : row) e = ((e % N_) + N_) % N_;
        }
        build_roots();
    }

    /// Builds a braiding from scalar entries, each of which must be a root of unity.
    static BraidingMatrix from_scalars(const std::vector<std::vector<CycScalar>>& q) {
        const int theta = static_cast<int>(q.size());
        int L = 1;
        std::vector<std::vector<std::pair<int, int>>> ex(theta);
        for (int i = 0; i < theta; ++i) {
            if (static_cast<int>(q[i].size()) != theta) throw std::domain_error("braiding: matrix not square");
            for (int j = 0; j < theta; ++j) {
                auto r = root_exponent(q[i][j]);
                if (!r) throw std::domain_error("braiding: entry is not a root of unity");
                ex[i].push_back(*r);
                L = std::lcm(L, r->first);
            }
        }
        std::vector<std::vector<int>> k(theta, std::vector<int>(theta));
        for (int i = 0; i < theta; ++i)
            for (int j = 0; j < theta; ++j) k[i][j] = ex[i][j].second * (L / ex[i][j].first);
        return BraidingMatrix(theta, L, k).minimized();
    }

    int theta() const { return theta_; }
    int conductor() const { return N_; }
    int exponent(int i, int j) const { return k_[i - 1][j - 1]; }
    const std::vector<std::vector<int>>& exponents() const { return k_; }

    const CycScalar& root(long long e) const { return (*roots_)[static_cast<std::size_t>(((e % N_) + N_) % N_)]; }
    const CycScalar& q(int i, int j) const { return root(k_[i - 1][j - 1]); }

    /// Exponent of chi(a, b) = prod q_ij^{a_i b_j}.
    int chi_exp(const Degree& a, const Degree& b) const {
        long long e = 0;
        for (int i = 0; i < theta_; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < theta_; ++j) e += static_cast<long long>(a[i]) * b[j] * k_[i][j];
        }
        return static_cast<int>(((e % N_) + N_) % N_);
    }
    const CycScalar& chi(const Degree& a, const Degree& b) const { return root(chi_exp(a, b)); }

    /// Same braiding over the smallest conductor containing all entries.
    BraidingMatrix minimized() const {
        int g = N_;
        for (const auto& row : k_)
            for (int e : row) g = std::gcd(g, e);
        if (g <= 1) return *this;
        std::vector<std::vector<int>> k = k_;
        for (auto& row : k)
            for (int& e : row) e /= g;
        return BraidingMatrix(theta_, N_ / g, k);
    }

    /// Same braiding written over the conductor M (a multiple of the current one).
    BraidingMatrix over_conductor(int M) const {
        if (M % N_ != 0) throw std::domain_error("braiding: conductor must be a multiple");
        std::vector<std::vector<int>> k = k_;
        for (auto& row : k)
            for (int& e : row) e *= M / N_;
        return BraidingMatrix(theta_, M, k);
    }

    friend bool operator==(const BraidingMatrix& a, const BraidingMatrix& b) {
        if (a.theta_ != b.theta_) return false;
        int L = std::lcm(a.N_, b.N_);
        for (int i = 0; i < a.theta_; ++i)
            for (int j = 0; j < a.theta_; ++j)
                if (static_cast<long long>(a.k_[i][j]) * (L / a.N_) % L !=
                    static_cast<long long>(b.k_[i][j]) * (L / b.N_) % L)
                    return false;
        return true;
    }

private:
    int theta_ = 0;
    int N_ = 1;
    std::vector<std::vector<int>> k_;
    std::shared_ptr<const std::vector<CycScalar>> roots_;

    void build_roots() {
        auto v = std::make_shared<std::vector<CycScalar>>();
        v->reserve(N_);
        for (int e = 0; e < N_; ++e) v->push_back(root_of_unity(N_, e));
        roots_ = v;
    }
};

/// Unit vector e_i (1-based).
inline Degree unit_degree(int theta, int i) {
    Degree d(theta, 0);
    d[i - 1] = 1;
    return d;
}

/// Element of T(V): a finite combination of words with nonzero coefficients.
class NcPoly {
public:
    using Terms = std::map<Word, CycScalar, DegLexLess>;

    NcPoly() = default;
    static NcPoly one() { return word({}); }
    static NcPoly letter(int i) { return word({i}); }
    static NcPoly word(const Word& w, const CycScalar& c = CycScalar(1)) {
        NcPoly p;
        p.add_term(w, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    CycScalar coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? CycScalar(0) : it->second;
    }

    void add_term(const Word& w, const CycScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_.emplace(w, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    NcPoly& operator+=(const NcPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NcPoly& operator-=(const NcPoly& o) {
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    friend NcPoly operator*(const CycScalar& s, const NcPoly& p) {
        NcPoly out;
        if (s.is_zero()) return out;
        for (const auto& [w, c] : p.terms_) out.terms_.emplace(w, s * c);
        return out;
    }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        NcPoly out;
        for (const auto& [u, cu] : a.terms_)
            for (const auto& [v, cv] : b.terms_) {
                Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                out.add_term(w, cu * cv);
            }
        return out;
    }
    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

    /// Homogeneous components keyed by Z^theta degree.
    std::map<Degree, NcPoly> homogeneous_components(int theta) const {
        std::map<Degree, NcPoly> out;
        for (const auto& [w, c] : terms_) out[word_degree(w, theta)].terms_.emplace(w, c);
        return out;
    }
    bool is_homogeneous(int theta) const { return homogeneous_components(theta).size() <= 1; }
    /// Degree of a nonzero homogeneous polynomial.
    Degree degree(int theta) const {
        if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
        auto comps = homogeneous_components(theta);
        if (comps.size() != 1) throw std::domain_error("polynomial is not homogeneous");
        return comps.begin()->first;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [w, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            std::string cs = c.to_string();
            if (cs != "1") s += "(" + cs + ")" + (w.empty() ? "" : "*");
            if (!w.empty() || cs == "1") s += word_to_string(w);
        }
        return s;
    }

private:
    Terms terms_;
};

/// Element of T(V) (x) T(V).
class TensorPoly {
public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, CycScalar>;

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    CycScalar coeff(const Word& a, const Word& b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? CycScalar(0) : it->second;
    }
    void add_term(const Word& a, const Word& b, const CycScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find({a, b});
        if (it == terms_.end()) {
            terms_.emplace(Key{a, b}, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    TensorPoly& operator+=(const TensorPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
        return *this;
    }
    TensorPoly& operator-=(const TensorPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
    friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }
    friend bool operator==(const TensorPoly& a, const TensorPoly& b) { return a.terms_ == b.terms_; }

    /// a (x) b for polynomials a, b.
    static TensorPoly tensor(const NcPoly& a, const NcPoly& b, const CycScalar& s = CycScalar(1)) {
        TensorPoly out;
        for (const auto& [u, cu] : a.terms())
            for (const auto& [v, cv] : b.terms()) out.add_term(u, v, s * cu * cv);
        return out;
    }

    /// Restriction to left length i and right length j.
    TensorPoly component(std::size_t i, std::size_t j) const {
        TensorPoly out;
        for (const auto& [k, c] : terms_)
            if (k.first.size() == i && k.second.size() == j) out.terms_.emplace(k, c);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += "(" + c.to_string() + ")*" + word_to_string(k.first) + "(x)" + word_to_string(k.second);
        }
        return s;
    }

private:
    Terms terms_;
};

inline const CycScalar& chi(const BraidingMatrix& B, const Degree& a, const Degree& b) { return B.chi(a, b); }

/// [x, y]_c = xy - chi(deg x, deg y) yx, extended bilinearly over homogeneous parts.
inline NcPoly braided_commutator(const BraidingMatrix& B, const NcPoly& x, const NcPoly& y) {
    NcPoly out;
    const auto xs = x.homogeneous_components(B.theta());
    const auto ys = y.homogeneous_components(B.theta());
    for (const auto& [a, xa] : xs)
        for (const auto& [b, yb] : ys) {
            out += xa * yb;
            out -= B.chi(a, b) * (yb * xa);
        }
    return out;
}

/// (ad_c x_i)^r (x_j).
inline NcPoly ad_pow(const BraidingMatrix& B, int i, int r, int j) {
    if (i == j) throw std::domain_error("ad_pow: i must differ from j");
    if (r < 0) throw std::domain_error("ad_pow: negative power");
    NcPoly z = NcPoly::letter(j);
    const NcPoly xi = NcPoly::letter(i);
    for (int t = 0; t < r; ++t) z = braided_commutator(B, xi, z);
    return z;
}

/// Hyperletter [u]_c of a Lyndon word via its Shirshov decomposition.
inline NcPoly hyperletter(const BraidingMatrix& B, const Word& u) {
    if (!is_lyndon(u)) throw std::domain_error("hyperletter: word is not Lyndon");
    if (u.size() == 1) return NcPoly::letter(u[0]);
    auto [v, w] = shirshov_decomposition(u);
    NcPoly out = braided_commutator(B, hyperletter(B, v), hyperletter(B, w));
    for (const auto& [word, c] : out.terms()) {
        if (word == u) {
            if (!c.is_one()) throw std::logic_error("hyperletter: leading coefficient is not 1");
        } else if (word.size() != u.size() || !lex_less(u, word)) {
            throw std::logic_error("hyperletter: term not lexicographically above the Lyndon word");
        }
    }
    if (out.coeff(u).is_zero()) throw std::logic_error("hyperletter: leading word missing");
    return out;
}

namespace detail {

/// Adds the terms of the braided coproduct of a single word with right part of size in [lo, hi].
inline void coproduct_word(const BraidingMatrix& B, const Word& w, const CycScalar& c, std::size_t lo, std::size_t hi,
                           TensorPoly& out) {
    const std::size_t n = w.size();
    if (n > 30) throw std::domain_error("coproduct: word too long");
    const unsigned long long total = 1ULL << n;
    for (unsigned long long S = 0; S < total; ++S) {
        const std::size_t rs = static_cast<std::size_t>(__builtin_popcountll(S));
        if (rs < lo || rs > hi) continue;
        Word left, right;
        long long e = 0;
        for (std::size_t k = 0; k < n; ++k) {
            if (S >> k & 1ULL) {
                right.push_back(w[k]);
                for (std::size_t l = k + 1; l < n; ++l)
                    if (!(S >> l & 1ULL)) e += B.exponent(w[k], w[l]);
            } else {
                left.push_back(w[k]);
            }
        }
        out.add_term(left, right, c * B.root(e));
    }
}

}  // namespace detail

/// Delta(p) in the braided tensor product, multiplicatively extended from Delta(x_i) = x_i (x) 1 + 1 (x) x_i.
inline TensorPoly coproduct(const BraidingMatrix& B, const NcPoly& p) {
    TensorPoly out;
    for (const auto& [w, c] : p.terms()) detail::coproduct_word(B, w, c, 0, w.size(), out);
    return out;
}

/// Component of Delta(p) with left length i and right length j, computed without the full coproduct.
inline TensorPoly coproduct_component(const BraidingMatrix& B, const NcPoly& p, std::size_t i, std::size_t j) {
    TensorPoly out;
    for (const auto& [w, c] : p.terms()) {
        if (w.size() != i + j) continue;
        detail::coproduct_word(B, w, c, j, j, out);
    }
    return out;
}

/// Skew derivation D_i: Delta_{n-1,1}(x) = sum_i D_i(x) (x) x_i.
inline NcPoly derivation_D(const BraidingMatrix& B, int i, const NcPoly& p) {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) {
        long long e = 0;
        for (std::size_t k = w.size(); k-- > 0;) {
            if (w[k] == i) {
                Word v = w;
                v.erase(v.begin() + static_cast<long>(k));
                out.add_term(v, c * B.root(e));
            }
            e += B.exponent(i, w[k]);
        }
    }
    return out;
}

/// Skew derivation F_i: Delta_{1,n-1}(x) = sum_i x_i (x) F_i(x).
inline NcPoly derivation_F(const BraidingMatrix& B, int i, const NcPoly& p) {
    NcPoly out;
    for (const auto& [w, c] : p.terms()) {
        long long e = 0;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] == i) {
                Word v = w;
                v.erase(v.begin() + static_cast<long>(k));
                out.add_term(v, c * B.root(e));
            }
            e += B.exponent(w[k], i);
        }
    }
    return out;
}

/// Canonical form with (x_i | x_j) = delta_ij, (x | y y') = (x_(1) | y)(x_(2) | y').
/// For a word y = x_{j1}...x_{jn}: (x | y) = D_{j1}(D_{j2}(...D_{jn}(x))) in degree 0.
inline CycScalar bilinear_form(const BraidingMatrix& B, const NcPoly& x, const NcPoly& y) {
    CycScalar total(0);
    for (const auto& [w, cw] : y.terms()) {
        NcPoly p;
        for (const auto& [u, cu] : x.terms())
            if (u.size() == w.size()) p.add_term(u, cu);
        for (std::size_t k = w.size(); k-- > 0 && !p.is_zero();) p = derivation_D(B, w[k], p);
        total += cw * p.coeff({});
    }
    return total;
}

}  // namespace nichols
