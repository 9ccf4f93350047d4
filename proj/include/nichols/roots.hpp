#pragma once

#include "nichols/classify.hpp"
#include "nichols/gram.hpp"
#include "nichols/quotient.hpp"
#include "nichols/weyl.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nichols {

/// A PBW generator: Lyndon word l with degree alpha, q_alpha = chi(alpha, alpha) and its height.
struct RootDatum {
    Degree alpha;
    Word lyndon;
    CycScalar q_alpha;
    std::optional<int> height;  // nullopt: infinite

    std::string height_string() const { return height ? std::to_string(*height) : "infinite"; }
};

/// Height N_alpha = ord chi(alpha, alpha), infinite when chi(alpha, alpha) = 1.
inline std::optional<int> height_of(const BraidingMatrix& B, const Degree& alpha) {
    const int e = B.chi_exp(alpha, alpha);
    if (e == 0) return std::nullopt;
    return B.conductor() / std::gcd(e, B.conductor());
}

inline RootDatum make_root_datum(const BraidingMatrix& B, const Word& u) {
    RootDatum r;
    r.alpha = word_degree(u, B.theta());
    r.lyndon = u;
    r.q_alpha = B.chi(r.alpha, r.alpha);
    r.height = height_of(B, r.alpha);
    return r;
}

struct PbwGenerators {
    int cap = 0;
    std::vector<RootDatum> roots;
    /// True when the cap may have cut off generators of higher degree.
    bool partial = false;
};

namespace detail {

/// Highest total degree of a positive root when B is standard of finite type.
inline std::optional<int> max_root_height(const BraidingMatrix& B) {
    const MMatrix m = m_matrix(B);
    if (!all_defined(m)) return std::nullopt;
    try {
        if (!is_standard(B).standard) return std::nullopt;
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
    const CartanMatrix C = cartan_matrix(m);
    if (!finite_type(C).finite) return std::nullopt;
    int h = 0;
    for (const auto& a : positive_roots(C)) h = std::max(h, total_degree(a));
    return h;
}

}  // namespace detail

/// Lyndon words in the basis G_I of B(V) up to total degree cap, i.e. the set S_I, with root data.
inline PbwGenerators pbw_generators(NicholsQuotient& Q, int cap) {
    const BraidingMatrix& B = Q.braiding();
    PbwGenerators out;
    out.cap = cap;
    Q.ensure_total(cap);
    bool top_nonzero = false;
    for (const auto& d : degrees_up_to(B.theta(), cap)) {
        const auto& G = Q.basis(d);
        if (total_degree(d) == cap && !G.empty()) top_nonzero = true;
        if (total_degree(d) == 0) continue;
        for (const auto& u : G)
            if (is_lyndon(u)) out.roots.push_back(make_root_datum(B, u));
    }
    if (top_nonzero) {
        auto h = detail::max_root_height(B);
        out.partial = !h || *h > cap;
    }
    return out;
}

inline PbwGenerators pbw_generators(const BraidingMatrix& B, int cap = default_degree_cap) {
    if (cap > max_degree_cap()) throw std::domain_error("cap exceeded");
    NicholsQuotient Q(B);
    return pbw_generators(Q, cap);
}

/// h_I(u) read off the quotient: least t with u^t outside G_I, searched for t <= max_t.
inline std::optional<int> observed_height(NicholsQuotient& Q, const Word& u, int max_t) {
    Word p;
    for (int t = 1; t <= max_t; ++t) {
        p.insert(p.end(), u.begin(), u.end());
        const auto& G = Q.basis(word_degree(p, Q.theta()));
        if (std::find(G.begin(), G.end(), p) == G.end()) return t;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Lyndon words per positive root

/// Good Lyndon words of a finite-type Cartan matrix for the order 1 < 2 < ... < theta:
/// l(alpha) = max { l(beta) l(gamma) : alpha = beta + gamma, l(beta) < l(gamma) }.
inline std::map<Degree, Word> good_lyndon_words(const CartanMatrix& C) {
    const auto roots = positive_roots(C);
    std::map<Degree, Word> l;
    for (const auto& a : roots) {
        if (total_degree(a) == 1) {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i]) l[a] = Word{static_cast<int>(i) + 1};
            continue;
        }
        std::optional<Word> best;
        for (const auto& [b, lb] : l) {
            Degree c = a;
            bool ok = true;
            for (std::size_t i = 0; i < a.size(); ++i) {
                c[i] -= b[i];
                if (c[i] < 0) ok = false;
            }
            if (!ok) continue;
            auto it = l.find(c);
            if (it == l.end() || !lex_less(lb, it->second)) continue;
            Word w = lb;
            w.insert(w.end(), it->second.begin(), it->second.end());
            if (!best || lex_less(*best, w)) best = w;
        }
        if (!best) throw std::logic_error("good Lyndon words: root without decomposition");
        l[a] = *best;
    }
    return l;
}

namespace detail {

inline Word run(int from, int to) {
    Word w;
    if (from <= to)
        for (int k = from; k <= to; ++k) w.push_back(k);
    else
        for (int k = from; k >= to; --k) w.push_back(k);
    return w;
}

inline Word cat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline const std::map<Degree, Word>& cached_good_words(char series, int rank) {
    static std::map<std::pair<char, int>, std::map<Degree, Word>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(series, rank);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, good_lyndon_words(cartan_of_type(series, rank))).first;
    return it->second;
}

/// Full-support roots of F4 and their listed words.
inline const std::map<Degree, Word>& f4_full_support_words() {
    static const std::map<Degree, Word> t = {
        {{1, 1, 1, 1}, {1, 2, 3, 4}},
        {{1, 1, 2, 1}, {1, 2, 3, 4, 3}},
        {{1, 2, 2, 1}, {1, 2, 3, 4, 3, 2}},
        {{1, 2, 3, 1}, {1, 2, 3, 4, 3, 2, 3}},
        {{1, 1, 2, 2}, {1, 2, 3, 4, 3, 4}},
        {{1, 2, 2, 2}, {1, 2, 3, 4, 3, 4, 2}},
        {{1, 2, 3, 2}, {1, 2, 3, 4, 3, 4, 2, 3}},
        {{1, 2, 4, 2}, {1, 2, 3, 4, 3, 4, 2, 3, 3}},
        {{1, 3, 4, 2}, {1, 2, 3, 4, 3, 4, 2, 3, 3, 2}},
        {{2, 3, 4, 2}, {1, 2, 3, 4, 3, 1, 2, 3, 4, 3, 2}},
    };
    return t;
}

}  // namespace detail

/// Lyndon word of a positive root for a Cartan series and rank in canonical numbering.
///
/// Closed forms for A, B, C, D, G2 and the full-support roots of F4; the remaining F4 roots and all
/// E roots use good_lyndon_words.
inline Word lyndon_word_for_root(char series, int rank, const Degree& alpha) {
    const CartanMatrix C = cartan_of_type(series, rank);
    const auto roots = positive_roots(C);
    if (static_cast<int>(alpha.size()) != rank || std::find(roots.begin(), roots.end(), alpha) == roots.end())
        throw std::domain_error("lyndon_word_for_root: " + degree_to_string(alpha) + " is not a positive root of " +
                                std::string(1, series) + std::to_string(rank));
    const int t = rank;
    auto a = [&](int k) { return alpha[k - 1]; };
    int i = 1;
    while (a(i) == 0) ++i;
    int last = t;
    while (a(last) == 0) --last;
    bool all_one = true;
    for (int k = i; k <= last; ++k)
        if (a(k) != 1) all_one = false;
    using detail::cat;
    using detail::run;
    switch (series) {
        case 'A':
            return run(i, last);
        case 'B': {
            if (all_one) return run(i, last);
            // v_{p,j}: 2 on 1..p, 1 on p+1..j
            int p = 0;
            while (p + 1 <= t && a(p + 1) == 2) ++p;
            return cat(run(1, p), run(1, last));
        }
        case 'C': {
            if (all_one) return run(i, last);
            int j = i;
            while (a(j) != 2) ++j;
            if (i < j) return cat(cat(run(i, t - 1), Word{t}), run(t - 1, j));
            return cat(cat(run(i, t - 1), run(i, t - 1)), Word{t});
        }
        case 'D': {
            if (a(t) == 0) return run(i, last);
            if (i == t) return {t};
            if (a(t - 1) == 0) return cat(run(i, t - 2), Word{t});
            bool has_two = false;
            int j = t - 1;
            for (int k = i; k <= t - 2; ++k)
                if (a(k) == 2) {
                    has_two = true;
                    j = std::min(j, k);
                }
            if (!has_two) return cat(run(i, t - 2), Word{t, t - 1});
            return cat(cat(run(i, t - 2), Word{t, t - 1}), run(t - 2, j));
        }
        case 'F': {
            if (a(1) != 0 && a(4) != 0) return detail::f4_full_support_words().at(alpha);
            return detail::cached_good_words('F', 4).at(alpha);
        }
        case 'G': {
            if (a(2) == 0) return {1};
            if (a(1) == 0) return {2};
            if (a(2) == 1) return cat(Word(static_cast<std::size_t>(a(1)), 1), Word{2});
            return {1, 1, 2, 1, 2};
        }
        case 'E':
            return detail::cached_good_words('E', rank).at(alpha);
        default:
            throw std::domain_error("lyndon_word_for_root: unknown series");
    }
}

/// Lyndon word of a root for a connected standard class, in the class's canonical numbering.
inline Word lyndon_word_for_root(const StandardClass& c, const Degree& alpha) {
    if (!c.standard() || std::holds_alternative<ClassDisconnected>(c.v))
        throw std::domain_error("lyndon_word_for_root: needs a connected standard class");
    return lyndon_word_for_root(c.series(), c.rank(), alpha);
}

/// Positive roots of a connected class in canonical numbering.
inline std::vector<Degree> class_positive_roots(const StandardClass& c) {
    return positive_roots(cartan_of_type(c.series(), c.rank()));
}

}  // namespace nichols
