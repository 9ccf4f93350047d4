#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nichols {

/// A word over the letters 1..theta.
using Word = std::vector<int>;
/// A Z^theta degree.
using Degree = std::vector<int>;

inline Degree word_degree(const Word& u, int theta) {
    Degree d(theta, 0);
    for (int a : u) {
        if (a < 1 || a > theta) throw std::domain_error("letter out of range");
        ++d[a - 1];
    }
    return d;
}

inline int total_degree(const Degree& d) {
    int s = 0;
    for (int x : d) s += x;
    return s;
}

/// Lexicographic order in which a proper prefix is smaller.
inline bool lex_less(const Word& u, const Word& v) {
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
}

/// Deg-lex order: longer words are smaller; equal lengths compare lexicographically.
inline bool deg_lex_less(const Word& u, const Word& v) {
    if (u.size() != v.size()) return u.size() > v.size();
    return lex_less(u, v);
}

struct DegLexLess {
    bool operator()(const Word& u, const Word& v) const { return deg_lex_less(u, v); }
};

inline bool is_lyndon(const Word& u) {
    if (u.empty()) throw std::domain_error("is_lyndon: empty word");
    for (std::size_t k = 1; k < u.size(); ++k) {
        Word suffix(u.begin() + static_cast<long>(k), u.end());
        if (!lex_less(u, suffix)) return false;
    }
    return true;
}

/// Lyndon words of length at most max_len in lexicographic order (Duval's generator),
/// optionally restricted to degrees bounded componentwise by box.
inline std::vector<Word> enumerate_lyndon(int theta, int max_len, const std::optional<Degree>& box = std::nullopt) {
    if (theta < 1 || max_len < 1) throw std::domain_error("enumerate_lyndon: bad arguments");
    std::vector<Word> out;
    Word w{1};
    while (!w.empty()) {
        bool keep = true;
        if (box) {
            Degree d = word_degree(w, theta);
            for (int i = 0; i < theta; ++i)
                if (d[i] > (*box)[i]) keep = false;
        }
        if (keep) out.push_back(w);
        const std::size_t m = w.size();
        while (w.size() < static_cast<std::size_t>(max_len)) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == theta) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

/// Factorization u = l_1 ... l_r into Lyndon words with l_1 >= ... >= l_r.
inline std::vector<Word> lyndon_factorization(const Word& u) {
    if (u.empty()) throw std::domain_error("lyndon_factorization: empty word");
    std::vector<Word> out;
    const std::size_t n = u.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && u[k] <= u[j]) {
            k = (u[k] < u[j]) ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            out.emplace_back(u.begin() + static_cast<long>(i), u.begin() + static_cast<long>(i + j - k));
            i += j - k;
        }
    }
    return out;
}

/// Splits a Lyndon word u = vw where w is the smallest proper nonempty suffix.
inline std::pair<Word, Word> shirshov_decomposition(const Word& u) {
    if (u.size() < 2) throw std::domain_error("shirshov_decomposition: word of length < 2");
    if (!is_lyndon(u)) throw std::domain_error("shirshov_decomposition: word is not Lyndon");
    std::size_t best = 1;
    for (std::size_t k = 2; k < u.size(); ++k) {
        Word a(u.begin() + static_cast<long>(k), u.end());
        Word b(u.begin() + static_cast<long>(best), u.end());
        if (lex_less(a, b)) best = k;
    }
    return {Word(u.begin(), u.begin() + static_cast<long>(best)), Word(u.begin() + static_cast<long>(best), u.end())};
}

/// Renders a word as x1x2x1.
inline std::string word_to_string(const Word& u) {
    if (u.empty()) return "1";
    std::string s;
    for (int a : u) s += "x" + std::to_string(a);
    return s;
}

/// Renders a degree as 3a1+2a2.
inline std::string degree_to_string(const Degree& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (d[i] != 1) s += std::to_string(d[i]);
        s += "a" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

}  // namespace nichols
