#pragma once

// Independent reference computations used only by the tests.

#include "nichols.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <random>
#include <tuple>
#include <vector>

namespace oracle {

using nichols::BraidingMatrix;
using nichols::CycScalar;
using nichols::NcPoly;
using nichols::Word;

/// Numerical value of x with zeta_N = exp(2 pi i / N).
inline std::complex<double> to_complex(const CycScalar& x) {
    const double t = 2.0 * std::numbers::pi / x.conductor();
    std::complex<double> z(0.0, 0.0);
    for (int k = 0; k < x.degree(); ++k) z += x.coeffs()[static_cast<std::size_t>(k)].to_mpq().get_d() * std::polar(1.0, t * k);
    return z;
}

inline bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-8) { return std::abs(a - b) < tol; }

/// All words of length n over 1..theta.
inline std::vector<Word> all_words(int theta, int n) {
    std::vector<Word> out;
    Word w(static_cast<std::size_t>(n), 1);
    if (n == 0) return {Word{}};
    while (true) {
        out.push_back(w);
        int k = n - 1;
        while (k >= 0 && w[k] == theta) w[k--] = 1;
        if (k < 0) break;
        ++w[k];
    }
    return out;
}

/// Lyndon test by conjugates: u is Lyndon iff it is strictly smaller than every proper rotation.
inline bool lyndon_by_rotation(const Word& u) {
    for (std::size_t k = 1; k < u.size(); ++k) {
        Word r(u.begin() + static_cast<long>(k), u.end());
        r.insert(r.end(), u.begin(), u.begin() + static_cast<long>(k));
        if (!(u < r)) return false;
    }
    return true;
}

/// Tensor algebra element as a map from (left, right) words to scalars.
using Tensor = std::map<std::pair<Word, Word>, CycScalar>;

inline void add(Tensor& t, const Word& a, const Word& b, const CycScalar& c) {
    auto& v = t[{a, b}];
    v += c;
    if (v.is_zero()) t.erase({a, b});
}

/// Coproduct of a word from the shuffle expansion: each subset S of positions goes left, its
/// complement right, weighted by the braiding of every pair (right letter before left letter).
inline Tensor coproduct_word(const BraidingMatrix& B, const Word& w) {
    Tensor out;
    const std::size_t n = w.size();
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        Word a, b;
        long long e = 0;
        for (std::size_t p = 0; p < n; ++p) {
            if (mask >> p & 1UL) {
                a.push_back(w[p]);
                for (std::size_t r = 0; r < p; ++r)
                    if (!(mask >> r & 1UL)) e += B.exponent(w[r], w[p]);
            } else {
                b.push_back(w[p]);
            }
        }
        add(out, a, b, B.root(e));
    }
    return out;
}

inline Tensor coproduct(const BraidingMatrix& B, const NcPoly& p) {
    Tensor out;
    for (const auto& [w, c] : p.terms())
        for (const auto& [k, v] : coproduct_word(B, w)) add(out, k.first, k.second, c * v);
    return out;
}

inline Tensor from_library(const nichols::TensorPoly& t) {
    Tensor out;
    for (const auto& [k, c] : t.terms()) add(out, k.first, k.second, c);
    return out;
}

/// Random braiding with exponents uniform in [0, N).
inline BraidingMatrix random_braiding(int theta, int N, std::mt19937& rng, bool symmetric = false) {
    std::uniform_int_distribution<int> e(0, N - 1);
    std::vector<std::vector<int>> k(theta, std::vector<int>(theta));
    for (int i = 0; i < theta; ++i)
        for (int j = 0; j < theta; ++j) k[i][j] = (symmetric && j < i) ? k[j][i] : e(rng);
    return BraidingMatrix(theta, N, k);
}

inline Word random_word(int theta, int len, std::mt19937& rng) {
    std::uniform_int_distribution<int> l(1, theta);
    Word w(static_cast<std::size_t>(len));
    for (auto& a : w) a = l(rng);
    return w;
}

/// Random homogeneous polynomial: a few permutations of one random word with random small coefficients.
inline NcPoly random_homogeneous(const BraidingMatrix& B, int len, std::mt19937& rng) {
    const Word base = random_word(B.theta(), len, rng);
    std::uniform_int_distribution<int> c(-3, 3), terms(1, 3), ex(0, B.conductor() - 1);
    NcPoly p;
    const int t = terms(rng);
    for (int s = 0; s < t; ++s) {
        Word w = base;
        std::shuffle(w.begin(), w.end(), rng);
        p.add_term(w, CycScalar(c(rng)) * B.root(ex(rng)));
    }
    if (p.is_zero()) p.add_term(base, CycScalar(1));
    return p;
}

/// Product over positive roots of (1 + t^a + ... + t^((h-1)a)), truncated to total degree cap.
inline std::map<nichols::Degree, long long> pbw_series(int theta, const std::vector<std::pair<nichols::Degree, int>>& roots,
                                                       int cap) {
    std::map<nichols::Degree, long long> s{{nichols::Degree(theta, 0), 1}};
    for (const auto& [a, h] : roots) {
        std::map<nichols::Degree, long long> next;
        for (const auto& [d, c] : s)
            for (int e = 0; e < h; ++e) {
                nichols::Degree x = d;
                for (int i = 0; i < theta; ++i) x[i] += e * a[i];
                if (nichols::total_degree(x) > cap) break;
                next[x] += c;
            }
        s = std::move(next);
    }
    return s;
}

}  // namespace oracle
