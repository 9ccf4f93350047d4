#include <doctest.h>

#include "oracle.hpp"

using namespace nichols;

namespace {

constexpr int cases = 1000;

using Triple = std::map<std::tuple<Word, Word, Word>, CycScalar>;

void add3(Triple& t, const Word& a, const Word& b, const Word& c, const CycScalar& v) {
    auto [it, fresh] = t.emplace(std::make_tuple(a, b, c), v);
    if (!fresh) {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

}  // namespace

TEST_CASE("braided Jacobi identity") {
    // [[x,y]_c,z]_c = [x,[y,z]_c]_c - chi(a,b) y [x,z]_c + chi(b,c) [x,z]_c y
    std::mt19937 rng(1001);
    for (int it = 0; it < cases; ++it) {
        const int theta = 2 + it % 2;
        const BraidingMatrix B = oracle::random_braiding(theta, 2 + static_cast<int>(rng() % 11), rng);
        const NcPoly x = oracle::random_homogeneous(B, 1 + static_cast<int>(rng() % 2), rng);
        const NcPoly y = oracle::random_homogeneous(B, 1 + static_cast<int>(rng() % 2), rng);
        const NcPoly z = oracle::random_homogeneous(B, 1 + static_cast<int>(rng() % 2), rng);
        const Degree a = x.degree(theta), b = y.degree(theta), c = z.degree(theta);
        const NcPoly xz = braided_commutator(B, x, z);
        const NcPoly lhs = braided_commutator(B, braided_commutator(B, x, y), z);
        const NcPoly rhs = braided_commutator(B, x, braided_commutator(B, y, z)) - chi(B, a, b) * (y * xz) + chi(B, b, c) * (xz * y);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("skew derivation product rules") {
    std::mt19937 rng(1002);
    for (int it = 0; it < cases; ++it) {
        const int theta = 2 + it % 2;
        const BraidingMatrix B = oracle::random_braiding(theta, 2 + static_cast<int>(rng() % 11), rng);
        const NcPoly x = oracle::random_homogeneous(B, 1 + static_cast<int>(rng() % 3), rng);
        const NcPoly y = oracle::random_homogeneous(B, 1 + static_cast<int>(rng() % 3), rng);
        const int i = 1 + static_cast<int>(rng() % theta);
        const Degree ei = unit_degree(theta, i);
        CHECK(derivation_D(B, i, x * y) == x * derivation_D(B, i, y) + chi(B, ei, y.degree(theta)) * (derivation_D(B, i, x) * y));
        CHECK(derivation_F(B, i, x * y) == derivation_F(B, i, x) * y + chi(B, x.degree(theta), ei) * (x * derivation_F(B, i, y)));
    }
}

TEST_CASE("canonical form is symmetric for symmetric braidings") {
    std::mt19937 rng(1003);
    for (int it = 0; it < cases; ++it) {
        const int theta = 2 + it % 2;
        const BraidingMatrix B = oracle::random_braiding(theta, 2 + static_cast<int>(rng() % 11), rng, true);
        const int n = 1 + static_cast<int>(rng() % 4);
        const NcPoly u = oracle::random_homogeneous(B, n, rng);
        NcPoly v;
        for (const auto& [w, c] : u.terms()) {
            Word s = w;
            std::shuffle(s.begin(), s.end(), rng);
            v.add_term(s, B.root(static_cast<int>(rng() % B.conductor())));
        }
        CHECK(bilinear_form(B, u, v) == bilinear_form(B, v, u));
    }
}

TEST_CASE("coproduct is coassociative") {
    std::mt19937 rng(1004);
    for (int it = 0; it < cases; ++it) {
        const int theta = 2 + it % 2;
        const BraidingMatrix B = oracle::random_braiding(theta, 2 + static_cast<int>(rng() % 11), rng);
        const Word w = oracle::random_word(theta, 1 + static_cast<int>(rng() % 5), rng);
        Triple left, right;
        for (const auto& [k, c] : oracle::from_library(coproduct(B, NcPoly::word(w)))) {
            for (const auto& [k2, c2] : oracle::coproduct_word(B, k.first)) add3(left, k2.first, k2.second, k.second, c * c2);
            for (const auto& [k2, c2] : oracle::coproduct_word(B, k.second)) add3(right, k.first, k2.first, k2.second, c * c2);
        }
        CHECK(left == right);
    }
}

TEST_CASE("Lyndon factorization invariants") {
    std::mt19937 rng(1005);
    for (int it = 0; it < cases; ++it) {
        const int theta = 1 + it % 3;
        const Word w = oracle::random_word(theta, 1 + static_cast<int>(rng() % 10), rng);
        const auto f = lyndon_factorization(w);
        Word joined;
        for (std::size_t k = 0; k < f.size(); ++k) {
            CHECK(oracle::lyndon_by_rotation(f[k]));
            if (k > 0) CHECK_FALSE(lex_less(f[k - 1], f[k]));
            joined.insert(joined.end(), f[k].begin(), f[k].end());
        }
        CHECK(joined == w);
        CHECK(is_lyndon(w) == (f.size() == 1));
    }
}

TEST_CASE("Shirshov decomposition invariants") {
    std::mt19937 rng(1006);
    int checked = 0;
    while (checked < cases) {
        const Word w = oracle::random_word(2 + checked % 2, 2 + static_cast<int>(rng() % 8), rng);
        if (!oracle::lyndon_by_rotation(w)) continue;
        const auto [u, v] = shirshov_decomposition(w);
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(uv == w);
        CHECK(is_lyndon(u));
        CHECK(is_lyndon(v));
        // v is the longest proper Lyndon suffix
        for (std::size_t s = 1; s < w.size() - v.size(); ++s) CHECK_FALSE(oracle::lyndon_by_rotation(Word(w.begin() + static_cast<long>(s), w.end())));
        ++checked;
    }
}

TEST_CASE("concatenation of increasing Lyndon words is Lyndon") {
    std::mt19937 rng(1007);
    int checked = 0;
    while (checked < cases) {
        const int theta = 2 + checked % 2;
        const Word a = oracle::random_word(theta, 1 + static_cast<int>(rng() % 5), rng);
        const Word b = oracle::random_word(theta, 1 + static_cast<int>(rng() % 5), rng);
        if (!is_lyndon(a) || !is_lyndon(b) || !lex_less(a, b)) continue;
        Word ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        CHECK(is_lyndon(ab));
        ++checked;
    }
}
