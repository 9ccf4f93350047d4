#include <doctest.h>

#include "oracle.hpp"

using namespace nichols;

namespace {

NcPoly x(int i) { return NcPoly::letter(i); }
NcPoly w(const Word& u) { return NcPoly::word(u); }

// A generic rank-3 braiding with all entries distinct from 1.
const BraidingMatrix& generic() {
    static const BraidingMatrix B(3, 11, {{2, 3, 5}, {7, 4, 1}, {6, 9, 8}});
    return B;
}

}  // namespace

TEST_CASE("chi is the bicharacter of the matrix") {
    const auto& B = generic();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(chi(B, unit_degree(3, i), unit_degree(3, j)) == B.q(i, j));
    CHECK(chi(B, {0, 0, 0}, {4, 1, 2}).is_one());
    CHECK(chi(B, {1, 1, 0}, {1, 0, 0}) == B.q(1, 1) * B.q(2, 1));
}

TEST_CASE("braided commutator expansions") {
    const auto& B = generic();
    CHECK(braided_commutator(B, x(1), x(2)) == w({1, 2}) - B.q(1, 2) * w({2, 1}));
    const BraidingMatrix T(1, 3, {{0}});
    CHECK(braided_commutator(T, x(1), x(1)).is_zero());
    const NcPoly expected =
        w({1, 1, 2}) - ((CycScalar(1) + B.q(1, 1)) * B.q(1, 2)) * w({1, 2, 1}) + (B.q(1, 1) * B.q(1, 2) * B.q(1, 2)) * w({2, 1, 1});
    CHECK(braided_commutator(B, x(1), braided_commutator(B, x(1), x(2))) == expected);
    CHECK(ad_pow(B, 1, 2, 2) == expected);
}

TEST_CASE("ad_pow boundary cases") {
    const auto& B = generic();
    CHECK(ad_pow(B, 1, 0, 3) == x(3));
    CHECK(ad_pow(B, 1, 1, 3) == w({1, 3}) - B.q(1, 3) * w({3, 1}));
    CHECK_THROWS_AS(ad_pow(B, 2, 1, 2), std::domain_error);
}

TEST_CASE("hyperletters") {
    const auto& B = generic();
    CHECK(hyperletter(B, {1, 2}) == w({1, 2}) - B.q(1, 2) * w({2, 1}));
    CHECK(hyperletter(B, {1, 1, 2}) == ad_pow(B, 1, 2, 2));
    CHECK_THROWS_AS(hyperletter(B, {2, 1}), std::domain_error);
    for (const Word& u : enumerate_lyndon(3, 6)) {
        const NcPoly h = hyperletter(B, u);
        CHECK(h.coeff(u).is_one());
        for (const auto& [v, c] : h.terms()) {
            CHECK(v.size() == u.size());
            CHECK((v == u || lex_less(u, v)));
        }
    }
}

TEST_CASE("coproduct of letters and squares") {
    const auto& B = generic();
    TensorPoly d1;
    d1.add_term({1}, {}, CycScalar(1));
    d1.add_term({}, {1}, CycScalar(1));
    CHECK(coproduct(B, x(1)) == d1);
    TensorPoly d2;
    d2.add_term({1, 1}, {}, CycScalar(1));
    d2.add_term({1}, {1}, CycScalar(1) + B.q(1, 1));
    d2.add_term({}, {1, 1}, CycScalar(1));
    CHECK(coproduct(B, w({1, 1})) == d2);
}

TEST_CASE("coproduct matches the shuffle expansion on all words up to length 5") {
    const auto& B = generic();
    for (int n = 0; n <= 5; ++n)
        for (const Word& u : oracle::all_words(3, n))
            CHECK(oracle::from_library(coproduct(B, w(u))) == oracle::coproduct_word(B, u));
}

TEST_CASE("coproduct components") {
    const auto& B = generic();
    const NcPoly p = hyperletter(B, {1, 2, 3, 2});
    const TensorPoly full = coproduct(B, p);
    for (std::size_t i = 0; i <= 4; ++i) CHECK(coproduct_component(B, p, i, 4 - i) == full.component(i, 4 - i));
}

TEST_CASE("quantum Serre element is skew-primitive up to one term") {
    // z = (ad x_k)^(m+1) x_j with (m+1)_{q_kk} = 0: Delta z = z(x)1 + 1(x)z + c x_k^(m+1)(x)x_j
    // with c = prod_{t=0}^{m} (1 - q_kk^t q_kj q_jk).
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int N = 12;
        BraidingMatrix B = oracle::random_braiding(2, N, rng);
        const auto o = mult_order(B.q(1, 1));
        if (!o.finite() || o.order > 5) continue;
        const int m = o.order - 1;
        const NcPoly z = ad_pow(B, 1, m + 1, 2);
        CycScalar c(1);
        for (int t = 0; t <= m; ++t) c = c * (CycScalar(1) - B.q(1, 1).pow(t) * B.q(1, 2) * B.q(2, 1));
        oracle::Tensor expected;
        for (const auto& [u, cu] : z.terms()) {
            oracle::add(expected, u, {}, cu);
            oracle::add(expected, {}, u, cu);
        }
        oracle::add(expected, Word(static_cast<std::size_t>(m + 1), 1), {2}, c);
        CHECK(oracle::from_library(coproduct(B, z)) == expected);
    }
}

TEST_CASE("skew derivations on powers and Serre elements") {
    const auto& B = generic();
    for (int n = 1; n <= 6; ++n)
        CHECK(derivation_D(B, 2, w(Word(static_cast<std::size_t>(n), 2))) ==
              q_number(n, B.q(2, 2)) * w(Word(static_cast<std::size_t>(n - 1), 2)));
    const int i = 1, j = 3;
    const CycScalar p = B.q(i, j) * B.q(j, i);
    for (int r = 1; r <= 5; ++r) {
        CycScalar c(1);
        for (int k = 0; k < r; ++k) c = c * (CycScalar(1) - B.q(i, i).pow(k) * p);
        CHECK(derivation_D(B, j, ad_pow(B, i, r, j)) == c * w(Word(static_cast<std::size_t>(r), i)));
        const CycScalar f = q_number(r, B.q(i, i)) * (CycScalar(1) - B.q(i, i).pow(r - 1) * p);
        CHECK(derivation_F(B, i, ad_pow(B, i, r, j)) == f * ad_pow(B, i, r - 1, j));
        CHECK(derivation_F(B, j, ad_pow(B, i, r, j)).is_zero());
    }
}

TEST_CASE("derivations extract the (n-1,1) and (1,n-1) coproduct components") {
    const auto& B = generic();
    for (const Word& u : oracle::all_words(3, 4)) {
        const auto t = oracle::coproduct_word(B, u);
        for (int i = 1; i <= 3; ++i) {
            NcPoly D, F;
            for (const auto& [k, c] : t) {
                if (k.second == Word{i}) D.add_term(k.first, c);
                if (k.first == Word{i}) F.add_term(k.second, c);
            }
            CHECK(derivation_D(B, i, w(u)) == D);
            CHECK(derivation_F(B, i, w(u)) == F);
        }
    }
}

TEST_CASE("bilinear form examples") {
    const auto& B = generic();
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(bilinear_form(B, x(i), x(j)) == CycScalar(i == j ? 1 : 0));
    CHECK(bilinear_form(B, w({1, 1}), w({1, 1})) == CycScalar(1) + B.q(1, 1));
    CHECK(bilinear_form(B, w({1, 2}), w({2, 1})) == B.q(1, 2));
    CHECK(bilinear_form(B, w({1, 2}), w({1, 1})).is_zero());
    CHECK(bilinear_form(B, w({1, 2}), w({1})).is_zero());
}

TEST_CASE("form recursion (p | w x_i) = (D_i p | w)") {
    const auto& B = generic();
    std::mt19937 rng(3);
    for (int n = 1; n <= 5; ++n)
        for (int it = 0; it < 40; ++it) {
            const NcPoly p = oracle::random_homogeneous(B, n, rng);
            const Word u = oracle::random_word(3, n - 1, rng);
            for (int i = 1; i <= 3; ++i) {
                Word ui = u;
                ui.push_back(i);
                CHECK(bilinear_form(B, p, w(ui)) == bilinear_form(B, derivation_D(B, i, p), w(u)));
            }
        }
}

TEST_CASE("braiding construction and validation") {
    CHECK_THROWS_AS(BraidingMatrix(0, 3, {}), std::domain_error);
    CHECK_THROWS_AS(BraidingMatrix(2, 3, {{1, 2}}), std::domain_error);
    const BraidingMatrix B(2, 4, {{5, -1}, {2, 2}});
    CHECK(B.exponent(1, 1) == 1);
    CHECK(B.exponent(1, 2) == 3);
    const BraidingMatrix S = BraidingMatrix::from_scalars({{CycScalar(-1), CycScalar(1)}, {CycScalar(1), root_of_unity(3, 1)}});
    CHECK(S.q(1, 1) == CycScalar(-1));
    CHECK(S.q(2, 2) == root_of_unity(3, 1));
    CHECK_THROWS_AS(BraidingMatrix::from_scalars({{CycScalar(2)}}), std::domain_error);
}
