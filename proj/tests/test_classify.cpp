#include <doctest.h>

#include "oracle.hpp"

#include <set>

using namespace nichols;

namespace {

BraidingMatrix sym(const DynkinDiagram& d) { return symmetric_braiding(d); }

}  // namespace

TEST_CASE("dynkin diagrams and twist equivalence") {
    const BraidingMatrix B(2, 7, {{1, 2}, {4, 3}});
    const BraidingMatrix swapped(2, 7, {{1, 4}, {2, 3}});
    CHECK(twist_equivalent(B, swapped));
    const DynkinDiagram d = dynkin_diagram(B);
    CHECK(d.label(1) == root_of_unity(7, 1));
    CHECK(d.edge(1, 2) == root_of_unity(7, 6));
    CHECK(twist_equivalent(B, symmetric_braiding(d)));
    const RootOfUnity q{5, 1};
    CHECK_FALSE(twist_equivalent(sym(chain_diagram(2, q, {})), sym(chain_diagram(2, q, {1}))));
    // Relabeling only matters when the flag is set.
    const BraidingMatrix R = relabel(B, {2, 1});
    CHECK_FALSE(twist_equivalent(B, R));
    CHECK(twist_equivalent(B, R, true));
    // No edge when q_12 q_21 = 1.
    CHECK(dynkin_diagram(BraidingMatrix(2, 4, {{1, 1}, {3, 2}})).edges.empty());
}

TEST_CASE("classification examples") {
    SUBCASE("A3 Cartan") {
        const auto c = classify_standard(sym(cartan_diagram('A', 3, {5, 1})));
        CHECK(c.to_string() == "Cartan{A3, q=zeta5}");
    }
    SUBCASE("type B(a) with ord q = 7") {
        const auto c = classify_standard(sym(family_b_a({3, 1}, {7, 1})));
        CHECK(c.family() == "TypeB_a");
        CHECK(c.to_string() == "TypeB_a{zeta=zeta3, q=zeta7}");
    }
    SUBCASE("G2 b(i)") {
        // q_11 = zeta^2, q_12 q_21 = zeta, q_22 = zeta^-1 with zeta = zeta8
        const auto c = classify_standard(BraidingMatrix(2, 8, {{2, 1}, {0, 7}}));
        CHECK(c.family() == "G2_b");
        CHECK(std::get<ClassG2b>(c.v).variant == 1);
    }
    SUBCASE("C(2,q;1) is type A but not Cartan") {
        const auto c = classify_standard(BraidingMatrix(2, 4, {{2, 3}, {0, 1}}));
        CHECK(c.family() == "TypeA");
        CHECK(std::get<ClassTypeA>(c.v).i_list == std::vector<int>{1});
    }
    SUBCASE("C(theta,-1;...) with every vertex -1 is reported as Cartan") {
        const auto c = classify_standard(sym(chain_diagram(3, minus_one(), {1, 2, 3})));
        CHECK(c.family() == "Cartan");
    }
    SUBCASE("disconnected input") {
        const auto c = classify_standard(BraidingMatrix(2, 4, {{1, 1}, {3, 2}}));
        CHECK(c.family() == "Disconnected");
        CHECK(c.standard());
        CHECK(c.rank() == 2);
    }
    SUBCASE("undefined Cartan integers") {
        const auto c = classify_standard(BraidingMatrix(2, 5, {{0, 1}, {0, 2}}));
        CHECK(c.family() == "NotStandard");
    }
    SUBCASE("G2 Cartan braiding at a cube root of unity is not G2") {
        const auto c = classify_standard(sym(cartan_diagram('G', 2, {3, 1})));
        CHECK(c.series() != 'G');
    }
}

TEST_CASE("enumeration examples") {
    SUBCASE("A2 at order 4: one class per distinct diagram") {
        const auto e = enumerate_standard('A', 2, 4);
        std::vector<DynkinDiagram> expected;
        for (const auto& q : detail::primitive_roots(4))
            for (const auto& I : detail::subsets(2)) {
                const DynkinDiagram d = chain_diagram(2, q, I);
                if (std::find(expected.begin(), expected.end(), d) == expected.end()) expected.push_back(d);
            }
        CHECK(e.items.size() == expected.size());
        for (const auto& it : e.items) {
            const DynkinDiagram d = dynkin_diagram(it.braiding);
            CHECK(std::find(expected.begin(), expected.end(), d) != expected.end());
        }
    }
    SUBCASE("G2 at order 5 contains the Cartan family") {
        const auto e = enumerate_standard('G', 2, 5);
        REQUIRE_FALSE(e.items.empty());
        for (const auto& it : e.items) CHECK(it.expected.family() == "G2_a");
    }
    SUBCASE("G2 at order 8 contains all three b variants") {
        const auto e = enumerate_standard('G', 2, 8);
        std::set<int> variants;
        for (const auto& it : e.items)
            if (auto* b = std::get_if<ClassG2b>(&it.expected.v)) variants.insert(b->variant);
        CHECK(variants == std::set<int>{1, 2, 3});
    }
    SUBCASE("B2 at order 4 includes family (a)") {
        const auto e = enumerate_standard('B', 2, 4);
        bool found = false;
        for (const auto& it : e.items) found = found || it.expected.family() == "TypeB_a";
        CHECK(found);
    }
    SUBCASE("incompatible parameters give diagnostics") {
        CHECK(enumerate_standard('G', 2, 3).items.empty());
        CHECK_FALSE(enumerate_standard('G', 2, 3).diagnostics.empty());
        CHECK(enumerate_standard('G', 3, 8).items.empty());
        CHECK(enumerate_standard('B', 1, 8).items.empty());
    }
    SUBCASE("representatives are symmetric") {
        for (const auto& it : enumerate_standard('B', 3, 6).items)
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j) CHECK(it.braiding.q(i, j) == it.braiding.q(j, i));
    }
}

TEST_CASE("round trip and reflection closure of enumerated families") {
    for (char fam : {'A', 'B', 'G'})
        for (int theta = (fam == 'G' ? 2 : 1); theta <= (fam == 'G' ? 2 : 3); ++theta)
            for (int N = 2; N <= 12; ++N)
                for (const auto& it : enumerate_standard(fam, theta, N).items) {
                    const auto c = classify_standard(it.braiding);
                    CHECK_MESSAGE(same_parameters(c, it.expected), c.to_string() << " vs " << it.expected.to_string());
                    CHECK(is_standard(it.braiding).standard);
                    for (int i = 1; i <= theta; ++i) {
                        const auto r = classify_standard(reflect(it.braiding, i));
                        CHECK(r.standard());
                        CHECK(r.series() == c.series());
                        CHECK(r.rank() == c.rank());
                    }
                }
}

TEST_CASE("relabeled and twisted inputs classify like their representative") {
    std::mt19937 rng(21);
    for (const auto& it : enumerate_standard('B', 3, 5).items) {
        std::vector<int> perm{1, 2, 3};
        std::shuffle(perm.begin(), perm.end(), rng);
        BraidingMatrix R = relabel(it.braiding, perm);
        auto k = R.exponents();
        // twist: move exponent mass between q_ij and q_ji
        k[0][1] += 1;
        k[1][0] -= 1;
        const BraidingMatrix T(3, R.conductor(), k);
        CHECK(same_parameters(classify_standard(T), classify_standard(it.braiding)));
    }
}

TEST_CASE("C3 and D4 m-matrices without Cartan scalars are rejected") {
    std::mt19937 rng(13);
    int rejected = 0;
    for (int it = 0; it < 20000 && rejected < 25; ++it) {
        const bool d4 = it % 2;
        const int theta = d4 ? 4 : 3;
        const int N = 3 + static_cast<int>(rng() % 10);
        std::uniform_int_distribution<int> e(0, N - 1);
        std::vector<std::vector<int>> k(theta, std::vector<int>(theta, 0));
        for (int i = 0; i < theta; ++i) k[i][i] = e(rng);
        auto link = [&](int a, int b) { k[a][b] = e(rng); };
        if (d4) {
            link(1, 0);
            link(1, 2);
            link(1, 3);
        } else {
            link(0, 1);
            link(1, 2);
        }
        const BraidingMatrix B(theta, N, k);
        const MMatrix m = m_matrix(B);
        if (!all_defined(m)) continue;
        const auto ft = finite_type(cartan_matrix(m));
        const std::string want = d4 ? "D4" : "C3";
        if (ft.describe() != want) continue;
        if (detail::is_cartan_type(B, m)) continue;
        CHECK(classify_standard(B).family() == "NotStandard");
        ++rejected;
    }
    CHECK(rejected >= 10);
}
