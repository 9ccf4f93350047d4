#include <doctest.h>

#include "oracle.hpp"

using namespace nichols;

TEST_CASE("is_lyndon") {
    CHECK(is_lyndon({1, 2}));
    CHECK_FALSE(is_lyndon({2, 1}));
    CHECK(is_lyndon({1, 1, 2, 1, 2}));
    CHECK(is_lyndon({3}));
    CHECK_FALSE(is_lyndon({1, 1}));
    CHECK_THROWS_AS(is_lyndon({}), std::domain_error);
}

TEST_CASE("enumerate_lyndon small cases") {
    CHECK(enumerate_lyndon(2, 2) == std::vector<Word>{{1}, {1, 2}, {2}});
    CHECK(enumerate_lyndon(2, 3) == std::vector<Word>{{1}, {1, 1, 2}, {1, 2}, {1, 2, 2}, {2}});
    CHECK(enumerate_lyndon(1, 6) == std::vector<Word>{{1}});
    const auto boxed = enumerate_lyndon(2, 5, Degree{2, 1});
    CHECK(boxed == std::vector<Word>{{1}, {1, 1, 2}, {1, 2}, {2}});
}

TEST_CASE("enumerate_lyndon agrees with brute force for theta <= 3, length <= 7") {
    for (int theta = 1; theta <= 3; ++theta) {
        std::vector<Word> expected;
        for (int n = 1; n <= 7; ++n)
            for (const Word& w : oracle::all_words(theta, n))
                if (oracle::lyndon_by_rotation(w)) expected.push_back(w);
        std::sort(expected.begin(), expected.end());
        CHECK(enumerate_lyndon(theta, 7) == expected);
    }
}

TEST_CASE("necklace counts") {
    // Lyndon words of length 6 over two letters: (1/6) sum mu(d) 2^(6/d) = 9.
    int count = 0;
    for (const Word& w : enumerate_lyndon(2, 6))
        if (w.size() == 6) ++count;
    CHECK(count == 9);
}

TEST_CASE("lyndon_factorization examples") {
    CHECK(lyndon_factorization({2, 1, 1}) == std::vector<Word>{{2}, {1}, {1}});
    CHECK(lyndon_factorization({1, 2, 1, 2}) == std::vector<Word>{{1, 2}, {1, 2}});
    CHECK(lyndon_factorization({1, 2, 2, 1, 2}) == std::vector<Word>{{1, 2, 2}, {1, 2}});
    CHECK_THROWS_AS(lyndon_factorization({}), std::domain_error);
}

TEST_CASE("shirshov_decomposition examples") {
    CHECK(shirshov_decomposition({1, 2}) == std::pair<Word, Word>{{1}, {2}});
    CHECK(shirshov_decomposition({1, 1, 2, 1, 2}) == std::pair<Word, Word>{{1, 1, 2}, {1, 2}});
    CHECK(shirshov_decomposition({1, 1, 2}) == std::pair<Word, Word>{{1}, {1, 2}});
    CHECK_THROWS_AS(shirshov_decomposition({1}), std::domain_error);
    CHECK_THROWS_AS(shirshov_decomposition({2, 1}), std::domain_error);
}

TEST_CASE("deg-lex order") {
    CHECK(deg_lex_less({1, 2}, {1}));
    CHECK(deg_lex_less({1, 2}, {2, 1}));
    CHECK_FALSE(deg_lex_less({}, {1}));
    CHECK(deg_lex_less({1}, {}));
    CHECK_FALSE(deg_lex_less({1, 2}, {1, 2}));
}

TEST_CASE("degrees and rendering") {
    CHECK(word_degree({1, 1, 2, 1, 2}, 2) == Degree{3, 2});
    CHECK(total_degree({3, 2}) == 5);
    CHECK(word_to_string({1, 2}) == "x1x2");
    CHECK(word_to_string({}) == "1");
    CHECK(degree_to_string({3, 2}) == "3a1+2a2");
    CHECK(degree_to_string({0, 1, 0}) == "a2");
    CHECK_THROWS_AS(word_degree({3}, 2), std::domain_error);
}
