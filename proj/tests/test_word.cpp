#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "wordwalk/format.hpp"
#include "wordwalk/verify.hpp"
#include "wordwalk/word.hpp"

using namespace wordwalk;

namespace {

Word W(const std::string& s) { return parse_word(s, WordFormat::chars); }

// Independent oracle: all palindromic factors by direct O(n^3) scan.
DefectSet defects_brute_force(const Word& u) {
    DefectSet out;
    out.length = u.size();
    for (int i = 1; i <= u.size(); ++i)
        for (int j = i + 1; j <= u.size(); ++j)
            if (is_palindrome_factor(u, i, j)) out.pairs.emplace_back(i, j);
    return out;
}

} // namespace

TEST_CASE("reversal") {
    REQUIRE(reverse(W("abc")) == W("cba"));
    REQUIRE(reverse(Word{}) == Word{});
    REQUIRE(reverse(W("cbadefgh")) == W("hgfedabc"));
    Word u = W("abcbd");
    REQUIRE(reverse(reverse(u)) == u);
}

TEST_CASE("palindrome detection") {
    REQUIRE(is_palindrome(W("aba")));
    REQUIRE_FALSE(is_palindrome(W("ab")));
    REQUIRE(is_palindrome(Word{1, 2, 1})); // beta'_3
    REQUIRE(is_palindrome(Word{}));
    REQUIRE(is_palindrome(W("x")));
}

TEST_CASE("defect enumeration") {
    REQUIRE(defects(W("aa")).pairs == std::vector<std::pair<int, int>>{{1, 2}});
    REQUIRE(defects(W("abc")).pairs.empty());
    REQUIRE(defects(W("abcbd")).pairs == std::vector<std::pair<int, int>>{{2, 4}});
    REQUIRE(defects(Word{}).pairs.empty());

    SECTION("matches the all-factors brute force, alphabet 4") {
        for (const Word& u : detail::words_up_to(4, 9))
            REQUIRE(defects(u) == defects_brute_force(u));
        // lengths 10..12 by seeded sample; the exhaustive sweep would need
        // twenty million words
        std::mt19937_64 rng(41);
        for (int i = 0; i < 60000; ++i) {
            std::uniform_int_distribution<int> len(10, 12), letter(1, 4);
            std::vector<int> letters(static_cast<std::size_t>(len(rng)));
            for (int& a : letters) a = letter(rng);
            Word u(std::move(letters));
            REQUIRE(defects(u) == defects_brute_force(u));
        }
    }

    SECTION("defect pairs nest and match letters") {
        for (const Word& u : detail::words_up_to(3, 9)) {
            DefectSet d = defects(u);
            for (auto [i, j] : d.pairs) {
                REQUIRE(u.at(i) == u.at(j));
                if (j - 1 >= i + 1 && j - i >= 3) REQUIRE(d.contains(i + 1, j - 1));
            }
        }
    }

    SECTION("defects commute with reversal") {
        for (const Word& u : detail::words_up_to(3, 8)) {
            int n = u.size();
            DefectSet forward = defects(u);
            DefectSet mirrored = defects(reverse(u));
            std::set<std::pair<int, int>> mapped;
            for (auto [i, j] : mirrored.pairs) mapped.insert({n + 1 - j, n + 1 - i});
            std::set<std::pair<int, int>> expected(forward.pairs.begin(), forward.pairs.end());
            REQUIRE(mapped == expected);
        }
    }
}

TEST_CASE("defect classes") {
    auto classes_of = [](const Word& u) { return defect_classes(u).classes(); };

    REQUIRE(classes_of(W("abc")) == std::vector<std::vector<int>>{{1}, {2}, {3}});
    REQUIRE(classes_of(W("abcbd")) == std::vector<std::vector<int>>{{1}, {2, 4}, {3}, {5}});
    REQUIRE(classes_of(W("aabaa")) == std::vector<std::vector<int>>{{1, 2, 4, 5}, {3}});
    REQUIRE(classes_of(Word{}).empty());

    SECTION("same class implies same letter") {
        for (const Word& u : detail::words_up_to(3, 9)) {
            DefectClasses dsu = defect_classes(u);
            for (int i = 1; i <= u.size(); ++i)
                for (int j = i + 1; j <= u.size(); ++j)
                    if (dsu.same_class(i, j)) REQUIRE(u.at(i) == u.at(j));
        }
    }

    SECTION("closure of the brute-forced defect set gives the same partition") {
        for (const Word& u : detail::words_up_to(4, 10)) {
            DefectClasses expected(u.size());
            for (auto [i, j] : defects_brute_force(u).pairs) expected.unite(i, j);
            REQUIRE(defect_classes(u).classes() == expected.classes());
        }
    }
}
