#include <catch2/catch_amalgamated.hpp>

#include "wordwalk/edits.hpp"
#include "wordwalk/format.hpp"
#include "wordwalk/oracle.hpp"
#include "wordwalk/verify.hpp"

using namespace wordwalk;

namespace {

Word W(const std::string& s) { return parse_word(s, WordFormat::chars); }

// Every unit-step course (not only the surjective ones) of length m into
// [1,n], for the exhaustive reflection sweeps.
std::vector<Stroll> all_strolls(int n, int m) {
    std::vector<Stroll> out;
    if (m == 0) {
        if (n == 0) out.emplace_back();
        return out;
    }
    std::vector<int> course;
    auto dfs = [&](auto&& self, int p) -> void {
        course.push_back(p);
        if (static_cast<int>(course.size()) == m)
            out.emplace_back(course, n);
        else
            for (int q = std::max(1, p - 1); q <= std::min(n, p + 1); ++q) self(self, q);
        course.pop_back();
    };
    for (int p = 1; p <= n; ++p) dfs(dfs, p);
    return out;
}

std::vector<ReflectionSpec> valid_reflection_specs(const Stroll& f) {
    std::vector<ReflectionSpec> out;
    int m = f.domain_length();
    for (int k = 1; k < m; ++k) {
        out.push_back({EditKind::initial, 0, k});
        out.push_back({EditKind::final, 0, k});
    }
    for (int j = 2; j < m; ++j)
        for (int k = 1; k <= std::min(j - 1, m - j); ++k)
            if (f.at(j - k) == f.at(j + k)) out.push_back({EditKind::internal, j, k});
    return out;
}

} // namespace

TEST_CASE("hesitation") {
    REQUIRE(hesitation(Walk({1, 2, 3}, 3), 2).course() == std::vector<int>{1, 2, 2, 3});
    REQUIRE(hesitation(Walk({1}, 1), 1).course() == std::vector<int>{1, 1});
    REQUIRE(hesitation(Walk({1, 2, 1}, 2), 3).course() == std::vector<int>{1, 2, 1, 1});
    REQUIRE_THROWS_AS(hesitation(Walk({1, 2}, 2), 3), Error);

    SECTION("duplicates the output letter") {
        Word u = W("abc");
        Walk f({1, 2, 3}, 3);
        REQUIRE(apply(u, hesitation(f, 2)) == W("abbc"));
    }
}

TEST_CASE("vacillation") {
    Walk f({1, 2, 3}, 3);
    REQUIRE(vacillation(f, {EditKind::initial, 0, 1}).course() == std::vector<int>{2, 1, 2, 3});
    REQUIRE(vacillation(f, {EditKind::final, 0, 1}).course() == std::vector<int>{1, 2, 3, 2});
    REQUIRE(vacillation(f, {EditKind::internal, 2, 1}).course() ==
            std::vector<int>{1, 2, 1, 2, 3});
    REQUIRE_THROWS_AS(vacillation(f, {EditKind::initial, 0, 3}), Error);
    REQUIRE_THROWS_AS(vacillation(f, {EditKind::internal, 3, 1}), Error);

    SECTION("edits of walks are walks with the right lengths") {
        for (const Walk& w : all_walks(3, 5)) {
            int m = w.domain_length();
            for (int k = 1; k < m; ++k) {
                REQUIRE(vacillation(w, {EditKind::initial, 0, k}).domain_length() == m + k);
                REQUIRE(vacillation(w, {EditKind::final, 0, k}).domain_length() == m + k);
            }
            for (int j = 2; j < m; ++j)
                for (int k = 1; k < j; ++k)
                    REQUIRE(vacillation(w, {EditKind::internal, j, k}).domain_length() == m + 2 * k);
        }
    }
}

TEST_CASE("reflection") {
    SECTION("final reflection folds the tail") {
        Reflected r = reflection(Stroll({1, 2, 3}, 3), {EditKind::final, 0, 1});
        REQUIRE(r.proper);
        REQUIRE(r.stroll.course() == std::vector<int>{1, 2, 1});
    }
    SECTION("internal reflection flips between equal levels") {
        Reflected r = reflection(Stroll({2, 3, 2}, 3), {EditKind::internal, 2, 1});
        REQUIRE(r.proper);
        REQUIRE(r.stroll.course() == std::vector<int>{2, 1, 2});
    }
    SECTION("improper reflection reports the offending index") {
        Reflected r = reflection(Stroll({2, 1, 2, 3}, 3), {EditKind::initial, 0, 1});
        REQUIRE_FALSE(r.proper);
        REQUIRE(r.offending_index == 1);
        REQUIRE(r.offending_value == 0);
    }
    REQUIRE_THROWS_AS(reflection(Stroll({1, 2, 3}, 3), {EditKind::internal, 2, 1}), Error);
}

TEST_CASE("admissibility") {
    Word aba = W("aba");
    Stroll f({2, 3, 2}, 3);
    REQUIRE(is_admissible(f, aba, {EditKind::internal, 2, 1}));
    REQUIRE_FALSE(is_admissible(f, W("abc"), {EditKind::internal, 2, 1}));

    Word abcba = W("abcba");
    Walk id = identity_walk(5);
    ReflectionSpec final_spec{EditKind::final, 0, 2};
    REQUIRE(is_admissible(id, abcba, final_spec));
    Reflected r = reflection(id, final_spec);
    REQUIRE(r.proper);
    REQUIRE(r.stroll.course() == std::vector<int>{1, 2, 3, 2, 1});
    REQUIRE(apply(abcba, r.stroll) == abcba);
}

TEST_CASE("admissible proper reflections preserve the output") {
    // exhaustive over ternary words up to length 5 and strolls up to length 7
    for (const Word& u : detail::words_up_to(3, 5)) {
        if (u.empty()) continue;
        int n = u.size();
        for (int m = 1; m <= 7; ++m) {
            for (const Stroll& f : all_strolls(n, m)) {
                for (const ReflectionSpec& spec : valid_reflection_specs(f)) {
                    if (!is_admissible(f, u, spec)) continue;
                    Reflected r = reflection(f, spec);
                    if (!r.proper) continue;
                    REQUIRE(apply(u, r.stroll) == apply(u, f));
                }
            }
        }
    }
}

TEST_CASE("hesitations and vacillations commute with apply") {
    for (const Word& u : detail::words_up_to(2, 4)) {
        if (u.empty()) continue;
        int n = u.size();
        for (int m = n; m <= n + 2; ++m) {
            for (const Walk& f : all_walks(n, m)) {
                Word image = apply(u, f);
                for (int j = 1; j <= m; ++j) {
                    Word expected = image.factor(1, j) + image.factor(j, m);
                    REQUIRE(apply(u, hesitation(f, j)) == expected);
                }
                for (int k = 1; k < m; ++k) {
                    Word initial = apply(u, vacillation(f, {EditKind::initial, 0, k}));
                    Word expected;
                    for (int i = k + 1; i >= 1; --i) expected = expected + Word{u.at(f.at(i))};
                    expected = expected + image.factor(2, m);
                    REQUIRE(initial == expected);
                }
            }
        }
    }
}
