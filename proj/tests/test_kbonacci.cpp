#include <catch2/catch_amalgamated.hpp>

#include "wordwalk/format.hpp"
#include "wordwalk/kbonacci.hpp"
#include "wordwalk/reduction.hpp"

using namespace wordwalk;

namespace {

Word T(const std::string& s) { return parse_word(s, WordFormat::chars); }

} // namespace

TEST_CASE("sigma") {
    REQUIRE(sigma(2, T("121")) == T("12112"));
    REQUIRE(sigma(3, T("12")) == T("1213"));
    REQUIRE(sigma(5, Word{}) == Word{});
    REQUIRE(sigma(3, T("3")) == T("1"));
    REQUIRE_THROWS_AS(sigma(3, T("4")), Error);
}

TEST_CASE("alpha") {
    REQUIRE(alpha(2, 4) == T("12112"));
    REQUIRE(alpha(3, 4) == T("1213121"));
    REQUIRE(alpha(2, 1) == T("1"));
    REQUIRE(alpha(7, 1) == T("1"));
    REQUIRE(alpha(2, 6) == T("1211212112112"));
    REQUIRE_THROWS_AS(alpha(1, 3), Error);
    REQUIRE_THROWS_AS(alpha(2, 0), Error);
    REQUIRE_THROWS_AS(alpha(2, 40, 1000), Error); // length budget

    SECTION("morphic and recursive forms agree; terms are prefixes") {
        for (int k = 2; k <= 5; ++k) {
            Word prev;
            for (int n = 1; n <= k + 6; ++n) {
                Word a = alpha(k, n);
                REQUIRE(a == alpha_recursive(k, n));
                REQUIRE(a.factor(1, prev.size()) == prev);
                prev = a;
            }
        }
    }
}

TEST_CASE("beta and gamma families") {
    REQUIRE(beta_prime(1) == Word{});
    REQUIRE(beta(1) == T("1"));
    REQUIRE(beta_prime(3) == T("121"));
    REQUIRE(beta(3) == T("1213"));
    REQUIRE(beta(5).size() == 16);
    REQUIRE(gamma(2) == T("12"));
    REQUIRE(gamma(3) == T("213"));
    REQUIRE(gamma(4) == T("31214"));

    SECTION("length closed forms") {
        for (int k = 1; k <= 16; ++k) {
            REQUIRE(beta(k).size() == (1 << (k - 1)));
            if (k >= 2) REQUIRE(gamma(k).size() == (1 << (k - 2)) + 1);
        }
    }
    SECTION("gamma is primitive") {
        for (int k = 2; k <= 10; ++k) REQUIRE(is_primitive(gamma(k)));
    }
}

TEST_CASE("structure report") {
    for (int k : {2, 3, 6}) {
        StructureReport r = check_structure(k);
        INFO("k = " << k);
        for (const auto& clause : r.clauses) {
            INFO(clause.name);
            REQUIRE(clause.pass);
        }
        REQUIRE(r.all_pass());
    }
    // the gamma extremes clause only exists from k = 3 on
    REQUIRE(check_structure(2).clauses.size() + 1 == check_structure(3).clauses.size());
}

TEST_CASE("theorem 4 verification") {
    REQUIRE(verify_theorem4(2, 6));
    REQUIRE(verify_theorem4(3, 4));
    REQUIRE(verify_theorem4(4, 4));
    REQUIRE_THROWS_AS(verify_theorem4(3, 2), Error); // n < k rejected

    SECTION("alpha(4,4) is beta_4") {
        REQUIRE(alpha(4, 4) == T("12131214"));
        REQUIRE(primitive_generator(T("12131214")).generator == T("31214"));
    }
}

TEST_CASE("generating walks from prescribed starts") {
    SECTION("start at a 1 of gamma_3") {
        auto f = find_generating_walk_from(3, 3, 2);
        REQUIRE(f.has_value());
        REQUIRE(f->course() == std::vector<int>{2, 1, 2, 3});
        REQUIRE(apply(gamma(3), *f) == T("1213"));
    }
    SECTION("gamma_2 admits a walk from its 1") {
        auto f = find_generating_walk_from(2, 3, 1);
        REQUIRE(f.has_value());
        REQUIRE(f->at(1) == 1);
        REQUIRE(apply(gamma(2), *f) == T("121"));
    }
    SECTION("no walk from a non-1 start here") {
        REQUIRE_FALSE(find_generating_walk_from(3, 3, 1).has_value());
    }
    REQUIRE_THROWS_AS(find_generating_walk_from(3, 3, 9), Error);
}

// The walk-existence claims behind the tail-generation argument, realized
// as start/end-constrained searches.
TEST_CASE("constrained walks exist on the beta and gamma families") {
    SECTION("beta'_k from any 1 of gamma'_k, ending at the top") {
        for (int k = 2; k <= 5; ++k) {
            Word gp = gamma_prime(k);
            Word bp = beta_prime(k);
            for (int h = 1; h <= gp.size(); ++h) {
                if (gp.at(h) != 1) continue;
                auto f = find_walk(gp, bp, h, gp.size());
                REQUIRE(f.has_value());
                REQUIRE(apply(gp, *f) == bp);
            }
        }
    }
    SECTION("beta_k from any 1 of gamma_k, ending at the top") {
        for (int k = 2; k <= 5; ++k) {
            Word g = gamma(k);
            Word b = beta(k);
            for (int h = 1; h <= g.size(); ++h) {
                if (g.at(h) != 1) continue;
                auto f = find_walk(g, b, h, g.size());
                REQUIRE(f.has_value());
            }
        }
    }
    SECTION("beta_k beta_{k-1} ... beta_{k-p} from any 1 of gamma_k") {
        for (int k = 3; k <= 5; ++k) {
            Word g = gamma(k);
            for (int p = 1; p < k; ++p) {
                Word target;
                for (int i = k; i >= k - p; --i) target = target + beta(i);
                for (int h = 1; h <= g.size(); ++h) {
                    if (g.at(h) != 1) continue;
                    auto f = find_walk(g, target, h);
                    REQUIRE(f.has_value());
                }
            }
        }
    }
}
