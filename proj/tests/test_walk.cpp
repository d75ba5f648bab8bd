#include <catch2/catch_amalgamated.hpp>

#include "wordwalk/format.hpp"
#include "wordwalk/oracle.hpp"
#include "wordwalk/walk.hpp"
#include "wordwalk/word.hpp"

using namespace wordwalk;

namespace {

Word W(const std::string& s) { return parse_word(s, WordFormat::chars); }

const std::vector<int> fig1_course{3, 2, 1, 2, 3, 3, 3, 4, 5, 6, 5, 4, 3, 4, 5, 6, 7, 8, 7, 6};

} // namespace

TEST_CASE("stroll validation") {
    REQUIRE_FALSE(stroll_issue(std::vector<int>{1, 2, 2, 1}, 3).has_value());
    REQUIRE_FALSE(Stroll({1, 2, 2, 1}, 3).is_surjective());

    auto step = stroll_issue(std::vector<int>{1, 3}, 3);
    REQUIRE(step.has_value());
    REQUIRE(step->kind == CourseIssue::Kind::step_violation);
    REQUIRE(step->index == 1);

    auto range = stroll_issue(std::vector<int>{0, 1}, 2);
    REQUIRE(range.has_value());
    REQUIRE(range->kind == CourseIssue::Kind::range_violation);
    REQUIRE(range->index == 1);

    // the empty stroll exists only against the empty word
    REQUIRE_FALSE(stroll_issue(std::vector<int>{}, 0).has_value());
    REQUIRE(stroll_issue(std::vector<int>{}, 2).has_value());
}

TEST_CASE("walk validation") {
    REQUIRE_FALSE(walk_issue(std::vector<int>{1, 2, 3}, 3).has_value());
    auto missing = walk_issue(std::vector<int>{1, 2, 2, 1}, 3);
    REQUIRE(missing.has_value());
    REQUIRE(missing->kind == CourseIssue::Kind::not_surjective);
    REQUIRE(missing->index == 3);
    REQUIRE_FALSE(walk_issue(std::vector<int>{2, 1, 2, 3, 4, 5, 6, 7, 8}, 8).has_value());
    REQUIRE_THROWS_AS(Walk({1, 2, 2, 1}, 3), Error);
}

TEST_CASE("apply") {
    REQUIRE(apply(W("cbadefgh"), Walk(fig1_course, 8)) == W("abcbaaadefedadefghgf"));
    REQUIRE(apply(W("abcbd"), Stroll({1, 2, 3, 4, 3, 4, 5}, 5)) == W("abcbcbd"));
    Word u = W("abc");
    REQUIRE(apply(u, identity_walk(3)) == u);
    REQUIRE_THROWS_AS(apply(W("ab"), Walk({1, 2, 3}, 3)), Error);
    REQUIRE(apply(Word{}, Walk()) == Word{});
}

TEST_CASE("legs and waypoints") {
    SECTION("simple peak") {
        LegDecomposition d = legs(Stroll({1, 2, 3, 2, 1}, 3));
        REQUIRE(d.legs == std::vector<Leg>{{1, 3, LegDirection::ascending},
                                           {3, 5, LegDirection::descending}});
        REQUIRE(d.waypoints == std::vector<Waypoint>{{1, WaypointKind::terminal},
                                                     {3, WaypointKind::peak},
                                                     {5, WaypointKind::terminal}});
    }
    SECTION("the eight-letter example walk has seven legs") {
        LegDecomposition d = legs(Stroll(fig1_course, 8));
        REQUIRE(d.legs == std::vector<Leg>{{1, 3, LegDirection::descending},
                                           {3, 5, LegDirection::ascending},
                                           {5, 7, LegDirection::flat},
                                           {7, 10, LegDirection::ascending},
                                           {10, 13, LegDirection::descending},
                                           {13, 18, LegDirection::ascending},
                                           {18, 20, LegDirection::descending}});
        REQUIRE(d.waypoints[0] == Waypoint{1, WaypointKind::terminal});
        REQUIRE(d.waypoints[1] == Waypoint{3, WaypointKind::trough});
        REQUIRE(d.waypoints[2].kind == WaypointKind::other); // flat boundary
        REQUIRE(d.waypoints.back() == Waypoint{20, WaypointKind::terminal});
    }
    SECTION("flat course") {
        LegDecomposition d = legs(Stroll({1, 1}, 1));
        REQUIRE(d.legs == std::vector<Leg>{{1, 2, LegDirection::flat}});
    }
    REQUIRE_THROWS_AS(legs(Stroll({1}, 1)), Error);

    SECTION("legs partition the domain") {
        for (const Walk& f : all_walks(3, 6)) {
            LegDecomposition d = legs(f);
            REQUIRE(d.legs.front().start == 1);
            REQUIRE(d.legs.back().end == f.domain_length());
            for (std::size_t i = 1; i < d.legs.size(); ++i)
                REQUIRE(d.legs[i].start == d.legs[i - 1].end);
        }
    }
}

TEST_CASE("excision") {
    REQUIRE(excise(Stroll({1, 2, 1, 2, 3}, 3), 2, 4).course() == std::vector<int>{1, 2, 3});
    REQUIRE(excise(Stroll({1, 2, 3, 2, 1}, 3), 1, 3).course() == std::vector<int>{3, 2, 1});
    REQUIRE(excise(Stroll({1, 2, 3, 2, 1}, 3), 3, 5).course() == std::vector<int>{1, 2, 3});
}

TEST_CASE("excision endpoint mismatch") {
    // internal case requires f(i) = f(j)
    REQUIRE_THROWS_AS(excise(Stroll({1, 2, 3, 4, 5}, 5), 2, 4), Error);
    // a walk excised around a repeated level stays a stroll
    Stroll cut = excise(Stroll({1, 2, 3, 2, 3}, 3), 2, 4);
    REQUIRE_FALSE(stroll_issue(cut.course(), 3).has_value());
}

TEST_CASE("composition") {
    Walk g({1, 2, 3, 2, 1}, 3);
    REQUIRE(compose(identity_walk(3), g) == g);
    REQUIRE(compose(Walk({1, 2, 3}, 3), Walk({1, 2, 3, 2, 1}, 3)).course() ==
            std::vector<int>{1, 2, 3, 2, 1});
    REQUIRE(compose(Walk({2, 1, 2, 3, 4}, 4), Walk({1, 2, 3, 4, 5, 4, 5}, 5)).course() ==
            std::vector<int>{2, 1, 2, 3, 4, 3, 4});
    REQUIRE_THROWS_AS(compose(Walk({1, 2}, 2), Walk({1, 2, 3}, 3)), Error);

    SECTION("apply respects composition and composition associates") {
        Word u = W("abca");
        for (const Walk& f : all_walks(4, 5)) {
            for (const Walk& g : all_walks(5, 6)) {
                Walk fg = compose(f, g);
                REQUIRE(apply(u, fg) == apply(apply(u, f), g));
                for (const Walk& h : all_walks(6, 7))
                    REQUIRE(compose(fg, h) == compose(f, compose(g, h)));
            }
        }
    }
}
