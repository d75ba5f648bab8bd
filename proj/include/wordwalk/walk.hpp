#ifndef WORDWALK_WALK_HPP
#define WORDWALK_WALK_HPP

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wordwalk/error.hpp"
#include "wordwalk/word.hpp"

namespace wordwalk {

// Diagnostic for a course that fails to be a stroll or walk. `index` names
// the first offending step/position (1-based); for missing surjectivity it
// names the smallest unvisited position.
struct CourseIssue {
    enum class Kind { step_violation, range_violation, empty_course, not_surjective };
    Kind kind;
    int index;

    std::string describe() const {
        switch (kind) {
            case Kind::step_violation: return "step-violation(" + std::to_string(index) + ")";
            case Kind::range_violation: return "range-violation(" + std::to_string(index) + ")";
            case Kind::empty_course: return "empty-course";
            case Kind::not_surjective: return "not-surjective(" + std::to_string(index) + ")";
        }
        return "unknown";
    }
};

inline std::optional<CourseIssue> stroll_issue(std::span<const int> course, int target_length) {
    int m = static_cast<int>(course.size());
    if (m == 0 && target_length > 0)
        return CourseIssue{CourseIssue::Kind::empty_course, 0};
    for (int i = 1; i <= m; ++i) {
        if (course[i - 1] < 1 || course[i - 1] > target_length)
            return CourseIssue{CourseIssue::Kind::range_violation, i};
    }
    for (int i = 1; i < m; ++i) {
        if (std::abs(course[i] - course[i - 1]) > 1)
            return CourseIssue{CourseIssue::Kind::step_violation, i};
    }
    return std::nullopt;
}

inline std::optional<CourseIssue> walk_issue(std::span<const int> course, int target_length) {
    if (auto issue = stroll_issue(course, target_length)) return issue;
    std::vector<char> seen(static_cast<std::size_t>(target_length) + 1, 0);
    for (int p : course) seen[p] = 1;
    for (int p = 1; p <= target_length; ++p)
        if (!seen[p]) return CourseIssue{CourseIssue::Kind::not_surjective, p};
    return std::nullopt;
}

// A course of values f(1..m) in [1,n] with unit steps. Positions and course
// values are 1-based. The empty stroll exists only against n = 0.
class Stroll {
public:
    Stroll() = default;

    Stroll(std::vector<int> course, int target_length)
        : course_(std::move(course)), target_length_(target_length) {
        if (auto issue = stroll_issue(course_, target_length_))
            raise(Error::Code::invalid_input, "invalid stroll: " + issue->describe());
    }

    int domain_length() const { return static_cast<int>(course_.size()); }
    int target_length() const { return target_length_; }

    int at(int i) const {
        assert(i >= 1 && i <= domain_length());
        return course_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<int>& course() const { return course_; }

    bool is_surjective() const { return !walk_issue(course_, target_length_); }

    bool operator==(const Stroll&) const = default;

private:
    std::vector<int> course_;
    int target_length_ = 0;
};

// A surjective stroll. Surjectivity is established at construction; edits
// that may lose it return plain strolls and get re-promoted explicitly.
class Walk {
public:
    Walk() = default;

    Walk(std::vector<int> course, int target_length) : stroll_(std::move(course), target_length) {
        if (auto issue = walk_issue(stroll_.course(), target_length))
            raise(Error::Code::invalid_input, "invalid walk: " + issue->describe());
    }

    explicit Walk(Stroll stroll) : stroll_(std::move(stroll)) {
        if (auto issue = walk_issue(stroll_.course(), stroll_.target_length()))
            raise(Error::Code::invalid_input, "invalid walk: " + issue->describe());
    }

    int domain_length() const { return stroll_.domain_length(); }
    int target_length() const { return stroll_.target_length(); }
    int at(int i) const { return stroll_.at(i); }
    const std::vector<int>& course() const { return stroll_.course(); }

    const Stroll& as_stroll() const { return stroll_; }
    operator const Stroll&() const { return stroll_; }

    bool operator==(const Walk&) const = default;

private:
    Stroll stroll_;
};

inline Walk identity_walk(int n) {
    std::vector<int> course(static_cast<std::size_t>(n));
    std::iota(course.begin(), course.end(), 1);
    return Walk(std::move(course), n);
}

// u^f: the word u[f(1)] ... u[f(m)].
inline Word apply(const Word& u, const Stroll& f) {
    if (f.target_length() != u.size())
        raise(Error::Code::length_mismatch,
              "apply: stroll targets length " + std::to_string(f.target_length()) +
                  " but word has length " + std::to_string(u.size()));
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(f.domain_length()));
    for (int p : f.course()) out.push_back(u.at(p));
    return Word(std::move(out));
}

enum class LegDirection { ascending, descending, flat };

// A maximal interval [start,end] of the domain on which consecutive values
// change by a constant -1, 0 or +1.
struct Leg {
    int start;
    int end;
    LegDirection direction;
    int length() const { return end - start; }
    bool operator==(const Leg&) const = default;
};

enum class WaypointKind { terminal, peak, trough, other };

struct Waypoint {
    int index;
    WaypointKind kind;
    bool operator==(const Waypoint&) const = default;
};

struct LegDecomposition {
    std::vector<Leg> legs;
    std::vector<Waypoint> waypoints;
};

inline LegDecomposition legs(const Stroll& f) {
    int m = f.domain_length();
    if (m < 2) raise(Error::Code::invalid_input, "legs: too-short (domain length < 2)");

    auto dir = [&](int i) { // direction of the step i -> i+1
        int d = f.at(i + 1) - f.at(i);
        return d > 0 ? LegDirection::ascending : d < 0 ? LegDirection::descending : LegDirection::flat;
    };

    LegDecomposition out;
    int start = 1;
    for (int i = 2; i < m; ++i) {
        if (dir(i) != dir(i - 1)) {
            out.legs.push_back({start, i, dir(start)});
            start = i;
        }
    }
    out.legs.push_back({start, m, dir(start)});

    out.waypoints.push_back({1, WaypointKind::terminal});
    for (std::size_t i = 1; i < out.legs.size(); ++i) {
        LegDirection before = out.legs[i - 1].direction;
        LegDirection after = out.legs[i].direction;
        WaypointKind kind = WaypointKind::other;
        if (before == LegDirection::ascending && after == LegDirection::descending)
            kind = WaypointKind::peak;
        else if (before == LegDirection::descending && after == LegDirection::ascending)
            kind = WaypointKind::trough;
        out.waypoints.push_back({out.legs[i].start, kind});
    }
    out.waypoints.push_back({m, WaypointKind::terminal});
    return out;
}

// f / [i,j]: drop the span [i,j-1] (internal case, which requires
// f(i) = f(j)), the prefix [1,j-1], or the suffix [i+1,m].
inline Stroll excise(const Stroll& f, int i, int j) {
    int m = f.domain_length();
    if (!(1 <= i && i < j && j <= m))
        raise(Error::Code::invalid_input, "excise: interval out of range");
    const auto& c = f.course();
    std::vector<int> out;
    if (i == 1) {
        out.assign(c.begin() + (j - 1), c.end());
    } else if (j == m) {
        out.assign(c.begin(), c.begin() + i);
    } else {
        if (f.at(i) != f.at(j))
            raise(Error::Code::invalid_input,
                  "excise: endpoint-mismatch, f(" + std::to_string(i) + ") != f(" + std::to_string(j) + ")");
        out.assign(c.begin(), c.begin() + i);
        out.insert(out.end(), c.begin() + j, c.end());
    }
    return Stroll(std::move(out), f.target_length());
}

// (f o g)(i) = f(g(i)); the composite of walks is a walk.
inline Walk compose(const Walk& f, const Walk& g) {
    if (g.target_length() != f.domain_length())
        raise(Error::Code::domain_mismatch,
              "compose: domain-mismatch, g targets " + std::to_string(g.target_length()) +
                  " but f has domain length " + std::to_string(f.domain_length()));
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(g.domain_length()));
    for (int p : g.course()) out.push_back(f.at(p));
    return Walk(std::move(out), f.target_length());
}

} // namespace wordwalk

#endif
