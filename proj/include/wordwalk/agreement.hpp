#ifndef WORDWALK_AGREEMENT_HPP
#define WORDWALK_AGREEMENT_HPP

#include <algorithm>
#include <cassert>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wordwalk/edits.hpp"
#include "wordwalk/error.hpp"
#include "wordwalk/reduction.hpp"
#include "wordwalk/walk.hpp"
#include "wordwalk/word.hpp"

namespace wordwalk {

// Two walks on a primitive word yield the same output exactly when their
// positions are pointwise linked by the equivalence closure of the defect
// relation.
inline bool walks_agree(const Word& u, const Walk& f, const Walk& g) {
    if (!is_primitive(u)) raise(Error::Code::not_primitive, "walks_agree: not-primitive");
    if (f.target_length() != u.size() || g.target_length() != u.size() ||
        f.domain_length() != g.domain_length())
        raise(Error::Code::length_mismatch, "walks_agree: shape-mismatch");
    DefectClasses classes = defect_classes(u);
    bool agree = true;
    for (int i = 1; i <= f.domain_length() && agree; ++i)
        agree = classes.same_class(f.at(i), g.at(i));
    assert(agree == (apply(u, f) == apply(u, g)));
    return agree;
}

// Two primitive words of equal length satisfy the same equations u^f = u^g
// exactly when they have the same defect sets.
inline bool same_defect_equations(const Word& v1, const Word& v2) {
    if (v1.size() != v2.size())
        raise(Error::Code::length_mismatch, "same_defect_equations: length-mismatch");
    if (!is_primitive(v1) || !is_primitive(v2))
        raise(Error::Code::not_primitive, "same_defect_equations: not-primitive");
    return defects(v1) == defects(v2);
}

// One step in a decomposition of an agreeing pair of walks. Hesitations and
// vacillations act on both walks at the same place; a reflection acts on one
// side only and must be proper and admissible for the word in question.
struct WalkPairEdit {
    enum class Type { hesitation, vacillation, reflection };
    enum class Side { first, second };

    Type type;
    int point = 0;            // hesitation
    VacillationSpec vac{};    // vacillation
    Side side = Side::first;  // reflection
    ReflectionSpec refl{};    // reflection

    static WalkPairEdit make_hesitation(int j) {
        WalkPairEdit e;
        e.type = Type::hesitation;
        e.point = j;
        return e;
    }
    static WalkPairEdit make_vacillation(VacillationSpec spec) {
        WalkPairEdit e;
        e.type = Type::vacillation;
        e.vac = spec;
        return e;
    }
    static WalkPairEdit make_reflection(Side side, ReflectionSpec spec) {
        WalkPairEdit e;
        e.type = Type::reflection;
        e.side = side;
        e.refl = spec;
        return e;
    }
};

struct WalkPairSeries {
    Walk base; // f_0 = g_0, monotone
    std::vector<WalkPairEdit> edits;
};

namespace detail {

inline Walk walk_or_internal(Stroll stroll, const char* context) {
    if (auto issue = walk_issue(stroll.course(), stroll.target_length()))
        raise(Error::Code::internal, std::string(context) + ": " + issue->describe());
    return Walk(std::move(stroll));
}

inline bool is_monotone(const Walk& f) {
    int m = f.domain_length();
    bool up = true, down = true;
    for (int i = 1; i < m; ++i) {
        if (f.at(i + 1) < f.at(i)) up = false;
        if (f.at(i + 1) > f.at(i)) down = false;
    }
    return up || down;
}

inline std::vector<int> internal_waypoints(const Walk& f) {
    std::vector<int> out;
    if (f.domain_length() < 2) return out;
    for (const auto& wp : legs(f).waypoints)
        if (wp.kind != WaypointKind::terminal) out.push_back(wp.index);
    return out;
}

} // namespace detail

// Replay a decomposition series from its monotone base. Checks the contract
// as it goes: every reflection must be proper and admissible for u, and all
// intermediate strolls must be walks.
inline std::pair<Walk, Walk> replay_edits(const Word& u, const Walk& base,
                                          std::span<const WalkPairEdit> edits) {
    Walk f = base, g = base;
    for (const auto& edit : edits) {
        switch (edit.type) {
            case WalkPairEdit::Type::hesitation:
                f = hesitation(f, edit.point);
                g = hesitation(g, edit.point);
                break;
            case WalkPairEdit::Type::vacillation:
                f = vacillation(f, edit.vac);
                g = vacillation(g, edit.vac);
                break;
            case WalkPairEdit::Type::reflection: {
                Walk& target = edit.side == WalkPairEdit::Side::first ? f : g;
                if (!is_admissible(target, u, edit.refl))
                    raise(Error::Code::internal, "replay: reflection not admissible");
                Reflected r = reflection(target, edit.refl);
                if (!r.proper) raise(Error::Code::internal, "replay: reflection not proper");
                target = detail::walk_or_internal(std::move(r.stroll), "replay: reflection");
                break;
            }
        }
    }
    return {std::move(f), std::move(g)};
}

namespace detail {

// Peeling state for the series decomposition. Edits are discovered last
// first and reversed at the end.
struct PairPeeler {
    const Word& u;
    Walk f, g;
    std::vector<WalkPairEdit> reversed_edits;
    int budget;

    PairPeeler(const Word& word, Walk f0, Walk g0)
        : u(word), f(std::move(f0)), g(std::move(g0)) {
        budget = 4 * f.domain_length() + 16;
    }

    void spend() {
        if (--budget < 0)
            raise(Error::Code::budget_exceeded, "decompose: edit budget overrun");
    }

    void emit_hesitation(int j) {
        spend();
        reversed_edits.push_back(WalkPairEdit::make_hesitation(j));
    }
    void emit_vacillation(VacillationSpec spec) {
        spend();
        reversed_edits.push_back(WalkPairEdit::make_vacillation(spec));
    }
    // side refers to (f,g); `swapped` callers translate before emitting
    void emit_reflection(WalkPairEdit::Side side, ReflectionSpec spec) {
        spend();
        reversed_edits.push_back(WalkPairEdit::make_reflection(side, spec));
    }

    bool strip_one_hesitation() {
        int m = f.domain_length();
        for (int i = 1; i < m; ++i) {
            if (f.at(i) == f.at(i + 1)) {
                if (g.at(i) != g.at(i + 1))
                    raise(Error::Code::internal, "decompose: unmatched stationary step");
                emit_hesitation(i);
                f = walk_or_internal(excise(f, i, i + 1), "decompose: strip f");
                g = walk_or_internal(excise(g, i, i + 1), "decompose: strip g");
                return true;
            }
        }
        return false;
    }

    struct ChosenLeg {
        Leg leg;
        bool on_g;      // chosen on the second walk
        bool terminal;  // initial or final
    };

    // Shortest leg over both walks; terminal legs of minimal length win, so
    // the internal case never abuts the domain boundary.
    ChosenLeg choose_minimal_leg() const {
        auto f_legs = legs(f).legs;
        auto g_legs = legs(g).legs;
        int m = f.domain_length();
        int best = m;
        for (const auto& l : f_legs) best = std::min(best, l.length());
        for (const auto& l : g_legs) best = std::min(best, l.length());
        auto terminal = [m](const Leg& l) { return l.start == 1 || l.end == m; };
        for (const auto& l : f_legs)
            if (l.length() == best && terminal(l)) return {l, false, true};
        for (const auto& l : g_legs)
            if (l.length() == best && terminal(l)) return {l, true, true};
        for (const auto& l : f_legs)
            if (l.length() == best) return {l, false, false};
        for (const auto& l : g_legs)
            if (l.length() == best) return {l, true, false};
        raise(Error::Code::internal, "decompose: no legs");
    }

    // Waypoints of `other` strictly inside [lo,hi].
    static std::vector<int> waypoints_in(const Walk& other, int lo, int hi) {
        std::vector<int> out;
        for (int wp : internal_waypoints(other))
            if (wp > lo && wp < hi) out.push_back(wp);
        return out;
    }

    void require(bool cond, const char* what) const {
        if (!cond) raise(Error::Code::internal, std::string("decompose: ") + what);
    }

    // Reflection that must be proper and admissible; returns the reflected
    // walk (surjectivity re-established).
    Walk checked_reflection(const Walk& target, const ReflectionSpec& spec) const {
        if (!is_admissible(target, u, spec))
            raise(Error::Code::internal, "decompose: expected reflection not admissible");
        Reflected r = reflection(target, spec);
        if (!r.proper) raise(Error::Code::internal, "decompose: expected reflection not proper");
        return walk_or_internal(std::move(r.stroll), "decompose: reflection");
    }

    // One peeling iteration over a minimal internal leg [V,W] of F. Emits
    // the rebuilding edits and excises the window [U,W] from both walks.
    void peel_internal(Walk& F, Walk& G, WalkPairEdit::Side side_G, const Leg& leg) {
        int m = F.domain_length();
        int V = leg.start, W = leg.end, len = leg.length();
        int U = V - len, X = W + len;
        require(U > 1 && X < m, "internal window must clear the boundary");

        std::vector<int> s = waypoints_in(G, U, X);
        bool at_v = std::find(s.begin(), s.end(), V) != s.end();
        bool at_w = std::find(s.begin(), s.end(), W) != s.end();

        if (at_v && at_w) {
            require(s.size() == 2, "case A expects waypoints exactly at V and W");
        } else if (at_v || at_w) {
            require(s.size() == 1, "case B expects a single waypoint");
            // rebuild G from its mirror over [V-len, V+len] or [W-len, W+len]
            ReflectionSpec spec{EditKind::internal, at_v ? V : W, len};
            Walk mirrored = checked_reflection(G, spec);
            emit_reflection(side_G, spec);
            G = std::move(mirrored);
        } else {
            require(len % 2 == 0, "case C needs an even leg");
            int half = len / 2;
            int m1 = V - half, m2 = V + half, m3 = W + half;
            require(s == std::vector<int>{m1, m2, m3}, "case C expects the three midpoints");
            ReflectionSpec spec_f{EditKind::internal, V, half};
            ReflectionSpec spec_g{EditKind::internal, m2, half};
            Walk f_mirror = checked_reflection(F, spec_f);
            Walk g_mirror = checked_reflection(G, spec_g);
            emit_reflection(side_G, spec_g);
            emit_reflection(side_G == WalkPairEdit::Side::first ? WalkPairEdit::Side::second
                                                                : WalkPairEdit::Side::first,
                            spec_f);
            emit_vacillation({EditKind::internal, V, half});
            emit_vacillation({EditKind::internal, m1, half});
            F = walk_or_internal(excise(F, U, W), "decompose: case C excise F");
            G = walk_or_internal(excise(G, U, W), "decompose: case C excise G");
            return;
        }
        emit_vacillation({EditKind::internal, V, len});
        F = walk_or_internal(excise(F, U, W), "decompose: excise F");
        G = walk_or_internal(excise(G, U, W), "decompose: excise G");
    }

    // Minimal terminal leg of F: [1,W] (initial) or [V,m] (final).
    void peel_terminal(Walk& F, Walk& G, WalkPairEdit::Side side_F, WalkPairEdit::Side side_G,
                       const Leg& leg) {
        int m = F.domain_length();
        int len = leg.length();
        bool initial = leg.start == 1;

        if (initial) {
            int W = leg.end, X = W + len;
            require(X <= m, "initial window exceeds the domain");
            std::vector<int> s = waypoints_in(G, 1, X);
            if (s == std::vector<int>{W}) {
                emit_vacillation({EditKind::initial, 0, len});
                F = walk_or_internal(excise(F, 1, W), "decompose: initial excise F");
                G = walk_or_internal(excise(G, 1, W), "decompose: initial excise G");
            } else if (s.empty()) {
                ReflectionSpec spec{EditKind::initial, 0, len};
                Walk mirrored = checked_reflection(G, spec);
                emit_reflection(side_G, spec);
                emit_vacillation({EditKind::initial, 0, len});
                F = walk_or_internal(excise(F, 1, W), "decompose: initial excise F");
                G = walk_or_internal(excise(mirrored, 1, W), "decompose: initial excise G''");
            } else {
                require(s.size() == 1 && s.front() > W, "initial case expects one far waypoint");
                int k = X - s.front();
                require(k >= 1 && 2 * k < len, "initial waypoint must sit in the outer half");
                int Z = 1 + k;
                ReflectionSpec spec{EditKind::initial, 0, k};
                Walk f_mirror = checked_reflection(F, spec);
                Walk g_mirror = checked_reflection(G, spec);
                emit_reflection(side_G, spec);
                emit_reflection(side_F, spec);
                emit_vacillation({EditKind::initial, 0, k});
                F = walk_or_internal(excise(f_mirror, 1, Z), "decompose: initial excise F''");
                G = walk_or_internal(excise(g_mirror, 1, Z), "decompose: initial excise G''");
            }
        } else {
            int V = leg.start, U = V - len;
            require(U >= 1, "final window exceeds the domain");
            std::vector<int> s = waypoints_in(G, U, m);
            if (s == std::vector<int>{V}) {
                emit_vacillation({EditKind::final, 0, len});
                F = walk_or_internal(excise(F, V, m), "decompose: final excise F");
                G = walk_or_internal(excise(G, V, m), "decompose: final excise G");
            } else if (s.empty()) {
                ReflectionSpec spec{EditKind::final, 0, len};
                Walk mirrored = checked_reflection(G, spec);
                emit_reflection(side_G, spec);
                emit_vacillation({EditKind::final, 0, len});
                F = walk_or_internal(excise(F, V, m), "decompose: final excise F");
                G = walk_or_internal(excise(mirrored, V, m), "decompose: final excise G''");
            } else {
                require(s.size() == 1 && s.front() < V, "final case expects one near waypoint");
                int k = s.front() - U;
                require(k >= 1 && 2 * k < len, "final waypoint must sit in the inner half");
                int Z = m - k;
                ReflectionSpec spec{EditKind::final, 0, k};
                Walk f_mirror = checked_reflection(F, spec);
                Walk g_mirror = checked_reflection(G, spec);
                emit_reflection(side_G, spec);
                emit_reflection(side_F, spec);
                emit_vacillation({EditKind::final, 0, k});
                F = walk_or_internal(excise(f_mirror, Z, m), "decompose: final excise F''");
                G = walk_or_internal(excise(g_mirror, Z, m), "decompose: final excise G''");
            }
        }
    }

    WalkPairSeries run() {
        int guard = f.domain_length() + 2;
        while (true) {
            if (--guard < 0) raise(Error::Code::budget_exceeded, "decompose: iteration overrun");
            if (strip_one_hesitation()) continue;
            if (is_monotone(f) && is_monotone(g)) {
                require(f == g, "monotone walks with equal images must coincide");
                break;
            }
            ChosenLeg chosen = choose_minimal_leg();
            Walk& F = chosen.on_g ? g : f;
            Walk& G = chosen.on_g ? f : g;
            auto side_F = chosen.on_g ? WalkPairEdit::Side::second : WalkPairEdit::Side::first;
            auto side_G = chosen.on_g ? WalkPairEdit::Side::first : WalkPairEdit::Side::second;
            if (chosen.terminal)
                peel_terminal(F, G, side_F, side_G, chosen.leg);
            else
                peel_internal(F, G, side_G, chosen.leg);
        }
        WalkPairSeries series;
        series.base = f;
        series.edits.assign(reversed_edits.rbegin(), reversed_edits.rend());
        return series;
    }
};

} // namespace detail

// Decompose an agreeing pair of walks on a primitive word into a series of
// hesitations, vacillations and admissible reflections from a common
// monotone base. The series is not unique; its contract is that replaying
// it reproduces exactly (f,g).
inline WalkPairSeries decompose_agreeing_walks(const Word& u, const Walk& f, const Walk& g) {
    if (!is_primitive(u)) raise(Error::Code::not_primitive, "decompose: not-primitive");
    if (f.target_length() != u.size() || g.target_length() != u.size() ||
        f.domain_length() != g.domain_length())
        raise(Error::Code::length_mismatch, "decompose: shape-mismatch");
    if (apply(u, f) != apply(u, g))
        raise(Error::Code::invalid_input, "decompose: images-differ");

    detail::PairPeeler peeler(u, f, g);
    WalkPairSeries series = peeler.run();

    auto [rf, rg] = replay_edits(u, series.base, series.edits);
    if (!(rf == f && rg == g))
        raise(Error::Code::internal, "decompose: replay does not reproduce the pair");
    if (!detail::is_monotone(series.base))
        raise(Error::Code::internal, "decompose: base is not monotone");
    return series;
}

} // namespace wordwalk

#endif
