#ifndef WORDWALK_EDITS_HPP
#define WORDWALK_EDITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wordwalk/error.hpp"
#include "wordwalk/walk.hpp"
#include "wordwalk/word.hpp"

namespace wordwalk {

// Pause for one step after executing step j. Walks stay walks.
inline Walk hesitation(const Walk& f, int j) {
    int m = f.domain_length();
    if (j < 1 || j > m) raise(Error::Code::invalid_input, "hesitation: index-out-of-range");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= j; ++i) out.push_back(f.at(i));
    for (int i = j; i <= m; ++i) out.push_back(f.at(i));
    return Walk(std::move(out), f.target_length());
}

enum class EditKind { initial, internal, final };

inline std::string to_string(EditKind kind) {
    switch (kind) {
        case EditKind::initial: return "initial";
        case EditKind::internal: return "internal";
        case EditKind::final: return "final";
    }
    return "?";
}

// Retrace part of the walk and carry on. Initial: run the first k+1 steps in
// reverse, then continue from the second step. Final: after finishing, repeat
// the k steps before the last in reverse. Internal at j: retrace the k steps
// before j, then continue from step j-k+1.
struct VacillationSpec {
    EditKind kind;
    int j = 0; // used by internal only
    int k = 0;
};

inline Walk vacillation(const Walk& f, const VacillationSpec& spec) {
    int m = f.domain_length();
    int k = spec.k;
    std::vector<int> out;
    switch (spec.kind) {
        case EditKind::initial: {
            if (k < 1 || k >= m) raise(Error::Code::invalid_input, "vacillation: parameter-out-of-range");
            out.reserve(static_cast<std::size_t>(m + k));
            for (int i = 1; i <= m + k; ++i)
                out.push_back(i <= k + 1 ? f.at(k + 2 - i) : f.at(i - k));
            break;
        }
        case EditKind::final: {
            if (k < 1 || k >= m) raise(Error::Code::invalid_input, "vacillation: parameter-out-of-range");
            out.reserve(static_cast<std::size_t>(m + k));
            for (int i = 1; i <= m + k; ++i)
                out.push_back(i <= m ? f.at(i) : f.at(2 * m - i));
            break;
        }
        case EditKind::internal: {
            int j = spec.j;
            if (j <= 1 || j >= m || k < 1 || k >= j)
                raise(Error::Code::invalid_input, "vacillation: parameter-out-of-range");
            out.reserve(static_cast<std::size_t>(m + 2 * k));
            for (int i = 1; i <= m + 2 * k; ++i) {
                if (i <= j)
                    out.push_back(f.at(i));
                else if (i <= j + k)
                    out.push_back(f.at(2 * j - i));
                else
                    out.push_back(f.at(i - 2 * k));
            }
            break;
        }
    }
    return Walk(std::move(out), f.target_length());
}

// Mirror a segment of the stroll about a horizontal axis. Initial reflects
// [1,k+1] about the level f(k+1); final reflects [m-k,m] about f(m-k);
// internal reflects [j-k,j+k] about f(j-k) = f(j+k).
struct ReflectionSpec {
    EditKind kind;
    int j = 0; // used by internal only
    int k = 0;

    bool operator==(const ReflectionSpec&) const = default;
};

inline void check_reflection_spec(const Stroll& f, const ReflectionSpec& spec) {
    int m = f.domain_length();
    switch (spec.kind) {
        case EditKind::initial:
        case EditKind::final:
            if (spec.k < 1 || spec.k >= m)
                raise(Error::Code::invalid_input, "reflection: spec-invalid (k out of range)");
            return;
        case EditKind::internal:
            if (spec.j <= 1 || spec.j >= m || spec.k < 1 ||
                spec.k > std::min(spec.j - 1, m - spec.j))
                raise(Error::Code::invalid_input, "reflection: spec-invalid (j,k out of range)");
            if (f.at(spec.j - spec.k) != f.at(spec.j + spec.k))
                raise(Error::Code::invalid_input,
                      "reflection: spec-invalid (f(j-k) != f(j+k))");
            return;
    }
}

// The index the reflected segment pivots on; the reflection axis sits at
// f(pivot), and admissibility asks for a palindrome centred at that letter.
inline int reflection_pivot_index(const Stroll& f, const ReflectionSpec& spec) {
    switch (spec.kind) {
        case EditKind::initial: return spec.k + 1;
        case EditKind::final: return f.domain_length() - spec.k;
        case EditKind::internal: return spec.j - spec.k;
    }
    return 0;
}

struct Reflected {
    bool proper = false;
    Stroll stroll;           // set only when proper
    int offending_index = 0; // first index whose value leaves [1,n]
    int offending_value = 0;
};

inline Reflected reflection(const Stroll& f, const ReflectionSpec& spec) {
    check_reflection_spec(f, spec);
    int m = f.domain_length();
    int lo = 0, hi = 0; // reflected range [lo,hi] of the domain
    switch (spec.kind) {
        case EditKind::initial: lo = 1, hi = spec.k + 1; break;
        case EditKind::final: lo = m - spec.k, hi = m; break;
        case EditKind::internal: lo = spec.j - spec.k, hi = spec.j + spec.k; break;
    }
    int axis = f.at(reflection_pivot_index(f, spec));

    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m));
    Reflected result;
    for (int i = 1; i <= m; ++i) {
        int v = (i >= lo && i <= hi) ? 2 * axis - f.at(i) : f.at(i);
        if (v < 1 || v > f.target_length()) {
            result.proper = false;
            result.offending_index = i;
            result.offending_value = v;
            return result;
        }
        out.push_back(v);
    }
    result.proper = true;
    result.stroll = Stroll(std::move(out), f.target_length());
    return result;
}

// A reflection is admissible for u when u carries a palindrome of length
// 2k+1 centred at the pivot letter; admissible proper reflections preserve
// u^f.
inline bool is_admissible(const Stroll& f, const Word& u, const ReflectionSpec& spec) {
    check_reflection_spec(f, spec);
    if (f.target_length() != u.size())
        raise(Error::Code::length_mismatch, "is_admissible: stroll does not target u");
    int c = f.at(reflection_pivot_index(f, spec));
    int k = spec.k;
    if (c - k < 1 || c + k > u.size()) return false;
    for (int s = 1; s <= k; ++s)
        if (u.at(c - s) != u.at(c + s)) return false;
    return true;
}

} // namespace wordwalk

#endif
