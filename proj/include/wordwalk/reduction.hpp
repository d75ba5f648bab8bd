#ifndef WORDWALK_REDUCTION_HPP
#define WORDWALK_REDUCTION_HPP

#include <cassert>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordwalk/error.hpp"
#include "wordwalk/walk.hpp"
#include "wordwalk/word.hpp"

namespace wordwalk {

// One collapse of a non-primitive pattern. The four kinds mirror the forms
// xaay, bx~axby, ybx~axb and yaxbx~axbz: a doubled letter, an odd palindromic
// prefix/suffix of length 2k+1, and an odd palindrome w[p..p+2k] whose
// following k letters repeat w[p+1..p+k].
enum class ReductionKind { double_letter, prefix_palindrome, suffix_palindrome, internal_overlap };

inline std::string to_string(ReductionKind kind) {
    switch (kind) {
        case ReductionKind::double_letter: return "double-letter";
        case ReductionKind::prefix_palindrome: return "prefix-palindrome";
        case ReductionKind::suffix_palindrome: return "suffix-palindrome";
        case ReductionKind::internal_overlap: return "internal-overlap";
    }
    return "?";
}

struct ReductionStep {
    ReductionKind kind;
    int position = 0; // p: doubled letter index, or start of the kind-(iv) palindrome
    int radius = 0;   // k; 0 for double-letter
    Walk witness;     // from the reduced word onto the pre-reduction word
};

namespace detail {

// Reduced word for a match, before the witness is attached.
inline Word reduced_word(const Word& w, ReductionKind kind, int p, int k) {
    int n = w.size();
    switch (kind) {
        case ReductionKind::double_letter:
            return w.factor(1, p) + w.factor(p + 2, n);
        case ReductionKind::prefix_palindrome:
            return w.factor(k + 1, n);
        case ReductionKind::suffix_palindrome:
            return w.factor(1, n - k);
        case ReductionKind::internal_overlap:
            return w.factor(1, p + k) + w.factor(p + 3 * k + 1, n);
    }
    return w;
}

// The generating walk the Lemma's if-direction names for each pattern:
// pause on the doubled letter, run out from the palindrome centre, turn
// back into the suffix, or traverse the overlap twice.
inline Walk witness_walk(int n, ReductionKind kind, int p, int k) {
    std::vector<int> course;
    switch (kind) {
        case ReductionKind::double_letter:
            for (int i = 1; i <= p; ++i) course.push_back(i);
            for (int i = p; i <= n - 1; ++i) course.push_back(i);
            return Walk(std::move(course), n - 1);
        case ReductionKind::prefix_palindrome:
            for (int i = k + 1; i >= 1; --i) course.push_back(i);
            for (int i = 2; i <= n - k; ++i) course.push_back(i);
            return Walk(std::move(course), n - k);
        case ReductionKind::suffix_palindrome:
            for (int i = 1; i <= n - k; ++i) course.push_back(i);
            for (int i = n - k - 1; i >= n - 2 * k; --i) course.push_back(i);
            return Walk(std::move(course), n - k);
        case ReductionKind::internal_overlap:
            for (int i = 1; i <= p + k; ++i) course.push_back(i);
            for (int i = p + k - 1; i >= p; --i) course.push_back(i);
            for (int i = p + 1; i <= n - 2 * k; ++i) course.push_back(i);
            return Walk(std::move(course), n - 2 * k);
    }
    return Walk();
}

} // namespace detail

inline Word apply_reduction(const Word& w, const ReductionStep& step) {
    return detail::reduced_word(w, step.kind, step.position, step.radius);
}

// Every pattern match in w, in the deterministic scan order: doubled letters
// left to right, then palindromic prefixes by radius, then suffixes by
// radius, then kind (iv) by start position and radius.
inline std::vector<ReductionStep> all_reductions(const Word& w) {
    int n = w.size();
    std::vector<ReductionStep> out;
    auto pal = palindrome_table(w);

    for (int p = 1; p + 1 <= n; ++p)
        if (w.at(p) == w.at(p + 1))
            out.push_back({ReductionKind::double_letter, p, 0,
                           detail::witness_walk(n, ReductionKind::double_letter, p, 0)});

    for (int k = 1; 2 * k + 1 <= n; ++k)
        if (pal[1][2 * k + 1])
            out.push_back({ReductionKind::prefix_palindrome, 1, k,
                           detail::witness_walk(n, ReductionKind::prefix_palindrome, 1, k)});

    for (int k = 1; 2 * k + 1 <= n; ++k)
        if (pal[n - 2 * k][n])
            out.push_back({ReductionKind::suffix_palindrome, n - 2 * k, k,
                           detail::witness_walk(n, ReductionKind::suffix_palindrome, n - 2 * k, k)});

    for (int p = 1; p + 3 <= n; ++p) {
        for (int k = 1; p + 3 * k <= n; ++k) {
            if (!pal[p][p + 2 * k]) continue;
            bool repeats = true;
            for (int j = 1; j <= k && repeats; ++j)
                repeats = w.at(p + j) == w.at(p + 2 * k + j);
            if (repeats)
                out.push_back({ReductionKind::internal_overlap, p, k,
                               detail::witness_walk(n, ReductionKind::internal_overlap, p, k)});
        }
    }
    return out;
}

// First match in scan order, or none when w is primitive.
inline std::optional<std::pair<Word, ReductionStep>> reduce_once(const Word& w) {
    int n = w.size();
    for (int p = 1; p + 1 <= n; ++p)
        if (w.at(p) == w.at(p + 1)) {
            ReductionStep step{ReductionKind::double_letter, p, 0,
                               detail::witness_walk(n, ReductionKind::double_letter, p, 0)};
            return std::make_pair(apply_reduction(w, step), std::move(step));
        }

    auto pal = palindrome_table(w);
    for (int k = 1; 2 * k + 1 <= n; ++k)
        if (pal[1][2 * k + 1]) {
            ReductionStep step{ReductionKind::prefix_palindrome, 1, k,
                               detail::witness_walk(n, ReductionKind::prefix_palindrome, 1, k)};
            return std::make_pair(apply_reduction(w, step), std::move(step));
        }
    for (int k = 1; 2 * k + 1 <= n; ++k)
        if (pal[n - 2 * k][n]) {
            ReductionStep step{ReductionKind::suffix_palindrome, n - 2 * k, k,
                               detail::witness_walk(n, ReductionKind::suffix_palindrome, n - 2 * k, k)};
            return std::make_pair(apply_reduction(w, step), std::move(step));
        }
    for (int p = 1; p + 3 <= n; ++p) {
        for (int k = 1; p + 3 * k <= n; ++k) {
            if (!pal[p][p + 2 * k]) continue;
            bool repeats = true;
            for (int j = 1; j <= k && repeats; ++j)
                repeats = w.at(p + j) == w.at(p + 2 * k + j);
            if (repeats) {
                ReductionStep step{ReductionKind::internal_overlap, p, k,
                                   detail::witness_walk(n, ReductionKind::internal_overlap, p, k)};
                return std::make_pair(apply_reduction(w, step), std::move(step));
            }
        }
    }
    return std::nullopt;
}

// Primitive: matches none of the four patterns, i.e. no strictly shorter
// word generates it.
inline bool is_primitive(const Word& w) { return !reduce_once(w).has_value(); }

// Perfect words admit no repeated letter at distance 1 or 2; every
// non-trivial palindrome contains such a centre.
inline bool is_perfect(const Word& u) {
    int n = u.size();
    for (int i = 1; i <= n; ++i) {
        if (i + 1 <= n && u.at(i) == u.at(i + 1)) return false;
        if (i + 2 <= n && u.at(i) == u.at(i + 2)) return false;
    }
    return true;
}

inline Word canonical_orientation(const Word& u) { return std::min(u, reverse(u)); }

// The primitive generator of a word, with a replayable walk certificate.
// `generator` is canonical (the lexicographic minimum of the two
// orientations); `walk` applies to the orientation the reduction actually
// reached, recorded by `reversed`.
struct GeneratorCertificate {
    Word generator;
    bool reversed = false;
    Walk walk;
    std::vector<ReductionStep> trace;

    Word oriented_generator() const { return reversed ? reverse(generator) : generator; }

    // The same witness re-based onto the canonical orientation.
    Walk walk_on_canonical() const {
        if (!reversed) return walk;
        int n = generator.size();
        std::vector<int> flip(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) flip[static_cast<std::size_t>(i - 1)] = n + 1 - i;
        return compose(Walk(std::move(flip), n), walk);
    }
};

inline GeneratorCertificate primitive_generator(const Word& w) {
    GeneratorCertificate cert;
    Word current = w;
    Walk total = identity_walk(w.size());
    while (auto step = reduce_once(current)) {
        total = compose(step->second.witness, total);
        cert.trace.push_back(std::move(step->second));
        current = std::move(step->first);
    }
    cert.reversed = reverse(current) < current;
    cert.generator = cert.reversed ? reverse(current) : std::move(current);
    cert.walk = std::move(total);
    assert(apply(cert.oriented_generator(), cert.walk) == w);
    return cert;
}

} // namespace wordwalk

#endif
