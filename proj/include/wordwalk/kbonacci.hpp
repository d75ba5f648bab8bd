#ifndef WORDWALK_KBONACCI_HPP
#define WORDWALK_KBONACCI_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wordwalk/error.hpp"
#include "wordwalk/generation.hpp"
#include "wordwalk/reduction.hpp"
#include "wordwalk/word.hpp"

namespace wordwalk {

// Words grow exponentially in n; cap the expansion rather than letting a
// stray argument eat the machine.
inline constexpr std::size_t kDefaultWordBudget = std::size_t{1} << 20;

// The generalized Rauzy morphism over {1,...,k}: i -> 1.(i+1) for i < k,
// and k -> 1.
inline Word sigma(int k, const Word& u) {
    if (k < 2) raise(Error::Code::invalid_input, "sigma: k must be at least 2");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(2 * u.size()));
    for (int a : u.letters()) {
        if (a < 1 || a > k) raise(Error::Code::invalid_input, "sigma: letter-out-of-range");
        out.push_back(1);
        if (a < k) out.push_back(a + 1);
    }
    return Word(std::move(out));
}

// alpha_1 = 1, alpha_{n+1} = sigma(alpha_n): the k-bonacci word sequence.
inline Word alpha(int k, int n, std::size_t max_letters = kDefaultWordBudget) {
    if (k < 2 || n < 1) raise(Error::Code::invalid_input, "alpha: parameter-out-of-range");
    Word w{1};
    for (int i = 1; i < n; ++i) {
        w = sigma(k, w);
        if (static_cast<std::size_t>(w.size()) > max_letters)
            raise(Error::Code::budget_exceeded, "alpha: word-length budget exceeded");
    }
    return w;
}

// beta'_1 = empty, beta'_{k+1} = beta'_k . k . beta'_k; beta_k = beta'_k . k.
inline Word beta_prime(int k) {
    if (k < 1) raise(Error::Code::invalid_input, "beta_prime: k must be at least 1");
    Word w;
    for (int i = 1; i < k; ++i) w = w + Word{i} + w;
    return w;
}

inline Word beta(int k) {
    if (k < 1) raise(Error::Code::invalid_input, "beta: k must be at least 1");
    return beta_prime(k) + Word{k};
}

// gamma'_k = (k-1) . beta'_{k-1}; gamma_k = gamma'_k . k.
inline Word gamma_prime(int k) {
    if (k < 2) raise(Error::Code::invalid_input, "gamma_prime: k must be at least 2");
    return Word{k - 1} + beta_prime(k - 1);
}

inline Word gamma(int k) {
    if (k < 2) raise(Error::Code::invalid_input, "gamma: k must be at least 2");
    return gamma_prime(k) + Word{k};
}

// The recursive form: alpha_n = beta_n for n <= k, and the reverse-order
// concatenation of the previous k terms after that.
inline Word alpha_recursive(int k, int n, std::size_t max_letters = kDefaultWordBudget) {
    if (k < 2 || n < 1) raise(Error::Code::invalid_input, "alpha_recursive: parameter-out-of-range");
    std::vector<Word> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Word next;
        if (i <= k) {
            next = beta(i);
        } else {
            for (int j = i - 1; j >= i - k; --j) next = next + terms[static_cast<std::size_t>(j - 1)];
        }
        if (static_cast<std::size_t>(next.size()) > max_letters)
            raise(Error::Code::budget_exceeded, "alpha_recursive: word-length budget exceeded");
        terms.push_back(std::move(next));
    }
    return terms.back();
}

struct StructureClause {
    std::string name;
    bool pass;
};

struct StructureReport {
    int k = 0;
    std::vector<StructureClause> clauses;

    bool all_pass() const {
        for (const auto& c : clauses)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::vector<int> occurrences(const Word& w, int letter) {
    std::vector<int> out;
    for (int i = 1; i <= w.size(); ++i)
        if (w.at(i) == letter) out.push_back(i);
    return out;
}

} // namespace detail

// Structural facts about the beta/gamma families: beta'_k is a palindrome
// over {1,...,k-1} with its single k-1 in the middle; beta_k carries its
// single k-1 at the halfway position and its single k at the end; gamma_k
// (k >= 3) has unique extremal letters at the end, beginning and middle;
// and every position of gamma_k touches the letter 1.
inline StructureReport check_structure(int k) {
    if (k < 2) raise(Error::Code::invalid_input, "check_structure: k must be at least 2");
    StructureReport report;
    report.k = k;

    Word bp = beta_prime(k);
    Word b = beta(k);
    Word g = gamma(k);

    bool bp_sub_alphabet = true;
    for (int a : bp.letters()) bp_sub_alphabet = bp_sub_alphabet && a >= 1 && a <= k - 1;
    report.clauses.push_back({"beta_prime_palindrome", is_palindrome(bp) && bp_sub_alphabet});

    auto bp_top = detail::occurrences(bp, k - 1);
    report.clauses.push_back(
        {"beta_prime_single_middle", bp_top.size() == 1 && bp_top.front() == (bp.size() + 1) / 2});

    auto b_top = detail::occurrences(b, k - 1);
    auto b_last = detail::occurrences(b, k);
    report.clauses.push_back(
        {"beta_single_k_minus_1_at_half", b_top.size() == 1 && b_top.front() == b.size() / 2});
    report.clauses.push_back(
        {"beta_single_k_at_end", b_last.size() == 1 && b_last.front() == b.size()});

    if (k >= 3) {
        auto g_end = detail::occurrences(g, k);
        auto g_begin = detail::occurrences(g, k - 1);
        auto g_mid = detail::occurrences(g, k - 2);
        bool pass = g_end.size() == 1 && g_end.front() == g.size() &&
                    g_begin.size() == 1 && g_begin.front() == 1 &&
                    g_mid.size() == 1 && g_mid.front() == (g.size() + 1) / 2;
        report.clauses.push_back({"gamma_unique_extremes", pass});
    }

    bool ones_adjacent = true;
    for (int i = 1; i <= g.size() && ones_adjacent; ++i)
        ones_adjacent = g.at(i) == 1 || (i > 1 && g.at(i - 1) == 1) ||
                        (i < g.size() && g.at(i + 1) == 1);
    report.clauses.push_back({"gamma_ones_adjacent", ones_adjacent});

    return report;
}

// gamma_k is the primitive generator of alpha_n for every n >= k.
inline bool verify_theorem4(int k, int n, std::size_t max_letters = kDefaultWordBudget) {
    if (k < 2 || n < k) raise(Error::Code::invalid_input, "verify_theorem4: parameter-out-of-range");
    return primitive_generator(alpha(k, n, max_letters)).generator == canonical_orientation(gamma(k));
}

// A walk on gamma_k yielding alpha_n that starts at position h; one exists
// whenever gamma_k[h] = 1.
inline std::optional<Walk> find_generating_walk_from(int k, int n, int h,
                                                     std::size_t max_letters = kDefaultWordBudget) {
    if (k < 2 || n < k) raise(Error::Code::invalid_input,
                              "find_generating_walk_from: parameter-out-of-range");
    Word g = gamma(k);
    if (h < 1 || h > g.size())
        raise(Error::Code::invalid_input, "find_generating_walk_from: h out of range");
    return find_walk(g, alpha(k, n, max_letters), h);
}

} // namespace wordwalk

#endif
