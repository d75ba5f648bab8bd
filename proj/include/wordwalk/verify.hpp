#ifndef WORDWALK_VERIFY_HPP
#define WORDWALK_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wordwalk/agreement.hpp"
#include "wordwalk/edits.hpp"
#include "wordwalk/error.hpp"
#include "wordwalk/generation.hpp"
#include "wordwalk/kbonacci.hpp"
#include "wordwalk/oracle.hpp"
#include "wordwalk/reduction.hpp"
#include "wordwalk/walk.hpp"
#include "wordwalk/word.hpp"

namespace wordwalk {

// Result of one verification sweep. `details` carries human-readable notes;
// failures are capped so a broken property does not flood the report.
struct SuiteReport {
    std::string name;
    bool pass = true;
    std::size_t cases_checked = 0;
    std::vector<std::string> details;
    double millis = 0.0;

    void fail(const std::string& note) {
        pass = false;
        if (details.size() < 16) details.push_back(note);
    }
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double millis() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// All words over {1,...,alphabet} of length <= max_len, shortest first,
// lexicographic within a length. Includes the empty word.
inline std::vector<Word> words_up_to(int alphabet, int max_len) {
    std::vector<Word> out{Word{}};
    std::size_t first = 0;
    for (int len = 1; len <= max_len; ++len) {
        std::size_t last = out.size();
        for (std::size_t i = first; i < last; ++i) {
            for (int a = 1; a <= alphabet; ++a) out.push_back(out[i] + Word{a});
        }
        first = last;
    }
    return out;
}

inline std::string show(const Word& w) {
    if (w.empty()) return "e";
    std::string s;
    for (int a : w.letters()) {
        if (!s.empty()) s += '.';
        s += std::to_string(a);
    }
    return s;
}

inline std::string show(const Stroll& f) {
    std::string s;
    for (int p : f.course()) {
        if (!s.empty()) s += ',';
        s += std::to_string(p);
    }
    return "[" + s + "]";
}

inline Word random_word(std::mt19937_64& rng, int max_alphabet, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> alpha_dist(1, max_alphabet);
    int len = len_dist(rng);
    int alphabet = alpha_dist(rng);
    std::uniform_int_distribution<int> letter(1, alphabet);
    std::vector<int> letters(static_cast<std::size_t>(len));
    for (int& a : letters) a = letter(rng);
    return Word(std::move(letters));
}

} // namespace detail

// Membership in [(e+3+23)(123)*(e+1+12)] + [(e+2+32)(132)*(e+1+13)], the
// regular-expression description of the primitive words over {1,2,3}.
inline bool ternary_primitive_regex(const Word& w) {
    auto matches = [&](const std::vector<std::vector<int>>& prefixes, const std::vector<int>& cycle,
                       const std::vector<std::vector<int>>& suffixes) {
        const auto& v = w.letters();
        for (const auto& pre : prefixes) {
            for (const auto& suf : suffixes) {
                if (pre.size() + suf.size() > v.size()) continue;
                if (!std::equal(pre.begin(), pre.end(), v.begin())) continue;
                if (!std::equal(suf.rbegin(), suf.rend(), v.rbegin())) continue;
                std::size_t mid_len = v.size() - pre.size() - suf.size();
                if (mid_len % cycle.size() != 0) continue;
                bool ok = true;
                for (std::size_t i = 0; i < mid_len && ok; ++i)
                    ok = v[pre.size() + i] == cycle[i % cycle.size()];
                if (ok) return true;
            }
        }
        return false;
    };
    return matches({{}, {3}, {2, 3}}, {1, 2, 3}, {{}, {1}, {1, 2}}) ||
           matches({{}, {2}, {3, 2}}, {1, 3, 2}, {{}, {1}, {1, 3}});
}

// Exactly five primitive words exist over the binary alphabet.
inline SuiteReport verify_binary_alphabet(int max_len = 8) {
    detail::Stopwatch clock;
    SuiteReport report;
    report.name = "binary-alphabet";
    std::vector<Word> primitive;
    for (const Word& w : detail::words_up_to(2, max_len)) {
        ++report.cases_checked;
        if (is_primitive(w)) primitive.push_back(w);
    }
    std::vector<Word> expected{Word{}, Word{1}, Word{2}, Word{1, 2}, Word{2, 1}};
    std::sort(expected.begin(), expected.end());
    std::vector<Word> found = primitive;
    std::sort(found.begin(), found.end());
    if (found != expected) report.fail("primitive set differs from {e,1,2,12,21}");
    std::string listing = std::to_string(primitive.size()) + " primitive words found:";
    for (const Word& w : primitive) listing += " " + detail::show(w);
    report.details.push_back(listing);
    report.millis = clock.millis();
    return report;
}

// is_primitive agrees with the regular-expression characterization over
// {1,2,3}.
inline SuiteReport verify_regex(int max_len = 10) {
    detail::Stopwatch clock;
    SuiteReport report;
    report.name = "regex";
    for (const Word& w : detail::words_up_to(3, max_len)) {
        if (w.empty()) continue;
        ++report.cases_checked;
        if (is_primitive(w) != ternary_primitive_regex(w))
            report.fail("mismatch on " + detail::show(w));
    }
    report.millis = clock.millis();
    return report;
}

// The reduction system agrees with the exhaustive generator search, and the
// primitive generator sets have the shape the uniqueness theorem promises:
// {u} for uniliteral words, {u, reverse(u)} with u != reverse(u) otherwise.
inline SuiteReport verify_lemma_oracle(int max_len = 7,
                                       std::size_t budget = kDefaultEnumerationBudget) {
    detail::Stopwatch clock;
    SuiteReport report;
    report.name = "lemma-oracle";
    GeneratorSearchOracle oracle(budget);
    const std::vector<int> alphabet{1, 2, 3};
    for (const Word& w : detail::words_up_to(3, max_len)) {
        ++report.cases_checked;
        GeneratorSearchResult found = oracle.search(w, alphabet);
        bool bf_primitive = oracle.primitive_by_search(w);
        if (bf_primitive != is_primitive(w)) {
            report.fail("primitivity mismatch on " + detail::show(w));
            continue;
        }
        std::vector<Word> bf_prim = found.primitive_generators();
        std::sort(bf_prim.begin(), bf_prim.end());

        GeneratorCertificate cert = primitive_generator(w);
        std::vector<Word> expected{cert.generator};
        if (reverse(cert.generator) != cert.generator) expected.push_back(reverse(cert.generator));
        std::sort(expected.begin(), expected.end());
        if (bf_prim != expected) {
            report.fail("primitive generator set mismatch on " + detail::show(w));
            continue;
        }
        bool uniliteral = cert.generator.size() <= 1;
        std::size_t promised = uniliteral ? 1 : 2;
        if (bf_prim.size() != promised)
            report.fail("generator count mismatch on " + detail::show(w));
    }
    report.millis = clock.millis();
    return report;
}

// Any sequence of pattern collapses reaches the same canonical generator.
inline SuiteReport verify_confluence(int words = 1000, int max_len = 12, int max_alphabet = 4,
                                     int orders = 20, std::uint64_t seed = 20240913) {
    detail::Stopwatch clock;
    SuiteReport report;
    report.name = "confluence";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < words; ++i) {
        Word w = detail::random_word(rng, max_alphabet, max_len);
        Word canonical = primitive_generator(w).generator;
        for (int trial = 0; trial < orders; ++trial) {
            ++report.cases_checked;
            Word current = w;
            while (true) {
                std::vector<ReductionStep> options = all_reductions(current);
                if (options.empty()) break;
                std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
                current = apply_reduction(current, options[pick(rng)]);
            }
            if (canonical_orientation(current) != canonical) {
                report.fail("non-confluent reduction on " + detail::show(w));
                break;
            }
        }
    }
    report.millis = clock.millis();
    return report;
}

// Certificates replay: the recorded walk maps the reduced orientation back
// onto the input, on both orientations of the certificate.
inline SuiteReport verify_certificates(int words = 1000, int max_len = 12, int max_alphabet = 4,
                                       std::uint64_t seed = 77001) {
    detail::Stopwatch clock;
    SuiteReport report;
    report.name = "certificates";
    std::mt19937_64 rng(seed);
    for (int i = 0; i < words; ++i) {
        ++report.cases_checked;
        Word w = detail::random_word(rng, max_alphabet, max_len);
        GeneratorCertificate cert = primitive_generator(w);
        if (!is_primitive(cert.generator)) {
            report.fail("generator not primitive for " + detail::show(w));
            continue;
        }
        if (apply(cert.oriented_generator(), cert.walk) != w)
            report.fail("certificate replay failed for " + detail::show(w));
        if (apply(cert.generator, cert.walk_on_canonical()) != w)
            report.fail("canonical replay failed for " + detail::show(w));
    }
    report.millis = clock.millis();
    return report;
}

namespace detail {

inline std::vector<Word> primitive_words_up_to(int alphabet, int max_len) {
    std::vector<Word> out;
    for (const Word& w : words_up_to(alphabet, max_len))
        if (is_primitive(w)) out.push_back(w);
    return out;
}

} // namespace detail

// A word is perfect exactly when distinct walks always yield distinct
// words; swept over every walk length up to |u|+extra.
inline SuiteReport verify_theorem2(int max_len = 5, int extra = 2,
                                   std::size_t budget = kDefaultEnumerationBudget) {
    detail::Stopwatch clock;
    SuiteReport report;
    report.name = "theorem2";
    for (const Word& u : detail::primitive_words_up_to(3, max_len)) {
        ++report.cases_checked;
        int n = u.size();
        bool injective = true;
        for (int m = n; m <= n + extra && injective; ++m) {
            std::set<Word> images;
            for (const Walk& f : all_walks(n, m, budget)) {
                if (!images.insert(apply(u, f)).second) {
                    injective = false;
                    break;
                }
            }
        }
        if (injective != is_perfect(u))
            report.fail("injectivity mismatch on " + detail::show(u));
    }
    report.millis = clock.millis();
    return report;
}

// u^f = u^g exactly when f and g are pointwise linked by the defect
// closure.
inline SuiteReport verify_theorem3(int max_len = 5, int extra = 2,
                                   std::size_t budget = kDefaultEnumerationBudget) {
    detail::Stopwatch clock;
    SuiteReport report;
    report.name = "theorem3";
    for (const Word& u : detail::primitive_words_up_to(3, max_len)) {
        int n = u.size();
        DefectClasses classes = defect_classes(u);
        for (int m = n; m <= n + extra; ++m) {
            std::vector<Walk> walks = all_walks(n, m, budget);
            std::vector<Word> images;
            images.reserve(walks.size());
            for (const Walk& f : walks) images.push_back(apply(u, f));
            for (std::size_t i = 0; i < walks.size(); ++i) {
                for (std::size_t j = 0; j < walks.size(); ++j) {
                    ++report.cases_checked;
                    bool same_image = images[i] == images[j];
                    bool linked = true;
                    for (int t = 1; t <= m && linked; ++t)
                        linked = classes.same_class(walks[i].at(t), walks[j].at(t));
                    if (same_image != linked) {
                        report.fail("agreement mismatch on " + detail::show(u) + " " +
                                    detail::show(walks[i]) + " " + detail::show(walks[j]));
                    }
                }
            }
        }
    }
    report.millis = clock.millis();
    return report;
}

// Every agreeing pair decomposes into a hesitation/vacillation/reflection
// series that replays from a monotone base to exactly that pair.
inline SuiteReport verify_series_decomposition(int max_len = 5, int extra = 2,
                                               std::size_t budget = kDefaultEnumerationBudget) {
    detail::Stopwatch clock;
    SuiteReport report;
    report.name = "series-decomposition";
    for (const Word& u : detail::primitive_words_up_to(3, max_len)) {
        int n = u.size();
        for (int m = n; m <= n + extra; ++m) {
            std::vector<Walk> walks = all_walks(n, m, budget);
            std::vector<Word> images;
            images.reserve(walks.size());
            for (const Walk& f : walks) images.push_back(apply(u, f));
            for (std::size_t i = 0; i < walks.size(); ++i) {
                for (std::size_t j = 0; j < walks.size(); ++j) {
                    if (images[i] != images[j]) continue;
                    ++report.cases_checked;
                    try {
                        WalkPairSeries series = decompose_agreeing_walks(u, walks[i], walks[j]);
                        auto [rf, rg] = replay_edits(u, series.base, series.edits);
                        if (!(rf == walks[i] && rg == walks[j]))
                            report.fail("replay mismatch on " + detail::show(u));
                    } catch (const Error& e) {
                        report.fail("decompose failed on " + detail::show(u) + " " +
                                    detail::show(walks[i]) + " " + detail::show(walks[j]) + ": " +
                                    e.what());
                    }
                }
            }
        }
    }
    report.millis = clock.millis();
    return report;
}

// gamma_k generates the whole tail of the k-bonacci sequence, the family
// lengths match their closed forms, and the morphic and recursive
// definitions agree.
inline SuiteReport verify_theorem4_suite(std::vector<int> ks = {2, 3, 4}, int n_extra = 5,
                                         int gamma_primitive_max_k = 10, int length_max_k = 16,
                                         int morphic_max_k = 5, int morphic_n_extra = 6) {
    detail::Stopwatch clock;
    SuiteReport report;
    report.name = "theorem4";
    for (int k : ks) {
        for (int n = k; n <= k + n_extra; ++n) {
            ++report.cases_checked;
            if (!verify_theorem4(k, n))
                report.fail("generator mismatch at k=" + std::to_string(k) +
                            " n=" + std::to_string(n));
        }
    }
    for (int k = 2; k <= gamma_primitive_max_k; ++k) {
        ++report.cases_checked;
        if (!is_primitive(gamma(k)))
            report.fail("gamma not primitive at k=" + std::to_string(k));
    }
    for (int k = 1; k <= length_max_k; ++k) {
        ++report.cases_checked;
        if (beta(k).size() != (1 << (k - 1)))
            report.fail("beta length mismatch at k=" + std::to_string(k));
        if (k >= 2 && gamma(k).size() != (1 << (k - 2)) + 1)
            report.fail("gamma length mismatch at k=" + std::to_string(k));
    }
    for (int k = 2; k <= morphic_max_k; ++k) {
        for (int n = 1; n <= k + morphic_n_extra; ++n) {
            ++report.cases_checked;
            if (alpha(k, n) != alpha_recursive(k, n))
                report.fail("morphic/recursive mismatch at k=" + std::to_string(k) +
                            " n=" + std::to_string(n));
        }
    }
    report.millis = clock.millis();
    return report;
}

// Every position of gamma_k holding the letter 1 starts some generating
// walk for every tail term.
inline SuiteReport verify_claim7(std::vector<int> ks = {2, 3}, int n_extra = 3) {
    detail::Stopwatch clock;
    SuiteReport report;
    report.name = "claim7-witnesses";
    for (int k : ks) {
        Word g = gamma(k);
        for (int n = k; n <= k + n_extra; ++n) {
            Word target = alpha(k, n);
            for (int h = 1; h <= g.size(); ++h) {
                if (g.at(h) != 1) continue;
                ++report.cases_checked;
                auto walk = find_generating_walk_from(k, n, h);
                if (!walk) {
                    report.fail("no walk at k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                " h=" + std::to_string(h));
                    continue;
                }
                if (walk->at(1) != h || apply(g, *walk) != target)
                    report.fail("bad witness at k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                " h=" + std::to_string(h));
            }
        }
    }
    report.millis = clock.millis();
    return report;
}

} // namespace wordwalk

#endif
