#ifndef WORDWALK_ORACLE_HPP
#define WORDWALK_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wordwalk/error.hpp"
#include "wordwalk/walk.hpp"
#include "wordwalk/word.hpp"

namespace wordwalk {

inline constexpr std::size_t kDefaultEnumerationBudget = 50'000'000;

// Every walk [1,m] -> [1,n], in lexicographic course order, by exhaustive
// unit-step enumeration. The budget caps visited search nodes.
inline std::vector<Walk> all_walks(int n, int m, std::size_t budget = kDefaultEnumerationBudget) {
    std::vector<Walk> out;
    if (n == 0 || m == 0) {
        if (n == 0 && m == 0) out.push_back(Walk());
        return out;
    }
    if (m < n) return out;
    std::size_t nodes = 0;
    std::vector<int> course;
    course.reserve(static_cast<std::size_t>(m));
    auto dfs = [&](auto&& self, int p, int lo, int hi) -> void {
        if (++nodes > budget)
            raise(Error::Code::budget_exceeded, "all_walks: enumeration budget exceeded");
        course.push_back(p);
        int t = static_cast<int>(course.size());
        // not enough steps left to reach the unvisited ends
        if ((lo - 1) + (n - hi) <= m - t) {
            if (t == m) {
                if (lo == 1 && hi == n) out.emplace_back(course, n);
            } else {
                for (int q = std::max(1, p - 1); q <= std::min(n, p + 1); ++q)
                    self(self, q, std::min(lo, q), std::max(hi, q));
            }
        }
        course.pop_back();
    };
    for (int p = 1; p <= n; ++p) dfs(dfs, p, p, p);
    return out;
}

// Deterministic stream of every ordered pair of walks [1,m] -> [1,n].
class WalkPairStream {
public:
    WalkPairStream(int n, int m, std::size_t budget = kDefaultEnumerationBudget)
        : walks_(all_walks(n, m, budget)) {
        std::size_t count = walks_.size() * walks_.size();
        if (count > budget)
            raise(Error::Code::budget_exceeded, "enumerate_walk_pairs: too many pairs");
    }

    const std::vector<Walk>& walks() const { return walks_; }

    std::optional<std::pair<Walk, Walk>> next() {
        if (i_ >= walks_.size()) return std::nullopt;
        auto pair = std::make_pair(walks_[i_], walks_[j_]);
        if (++j_ == walks_.size()) {
            j_ = 0;
            ++i_;
        }
        return pair;
    }

private:
    std::vector<Walk> walks_;
    std::size_t i_ = 0, j_ = 0;
};

inline WalkPairStream enumerate_walk_pairs(int n, int m,
                                           std::size_t budget = kDefaultEnumerationBudget) {
    return WalkPairStream(n, m, budget);
}

struct GeneratorSearchEntry {
    Word word;
    bool minimal_length = false;
    bool primitive = false;
};

struct GeneratorSearchResult {
    std::vector<GeneratorSearchEntry> generators; // sorted by (length, letters)

    std::vector<Word> primitive_generators() const {
        std::vector<Word> out;
        for (const auto& e : generators)
            if (e.primitive) out.push_back(e.word);
        return out;
    }
    std::vector<Word> minimal_generators() const {
        std::vector<Word> out;
        for (const auto& e : generators)
            if (e.minimal_length) out.push_back(e.word);
        return out;
    }
};

// Exhaustive generator search, independent of the reduction system: a
// generator of w of length n is exactly a consistent letter assignment
// along some walk [1,|w|] -> [1,n]. Primitivity of found generators is
// settled by recursing on strictly shorter searches. Results are memoized
// per oracle so sweeps stay quick.
class GeneratorSearchOracle {
public:
    explicit GeneratorSearchOracle(std::size_t budget = kDefaultEnumerationBudget)
        : budget_(budget) {}

    GeneratorSearchResult search(const Word& w, const std::vector<int>& alphabet) {
        const std::vector<Word>& gens = generators_of(w);
        GeneratorSearchResult out;
        int min_len = gens.empty() ? 0 : gens.front().size();
        for (const Word& v : gens) {
            bool in_alphabet = std::all_of(v.letters().begin(), v.letters().end(), [&](int a) {
                return std::find(alphabet.begin(), alphabet.end(), a) != alphabet.end();
            });
            if (!in_alphabet) continue;
            GeneratorSearchEntry entry;
            entry.word = v;
            entry.minimal_length = v.size() == min_len;
            entry.primitive = !has_shorter_generator(v);
            out.generators.push_back(std::move(entry));
        }
        return out;
    }

    bool primitive_by_search(const Word& w) { return !has_shorter_generator(w); }

private:
    // All generators of w (any alphabet), sorted by (length, letters).
    const std::vector<Word>& generators_of(const Word& w) {
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;

        std::vector<Word> gens;
        int m = w.size();
        if (m == 0) {
            gens.push_back(Word{});
        } else {
            for (int n = 1; n <= m; ++n) {
                for (const Walk& f : walks(n, m)) {
                    std::vector<int> letters(static_cast<std::size_t>(n), -1);
                    bool ok = true;
                    for (int i = 1; i <= m && ok; ++i) {
                        int& slot = letters[static_cast<std::size_t>(f.at(i) - 1)];
                        if (slot == -1)
                            slot = w.at(i);
                        else
                            ok = slot == w.at(i);
                    }
                    if (ok) gens.emplace_back(std::move(letters));
                }
            }
            std::sort(gens.begin(), gens.end(), [](const Word& a, const Word& b) {
                return std::pair(a.size(), a.letters()) < std::pair(b.size(), b.letters());
            });
            gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        }
        return memo_.emplace(w, std::move(gens)).first->second;
    }

    bool has_shorter_generator(const Word& w) {
        const auto& gens = generators_of(w);
        return !gens.empty() && gens.front().size() < w.size();
    }

    const std::vector<Walk>& walks(int n, int m) {
        auto key = std::make_pair(n, m);
        auto it = walk_cache_.find(key);
        if (it == walk_cache_.end())
            it = walk_cache_.emplace(key, all_walks(n, m, budget_)).first;
        return it->second;
    }

    std::size_t budget_;
    std::map<Word, std::vector<Word>> memo_;
    std::map<std::pair<int, int>, std::vector<Walk>> walk_cache_;
};

inline GeneratorSearchResult brute_force_generator_search(
    const Word& w, const std::vector<int>& alphabet,
    std::size_t budget = kDefaultEnumerationBudget) {
    GeneratorSearchOracle oracle(budget);
    return oracle.search(w, alphabet);
}

} // namespace wordwalk

#endif
