#ifndef WORDWALK_WORD_HPP
#define WORDWALK_WORD_HPP

#include <algorithm>
#include <cassert>
#include <compare>
#include <initializer_list>
#include <numeric>
#include <utility>
#include <vector>

#include "wordwalk/error.hpp"

namespace wordwalk {

// A finite word over a non-negative integer alphabet. Positions are 1-based
// throughout the library, matching the standard convention in combinatorics
// on words; position 0 and position n+1 are out of range.
class Word {
public:
    Word() = default;

    explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {
        for (int a : letters_) {
            if (a < 0) raise(Error::Code::invalid_input, "letter codes must be non-negative");
        }
    }

    Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

    int size() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    // 1-based letter access.
    int at(int i) const {
        assert(i >= 1 && i <= size());
        return letters_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<int>& letters() const { return letters_; }

    // The factor u[i..j]; empty when j < i.
    Word factor(int i, int j) const {
        assert(i >= 1 && j <= size());
        if (j < i) return Word{};
        return Word(std::vector<int>(letters_.begin() + (i - 1), letters_.begin() + j));
    }

    Word operator+(const Word& rhs) const {
        std::vector<int> out = letters_;
        out.insert(out.end(), rhs.letters_.begin(), rhs.letters_.end());
        return Word(std::move(out));
    }

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<int> letters_;
};

inline Word reverse(const Word& u) {
    std::vector<int> out(u.letters().rbegin(), u.letters().rend());
    return Word(std::move(out));
}

// The empty word and single letters count as (trivial) palindromes.
inline bool is_palindrome(const Word& u) {
    const auto& v = u.letters();
    return std::equal(v.begin(), v.begin() + u.size() / 2, v.rbegin());
}

inline bool is_palindrome_factor(const Word& u, int i, int j) {
    while (i < j) {
        if (u.at(i) != u.at(j)) return false;
        ++i;
        --j;
    }
    return true;
}

// pal[i][j] (1-based, i <= j) marks palindromic factors; row 0 unused.
inline std::vector<std::vector<char>> palindrome_table(const Word& u) {
    int n = u.size();
    std::vector<std::vector<char>> pal(static_cast<std::size_t>(n) + 1,
                                       std::vector<char>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 1; i <= n; ++i) pal[i][i] = 1;
    for (int len = 2; len <= n; ++len) {
        for (int i = 1; i + len - 1 <= n; ++i) {
            int j = i + len - 1;
            pal[i][j] = u.at(i) == u.at(j) && (len == 2 || pal[i + 1][j - 1]);
        }
    }
    return pal;
}

// The defects of a word: all position pairs <i,j>, i < j, whose factor
// u[i..j] is a non-trivial palindrome. Pairs are kept sorted; the symmetric
// orientation is supplied by the equivalence closure, never stored.
struct DefectSet {
    int length = 0;
    std::vector<std::pair<int, int>> pairs;

    bool contains(int i, int j) const {
        return std::binary_search(pairs.begin(), pairs.end(), std::make_pair(i, j));
    }

    bool operator==(const DefectSet&) const = default;
};

// Center expansion, O(n^2): every palindromic factor shows up as an
// expansion step around its (odd or even) center.
inline DefectSet defects(const Word& u) {
    int n = u.size();
    DefectSet out;
    out.length = n;
    for (int c = 1; c <= n; ++c) {
        for (int r = 1; c - r >= 1 && c + r <= n; ++r) {
            if (u.at(c - r) != u.at(c + r)) break;
            out.pairs.emplace_back(c - r, c + r);
        }
    }
    for (int c = 1; c + 1 <= n; ++c) {
        for (int r = 1; c - r + 1 >= 1 && c + r <= n; ++r) {
            if (u.at(c - r + 1) != u.at(c + r)) break;
            out.pairs.emplace_back(c - r + 1, c + r);
        }
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

// Disjoint-set partition of [1,n]; the equivalence closure of a defect set.
class DefectClasses {
public:
    explicit DefectClasses(int n) : parent_(static_cast<std::size_t>(n) + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int length() const { return static_cast<int>(parent_.size()) - 1; }

    void unite(int i, int j) {
        int a = representative(i), b = representative(j);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

    // Smallest member of the class, with path compression.
    int representative(int i) const {
        assert(i >= 1 && i <= length());
        int r = i;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[i] != r) i = std::exchange(parent_[i], r);
        return r;
    }

    bool same_class(int i, int j) const { return representative(i) == representative(j); }

    // Classes ordered by smallest member, each sorted ascending.
    std::vector<std::vector<int>> classes() const {
        int n = length();
        std::vector<std::vector<int>> by_root(static_cast<std::size_t>(n) + 1);
        for (int i = 1; i <= n; ++i) by_root[representative(i)].push_back(i);
        std::vector<std::vector<int>> out;
        for (auto& c : by_root)
            if (!c.empty()) out.push_back(std::move(c));
        return out;
    }

private:
    mutable std::vector<int> parent_;
};

inline DefectClasses defect_classes(const Word& u) {
    DefectClasses dsu(u.size());
    for (auto [i, j] : defects(u).pairs) dsu.unite(i, j);
    return dsu;
}

} // namespace wordwalk

#endif
