#ifndef WORDWALK_GENERATION_HPP
#define WORDWALK_GENERATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "wordwalk/error.hpp"
#include "wordwalk/walk.hpp"
#include "wordwalk/word.hpp"

namespace wordwalk {

namespace detail {

// Dynamic program over states (t, p, lo, hi): after emitting w[1..t] the
// walk stands at p having visited exactly the interval [lo,hi]. Unit steps
// make the visited set of any prefix an interval, so this is lossless.
// feasible[t] marks states from which w[t+1..m] can still be completed with
// full coverage (and the optional end constraint); computed backwards.
class GenerationDp {
public:
    GenerationDp(const Word& u, const Word& w, std::optional<int> start, std::optional<int> end)
        : u_(u), w_(w), n_(u.size()), m_(w.size()), start_(start), end_(end) {
        feasible_.assign(static_cast<std::size_t>(m_) + 1,
                         std::vector<char>(static_cast<std::size_t>(n_ * n_ * n_), 0));
        if (m_ == 0 || n_ == 0 || m_ < n_) return;
        // t = m: accept exactly full coverage (and the end pin).
        for (int p = 1; p <= n_; ++p) {
            if (end_ && *end_ != p) continue;
            if (u_.at(p) != w_.at(m_)) continue;
            // state is reachable-agnostic here; reachability is enforced by
            // the forward walk during reconstruction
            feasible_[m_][idx(p, 1, n_)] = 1;
        }
        for (int t = m_ - 1; t >= 1; --t) {
            for (int p = 1; p <= n_; ++p) {
                if (u_.at(p) != w_.at(t)) continue;
                for (int lo = 1; lo <= p; ++lo) {
                    for (int hi = p; hi <= n_; ++hi) {
                        char ok = 0;
                        for (int q = p - 1; q <= p + 1 && !ok; ++q) {
                            if (q < 1 || q > n_) continue;
                            if (u_.at(q) != w_.at(t + 1)) continue;
                            ok = feasible_[t + 1][idx(q, std::min(lo, q), std::max(hi, q))];
                        }
                        feasible_[t][idx(p, lo, hi)] = ok;
                    }
                }
            }
        }
    }

    bool decides_true() const {
        if (m_ == 0 || n_ == 0) return m_ == 0 && n_ == 0 && !start_ && !end_;
        if (m_ < n_) return false;
        for (int p = 1; p <= n_; ++p) {
            if (start_ && *start_ != p) continue;
            if (u_.at(p) == w_.at(1) && feasible_[1][idx(p, p, p)]) return true;
        }
        return false;
    }

    // Smallest-next-position reconstruction of one witness walk.
    std::optional<Walk> reconstruct() const {
        if (m_ == 0 || n_ == 0) {
            if (m_ == 0 && n_ == 0 && !start_ && !end_) return Walk();
            return std::nullopt;
        }
        if (!decides_true()) return std::nullopt;
        std::vector<int> course;
        course.reserve(static_cast<std::size_t>(m_));
        int p = 0, lo = 0, hi = 0;
        for (int q = 1; q <= n_; ++q) {
            if (start_ && *start_ != q) continue;
            if (u_.at(q) == w_.at(1) && feasible_[1][idx(q, q, q)]) {
                p = lo = hi = q;
                break;
            }
        }
        course.push_back(p);
        for (int t = 1; t < m_; ++t) {
            for (int q = p - 1; q <= p + 1; ++q) {
                if (q < 1 || q > n_ || u_.at(q) != w_.at(t + 1)) continue;
                if (feasible_[t + 1][idx(q, std::min(lo, q), std::max(hi, q))]) {
                    p = q;
                    lo = std::min(lo, q);
                    hi = std::max(hi, q);
                    break;
                }
            }
            course.push_back(p);
        }
        return Walk(std::move(course), n_);
    }

    // All witness walks in lexicographic course order, cut off at `limit`.
    std::pair<std::vector<Walk>, bool> enumerate(std::size_t limit) const {
        std::vector<Walk> out;
        bool truncated = false;
        if (m_ == 0 || n_ == 0) {
            if (m_ == 0 && n_ == 0 && !start_ && !end_) {
                if (limit == 0)
                    truncated = true;
                else
                    out.push_back(Walk());
            }
            return {out, truncated};
        }
        std::vector<int> course;
        course.reserve(static_cast<std::size_t>(m_));
        auto dfs = [&](auto&& self, int t, int p, int lo, int hi) -> bool {
            if (!feasible_[t][idx(p, lo, hi)]) return true;
            course.push_back(p);
            if (t == m_) {
                bool keep = out.size() < limit;
                if (keep)
                    out.emplace_back(course, n_);
                else
                    truncated = true;
                course.pop_back();
                return keep;
            }
            for (int q = p - 1; q <= p + 1; ++q) {
                if (q < 1 || q > n_ || u_.at(q) != w_.at(t + 1)) continue;
                if (!self(self, t + 1, q, std::min(lo, q), std::max(hi, q))) {
                    course.pop_back();
                    return false;
                }
            }
            course.pop_back();
            return true;
        };
        for (int q = 1; q <= n_ && !truncated; ++q) {
            if (start_ && *start_ != q) continue;
            if (u_.at(q) != w_.at(1)) continue;
            dfs(dfs, 1, q, q, q);
        }
        return {out, truncated};
    }

private:
    std::size_t idx(int p, int lo, int hi) const {
        return static_cast<std::size_t>(((p - 1) * n_ + (lo - 1)) * n_ + (hi - 1));
    }

    const Word& u_;
    const Word& w_;
    int n_, m_;
    std::optional<int> start_, end_;
    std::vector<std::vector<char>> feasible_;
};

} // namespace detail

// Does some walk f on u satisfy u^f = w? The empty word generates exactly
// itself.
inline bool generates(const Word& u, const Word& w) {
    return detail::GenerationDp(u, w, std::nullopt, std::nullopt).decides_true();
}

// One witness walk, or none. Optional pins: f(1) = start, f(m) = end.
// Reconstruction prefers the smallest next position, so witnesses are
// reproducible.
inline std::optional<Walk> find_walk(const Word& u, const Word& w,
                                     std::optional<int> start = std::nullopt,
                                     std::optional<int> end = std::nullopt) {
    if (start && (*start < 1 || *start > u.size()))
        raise(Error::Code::invalid_input, "find_walk: start position out of range");
    if (end && (*end < 1 || *end > u.size()))
        raise(Error::Code::invalid_input, "find_walk: end position out of range");
    return detail::GenerationDp(u, w, start, end).reconstruct();
}

struct WalkEnumeration {
    std::vector<Walk> walks; // lexicographic by course
    bool truncated = false;
};

inline WalkEnumeration enumerate_walks(const Word& u, const Word& w, std::size_t limit) {
    detail::GenerationDp dp(u, w, std::nullopt, std::nullopt);
    auto [walks, truncated] = dp.enumerate(limit);
    return {std::move(walks), truncated};
}

} // namespace wordwalk

#endif
