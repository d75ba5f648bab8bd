#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wordwalk/format.hpp"
#include "wordwalk/reduction.hpp"
#include "wordwalk/verify.hpp"

using namespace wordwalk;

namespace {

Word W(const std::string& s) { return parse_word(s, WordFormat::chars); }

} // namespace

TEST_CASE("reduce_once picks the deterministic first pattern") {
    SECTION("doubled letter") {
        auto r = reduce_once(W("baac"));
        REQUIRE(r.has_value());
        REQUIRE(r->first == W("bac"));
        REQUIRE(r->second.kind == ReductionKind::double_letter);
        REQUIRE(r->second.position == 2);
    }
    SECTION("palindromic prefix") {
        auto r = reduce_once(W("babcd"));
        REQUIRE(r.has_value());
        REQUIRE(r->first == W("abcd"));
        REQUIRE(r->second.kind == ReductionKind::prefix_palindrome);
        REQUIRE(r->second.radius == 1);
    }
    SECTION("internal overlap") {
        auto r = reduce_once(W("abcbcd"));
        REQUIRE(r.has_value());
        REQUIRE(r->first == W("abcd"));
        REQUIRE(r->second.kind == ReductionKind::internal_overlap);
        REQUIRE(r->second.position == 2);
        REQUIRE(r->second.radius == 1);
    }
    SECTION("palindromic suffix") {
        auto r = reduce_once(W("dcbab"));
        REQUIRE(r.has_value());
        REQUIRE(r->first == W("dcba"));
        REQUIRE(r->second.kind == ReductionKind::suffix_palindrome);
    }
    REQUIRE_FALSE(reduce_once(W("abcbda")).has_value());
    REQUIRE_FALSE(reduce_once(Word{}).has_value());
}

TEST_CASE("every reduction step carries a sound witness") {
    for (const Word& w : detail::words_up_to(3, 8)) {
        for (const ReductionStep& step : all_reductions(w)) {
            Word reduced = apply_reduction(w, step);
            REQUIRE(reduced.size() < w.size());
            REQUIRE(apply(reduced, step.witness) == w);
        }
    }
}

TEST_CASE("is_primitive") {
    REQUIRE(is_primitive(W("abcbda")));
    REQUIRE_FALSE(is_primitive(W("babcd")));
    REQUIRE_FALSE(is_primitive(W("abcbcd")));
    REQUIRE(is_primitive(Word{}));
    REQUIRE(is_primitive(W("a")));

    SECTION("exactly five primitive words over the binary alphabet") {
        std::vector<Word> primitive;
        for (const Word& w : detail::words_up_to(2, 8))
            if (is_primitive(w)) primitive.push_back(w);
        REQUIRE(primitive ==
                std::vector<Word>{Word{}, Word{1}, Word{2}, Word{1, 2}, Word{2, 1}});
    }
}

TEST_CASE("is_perfect") {
    REQUIRE_FALSE(is_perfect(W("abcbd")));
    REQUIRE(is_perfect(W("abc")));
    REQUIRE_FALSE(is_perfect(W("aab")));
    REQUIRE(is_perfect(Word{}));

    SECTION("perfection is exactly palindrome-freeness") {
        for (const Word& u : detail::words_up_to(3, 7)) {
            REQUIRE(is_perfect(u) == defects(u).pairs.empty());
        }
    }
}

TEST_CASE("primitive_generator") {
    REQUIRE(primitive_generator(W("abcbcbd")).generator == W("abcbd"));
    REQUIRE(primitive_generator(W("abcbaaadefedadefghgf")).generator == W("cbadefgh"));
    REQUIRE(primitive_generator(W("1213121")).generator == W("213"));
    REQUIRE(primitive_generator(W("aaa")).generator == W("a"));
    REQUIRE(primitive_generator(Word{}).generator == Word{});

    SECTION("certificate replay and canonical orientation") {
        GeneratorCertificate cert = primitive_generator(W("abcbaaadefedadefghgf"));
        REQUIRE_FALSE(cert.reversed); // cbadefgh < hgfedabc
        REQUIRE(apply(cert.oriented_generator(), cert.walk) == W("abcbaaadefedadefghgf"));
        REQUIRE(apply(cert.generator, cert.walk_on_canonical()) == W("abcbaaadefedadefghgf"));
        REQUIRE(cert.generator <= reverse(cert.generator));
    }

    SECTION("a word reducing to the reversed orientation still certifies") {
        // reduces to a fixpoint whose reversal is lexicographically smaller
        Word w = W("cbaab");
        GeneratorCertificate cert = primitive_generator(w);
        REQUIRE(is_primitive(cert.generator));
        REQUIRE(apply(cert.oriented_generator(), cert.walk) == w);
        REQUIRE(apply(cert.generator, cert.walk_on_canonical()) == w);
    }

    SECTION("trace records each collapse") {
        GeneratorCertificate cert = primitive_generator(W("abcbcbd"));
        REQUIRE(cert.trace.size() == 1);
        REQUIRE(cert.trace[0].kind == ReductionKind::internal_overlap);
    }
}

TEST_CASE("random reduction orders are confluent") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 300; ++i) {
        Word w = detail::random_word(rng, 4, 12);
        Word canonical = primitive_generator(w).generator;
        for (int trial = 0; trial < 5; ++trial) {
            Word current = w;
            while (true) {
                auto options = all_reductions(current);
                if (options.empty()) break;
                std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
                current = apply_reduction(current, options[pick(rng)]);
            }
            REQUIRE(canonical_orientation(current) == canonical);
        }
    }
}
