#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "gsslat/invariants.hpp"
#include "gsslat/sequence.hpp"
#include "oracles.hpp"

using namespace gsslat;

namespace {
SequencePart S(int k) { return {PartKind::Singular, k}; }
SequencePart R(int m) { return {PartKind::Regular, m}; }
SigmaWord W(std::vector<SequencePart> parts) { return SigmaWord(std::move(parts)); }
}  // namespace

TEST_CASE("parse block notation") {
    const SigmaWord w = SigmaWord::parse("s3 r2 s1");
    CHECK(w.parts() == std::vector<SequencePart>{S(3), R(2), S(1)});
    CHECK(w.str() == "s3 r2 s1");
    CHECK(SigmaWord::parse("s3,r2, s1") == w);
    CHECK(SigmaWord::parse(" S3\tR2 S1 ") == w);
    CHECK(SigmaWord::parse(w.str()) == w);  // printer round-trips
}

TEST_CASE("parse and validation errors") {
    CHECK_THROWS_AS(SigmaWord::parse("r1 r1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(SigmaWord::parse("s0"), "block length must be >= 1",
                         std::invalid_argument);
    CHECK_THROWS_AS(SigmaWord::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(SigmaWord::parse("x3"), std::invalid_argument);
    CHECK_THROWS_AS(SigmaWord::parse("s"), std::invalid_argument);
    CHECK_THROWS_AS(SigmaWord::parse("s3 r"), std::invalid_argument);
    CHECK_THROWS_AS(SigmaWord::parse("r2 s1 r1"), std::invalid_argument);  // cyclic seam
    // Position is reported for syntax errors.
    try {
        SigmaWord::parse("s3 ?");
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
}

TEST_CASE("expand") {
    CHECK(expand(W({S(3)})) == AWord{5, 2, 2});
    CHECK(expand(W({R(3)})) == AWord{2, 2, 2});
    CHECK(expand(W({S(2), R(1)})) == AWord{4, 2, 2});
    CHECK(expand(W({S(1), R(1), S(2), S(1)})) == AWord{3, 2, 4, 2, 3});
}

TEST_CASE("factor_aword") {
    CHECK(factor_aword(AWord{5, 2, 2}) == W({S(3)}));
    CHECK(factor_aword(AWord{2, 2, 2}) == W({R(3)}));
    CHECK(factor_aword(AWord{4, 2, 2}) == W({S(2), R(1)}));
    // Rotations are accepted; the block partition starts at an entry > 2.
    CHECK(factor_aword(AWord{2, 4}) == W({S(2)}));
    CHECK(factor_aword(AWord{2, 4, 2, 3}) == W({S(2), S(1), R(1)}));
    CHECK(factor_aword(AWord{2, 4, 2, 2, 3}) == W({S(2), R(1), S(1), R(1)}));

    CHECK_THROWS_AS(factor_aword(AWord{4}), std::invalid_argument);
    CHECK_THROWS_AS(factor_aword(AWord{3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(factor_aword(AWord{1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(factor_aword(AWord{}), std::invalid_argument);
    CHECK_THROWS_AS(factor_aword(AWord{5, 2}), std::invalid_argument);
}

TEST_CASE("expand/factor round-trip up to rotation, n <= 12") {
    for (const SigmaWord& w : enumerate_words(12)) {
        const AWord a = expand(w);
        const int n = static_cast<int>(a.size());
        const int step = (n <= 8) ? 1 : 5;  // all rotations for small n, sampled above
        for (int r = 0; r < n; r += step) {
            AWord rot(a.begin() + r, a.end());
            rot.insert(rot.end(), a.begin(), a.begin() + r);
            const SigmaWord back = factor_aword(rot);
            CHECK(back.canonical() == w.canonical());
            CHECK(oracle::are_rotations(expand(back), rot));
        }
    }
}

TEST_CASE("canonical rotation") {
    CHECK(W({R(2), S(3)}).canonical() == W({S(3), R(2)}));
    CHECK(W({S(1), S(2)}).canonical() == W({S(1), S(2)}));
    CHECK(W({S(2), S(1)}).canonical() == W({S(1), S(2)}));
    for (const SigmaWord& w : enumerate_words(8)) {
        CHECK(w.canonical() == w);  // enumerate emits canonical forms
        CHECK(w.canonical().canonical() == w.canonical());
        for (int r = 0; r < w.part_count(); ++r)
            CHECK(w.rotated(r).canonical() == w.canonical());
    }
}

TEST_CASE("concat") {
    CHECK(concat(W({S(2), R(1)}), W({S(1), R(1)})) == W({S(2), R(1), S(1), R(1)}));
    CHECK(concat(W({S(1)}), W({S(1)})) == W({S(1), S(1)}));
    CHECK_THROWS_AS(concat(W({R(2)}), W({R(1)})), std::invalid_argument);
    CHECK_THROWS_AS(concat(W({S(1), R(1)}), W({R(2), S(1)})), std::invalid_argument);
    // Cyclic seam: w2 ends regular, w1 starts regular.
    CHECK_THROWS_AS(concat(W({R(1), S(1)}), W({S(1), R(2)})), std::invalid_argument);
}

TEST_CASE("split_simple") {
    const auto factors = split_simple(W({S(2), R(1), S(1), R(1)}));
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == W({S(1), R(1)}));
    CHECK(factors[1] == W({S(2), R(1)}));

    const auto one = split_simple(W({S(1), S(2), R(3)}));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == W({S(1), S(2), R(3)}));

    CHECK_THROWS_AS(split_simple(W({S(1), S(1)})), std::invalid_argument);

    for (const SigmaWord& w : enumerate_words(9)) {
        if (w.regular_count() == 0) continue;
        const auto fs = split_simple(w);
        CHECK(static_cast<int>(fs.size()) == w.regular_count());
        SigmaWord joined = fs[0];
        for (std::size_t i = 1; i < fs.size(); ++i) joined = concat(joined, fs[i]);
        CHECK(joined.canonical() == w.canonical());
        for (const SigmaWord& f : fs) {
            CHECK(f.regular_count() == 1);
            CHECK(f.parts().back().kind == PartKind::Regular);
        }
    }
}

TEST_CASE("classify") {
    const SurfaceClass enoki = classify(W({R(5)}));
    CHECK(enoki.tag == SurfaceClassTag::Enoki);
    CHECK(enoki.cycles == 1);
    CHECK(enoki.branches == 0);

    const SurfaceClass even = classify(W({S(1), S(2)}));
    CHECK(even.tag == SurfaceClassTag::EvenInoueHirzebruch);
    CHECK(even.cycles == 2);

    const SurfaceClass odd = classify(W({S(3)}));
    CHECK(odd.tag == SurfaceClassTag::OddInoueHirzebruch);
    CHECK(odd.cycles == 1);

    const SurfaceClass inter = classify(W({S(3), R(2)}));
    CHECK(inter.tag == SurfaceClassTag::Intermediate);
    CHECK(inter.cycles == 1);
    CHECK(inter.branches == 1);
}

TEST_CASE("sigma_n") {
    CHECK(sigma_n(W({R(4)})) == 8);
    CHECK(sigma_n(W({S(3)})) == 9);
    CHECK(sigma_n(W({S(2), R(1)})) == 8);  // 2n < 8 < 3n for n = 3
}

TEST_CASE("sigma_n bounds decide the class, n <= 10") {
    for (const SigmaWord& w : enumerate_words(10)) {
        const long long s = sigma_n(w);
        const int n = w.total_length();
        long long singular_total = 0;
        for (int k : w.singular_lengths()) singular_total += k;
        CHECK(s == 2 * n + singular_total);
        CHECK(2 * n <= s);
        CHECK(s <= 3 * n);
        const SurfaceClassTag tag = classify(w).tag;
        CHECK((s == 2 * n) == (tag == SurfaceClassTag::Enoki));
        CHECK((s == 3 * n) == (tag == SurfaceClassTag::OddInoueHirzebruch ||
                               tag == SurfaceClassTag::EvenInoueHirzebruch));
    }
}
