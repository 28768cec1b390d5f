#include <doctest.h>

#include <random>

#include "braid3/normal_form.hpp"

using namespace braid3;

namespace {

BraidWord random_braid(std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> sym(1, 3), sgn(0, 1);
    BraidWord w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i)
        w.letters.push_back({static_cast<BraidSym>(sym(rng)), sgn(rng) ? 1 : -1});
    return w;
}

} // namespace

TEST_CASE("permutation of generators") {
    CHECK(permutation(parse_braid("s1 s2 s1")) == PermutationS3::t13());
    CHECK(permutation(parse_braid("s1^2")).is_identity());
    // left-to-right composition: (12) then (23)
    const PermutationS3 p = permutation(parse_braid("s1 s2"));
    CHECK(p == compose(PermutationS3::t12(), PermutationS3::t23()));
    CHECK_FALSE(p.is_identity());
}

TEST_CASE("permutation is a homomorphism") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const BraidWord u = random_braid(rng, 8);
        const BraidWord v = random_braid(rng, 8);
        BraidWord uv = u;
        uv.letters.insert(uv.letters.end(), v.letters.begin(), v.letters.end());
        CHECK(permutation(uv) == compose(permutation(u), permutation(v)));
    }
}

TEST_CASE("even truncation q") {
    CHECK(q(4) == 4);
    CHECK(q(5) == 4);
    CHECK(q(-1) == 0);
    CHECK(q(-2) == -2);
    CHECK(q(-3) == -2);
    CHECK(q(1) == 0);
    CHECK_THROWS_AS(q(0), ZeroInputError);
}

TEST_CASE("normalize: spec examples") {
    {
        const NormalForm nf = normalize(parse_braid("s1 s2 s1"));
        REQUIRE(std::holds_alternative<DeltaPower>(nf));
        CHECK(std::get<DeltaPower>(nf).m == 1);
    }
    {
        const NormalForm nf = normalize(parse_braid("s1^3"));
        REQUIRE(std::holds_alternative<Split>(nf));
        const Split& s = std::get<Split>(nf);
        CHECK(s.j == 1);
        CHECK(s.k == 3);
        CHECK(s.b1.empty());
        CHECK(s.ell == 0);
    }
    {
        // sigma1 sigma2 = sigma2^-1 Delta
        const NormalForm nf = normalize(parse_braid("s1 s2"));
        REQUIRE(std::holds_alternative<Split>(nf));
        const Split& s = std::get<Split>(nf);
        CHECK(s.j == 2);
        CHECK(s.k == -1);
        CHECK(s.b1.empty());
        CHECK(s.ell == 1);
    }
    {
        const NormalForm nf = normalize(parse_braid("s1^3 s2^-2"));
        REQUIRE(std::holds_alternative<Split>(nf));
        const Split& s = std::get<Split>(nf);
        CHECK(s.j == 1);
        CHECK(s.k == 3);
        CHECK(s.b1 == parse_pure_word("a2^-1"));
        CHECK(s.ell == 0);
    }
}

TEST_CASE("theta") {
    CHECK(theta(Split{1, 3, FreeWord{}, 0}) == parse_pure_word("a1"));
    CHECK(theta(Split{2, -1, parse_pure_word("a1"), 0}) == parse_pure_word("a1"));
    CHECK(theta(Split{1, 4, parse_pure_word("a2^-1"), 5}) == parse_pure_word("a1^2 a2^-1"));
    CHECK_THROWS_AS(theta(NormalForm{DeltaPower{2}}), NotApplicableError);
}

TEST_CASE("denormalize literal expansion") {
    CHECK(denormalize(DeltaPower{2}) == parse_braid("d^2"));
    CHECK(denormalize(DeltaPower{0}) == parse_braid(""));
    CHECK(denormalize(Split{1, 3, FreeWord{}, 0}) == parse_braid("s1^3"));
    CHECK(denormalize(Split{2, -1, parse_pure_word("a1"), 1}) ==
          parse_braid("s2^-1 s1^2 d"));
}

TEST_CASE("round trip, Delta shift and first-term condition on random words") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 1000; ++t) {
        const BraidWord b = random_braid(rng, 12);
        const NormalForm nf = normalize(b);
        CHECK(braids_equal(b, denormalize(nf)));
        if (const Split* s = std::get_if<Split>(&nf)) {
            CHECK(s->k != 0);
            if (!s->b1.empty())
                CHECK(static_cast<int>(s->b1.blocks().front().gen) != s->j);
        }
        BraidWord bd = b;
        bd.letters.push_back({BraidSym::Delta, 1});
        const NormalForm nfd = normalize(bd);
        if (const Split* s = std::get_if<Split>(&nf)) {
            REQUIRE(std::holds_alternative<Split>(nfd));
            const Split& sd = std::get<Split>(nfd);
            CHECK(sd.j == s->j);
            CHECK(sd.k == s->k);
            CHECK(sd.b1 == s->b1);
            CHECK(sd.ell == s->ell + 1);
        } else {
            REQUIRE(std::holds_alternative<DeltaPower>(nfd));
            CHECK(std::get<DeltaPower>(nfd).m == std::get<DeltaPower>(nf).m + 1);
        }
    }
}

TEST_CASE("normalize is a function of the braid, not the word") {
    // insert relator words sigma1 sigma2 sigma1 sigma2^-1 sigma1^-1 sigma2^-1
    const std::vector<BraidLetter> relator = {
        {BraidSym::Sigma1, 1}, {BraidSym::Sigma2, 1},  {BraidSym::Sigma1, 1},
        {BraidSym::Sigma2, -1}, {BraidSym::Sigma1, -1}, {BraidSym::Sigma2, -1}};
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<int> pos_dist(0, 100);
    for (int t = 0; t < 200; ++t) {
        const BraidWord b = random_braid(rng, 10);
        BraidWord b2 = b;
        const std::size_t pos = pos_dist(rng) % (b.letters.size() + 1);
        b2.letters.insert(b2.letters.begin() + pos, relator.begin(), relator.end());
        REQUIRE(braids_equal(b, b2));
        CHECK(normalize(b) == normalize(b2));
    }
}
