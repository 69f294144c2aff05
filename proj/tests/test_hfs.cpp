#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qset/errors.hpp"
#include "qset/hfs.hpp"

using namespace qset;
using namespace qset::testing;

namespace {

Hfs hfs(unsigned long n) { return serial_decode(Nat(n)); }

} // namespace

TEST_CASE("hexp values and guard") {
    CHECK(hexp(0) == 1);
    CHECK(hexp(1) == 2);
    CHECK(hexp(2) == 4);
    CHECK(hexp(3) == 16);
    CHECK(hexp(4) == 65536);
    CHECK(mpz_sizeinbase(hexp(5).get_mpz_t(), 2) == 65537);
    CHECK_THROWS_AS(hexp(6), RankGuard);
    CHECK_THROWS_AS(hexp(3, 2), RankGuard);
    CHECK(hexp(5, 9) == hexp(5)); // guard clamps to the hard cap
}

TEST_CASE("serial codec on the table entries") {
    CHECK(serial_encode(Hfs{}) == 0);
    CHECK(serial_encode(Hfs{{Hfs{}}}) == 1);          // {1}
    CHECK(serial_encode(hfs(2)) == 2);                // {{1}}
    CHECK(serial_encode(Hfs{{hfs(1), hfs(0)}}) == 3); // {{1}}{1}
    CHECK(serial_encode(hfs(4)) == 4);                // {{{1}}}
    // 2^2 + 2^0: the rank-3 row position 5
    CHECK(serial_encode(Hfs{{hfs(2), hfs(0)}}) == 5);
}

TEST_CASE("serial decode") {
    CHECK(hfs(0).is_empty());
    CHECK(hfs(0).rank() == 0);
    // serial 6 = {{{1}},{{1}}} in product notation: children 2 and 1
    const Hfs six = hfs(6);
    REQUIRE(six.children().size() == 2);
    CHECK(serial_encode(six.children()[0]) == 2);
    CHECK(serial_encode(six.children()[1]) == 1);
    // serial 65535: all sixteen rank <= 3 sets as children
    const Hfs full = hfs(65535);
    REQUIRE(full.children().size() == 16);
    CHECK(full.rank() == 4);
    for (unsigned i = 0; i < 16; ++i) {
        CHECK(serial_encode(full.children()[i]) == 15 - i);
    }
    // Decode handles bignum input: hexp(5) - 1 has 65536 children.
    const Hfs top = serial_decode(hexp(5) - 1);
    CHECK(top.children().size() == 65536);
    CHECK(top.rank() == 5);
}

TEST_CASE("rank") {
    CHECK(hfs(3).rank() == 2);
    CHECK(hfs(15).rank() == 3);
    CHECK(hfs(16).rank() == 4);
    CHECK(hfs(65535).rank() == 4);
}

TEST_CASE("rank guard on serial materialization") {
    // A rank-6 chain exists structurally; its serial does not materialize,
    // but its children's serials do.
    Hfs x;
    for (int i = 0; i < 6; ++i) x = Hfs{{x}};
    CHECK(x.rank() == 6);
    CHECK_THROWS_AS(x.serial(), RankGuard);
    CHECK_THROWS_AS(hfs(9).serial(2), RankGuard); // tightened guard
    const HyperbinaryDigits digits = hyperbinary_places(x);
    REQUIRE(digits.places.size() == 1);
    CHECK(digits.places[0] == hexp(4)); // serial of the rank-5 chain child
}

TEST_CASE("hyperbinary places") {
    const HyperbinaryDigits d6 = hyperbinary_places(Nat(6));
    REQUIRE(d6.places.size() == 2);
    CHECK(d6.places[0] == 2);
    CHECK(d6.places[1] == 1);
    std::mt19937 rng(7);
    std::uniform_int_distribution<unsigned long> dist(0, 65535);
    for (int i = 0; i < 50; ++i) {
        const Nat n(dist(rng));
        Nat sum = 0;
        for (const Nat& p : hyperbinary_places(n).places) sum += pow2(p.get_ui());
        CHECK(sum == n);
        Nat sum2 = 0;
        for (const Nat& p : hyperbinary_places(serial_decode(n)).places) {
            sum2 += pow2(p.get_ui());
        }
        CHECK(sum2 == n);
    }
}

TEST_CASE("tier ranges") {
    CHECK(tier_range(1) == std::pair<Nat, Nat>{1, 2});
    CHECK(tier_range(3) == std::pair<Nat, Nat>{4, 16});
    CHECK(tier_range(4) == std::pair<Nat, Nat>{16, 65536});
    CHECK_THROWS_AS(tier_range(0), RankGuard);
    CHECK_THROWS_AS(tier_range(6), RankGuard);
}

TEST_CASE("enumerate_rank") {
    const auto r1 = enumerate_rank(1);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].is_empty());
    CHECK(serial_encode(r1[1]) == 1);
    CHECK(enumerate_rank(2).size() == 4);
    CHECK(enumerate_rank(3).size() == 16);
    CHECK_THROWS_AS(enumerate_rank(5), RankGuard);
    // Ascending serial order, consistent with the structural comparison.
    const auto r3 = enumerate_rank(3);
    for (std::size_t i = 0; i < r3.size(); ++i) {
        CHECK(serial_encode(r3[i]) == i);
        if (i > 0) CHECK(r3[i - 1] < r3[i]);
    }
}

TEST_CASE("structural order agrees with serial order at rank 4 samples") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<unsigned long> dist(0, 65535);
    for (int i = 0; i < 200; ++i) {
        const unsigned long a = dist(rng), b = dist(rng);
        const Hfs xa = hfs(a), xb = hfs(b);
        CHECK((xa < xb) == (a < b));
        CHECK((xa == xb) == (a == b));
    }
}

TEST_CASE("bijection on ranks up to 3") {
    for (unsigned long n = 0; n < 16; ++n) {
        CHECK(serial_encode(serial_decode(Nat(n))) == n);
    }
}

TEST_CASE("monotone tiers") {
    for (unsigned long n = 0; n < 16; ++n) {
        const unsigned r = hfs(n).rank();
        if (r == 0) {
            CHECK(n == 0);
        } else {
            CHECK(hexp(r - 1) <= n);
            CHECK(Nat(n) < hexp(r));
        }
    }
}

TEST_CASE("duplicate children are rejected") {
    CHECK_THROWS_AS(Hfs({hfs(1), hfs(1)}), Error);
}

TEST_CASE("factor_by_tiers splits children by rank window") {
    const auto factors = factor_by_tiers(hfs(3), {2, 1});
    REQUIRE(factors.size() == 2);
    CHECK(serial_encode(factors[0]) == 2); // {{1}}
    CHECK(serial_encode(factors[1]) == 1); // {1}

    const auto empties = factor_by_tiers(Hfs{}, {3, 2, 1});
    REQUIRE(empties.size() == 3);
    for (const Hfs& f : empties) CHECK(f.is_empty());

    CHECK_THROWS_AS(factor_by_tiers(hfs(16), {3, 1}), RankGuard);
    CHECK_THROWS_AS(factor_by_tiers(hfs(3), {1, 2}), Error);
}

TEST_CASE("replication: factors re-unite to the original") {
    auto reunite = [](const std::vector<Hfs>& factors) {
        std::vector<Hfs> children;
        for (const Hfs& f : factors) {
            children.insert(children.end(), f.children().begin(), f.children().end());
        }
        return Hfs(std::move(children));
    };
    const std::vector<std::vector<unsigned>> cut_sets = {{3, 2, 1}, {3, 2}, {3, 1}, {3}};
    for (const Hfs& x : enumerate_rank(3)) {
        for (const auto& cuts : cut_sets) {
            CHECK(reunite(factor_by_tiers(x, cuts)) == x);
        }
    }
    std::mt19937 rng(3);
    std::uniform_int_distribution<unsigned long> dist(16, 65535);
    for (int i = 0; i < 40; ++i) {
        const Hfs x = hfs(dist(rng));
        CHECK(reunite(factor_by_tiers(x, {4, 2})) == x);
        CHECK(reunite(factor_by_tiers(x, {4, 3, 2, 1})) == x);
    }
}

TEST_CASE("counting: |S(3|2)| x |S(2)| = hexp(3)") {
    std::set<std::pair<Nat, Nat>> pairs;
    std::set<Nat> firsts, seconds;
    for (const Hfs& x : enumerate_rank(3)) {
        const auto f = factor_by_tiers(x, {3, 2});
        REQUIRE(f.size() == 2);
        // First factor only draws on rank-2 children, second on rank <= 1.
        for (const Hfs& c : f[0].children()) CHECK(c.rank() == 2);
        CHECK(f[1].rank() <= 2);
        firsts.insert(serial_encode(f[0]));
        seconds.insert(serial_encode(f[1]));
        pairs.emplace(serial_encode(f[0]), serial_encode(f[1]));
    }
    CHECK(firsts.size() == 4);
    CHECK(seconds.size() == 4);
    CHECK(pairs.size() == 16);
}
