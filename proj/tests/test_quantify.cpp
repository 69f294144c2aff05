#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qset/errors.hpp"
#include "qset/quantify.hpp"

using namespace qset;
using namespace qset::testing;

namespace {

OneBodyOperator random_one_body(std::mt19937& rng, const SeedSpace& seed) {
    std::uniform_int_distribution<int> dist(-3, 3);
    const unsigned d = seed.dim();
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d));
    for (auto& row : m) {
        for (auto& v : row) v = rat(dist(rng));
    }
    return {seed, std::move(m)};
}

std::vector<Rat> diagonal(const FockOperator& op) {
    std::vector<Rat> d;
    for (unsigned i = 0; i < op.dim(); ++i) d.push_back(op.entry(i, i));
    return d;
}

} // namespace

TEST_CASE("quantified identity is the grade operator") {
    const SeedSpace s = SeedSpace::first(2);
    const FockOperator number = quantify(OneBodyOperator::identity(s));
    CHECK(diagonal(number) == std::vector<Rat>{Rat(0), Rat(1), Rat(1), Rat(2)});
    for (unsigned long mask = 0; mask < 4; ++mask) {
        const Element psi = basis_psi(s, mask);
        CHECK(number.apply(psi) == grade_op(psi));
    }
}

TEST_CASE("quantified projection counts one occupation") {
    const SeedSpace s = SeedSpace::first(2);
    const FockOperator occ = quantify(OneBodyOperator::projection(s, 1));
    CHECK(diagonal(occ) == std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(1)});
}

TEST_CASE("single matrix entry ports one quantum") {
    const SeedSpace s = SeedSpace::first(2);
    const FockOperator op = quantify(OneBodyOperator::unit_entry(s, 1, 2));
    const Element x1 = basis_psi(s, 1), x2 = basis_psi(s, 2);
    CHECK(op.apply(x2) == x1);
    CHECK(op.apply(basis_psi(s, 3)).is_zero()); // x1 ^ x2 -> x1 ^ x1 = 0
    CHECK(op.apply(Element::unit()).is_zero());
}

TEST_CASE("quantification is a derivation over wedge") {
    std::mt19937 rng(53);
    const SeedSpace s = SeedSpace::first(3);
    for (int i = 0; i < 200; ++i) {
        const OneBodyOperator h = random_one_body(rng, s);
        const FockOperator op = quantify(h);
        const Element a = random_seed_element(rng, 3), b = random_seed_element(rng, 3);
        CHECK(op.apply(wedge(a, b)) ==
              wedge(op.apply(a), b) + wedge(a, op.apply(b)));
    }
}

TEST_CASE("quantify is linear in the matrix") {
    std::mt19937 rng(59);
    const SeedSpace s = SeedSpace::first(3);
    for (int i = 0; i < 20; ++i) {
        const OneBodyOperator h = random_one_body(rng, s), k = random_one_body(rng, s);
        const Rat lambda = rat(5, 2);
        CHECK(quantify(h + k * lambda) == quantify(h) + quantify(k) * lambda);
    }
}

TEST_CASE("quantification is a Lie algebra homomorphism") {
    std::mt19937 rng(61);
    for (unsigned d = 2; d <= 4; ++d) {
        const SeedSpace s = SeedSpace::first(d);
        for (int i = 0; i < 5; ++i) {
            const OneBodyOperator h = random_one_body(rng, s), k = random_one_body(rng, s);
            const FockOperator qh = quantify(h), qk = quantify(k);
            CHECK(qh.compose(qk) - qk.compose(qh) == quantify(h.commutator(k)));
        }
    }
}

TEST_CASE("quantified operators preserve grade") {
    std::mt19937 rng(67);
    const SeedSpace s = SeedSpace::first(3);
    for (int i = 0; i < 30; ++i) {
        const OneBodyOperator h = random_one_body(rng, s);
        const FockOperator op = quantify(h);
        const Element a = random_seed_element(rng, 3);
        CHECK(op.apply(grade_op(a)) == grade_op(op.apply(a)));
    }
}

TEST_CASE("occupation operators") {
    const SeedSpace s = SeedSpace::first(3);
    const Hfs x = s.label(2);
    const FockOperator n_x = occupation(s, x);
    CHECK(n_x.apply(Element::unit()).is_zero());
    const Element ix = iota(Element::basis(Monomial::from_hfs(x)));
    CHECK(n_x.apply(ix) == ix);
    CHECK_THROWS_AS(occupation(s, serial_decode(Nat(9))), NotInSeed);
    // Idempotence, exhaustive over labels for d <= 4.
    for (unsigned d = 1; d <= 4; ++d) {
        const SeedSpace seed = SeedSpace::first(d);
        for (unsigned i = 1; i <= d; ++i) {
            const FockOperator n = occupation(seed, seed.label(i));
            CHECK(n.compose(n) == n);
        }
    }
}

TEST_CASE("lift of the rank-1 identity is the grade operator on rank 2") {
    const FockOperator id1 = FockOperator::identity_on_rank(1);
    const FockOperator lifted = lift_rank(id1);
    REQUIRE(lifted.dim() == 4);
    CHECK(*lifted.rank_basis() == 2);
    CHECK(diagonal(lifted) == std::vector<Rat>{Rat(0), Rat(1), Rat(1), Rat(2)});
    for (const Monomial& m : lifted.basis()) {
        const Element psi = Element::basis(m);
        CHECK(lifted.apply(psi) == grade_op(psi));
    }
}

TEST_CASE("lift of zero is zero") {
    const FockOperator zero1 = FockOperator::identity_on_rank(1) * Rat(0);
    CHECK(lift_rank(zero1).is_zero());
    CHECK(multiquantify(zero1, 1, 3).is_zero());
}

TEST_CASE("double lift matches the grade-within-grade oracle") {
    const FockOperator lifted = multiquantify(FockOperator::identity_on_rank(1), 1, 3);
    REQUIRE(lifted.dim() == 16);
    // Independent oracle: the eigenvalue on a rank <= 3 set counts the
    // children of its children.
    for (unsigned long n = 0; n < 16; ++n) {
        const Hfs x = serial_decode(Nat(n));
        unsigned long expected = 0;
        for (const Hfs& c : x.children()) expected += c.children().size();
        CHECK(lifted.entry(static_cast<unsigned>(n), static_cast<unsigned>(n)) ==
              Rat(static_cast<long>(expected)));
        for (unsigned row = 0; row < 16; ++row) {
            if (row != n) CHECK(lifted.entry(row, static_cast<unsigned>(n)) == 0);
        }
    }
    // Single-stage equivalence.
    CHECK(multiquantify(FockOperator::identity_on_rank(1), 1, 2) ==
          lift_rank(FockOperator::identity_on_rank(1)));
    CHECK(lift_rank(lift_rank(FockOperator::identity_on_rank(1))) == lifted);
}

TEST_CASE("rank guards on lifting") {
    CHECK_THROWS_AS(lift_rank(FockOperator::identity_on_rank(4)), RankGuard);
    CHECK_THROWS_AS(multiquantify(FockOperator::identity_on_rank(2), 2, 2), RankGuard);
    CHECK_THROWS_AS(multiquantify(FockOperator::identity_on_rank(2), 2, 5), RankGuard);
    const SeedSpace s = SeedSpace::first(2);
    CHECK_THROWS_AS(lift_rank(quantify(OneBodyOperator::identity(s))),
                    DimensionMismatch); // not a rank-basis operator
}

TEST_CASE("applying outside the operator basis fails") {
    const FockOperator id1 = FockOperator::identity_on_rank(1);
    CHECK_THROWS_AS(id1.apply(Element::from_serial(Nat(5))), DimensionMismatch);
}
