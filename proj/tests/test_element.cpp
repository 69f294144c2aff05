#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qset/element.hpp"
#include "qset/errors.hpp"

using namespace qset;
using namespace qset::testing;

namespace {

Hfs hfs(unsigned long n) { return serial_decode(Nat(n)); }
Element e(unsigned long n) { return Element::from_serial(Nat(n)); }

} // namespace

TEST_CASE("normalize sorts descending and tracks the sign") {
    auto [s1, m1] = Monomial::normalize({hfs(0), hfs(1)});
    CHECK(s1 == -1);
    REQUIRE(m1.factors().size() == 2);
    CHECK(serial_encode(m1.factors()[0]) == 1);
    CHECK(serial_encode(m1.factors()[1]) == 0);

    auto [s2, m2] = Monomial::normalize({hfs(2), hfs(2)});
    CHECK(s2 == 0);
    CHECK(m2.grade() == 0);

    auto [s3, m3] = Monomial::normalize({hfs(3), hfs(1), hfs(0)});
    CHECK(s3 == 1);
    CHECK(m3.grade() == 3);
}

TEST_CASE("normalize agrees with the brute-force parity oracle") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<unsigned long> dist(0, 15);
    std::uniform_int_distribution<int> len_dist(0, 4);
    for (int i = 0; i < 300; ++i) {
        std::vector<unsigned long> serials;
        std::vector<Hfs> factors;
        const int len = len_dist(rng);
        for (int k = 0; k < len; ++k) {
            serials.push_back(dist(rng));
            factors.push_back(hfs(serials.back()));
        }
        auto [sign, m] = Monomial::normalize(factors);
        CHECK(sign == parity_oracle(serials));
    }
}

TEST_CASE("monomials and sets are in bijection") {
    for (const Hfs& x : enumerate_rank(3)) {
        const Monomial m = Monomial::from_hfs(x);
        CHECK(m.to_hfs() == x);
        CHECK(m.grade() == x.children().size());
        CHECK(m.rank() == x.rank());
        CHECK(m.serial() == serial_encode(x));
    }
}

TEST_CASE("wedge on basis elements") {
    // Descending factor order is the +1 orientation: the larger serial
    // wedges on the left without a sign.
    CHECK(wedge(e(2), e(1)) == e(3));
    CHECK(wedge(e(1), e(2)) == -e(3));
    for (unsigned long n = 0; n < 16; ++n) {
        CHECK(wedge(Element::unit(), e(n)) == e(n));
        CHECK(wedge(e(n), Element::unit()) == e(n));
    }
    CHECK(wedge(e(1), e(1)).is_zero());
}

TEST_CASE("serial additivity with the parity oracle") {
    for (unsigned long a = 0; a < 16; ++a) {
        for (unsigned long b = 0; b < 16; ++b) {
            const Element product = wedge(e(a), e(b));
            if ((a & b) != 0) {
                CHECK(product.is_zero());
                continue;
            }
            REQUIRE(product.terms().size() == 1);
            const auto& [m, c] = *product.terms().begin();
            CHECK(m.serial() == a + b);
            std::vector<unsigned long> serials;
            for (const Nat& p : hyperbinary_places(Nat(a)).places) serials.push_back(p.get_ui());
            for (const Nat& p : hyperbinary_places(Nat(b)).places) serials.push_back(p.get_ui());
            CHECK(c == parity_oracle(serials));
        }
    }
}

TEST_CASE("graded commutativity on grade-1 monomials") {
    for (unsigned long a = 0; a < 4; ++a) {
        for (unsigned long b = 0; b < 4; ++b) {
            const Element xa = iota(e(a)), xb = iota(e(b));
            CHECK(wedge(xa, xb) == -wedge(xb, xa));
        }
        CHECK(wedge(iota(e(a)), iota(e(a))).is_zero());
    }
}

TEST_CASE("wedge is associative; association interrupts associativity") {
    std::mt19937 rng(23);
    for (int i = 0; i < 50; ++i) {
        const Element a = random_element(rng), b = random_element(rng),
                      c = random_element(rng);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
    // {1 ^ 1} ^ e1 = e1 ^ e1 = 0, but 1 ^ {1 ^ e1} = iota(e1) = e2.
    const Element one = Element::unit();
    CHECK(wedge(iota(wedge(one, one)), e(1)).is_zero());
    CHECK(wedge(one, iota(wedge(one, e(1)))) == e(2));
    // A grade-1 triple with distinct ends separates too.
    const Element a = e(1), b = e(2), c = e(4);
    const Element left = wedge(iota(wedge(a, b)), c);
    const Element right = wedge(a, iota(wedge(b, c)));
    CHECK(left == -e(12));
    CHECK(right == e(65));
    CHECK(left != right);
}

TEST_CASE("iota maps onto the first grade") {
    CHECK(iota(Element::unit()) == e(1));
    CHECK(iota(e(3)) == e(8));
    for (const auto& [m, c] : iota(e(5) + e(7) * rat(2)).terms()) CHECK(m.grade() == 1);
    std::mt19937 rng(29);
    for (int i = 0; i < 50; ++i) {
        const Element a = random_element(rng), b = random_element(rng);
        const Rat lambda = rat(3, 2);
        CHECK(iota(a + b * lambda) == iota(a) + iota(b) * lambda);
    }
    CHECK(iota(Element{}).is_zero());
}

TEST_CASE("grade operator") {
    CHECK(grade_op(Element::unit()).is_zero());
    CHECK(grade_op(e(3)) == e(3) * rat(2));
    CHECK(grade_op(wedge(e(1), e(2))) ==
          wedge(grade_op(e(1)), e(2)) + wedge(e(1), grade_op(e(2))));
    CHECK(grade_project(e(3) + e(1), 2) == e(3));
    CHECK(grade_project(e(3) + e(1), 1) == e(1));
    CHECK(grade_project(e(3), 0).is_zero());
}

TEST_CASE("grade Leibniz on random pairs") {
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        const Element a = random_element(rng), b = random_element(rng);
        CHECK(grade_op(wedge(a, b)) ==
              wedge(grade_op(a), b) + wedge(a, grade_op(b)));
    }
}

TEST_CASE("left derivative") {
    CHECK(derive(hfs(0), iota(Element::unit())) == Element::unit());
    CHECK(derive(hfs(0), e(3)) == -e(2));
    CHECK(derive(hfs(3), Element::unit()).is_zero());
    CHECK(derive(hfs(2), e(3)).is_zero()); // factor absent
}

TEST_CASE("derive/wedge anticommutator is the identity") {
    for (unsigned long xs = 0; xs < 4; ++xs) {
        const Hfs x = hfs(xs);
        const Element creator = iota(e(xs));
        for (const Hfs& b : enumerate_rank(3)) {
            const Element psi = Element::basis(Monomial::from_hfs(b));
            const Element anti =
                derive(x, wedge(creator, psi)) + wedge(creator, derive(x, psi));
            CHECK(anti == psi);
        }
    }
}

TEST_CASE("dual pairing") {
    CHECK(dual_pair(e(3), e(3)) == 1);
    CHECK(dual_pair(e(3), e(2)) == 0);
    CHECK(dual_pair(e(1) * rat(2) + e(2), e(1) * rat(3)) == 6);
}

TEST_CASE("rank truncation") {
    CHECK(truncate_to_rank(e(1) + e(4), 2) == e(1));
    const Element a = e(1) + e(9) * rat(1, 2);
    CHECK(truncate_to_rank(a, 5) == a);
    CHECK(truncate_to_rank(Element{}, 3).is_zero());
}

TEST_CASE("binary-field superposition normalizes to two terms") {
    // iota(x'') + iota(x') ^ iota(x) for orthogonal basis spinors: one
    // configuration occupying x'' and one occupying both x' and x.
    const Element xpp = e(2), xp = e(1), x = Element::unit();
    const Element field = iota(xpp) + wedge(iota(xp), iota(x));
    REQUIRE(field.terms().size() == 2);
    CHECK(field.coeff(Monomial::from_hfs(hfs(4))) == 1); // {x''}
    CHECK(field.coeff(Monomial::from_hfs(hfs(3))) == 1); // iota(x')^iota(x)
    CHECK(grade_project(field, 1) == iota(xpp));
    CHECK(grade_project(field, 2) == wedge(iota(xp), iota(x)));
}
