#pragma once

#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "qset/hfs.hpp"
#include "qset/rational.hpp"

namespace qset {

/// A sign-normalized wedge monomial: the product of the associations of its
/// factors, ordered strictly descending by serial. The descending order is
/// the +1 orientation of every basis monomial. Monomials are in bijection
/// with sets via children = factors; the empty monomial is the vacuum.
class Monomial {
public:
    Monomial() = default; // vacuum, grade 0

    // Sorts factors descending, counting transpositions. Returns the sign
    // of the permutation, or (0, vacuum) when a factor repeats.
    static std::pair<int, Monomial> normalize(std::vector<Hfs> factors);

    // The monomial whose factors are the children of x.
    static Monomial from_hfs(const Hfs& x);

    // The set whose children are the factors.
    Hfs to_hfs() const;

    const std::vector<Hfs>& factors() const { return factors_; }
    unsigned grade() const { return static_cast<unsigned>(factors_.size()); }
    unsigned rank() const;
    Nat serial(unsigned rank_guard = kSerialRankCap) const;

    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b);

private:
    std::vector<Hfs> factors_;
};

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

/// Finite linear combination of basis monomials with exact rational
/// coefficients. Zero coefficients are never stored, so representation is
/// unique; terms iterate in descending serial order. The empty combination
/// is the zero vector, distinct from the unit monomial (the vacuum).
class Element {
public:
    using TermMap = std::map<Monomial, Rat, MonomialGreater>;

    Element() = default; // zero

    static Element unit(); // the vacuum with coefficient 1
    static Element basis(Monomial m);
    static Element from_serial(const Nat& n); // basis element e^n

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    Rat coeff(const Monomial& m) const;

    // Adds c times m, erasing the term if the total cancels.
    Element& accumulate(const Monomial& m, const Rat& c);

    Element operator-() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Rat& c) const;

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

private:
    TermMap terms_;
};

// Dual vectors share the representation; basis monomials are self-dual
// under dual_pair.
using DualElement = Element;

// Bilinear concatenate-then-normalize product. Unit acts as identity;
// graded commutativity holds on homogeneous elements.
Element wedge(const Element& a, const Element& b);

// Linearized association: each basis monomial m maps to the grade-1
// monomial whose single factor is the set of m.
Element iota(const Element& a);

// Multiplies every term by its grade.
Element grade_op(const Element& a);

// Keeps only the grade-g terms.
Element grade_project(const Element& a, unsigned g);

// Left graded derivative with respect to the factor x:
// derive(x, iota(x)) = 1 and derive(x, m ^ m') follows the signed Leibniz
// rule; monomials without the factor x are annihilated.
Element derive(const Hfs& x, const Element& a);

// Orthonormal-basis pairing, bilinear in both arguments.
Rat dual_pair(const DualElement& d, const Element& e);

// Drops terms whose monomial rank exceeds r.
Element truncate_to_rank(const Element& a, unsigned r);

} // namespace qset
