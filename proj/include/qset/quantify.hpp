#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qset/clifford.hpp"
#include "qset/element.hpp"

namespace qset {

/// A one-quantum operator over a seed basis: d x d exact rational entries,
/// matrix[n][n'] carrying the amplitude for v_{n'} -> v_n (0-based storage,
/// row = target, column = source).
class OneBodyOperator {
public:
    OneBodyOperator(SeedSpace seed, std::vector<std::vector<Rat>> matrix);

    static OneBodyOperator identity(SeedSpace seed);
    static OneBodyOperator zero(SeedSpace seed);
    // Rank-1 projection onto the i-th basis label (1-based).
    static OneBodyOperator projection(SeedSpace seed, unsigned i);
    // Single unit entry target <- source (1-based).
    static OneBodyOperator unit_entry(SeedSpace seed, unsigned target, unsigned source);

    const SeedSpace& seed() const { return seed_; }
    unsigned dim() const { return seed_.dim(); }
    const std::vector<std::vector<Rat>>& matrix() const { return matrix_; }

    OneBodyOperator operator+(const OneBodyOperator& o) const;
    OneBodyOperator operator*(const Rat& c) const;
    // Matrix commutator [this, o].
    OneBodyOperator commutator(const OneBodyOperator& o) const;

private:
    SeedSpace seed_;
    std::vector<std::vector<Rat>> matrix_;
};

/// A linear operator on a finite monomial basis, stored as a sparse matrix
/// (column-major). Produced by quantification; applied as Element -> Element.
/// Operators built over a full rank truncation carry the rank tag that
/// lift_rank requires.
class FockOperator {
public:
    using Column = std::map<unsigned, Rat>; // row index -> coefficient

    FockOperator(std::vector<Monomial> basis, std::vector<Column> cols,
                 std::optional<unsigned> rank_basis);

    // Identity on the full basis of sets of rank <= r.
    static FockOperator identity_on_rank(unsigned r);
    // Dense matrix over the full rank-r basis (rows[target][source]).
    static FockOperator on_rank_basis(unsigned r, const std::vector<std::vector<Rat>>& rows);

    const std::vector<Monomial>& basis() const { return basis_; }
    const std::vector<Column>& cols() const { return cols_; }
    std::optional<unsigned> rank_basis() const { return rank_basis_; }
    std::size_t dim() const { return basis_.size(); }

    // Throws DimensionMismatch when a term of a lies outside the basis.
    Element apply(const Element& a) const;

    Rat entry(unsigned row, unsigned col) const;
    bool is_zero() const;

    FockOperator compose(const FockOperator& o) const; // this after o
    FockOperator operator+(const FockOperator& o) const;
    FockOperator operator-(const FockOperator& o) const;
    FockOperator operator*(const Rat& c) const;

    bool operator==(const FockOperator& o) const;

private:
    std::vector<Monomial> basis_;
    std::map<Monomial, unsigned> index_;
    std::vector<Column> cols_;
    std::optional<unsigned> rank_basis_;
};

// Additive quantification: sum over n, n' of H[n][n'] (wedge by iota v_n)
// after (derive v_{n'}), realized over the 2^d monomial basis of the
// exterior algebra of the seed. Acts as a derivation over wedge.
FockOperator quantify(const OneBodyOperator& h);

// Occupation-number operator of a seed label: the quantification of the
// rank-1 projection onto x. Idempotent with spectrum {0, 1}.
FockOperator occupation(const SeedSpace& seed, const Hfs& x);

// One quantification stage: treats the rank-r basis sets as the generator
// labels of rank r+1 (each basis monomial is the seed of its association)
// and quantifies the operator matrix over the rank-(r+1) truncation.
FockOperator lift_rank(const FockOperator& j);

// Iterates lift_rank from rank r to rank r_prime.
FockOperator multiquantify(const FockOperator& j, unsigned r, unsigned r_prime);

} // namespace qset
