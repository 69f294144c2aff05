#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "qset/clifford.hpp"

namespace qset {

// Bivector-basis rank cap (d(2d-1) basis elements, commutator tables
// computed exhaustively).
inline constexpr unsigned kPalevDimCap = 4;
// Contraction demo cap on the spin-matrix dimension 2j+1.
inline constexpr unsigned long kContractionDimCap = 10000;

// A second-grade Clifford element; the bivectors over a seed of dimension d
// span the d(2d-1)-dimensional Lie algebra of the neutral orthogonal form.
using Bivector = CliffordElement;

// Normal-ordered product of two generators (indices 1..2d). The product of
// a generator with its own dual picks up a scalar shift under reordering;
// it is returned as stored, normal-ordered. Throws IndexError on bad
// indices.
Bivector pair_import(const SeedSpace& seed, unsigned i, unsigned j);

// All d(2d-1) second-grade basis elements w_ij = (v_i v_j - v_j v_i)/2 for
// i < j, lexicographic. For unpaired generators this is the plain product;
// the d dual pairs carry their scalar shift removed, which keeps every
// basis element of grade exactly 2 and makes the span close under
// commutators.
std::vector<Bivector> bivector_basis(unsigned d);

/// Structure coefficients c[i][j][k] with [b_i, b_j] = sum_k c[i][j][k] b_k
/// over the bivector basis (0-based indices). Antisymmetric in (i, j) and
/// Jacobi-exact; both properties are verified by value, not by
/// construction.
class StructureTensor {
public:
    explicit StructureTensor(unsigned size) : size_(size) {}

    unsigned size() const { return size_; }
    Rat at(unsigned i, unsigned j, unsigned k) const;
    void set(unsigned i, unsigned j, unsigned k, const Rat& c);
    const std::map<std::tuple<unsigned, unsigned, unsigned>, Rat>& entries() const {
        return c_;
    }

    bool is_antisymmetric() const;
    bool jacobi_holds() const;

private:
    unsigned size_;
    std::map<std::tuple<unsigned, unsigned, unsigned>, Rat> c_;
};

// Computes every pairwise commutator of the bivector basis, verifies each
// stays in the grade-2 span, and returns the solved structure tensor.
// Throws ClosureViolation if a commutator leaves the span (must never
// fire) and RankGuard past the dimension cap.
StructureTensor closure_check(unsigned d);

// Contraction demo: for the (2j+1)-dimensional spin-j triple with
// [J_x, J_y] = i J_z, rescale X = J_x/sqrt(j), P = J_y/sqrt(j) and return
// the max-norm of [X, P] - i on the weight states m >= j - k. Exactly k/j.
// Throws SizeGuard when 2j+1 exceeds the cap or k > j.
double contraction_residual(unsigned long j, unsigned long k);

} // namespace qset
