#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qset/element.hpp"
#include "qset/hfs.hpp"
#include "qset/rational.hpp"

namespace qset {

// Spinor-space dimension cap (2^d states) for operator application.
inline constexpr unsigned kSeedDimCap = 12;
// Cap for dense Clifford products over 2d generators.
inline constexpr unsigned kCliffordMulDimCap = 6;

/// An ordered basis of d distinct set labels v_1..v_d. The duplex space
/// adjoins the dual generators v_{d+1}..v_{2d}; generator indices run
/// 1..2d with duals after primals.
class SeedSpace {
public:
    explicit SeedSpace(std::vector<Hfs> basis);

    // Convenience basis: the first d sets in serial order (serials 0..d-1).
    static SeedSpace first(unsigned d);

    unsigned dim() const { return static_cast<unsigned>(basis_.size()); }
    const std::vector<Hfs>& basis() const { return basis_; }

    // 1-based primal label. Throws IndexError outside 1..d.
    const Hfs& label(unsigned i) const;

    // 1-based primal index of x, or nullopt.
    std::optional<unsigned> index_of(const Hfs& x) const;

    bool operator==(const SeedSpace& o) const { return basis_ == o.basis_; }

private:
    std::vector<Hfs> basis_;
};

/// A vector of the duplex space V + dual V in coordinates: primal and dual
/// components of equal length d.
struct DuplexVector {
    std::vector<Rat> primal;
    std::vector<Rat> dual;
};

// The neutral duplex form |v + v'| = v' o v (coordinate contraction).
// Pure-primal and pure-dual vectors are null.
Rat duplex_norm(const DuplexVector& w);

/// Sparse sum of canonically ordered generator products over a seed space.
/// Keys are strictly ascending index lists (values 1..2d); the empty key is
/// the scalar. Generators obey {v_{d+m}, v_n} = delta_mn with all other
/// anticommutators zero, so every generator is isotropic.
class CliffordElement {
public:
    using BladeMap = std::map<std::vector<unsigned>, Rat>;

    explicit CliffordElement(SeedSpace seed) : seed_(std::move(seed)) {}

    static CliffordElement scalar(SeedSpace seed, const Rat& c);
    static CliffordElement generator(SeedSpace seed, unsigned index);

    const SeedSpace& seed() const { return seed_; }
    unsigned dim() const { return seed_.dim(); }
    bool is_zero() const { return terms_.empty(); }
    const BladeMap& terms() const { return terms_; }
    Rat coeff(const std::vector<unsigned>& blade) const;

    CliffordElement& accumulate(const std::vector<unsigned>& blade, const Rat& c);

    CliffordElement operator-() const;
    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator*(const Rat& c) const;

    bool operator==(const CliffordElement& o) const {
        return seed_ == o.seed_ && terms_ == o.terms_;
    }

private:
    SeedSpace seed_;
    BladeMap terms_;
};

// Bilinear normal-ordering product. Throws DimensionMismatch across seed
// spaces and SizeGuard past the dense-product cap.
CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b);

// Grade-g products scale by (-1)^{g(g-1)/2}; an antiautomorphism.
CliffordElement reversal(const CliffordElement& a);

// Coefficient of the full product v_1..v_{2d}, the Berezin volume
// coefficient.
Rat berezin_top(const CliffordElement& a);

// Embeds an exterior-algebra element over the seed basis as a pure-primal
// Clifford element (isotropic generators multiply as wedges).
CliffordElement embed(const Element& a, const SeedSpace& seed);

// Applies a Clifford element through the spinor representation on the
// exterior algebra over the seed: v_n acts by left wedge with iota(v_n),
// v_{d+n} by the left derivative with respect to v_n.
Element spinor_apply(const CliffordElement& a, const Element& psi);

// Berezin form over all 2d generators of (1/2){q', q}; identically zero on
// pure-primal arguments (the test suite pins this).
Rat beta_literal(const Element& q_prime, const Element& q, const SeedSpace& seed);

// Top-form convention: coefficient of v_1..v_d in reversal(q') q. The
// non-degenerate spinor form used by default downstream.
Rat beta_chevalley(const Element& q_prime, const Element& q, const SeedSpace& seed);

} // namespace qset
