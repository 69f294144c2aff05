#pragma once

#include <compare>
#include <memory>
#include <utility>
#include <vector>

#include "qset/rational.hpp"

namespace qset {

// Rank at or below which serial numbers materialize. hexp(5) = 2^65536 is
// still a (19,729-digit) bignum; hexp(6) is not representable, so rank-6
// sets exist only structurally.
inline constexpr unsigned kSerialRankCap = 5;

// Enumeration cap: hexp(4) = 65,536 sets; hexp(5) is astronomically out of
// reach.
inline constexpr unsigned kEnumerateRankCap = 4;

/// A hereditarily finite set in canonical form.
///
/// Children are pairwise distinct and kept strictly descending in serial
/// order. Values are immutable and share structure; copying is cheap.
/// The total order on Hfs is the serial order, computed structurally so it
/// works at any rank without materializing serials.
class Hfs {
public:
    // The empty set (serial 0, rank 0).
    Hfs();

    // Builds a set from its children, sorting them descending.
    // Throws Error on duplicate children.
    explicit Hfs(std::vector<Hfs> children);

    const std::vector<Hfs>& children() const { return node_->children; }
    unsigned rank() const { return node_->rank; }
    bool is_empty() const { return node_->children.empty(); }

    // serial(x) = sum over children c of 2^serial(c).
    // Throws RankGuard when rank() exceeds min(rank_guard, kSerialRankCap).
    Nat serial(unsigned rank_guard = kSerialRankCap) const;

    // Three-way structural comparison agreeing with serial order.
    friend std::strong_ordering operator<=>(const Hfs& a, const Hfs& b);
    friend bool operator==(const Hfs& a, const Hfs& b);

private:
    struct Node {
        std::vector<Hfs> children; // strictly descending
        unsigned rank = 0;
    };

    explicit Hfs(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static std::shared_ptr<const Node> empty_node();

    std::shared_ptr<const Node> node_;
};

// hexp(0) = 1, hexp(r+1) = 2^hexp(r). Throws RankGuard past the cap.
Nat hexp(unsigned r, unsigned rank_guard = kSerialRankCap);

Nat serial_encode(const Hfs& x, unsigned rank_guard = kSerialRankCap);

// Inverse codec: children are the binary-expansion exponents of n, decoded
// recursively. Defined for every representable n.
Hfs serial_decode(const Nat& n);

// Serial range [hexp(r-1), hexp(r)) occupied by tier r, for 1 <= r <= cap.
std::pair<Nat, Nat> tier_range(unsigned r, unsigned rank_guard = kSerialRankCap);

// All sets of rank <= r in ascending serial order; hexp(r) of them.
// Subtrees are shared, so the rank-4 list stays small in memory.
std::vector<Hfs> enumerate_rank(unsigned r);

// Splits x along the given strictly descending rank cuts r1 > ... > rn:
// factor k holds exactly the children of x with rank in [r_{k+1}, r_k - 1]
// (the last factor takes everything below r_n). The disjoint union of the
// factors' children reproduces x. Requires rank(x) <= r1.
std::vector<Hfs> factor_by_tiers(const Hfs& x, const std::vector<unsigned>& cuts);

/// Sparse hyperbinary form of a serial: the set of child serials, i.e. the
/// exponent list with sum 2^place = serial. Available for any set whose
/// children materialize (rank <= cap + 1).
struct HyperbinaryDigits {
    std::vector<Nat> places; // strictly descending
};

HyperbinaryDigits hyperbinary_places(const Hfs& x, unsigned rank_guard = kSerialRankCap);
HyperbinaryDigits hyperbinary_places(const Nat& n);

} // namespace qset
