#include "qset/hfs.hpp"

#include <algorithm>
#include <climits>
#include <map>

#include "qset/errors.hpp"

namespace qset {

namespace {

unsigned effective_cap(unsigned rank_guard) {
    return std::min(rank_guard, kSerialRankCap);
}

} // namespace

std::shared_ptr<const Hfs::Node> Hfs::empty_node() {
    static const std::shared_ptr<const Node> node = std::make_shared<Node>();
    return node;
}

Hfs::Hfs() : node_(empty_node()) {}

Hfs::Hfs(std::vector<Hfs> children) {
    if (children.empty()) {
        node_ = empty_node();
        return;
    }
    std::sort(children.begin(), children.end(),
              [](const Hfs& a, const Hfs& b) { return b < a; });
    for (std::size_t i = 1; i < children.size(); ++i) {
        if (children[i - 1] == children[i]) {
            throw Error("duplicate child in hereditarily finite set");
        }
    }
    auto node = std::make_shared<Node>();
    unsigned max_child_rank = 0;
    for (const Hfs& c : children) max_child_rank = std::max(max_child_rank, c.rank());
    node->rank = max_child_rank + 1;
    node->children = std::move(children);
    node_ = std::move(node);
}

std::strong_ordering operator<=>(const Hfs& a, const Hfs& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    const auto& ca = a.node_->children;
    const auto& cb = b.node_->children;
    // Children are descending by serial, so the first difference decides:
    // a larger leading child dominates every tail (binary place values).
    std::size_t n = std::min(ca.size(), cb.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = ca[i] <=> cb[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return ca.size() <=> cb.size();
}

bool operator==(const Hfs& a, const Hfs& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

Nat Hfs::serial(unsigned rank_guard) const {
    if (rank() > effective_cap(rank_guard)) {
        throw RankGuard("serial materialization capped at rank " +
                        std::to_string(effective_cap(rank_guard)));
    }
    Nat result = 0;
    for (const Hfs& c : children()) {
        Nat cs = c.serial(rank_guard);
        mpz_setbit(result.get_mpz_t(), cs.get_ui());
    }
    return result;
}

Nat hexp(unsigned r, unsigned rank_guard) {
    unsigned cap = effective_cap(rank_guard);
    if (r > cap) {
        throw RankGuard("hexp capped at rank " + std::to_string(cap));
    }
    Nat v = 1;
    for (unsigned i = 0; i < r; ++i) {
        v = pow2(v.get_ui());
    }
    return v;
}

Nat serial_encode(const Hfs& x, unsigned rank_guard) {
    return x.serial(rank_guard);
}

namespace {

Hfs decode_impl(const Nat& n, std::map<unsigned long, Hfs>& memo) {
    if (sgn(n) < 0) throw Error("serial numbers are non-negative");
    const bool small = n.fits_ulong_p();
    if (small) {
        auto it = memo.find(n.get_ui());
        if (it != memo.end()) return it->second;
    }
    std::vector<Hfs> children;
    constexpr mp_bitcnt_t none = ~static_cast<mp_bitcnt_t>(0);
    for (mp_bitcnt_t p = mpz_scan1(n.get_mpz_t(), 0); p != none;
         p = mpz_scan1(n.get_mpz_t(), p + 1)) {
        children.push_back(decode_impl(Nat(static_cast<unsigned long>(p)), memo));
    }
    std::reverse(children.begin(), children.end());
    Hfs result(std::move(children));
    if (small) memo.emplace(n.get_ui(), result);
    return result;
}

} // namespace

Hfs serial_decode(const Nat& n) {
    std::map<unsigned long, Hfs> memo;
    return decode_impl(n, memo);
}

std::pair<Nat, Nat> tier_range(unsigned r, unsigned rank_guard) {
    if (r < 1 || r > effective_cap(rank_guard)) {
        throw RankGuard("tier index must lie in 1.." +
                        std::to_string(effective_cap(rank_guard)));
    }
    return {hexp(r - 1, rank_guard), hexp(r, rank_guard)};
}

std::vector<Hfs> enumerate_rank(unsigned r) {
    if (r > kEnumerateRankCap) {
        throw RankGuard("enumeration capped at rank " +
                        std::to_string(kEnumerateRankCap));
    }
    std::vector<Hfs> level{Hfs{}};
    for (unsigned stage = 1; stage <= r; ++stage) {
        const std::size_t prev = level.size();
        std::vector<Hfs> next;
        next.reserve(std::size_t{1} << prev);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << prev); ++mask) {
            std::vector<Hfs> children;
            for (int b = static_cast<int>(prev) - 1; b >= 0; --b) {
                if (mask >> b & 1) children.push_back(level[static_cast<std::size_t>(b)]);
            }
            next.emplace_back(std::move(children));
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Hfs> factor_by_tiers(const Hfs& x, const std::vector<unsigned>& cuts) {
    if (cuts.empty()) throw Error("at least one cut required");
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        if (cuts[i] >= cuts[i - 1]) throw Error("cuts must be strictly descending");
    }
    if (cuts.back() < 1) throw Error("cuts must be positive ranks");
    if (x.rank() > cuts.front()) {
        throw RankGuard("set rank exceeds leading cut");
    }
    std::vector<std::vector<Hfs>> buckets(cuts.size());
    for (const Hfs& c : x.children()) {
        // Child of rank rc belongs to the factor covering ranks
        // [cuts[k+1], cuts[k] - 1]; the final factor covers [0, cuts.back() - 1].
        std::size_t k = 0;
        while (k + 1 < cuts.size() && c.rank() < cuts[k + 1]) ++k;
        buckets[k].push_back(c);
    }
    std::vector<Hfs> factors;
    factors.reserve(buckets.size());
    for (auto& b : buckets) factors.emplace_back(std::move(b));
    return factors;
}

HyperbinaryDigits hyperbinary_places(const Hfs& x, unsigned rank_guard) {
    HyperbinaryDigits digits;
    digits.places.reserve(x.children().size());
    for (const Hfs& c : x.children()) digits.places.push_back(c.serial(rank_guard));
    return digits;
}

HyperbinaryDigits hyperbinary_places(const Nat& n) {
    HyperbinaryDigits digits;
    constexpr mp_bitcnt_t none = ~static_cast<mp_bitcnt_t>(0);
    for (mp_bitcnt_t p = mpz_scan1(n.get_mpz_t(), 0); p != none;
         p = mpz_scan1(n.get_mpz_t(), p + 1)) {
        digits.places.emplace_back(static_cast<unsigned long>(p));
    }
    std::reverse(digits.places.begin(), digits.places.end());
    return digits;
}

} // namespace qset
