#include "qset/clifford.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qset/errors.hpp"

namespace qset {

SeedSpace::SeedSpace(std::vector<Hfs> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw DimensionMismatch("seed space needs at least one label");
    if (basis_.size() > kSeedDimCap) {
        throw SizeGuard("seed dimension capped at " + std::to_string(kSeedDimCap));
    }
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t j = i + 1; j < basis_.size(); ++j) {
            if (basis_[i] == basis_[j]) throw DimensionMismatch("seed labels must be distinct");
        }
    }
}

SeedSpace SeedSpace::first(unsigned d) {
    std::vector<Hfs> basis;
    basis.reserve(d);
    for (unsigned i = 0; i < d; ++i) basis.push_back(serial_decode(Nat(i)));
    return SeedSpace(std::move(basis));
}

const Hfs& SeedSpace::label(unsigned i) const {
    if (i < 1 || i > dim()) throw IndexError("primal index outside 1..d");
    return basis_[i - 1];
}

std::optional<unsigned> SeedSpace::index_of(const Hfs& x) const {
    for (unsigned i = 0; i < dim(); ++i) {
        if (basis_[i] == x) return i + 1;
    }
    return std::nullopt;
}

Rat duplex_norm(const DuplexVector& w) {
    if (w.primal.size() != w.dual.size()) {
        throw DimensionMismatch("primal and dual components differ in length");
    }
    Rat total(0);
    for (std::size_t i = 0; i < w.primal.size(); ++i) total += w.dual[i] * w.primal[i];
    return total;
}

CliffordElement CliffordElement::scalar(SeedSpace seed, const Rat& c) {
    CliffordElement e(std::move(seed));
    e.accumulate({}, c);
    return e;
}

CliffordElement CliffordElement::generator(SeedSpace seed, unsigned index) {
    if (index < 1 || index > 2 * seed.dim()) {
        throw IndexError("generator index outside 1..2d");
    }
    CliffordElement e(std::move(seed));
    e.accumulate({index}, Rat(1));
    return e;
}

Rat CliffordElement::coeff(const std::vector<unsigned>& blade) const {
    auto it = terms_.find(blade);
    return it == terms_.end() ? Rat(0) : it->second;
}

CliffordElement& CliffordElement::accumulate(const std::vector<unsigned>& blade, const Rat& c) {
    if (sgn(c) == 0) return *this;
    auto [it, inserted] = terms_.emplace(blade, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
    return *this;
}

CliffordElement CliffordElement::operator-() const {
    CliffordElement r(seed_);
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    if (!(seed_ == o.seed_)) throw DimensionMismatch("seed spaces differ");
    CliffordElement r = *this;
    for (const auto& [b, c] : o.terms_) r.accumulate(b, c);
    return r;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
    if (!(seed_ == o.seed_)) throw DimensionMismatch("seed spaces differ");
    CliffordElement r = *this;
    for (const auto& [b, c] : o.terms_) r.accumulate(b, -c);
    return r;
}

CliffordElement CliffordElement::operator*(const Rat& c) const {
    CliffordElement r(seed_);
    if (sgn(c) == 0) return r;
    for (const auto& [b, k] : terms_) r.terms_.emplace(b, k * c);
    return r;
}

namespace {

// Rewrites a raw generator sequence into canonical ascending blades.
// Adjacent equal isotropic generators kill the term; swapping a dual
// generator past its own primal splits off the anticommutator scalar.
void normal_order(std::vector<unsigned> seq, Rat coeff, unsigned d,
                  CliffordElement::BladeMap& acc) {
    for (std::size_t i = 0; i + 1 < seq.size();) {
        if (seq[i] == seq[i + 1]) return; // isotropic square
        if (seq[i] < seq[i + 1]) {
            ++i;
            continue;
        }
        if (seq[i] == seq[i + 1] + d) {
            // {v_{d+m}, v_m} = 1: contract the pair and recurse.
            std::vector<unsigned> contracted;
            contracted.reserve(seq.size() - 2);
            contracted.insert(contracted.end(), seq.begin(), seq.begin() + static_cast<long>(i));
            contracted.insert(contracted.end(), seq.begin() + static_cast<long>(i) + 2, seq.end());
            normal_order(std::move(contracted), coeff, d, acc);
        }
        std::swap(seq[i], seq[i + 1]);
        coeff = -coeff;
        if (i > 0) --i;
    }
    auto [it, inserted] = acc.emplace(std::move(seq), coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) acc.erase(it);
    }
}

} // namespace

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b) {
    if (!(a.seed() == b.seed())) throw DimensionMismatch("seed spaces differ");
    const unsigned d = a.dim();
    if (d > kCliffordMulDimCap) {
        throw SizeGuard("dense Clifford products capped at d = " +
                        std::to_string(kCliffordMulDimCap));
    }
    CliffordElement r(a.seed());
    CliffordElement::BladeMap acc;
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            std::vector<unsigned> seq;
            seq.reserve(ba.size() + bb.size());
            seq.insert(seq.end(), ba.begin(), ba.end());
            seq.insert(seq.end(), bb.begin(), bb.end());
            normal_order(std::move(seq), ca * cb, d, acc);
        }
    }
    for (auto& [b, c] : acc) r.accumulate(b, c);
    return r;
}

CliffordElement reversal(const CliffordElement& a) {
    CliffordElement r(a.seed());
    for (const auto& [b, c] : a.terms()) {
        const std::size_t g = b.size();
        const bool flip = (g * (g - 1) / 2) % 2 == 1;
        r.accumulate(b, flip ? -c : c);
    }
    return r;
}

Rat berezin_top(const CliffordElement& a) {
    std::vector<unsigned> top(2 * a.dim());
    std::iota(top.begin(), top.end(), 1u);
    return a.coeff(top);
}

CliffordElement embed(const Element& a, const SeedSpace& seed) {
    CliffordElement r(seed);
    for (const auto& [m, c] : a.terms()) {
        std::vector<unsigned> idx;
        idx.reserve(m.factors().size());
        for (const Hfs& f : m.factors()) {
            auto i = seed.index_of(f);
            if (!i) throw DimensionMismatch("element factor outside the seed basis");
            idx.push_back(*i);
        }
        // Sort ascending, tracking the permutation parity.
        int sign = 1;
        for (std::size_t i = 1; i < idx.size(); ++i) {
            unsigned v = idx[i];
            std::size_t j = i;
            while (j > 0 && idx[j - 1] > v) {
                idx[j] = idx[j - 1];
                sign = -sign;
                --j;
            }
            idx[j] = v;
        }
        r.accumulate(idx, c * sign);
    }
    return r;
}

Element spinor_apply(const CliffordElement& a, const Element& psi) {
    const SeedSpace& seed = a.seed();
    const unsigned d = seed.dim();
    for (const auto& [m, c] : psi.terms()) {
        for (const Hfs& f : m.factors()) {
            if (!seed.index_of(f)) {
                throw DimensionMismatch("spinor monomial outside the seed basis");
            }
        }
    }
    Element out;
    for (const auto& [blade, c] : a.terms()) {
        Element cur = psi;
        for (auto it = blade.rbegin(); it != blade.rend(); ++it) {
            const unsigned idx = *it;
            if (idx <= d) {
                cur = wedge(iota(Element::basis(Monomial::from_hfs(seed.label(idx)))), cur);
            } else {
                cur = derive(seed.label(idx - d), cur);
            }
        }
        out = out + cur * c;
    }
    return out;
}

Rat beta_literal(const Element& q_prime, const Element& q, const SeedSpace& seed) {
    CliffordElement a = embed(q_prime, seed);
    CliffordElement b = embed(q, seed);
    CliffordElement anti = clifford_mul(a, b) + clifford_mul(b, a);
    return berezin_top(anti) / 2;
}

Rat beta_chevalley(const Element& q_prime, const Element& q, const SeedSpace& seed) {
    CliffordElement product = clifford_mul(reversal(embed(q_prime, seed)), embed(q, seed));
    std::vector<unsigned> primal_top(seed.dim());
    std::iota(primal_top.begin(), primal_top.end(), 1u);
    return product.coeff(primal_top);
}

} // namespace qset
