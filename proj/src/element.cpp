#include "qset/element.hpp"

#include <algorithm>

#include "qset/errors.hpp"

namespace qset {

std::pair<int, Monomial> Monomial::normalize(std::vector<Hfs> factors) {
    // Insertion sort into descending order, counting transpositions.
    int sign = 1;
    for (std::size_t i = 1; i < factors.size(); ++i) {
        Hfs v = factors[i];
        std::size_t j = i;
        while (j > 0 && factors[j - 1] < v) {
            factors[j] = factors[j - 1];
            sign = -sign;
            --j;
        }
        factors[j] = v;
    }
    for (std::size_t i = 1; i < factors.size(); ++i) {
        if (factors[i - 1] == factors[i]) return {0, Monomial{}};
    }
    Monomial m;
    m.factors_ = std::move(factors);
    return {sign, std::move(m)};
}

Monomial Monomial::from_hfs(const Hfs& x) {
    Monomial m;
    m.factors_ = x.children();
    return m;
}

Hfs Monomial::to_hfs() const { return Hfs(factors_); }

unsigned Monomial::rank() const {
    unsigned max_rank = 0;
    for (const Hfs& f : factors_) max_rank = std::max(max_rank, f.rank());
    return factors_.empty() ? 0 : max_rank + 1;
}

Nat Monomial::serial(unsigned rank_guard) const {
    return to_hfs().serial(rank_guard);
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    std::size_t n = std::min(a.factors_.size(), b.factors_.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = a.factors_[i] <=> b.factors_[i];
        if (c != std::strong_ordering::equal) return c;
    }
    return a.factors_.size() <=> b.factors_.size();
}

bool operator==(const Monomial& a, const Monomial& b) {
    return (a <=> b) == std::strong_ordering::equal;
}

Element Element::unit() { return basis(Monomial{}); }

Element Element::basis(Monomial m) {
    Element e;
    e.terms_.emplace(std::move(m), Rat(1));
    return e;
}

Element Element::from_serial(const Nat& n) {
    return basis(Monomial::from_hfs(serial_decode(n)));
}

Rat Element::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

Element& Element::accumulate(const Monomial& m, const Rat& c) {
    if (sgn(c) == 0) return *this;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
    return *this;
}

Element Element::operator-() const {
    Element r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    for (const auto& [m, c] : o.terms_) r.accumulate(m, c);
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    for (const auto& [m, c] : o.terms_) r.accumulate(m, -c);
    return r;
}

Element Element::operator*(const Rat& c) const {
    Element r;
    if (sgn(c) == 0) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Element wedge(const Element& a, const Element& b) {
    Element r;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<Hfs> factors;
            factors.reserve(ma.factors().size() + mb.factors().size());
            factors.insert(factors.end(), ma.factors().begin(), ma.factors().end());
            factors.insert(factors.end(), mb.factors().begin(), mb.factors().end());
            auto [sign, m] = Monomial::normalize(std::move(factors));
            if (sign == 0) continue;
            r.accumulate(m, ca * cb * sign);
        }
    }
    return r;
}

Element iota(const Element& a) {
    Element r;
    for (const auto& [m, c] : a.terms()) {
        auto [sign, singleton] = Monomial::normalize({m.to_hfs()});
        r.accumulate(singleton, c * sign);
    }
    return r;
}

Element grade_op(const Element& a) {
    Element r;
    for (const auto& [m, c] : a.terms()) {
        r.accumulate(m, c * static_cast<int>(m.grade()));
    }
    return r;
}

Element grade_project(const Element& a, unsigned g) {
    Element r;
    for (const auto& [m, c] : a.terms()) {
        if (m.grade() == g) r.accumulate(m, c);
    }
    return r;
}

Element derive(const Hfs& x, const Element& a) {
    Element r;
    for (const auto& [m, c] : a.terms()) {
        const auto& fs = m.factors();
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (fs[i] == x) {
                std::vector<Hfs> rest;
                rest.reserve(fs.size() - 1);
                rest.insert(rest.end(), fs.begin(), fs.begin() + static_cast<long>(i));
                rest.insert(rest.end(), fs.begin() + static_cast<long>(i) + 1, fs.end());
                auto [sign, reduced] = Monomial::normalize(std::move(rest));
                r.accumulate(reduced, c * sign * (i % 2 == 0 ? 1 : -1));
                break;
            }
        }
    }
    return r;
}

Rat dual_pair(const DualElement& d, const Element& e) {
    Rat total(0);
    const bool d_smaller = d.terms().size() <= e.terms().size();
    const Element& small = d_smaller ? d : e;
    const Element& large = d_smaller ? e : d;
    for (const auto& [m, c] : small.terms()) total += c * large.coeff(m);
    return total;
}

Element truncate_to_rank(const Element& a, unsigned r) {
    Element out;
    for (const auto& [m, c] : a.terms()) {
        if (m.rank() <= r) out.accumulate(m, c);
    }
    return out;
}

} // namespace qset
