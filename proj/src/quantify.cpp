#include "qset/quantify.hpp"

#include <algorithm>
#include <string>

#include "qset/errors.hpp"

namespace qset {

OneBodyOperator::OneBodyOperator(SeedSpace seed, std::vector<std::vector<Rat>> matrix)
    : seed_(std::move(seed)), matrix_(std::move(matrix)) {
    if (matrix_.size() != seed_.dim()) {
        throw DimensionMismatch("matrix rows must match seed dimension");
    }
    for (const auto& row : matrix_) {
        if (row.size() != seed_.dim()) {
            throw DimensionMismatch("matrix must be square over the seed basis");
        }
    }
}

OneBodyOperator OneBodyOperator::identity(SeedSpace seed) {
    const unsigned d = seed.dim();
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d, Rat(0)));
    for (unsigned i = 0; i < d; ++i) m[i][i] = 1;
    return {std::move(seed), std::move(m)};
}

OneBodyOperator OneBodyOperator::zero(SeedSpace seed) {
    const unsigned d = seed.dim();
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d, Rat(0)));
    return {std::move(seed), std::move(m)};
}

OneBodyOperator OneBodyOperator::projection(SeedSpace seed, unsigned i) {
    const unsigned d = seed.dim();
    if (i < 1 || i > d) throw IndexError("projection index outside 1..d");
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d, Rat(0)));
    m[i - 1][i - 1] = 1;
    return {std::move(seed), std::move(m)};
}

OneBodyOperator OneBodyOperator::unit_entry(SeedSpace seed, unsigned target, unsigned source) {
    const unsigned d = seed.dim();
    if (target < 1 || target > d || source < 1 || source > d) {
        throw IndexError("matrix entry outside 1..d");
    }
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d, Rat(0)));
    m[target - 1][source - 1] = 1;
    return {std::move(seed), std::move(m)};
}

OneBodyOperator OneBodyOperator::operator+(const OneBodyOperator& o) const {
    if (!(seed_ == o.seed_)) throw DimensionMismatch("seed spaces differ");
    auto m = matrix_;
    for (unsigned i = 0; i < dim(); ++i) {
        for (unsigned j = 0; j < dim(); ++j) m[i][j] += o.matrix_[i][j];
    }
    return {seed_, std::move(m)};
}

OneBodyOperator OneBodyOperator::operator*(const Rat& c) const {
    auto m = matrix_;
    for (auto& row : m) {
        for (auto& v : row) v *= c;
    }
    return {seed_, std::move(m)};
}

OneBodyOperator OneBodyOperator::commutator(const OneBodyOperator& o) const {
    if (!(seed_ == o.seed_)) throw DimensionMismatch("seed spaces differ");
    const unsigned d = dim();
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d, Rat(0)));
    for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = 0; j < d; ++j) {
            for (unsigned k = 0; k < d; ++k) {
                m[i][j] += matrix_[i][k] * o.matrix_[k][j] - o.matrix_[i][k] * matrix_[k][j];
            }
        }
    }
    return {seed_, std::move(m)};
}

FockOperator::FockOperator(std::vector<Monomial> basis, std::vector<Column> cols,
                           std::optional<unsigned> rank_basis)
    : basis_(std::move(basis)), cols_(std::move(cols)), rank_basis_(rank_basis) {
    if (cols_.size() != basis_.size()) {
        throw DimensionMismatch("column count must match basis size");
    }
    for (unsigned i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    if (index_.size() != basis_.size()) {
        throw DimensionMismatch("basis monomials must be distinct");
    }
}

namespace {

std::vector<Monomial> rank_monomial_basis(unsigned r) {
    std::vector<Monomial> basis;
    for (const Hfs& x : enumerate_rank(r)) basis.push_back(Monomial::from_hfs(x));
    return basis;
}

// The shared quantification kernel: given generator labels, a sparse matrix
// over them (cols[source]{target: coeff}), and a monomial basis closed
// under the label ports, builds sum_{x,y} H[x][y] c_x a_y column by column.
FockOperator quantify_over(const std::vector<Hfs>& labels,
                           const std::vector<FockOperator::Column>& h_cols,
                           std::vector<Monomial> basis,
                           std::optional<unsigned> rank_tag) {
    std::map<Monomial, unsigned> index;
    for (unsigned i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<FockOperator::Column> cols(basis.size());
    for (unsigned j = 0; j < basis.size(); ++j) {
        const Element column = Element::basis(basis[j]);
        for (unsigned y = 0; y < labels.size(); ++y) {
            if (h_cols[y].empty()) continue;
            const Element exported = derive(labels[y], column);
            if (exported.is_zero()) continue;
            for (const auto& [x, hxy] : h_cols[y]) {
                const Element imported =
                    wedge(iota(Element::basis(Monomial::from_hfs(labels[x]))), exported);
                for (const auto& [m, c] : imported.terms()) {
                    auto it = index.find(m);
                    if (it == index.end()) {
                        throw DimensionMismatch("port action left the operator basis");
                    }
                    Rat v = c * hxy;
                    auto [slot, inserted] = cols[j].emplace(it->second, v);
                    if (!inserted) {
                        slot->second += v;
                        if (sgn(slot->second) == 0) cols[j].erase(slot);
                    }
                }
            }
        }
    }
    return FockOperator(std::move(basis), std::move(cols), rank_tag);
}

std::vector<Monomial> subset_basis(const SeedSpace& seed) {
    const unsigned d = seed.dim();
    std::vector<Monomial> basis;
    basis.reserve(std::size_t{1} << d);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
        std::vector<Hfs> factors;
        for (unsigned b = 0; b < d; ++b) {
            if (mask >> b & 1) factors.push_back(seed.label(b + 1));
        }
        auto [sign, m] = Monomial::normalize(std::move(factors));
        (void)sign; // distinct labels, so only the order is normalized
        basis.push_back(std::move(m));
    }
    std::sort(basis.begin(), basis.end());
    return basis;
}

} // namespace

FockOperator FockOperator::identity_on_rank(unsigned r) {
    auto basis = rank_monomial_basis(r);
    std::vector<Column> cols(basis.size());
    for (unsigned i = 0; i < basis.size(); ++i) cols[i].emplace(i, Rat(1));
    return FockOperator(std::move(basis), std::move(cols), r);
}

FockOperator FockOperator::on_rank_basis(unsigned r, const std::vector<std::vector<Rat>>& rows) {
    auto basis = rank_monomial_basis(r);
    if (rows.size() != basis.size()) {
        throw DimensionMismatch("matrix size must equal hexp(r)");
    }
    std::vector<Column> cols(basis.size());
    for (unsigned i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != basis.size()) {
            throw DimensionMismatch("matrix must be square over the rank basis");
        }
        for (unsigned j = 0; j < rows[i].size(); ++j) {
            if (sgn(rows[i][j]) != 0) cols[j].emplace(i, rows[i][j]);
        }
    }
    return FockOperator(std::move(basis), std::move(cols), r);
}

Element FockOperator::apply(const Element& a) const {
    Element out;
    for (const auto& [m, c] : a.terms()) {
        auto it = index_.find(m);
        if (it == index_.end()) {
            throw DimensionMismatch("monomial outside the operator basis");
        }
        for (const auto& [row, v] : cols_[it->second]) {
            out.accumulate(basis_[row], c * v);
        }
    }
    return out;
}

Rat FockOperator::entry(unsigned row, unsigned col) const {
    if (col >= cols_.size()) throw IndexError("column outside basis");
    auto it = cols_[col].find(row);
    return it == cols_[col].end() ? Rat(0) : it->second;
}

bool FockOperator::is_zero() const {
    for (const auto& col : cols_) {
        if (!col.empty()) return false;
    }
    return true;
}

FockOperator FockOperator::compose(const FockOperator& o) const {
    if (basis_ != o.basis_) throw DimensionMismatch("operator bases differ");
    std::vector<Column> cols(o.cols_.size());
    for (unsigned j = 0; j < o.cols_.size(); ++j) {
        for (const auto& [k, v] : o.cols_[j]) {
            for (const auto& [i, w] : cols_[k]) {
                Rat prod = v * w;
                auto [slot, inserted] = cols[j].emplace(i, prod);
                if (!inserted) {
                    slot->second += prod;
                    if (sgn(slot->second) == 0) cols[j].erase(slot);
                }
            }
        }
    }
    return FockOperator(basis_, std::move(cols), rank_basis_);
}

FockOperator FockOperator::operator+(const FockOperator& o) const {
    if (basis_ != o.basis_) throw DimensionMismatch("operator bases differ");
    std::vector<Column> cols = cols_;
    for (unsigned j = 0; j < cols.size(); ++j) {
        for (const auto& [i, v] : o.cols_[j]) {
            auto [slot, inserted] = cols[j].emplace(i, v);
            if (!inserted) {
                slot->second += v;
                if (sgn(slot->second) == 0) cols[j].erase(slot);
            }
        }
    }
    return FockOperator(basis_, std::move(cols), rank_basis_);
}

FockOperator FockOperator::operator-(const FockOperator& o) const {
    return *this + o * Rat(-1);
}

FockOperator FockOperator::operator*(const Rat& c) const {
    std::vector<Column> cols(cols_.size());
    if (sgn(c) != 0) {
        for (unsigned j = 0; j < cols_.size(); ++j) {
            for (const auto& [i, v] : cols_[j]) cols[j].emplace(i, v * c);
        }
    }
    return FockOperator(basis_, std::move(cols), rank_basis_);
}

bool FockOperator::operator==(const FockOperator& o) const {
    return basis_ == o.basis_ && cols_ == o.cols_;
}

FockOperator quantify(const OneBodyOperator& h) {
    const SeedSpace& seed = h.seed();
    const unsigned d = seed.dim();
    std::vector<FockOperator::Column> h_cols(d);
    for (unsigned target = 0; target < d; ++target) {
        for (unsigned source = 0; source < d; ++source) {
            if (sgn(h.matrix()[target][source]) != 0) {
                h_cols[source].emplace(target, h.matrix()[target][source]);
            }
        }
    }
    return quantify_over(seed.basis(), h_cols, subset_basis(seed), std::nullopt);
}

FockOperator occupation(const SeedSpace& seed, const Hfs& x) {
    auto idx = seed.index_of(x);
    if (!idx) throw NotInSeed("occupation label is not a seed basis element");
    return quantify(OneBodyOperator::projection(seed, *idx));
}

FockOperator lift_rank(const FockOperator& j) {
    if (!j.rank_basis()) {
        throw DimensionMismatch("lift requires an operator over a full rank basis");
    }
    const unsigned r = *j.rank_basis();
    if (r + 1 > kEnumerateRankCap) {
        throw RankGuard("lift target rank capped at " + std::to_string(kEnumerateRankCap));
    }
    std::vector<Hfs> labels;
    labels.reserve(j.basis().size());
    for (const Monomial& m : j.basis()) labels.push_back(m.to_hfs());
    return quantify_over(labels, j.cols(), rank_monomial_basis(r + 1), r + 1);
}

FockOperator multiquantify(const FockOperator& j, unsigned r, unsigned r_prime) {
    if (!j.rank_basis() || *j.rank_basis() != r) {
        throw DimensionMismatch("operator basis does not match the stated rank");
    }
    if (r >= r_prime || r_prime > kEnumerateRankCap) {
        throw RankGuard("multiquantification requires r < r' <= " +
                        std::to_string(kEnumerateRankCap));
    }
    FockOperator out = j;
    for (unsigned stage = r; stage < r_prime; ++stage) out = lift_rank(out);
    return out;
}

} // namespace qset
