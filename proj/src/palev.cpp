#include "qset/palev.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "qset/errors.hpp"

namespace qset {

Bivector pair_import(const SeedSpace& seed, unsigned i, unsigned j) {
    const unsigned n = 2 * seed.dim();
    if (i < 1 || i > n || j < 1 || j > n) {
        throw IndexError("generator index outside 1..2d");
    }
    return clifford_mul(CliffordElement::generator(seed, i),
                        CliffordElement::generator(seed, j));
}

std::vector<Bivector> bivector_basis(unsigned d) {
    if (d < 1 || d > kPalevDimCap) {
        throw RankGuard("bivector basis capped at d = " + std::to_string(kPalevDimCap));
    }
    SeedSpace seed = SeedSpace::first(d);
    std::vector<Bivector> basis;
    basis.reserve(static_cast<std::size_t>(d) * (2 * d - 1));
    for (unsigned i = 1; i <= 2 * d; ++i) {
        for (unsigned j = i + 1; j <= 2 * d; ++j) {
            CliffordElement b(seed);
            b.accumulate({i, j}, Rat(1));
            if (j == i + d) b.accumulate({}, Rat(-1, 2));
            basis.push_back(std::move(b));
        }
    }
    return basis;
}

Rat StructureTensor::at(unsigned i, unsigned j, unsigned k) const {
    auto it = c_.find({i, j, k});
    return it == c_.end() ? Rat(0) : it->second;
}

void StructureTensor::set(unsigned i, unsigned j, unsigned k, const Rat& c) {
    if (sgn(c) == 0) {
        c_.erase({i, j, k});
    } else {
        c_[{i, j, k}] = c;
    }
}

bool StructureTensor::is_antisymmetric() const {
    for (unsigned i = 0; i < size_; ++i) {
        for (unsigned j = 0; j < size_; ++j) {
            for (unsigned k = 0; k < size_; ++k) {
                if (at(i, j, k) != -at(j, i, k)) return false;
            }
        }
    }
    return true;
}

bool StructureTensor::jacobi_holds() const {
    for (unsigned i = 0; i < size_; ++i) {
        for (unsigned j = 0; j < size_; ++j) {
            for (unsigned k = 0; k < size_; ++k) {
                for (unsigned l = 0; l < size_; ++l) {
                    Rat total(0);
                    for (unsigned m = 0; m < size_; ++m) {
                        total += at(i, j, m) * at(m, k, l);
                        total += at(j, k, m) * at(m, i, l);
                        total += at(k, i, m) * at(m, j, l);
                    }
                    if (sgn(total) != 0) return false;
                }
            }
        }
    }
    return true;
}

StructureTensor closure_check(unsigned d) {
    const std::vector<Bivector> basis = bivector_basis(d);
    const unsigned m = static_cast<unsigned>(basis.size());
    // Blade -> basis position, mirroring the construction order of
    // bivector_basis.
    std::map<std::vector<unsigned>, unsigned> blade_index;
    {
        unsigned k = 0;
        for (unsigned i = 1; i <= 2 * d; ++i) {
            for (unsigned j = i + 1; j <= 2 * d; ++j) blade_index.emplace(std::vector{i, j}, k++);
        }
    }
    StructureTensor tensor(m);
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) {
            if (i == j) continue;
            CliffordElement comm =
                clifford_mul(basis[i], basis[j]) - clifford_mul(basis[j], basis[i]);
            // Solve against the w basis: a combination sum b_ij w_ij has
            // blade coordinates b_ij plus the scalar -1/2 sum of the dual
            // pair coefficients. Any other content leaves the span.
            Rat pair_scalar(0);
            for (const auto& [blade, c] : comm.terms()) {
                if (blade.size() == 2) {
                    if (blade[1] == blade[0] + d) pair_scalar += c;
                    continue;
                }
                if (!blade.empty()) {
                    throw ClosureViolation("bivector commutator left the second grade");
                }
            }
            if (comm.coeff({}) != pair_scalar * Rat(-1, 2)) {
                throw ClosureViolation("bivector commutator has a grade-0 residue");
            }
            for (const auto& [blade, c] : comm.terms()) {
                if (blade.size() == 2) tensor.set(i, j, blade_index.at(blade), c);
            }
        }
    }
    return tensor;
}

double contraction_residual(unsigned long j, unsigned long k) {
    if (j < 1) throw SizeGuard("spin label j must be at least 1");
    if (k > j) throw SizeGuard("window size k must not exceed j");
    const unsigned long n = 2 * j + 1;
    if (n > kContractionDimCap) {
        throw SizeGuard("spin matrix dimension capped at " +
                        std::to_string(kContractionDimCap));
    }
    // Ladder amplitudes between weights m_i = j - i and m_{i+1}:
    // t_i = sqrt(j(j+1) - m_{i+1} m_i), the (i, i+1) entry of J_+.
    const double jj = static_cast<double>(j);
    std::vector<double> t(n - 1);
    for (unsigned long i = 0; i + 1 < n; ++i) {
        const double m_hi = jj - static_cast<double>(i);
        const double m_lo = m_hi - 1.0;
        t[i] = std::sqrt(jj * (jj + 1.0) - m_hi * m_lo);
    }
    // X = J_x/sqrt(j), P = J_y/sqrt(j); both tridiagonal:
    //   X_{i,i+1} = X_{i+1,i} = t_i / (2 sqrt(j))
    //   P_{i,i+1} = -i t_i / (2 sqrt(j)),  P_{i+1,i} = +i t_i / (2 sqrt(j))
    const double s = 2.0 * std::sqrt(jj);
    const std::complex<double> imag(0.0, 1.0);
    auto x_at = [&](unsigned long r, unsigned long c) -> std::complex<double> {
        if (r + 1 == c) return {t[r] / s, 0.0};
        if (c + 1 == r) return {t[c] / s, 0.0};
        return {0.0, 0.0};
    };
    auto p_at = [&](unsigned long r, unsigned long c) -> std::complex<double> {
        if (r + 1 == c) return -imag * (t[r] / s);
        if (c + 1 == r) return imag * (t[c] / s);
        return {0.0, 0.0};
    };
    // Commutator entries on the top-k window, by local band sums.
    const unsigned long w = k + 1; // weights m = j .. j-k
    double max_diag = 0.0;
    for (unsigned long r = 0; r < w; ++r) {
        for (unsigned long c = 0; c < w; ++c) {
            std::complex<double> sum(0.0, 0.0);
            const unsigned long t_lo = std::min(r, c) >= 1 ? std::min(r, c) - 1 : 0;
            const unsigned long t_hi = std::min(n - 1, std::max(r, c) + 1);
            for (unsigned long t_idx = t_lo; t_idx <= t_hi; ++t_idx) {
                sum += x_at(r, t_idx) * p_at(t_idx, c) - p_at(r, t_idx) * x_at(t_idx, c);
            }
            if (r == c) {
                max_diag = std::max(max_diag, std::abs(sum - imag));
            } else if (std::abs(sum) != 0.0) {
                // The off-diagonal bands cancel exactly even in floating
                // point (commutative products); anything else is a bug.
                throw Error("commutator window is unexpectedly non-diagonal");
            }
        }
    }
    return max_diag;
}

} // namespace qset
