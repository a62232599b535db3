#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "suspflow/monodromy.hpp"

namespace suspflow {

enum class SpectrumKind { AllReal, ComplexUnitCircle, Mixed };

inline const char* to_string(SpectrumKind k) {
    switch (k) {
        case SpectrumKind::AllReal: return "AllReal";
        case SpectrumKind::ComplexUnitCircle: return "ComplexUnitCircle";
        case SpectrumKind::Mixed: return "Mixed";
    }
    return "?";
}

/// One slot of the Jordan structure of the dual action: either a 1x1
/// diagonal entry (a "q" variable) or a chain of size >= 2 whose first
/// variable scales purely under the action.
struct JordanBlock {
    std::complex<double> eigenvalue;
    int size = 1;
};

struct SpectralData {
    std::vector<std::complex<double>> eigenvalues;  // of A, descending modulus
    SpectrumKind kind = SpectrumKind::AllReal;
    std::vector<JordanBlock> jordan_blocks;  // of the dual action; diagonal slots first
    Mat basis;          // P: dual action in Jordan coordinates pi = P^{-1} p
    Mat basis_inverse;  // P^{-1}
    int diag_count = 0;  // number of size-1 slots (the paper's l)

    // Jordan form assembled per the chain convention: within a chain the
    // first variable scales purely, so the ones sit on the subdiagonal.
    Mat assembled_jordan() const {
        int n = 0;
        for (const auto& b : jordan_blocks) n += b.size;
        Mat j(n, n);
        int off = 0;
        for (const auto& b : jordan_blocks) {
            for (int m = 0; m < b.size; ++m) {
                j(off + m, off + m) = b.eigenvalue.real();
                if (m + 1 < b.size) j(off + m + 1, off + m) = 1.0;
            }
            off += b.size;
        }
        return j;
    }
};

namespace detail {

/// Null space basis of M with entries below rel_tol * scale treated as zero.
inline std::vector<Vec> nullspace_basis(Mat m, double rel_tol) {
    const int rows = m.rows(), cols = m.cols();
    const double scale = std::max(m.norm_inf(), 1.0);
    const double tol = rel_tol * scale;

    std::vector<int> pivot_row_of_col(static_cast<size_t>(cols), -1);
    std::vector<bool> row_used(static_cast<size_t>(rows), false);
    for (int c = 0; c < cols; ++c) {
        int p = -1;
        double best = tol;
        for (int i = 0; i < rows; ++i)
            if (!row_used[static_cast<size_t>(i)] && std::fabs(m(i, c)) > best) {
                best = std::fabs(m(i, c));
                p = i;
            }
        if (p < 0) continue;
        row_used[static_cast<size_t>(p)] = true;
        pivot_row_of_col[static_cast<size_t>(c)] = p;
        const double inv = 1.0 / m(p, c);
        for (int j = 0; j < cols; ++j) m(p, j) *= inv;
        m(p, c) = 1.0;
        for (int i = 0; i < rows; ++i) {
            if (i == p || m(i, c) == 0.0) continue;
            const double f = m(i, c);
            for (int j = 0; j < cols; ++j) m(i, j) -= f * m(p, j);
            m(i, c) = 0.0;
        }
    }

    std::vector<Vec> basis;
    for (int f = 0; f < cols; ++f) {
        if (pivot_row_of_col[static_cast<size_t>(f)] >= 0) continue;
        Vec v(static_cast<size_t>(cols), 0.0);
        v[static_cast<size_t>(f)] = 1.0;
        for (int c = 0; c < cols; ++c) {
            const int pr = pivot_row_of_col[static_cast<size_t>(c)];
            if (pr >= 0) v[static_cast<size_t>(c)] = -m(pr, f);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Mat stack_rows(const std::vector<Vec>& rows, int cols) {
    Mat m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

struct JordanChain {
    double eigenvalue = 0.0;
    std::vector<Vec> vectors;  // [top generalized, ..., eigenvector]
};

/// Jordan chains of a real matrix with known real eigenvalues and exact
/// algebraic multiplicities.  Rank decisions use rel_tol (1e-9 by default
/// per the module contract).
inline std::vector<JordanChain> jordan_chains(const Mat& a,
                                              const std::vector<std::pair<double, int>>& eigs,
                                              double rel_tol = 1e-9) {
    const int n = a.rows();
    std::vector<JordanChain> chains;
    for (const auto& [nu, mult] : eigs) {
        Mat m = a;
        for (int i = 0; i < n; ++i) m(i, i) -= nu;

        std::vector<std::vector<Vec>> kernels;  // kernels[j] = basis of Ker M^{j+1}
        Mat power = m;
        while (true) {
            kernels.push_back(nullspace_basis(power, rel_tol));
            if (static_cast<int>(kernels.back().size()) >= mult) break;
            if (static_cast<int>(kernels.size()) > n)
                throw Error("jordan_chains: kernel filtration failed to saturate");
            power = power * m;
        }
        const int s = static_cast<int>(kernels.size());  // max chain length

        std::vector<JordanChain> local;
        for (int j = s; j >= 1; --j) {
            // rows already accounting for level j: Ker M^{j-1} plus the
            // level-j vectors of chains longer than j
            std::vector<Vec> spanned;
            if (j >= 2) spanned = kernels[static_cast<size_t>(j - 2)];
            for (const auto& ch : local) {
                const int len = static_cast<int>(ch.vectors.size());
                if (len > j) spanned.push_back(ch.vectors[static_cast<size_t>(len - j)]);
            }
            int have_rank = spanned.empty() ? 0 : rank_with_tolerance(stack_rows(spanned, n), rel_tol);
            for (const auto& cand : kernels[static_cast<size_t>(j - 1)]) {
                spanned.push_back(cand);
                const int r = rank_with_tolerance(stack_rows(spanned, n), rel_tol);
                if (r <= have_rank) {
                    spanned.pop_back();
                    continue;
                }
                have_rank = r;
                JordanChain ch;
                ch.eigenvalue = nu;
                Vec v = cand;
                for (int step = 0; step < j; ++step) {
                    ch.vectors.push_back(v);
                    if (step + 1 < j) v = m * v;
                }
                local.push_back(std::move(ch));
            }
        }

        int total = 0;
        for (const auto& ch : local) total += static_cast<int>(ch.vectors.size());
        if (total != mult)
            throw Error("jordan_chains: chain sizes do not sum to the multiplicity");

        // normalize so the closing eigenvector has unit norm, largest entry positive
        for (auto& ch : local) {
            const Vec& e = ch.vectors.back();
            int imax = 0;
            for (int i = 1; i < n; ++i)
                if (std::fabs(e[static_cast<size_t>(i)]) > std::fabs(e[static_cast<size_t>(imax)])) imax = i;
            const double s0 = norm2(e) * (e[static_cast<size_t>(imax)] < 0 ? -1.0 : 1.0);
            for (auto& v : ch.vectors)
                for (auto& x : v) x /= s0;
        }
        for (auto& ch : local) chains.push_back(std::move(ch));
    }
    return chains;
}

}  // namespace detail

/// Spectral and Jordan analysis per the construction: eigenvalues of A from
/// the exact characteristic polynomial, Jordan data for the dual action.
/// Throws MixedSpectrumUnsupported when n > 2 and the spectrum is neither
/// all-real nor the n = 2 rotation case.
inline SpectralData spectrum(const MonodromyMatrix& a) {
    const int n = a.n();
    SpectralData out;

    const auto real_eigs_a = real_eigenvalues_with_multiplicity(a.entries());
    int real_total = 0;
    for (const auto& [r, mult] : real_eigs_a) real_total += mult;

    if (real_total == n) {
        out.kind = SpectrumKind::AllReal;
        for (const auto& [r, mult] : real_eigs_a)
            for (int i = 0; i < mult; ++i) out.eigenvalues.emplace_back(r, 0.0);
        std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
                  [](const std::complex<double>& x, const std::complex<double>& y) {
                      if (std::abs(x) != std::abs(y)) return std::abs(x) > std::abs(y);
                      return x.real() > y.real();
                  });

        const MonodromyMatrix dual = dual_action(a);
        auto dual_eigs = real_eigenvalues_with_multiplicity(dual.entries());
        std::sort(dual_eigs.begin(), dual_eigs.end(), [](const auto& x, const auto& y) {
            if (std::fabs(x.first) != std::fabs(y.first)) return std::fabs(x.first) > std::fabs(y.first);
            return x.first > y.first;
        });
        auto chains = detail::jordan_chains(dual.to_real(), dual_eigs);

        std::stable_sort(chains.begin(), chains.end(), [](const auto& x, const auto& y) {
            const bool xd = x.vectors.size() == 1, yd = y.vectors.size() == 1;
            if (xd != yd) return xd;  // diagonal slots first
            if (std::fabs(x.eigenvalue) != std::fabs(y.eigenvalue))
                return std::fabs(x.eigenvalue) > std::fabs(y.eigenvalue);
            if (x.eigenvalue != y.eigenvalue) return x.eigenvalue > y.eigenvalue;
            return x.vectors.size() > y.vectors.size();
        });

        out.basis = Mat(n, n);
        int col = 0;
        for (const auto& ch : chains) {
            const int size = static_cast<int>(ch.vectors.size());
            out.jordan_blocks.push_back({{ch.eigenvalue, 0.0}, size});
            if (size == 1) ++out.diag_count;
            for (const auto& v : ch.vectors) {
                for (int i = 0; i < n; ++i) out.basis(i, col) = v[static_cast<size_t>(i)];
                ++col;
            }
        }
        out.basis_inverse = inverse(out.basis);
        return out;
    }

    if (n == 2 && real_total == 0) {
        out.kind = SpectrumKind::ComplexUnitCircle;
        const double tr = to_double(Int(a(0, 0) + a(1, 1)));
        const double im = std::sqrt(std::max(0.0, 4.0 - tr * tr)) / 2.0;
        out.eigenvalues = {{tr / 2.0, im}, {tr / 2.0, -im}};

        const MonodromyMatrix dual = dual_action(a);
        // tr(dual) = tr((A^T)^{-1}) = tr(A) for 2x2, det = 1
        const Mat d = dual.to_real();
        out.jordan_blocks = {{{tr / 2.0, im}, 1}, {{tr / 2.0, -im}, 1}};
        // real eigenvector pair w = u + i v for lambda = a0 + i b0, basis [u v]
        if (d(0, 1) == 0.0) throw Error("spectrum: unexpected triangular dual action");
        const double a0 = tr / 2.0, b0 = im;
        Vec u = {d(0, 1), a0 - d(0, 0)};
        Vec v = {0.0, b0};
        out.basis = Mat(2, 2, {u[0], v[0], u[1], v[1]});
        out.basis_inverse = inverse(out.basis);
        out.diag_count = 0;
        return out;
    }

    throw MixedSpectrumUnsupported(
        "spectrum: mixed real/complex spectrum in dimension > 2 is outside the supported cases");
}

}  // namespace suspflow
