#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "suspflow/intmat.hpp"
#include "suspflow/polyroots.hpp"

namespace suspflow {

/// The suspension datum: A in SL(n, Z).  Immutable after validation.
class MonodromyMatrix {
public:
    static MonodromyMatrix validate(const std::vector<std::vector<long long>>& entries,
                                    int max_n = 8) {
        const int n = static_cast<int>(entries.size());
        if (n < 1) throw NotSquare("monodromy: empty matrix");
        if (n > max_n) throw Error("monodromy: dimension exceeds configured cap");
        IntMat m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(entries[static_cast<size_t>(i)].size()) != n)
                throw NotSquare("monodromy: matrix not square");
            for (int j = 0; j < n; ++j) m(i, j) = entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        return validate(m);
    }

    static MonodromyMatrix validate(IntMat m) {
        const Int d = det_exact(m);
        if (d != 1) throw NotUnimodular("monodromy: det = " + d.str() + ", expected 1");
        return MonodromyMatrix(std::move(m));
    }

    int n() const { return m_.n(); }
    const IntMat& entries() const { return m_; }
    const Int& operator()(int i, int j) const { return m_(i, j); }
    Mat to_real() const { return m_.to_real(); }

    friend bool operator==(const MonodromyMatrix& a, const MonodromyMatrix& b) {
        return a.m_ == b.m_;
    }

private:
    explicit MonodromyMatrix(IntMat m) : m_(std::move(m)) {}
    IntMat m_;
};

inline MonodromyMatrix validate_monodromy(const std::vector<std::vector<long long>>& entries,
                                          int max_n = 8) {
    return MonodromyMatrix::validate(entries, max_n);
}

/// Dual action on momenta: (A^T)^{-1}, exact integer entries.
/// Satisfies A^T * dual = E, hence the symplectic form is preserved.
inline MonodromyMatrix dual_action(const MonodromyMatrix& a) {
    return MonodromyMatrix::validate(inverse_unimodular(a.entries().transpose()));
}

/// Real eigenvalues of the exact characteristic polynomial, with exact
/// algebraic multiplicities from the square-free decomposition.  Roots are
/// polished to full double precision.
inline std::vector<std::pair<double, int>> real_eigenvalues_with_multiplicity(const IntMat& m) {
    const qpoly::Poly cp = qpoly::from_ints(char_poly(m));
    std::vector<std::pair<double, int>> roots;
    for (const auto& [factor, mult] : qpoly::square_free_decomposition(cp)) {
        for (double r : qpoly::real_roots_square_free(factor)) roots.emplace_back(r, mult);
    }
    // repeated-eigenvalue clustering, threshold 1e-7 on polished roots
    std::sort(roots.begin(), roots.end());
    std::vector<std::pair<double, int>> merged;
    for (const auto& [r, mult] : roots) {
        if (!merged.empty() && std::fabs(merged.back().first - r) < 1e-7)
            merged.back().second += mult;
        else
            merged.emplace_back(r, mult);
    }
    return merged;
}

/// log of the spectral radius; the entropy bound of the suspension flow.
inline double entropy_lower_bound(const MonodromyMatrix& a) {
    const qpoly::Poly cp = qpoly::from_ints(char_poly(a.entries()));
    double max_mod = 0.0;
    for (const auto& [factor, mult] : qpoly::square_free_decomposition(cp)) {
        (void)mult;
        const auto real_roots = qpoly::real_roots_square_free(factor);
        for (double r : real_roots) max_mod = std::max(max_mod, std::fabs(r));
        if (static_cast<int>(real_roots.size()) < qpoly::degree(factor)) {
            for (const auto& z : qpoly::complex_roots_square_free(factor))
                max_mod = std::max(max_mod, std::abs(z));
        }
    }
    return std::max(0.0, std::log(max_mod));
}

}  // namespace suspflow
