#pragma once

#include <vector>

#include "suspflow/linalg.hpp"
#include "suspflow/rational.hpp"

namespace suspflow {

/// Square integer matrix with exact arithmetic (arbitrary precision entries).
class IntMat {
public:
    IntMat() = default;
    explicit IntMat(int n) : n_(n), a_(static_cast<size_t>(n) * n, Int(0)) {}
    IntMat(int n, std::initializer_list<long long> v) : IntMat(n) {
        size_t i = 0;
        for (long long x : v) a_[i++] = x;
    }
    static IntMat identity(int n) {
        IntMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int n() const { return n_; }
    Int& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Int& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    IntMat transpose() const {
        IntMat t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntMat operator*(const IntMat& a, const IntMat& b) {
        IntMat r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                if (a(i, k) == 0) continue;
                for (int j = 0; j < a.n_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    friend bool operator==(const IntMat& a, const IntMat& b) {
        return a.n_ == b.n_ && a.a_ == b.a_;
    }

    Mat to_real() const {
        Mat m(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(i, j) = to_double((*this)(i, j));
        return m;
    }

private:
    int n_ = 0;
    std::vector<Int> a_;
};

/// Exact determinant by fraction-free Bareiss elimination.
inline Int det_exact(const IntMat& m) {
    const int n = m.n();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);

    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) { p = i; break; }
            if (p < 0) return 0;
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(p)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int v = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                        a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v / prev;  // division is exact (Bareiss)
            }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    return sign * a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

/// Exact inverse of a matrix with det = +-1 via the adjugate.
inline IntMat inverse_unimodular(const IntMat& m) {
    const int n = m.n();
    const Int d = det_exact(m);
    if (d != 1 && d != -1) throw NotUnimodular("inverse_unimodular: |det| != 1");
    IntMat inv(n);
    if (n == 1) {
        inv(0, 0) = d;  // 1/d = d for d = +-1
        return inv;
    }
    IntMat minor(n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int mi = 0;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                int mj = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mi, mj) = m(r, c);
                    ++mj;
                }
                ++mi;
            }
            Int cof = det_exact(minor);
            if ((i + j) % 2 != 0) cof = -cof;
            inv(j, i) = cof * d;  // adj(m)/det with det = +-1
        }
    return inv;
}

/// Characteristic polynomial det(xE - M), monic, coefficients ascending.
/// Faddeev-LeVerrier over exact rationals; the result is integral.
inline std::vector<Int> char_poly(const IntMat& m) {
    const int n = m.n();
    std::vector<std::vector<Rational>> M(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    std::vector<Rational> c(static_cast<size_t>(n) + 1, Rational(0));
    c[static_cast<size_t>(n)] = 1;
    // M_0 = 0, then M_k = A M_{k-1} + c_{n-k+1} E, c_{n-k} = -tr(A M_k)/k
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> AM(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (m(i, l) == 0) continue;
                const Rational ail(m(i, l));
                for (int j = 0; j < n; ++j) AM[static_cast<size_t>(i)][static_cast<size_t>(j)] += ail * M[static_cast<size_t>(l)][static_cast<size_t>(j)];
            }
        for (int i = 0; i < n; ++i) AM[static_cast<size_t>(i)][static_cast<size_t>(i)] += c[static_cast<size_t>(n - k + 1)];
        Rational tr(0);
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (m(i, l) != 0) tr += Rational(m(i, l)) * AM[static_cast<size_t>(l)][static_cast<size_t>(i)];
        c[static_cast<size_t>(n - k)] = -tr / k;
        M = std::move(AM);
    }
    std::vector<Int> out(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        const Rational& q = c[static_cast<size_t>(i)];
        if (boost::multiprecision::denominator(q) != 1)
            throw Error("char_poly: non-integral coefficient");
        out[static_cast<size_t>(i)] = boost::multiprecision::numerator(q);
    }
    return out;
}

}  // namespace suspflow
