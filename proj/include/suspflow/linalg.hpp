#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <vector>

#include "suspflow/errors.hpp"

namespace suspflow {

using Vec = std::vector<double>;

/// Small dense real matrix, row major.  Everything in this project is n <= 8
/// on the base and a few dozen on the tangent bundle, so no attempt is made
/// at blocking or anything fancier than partial pivoting.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0.0) {}
    Mat(int rows, int cols, std::initializer_list<double> v) : Mat(rows, cols) {
        std::copy(v.begin(), v.end(), a_.begin());
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }

    int rows() const { return r_; }
    int cols() const { return c_; }
    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    Mat transpose() const {
        Mat t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat r(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const double aik = a(i, k);
                if (aik == 0.0) continue;
                for (int j = 0; j < b.c_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend Vec operator*(const Mat& a, const Vec& x) {
        Vec y(static_cast<size_t>(a.r_), 0.0);
        for (int i = 0; i < a.r_; ++i) {
            double s = 0.0;
            for (int j = 0; j < a.c_; ++j) s += a(i, j) * x[static_cast<size_t>(j)];
            y[static_cast<size_t>(i)] = s;
        }
        return y;
    }
    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat r = a;
        for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }
    friend Mat operator*(double s, const Mat& a) {
        Mat r = a;
        for (auto& v : r.a_) v *= s;
        return r;
    }

    // Entrywise max-abs norm; all the spec tolerances are stated against it.
    double norm_inf() const {
        double m = 0.0;
        for (double v : a_) m = std::max(m, std::fabs(v));
        return m;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<double> a_;
};

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }
inline Vec axpy(double alpha, const Vec& x, const Vec& y) {
    Vec r = y;
    for (size_t i = 0; i < r.size(); ++i) r[i] += alpha * x[i];
    return r;
}

/// LU with partial pivoting; throws on numerically singular input.
class Lu {
public:
    explicit Lu(Mat m) : lu_(std::move(m)), piv_(static_cast<size_t>(lu_.rows())) {
        const int n = lu_.rows();
        if (n != lu_.cols()) throw NotSquare("Lu: matrix not square");
        double scale = lu_.norm_inf();
        if (scale == 0.0) throw Error("Lu: zero matrix");
        sign_ = 1.0;
        for (int k = 0; k < n; ++k) {
            int p = k;
            for (int i = k + 1; i < n; ++i)
                if (std::fabs(lu_(i, k)) > std::fabs(lu_(p, k))) p = i;
            if (std::fabs(lu_(p, k)) < 1e-14 * scale)
                throw Error("Lu: matrix numerically singular");
            piv_[static_cast<size_t>(k)] = p;
            if (p != k) {
                for (int j = 0; j < n; ++j) std::swap(lu_(p, j), lu_(k, j));
                sign_ = -sign_;
            }
            for (int i = k + 1; i < n; ++i) {
                lu_(i, k) /= lu_(k, k);
                const double f = lu_(i, k);
                for (int j = k + 1; j < n; ++j) lu_(i, j) -= f * lu_(k, j);
            }
        }
    }

    Vec solve(Vec b) const {
        const int n = lu_.rows();
        // apply all row interchanges first, then the triangular sweeps
        for (int k = 0; k < n; ++k)
            std::swap(b[static_cast<size_t>(k)], b[piv_[static_cast<size_t>(k)]]);
        for (int k = 0; k < n; ++k)
            for (int i = k + 1; i < n; ++i) b[static_cast<size_t>(i)] -= lu_(i, k) * b[static_cast<size_t>(k)];
        for (int k = n - 1; k >= 0; --k) {
            b[static_cast<size_t>(k)] /= lu_(k, k);
            for (int i = 0; i < k; ++i) b[static_cast<size_t>(i)] -= lu_(i, k) * b[static_cast<size_t>(k)];
        }
        return b;
    }

    Mat solve(const Mat& b) const {
        Mat x(b.rows(), b.cols());
        for (int j = 0; j < b.cols(); ++j) {
            Vec col(static_cast<size_t>(b.rows()));
            for (int i = 0; i < b.rows(); ++i) col[static_cast<size_t>(i)] = b(i, j);
            col = solve(std::move(col));
            for (int i = 0; i < b.rows(); ++i) x(i, j) = col[static_cast<size_t>(i)];
        }
        return x;
    }

    double det() const {
        double d = sign_;
        for (int i = 0; i < lu_.rows(); ++i) d *= lu_(i, i);
        return d;
    }

private:
    Mat lu_;
    std::vector<int> piv_;
    double sign_ = 1.0;
};

inline Mat inverse(const Mat& m) { return Lu(m).solve(Mat::identity(m.rows())); }
inline double det(const Mat& m) { return Lu(m).det(); }

/// Cholesky factor L (lower), A = L L^T.  Throws if A is not positive definite.
inline Mat cholesky(const Mat& a, double tol = 0.0) {
    const int n = a.rows();
    Mat l(n, n);
    for (int j = 0; j < n; ++j) {
        double d = a(j, j);
        for (int k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (d <= tol) throw Error("cholesky: matrix not positive definite");
        l(j, j) = std::sqrt(d);
        for (int i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
            l(i, j) = s / l(j, j);
        }
    }
    return l;
}

inline bool is_positive_definite(const Mat& a) {
    try {
        cholesky(a);
        return true;
    } catch (const Error&) {
        return false;
    }
}

/// Rank of a rectangular matrix by Gaussian elimination with full pivoting,
/// entries below tol * max|entry| treated as zero.
inline int rank_with_tolerance(Mat m, double rel_tol) {
    const int r = m.rows(), c = m.cols();
    const double scale = m.norm_inf();
    if (scale == 0.0) return 0;
    const double tol = rel_tol * scale;
    int rank = 0;
    std::vector<bool> used_row(static_cast<size_t>(r), false);
    for (int col = 0; col < c; ++col) {
        int p = -1;
        double best = tol;
        for (int i = 0; i < r; ++i)
            if (!used_row[static_cast<size_t>(i)] && std::fabs(m(i, col)) > best) {
                best = std::fabs(m(i, col));
                p = i;
            }
        if (p < 0) continue;
        used_row[static_cast<size_t>(p)] = true;
        ++rank;
        for (int i = 0; i < r; ++i) {
            if (i == p || m(i, col) == 0.0) continue;
            const double f = m(i, col) / m(p, col);
            for (int j = 0; j < c; ++j) m(i, j) -= f * m(p, j);
        }
    }
    return rank;
}

/// Singular values of an m x n matrix (m, n small) via one-sided Jacobi.
/// Returned descending.
inline Vec singular_values(Mat a) {
    const int m = a.rows(), n = a.cols();
    // work on columns of a; rotate until column pairs are orthogonal
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool converged = true;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = 0, aqq = 0, apq = 0;
                for (int i = 0; i < m; ++i) {
                    app += a(i, p) * a(i, p);
                    aqq += a(i, q) * a(i, q);
                    apq += a(i, p) * a(i, q);
                }
                if (std::fabs(apq) <= 1e-30 + 1e-15 * std::sqrt(app * aqq)) continue;
                converged = false;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1.0 + tau * tau));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (int i = 0; i < m; ++i) {
                    const double aip = a(i, p), aiq = a(i, q);
                    a(i, p) = cs * aip - sn * aiq;
                    a(i, q) = sn * aip + cs * aiq;
                }
            }
        }
        if (converged) break;
    }
    Vec sv(static_cast<size_t>(n), 0.0);
    for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int i = 0; i < m; ++i) s += a(i, j) * a(i, j);
        sv[static_cast<size_t>(j)] = std::sqrt(s);
    }
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

}  // namespace suspflow
