#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "suspflow/rational.hpp"

namespace suspflow {

/// Exact univariate polynomials over Q, coefficients ascending.  Used for
/// characteristic polynomials (degree <= 8 at desk scale), so plain Euclid
/// and Sturm sequences are perfectly adequate.
namespace qpoly {

using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly from_ints(const std::vector<Int>& v) {
    Poly p(v.size());
    for (size_t i = 0; i < v.size(); ++i) p[i] = Rational(v[i]);
    return p;
}

inline Poly derivative(const Poly& p) {
    Poly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    trim(d);
    return d;
}

inline Rational eval(const Poly& p, const Rational& x) {
    Rational v(0);
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}
inline double eval(const Poly& p, double x) {
    double v = 0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + to_double(p[i]);
    return v;
}

// quotient/remainder of a by b
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    Poly q;
    trim(a);
    if (b.empty()) throw Error("qpoly: division by zero polynomial");
    const int db = degree(b);
    while (degree(a) >= db && !a.empty()) {
        const int shift = degree(a) - db;
        const Rational f = a.back() / b.back();
        if (q.size() < static_cast<size_t>(shift + 1)) q.resize(static_cast<size_t>(shift + 1), Rational(0));
        q[static_cast<size_t>(shift)] += f;
        for (int i = 0; i <= db; ++i) a[static_cast<size_t>(i + shift)] -= f * b[static_cast<size_t>(i)];
        trim(a);
    }
    trim(q);
    return {q, a};
}

inline Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {  // make monic
        const Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

/// Square-free part p / gcd(p, p').
inline Poly square_free(const Poly& p) {
    Poly g = gcd(p, derivative(p));
    if (degree(g) <= 0) return p;
    return divmod(p, g).first;
}

/// Number of sign changes of the Sturm sequence at x; root counting on
/// intervals is sturm(a) - sturm(b).
class Sturm {
public:
    explicit Sturm(const Poly& p) {
        seq_.push_back(p);
        seq_.push_back(derivative(p));
        trim(seq_.back());
        while (degree(seq_.back()) > 0) {
            Poly r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
            for (auto& c : r) c = -c;
            trim(r);
            if (r.empty()) break;
            seq_.push_back(std::move(r));
        }
    }

    int sign_changes(const Rational& x) const {
        int changes = 0, prev = 0;
        for (const auto& p : seq_) {
            const Rational v = eval(p, x);
            const int s = (v > 0) - (v < 0);
            if (s != 0) {
                if (prev != 0 && s != prev) ++changes;
                prev = s;
            }
        }
        return changes;
    }

    int roots_in(const Rational& a, const Rational& b) const {
        return sign_changes(a) - sign_changes(b);
    }

private:
    std::vector<Poly> seq_;
};

/// Cauchy bound on the modulus of any root (monic or not).
inline Rational root_bound(const Poly& p) {
    Rational b(0);
    const Rational lead = p.back();
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Rational q = abs(p[i] / lead);
        if (q > b) b = q;
    }
    return b + 1;
}

/// All real roots of a square-free polynomial, isolated with a Sturm
/// sequence and polished by bisection + Newton in double to ~1e-15 relative.
inline std::vector<double> real_roots_square_free(const Poly& p) {
    std::vector<double> roots;
    if (degree(p) <= 0) return roots;
    Sturm sturm(p);
    const Rational bound = root_bound(p);

    struct Interval { Rational lo, hi; int count; };
    std::vector<Interval> stack{{-bound, bound, sturm.roots_in(-bound, bound)}};
    std::vector<std::pair<Rational, Rational>> isolated;
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        if (iv.count == 0) continue;
        if (iv.count == 1) {
            isolated.emplace_back(iv.lo, iv.hi);
            continue;
        }
        const Rational mid = (iv.lo + iv.hi) / 2;
        if (eval(p, mid) == 0) {
            // exact rational root at the midpoint: shrink around it
            roots.push_back(to_double(mid));
            const Rational eps = (iv.hi - iv.lo) / 1024;
            stack.push_back({iv.lo, mid - eps, sturm.roots_in(iv.lo, mid - eps)});
            stack.push_back({mid + eps, iv.hi, sturm.roots_in(mid + eps, iv.hi)});
            continue;
        }
        stack.push_back({iv.lo, mid, sturm.roots_in(iv.lo, mid)});
        stack.push_back({mid, iv.hi, sturm.roots_in(mid, iv.hi)});
    }

    for (auto& [lo_q, hi_q] : isolated) {
        // rational bisection until the bracket is tight enough for Newton
        Rational lo = lo_q, hi = hi_q;
        const int slo = (eval(p, lo) > 0) ? 1 : -1;
        for (int it = 0; it < 80 && to_double(hi - lo) > 1e-12 * (1 + std::fabs(to_double(lo))); ++it) {
            const Rational mid = (lo + hi) / 2;
            const Rational v = eval(p, mid);
            if (v == 0) { lo = hi = mid; break; }
            if (((v > 0) ? 1 : -1) == slo) lo = mid; else hi = mid;
        }
        double x = 0.5 * (to_double(lo) + to_double(hi));
        const Poly dp = derivative(p);
        for (int it = 0; it < 50; ++it) {
            const double f = eval(p, x);
            const double df = eval(dp, x);
            if (df == 0.0) break;
            const double step = f / df;
            x -= step;
            if (std::fabs(step) <= 1e-16 * (1.0 + std::fabs(x))) break;
        }
        roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// All complex roots of a square-free polynomial by Durand-Kerner iteration.
/// Only used where moduli matter (entropy of a general spectrum); the real
/// and n = 2 rotation paths use the exact machinery above.
inline std::vector<std::complex<double>> complex_roots_square_free(const Poly& p) {
    const int deg = degree(p);
    std::vector<std::complex<double>> z(static_cast<size_t>(deg));
    if (deg <= 0) return z;
    const double r = to_double(root_bound(p));
    for (int i = 0; i < deg; ++i)
        z[static_cast<size_t>(i)] = std::polar(0.5 * r + 0.1, 0.7 + 2.0 * M_PI * i / deg);
    std::vector<double> cd(p.size());
    for (size_t i = 0; i < p.size(); ++i) cd[i] = to_double(p[i]);
    for (int it = 0; it < 500; ++it) {
        double delta = 0.0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> num(cd.back(), 0.0);
            for (size_t k = cd.size() - 1; k-- > 0;) num = num * z[static_cast<size_t>(i)] + cd[k];
            std::complex<double> den(cd.back(), 0.0);
            for (int j = 0; j < deg; ++j)
                if (j != i) den *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            const std::complex<double> step = num / den;
            z[static_cast<size_t>(i)] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-15 * (1.0 + r)) break;
    }
    return z;
}

/// Multiplicity structure: returns pairs (square-free factor, multiplicity)
/// via Yun's algorithm.
inline std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    Poly a = p;
    trim(a);
    if (degree(a) <= 0) return out;
    Poly g = gcd(a, derivative(a));
    if (degree(g) == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    Poly w = divmod(a, g).first;
    Poly y = divmod(derivative(a), g).first;
    int i = 1;
    while (true) {
        Poly dw = derivative(w);
        Poly z = y;
        for (size_t k = 0; k < dw.size(); ++k) {
            if (z.size() <= k) z.resize(k + 1, Rational(0));
            z[k] -= dw[k];
        }
        trim(z);
        if (z.empty()) {
            if (degree(w) > 0) out.emplace_back(w, i);
            break;
        }
        Poly f = gcd(w, z);
        if (degree(f) > 0) out.emplace_back(f, i);
        w = divmod(w, f).first;
        y = divmod(z, f).first;
        ++i;
    }
    return out;
}

}  // namespace qpoly
}  // namespace suspflow
