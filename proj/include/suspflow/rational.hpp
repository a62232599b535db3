#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "suspflow/errors.hpp"

namespace suspflow {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

// Canonical "a" or "a/b" form, b > 0.
inline std::string rational_str(const Rational& q) {
    const Int num = boost::multiprecision::numerator(q);
    const Int den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Dense univariate polynomial over the rationals, used for the formal
/// parameter lambda that the Jordan chain action carries around.
/// Coefficients are stored ascending; the zero polynomial has no terms.
class PolyLambda {
public:
    PolyLambda() = default;
    PolyLambda(const Rational& c) {  // NOLINT: implicit constant lift
        if (c != 0) coeff_.push_back(c);
    }
    PolyLambda(int c) : PolyLambda(Rational(c)) {}  // NOLINT

    static PolyLambda lambda_pow(int k, const Rational& scale = 1) {
        PolyLambda p;
        if (scale == 0) return p;
        p.coeff_.assign(static_cast<size_t>(k) + 1, Rational(0));
        p.coeff_.back() = scale;
        return p;
    }

    bool is_zero() const { return coeff_.empty(); }
    int degree() const { return coeff_.empty() ? -1 : static_cast<int>(coeff_.size()) - 1; }

    const Rational& operator[](int k) const {
        static const Rational kZero(0);
        if (k < 0 || k >= static_cast<int>(coeff_.size())) return kZero;
        return coeff_[static_cast<size_t>(k)];
    }

    // Constant-term view; exact only when degree <= 0.
    Rational constant() const { return coeff_.empty() ? Rational(0) : coeff_[0]; }

    PolyLambda& operator+=(const PolyLambda& o) {
        if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size(), Rational(0));
        for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
        trim();
        return *this;
    }
    PolyLambda& operator-=(const PolyLambda& o) {
        if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size(), Rational(0));
        for (size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
        trim();
        return *this;
    }
    friend PolyLambda operator+(PolyLambda a, const PolyLambda& b) { return a += b; }
    friend PolyLambda operator-(PolyLambda a, const PolyLambda& b) { return a -= b; }
    friend PolyLambda operator-(const PolyLambda& a) {
        PolyLambda r = a;
        for (auto& c : r.coeff_) c = -c;
        return r;
    }
    friend PolyLambda operator*(const PolyLambda& a, const PolyLambda& b) {
        PolyLambda r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeff_.assign(a.coeff_.size() + b.coeff_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeff_.size(); ++i)
            for (size_t j = 0; j < b.coeff_.size(); ++j)
                r.coeff_[i + j] += a.coeff_[i] * b.coeff_[j];
        r.trim();
        return r;
    }
    friend bool operator==(const PolyLambda& a, const PolyLambda& b) {
        return a.coeff_ == b.coeff_;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = (*this)[k];
            if (c == 0) continue;
            if (!s.empty()) s += " + ";
            if (k == 0) {
                s += rational_str(c);
            } else {
                if (c != 1) s += rational_str(c) + "*";
                s += (k == 1) ? "L" : "L^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
    }
    std::vector<Rational> coeff_;
};

/// Element of Q(i*sqrt(D)), D a positive square-free integer: re + im*i*sqrt(D).
/// Enough field arithmetic to carry eigenvalues of finite-order 2x2 integer
/// matrices (D is 1 or 3 in practice) through exact polynomial constructions.
struct QuadComplex {
    Rational re{0};   // rational part
    Rational im{0};   // coefficient of i*sqrt(D)
    int D{1};

    QuadComplex() = default;
    QuadComplex(Rational r, Rational i, int d) : re(std::move(r)), im(std::move(i)), D(d) {}
    static QuadComplex from_rational(const Rational& r, int d) { return {r, 0, d}; }

    QuadComplex conj() const { return {re, -im, D}; }
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    friend QuadComplex operator+(const QuadComplex& a, const QuadComplex& b) {
        return {a.re + b.re, a.im + b.im, a.D};
    }
    friend QuadComplex operator-(const QuadComplex& a, const QuadComplex& b) {
        return {a.re - b.re, a.im - b.im, a.D};
    }
    friend QuadComplex operator*(const QuadComplex& a, const QuadComplex& b) {
        // (x + y i sqrt(D)) (u + v i sqrt(D)) = xu - yvD + (xv + yu) i sqrt(D)
        return {a.re * b.re - a.im * b.im * a.D, a.re * b.im + a.im * b.re, a.D};
    }
    QuadComplex pow(int k) const {
        QuadComplex r{1, 0, D};
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }
    friend bool operator==(const QuadComplex& a, const QuadComplex& b) {
        return a.re == b.re && a.im == b.im && a.D == b.D;
    }
};

}  // namespace suspflow
