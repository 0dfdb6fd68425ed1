#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace crp {

using Rational = mpq_class;

/// Gaussian rational a + b*i with arbitrary-precision rational a, b.
/// The coefficient field of the whole engine; no floating point anywhere.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
    explicit Scalar(Rational r) : re(std::move(r)), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    /// i^k with k reduced mod 4 (negative k allowed).
    static Scalar iPow(long k) {
        long m = ((k % 4) + 4) % 4;
        switch (m) {
            case 0: return Scalar(1);
            case 1: return Scalar::i();
            case 2: return Scalar(-1);
            default: return Scalar(Rational(0), Rational(-1));
        }
    }

    static Scalar ratio(long num, long den) {
        if (den == 0) throw std::invalid_argument("Scalar::ratio: zero denominator");
        Rational r(num, den);
        r.canonicalize();
        return Scalar(r);
    }

    bool isZero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool isReal() const { return sgn(im) == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (sgn(n) == 0) throw std::domain_error("Scalar: division by zero");
        return Scalar((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return cmp(a.re, b.re) == 0 && cmp(a.im, b.im) == 0;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Exact text form, e.g. "0", "3/2", "-i", "1/2-3i".
    std::string str() const;
};

Scalar factorialScalar(long k);
Rational factorialRational(long k);

/// binom(a, b) over the integers; 0 when b < 0, b > a, or a < 0.
long binomial(long a, long b);

}  // namespace crp
