#pragma once

#include <complex>
#include <string>

#include <gmpxx.h>

namespace hardy {

using Rational = mpq_class;
using Integer = mpz_class;

/// Gaussian rational re + i*im.
struct ExactComplex {
    Rational re;
    Rational im;

    ExactComplex() = default;
    ExactComplex(Rational r) : re(std::move(r)) {}  // NOLINT: implicit on purpose
    ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ExactComplex(long v) : re(v) {}  // NOLINT

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    Rational modulus_squared() const { return re * re + im * im; }
    ExactComplex conj() const { return {re, -im}; }
    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    ExactComplex& operator+=(const ExactComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        if (a.is_real() && b.is_real()) return ExactComplex(Rational(a.re * b.re));
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Exact binary value of a finite double.
Rational rational_from_double(double v);
/// Accepts "p/q", "p", or a decimal literal such as "-0.125" (taken exactly as written).
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

/// Rational power with integer exponent (negative allowed for nonzero base).
Rational pow(const Rational& base, long exponent);
/// Natural logarithm of a positive rational, robust to magnitudes beyond double range.
double log_rational(const Rational& r);
Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);

/// Is r = s^2 for some rational s >= 0? On success writes the root.
bool exact_sqrt(const Rational& r, Rational& root);

} // namespace hardy
