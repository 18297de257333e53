#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dia {

/// Arbitrary-precision rational, always in lowest terms.
using Rat = mpq_class;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses "p", "p/q" or "-p/q". Throws parse_error on malformed input.
Rat rat_from_string(const std::string& s);

/// Lowest-terms representation: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

int sgn(const Rat& q);
bool is_integer(const Rat& q);
bool is_positive_integer(const Rat& q);

/// Exact n!.
Rat factorial(unsigned long n);

/// Generalized binomial coefficient C(x, h) = x(x-1)...(x-h+1)/h! for rational x.
Rat binomial(const Rat& x, unsigned long h);

/// Rising factorial x(x+1)...(x+h-1); empty product for h = 0.
Rat rising_factorial(const Rat& x, unsigned long h);

/// Falling factorial x(x-1)...(x-h+1); empty product for h = 0.
Rat falling_factorial(const Rat& x, unsigned long h);

Rat pow_int(const Rat& x, long e);

/// Gaussian rational: re + im*i with exact rational parts.
/// The coefficient field of every series and polynomial in this library.
struct GRat {
    Rat re, im;

    GRat() : re(0), im(0) {}
    GRat(long n) : re(n), im(0) {}
    GRat(const Rat& r) : re(r), im(0) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    GRat conj() const { return GRat(re, Rat(-im)); }

    GRat operator-() const { return GRat(Rat(-re), Rat(-im)); }
    GRat& operator+=(const GRat& o);
    GRat& operator-=(const GRat& o);

    friend GRat operator+(const GRat& a, const GRat& b) {
        return GRat(Rat(a.re + b.re), Rat(a.im + b.im));
    }
    friend GRat operator-(const GRat& a, const GRat& b) {
        return GRat(Rat(a.re - b.re), Rat(a.im - b.im));
    }
    friend GRat operator*(const GRat& a, const GRat& b) {
        return GRat(Rat(a.re * b.re - a.im * b.im), Rat(a.re * b.im + a.im * b.re));
    }
    friend GRat operator/(const GRat& a, const GRat& b);

    friend bool operator==(const GRat& a, const GRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
};

/// Imaginary unit.
GRat grat_i();

/// Parses the exact coefficient format used in JSON output:
/// "p/q", "p/q+r/s i" or "p/q-r/s i".
GRat grat_from_string(const std::string& s);
std::string grat_to_string(const GRat& c);

}  // namespace dia
