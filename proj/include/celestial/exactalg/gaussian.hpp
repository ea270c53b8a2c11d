#pragma once

#include "celestial/exactalg/rational.hpp"

#include <optional>
#include <string>

namespace celestial {

// a + b i with a, b rational
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(int v) : re(v), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    Rational norm() const { return Rational(re * re + im * im); }
    GaussianRational conjugate() const { return GaussianRational(re, Rational(-im)); }
    GaussianRational inverse() const;
    bool is_real() const { return sgn(im) == 0; }

    GaussianRational& operator+=(const GaussianRational& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }
};

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
inline GaussianRational operator-(const GaussianRational& a)
{
    return GaussianRational(Rational(-a.re), Rational(-a.im));
}
inline bool operator==(const GaussianRational& a, const GaussianRational& b)
{
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

inline bool is_zero(const GaussianRational& g) { return sgn(g.re) == 0 && sgn(g.im) == 0; }
inline GaussianRational conj(const GaussianRational& g) { return g.conjugate(); }

std::string to_string(const GaussianRational& g);

// square root inside Q(i) when one exists
std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& g);

// exact square root of a nonnegative rational when it is a perfect square
std::optional<Rational> rational_sqrt(const Rational& r);

} // namespace celestial
