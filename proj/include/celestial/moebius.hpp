#pragma once

#include "celestial/exactalg/multipoly.hpp"
#include "celestial/exactalg/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace celestial {

using Coords5 = std::array<Rational, 5>;
using Coords4 = std::array<Rational, 4>;
using Poly = MultiPoly<Rational>;

enum class Projection { tau, pi };
enum class Absolute { elliptic, euclidean };

// -x0 y0 + x1 y1 + x2 y2 + x3 y3 + x4 y4
Rational bilinear(const Coords5& x, const Coords5& y);
inline Rational sphere_form(const Coords5& x) { return bilinear(x, x); }

// integer, content free, first nonzero coordinate positive
template <std::size_t N>
std::array<Rational, N> normalize_projective(const std::array<Rational, N>& c);

class SpherePoint {
public:
    // throws InputError naming the residual when the quadric fails
    static SpherePoint on_sphere(const Coords5& c);
    static SpherePoint from_ints(long x0, long x1, long x2, long x3, long x4);

    const Coords5& coords() const { return c_; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    SpherePoint antipode() const;
    bool on_absolute(Absolute a) const;
    std::string to_string() const;

    bool operator==(const SpherePoint& o) const { return c_ == o.c_; }
    bool operator!=(const SpherePoint& o) const { return !(*this == o); }

private:
    explicit SpherePoint(const Coords5& c) : c_(c) {}
    Coords5 c_;
};

// the identity quaternion m = (1:1:0:0:0)
SpherePoint identity_point();
// the stereographic projection center (1:0:0:0:1)
SpherePoint projection_center();

struct QuaternionView {
    Rational norm; // x0
    Rational w, x, y, z;

    static QuaternionView of(const SpherePoint& p);
    SpherePoint unview() const;
    QuaternionView conjugate() const;
};

// Hamilton product of (a0 + a1 i + a2 j + a3 k)(b0 + b1 i + b2 j + b3 k)
template <class T>
std::array<T, 4> quat_mul(const std::array<T, 4>& a, const std::array<T, 4>& b)
{
    return {T(a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]),
            T(a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2]),
            T(a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1]),
            T(a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0])};
}

// homogeneous product on 5-vectors: (x0 y0 : x⋆y)
template <class T>
std::array<T, 5> sphere_mul(const std::array<T, 5>& a, const std::array<T, 5>& b)
{
    auto q = quat_mul<T>({a[1], a[2], a[3], a[4]}, {b[1], b[2], b[3], b[4]});
    return {T(a[0] * b[0]), q[0], q[1], q[2], q[3]};
}

template <class T>
std::array<T, 5> sphere_conj(const std::array<T, 5>& a)
{
    return {a[0], a[1], T(-a[2]), T(-a[3]), T(-a[4])};
}

SpherePoint ham_product(const SpherePoint& p, const SpherePoint& q);

Coords4 stereographic(const SpherePoint& p);
SpherePoint inverse_stereographic(const Coords4& u);
// affine chart point of pi(p)
std::array<double, 3> chart_point(const SpherePoint& p);
SpherePoint from_chart(const std::array<Rational, 3>& u);

Coords4 central_projection(const SpherePoint& p);

double elliptic_distance(const SpherePoint& v, const SpherePoint& w);
// literal cross-ratio evaluation, kept for comparison with the angle formula
double elliptic_distance_cross_ratio(const SpherePoint& v, const SpherePoint& w);
double euclidean_distance(const SpherePoint& v, const SpherePoint& w);

// Rational reflection of the Lorentz form sending c to the projection center.
struct CenterReflection {
    Coords5 axis;
    Rational scale; // 2 / B(axis, axis)
    static CenterReflection to_center(const SpherePoint& c);
    template <class T>
    std::array<T, 5> apply(const std::array<T, 5>& x) const
    {
        // x - scale * B(x, axis) * axis
        T b = T(-x[0] * axis[0]);
        for (int i = 1; i < 5; ++i)
            b += T(x[i] * axis[i]);
        std::array<T, 5> r = x;
        for (int i = 0; i < 5; ++i)
            r[i] = T(x[i] - b * Rational(scale * axis[i]));
        return r;
    }
};

class Circle {
public:
    static Circle through(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r);
    static Circle from_span(const std::array<Coords5, 3>& rows, const std::optional<SpherePoint>& base);

    const std::array<Coords5, 3>& span() const { return span_; }
    const std::optional<SpherePoint>& base_point() const { return base_; }

    bool contains(const SpherePoint& p) const;
    bool contains_coords(const Coords5& c) const;
    bool is_great() const;
    bool same_circle(const Circle& o) const;
    // two forms cutting out the plane
    const std::array<Coords5, 2>& linear_forms() const { return forms_; }

    // five binary quadratic forms in vars[a], vars[b]; (1:0) maps to the base point
    std::array<Poly, 5> parametrization(const std::vector<std::string>& vars, std::size_t a, std::size_t b) const;
    SpherePoint point_at(const Rational& s0, const Rational& s1) const;
    // this circle with a base point; searches small integer combinations of the span when none is stored
    std::optional<Circle> with_rational_point(int bound = 12) const;
    std::string to_string() const;

private:
    Circle() = default;
    std::array<Coords5, 3> span_;
    std::array<Coords5, 2> forms_;
    std::optional<SpherePoint> base_;
};

// coordinates of the image of a circle or surface in projective 3-space
std::array<Poly, 4> project(const std::array<Poly, 5>& x, Projection proj,
                            const std::optional<SpherePoint>& center = std::nullopt);

} // namespace celestial
