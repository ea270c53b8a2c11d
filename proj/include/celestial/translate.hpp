#pragma once

#include "celestial/exactalg/upoly.hpp"
#include "celestial/moebius.hpp"

#include <array>
#include <optional>
#include <variant>
#include <vector>

namespace celestial {

enum class Side { left, right };
enum class SurfaceKind { clifford, euclidean };

struct CliffordMotion {
    SpherePoint q;
    Side side;

    SpherePoint apply(const SpherePoint& p) const;
    CliffordMotion inverse() const;
};

struct EuclideanMotion {
    std::array<Rational, 3> v;

    SpherePoint apply(const SpherePoint& p) const;
};

// variables of every surface parametrization: (s0:s1) for C1, (t0:t1) for C2
const std::vector<std::string>& surface_vars();

struct SurfaceParam {
    SurfaceKind kind;
    Side side = Side::left;
    Circle c1, c2;
    // clifford kind: coordinates on the sphere
    std::array<Poly, 5> sphere;
    // euclidean kind: homogeneous chart coordinates (X0 : X1 : X2 : X3)
    std::array<Poly, 4> chart;
};

SurfaceParam clifford_translate_surface(const Circle& c1, const Circle& c2, Side side);
SurfaceParam euclidean_translate_surface(const Circle& c1, const Circle& c2);

struct SphereLift {
    std::array<Poly, 5> coords;
    int degree_s = 0, degree_t = 0;
};

// inverse stereographic lift of a euclidean surface with common factors removed
SphereLift lift_to_sphere(const SurfaceParam& f);

// the sphere coordinates of a surface of either kind
std::array<Poly, 5> sphere_coordinates(const SurfaceParam& f);

std::array<Poly, 4> projected_coordinates(const SurfaceParam& f, Projection proj,
                                          const std::optional<SpherePoint>& center = std::nullopt);

double isometry_residual(const CliffordMotion& motion, const std::vector<SpherePoint>& samples);
double isometry_residual(const EuclideanMotion& motion, const std::vector<SpherePoint>& samples);

struct CoincidentRulings {
    // eliminant in the chart parameter tau with (t0:t1) = (tau : 1 + shift tau)
    UPoly<Rational> eliminant;
    int shift = 0;
    int real_roots = 0;
    bool double_root = false;
    // t = (t0:t1) of the two parameters when they are rational
    std::optional<std::array<Rational, 2>> t1, t2;
    // the coincident great circle
    Circle v0;
};

// Circle c1 great, c2 little, both through m; side describes which Clifford
// translations move c1: left means translates q*c1, right means c1*q for q on c2.
std::optional<CoincidentRulings> find_coincident_rulings(const Circle& c1, const Circle& c2,
                                                         Side side = Side::left);

// binary form content helpers shared with the classifier
Poly binary_content(const std::vector<Poly>& polys, std::size_t a, std::size_t b);

} // namespace celestial
