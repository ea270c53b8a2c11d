#pragma once

#include "celestial/classify/multiplicity.hpp"
#include "celestial/implicitize.hpp"

#include <array>
#include <string>
#include <vector>

namespace celestial {

using GPoly = MultiPoly<GaussianRational>;
using GUPoly = UPoly<GaussianRational>;

// One group of generator lines of a ruling: the roots of factor in the
// chart (u0:u1) = (u : 1 + shift u), all with the same multiplicities.
struct GeneratorLines {
    int ruling = 0; // 0: lines {u fixed}, 1: lines {v fixed}
    GUPoly factor;
    int multiplicity = 0;              // algebraic multiplicity of the surface along each line
    int intersection_multiplicity = 0; // multiplicity in the content g_u or g_v
    int pairs() const { return factor.degree() / 2; }
};

struct EllipticType {
    int d = 0;
    std::vector<int> pair_multiplicities; // sorted descending
    std::vector<GeneratorLines> lines;
    int shift = 0;
    // the intersection with the absolute is a union of generator lines
    bool lines_only = false;
    // lines of each ruling are closed under complex conjugation
    bool conjugation_closed = false;
    int restriction_bidegree = 0;

    std::string to_string() const;
};

// ruling map of the quadric x1^2+...+x4^2 = 0 over Q(i), variables (u, v), chart shift c
std::array<GPoly, 4> ruling_map(int shift);

EllipticType elliptic_type(const ImplicitSurface& surface);

struct EuclideanType {
    int d = 0;
    int m = 0;
    std::string to_string() const;
};

EuclideanType euclidean_type(const ImplicitSurface& surface);

enum class QuadricKind { plane, circular_cylinder, elliptic_cylinder, quartic, other };
std::string to_string(QuadricKind k);

// classifies the stereographic image of a euclidean translational surface
QuadricKind euclidean_outcome(const ImplicitSurface& surface);

} // namespace celestial
