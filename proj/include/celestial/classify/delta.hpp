#pragma once

#include "celestial/implicitize.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace celestial {

// Conjugate singular points of a plane section sharing one Milnor number: root x of
// minimal gives the point sum coords[i](x) e_i of projective 3-space
// (or of the plane, when the input was a plane curve).
struct SingularPoints {
    UPoly<Rational> minimal;
    std::vector<UPoly<Rational>> coords;
    int milnor = 0;
    int branches = 0;
    int delta = 0; // per point
    int count() const { return minimal.degree(); }
    std::string to_string() const;
};

struct SectionDelta {
    int total = 0;
    std::vector<SingularPoints> points;
    std::array<Rational, 4> plane{};
    int attempts = 0;
};

// Singular points of a reduced plane curve g(X, Y, Z); node, cusp and tacnode only.
SectionDelta curve_delta(const Poly& g, std::uint64_t seed = 1);

SectionDelta plane_section_delta(const Poly& surface, const std::array<Rational, 4>& plane, std::uint64_t seed = 1);

// deterministic pseudo-random plane with small integer coefficients
std::array<Rational, 4> random_plane(std::uint64_t seed);

// Sum of delta over the points at which every form vanishes.
int delta_on(const SectionDelta& s, const std::vector<Poly>& forms);

// Singular points with minimal replaced by the part where every form vanishes.
std::vector<SingularPoints> points_on(const SectionDelta& s, const std::vector<Poly>& forms);

// reduce f(x, y) at y = eta modulo m; f lives in two variables (x, y)
UPoly<Rational> eval_mod(const Poly& f, const UPoly<Rational>& eta, const UPoly<Rational>& m);

} // namespace celestial
