#pragma once

#include "celestial/moebius.hpp"
#include "celestial/translate.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace celestial {

// x1..x4 for the central projection, y0..y3 for the stereographic one
const std::vector<std::string>& projection_vars(Projection proj);

struct ImplicitSurface {
    Poly poly;
    int degree = 0;
    Projection projection = Projection::tau;
    std::string source;
    bool certificate = false;
};

struct ImplicitizationResult {
    int degree = 0;
    std::size_t kernel_dimension = 0;
    // set when the kernel is one dimensional
    std::optional<ImplicitSurface> surface;
    // full kernel as polynomials otherwise
    std::vector<Poly> basis;
    bool used_modular_rows = false;
};

// Smallest-degree annihilating polynomial of the map (s, t) -> coords.
ImplicitizationResult implicitize_coordinates(const std::array<Poly, 4>& coords, Projection proj, int max_degree,
                                              const std::string& source = "");

ImplicitizationResult implicitize(const SurfaceParam& f, Projection proj, int max_degree = 8,
                                  const std::optional<SpherePoint>& center = std::nullopt,
                                  const std::string& source = "");

// throws when the kernel is not one dimensional
ImplicitSurface implicit_equation(const SurfaceParam& f, Projection proj, int max_degree = 8,
                                  const std::optional<SpherePoint>& center = std::nullopt,
                                  const std::string& source = "");

std::array<Poly, 4> gradient(const ImplicitSurface& s);

// plane a . x = 0 in projective 3-space; result lives in the three remaining variables
Poly restrict_to_plane(const ImplicitSurface& s, const std::array<Rational, 4>& plane);

// same, but keeping the original variable names and returning the 3 x 4 embedding;
// point (p0 : p1 : p2) of the plane maps to sum p_i * embedding[i]
struct PlaneRestriction {
    Poly curve; // variables X, Y, Z
    std::array<std::array<Rational, 4>, 3> embedding;
};
PlaneRestriction plane_restriction(const Poly& surface, const std::array<Rational, 4>& plane);

bool substitution_vanishes(const Poly& p, const std::array<Poly, 4>& coords);

} // namespace celestial
