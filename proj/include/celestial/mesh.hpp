#pragma once

#include "celestial/fixtures.hpp"
#include "celestial/implicitize.hpp"

#include <array>
#include <string>
#include <vector>

namespace celestial {

struct Mesh {
    int resolution = 0;
    std::vector<std::array<double, 3>> vertices;
    // grid position of each vertex, and of each sample sent to the holes list
    std::vector<std::array<int, 2>> vertex_grid, holes;
    // one-based vertex indices
    std::vector<std::array<int, 4>> faces;
    // |P(y)| / coefficient_norm(P) at the unit representative y of each vertex
    double max_residual = 0;
};

// sum of absolute coefficients
double coefficient_norm(const Poly& p);

// Samples pi(F(s, t)) on an n x n grid in the half-angle parameters, each circle
// closed up through its point at infinity. Samples with |y0| < hole * |y| go to holes.
Mesh sample_mesh(const Fixture& f, const ImplicitSurface& pi_surface, int resolution, double hole = 1e-3);

std::string to_obj(const Mesh& m, const std::string& title);

} // namespace celestial
