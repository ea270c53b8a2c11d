#include "celestial/mesh.hpp"

#include "celestial/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace celestial {

double coefficient_norm(const Poly& p)
{
    double s = 0;
    for (const auto& [e, c] : p.terms())
        s += std::abs(c.get_d());
    return s;
}

Mesh sample_mesh(const Fixture& f, const ImplicitSurface& pi_surface, int resolution, double hole)
{
    if (resolution < 8)
        throw InputError("mesh resolution must be at least 8");
    if (pi_surface.projection != Projection::pi)
        throw PreconditionError("mesh needs the stereographic implicit equation");
    auto coords = projected_coordinates(synthesize(f), Projection::pi, f.center);
    const double scale = coefficient_norm(pi_surface.poly);
    const int n = resolution;
    Mesh m;
    m.resolution = n;
    std::vector<int> index(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // (s0 : s1) = (cos a : sin a) runs once around the circle as a goes over [0, pi)
            double a = std::numbers::pi * i / n, b = std::numbers::pi * j / n;
            std::vector<double> st{std::cos(a), std::sin(a), std::cos(b), std::sin(b)};
            std::vector<double> y(4);
            double norm = 0;
            for (int k = 0; k < 4; ++k) {
                y[k] = evaluate_double(coords[k], st);
                norm += y[k] * y[k];
            }
            norm = std::sqrt(norm);
            for (auto& v : y)
                v /= norm;
            if (std::abs(y[0]) < hole) {
                m.holes.push_back({i, j});
                continue;
            }
            m.max_residual = std::max(m.max_residual, std::abs(evaluate_double(pi_surface.poly, y)) / scale);
            m.vertices.push_back({y[1] / y[0], y[2] / y[0], y[3] / y[0]});
            m.vertex_grid.push_back({i, j});
            index[i * n + j] = (int)m.vertices.size();
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int i1 = (i + 1) % n, j1 = (j + 1) % n;
            std::array<int, 4> q{index[i * n + j], index[i1 * n + j], index[i1 * n + j1], index[i * n + j1]};
            if (q[0] && q[1] && q[2] && q[3])
                m.faces.push_back(q);
        }
    return m;
}

std::string to_obj(const Mesh& m, const std::string& title)
{
    std::ostringstream os;
    os.precision(12);
    os << "# " << title << "\n# resolution " << m.resolution << ", " << m.vertices.size() << " vertices, "
       << m.faces.size() << " faces, " << m.holes.size() << " holes\n";
    for (const auto& v : m.vertices)
        os << "v " << v[0] << " " << v[1] << " " << v[2] << "\n";
    for (const auto& f : m.faces)
        os << "f " << f[0] << " " << f[1] << " " << f[2] << " " << f[3] << "\n";
    for (const auto& h : m.holes)
        os << "# hole " << h[0] << " " << h[1] << "\n";
    return os.str();
}

} // namespace celestial
