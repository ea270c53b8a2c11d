#include "celestial/implicitize.hpp"

#include "celestial/errors.hpp"
#include "celestial/exactalg/matrix.hpp"

namespace celestial {

namespace {

constexpr std::uint64_t kPrime = 2305843009213693951ULL; // 2^61 - 1

} // namespace

const std::vector<std::string>& projection_vars(Projection proj)
{
    static const std::vector<std::string> tau{"x1", "x2", "x3", "x4"};
    static const std::vector<std::string> pi{"y0", "y1", "y2", "y3"};
    return proj == Projection::tau ? tau : pi;
}

bool substitution_vanishes(const Poly& p, const std::array<Poly, 4>& coords)
{
    return p.compose(std::vector<Poly>(coords.begin(), coords.end())).is_zero();
}

ImplicitizationResult implicitize_coordinates(const std::array<Poly, 4>& coords, Projection proj, int max_degree,
                                              const std::string& source)
{
    if (max_degree < 1)
        throw std::invalid_argument("max_degree must be positive");
    const auto& pv = projection_vars(proj);
    const auto& src_vars = coords[0].variables();
    std::map<Exponent, Poly> layer;
    layer.emplace(Exponent(4, 0), Poly::constant(src_vars, Rational(1)));
    for (int d = 1; d <= max_degree; ++d) {
        const auto monos = monomials_of_degree(4, d);
        std::map<Exponent, Poly> next;
        for (const auto& e : monos) {
            std::size_t i = 0;
            while (e[i] == 0)
                ++i;
            Exponent prev = e;
            prev[i] -= 1;
            next.emplace(e, layer.at(prev) * coords[i]);
        }
        layer = std::move(next);

        std::map<Exponent, std::size_t, GrlexDescending> row_of;
        for (const auto& e : monos)
            for (const auto& [te, c] : layer.at(e).terms())
                row_of.emplace(te, 0);
        std::size_t r = 0;
        for (auto& [te, idx] : row_of)
            idx = r++;
        ExactMatrix<Rational> m(row_of.size(), monos.size());
        for (std::size_t j = 0; j < monos.size(); ++j)
            for (const auto& [te, c] : layer.at(monos[j]).terms())
                m.at(row_of.at(te), j) = c;

        ImplicitizationResult res;
        res.degree = d;
        std::vector<std::vector<Rational>> ker;
        auto sel = modular_row_basis(m, kPrime);
        if (sel.size() == monos.size())
            continue; // full column rank modulo p implies full rank over Q
        if (sel.size() + 1 == monos.size()) {
            if (auto v = multimodular_kernel_vector(m)) {
                ker = {primitive_vector(*v)};
                res.used_modular_rows = true;
            }
        }
        if (ker.empty()) {
            ker = nullspace(m.select_rows(sel));
            res.used_modular_rows = true;
        }
        for (const auto& v : ker) {
            for (const auto& x : m.apply(v))
                if (sgn(x) != 0) {
                    res.used_modular_rows = false;
                    break;
                }
            if (!res.used_modular_rows)
                break;
        }
        if (!res.used_modular_rows)
            ker = nullspace(m); // the prime was unlucky
        if (ker.empty())
            continue;
        res.kernel_dimension = ker.size();
        for (const auto& v : ker) {
            Poly p(pv);
            for (std::size_t j = 0; j < monos.size(); ++j)
                p.add_term(monos[j], v[j]);
            res.basis.push_back(primitive_part(p));
        }
        if (ker.size() == 1) {
            ImplicitSurface s;
            s.poly = res.basis[0];
            s.degree = d;
            s.projection = proj;
            s.source = source;
            s.certificate = substitution_vanishes(s.poly, coords);
            res.surface = s;
        }
        return res;
    }
    throw DegreeBoundExceeded("implicit degree exceeds bound " + std::to_string(max_degree));
}

ImplicitizationResult implicitize(const SurfaceParam& f, Projection proj, int max_degree,
                                  const std::optional<SpherePoint>& center, const std::string& source)
{
    if (max_degree < 2)
        throw std::invalid_argument("max_degree must be at least 2");
    return implicitize_coordinates(projected_coordinates(f, proj, center), proj, max_degree, source);
}

ImplicitSurface implicit_equation(const SurfaceParam& f, Projection proj, int max_degree,
                                  const std::optional<SpherePoint>& center, const std::string& source)
{
    auto r = implicitize(f, proj, max_degree, center, source);
    if (!r.surface)
        throw DegenerateError("reducible or non-minimal image: kernel dimension " +
                              std::to_string(r.kernel_dimension) + " at degree " + std::to_string(r.degree));
    return *r.surface;
}

std::array<Poly, 4> gradient(const ImplicitSurface& s)
{
    return {s.poly.derivative(0), s.poly.derivative(1), s.poly.derivative(2), s.poly.derivative(3)};
}

PlaneRestriction plane_restriction(const Poly& surface, const std::array<Rational, 4>& plane)
{
    int k = -1;
    for (int i = 3; i >= 0; --i)
        if (sgn(plane[i]) != 0) {
            k = i;
            break;
        }
    if (k < 0)
        throw std::invalid_argument("plane with all coefficients zero");
    PlaneRestriction pr;
    const std::vector<std::string> xyz{"X", "Y", "Z"};
    std::vector<Poly> images(4, Poly(xyz));
    int slot = 0;
    for (int j = 0; j < 4; ++j) {
        if (j == k)
            continue;
        std::array<Rational, 4> v{Rational(0), Rational(0), Rational(0), Rational(0)};
        v[j] = 1;
        v[k] = -plane[j] / plane[k];
        pr.embedding[slot] = v;
        ++slot;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j)
            if (sgn(pr.embedding[i][j]) != 0)
                images[j] += Poly::variable(xyz, i) * pr.embedding[i][j];
    pr.curve = surface.compose(images);
    return pr;
}

Poly restrict_to_plane(const ImplicitSurface& s, const std::array<Rational, 4>& plane)
{
    PlaneRestriction pr = plane_restriction(s.poly, plane);
    int k = 3;
    while (sgn(plane[k]) == 0)
        --k;
    std::vector<std::string> names;
    std::vector<std::size_t> placement;
    const auto& v = s.poly.variables();
    for (int j = 0; j < 4; ++j)
        if (j != k)
            names.push_back(v[j]);
    return pr.curve.embed(names, {0, 1, 2});
}

} // namespace celestial
