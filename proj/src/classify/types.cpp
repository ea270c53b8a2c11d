#include "celestial/classify/types.hpp"

#include "celestial/errors.hpp"
#include "celestial/exactalg/matrix.hpp"

#include <algorithm>
#include <functional>

namespace celestial {

namespace {

using G = GaussianRational;

const std::vector<std::string>& uv_vars()
{
    static const std::vector<std::string> v{"u", "v"};
    return v;
}

// roots r of f mapped to the conjugate generator, as a monic polynomial
GUPoly conjugate_lines(const GUPoly& f, int c)
{
    // conjugation sends (u0:u1) to (conj u1 : -conj u0); in the chart that is
    // z -> (1 + c z) / (-c - (1 + c^2) z) applied to conj(root)
    const int n = f.degree();
    GUPoly num(std::vector<G>{G(-1), G(-c)});      // -(1 + c u)
    GUPoly den(std::vector<G>{G(c), G(1 + c * c)}); // c + (1 + c^2) u
    GUPoly acc;
    for (int k = 0; k <= n; ++k)
        acc += num.pow(k) * den.pow(n - k) * conj(f.coeff(k));
    return acc.monic();
}

} // namespace

std::array<GPoly, 4> ruling_map(int shift)
{
    const auto& vars = uv_vars();
    GPoly one = GPoly::constant(vars, G(1));
    GPoly u0 = GPoly::variable(vars, 0), v0 = GPoly::variable(vars, 1);
    GPoly u1 = one + u0 * G(shift), v1 = one + v0 * G(shift);
    G mi(0, -1);
    return {u0 * v0 - u1 * v1, (u0 * v0 + u1 * v1) * mi, u0 * v1 + u1 * v0, (u0 * v1 - u1 * v0) * mi};
}

std::string EllipticType::to_string() const
{
    std::string s = "(" + std::to_string(d);
    for (std::size_t i = 0; i < pair_multiplicities.size(); ++i)
        s += (i == 0 ? ";" : ",") + std::to_string(pair_multiplicities[i]);
    return s + ")";
}

EllipticType elliptic_type(const ImplicitSurface& surface)
{
    if (surface.projection != Projection::tau)
        throw PreconditionError("elliptic type needs the central projection");
    const int d = surface.poly.total_degree();
    GPoly p = to_gaussian(surface.poly);
    for (int c : {0, 1, -1, 2, -2, 3, -3, 5}) {
        auto map = ruling_map(c);
        GPoly h = p.compose(std::vector<GPoly>(map.begin(), map.end()));
        if (h.is_zero())
            throw UnsupportedError("surface contains the absolute");
        if (h.degree_in(0) != d || h.degree_in(1) != d)
            continue; // a generator line sits at the chart's infinity
        EllipticType et;
        et.d = d;
        et.shift = c;
        et.restriction_bidegree = d;
        et.conjugation_closed = true;
        int covered[2] = {0, 0};
        for (int r = 0; r < 2; ++r) {
            GUPoly g = content_in_other(h, r, 1 - r);
            if (g.degree() <= 0)
                continue;
            for (const auto& sf : squarefree_decomposition(g)) {
                covered[r] += sf.factor.degree() * sf.multiplicity;
                for (const auto& part : family_multiplicities(surface.poly, map, r, 1 - r, sf.factor)) {
                    GeneratorLines gl;
                    gl.ruling = r;
                    gl.factor = part.factor;
                    gl.multiplicity = part.multiplicity;
                    gl.intersection_multiplicity = sf.multiplicity;
                    if (part.factor.degree() % 2 != 0 || conjugate_lines(part.factor, c) != part.factor.monic())
                        et.conjugation_closed = false;
                    for (int k = 0; k < gl.pairs(); ++k)
                        et.pair_multiplicities.push_back(gl.multiplicity);
                    et.lines.push_back(gl);
                }
            }
        }
        et.lines_only = covered[0] == d && covered[1] == d;
        std::sort(et.pair_multiplicities.begin(), et.pair_multiplicities.end(), std::greater<>());
        return et;
    }
    throw DegenerateError("no chart keeps the generator lines finite");
}

std::string EuclideanType::to_string() const
{
    return "(" + std::to_string(d) + "," + std::to_string(m) + ")";
}

EuclideanType euclidean_type(const ImplicitSurface& surface)
{
    if (surface.projection != Projection::pi)
        throw PreconditionError("euclidean type needs the stereographic projection");
    const auto& vars = surface.poly.variables();
    std::vector<Poly> images{Poly(vars)};
    for (std::size_t i = 1; i < 4; ++i)
        images.push_back(Poly::variable(vars, i));
    Poly r = surface.poly.compose(images);
    if (r.is_zero())
        throw UnsupportedError("surface contains the plane at infinity");
    Poly q(vars);
    for (std::size_t i = 1; i < 4; ++i)
        q += Poly::variable(vars, i) * Poly::variable(vars, i);
    EuclideanType et;
    et.d = surface.poly.total_degree();
    while (auto next = divide_exact(r, q)) {
        r = *next;
        ++et.m;
    }
    return et;
}

std::string to_string(QuadricKind k)
{
    switch (k) {
    case QuadricKind::plane:
        return "plane";
    case QuadricKind::circular_cylinder:
        return "circular-cylinder";
    case QuadricKind::elliptic_cylinder:
        return "elliptic-cylinder";
    case QuadricKind::quartic:
        return "quartic";
    default:
        return "other";
    }
}

QuadricKind euclidean_outcome(const ImplicitSurface& surface)
{
    const int d = surface.poly.total_degree();
    if (d == 1)
        return QuadricKind::plane;
    if (d == 4)
        return QuadricKind::quartic;
    if (d != 2)
        return QuadricKind::other;
    // quadratic part in the affine coordinates y1..y3
    std::array<std::array<Rational, 3>, 3> a{};
    for (const auto& [e, c] : surface.poly.terms()) {
        if (e[0] != 0)
            continue;
        std::vector<int> idx;
        for (int i = 1; i < 4; ++i)
            for (int k = 0; k < e[i]; ++k)
                idx.push_back(i - 1);
        if (idx[0] == idx[1])
            a[idx[0]][idx[0]] = c;
        else
            a[idx[0]][idx[1]] = a[idx[1]][idx[0]] = c / 2;
    }
    ExactMatrix<Rational> m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            m.at(i, j) = a[i][j];
    auto ker = nullspace(m);
    if (ker.size() != 1)
        return QuadricKind::other;
    const auto& k = ker[0];
    Rational kk = k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
    // circular iff a is proportional to |k|^2 I - k k^T
    std::optional<Rational> ratio;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational b = (i == j ? kk : Rational(0)) - k[i] * k[j];
            if (sgn(b) == 0) {
                if (sgn(a[i][j]) != 0)
                    return QuadricKind::elliptic_cylinder;
                continue;
            }
            Rational r = a[i][j] / b;
            if (ratio && *ratio != r)
                return QuadricKind::elliptic_cylinder;
            ratio = r;
        }
    return QuadricKind::circular_cylinder;
}

} // namespace celestial
