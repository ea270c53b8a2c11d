#include "celestial/translate.hpp"

#include "celestial/errors.hpp"
#include "celestial/exactalg/matrix.hpp"
#include "celestial/exactalg/resultant.hpp"

#include <cmath>

namespace celestial {

const std::vector<std::string>& surface_vars()
{
    static const std::vector<std::string> v{"s0", "s1", "t0", "t1"};
    return v;
}

SpherePoint CliffordMotion::apply(const SpherePoint& p) const
{
    return side == Side::left ? ham_product(q, p) : ham_product(p, q);
}

CliffordMotion CliffordMotion::inverse() const
{
    return {SpherePoint::on_sphere(sphere_conj(q.coords())), side};
}

SpherePoint EuclideanMotion::apply(const SpherePoint& p) const
{
    Coords4 u = stereographic(p);
    if (sgn(u[0]) == 0)
        throw PreconditionError("Euclidean motion applied on the Euclidean absolute");
    return from_chart({Rational(u[1] / u[0] + v[0]), Rational(u[2] / u[0] + v[1]), Rational(u[3] / u[0] + v[2])});
}

namespace {

void require_m(const Circle& c, const char* name)
{
    if (!c.contains(identity_point()))
        throw PreconditionError(std::string("circle ") + name + " does not pass through m");
}

Circle with_m_base(const Circle& c) { return Circle::from_span(c.span(), identity_point()); }

} // namespace

SurfaceParam clifford_translate_surface(const Circle& c1in, const Circle& c2in, Side side)
{
    require_m(c1in, "c1");
    require_m(c2in, "c2");
    if (c1in.same_circle(c2in))
        throw DegenerateError("degenerate surface: c1 and c2 are the same circle");
    Circle c1 = with_m_base(c1in), c2 = with_m_base(c2in);
    const auto& vars = surface_vars();
    auto p1 = c1.parametrization(vars, 0, 1);
    auto p2 = c2.parametrization(vars, 2, 3);
    SurfaceParam f{SurfaceKind::clifford, side, c1, c2, {}, {}};
    f.sphere = side == Side::left ? sphere_mul(p2, p1) : sphere_mul(p1, p2);
    return f;
}

Poly binary_content(const std::vector<Poly>& polys, std::size_t a, std::size_t b)
{
    // gcd of all coefficient forms in (a, b), worked out on the chart b = 1 with the b-power tracked
    const auto& vars = polys.front().variables();
    UPoly<Rational> g;
    int common_b = -1;
    for (const auto& p : polys) {
        std::map<Exponent, Poly> parts;
        for (const auto& [e, c] : p.terms()) {
            Exponent rest = e, mine(e.size(), 0);
            rest[a] = rest[b] = 0;
            mine[a] = e[a];
            mine[b] = e[b];
            parts.try_emplace(rest, Poly(vars)).first->second.add_term(mine, c);
        }
        for (const auto& [rest, form] : parts) {
            int lowb = form.total_degree();
            for (const auto& [e, c] : form.terms())
                lowb = std::min(lowb, e[b]);
            common_b = common_b < 0 ? lowb : std::min(common_b, lowb);
            UPoly<Rational> u = dehomogenize_binary(form, a, b);
            g = g.is_zero() ? u.monic() : gcd(g, u);
        }
    }
    Poly out(vars);
    if (common_b < 0)
        return out;
    int dg = g.degree();
    for (int i = 0; i <= dg; ++i) {
        Exponent e(vars.size(), 0);
        e[a] = i;
        e[b] = dg - i + common_b;
        out.add_term(e, g.coeff(i));
    }
    return out;
}

namespace {

// divide every coordinate by the common binary content in (a, b)
template <std::size_t N>
void strip_content(std::array<Poly, N>& x, std::size_t a, std::size_t b)
{
    std::vector<Poly> v(x.begin(), x.end());
    Poly g = binary_content(v, a, b);
    if (g.total_degree() <= 0)
        return;
    for (auto& c : x)
        c = divide_or_throw(c, g);
}

} // namespace

SurfaceParam euclidean_translate_surface(const Circle& c1in, const Circle& c2in)
{
    require_m(c1in, "c1");
    require_m(c2in, "c2");
    if (c1in.same_circle(c2in))
        throw DegenerateError("degenerate surface: c1 and c2 are the same circle");
    Circle c1 = with_m_base(c1in), c2 = with_m_base(c2in);
    const auto& vars = surface_vars();
    auto g1 = project(c1.parametrization(vars, 0, 1), Projection::pi);
    auto g2 = project(c2.parametrization(vars, 2, 3), Projection::pi);
    // a circle through the projection center maps to a line: drop the common linear factor
    strip_content(g1, 0, 1);
    strip_content(g2, 2, 3);
    // G = gamma1 + gamma2 - pi(m), pi(m) = (1, 0, 0) in the chart
    const std::array<Rational, 3> pm{Rational(1), Rational(0), Rational(0)};
    SurfaceParam f{SurfaceKind::euclidean, Side::left, c1, c2, {}, {}};
    f.chart[0] = g1[0] * g2[0];
    for (int i = 1; i < 4; ++i)
        f.chart[i] = g1[i] * g2[0] + g1[0] * g2[i] - g1[0] * g2[0] * pm[i - 1];
    return f;
}

SphereLift lift_to_sphere(const SurfaceParam& f)
{
    if (f.kind != SurfaceKind::euclidean)
        throw PreconditionError("lift_to_sphere expects a euclidean surface");
    const auto& u = f.chart;
    Poly n = u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
    Poly s = u[0] * u[0];
    SphereLift l;
    l.coords = {n + s, Rational(2) * u[0] * u[1], Rational(2) * u[0] * u[2], Rational(2) * u[0] * u[3], n - s};
    strip_content(l.coords, 0, 1);
    strip_content(l.coords, 2, 3);
    l.degree_s = l.coords[0].degree_in_group({0, 1});
    l.degree_t = l.coords[0].degree_in_group({2, 3});
    return l;
}

std::array<Poly, 5> sphere_coordinates(const SurfaceParam& f)
{
    return f.kind == SurfaceKind::clifford ? f.sphere : lift_to_sphere(f).coords;
}

std::array<Poly, 4> projected_coordinates(const SurfaceParam& f, Projection proj,
                                          const std::optional<SpherePoint>& center)
{
    if (f.kind == SurfaceKind::euclidean && proj == Projection::pi && !center)
        return f.chart;
    return project(sphere_coordinates(f), proj, center);
}

double isometry_residual(const CliffordMotion& motion, const std::vector<SpherePoint>& samples)
{
    double lo = 1e300, hi = -1e300;
    for (const auto& v : samples) {
        double d = elliptic_distance(v, motion.apply(v));
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return samples.empty() ? 0.0 : hi - lo;
}

double isometry_residual(const EuclideanMotion& motion, const std::vector<SpherePoint>& samples)
{
    double lo = 1e300, hi = -1e300;
    for (const auto& v : samples) {
        double d = euclidean_distance(v, motion.apply(v));
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return samples.empty() ? 0.0 : hi - lo;
}

namespace {

using VecQ = std::array<Rational, 5>;

VecQ eval_coords(const std::array<Poly, 5>& x, const std::vector<Rational>& pt)
{
    VecQ r;
    for (int i = 0; i < 5; ++i)
        r[i] = x[i].evaluate(pt);
    return r;
}

} // namespace

std::optional<CoincidentRulings> find_coincident_rulings(const Circle& c1in, const Circle& c2in, Side side)
{
    if (!c1in.is_great())
        throw PreconditionError("find_coincident_rulings needs c1 great");
    require_m(c1in, "c1");
    require_m(c2in, "c2");
    if (c2in.is_great())
        return std::nullopt;
    Circle c2 = with_m_base(c2in);
    const std::vector<std::string> tv{"t0", "t1"};
    auto x = c2.parametrization(tv, 0, 1);
    const std::vector<std::string> ab{"a", "b"};
    Poly a = Poly::variable(ab, 0), b = Poly::variable(ab, 1), one = Poly::constant(ab, Rational(1));
    const auto& forms = c1in.linear_forms();

    // a direction u of the subgroup plane with nonzero imaginary part
    std::array<Rational, 4> u{};
    for (const auto& r : c1in.span()) {
        if (sgn(r[2]) != 0 || sgn(r[3]) != 0 || sgn(r[4]) != 0) {
            u = {Rational(0), r[2], r[3], r[4]};
            break;
        }
    }

    for (int k : {0, 1, -1, 2, -2, 3, -3, 5}) {
        Poly kk = Poly::constant(ab, Rational(k));
        std::array<Poly, 5> xa, xb;
        for (int i = 0; i < 5; ++i) {
            xa[i] = x[i].compose({a, one + kk * a});
            xb[i] = x[i].compose({b, one + kk * b});
        }
        auto y = side == Side::left ? sphere_mul(sphere_conj(xb), xa) : sphere_mul(xa, sphere_conj(xb));
        std::array<Poly, 2> l;
        for (int j = 0; j < 2; ++j) {
            l[j] = Poly(ab);
            for (int i = 0; i < 5; ++i)
                l[j] += y[i] * forms[j][i];
            l[j] = primitive_part(l[j]);
            Poly diag = a - b;
            while (!l[j].is_zero()) {
                auto q = divide_exact(l[j], diag);
                if (!q)
                    break;
                l[j] = *q;
            }
        }
        if (l[0].is_zero() || l[1].is_zero())
            continue;
        if (l[0].degree_in(1) <= 0 && l[1].degree_in(1) <= 0)
            continue;
        Poly res = resultant(l[0], l[1], 1);
        if (res.is_zero())
            continue;
        UPoly<Rational> g = multi_to_upoly(res, 0);
        UPoly<Rational> x0 = multi_to_upoly(xa[0], 0);
        for (UPoly<Rational> h = gcd(g, x0); h.degree() > 0; h = gcd(g, x0))
            g = g / h;
        if (g.degree() != 2)
            continue;
        g = g.monic();
        Rational g1 = g.coeff(1), g0 = g.coeff(0);
        Rational disc = g1 * g1 - 4 * g0;
        const bool double_root = sgn(disc) == 0;
        const int real_roots = double_root ? 1 : sturm_count(g, std::nullopt, std::nullopt);

        // V0 plane from symmetric functions of the two roots
        Rational e1 = -g1, e2 = g0;
        Rational p1 = e1, p2 = e1 * e1 - 2 * e2, p3 = e1 * e1 * e1 - 3 * e1 * e2;
        auto xc = [&](int deg) {
            // coefficient vector of tau^deg in xa
            VecQ v;
            for (int i = 0; i < 5; ++i) {
                Exponent e{deg, 0};
                v[i] = xa[i].coefficient(e);
            }
            return v;
        };
        VecQ c0 = xc(0), cx = xc(1), cxx = xc(2);
        std::vector<VecQ> gens;
        if (double_root) {
            Rational r = -g1 / 2;
            gens.push_back(eval_coords(xa, {r, Rational(0)}));
        } else {
            VecQ A, B;
            for (int i = 0; i < 5; ++i) {
                A[i] = 2 * c0[i] + p1 * cx[i] + p2 * cxx[i];
                B[i] = p1 * c0[i] + p2 * cx[i] + p3 * cxx[i];
            }
            gens = {A, B};
        }
        std::vector<std::array<Rational, 5>> rows;
        rows.push_back({Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)});
        for (const auto& gv : gens) {
            std::array<Rational, 4> q{gv[1], gv[2], gv[3], gv[4]};
            auto qu = side == Side::left ? quat_mul(q, u) : quat_mul(u, q);
            rows.push_back({Rational(0), q[0], q[1], q[2], q[3]});
            rows.push_back({Rational(0), qu[0], qu[1], qu[2], qu[3]});
        }
        // pick three independent rows
        std::array<Coords5, 3> span;
        std::size_t got = 0;
        {
            std::vector<std::vector<Rational>> acc;
            for (const auto& r : rows) {
                auto trial = acc;
                trial.emplace_back(r.begin(), r.end());
                if (rank(ExactMatrix<Rational>(trial)) == trial.size()) {
                    acc = trial;
                    span[got++] = r;
                    if (got == 3)
                        break;
                }
            }
        }
        if (got != 3)
            throw DegenerateError("coincident circle span degenerated");
        std::optional<SpherePoint> base;
        auto roots_rational = [&]() -> std::optional<std::array<Rational, 2>> {
            if (double_root)
                return std::array<Rational, 2>{Rational(-g1 / 2), Rational(-g1 / 2)};
            auto sq = rational_sqrt(disc);
            if (!sq)
                return std::nullopt;
            return std::array<Rational, 2>{Rational((-g1 + *sq) / 2), Rational((-g1 - *sq) / 2)};
        }();
        std::optional<std::array<Rational, 2>> t1, t2;
        if (roots_rational) {
            auto hom = [&](const Rational& tau) {
                return std::array<Rational, 2>{tau, Rational(1 + k * tau)};
            };
            t1 = hom((*roots_rational)[0]);
            t2 = hom((*roots_rational)[1]);
            base = SpherePoint::on_sphere(eval_coords(xa, {(*roots_rational)[0], Rational(0)}));
        }
        return CoincidentRulings{g, k, real_roots, double_root, t1, t2, Circle::from_span(span, base)};
    }
    throw DegenerateError("no chart gives a single coincident pair of rulings");
}

} // namespace celestial
