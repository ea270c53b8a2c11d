#include "celestial/moebius.hpp"

#include "celestial/errors.hpp"
#include "celestial/exactalg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace celestial {

Rational bilinear(const Coords5& x, const Coords5& y)
{
    Rational s = -x[0] * y[0];
    for (int i = 1; i < 5; ++i)
        s += x[i] * y[i];
    return s;
}

template <std::size_t N>
std::array<Rational, N> normalize_projective(const std::array<Rational, N>& c)
{
    std::vector<Rational> v(c.begin(), c.end());
    v = primitive_vector(v);
    std::array<Rational, N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = v[i];
    return out;
}

template std::array<Rational, 4> normalize_projective<4>(const std::array<Rational, 4>&);
template std::array<Rational, 5> normalize_projective<5>(const std::array<Rational, 5>&);

SpherePoint SpherePoint::on_sphere(const Coords5& c)
{
    bool any = false;
    for (const auto& v : c)
        any = any || sgn(v) != 0;
    if (!any)
        throw InputError("sphere point with all coordinates zero");
    Rational res = sphere_form(c);
    if (sgn(res) != 0)
        throw InputError("point not on the sphere: residual " + res.get_str());
    return SpherePoint(normalize_projective(c));
}

SpherePoint SpherePoint::from_ints(long x0, long x1, long x2, long x3, long x4)
{
    return on_sphere({Rational(x0), Rational(x1), Rational(x2), Rational(x3), Rational(x4)});
}

SpherePoint SpherePoint::antipode() const
{
    return SpherePoint::on_sphere({c_[0], Rational(-c_[1]), Rational(-c_[2]), Rational(-c_[3]), Rational(-c_[4])});
}

bool SpherePoint::on_absolute(Absolute a) const
{
    if (a == Absolute::elliptic)
        return sgn(c_[0]) == 0;
    return c_[0] == c_[4];
}

std::string SpherePoint::to_string() const
{
    std::string s = "(";
    for (int i = 0; i < 5; ++i)
        s += (i ? ":" : "") + c_[i].get_str();
    return s + ")";
}

SpherePoint identity_point() { return SpherePoint::from_ints(1, 1, 0, 0, 0); }
SpherePoint projection_center() { return SpherePoint::from_ints(1, 0, 0, 0, 1); }

QuaternionView QuaternionView::of(const SpherePoint& p)
{
    const auto& c = p.coords();
    return {c[0], c[1], c[2], c[3], c[4]};
}

SpherePoint QuaternionView::unview() const { return SpherePoint::on_sphere({norm, w, x, y, z}); }

QuaternionView QuaternionView::conjugate() const { return {norm, w, Rational(-x), Rational(-y), Rational(-z)}; }

SpherePoint ham_product(const SpherePoint& p, const SpherePoint& q)
{
    return SpherePoint::on_sphere(sphere_mul(p.coords(), q.coords()));
}

Coords4 stereographic(const SpherePoint& p)
{
    const auto& c = p.coords();
    Coords4 u{Rational(c[0] - c[4]), c[1], c[2], c[3]};
    if (sgn(u[0]) == 0 && sgn(u[1]) == 0 && sgn(u[2]) == 0 && sgn(u[3]) == 0)
        throw PreconditionError("cannot project the center of projection");
    return normalize_projective(u);
}

SpherePoint inverse_stereographic(const Coords4& u)
{
    Rational n = u[1] * u[1] + u[2] * u[2] + u[3] * u[3];
    Rational s = u[0] * u[0];
    return SpherePoint::on_sphere({Rational(n + s), Rational(2 * u[0] * u[1]), Rational(2 * u[0] * u[2]),
                                   Rational(2 * u[0] * u[3]), Rational(n - s)});
}

std::array<double, 3> chart_point(const SpherePoint& p)
{
    Coords4 u = stereographic(p);
    if (sgn(u[0]) == 0)
        throw PreconditionError("point lies on the Euclidean absolute");
    return {Rational(u[1] / u[0]).get_d(), Rational(u[2] / u[0]).get_d(), Rational(u[3] / u[0]).get_d()};
}

SpherePoint from_chart(const std::array<Rational, 3>& u)
{
    return inverse_stereographic({Rational(1), u[0], u[1], u[2]});
}

Coords4 central_projection(const SpherePoint& p)
{
    const auto& c = p.coords();
    return normalize_projective(Coords4{c[1], c[2], c[3], c[4]});
}

namespace {

// <v, w> / (|v| |w|) for the quaternion parts; x0^2 = |x|^2 on the sphere
double unit_inner(const SpherePoint& v, const SpherePoint& w)
{
    if (v.on_absolute(Absolute::elliptic) || w.on_absolute(Absolute::elliptic))
        throw PreconditionError("point on the elliptic absolute has no elliptic distance");
    const auto& a = v.coords();
    const auto& b = w.coords();
    Rational ip = a[1] * b[1] + a[2] * b[2] + a[3] * b[3] + a[4] * b[4];
    Rational cosv = ip / (a[0] * b[0]);
    double c = cosv.get_d();
    return std::max(-1.0, std::min(1.0, c));
}

} // namespace

double elliptic_distance(const SpherePoint& v, const SpherePoint& w)
{
    return std::acos(std::fabs(unit_inner(v, w)));
}

double elliptic_distance_cross_ratio(const SpherePoint& v, const SpherePoint& w)
{
    // points tau(v) + lambda tau(w) on the absolute quadric: |v|^2 + 2 lambda <v,w> + lambda^2 |w|^2 = 0
    double c = unit_inner(v, w);
    if (std::fabs(c) >= 1.0)
        return 0.0;
    std::complex<double> l1(-c, std::sqrt(1.0 - c * c)), l2(-c, -std::sqrt(1.0 - c * c));
    // cross ratio of (a, b; v, w) with v at lambda = 0 and w at lambda = infinity
    std::complex<double> cr = l1 / l2;
    // arg(cr) is 2 theta wrapped into (-pi, pi], so this already lands in [0, pi/2]
    return std::fabs(std::arg(cr)) / 2.0;
}

double euclidean_distance(const SpherePoint& v, const SpherePoint& w)
{
    auto a = chart_point(v), b = chart_point(w);
    double s = 0;
    for (int i = 0; i < 3; ++i)
        s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

CenterReflection CenterReflection::to_center(const SpherePoint& c)
{
    const auto& x = c.coords();
    Coords5 v = projection_center().coords();
    Coords5 w;
    if (sgn(x[0]) == 0)
        throw PreconditionError("projection center on the elliptic absolute is not supported");
    for (int i = 0; i < 5; ++i)
        w[i] = x[i] / x[0] - v[i];
    Rational bw = bilinear(w, w);
    if (sgn(bw) == 0)
        return {Coords5{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)}, Rational(0)};
    return {w, Rational(2 / bw)};
}

namespace {

std::array<Coords5, 2> plane_forms(const std::array<Coords5, 3>& rows)
{
    ExactMatrix<Rational> m(3, 5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j)
            m.at(i, j) = rows[i][j];
    auto k = nullspace(m);
    if (k.size() != 2)
        throw InputError("circle span does not have rank 3");
    std::array<Coords5, 2> f;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 5; ++j)
            f[i][j] = k[i][j];
    return f;
}

Rational dot(const Coords5& a, const Coords5& b)
{
    Rational s = 0;
    for (int i = 0; i < 5; ++i)
        s += a[i] * b[i];
    return s;
}

} // namespace

Circle Circle::from_span(const std::array<Coords5, 3>& rows, const std::optional<SpherePoint>& base)
{
    Circle c;
    c.span_ = rows;
    c.forms_ = plane_forms(rows);
    ExactMatrix<Rational> g(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            g.at(i, j) = bilinear(rows[i], rows[j]);
    if (sgn(determinant(g)) == 0)
        throw InputError("plane section of the sphere is a reducible conic");
    if (base) {
        if (!c.contains(*base))
            throw InputError("base point does not lie on the circle");
        c.base_ = base;
    }
    return c;
}

Circle Circle::through(const SpherePoint& p, const SpherePoint& q, const SpherePoint& r)
{
    return from_span({p.coords(), q.coords(), r.coords()}, p);
}

bool Circle::contains_coords(const Coords5& c) const
{
    return sgn(dot(forms_[0], c)) == 0 && sgn(dot(forms_[1], c)) == 0 && sgn(sphere_form(c)) == 0;
}

bool Circle::contains(const SpherePoint& p) const { return contains_coords(p.coords()); }

bool Circle::is_great() const
{
    // (1:0:0:0:0) in the plane iff both forms vanish on it
    return sgn(forms_[0][0]) == 0 && sgn(forms_[1][0]) == 0;
}

bool Circle::same_circle(const Circle& o) const
{
    for (const auto& r : o.span_)
        if (sgn(dot(forms_[0], r)) != 0 || sgn(dot(forms_[1], r)) != 0)
            return false;
    return true;
}

std::array<Poly, 5> Circle::parametrization(const std::vector<std::string>& vars, std::size_t a,
                                            std::size_t b) const
{
    if (!base_)
        throw PreconditionError("circle has no rational base point");
    const Coords5& p = base_->coords();
    // complete p to a basis of the plane
    int qi = -1, ri = -1;
    const int pairs[3][2] = {{1, 2}, {0, 2}, {0, 1}};
    for (auto& pr : pairs) {
        ExactMatrix<Rational> m(3, 5);
        for (int j = 0; j < 5; ++j) {
            m.at(0, j) = p[j];
            m.at(1, j) = span_[pr[0]][j];
            m.at(2, j) = span_[pr[1]][j];
        }
        if (rank(m) == 3) {
            qi = pr[0];
            ri = pr[1];
            break;
        }
    }
    const Coords5& q = span_[qi];
    const Coords5& r = span_[ri];
    Rational bpq = bilinear(p, q), bpr = bilinear(p, r);
    Coords5 u, v;
    for (int i = 0; i < 5; ++i)
        u[i] = bpq * r[i] - bpr * q[i];
    v = sgn(bpr) != 0 ? r : q;
    Poly s0 = Poly::variable(vars, a), s1 = Poly::variable(vars, b);
    std::array<Poly, 5> w;
    for (int i = 0; i < 5; ++i)
        w[i] = s0 * u[i] + s1 * v[i];
    Poly qw = Poly(vars), bpw = Poly(vars);
    qw -= w[0] * w[0];
    bpw -= w[0] * p[0];
    for (int i = 1; i < 5; ++i) {
        qw += w[i] * w[i];
        bpw += w[i] * p[i];
    }
    std::array<Poly, 5> x;
    for (int i = 0; i < 5; ++i)
        x[i] = qw * p[i] - Rational(2) * bpw * w[i];
    // strip numeric content, orient so (1:0) is a positive multiple of p
    Integer l = 1, g = 0;
    for (const auto& c : x)
        for (const auto& [e, v2] : c.terms())
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v2.get_den_mpz_t());
    for (const auto& c : x)
        for (const auto& [e, v2] : c.terms()) {
            Integer n = v2.get_num() * (l / v2.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
    Rational scale(l, g);
    scale.canonicalize();
    Exponent e0(vars.size(), 0);
    e0[a] = 2;
    for (int i = 0; i < 5; ++i) {
        Rational c = x[i].coefficient(e0);
        if (sgn(c) != 0) {
            if (sgn(c) * sgn(p[i]) < 0)
                scale = -scale;
            break;
        }
    }
    for (auto& c : x)
        c *= scale;
    return x;
}

SpherePoint Circle::point_at(const Rational& s0, const Rational& s1) const
{
    std::vector<std::string> vars{"s0", "s1"};
    auto x = parametrization(vars, 0, 1);
    Coords5 c;
    for (int i = 0; i < 5; ++i)
        c[i] = x[i].evaluate(std::vector<Rational>{s0, s1});
    return SpherePoint::on_sphere(c);
}

std::optional<Circle> Circle::with_rational_point(int bound) const
{
    if (base_)
        return *this;
    for (int n = 1; n <= bound; ++n)
        for (int a = -n; a <= n; ++a)
            for (int b = -n; b <= n; ++b)
                for (int e = -n; e <= n; ++e) {
                    if (std::max({std::abs(a), std::abs(b), std::abs(e)}) != n)
                        continue;
                    Coords5 x;
                    for (int i = 0; i < 5; ++i)
                        x[i] = span_[0][i] * a + span_[1][i] * b + span_[2][i] * e;
                    if (sgn(sphere_form(x)) == 0)
                        return from_span(span_, SpherePoint::on_sphere(x));
                }
    return std::nullopt;
}

std::string Circle::to_string() const
{
    std::string s = "circle[";
    for (int i = 0; i < 3; ++i) {
        s += i ? "," : "";
        s += "(";
        for (int j = 0; j < 5; ++j)
            s += (j ? ":" : "") + span_[i][j].get_str();
        s += ")";
    }
    return s + "]";
}

std::array<Poly, 4> project(const std::array<Poly, 5>& x0, Projection proj, const std::optional<SpherePoint>& center)
{
    if (proj == Projection::tau)
        return {x0[1], x0[2], x0[3], x0[4]};
    std::array<Poly, 5> x = x0;
    if (center && *center != projection_center())
        x = CenterReflection::to_center(*center).apply(x0);
    return {x[0] - x[4], x[1], x[2], x[3]};
}

} // namespace celestial
