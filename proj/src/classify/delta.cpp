#include "celestial/classify/delta.hpp"

#include "celestial/errors.hpp"
#include "celestial/exactalg/resultant.hpp"

#include <random>

namespace celestial {

namespace {

using RU = UPoly<Rational>;

const std::vector<std::string>& xyz()
{
    static const std::vector<std::string> v{"x", "y", "z"};
    return v;
}

const std::vector<std::string>& xy()
{
    static const std::vector<std::string> v{"x", "y"};
    return v;
}

RU mulmod(const RU& a, const RU& b, const RU& m) { return (a * b) % m; }

// value of a 3-variable form at (x, 1, 0) or similar univariate substitution
RU at_line(const Poly& g, const std::vector<Poly>& images) { return multi_to_upoly(g.compose(images), 0); }

int delta_of_milnor(int mu) { return mu == 3 ? 2 : 1; }
int branches_of_milnor(int mu) { return mu == 2 ? 1 : 2; }

} // namespace

RU eval_mod(const Poly& f, const RU& eta, const RU& m)
{
    auto cs = coefficients_in(f, 1);
    RU acc;
    for (int k = (int)cs.size() - 1; k >= 0; --k)
        acc = (mulmod(acc, eta, m) + multi_to_upoly(cs[k], 0)) % m;
    return acc;
}

std::array<Rational, 4> random_plane(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::array<Rational, 4> a;
    do {
        for (auto& v : a)
            v = Rational((long)(rng() % 11) - 5);
    } while (sgn(a[0]) == 0 && sgn(a[1]) == 0 && sgn(a[2]) == 0 && sgn(a[3]) == 0);
    return a;
}

std::string SingularPoints::to_string() const
{
    std::string s = "roots of " + minimal.to_string("x") + ": (";
    for (std::size_t i = 0; i < coords.size(); ++i)
        s += (i ? " : " : "") + coords[i].to_string("x");
    return s + ") milnor " + std::to_string(milnor) + " delta " + std::to_string(delta);
}

SectionDelta curve_delta(const Poly& g, std::uint64_t seed)
{
    if (g.nvars() != 3 || !g.is_homogeneous())
        throw std::invalid_argument("plane curve must be a ternary form");
    const int n = g.total_degree();
    SectionDelta out;
    if (n <= 1)
        return out;
    const auto& v3 = xyz();
    const auto& v2 = xy();
    bool non_reduced = false;
    int high_order = 0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        out.attempts = attempt + 1;
        std::mt19937_64 rng(seed * 1000003ULL + attempt);
        std::array<std::array<Rational, 3>, 3> m;
        for (;;) {
            for (auto& row : m)
                for (auto& e : row)
                    e = Rational((long)(rng() % 7) - 3);
            Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            if (sgn(det) != 0)
                break;
        }
        std::vector<Poly> lin(3, Poly(v3));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                lin[i] += Poly::variable(v3, j) * m[i][j];
        Poly h = g.compose(lin);
        Exponent ey{0, n, 0};
        if (sgn(h.coefficient(ey)) == 0)
            continue; // (0:1:0) on the curve
        Poly hx = h.derivative(0), hy = h.derivative(1), hz = h.derivative(2);

        Poly X = Poly::variable(v2, 0);
        std::vector<Poly> aff{X, Poly::variable(v2, 1), Poly::constant(v2, Rational(1))};
        Poly f = h.compose(aff);
        Poly fx = f.derivative(0), fy = f.derivative(1);
        RU r1 = multi_to_upoly(resultant(f, fy, 1), 0);
        if (r1.is_zero()) {
            non_reduced = true;
            continue;
        }
        // no singular point on z = 0
        std::vector<Poly> line{X, Poly::constant(v2, Rational(1)), Poly(v2)};
        RU gi = gcd(gcd(at_line(h, line), at_line(hx, line)), gcd(at_line(hy, line), at_line(hz, line)));
        if (gi.degree() > 0)
            continue;
        std::vector<Rational> e100{Rational(1), Rational(0), Rational(0)};
        if (sgn(hx.evaluate(e100)) == 0 && sgn(hy.evaluate(e100)) == 0 && sgn(hz.evaluate(e100)) == 0)
            continue;

        RU r2 = multi_to_upoly(resultant(fx, fy, 1), 0);
        if (r2.is_zero())
            continue;
        RU d = squarefree_part(gcd(r1, r2));
        out.points.clear();
        out.total = 0;
        if (d.degree() <= 0)
            return out;
        if (fx.degree_in(1) < 1 || fy.degree_in(1) < 1)
            continue;
        Poly s1 = subresultant(fx, fy, 1, 1);
        auto sc = coefficients_in(s1, 1);
        RU s11 = sc.size() > 1 ? multi_to_upoly(sc[1], 0) : RU();
        RU s10 = multi_to_upoly(sc[0], 0);
        if (s11.is_zero() || gcd(d, s11).degree() > 0) {
            ++high_order; // two critical points over one x, or a point of multiplicity three
            continue;
        }
        auto inv = inverse_mod(s11 % d, d);
        if (!inv)
            continue;
        RU eta = mulmod(-s10, *inv, d);
        RU dg = gcd(d, eval_mod(f, eta, d));
        dg = gcd(dg, eval_mod(fx, eta, d));
        dg = gcd(dg, eval_mod(fy, eta, d));
        if (dg.degree() <= 0)
            return out;
        for (const auto& sf : squarefree_decomposition(r2)) {
            RU part = gcd(dg, sf.factor);
            if (part.degree() <= 0)
                continue;
            if (sf.multiplicity > 3)
                throw UnsupportedError("unsupported singularity (Milnor number " + std::to_string(sf.multiplicity) +
                                       ") at roots of " + part.to_string("x"));
            SingularPoints sp;
            sp.minimal = part.monic();
            RU e = eta % part;
            std::array<RU, 3> pt{RU::x() % part, e, RU::constant(Rational(1))};
            for (int i = 0; i < 3; ++i) {
                RU c;
                for (int j = 0; j < 3; ++j)
                    c += pt[j] * m[i][j];
                sp.coords.push_back(c % part);
            }
            sp.milnor = sf.multiplicity;
            sp.delta = delta_of_milnor(sp.milnor);
            sp.branches = branches_of_milnor(sp.milnor);
            out.total += sp.delta * sp.count();
            out.points.push_back(sp);
        }
        return out;
    }
    if (non_reduced)
        throw PreconditionError("plane section is not reduced (tangent along a curve)");
    if (high_order > 0)
        throw UnsupportedError("unsupported singularity: the partials share a multiple root over a vertical line");
    throw DegenerateError("no generic coordinates found for the plane section");
}

SectionDelta plane_section_delta(const Poly& surface, const std::array<Rational, 4>& plane, std::uint64_t seed)
{
    PlaneRestriction pr = plane_restriction(surface, plane);
    SectionDelta sd = curve_delta(pr.curve, seed);
    sd.plane = plane;
    for (auto& sp : sd.points) {
        std::vector<RU> c4(4);
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 3; ++i)
                c4[k] += sp.coords[i] * pr.embedding[i][k];
        for (auto& c : c4)
            c = c % sp.minimal;
        sp.coords = c4;
    }
    return sd;
}

std::vector<SingularPoints> points_on(const SectionDelta& s, const std::vector<Poly>& forms)
{
    std::vector<SingularPoints> out;
    for (const auto& sp : s.points) {
        RU part = sp.minimal;
        for (const auto& form : forms) {
            if (form.nvars() != sp.coords.size())
                throw std::invalid_argument("form arity does not match the point coordinates");
            RU val;
            for (const auto& [e, c] : form.terms()) {
                RU t = RU::constant(c);
                for (std::size_t i = 0; i < e.size(); ++i)
                    for (int k = 0; k < e[i]; ++k)
                        t = mulmod(t, sp.coords[i], sp.minimal);
                val += t;
            }
            part = gcd(part, val % sp.minimal);
            if (part.degree() <= 0)
                break;
        }
        if (part.degree() > 0) {
            SingularPoints q = sp;
            q.minimal = part;
            for (auto& c : q.coords)
                c = c % part;
            out.push_back(q);
        }
    }
    return out;
}

int delta_on(const SectionDelta& s, const std::vector<Poly>& forms)
{
    int total = 0;
    for (const auto& sp : points_on(s, forms))
        total += sp.delta * sp.count();
    return total;
}

} // namespace celestial
