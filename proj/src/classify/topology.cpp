#include "celestial/classify/topology.hpp"

#include "celestial/errors.hpp"

#include <random>

namespace celestial {

std::string to_string(Topology t)
{
    switch (t) {
    case Topology::exclusive_tori:
        return "exclusive-tori";
    case Topology::torus:
        return "torus";
    case Topology::inclusive_tori:
        return "inclusive-tori";
    default:
        return "n/a";
    }
}

std::array<Poly, 2> circle_forms_on(const Circle& c, const std::array<Poly, 5>& curve)
{
    std::array<Poly, 2> out;
    for (int k = 0; k < 2; ++k) {
        Poly acc(curve[0].variables());
        for (int i = 0; i < 5; ++i)
            if (sgn(c.linear_forms()[k][i]) != 0)
                acc += curve[i] * c.linear_forms()[k][i];
        out[k] = acc;
    }
    return out;
}

TopologyResult topology_class(const SurfaceParam& f, const CoincidentRulings& cr, std::uint64_t seed)
{
    if (f.kind != SurfaceKind::clifford || !f.c1.is_great() || f.c2.is_great())
        throw PreconditionError("topology class needs a great circle translated along a little circle");
    const auto& vars = surface_vars();
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Rational s = make_rational((long)(rng() % 41) - 20, (long)(rng() % 9) + 1);
        std::vector<Poly> images;
        images.push_back(Poly::constant(vars, s));
        images.push_back(Poly::constant(vars, Rational(1)));
        images.push_back(Poly::variable(vars, 2));
        images.push_back(Poly::variable(vars, 3));
        std::array<Poly, 5> member;
        for (int i = 0; i < 5; ++i)
            member[i] = f.sphere[i].compose(images);
        auto forms = circle_forms_on(cr.v0, member);
        if (forms[0].is_zero() && forms[1].is_zero())
            continue; // member inside the coincident circle's plane
        TopologyResult r;
        r.s_member = s;
        UPoly<Rational> g;
        bool inf = true;
        for (const auto& fm : forms) {
            g = gcd(g, dehomogenize_binary(fm, 2, 3));
            // (1:0) is a root iff the t0^deg coefficient vanishes
            Exponent e(4, 0);
            e[2] = fm.total_degree();
            if (!fm.is_zero() && sgn(fm.coefficient(e)) != 0)
                inf = false;
        }
        if (g.is_zero())
            continue;
        r.intersection = g;
        r.at_infinity = inf;
        r.real_points = real_root_count(squarefree_part(g)) + (inf ? 1 : 0);
        r.double_root = g.degree() > 0 && squarefree_part(g).degree() < g.degree();
        r.tag = r.real_points == 0 ? Topology::exclusive_tori
                : r.real_points == 1 ? Topology::torus
                                     : Topology::inclusive_tori;
        if (r.real_points > 2)
            throw DegenerateError("little member meets the coincident circle in more than two points");
        return r;
    }
    throw DegenerateError("no generic little member found");
}

} // namespace celestial
