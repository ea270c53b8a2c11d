#include "doctest.h"

#include "celestial/classify/delta.hpp"
#include "celestial/classify/lattice.hpp"
#include "celestial/classify/multiplicity.hpp"
#include "celestial/classify/report.hpp"
#include "celestial/classify/topology.hpp"
#include "celestial/classify/types.hpp"
#include "celestial/errors.hpp"
#include "celestial/fixtures.hpp"
#include "celestial/implicitize.hpp"

#include <cmath>
#include <map>
#include <random>

using namespace celestial;

namespace {

const std::vector<std::string> kXYZ{"X", "Y", "Z"};

Poly curve(const std::string& s) { return parse_polynomial(s, kXYZ); }

const ImplicitSurface& tau_of(const std::string& name)
{
    static std::map<std::string, ImplicitSurface> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        auto f = builtin_fixture(name);
        it = cache.emplace(name, implicit_equation(synthesize(f), Projection::tau, 8, f.center)).first;
    }
    return it->second;
}

ImplicitSurface pi_of(const std::string& name)
{
    auto f = builtin_fixture(name);
    return implicit_equation(synthesize(f), Projection::pi, 8, f.center);
}

Poly random_linear(std::mt19937_64& rng)
{
    Poly p(kXYZ);
    for (int i = 0; i < 3; ++i)
        p += Poly::variable(kXYZ, i) * Rational((long)(rng() % 11) - 5);
    return p;
}

Poly random_conic(std::mt19937_64& rng)
{
    Poly p(kXYZ);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            p += Poly::variable(kXYZ, i) * Poly::variable(kXYZ, j) * Rational((long)(rng() % 11) - 5);
    return p;
}

std::array<double, 5> unit5(const std::array<Poly, 5>& x, double a, double b)
{
    std::array<double, 5> r;
    for (int i = 0; i < 5; ++i) {
        double s = 0;
        for (const auto& [e, c] : x[i].terms())
            s += c.get_d() * std::pow(a, e[0]) * std::pow(b, e[1]);
        r[i] = s;
    }
    for (int i = 4; i >= 0; --i)
        r[i] /= r[0];
    return r;
}

// minimum distance between two real circles on the sphere by dense sampling
double sampled_distance(const std::array<Poly, 5>& p, const std::array<Poly, 5>& q)
{
    const int n = 1500;
    std::vector<std::array<double, 5>> ps, qs;
    for (int k = 0; k < n; ++k) {
        double th = M_PI * k / n;
        ps.push_back(unit5(p, std::cos(th), std::sin(th)));
        qs.push_back(unit5(q, std::cos(th), std::sin(th)));
    }
    double best = 1e300;
    for (const auto& a : ps)
        for (const auto& b : qs) {
            double d = 0;
            for (int i = 1; i < 5; ++i)
                d += (a[i] - b[i]) * (a[i] - b[i]);
            best = std::min(best, d);
        }
    return std::sqrt(best);
}

} // namespace

TEST_CASE("elliptic types of the clifford fixtures")
{
    struct Row {
        const char* name;
        const char* type;
        int d;
    };
    for (const Row& row : {Row{"torus", "(2;1,1)", 2}, Row{"great-little", "(4;2,1)", 4},
                           Row{"little-little", "(8;2,2)", 8}}) {
        CAPTURE(row.name);
        auto et = elliptic_type(tau_of(row.name));
        CHECK(et.to_string() == row.type);
        CHECK(et.d == row.d);
        CHECK(et.restriction_bidegree == row.d);
        CHECK(et.lines_only);
        CHECK(et.conjugation_closed);
        // one conjugate pair of generators in each ruling
        int per_ruling[2] = {0, 0};
        int bezout = 0;
        for (const auto& gl : et.lines) {
            per_ruling[gl.ruling] += gl.factor.degree();
            bezout += gl.factor.degree() * gl.intersection_multiplicity;
        }
        CHECK(per_ruling[0] == 2);
        CHECK(per_ruling[1] == 2);
        CHECK(bezout <= 2 * et.d);
    }
}

TEST_CASE("euclidean types and outcomes")
{
    CHECK(euclidean_type(pi_of("torus")).to_string() == "(4,2)");
    CHECK(euclidean_type(pi_of("great-little")).to_string() == "(8,4)");
    struct Row {
        const char* name;
        QuadricKind kind;
        const char* type;
    };
    for (const Row& row : {Row{"euclid-plane", QuadricKind::plane, "(1,0)"},
                           Row{"euclid-circular-cylinder", QuadricKind::circular_cylinder, "(2,0)"},
                           Row{"euclid-elliptic-cylinder", QuadricKind::elliptic_cylinder, "(2,0)"},
                           Row{"euclid-quartic", QuadricKind::quartic, "(4,0)"}}) {
        CAPTURE(row.name);
        auto p = pi_of(row.name);
        CHECK(euclidean_type(p).to_string() == row.type);
        CHECK(euclidean_outcome(p) == row.kind);
    }
    // classical ring torus (x^2+y^2+z^2+R^2-r^2)^2 = 4R^2(x^2+y^2) with R = 2, r = 1
    const auto& yv = projection_vars(Projection::pi);
    Poly a = parse_polynomial("y1^2+y2^2+y3^2+3*y0^2", yv);
    Poly ring = a * a - parse_polynomial("16*y0^2*y1^2+16*y0^2*y2^2", yv);
    ImplicitSurface s{ring, 4, Projection::pi, "ring", true};
    CHECK(euclidean_type(s).to_string() == "(4,2)");
    ImplicitSurface inf{Poly::variable(yv, 0) * Poly::variable(yv, 1), 2, Projection::pi, "", true};
    CHECK_THROWS_AS(euclidean_type(inf), UnsupportedError);
}

TEST_CASE("multiplicity along curves")
{
    const auto& t = tau_of("torus");
    const auto& sv = surface_vars();
    Poly s = Poly::variable(sv, 0), u = Poly::variable(sv, 1);
    // ruling line x1 = 3 x3, x2 = -3 x4 of x1 x4 + x2 x3
    std::array<Poly, 4> line{s * Rational(3), u * Rational(-3), s, u};
    CHECK(multiplicity_along_curve<Rational>(t.poly, line) == 1);
    std::array<Poly, 4> off{s, u, s, u};
    CHECK_THROWS_AS(multiplicity_along_curve<Rational>(t.poly, off), PreconditionError);

    auto f = builtin_fixture("great-little");
    auto cr = find_coincident_rulings(f.c1, f.c2);
    REQUIRE(cr.has_value());
    auto v0 = cr->v0.with_rational_point();
    REQUIRE(v0.has_value());
    auto w0 = project(v0->parametrization(sv, 0, 1), Projection::tau);
    CHECK(multiplicity_along_curve<Rational>(tau_of("great-little").poly, w0) == 2);
}

TEST_CASE("delta invariants of plane curves")
{
    CHECK(curve_delta(curve("X^2+Y^2-Z^2")).total == 0);
    CHECK(curve_delta(curve("Y^2*Z-X^3-X^2*Z")).total == 1);
    auto cusp = curve_delta(curve("Y^2*Z-X^3"));
    CHECK(cusp.total == 1);
    REQUIRE(cusp.points.size() == 1);
    CHECK(cusp.points[0].milnor == 2);
    CHECK(cusp.points[0].branches == 1);
    auto tac = curve_delta(curve("Y^2*Z^2-X^4-Y^4"));
    CHECK(tac.total == 2);
    REQUIRE(tac.points.size() == 1);
    CHECK(tac.points[0].milnor == 3);
    CHECK_THROWS_AS(curve_delta(curve("Y^2*Z^3-X^5")), UnsupportedError);
    CHECK_THROWS_AS(curve_delta(curve("Y^2*Z^4-X^6")), UnsupportedError);
    CHECK_THROWS_AS(curve_delta(curve("X^3*Z-Y^3*Z+X^4+Y^4")), UnsupportedError);
    Poly c = curve("X*Z-Y^2");
    CHECK_THROWS_AS(curve_delta(c * c), PreconditionError);
}

TEST_CASE("delta of line and conic arrangements matches the Bezout node count")
{
    std::mt19937_64 rng(9);
    for (int k = 0; k < 6; ++k) {
        Poly l1 = random_linear(rng), l2 = random_linear(rng), c = random_conic(rng);
        if (l1.is_zero() || l2.is_zero() || c.total_degree() != 2)
            continue;
        // nodes: l1.l2 once, each line meets the conic twice
        auto sd = curve_delta(l1 * l2 * c, k + 1);
        CHECK(sd.total == 5);
        int points = 0;
        for (const auto& p : sd.points) {
            CHECK(p.milnor == 1);
            points += p.count();
        }
        CHECK(points == 5);
    }
}

TEST_CASE("generic plane sections of the great-little quartic have delta 3")
{
    const auto& q = tau_of("great-little");
    for (std::uint64_t seed : {1, 2, 3}) {
        auto sd = plane_section_delta(q.poly, random_plane(seed), seed);
        CHECK(sd.total == 3);
        // singular points returned on the surface
        for (const auto& p : sd.points)
            CHECK(p.coords.size() == 4);
    }
}

TEST_CASE("topology trichotomy with a sampled distance oracle")
{
    struct Row {
        const char* name;
        Topology tag;
        int real;
    };
    double dist[3];
    int idx = 0;
    for (const Row& row : {Row{"topology-exclusive", Topology::exclusive_tori, 0},
                           Row{"topology-torus", Topology::torus, 1},
                           Row{"topology-inclusive", Topology::inclusive_tori, 2}}) {
        CAPTURE(row.name);
        auto f = builtin_fixture(row.name);
        auto sp = synthesize(f);
        auto cr = find_coincident_rulings(f.c1, f.c2);
        REQUIRE(cr.has_value());
        auto tr = topology_class(sp, *cr, f.seed);
        CHECK(tr.tag == row.tag);
        CHECK(tr.real_points == row.real);
        CHECK(tr.double_root == (row.tag == Topology::torus));
        // the little member through s_member against V0
        auto member = sp.sphere;
        std::vector<Poly> images{Poly::constant(surface_vars(), tr.s_member), Poly::constant(surface_vars(), Rational(1)),
                                 Poly::variable(surface_vars(), 0), Poly::variable(surface_vars(), 1)};
        for (auto& c : member)
            c = c.compose(images);
        auto v0c = cr->v0.with_rational_point();
        REQUIRE(v0c.has_value());
        auto v0 = v0c->parametrization(surface_vars(), 0, 1);
        dist[idx++] = sampled_distance(member, v0);
    }
    CHECK(dist[0] > 1e-2);
    CHECK(dist[2] < 1e-2);
}

TEST_CASE("lattice genus identities")
{
    auto e4 = picard_lattice(LatticeType::E4);
    CHECK(arithmetic_genus(e4, {1, 1}) == 0);
    auto s2 = picard_lattice(LatticeType::S2);
    CHECK(arithmetic_genus(s2, {3, 5}) == 8);
    for (int a = -4; a <= 4; ++a)
        for (int b = -4; b <= 4; ++b)
            CHECK(arithmetic_genus(s2, {a, b}) == a * b - a - b + 1);
    auto s8 = picard_lattice(LatticeType::S8);
    DivisorClass mk = s8.canonical;
    for (auto& x : mk)
        x = -x;
    CHECK(arithmetic_genus(s8, mk) == 1);
    CHECK(intersection_product(s8, {1, 0}, {0, 1}) == 1);
    CHECK(intersection_product(s8, s8.canonical, s8.canonical) == 8);
    CHECK_THROWS_AS(intersection_product(s8, {1, 0, 0}, {0, 1}), std::invalid_argument);
    auto s4 = picard_lattice(LatticeType::S4);
    // -K = 3H - Q1 - ... - Q5
    CHECK(s4.canonical == DivisorClass{-3, 1, 1, 1, 1, 1});
    CHECK(intersection_product(s4, s4.canonical, s4.canonical) == 4);
}

TEST_CASE("arithmetic genus agrees with brute force on random classes")
{
    std::mt19937_64 rng(13);
    for (auto t : all_lattice_types()) {
        auto l = picard_lattice(t);
        const std::size_t n = l.basis.size();
        for (int k = 0; k < 100; ++k) {
            DivisorClass c(n);
            for (auto& x : c)
                x = (int)(rng() % 11) - 5;
            long cc = 0, ck = 0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    cc += (long)c[i] * c[j] * l.gram[i][j];
                    ck += (long)c[i] * l.canonical[j] * l.gram[i][j];
                }
            CHECK((cc + ck) % 2 == 0);
            CHECK(arithmetic_genus(l, c) == (cc + ck) / 2 + 1);
        }
    }
}

TEST_CASE("lattice consistency passes for every type")
{
    for (auto t : all_lattice_types()) {
        CAPTURE(to_string(t));
        auto checks = lattice_consistency(t);
        CHECK_FALSE(checks.empty());
        for (const auto& c : checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
        auto l = picard_lattice(t);
        for (std::size_t i = 0; i < l.basis.size(); ++i) {
            DivisorClass e(l.basis.size(), 0);
            e[i] = 1;
            CHECK(apply_sigma(l, apply_sigma(l, e)) == e);
        }
        CHECK(parse_lattice_type(to_string(t)) == t);
    }
}

TEST_CASE("classification reports")
{
    for (const auto& name : builtin_fixture_names()) {
        CAPTURE(name);
        auto f = builtin_fixture(name);
        auto r = classify_celestial(f);
        CHECK(r.expectation_diffs.empty());
        for (const auto& d : r.expectation_diffs)
            MESSAGE(d.check << ": expected " << d.expected << ", got " << d.actual);
        auto js = to_json(r);
        CHECK(report_from_json(js) == r);
        CHECK(to_json(classify_celestial(f)) == js);
        for (const auto& lc : r.lattice_checks)
            CHECK(lc.pass);
    }
    CHECK_THROWS_AS(report_from_json("{\"degrees\": "), InputError);
}

TEST_CASE("great-little report singular components")
{
    auto r = classify_celestial(builtin_fixture("great-little"));
    CHECK(r.degrees.sphere == 8);
    CHECK(r.degrees.tau == 4);
    CHECK(r.elliptic_type == "(4;2,1)");
    CHECK(r.euclidean_type == "(8,4)");
    CHECK(r.topology == "inclusive-tori");
    std::map<std::string, SingularComponentRecord> by;
    for (const auto& c : r.singular_components)
        by[c.label] = c;
    const std::vector<std::pair<std::string, int>> sphere{{"V0", 2}, {"V1", 2}, {"V2", 2}, {"Va", 1}, {"Vb", 1}};
    int total = 0;
    for (const auto& [label, delta] : sphere) {
        REQUIRE(by.count(label));
        CHECK(by[label].level == "sphere");
        CHECK(by[label].multiplicity == 2);
        REQUIRE(by[label].sectional_delta.has_value());
        CHECK(*by[label].sectional_delta == delta);
        total += delta;
    }
    CHECK(total == 8);
    // the doubling relation between the central projection and the sphere
    REQUIRE(by.count("W0"));
    CHECK(*by["V0"].sectional_delta == 2 * *by["W0"].sectional_delta);
    for (const char* w : {"W0", "W1", "W2"}) {
        REQUIRE(by.count(w));
        CHECK(by[w].multiplicity == 2);
        CHECK(by[w].level == "tau");
    }
}

TEST_CASE("euclidean quartic is not of a clifford elliptic type")
{
    auto r = classify_celestial(builtin_fixture("euclid-quartic"));
    CHECK(r.euclidean_type == "(4,0)");
    for (const char* t : {"(2;1,1)", "(4;2,1)", "(8;2,2)"})
        CHECK(r.elliptic_type != t);
    REQUIRE(r.degrees.lift_bidegree.has_value());
}
