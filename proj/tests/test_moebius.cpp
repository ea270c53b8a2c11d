#include "doctest.h"

#include "celestial/errors.hpp"
#include "celestial/exactalg/matrix.hpp"
#include "celestial/moebius.hpp"

#include <cmath>
#include <random>

using namespace celestial;

namespace {

SpherePoint pt(long a, long b, long c, long d, long e) { return SpherePoint::from_ints(a, b, c, d, e); }

Rational rnd_rational(std::mt19937_64& rng)
{
    return make_rational((long)(rng() % 21) - 10, (long)(rng() % 7) + 1);
}

SpherePoint random_point(std::mt19937_64& rng)
{
    return from_chart({rnd_rational(rng), rnd_rational(rng), rnd_rational(rng)});
}

// unit quaternion of a real point as doubles
std::array<double, 4> unit(const SpherePoint& p)
{
    double n = p[0].get_d();
    return {p[1].get_d() / n, p[2].get_d() / n, p[3].get_d() / n, p[4].get_d() / n};
}

double angle_oracle(const SpherePoint& v, const SpherePoint& w)
{
    auto a = unit(v), b = unit(w);
    double c = a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
    double t = std::acos(std::max(-1.0, std::min(1.0, c)));
    return std::min(t, M_PI - t);
}

} // namespace

TEST_CASE("points on the sphere")
{
    CHECK(identity_point() == pt(1, 1, 0, 0, 0));
    CHECK_NOTHROW(pt(5, 3, 4, 0, 0));
    CHECK_THROWS_AS(pt(1, 1, 1, 0, 0), InputError);
    try {
        pt(1, 1, 1, 0, 0);
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("residual 1") != std::string::npos);
    }
    // proportional coordinates compare equal after normalization
    CHECK(pt(10, 6, 8, 0, 0) == pt(5, 3, 4, 0, 0));
    CHECK(pt(-5, -3, -4, 0, 0) == pt(5, 3, 4, 0, 0));
    CHECK_THROWS(pt(0, 0, 0, 0, 0));
}

TEST_CASE("hamiltonian product examples")
{
    auto p = pt(5, 3, 4, 0, 0);
    CHECK(ham_product(identity_point(), p) == p);
    CHECK(ham_product(pt(1, 0, 1, 0, 0), pt(1, 0, 0, 1, 0)) == pt(1, 0, 0, 0, 1));
    CHECK(ham_product(pt(5, 3, 4, 0, 0), pt(5, 0, 0, 3, 4)) == pt(25, 0, 0, -7, 24));
}

TEST_CASE("hamiltonian product is associative with identity m on 200 random points")
{
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        auto a = random_point(rng), b = random_point(rng), c = random_point(rng);
        CHECK(ham_product(ham_product(a, b), c) == ham_product(a, ham_product(b, c)));
        CHECK(ham_product(a, identity_point()) == a);
        CHECK(ham_product(identity_point(), a) == a);
        // norm multiplicativity before normalization
        auto raw = sphere_mul(a.coords(), b.coords());
        CHECK(raw[0] == a[0] * b[0]);
        CHECK(sgn(sphere_form(raw)) == 0);
    }
}

TEST_CASE("quaternion view round trip")
{
    auto p = pt(25, 0, 0, -7, 24);
    auto q = QuaternionView::of(p);
    CHECK(q.norm == 25);
    CHECK(q.z == 24);
    CHECK(q.unview() == p);
}

TEST_CASE("stereographic projection")
{
    auto u = stereographic(identity_point());
    CHECK(u == normalize_projective<4>({Rational(1), Rational(1), Rational(0), Rational(0)}));
    CHECK_THROWS_AS(stereographic(projection_center()), PreconditionError);
    auto back = inverse_stereographic({Rational(1), Rational(0), Rational(0), Rational(0)});
    CHECK(back == pt(1, 0, 0, 0, -1));
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        Coords4 c{Rational((long)(rng() % 5) + 1), rnd_rational(rng), rnd_rational(rng), rnd_rational(rng)};
        CHECK(stereographic(inverse_stereographic(c)) == normalize_projective<4>(c));
        auto p = random_point(rng);
        CHECK(inverse_stereographic(stereographic(p)) == p);
    }
}

TEST_CASE("central projection identifies antipodes")
{
    CHECK(central_projection(pt(1, 1, 0, 0, 0)) == central_projection(pt(1, -1, 0, 0, 0)));
    CHECK(central_projection(pt(5, 3, 4, 0, 0)) == Coords4{Rational(3), Rational(4), Rational(0), Rational(0)});
    std::mt19937_64 rng(6);
    for (int k = 0; k < 50; ++k) {
        auto p = random_point(rng);
        CHECK(central_projection(p) == central_projection(p.antipode()));
    }
}

TEST_CASE("great circle projects to a line")
{
    auto c = Circle::through(identity_point(), pt(1, 0, 1, 0, 0), pt(1, -1, 0, 0, 0));
    ExactMatrix<Rational> m(3, 4);
    for (int i = 0; i < 3; ++i) {
        auto q = central_projection(c.point_at(Rational(i), Rational(1)));
        for (int j = 0; j < 4; ++j)
            m.at(i, j) = q[j];
    }
    CHECK(rank(m) == 2);
}

TEST_CASE("elliptic distance")
{
    auto v = pt(5, 3, 4, 0, 0);
    CHECK(elliptic_distance(v, v) == doctest::Approx(0).epsilon(1e-12));
    CHECK(elliptic_distance(v, v.antipode()) == doctest::Approx(0).epsilon(1e-12));
    CHECK(elliptic_distance(identity_point(), pt(1, 0, 1, 0, 0)) == doctest::Approx(M_PI / 2));
    std::mt19937_64 rng(7);
    for (int k = 0; k < 100; ++k) {
        auto a = random_point(rng), b = random_point(rng);
        CHECK(std::abs(elliptic_distance(a, b) - angle_oracle(a, b)) < 1e-9);
        CHECK(std::abs(elliptic_distance(a, b) - elliptic_distance(b, a)) < 1e-12);
        // the literal cross-ratio path agrees with the angle formula
        CHECK(std::abs(elliptic_distance_cross_ratio(a, b) - elliptic_distance(a, b)) < 1e-9);
    }
}

TEST_CASE("clifford translations preserve the elliptic distance")
{
    std::mt19937_64 rng(8);
    for (int k = 0; k < 50; ++k) {
        auto q = random_point(rng), a = random_point(rng), b = random_point(rng);
        CHECK(std::abs(elliptic_distance(ham_product(q, a), ham_product(q, b)) - elliptic_distance(a, b)) < 1e-9);
        CHECK(std::abs(elliptic_distance(ham_product(a, q), ham_product(b, q)) - elliptic_distance(a, b)) < 1e-9);
    }
}

TEST_CASE("euclidean distance")
{
    auto o = from_chart({Rational(0), Rational(0), Rational(0)});
    auto p = from_chart({Rational(3), Rational(4), Rational(0)});
    CHECK(euclidean_distance(o, o) == doctest::Approx(0));
    CHECK(euclidean_distance(o, p) == doctest::Approx(5));
    // (1:1:0:0:1) has x0 = x4
    CHECK_THROWS(euclidean_distance(o, pt(1, 0, 1, 0, 1)));
}

TEST_CASE("circles and great or little")
{
    auto m = identity_point();
    auto wi = Circle::through(m, pt(1, 0, 1, 0, 0), pt(1, -1, 0, 0, 0));
    auto lit = Circle::through(m, pt(5, 3, 4, 0, 0), pt(5, 3, 0, 4, 0));
    CHECK(wi.is_great());
    CHECK_FALSE(lit.is_great());
    CHECK_THROWS(Circle::through(m, m, m));
    // re-choosing the spanning points
    auto wi2 = Circle::through(pt(5, 3, 4, 0, 0), pt(5, 4, -3, 0, 0), pt(1, 0, 1, 0, 0));
    CHECK(wi2.is_great());
    CHECK(wi2.same_circle(wi));
    auto lit2 = Circle::through(lit.point_at(Rational(1), Rational(2)), lit.point_at(Rational(3), Rational(-1)),
                                lit.point_at(Rational(0), Rational(1)));
    CHECK_FALSE(lit2.is_great());
    CHECK(lit2.same_circle(lit));
}

TEST_CASE("circle parametrization")
{
    const std::vector<std::string> st{"s0", "s1"};
    auto m = identity_point();
    auto wi = Circle::through(m, pt(1, 0, 1, 0, 0), pt(1, -1, 0, 0, 0));
    auto x = wi.parametrization(st, 0, 1);
    CHECK(x[0] == parse_polynomial("s0^2+s1^2", st));
    CHECK(x[1] == parse_polynomial("s0^2-s1^2", st));
    CHECK(x[2] == parse_polynomial("2*s0*s1", st));
    CHECK(x[3].is_zero());
    CHECK(x[4].is_zero());
    CHECK(wi.point_at(Rational(1), Rational(0)) == m);

    auto lit = Circle::through(m, pt(5, 3, 4, 0, 0), pt(5, 3, 0, 4, 0));
    for (const auto& c : {wi, lit}) {
        auto p = c.parametrization(st, 0, 1);
        Poly q = p[0] * p[0] * Rational(-1);
        for (int i = 1; i < 5; ++i)
            q += p[i] * p[i];
        CHECK(q.is_zero());
        for (const auto& f : c.linear_forms()) {
            Poly l(st);
            for (int i = 0; i < 5; ++i)
                l += p[i] * f[i];
            CHECK(l.is_zero());
        }
        // tau image has rank 2 exactly when the circle is great
        ExactMatrix<Rational> mm(3, 4);
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 4; ++j)
                mm.at(k, j) = p[j + 1].coefficient(Exponent{2 - k, k});
        CHECK((rank(mm) == 2) == c.is_great());
    }
}
