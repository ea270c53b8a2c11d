#include "doctest.h"

#include "celestial/errors.hpp"
#include "celestial/exactalg/matrix.hpp"
#include "celestial/fixtures.hpp"
#include "celestial/implicitize.hpp"

#include <random>

using namespace celestial;

namespace {

const std::vector<std::string>& xs() { return projection_vars(Projection::tau); }

// cos and sin of the half-angle substitution u
std::pair<Rational, Rational> cs(const Rational& u)
{
    Rational d = 1 + u * u;
    return {Rational((1 - u * u) / d), Rational(2 * u / d)};
}

} // namespace

TEST_CASE("clifford torus quadric against the trigonometric expansion")
{
    auto torus = synthesize(builtin_fixture("torus"));
    auto r = implicitize(torus, Projection::tau);
    CHECK(r.degree == 2);
    CHECK(r.kernel_dimension == 1);
    REQUIRE(r.surface.has_value());
    Poly q = parse_polynomial("x1*x4+x2*x3", xs());
    CHECK(r.surface->poly == q);
    CHECK(r.surface->certificate);
    // (cos t + j sin t)(cos s + i sin s) has coordinates (ct cs, ct ss, st cs, -st ss)
    for (long a = -3; a <= 3; ++a)
        for (long b = 1; b <= 4; ++b) {
            auto [cs_, ss] = cs(make_rational(a, b));
            auto [ct, st] = cs(make_rational(b, a == 0 ? 1 : a));
            std::vector<Rational> x{ct * cs_, ct * ss, st * cs_, -st * ss};
            CHECK(sgn(q.evaluate(x)) == 0);
        }
}

TEST_CASE("tau and pi degrees of the clifford fixtures")
{
    struct Row {
        const char* name;
        int tau, pi;
    };
    for (const Row& row : {Row{"torus", 2, 4}, Row{"great-little", 4, 8}, Row{"little-little", 8, 8}}) {
        CAPTURE(row.name);
        auto f = builtin_fixture(row.name);
        auto sp = synthesize(f);
        auto t = implicit_equation(sp, Projection::tau, 8, f.center, row.name);
        CHECK(t.degree == row.tau);
        CHECK(t.certificate);
        CHECK(t.source == row.name);
        auto p = implicit_equation(sp, Projection::pi, 8, f.center);
        CHECK(p.degree == row.pi);
        CHECK(p.certificate);
        CHECK(p.projection == Projection::pi);
        CHECK(p.poly.variables() == projection_vars(Projection::pi));
        // minimality: nothing of lower degree annihilates
        if (row.tau > 2)
            CHECK_THROWS_AS(implicitize(sp, Projection::tau, row.tau - 1), DegreeBoundExceeded);
        CHECK_THROWS_AS(implicitize(sp, Projection::pi, row.pi - 1, f.center), DegreeBoundExceeded);
    }
}

TEST_CASE("implicitization input checks and diagnostics")
{
    auto torus = synthesize(builtin_fixture("torus"));
    CHECK_THROWS_AS(implicitize(torus, Projection::tau, 1), std::invalid_argument);
    // a line in P3 has a two dimensional kernel in degree 1
    const auto& sv = surface_vars();
    std::array<Poly, 4> line{Poly::variable(sv, 0), Poly::variable(sv, 1), Poly(sv), Poly(sv)};
    auto r = implicitize_coordinates(line, Projection::tau, 4);
    CHECK(r.degree == 1);
    CHECK(r.kernel_dimension == 2);
    CHECK_FALSE(r.surface.has_value());
    CHECK(r.basis.size() == 2);
}

TEST_CASE("implicitization is deterministic")
{
    auto sp = synthesize(builtin_fixture("great-little"));
    auto a = implicit_equation(sp, Projection::tau);
    auto b = implicit_equation(sp, Projection::tau);
    CHECK(a.poly == b.poly);
    CHECK(a.poly.to_string() == b.poly.to_string());
    // content free with positive leading coefficient
    CHECK(primitive_part(a.poly) == a.poly);
}

TEST_CASE("gradient and the Euler identity")
{
    auto t = implicit_equation(synthesize(builtin_fixture("torus")), Projection::tau);
    auto g = gradient(t);
    CHECK(g[0] == parse_polynomial("x4", xs()));
    CHECK(g[1] == parse_polynomial("x3", xs()));
    CHECK(g[2] == parse_polynomial("x2", xs()));
    CHECK(g[3] == parse_polynomial("x1", xs()));
    auto q = implicit_equation(synthesize(builtin_fixture("great-little")), Projection::tau);
    auto gq = gradient(q);
    Poly euler(xs());
    for (int i = 0; i < 4; ++i)
        euler += Poly::variable(xs(), i) * gq[i];
    CHECK(euler == q.poly * Rational(q.degree));
    for (const auto& p : gq)
        CHECK_FALSE(p.is_zero());
}

TEST_CASE("plane restrictions")
{
    auto t = implicit_equation(synthesize(builtin_fixture("torus")), Projection::tau);
    Rational z(0), one(1);
    auto c = restrict_to_plane(t, {z, z, z, one});
    CHECK(c == parse_polynomial("x2*x3", {"x1", "x2", "x3"}));
    CHECK_THROWS_AS(restrict_to_plane(t, {z, z, z, z}), std::invalid_argument);

    // generic sections of the quadric are smooth conics: nonzero Hessian determinant
    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
        std::array<Rational, 4> pl;
        for (auto& v : pl)
            v = Rational((long)(rng() % 9) - 4);
        if (sgn(pl[3]) == 0)
            pl[3] = 1;
        auto pr = plane_restriction(t.poly, pl);
        ExactMatrix<Rational> h(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                h.at(i, j) = pr.curve.derivative(i).derivative(j).evaluate(std::vector<Rational>{z, z, z});
        CHECK(pr.curve.total_degree() == 2);
        // tangent planes cut a line pair
        if (sgn(determinant(h)) == 0)
            continue;
        CHECK(rank(h) == 3);
        // the embedding lies in the plane
        for (const auto& row : pr.embedding) {
            Rational s = 0;
            for (int j = 0; j < 4; ++j)
                s += row[j] * pl[j];
            CHECK(sgn(s) == 0);
        }
    }

    auto q = implicit_equation(synthesize(builtin_fixture("great-little")), Projection::tau);
    auto cq = restrict_to_plane(q, {Rational(2), Rational(-3), Rational(5), Rational(7)});
    CHECK(cq.total_degree() == 4);
    CHECK(cq.is_homogeneous());
}
