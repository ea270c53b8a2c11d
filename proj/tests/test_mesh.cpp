#include "doctest.h"

#include "celestial/errors.hpp"
#include "celestial/fixtures.hpp"
#include "celestial/mesh.hpp"

#include <cmath>

using namespace celestial;

TEST_CASE("fixture JSON round trip for every built-in")
{
    for (const auto& name : builtin_fixture_names()) {
        CAPTURE(name);
        Fixture f = builtin_fixture(name);
        std::string text = fixture_to_json(f);
        Fixture g = parse_fixture(text, "other");
        CHECK(g.name == name);
        CHECK(g.mode == f.mode);
        CHECK(g.c1.span() == f.c1.span());
        CHECK(g.c2.span() == f.c2.span());
        CHECK(g.c1.base_point() == f.c1.base_point());
        CHECK(g.max_degree == f.max_degree);
        CHECK(g.seed == f.seed);
        CHECK(g.center == f.center);
        CHECK(fixture_to_json(g) == text);
    }
}

TEST_CASE("mesh vertices lie on the stereographic implicit surface")
{
    for (const char* name : {"torus", "great-little", "euclid-quartic"}) {
        CAPTURE(name);
        Fixture f = builtin_fixture(name);
        auto pi = implicit_equation(synthesize(f), Projection::pi, 8, f.center);
        auto m = sample_mesh(f, pi, 16);
        CHECK(m.max_residual <= 1e-6);
        CHECK(m.vertices.size() + m.holes.size() == 256);
        CHECK(m.faces.size() <= 256);
        // independent recheck: evaluate at the dehomogenized vertex
        for (const auto& v : m.vertices) {
            double n = std::sqrt(1 + v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
            std::vector<double> y{1 / n, v[0] / n, v[1] / n, v[2] / n};
            CHECK(std::abs(evaluate_double(pi.poly, y)) <= 1e-6 * coefficient_norm(pi.poly));
        }
        for (const auto& q : m.faces)
            for (int i : q)
                CHECK((i >= 1 && i <= (int)m.vertices.size()));
    }
}

TEST_CASE("samples near the projection center become holes")
{
    // the default center lies on the clifford torus
    Fixture f = builtin_fixture("torus");
    f.center.reset();
    auto pi = implicit_equation(synthesize(f), Projection::pi, 8);
    CHECK(pi.degree == 3);
    auto m = sample_mesh(f, pi, 16, 0.05);
    CHECK(!m.holes.empty());
    CHECK(m.faces.size() < 256);
    CHECK(m.max_residual <= 1e-6);
    for (const auto& v : m.vertices)
        CHECK(std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]) < 1 / 0.05);
    auto obj = to_obj(m, "t");
    CHECK(obj.find("# hole ") != std::string::npos);
}

TEST_CASE("mesh input checks")
{
    Fixture f = builtin_fixture("torus");
    auto sp = synthesize(f);
    auto pi = implicit_equation(sp, Projection::pi, 8, f.center);
    CHECK_THROWS_AS(sample_mesh(f, pi, 4), InputError);
    auto tau = implicit_equation(sp, Projection::tau);
    CHECK_THROWS_AS(sample_mesh(f, tau, 16), PreconditionError);
}
