#include "celestial/fixtures.hpp"

#include "celestial/errors.hpp"
#include "celestial/exactalg/matrix.hpp"

#include "json.hpp"

namespace celestial {

using json = nlohmann::json;

std::string to_string(FixtureMode m)
{
    switch (m) {
    case FixtureMode::clifford_left:
        return "clifford-left";
    case FixtureMode::clifford_right:
        return "clifford-right";
    case FixtureMode::euclidean:
        return "euclidean";
    }
    return "?";
}

FixtureMode parse_mode(const std::string& s)
{
    if (s == "clifford-left")
        return FixtureMode::clifford_left;
    if (s == "clifford-right")
        return FixtureMode::clifford_right;
    if (s == "euclidean")
        return FixtureMode::euclidean;
    throw InputError("field 'mode': unknown mode '" + s + "'");
}

SurfaceParam synthesize(const Fixture& f)
{
    switch (f.mode) {
    case FixtureMode::clifford_left:
        return clifford_translate_surface(f.c1, f.c2, Side::left);
    case FixtureMode::clifford_right:
        return clifford_translate_surface(f.c1, f.c2, Side::right);
    case FixtureMode::euclidean:
        return euclidean_translate_surface(f.c1, f.c2);
    }
    throw InputError("bad mode");
}

namespace {

SpherePoint pt(long a, long b, long c, long d, long e) { return SpherePoint::from_ints(a, b, c, d, e); }

Circle through_m(const SpherePoint& q, const SpherePoint& r) { return Circle::through(identity_point(), q, r); }

Fixture make(const std::string& name, const Circle& c1, const Circle& c2, FixtureMode mode)
{
    return Fixture{name, c1, c2, mode, 8, 1, std::nullopt};
}

} // namespace

Circle great_circle_wi() { return through_m(pt(1, 0, 1, 0, 0), pt(1, -1, 0, 0, 0)); }
Circle great_circle_wj() { return through_m(pt(1, 0, 0, 1, 0), pt(1, -1, 0, 0, 0)); }

Circle radius_family_circle(const Rational& r)
{
    SpherePoint a = from_chart({Rational(1 + r), Rational(0), r});
    SpherePoint b = from_chart({Rational(1), Rational(0), Rational(2 * r)});
    return through_m(a, b);
}

std::vector<std::string> builtin_fixture_names()
{
    return {"torus",
            "great-little",
            "little-little",
            "topology-exclusive",
            "topology-torus",
            "topology-inclusive",
            "euclid-plane",
            "euclid-circular-cylinder",
            "euclid-elliptic-cylinder",
            "euclid-quartic"};
}

Fixture builtin_fixture(const std::string& name)
{
    const SpherePoint center = projection_center();
    if (name == "torus") {
        // the default center k lies on this torus; project from a point off it instead
        Fixture f = make(name, great_circle_wi(), great_circle_wj(), FixtureMode::clifford_left);
        f.center = pt(5, 3, 0, 0, 4);
        return f;
    }
    if (name == "great-little")
        return make(name, great_circle_wi(), through_m(pt(5, 3, 4, 0, 0), pt(5, 3, 0, 4, 0)),
                    FixtureMode::clifford_left);
    if (name == "little-little")
        return make(name, through_m(pt(7, 6, 0, 2, 3), pt(3, 2, 0, 2, 1)), through_m(pt(3, 2, 0, 2, 1), pt(7, 4, 2, 2, 5)),
                    FixtureMode::clifford_left);
    if (name == "topology-exclusive" || name == "topology-torus" || name == "topology-inclusive") {
        Rational r = name == "topology-exclusive" ? Rational(1, 2) : name == "topology-torus" ? Rational(1) : Rational(2);
        Fixture f = make(name, great_circle_wi(), radius_family_circle(r), FixtureMode::clifford_left);
        f.center = pt(5, 3, 0, 0, 4); // k lies on these surfaces
        return f;
    }
    if (name == "euclid-plane")
        return make(name, great_circle_wi(), through_m(pt(3, 2, 1, 0, 2), pt(5, 3, 0, 0, 4)), FixtureMode::euclidean);
    if (name == "euclid-circular-cylinder")
        return make(name, great_circle_wi(), through_m(pt(3, 2, 0, 2, 1), center), FixtureMode::euclidean);
    if (name == "euclid-elliptic-cylinder")
        return make(name, great_circle_wi(), through_m(pt(3, 2, 0, 1, 2), center), FixtureMode::euclidean);
    if (name == "euclid-quartic")
        return make(name, great_circle_wi(), through_m(pt(3, 2, 0, 1, 2), pt(3, 1, 0, 2, 2)), FixtureMode::euclidean);
    throw InputError("unknown built-in fixture '" + name + "'");
}

namespace {

Coords5 parse_point(const json& j, const std::string& where)
{
    if (!j.is_array() || j.size() != 5)
        throw InputError("field '" + where + "': expected an array of 5 integers");
    Coords5 c;
    for (std::size_t i = 0; i < 5; ++i) {
        const json& v = j[i];
        if (v.is_number_integer())
            c[i] = Rational(std::to_string(v.get<long long>()));
        else if (v.is_string())
            c[i] = parse_rational(v.get<std::string>());
        else
            throw InputError("field '" + where + "[" + std::to_string(i) + "]': expected an integer");
    }
    return c;
}

Circle circle_from(const json& j, const std::string& where)
{
    if (!j.is_object() || !j.contains("points"))
        throw InputError("field '" + where + "': expected an object with 'points'");
    const json& pts = j["points"];
    if (!pts.is_array() || (pts.size() != 2 && pts.size() != 3))
        throw InputError("field '" + where + ".points': expected 2 or 3 points");
    std::vector<SpherePoint> p;
    if (pts.size() == 2)
        p.push_back(identity_point());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::string w = where + ".points[" + std::to_string(i) + "]";
        try {
            p.push_back(SpherePoint::on_sphere(parse_point(pts[i], w)));
        } catch (const InputError& e) {
            std::string msg = e.what();
            if (msg.rfind("field", 0) == 0)
                throw;
            throw InputError("field '" + w + "': " + msg);
        }
    }
    try {
        return Circle::through(p[0], p[1], p[2]);
    } catch (const InputError& e) {
        throw InputError("field '" + where + "': " + e.what());
    }
}

json parse_json(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

} // namespace

Circle parse_circle_json(const std::string& text) { return circle_from(parse_json(text), "circle"); }

Fixture parse_fixture(const std::string& text, const std::string& name)
{
    json j = parse_json(text);
    if (!j.is_object())
        throw InputError("fixture must be a JSON object");
    for (const char* k : {"c1", "c2", "mode"})
        if (!j.contains(k))
            throw InputError(std::string("missing field '") + k + "'");
    if (!j["mode"].is_string())
        throw InputError("field 'mode': expected a string");
    Fixture f{name, circle_from(j["c1"], "c1"), circle_from(j["c2"], "c2"), parse_mode(j["mode"].get<std::string>()),
              8, 1, std::nullopt};
    if (j.contains("options")) {
        const json& o = j["options"];
        if (!o.is_object())
            throw InputError("field 'options': expected an object");
        if (o.contains("max_degree")) {
            if (!o["max_degree"].is_number_integer() || o["max_degree"].get<int>() < 2)
                throw InputError("field 'options.max_degree': expected an integer >= 2");
            f.max_degree = o["max_degree"].get<int>();
        }
        if (o.contains("seed")) {
            if (!o["seed"].is_number_unsigned())
                throw InputError("field 'options.seed': expected a nonnegative integer");
            f.seed = o["seed"].get<std::uint64_t>();
        }
        if (o.contains("projection_center")) {
            try {
                f.center = SpherePoint::on_sphere(parse_point(o["projection_center"], "options.projection_center"));
            } catch (const InputError& e) {
                std::string msg = e.what();
                if (msg.rfind("field", 0) == 0)
                    throw;
                throw InputError("field 'options.projection_center': " + msg);
            }
        }
    }
    if (j.contains("name") && j["name"].is_string())
        f.name = j["name"].get<std::string>();
    return f;
}

namespace {

json point_json(const Coords5& c)
{
    json a = json::array();
    for (const auto& x : primitive_vector(std::vector<Rational>(c.begin(), c.end()))) {
        const mpz_class& n = x.get_num();
        if (n.fits_slong_p())
            a.push_back(n.get_si());
        else
            a.push_back(n.get_str());
    }
    return a;
}

} // namespace

std::string fixture_to_json(const Fixture& f)
{
    // one point per line
    auto circle = [](const Circle& c) {
        std::string s = "{\"points\": [";
        for (std::size_t i = 0; i < 3; ++i)
            s += (i ? ",\n                    " : "") + point_json(c.span()[i]).dump();
        return s + "]}";
    };
    std::string s = "{\n  \"name\": " + json(f.name).dump() + ",\n  \"mode\": " + json(to_string(f.mode)).dump() +
                    ",\n  \"c1\": " + circle(f.c1) + ",\n  \"c2\": " + circle(f.c2) +
                    ",\n  \"options\": {\"max_degree\": " + std::to_string(f.max_degree) +
                    ", \"seed\": " + std::to_string(f.seed);
    if (f.center)
        s += ", \"projection_center\": " + point_json(f.center->coords()).dump();
    return s + "}\n}\n";
}

} // namespace celestial
