#include "celestial/classify/report.hpp"

#include "celestial/classify/delta.hpp"
#include "celestial/classify/multiplicity.hpp"
#include "celestial/classify/topology.hpp"
#include "celestial/classify/types.hpp"
#include "celestial/errors.hpp"
#include "celestial/implicitize.hpp"

#include "json.hpp"

namespace celestial {

namespace {

using ojson = nlohmann::ordered_json;
using G = GaussianRational;

struct Diffs {
    std::vector<ExpectationDiff>& out;
    template <class T>
    void expect(const std::string& check, const T& expected, const T& actual)
    {
        if (!(expected == actual))
            out.push_back({check, str(expected), str(actual)});
    }
    static std::string str(int v) { return std::to_string(v); }
    static std::string str(bool v) { return v ? "true" : "false"; }
    static std::string str(const std::string& v) { return v; }
};

// pi after the optional center reflection, on Gaussian coordinates
std::array<GPoly, 4> pi_of(const std::array<GPoly, 5>& x, const std::optional<SpherePoint>& center)
{
    std::array<GPoly, 5> y = x;
    if (center && *center != projection_center()) {
        auto refl = CenterReflection::to_center(*center);
        for (int i = 0; i < 5; ++i)
            y[i] = GPoly(x[0].variables());
        for (int j = 0; j < 5; ++j) {
            Coords5 e{};
            for (auto& v : e)
                v = 0;
            e[j] = 1;
            auto col = refl.apply(e);
            for (int i = 0; i < 5; ++i)
                if (sgn(col[i]) != 0)
                    y[i] += x[j] * G(col[i]);
        }
    }
    return {y[0] - y[4], y[1], y[2], y[3]};
}

// generator lines of the absolute, as lines of the sphere, pushed through pi
std::array<GPoly, 4> pi_ruling_map(int shift, const std::optional<SpherePoint>& center)
{
    auto m = ruling_map(shift);
    std::array<GPoly, 5> x{GPoly(m[0].variables()), m[0], m[1], m[2], m[3]};
    return pi_of(x, center);
}

std::string line_text(const GeneratorLines& gl, int shift, int index)
{
    std::string chart = "1";
    if (shift == 1 || shift == -1)
        chart += shift > 0 ? "+u" : "-u";
    else if (shift != 0)
        chart += (shift > 0 ? "+" : "") + std::to_string(shift) + "u";
    return "generator line " + std::to_string(index) + " of the pair in ruling " + std::to_string(gl.ruling) +
           ": roots of " + gl.factor.to_string("u") + " with (u0:u1) = (u : " + chart + ")";
}

std::optional<std::array<G, 2>> split_quadratic(const GUPoly& f)
{
    if (f.degree() != 2)
        return std::nullopt;
    GUPoly m = f.monic();
    G b = m.coeff(1), c = m.coeff(0);
    auto s = gaussian_sqrt(b * b - G(4) * c);
    if (!s)
        return std::nullopt;
    G half(Rational(1, 2));
    return std::array<G, 2>{(-b + *s) * half, (-b - *s) * half};
}

// the line {u = root} of a ruling family as a curve in one variable
std::array<GPoly, 4> line_of(const std::array<GPoly, 4>& map, int ruling, const G& root)
{
    const std::vector<std::string> w{"w"};
    std::vector<GPoly> images(2, GPoly(w));
    images[ruling] = GPoly::constant(w, root);
    images[1 - ruling] = GPoly::variable(w, 0);
    std::array<GPoly, 4> out;
    for (int i = 0; i < 4; ++i)
        out[i] = map[i].compose(images);
    return out;
}

int family_multiplicity(const Poly& surface, const std::array<GPoly, 4>& map, const GeneratorLines& gl)
{
    auto parts = family_multiplicities(surface, map, gl.ruling, 1 - gl.ruling, gl.factor);
    int m = parts.empty() ? 0 : parts.front().multiplicity;
    for (const auto& p : parts)
        m = std::min(m, p.multiplicity);
    return m;
}

Circle symmetric_great_first(const Fixture& fx, Side& side, Circle& little)
{
    // C1 *L C2 = C2 *R C1: put the great circle in the translated slot
    side = fx.mode == FixtureMode::clifford_right ? Side::right : Side::left;
    if (fx.c1.is_great()) {
        little = fx.c2;
        return fx.c1;
    }
    side = side == Side::left ? Side::right : Side::left;
    little = fx.c1;
    return fx.c2;
}

SectionDelta generic_section(const Poly& surface, std::uint64_t seed)
{
    for (int k = 0; k < 8; ++k) {
        try {
            return plane_section_delta(surface, random_plane(seed * 7919 + k), seed + k);
        } catch (const PreconditionError&) {
        } catch (const DegenerateError&) {
        }
    }
    throw DegenerateError("no generic plane section found");
}

// small integer search for a rational point of the circle's conic
void append_lattice(ClassificationReport& r, LatticeType t)
{
    for (auto& c : lattice_consistency(t))
        r.lattice_checks.push_back(c);
}

void great_little(const Fixture& fx, const SurfaceParam& f, const ImplicitSurface& tau, const ImplicitSurface& pi,
                  const EllipticType& et, const EuclideanType& eu, ClassificationReport& r, Diffs& d)
{
    Side side;
    Circle little = fx.c2;
    Circle great = symmetric_great_first(fx, side, little);
    auto cr = find_coincident_rulings(great, little, side);
    d.expect("coincident rulings found", true, cr.has_value());
    if (!cr)
        return;
    d.expect("coincident eliminant degree", 2, cr->eliminant.degree());
    d.expect("coincident circle is great", true, cr->v0.is_great());

    auto v0c = cr->v0.with_rational_point();
    d.expect("rational point on the coincident circle", true, v0c.has_value());
    if (!v0c)
        return;
    const std::vector<std::string> ab{"a", "b"};
    auto v0 = v0c->parametrization(ab, 0, 1);
    auto w0_curve = project(v0, Projection::tau);
    auto v0_pi = project(v0, Projection::pi, fx.center);

    SectionDelta sd = generic_section(tau.poly, fx.seed);
    const auto& xv = tau.poly.variables();
    std::vector<Poly> w0_forms;
    for (const auto& form : cr->v0.linear_forms()) {
        Poly p(xv);
        for (int i = 1; i < 5; ++i)
            p += Poly::variable(xv, i - 1) * form[i];
        w0_forms.push_back(p);
    }
    Poly qe(xv);
    for (int i = 0; i < 4; ++i)
        qe += Poly::variable(xv, i) * Poly::variable(xv, i);
    const int delta_w0 = delta_on(sd, w0_forms);
    const int delta_e = delta_on(sd, {qe});
    d.expect("tau plane-section total delta", 3, sd.total);
    {
        // genus bookkeeping: plane quartic section minus the E4 polarization genus
        auto e4 = picard_lattice(LatticeType::E4);
        auto u1 = picard_lattice(LatticeType::U1);
        d.expect("tau delta equals p_a(4L) - p_a(H+2F)",
                 arithmetic_genus(u1, {tau.degree}) - arithmetic_genus(e4, e4.polarization.c), sd.total);
    }

    std::string coinc = "coincident great circle " + cr->v0.to_string() + "; eliminant " +
                        cr->eliminant.to_string("t") + ", " + std::to_string(cr->real_roots) + " real root(s)";
    if (cr->double_root)
        coinc += ", double root";

    SingularComponentRecord w0{"W0", "tau", "central projection of the " + coinc,
                               multiplicity_along_curve(tau.poly, w0_curve), delta_w0,
                               "first partials vanish on the parametrized line"};

    const GeneratorLines* pair1 = nullptr; // double in tau(S)
    const GeneratorLines* pair_a = nullptr; // simple in tau(S)
    for (const auto& gl : et.lines) {
        if (gl.multiplicity == 2 && !pair1)
            pair1 = &gl;
        else if (gl.multiplicity == 1 && !pair_a)
            pair_a = &gl;
    }
    d.expect("double generator pair present", true, pair1 != nullptr);
    d.expect("simple generator pair present", true, pair_a != nullptr);

    // sphere level
    auto s8 = picard_lattice(LatticeType::S8);
    auto u1 = picard_lattice(LatticeType::U1);
    // section of pi(S) by a plane: p_a(8L) minus the two points of multiplicity m on the absolute conic
    const int sphere_total = arithmetic_genus(u1, {pi.degree}) - arithmetic_genus(s8, s8.polarization.c) -
                             2 * (eu.m * (eu.m - 1) / 2);
    d.expect("sphere sectional delta total", 8, sphere_total);

    SingularComponentRecord v0rec{"V0", "sphere", coinc, multiplicity_along_curve(pi.poly, v0_pi), 2 * delta_w0,
                                  "first partials of the stereographic image vanish on the parametrized circle; "
                                  "delta doubled from the central projection"};
    r.singular_components.push_back(v0rec);
    int used = v0rec.sectional_delta.value_or(0);
    if (pair1) {
        auto map = pi_ruling_map(et.shift, fx.center);
        int m = family_multiplicity(pi.poly, map, *pair1);
        int each = pair1->pairs() ? delta_e / (2 * pair1->pairs()) : 0;
        for (int k : {1, 2}) {
            r.singular_components.push_back(
                {"V" + std::to_string(k), "sphere", line_text(*pair1, et.shift, k), m, 2 * each,
                 "first partials of the stereographic image vanish along the pair; delta doubled"});
            used += 2 * each;
        }
    }
    if (pair_a) {
        auto map = pi_ruling_map(et.shift, fx.center);
        int m = family_multiplicity(pi.poly, map, *pair_a);
        int each = (sphere_total - used) / 2;
        for (int k : {1, 2})
            r.singular_components.push_back(
                {k == 1 ? "Va" : "Vb", "sphere", line_text(*pair_a, et.shift, k), m, each,
                 "first partials of the stereographic image vanish along the pair; delta from the sectional total"});
    }
    r.singular_components.push_back(w0);
    if (pair1) {
        auto tmap = ruling_map(et.shift);
        int m = pair1->multiplicity;
        std::string cert = "first partials vanish along the pair (content gcd)";
        if (auto roots = split_quadratic(pair1->factor)) {
            int m1 = multiplicity_along_curve<G>(tau.poly, line_of(tmap, pair1->ruling, (*roots)[0]));
            int m2 = multiplicity_along_curve<G>(tau.poly, line_of(tmap, pair1->ruling, (*roots)[1]));
            m = std::min(m1, m2);
            cert = "first partials vanish on each parametrized line over Q(i)";
        }
        int each = pair1->pairs() ? delta_e / (2 * pair1->pairs()) : 0;
        for (int k : {1, 2})
            r.singular_components.push_back({"W" + std::to_string(k), "tau", line_text(*pair1, et.shift, k), m, each, cert});
    }
    const std::vector<std::pair<std::string, int>> want{{"V0", 2}, {"V1", 2}, {"V2", 2}, {"Va", 1}, {"Vb", 1},
                                                        {"W0", 1}, {"W1", 1}, {"W2", 1}};
    for (const auto& [lab, delta] : want) {
        const SingularComponentRecord* rec = nullptr;
        for (const auto& c : r.singular_components)
            if (c.label == lab)
                rec = &c;
        d.expect(lab + " present", true, rec != nullptr);
        if (!rec)
            continue;
        d.expect(lab + " multiplicity", 2, rec->multiplicity);
        d.expect(lab + " sectional delta", delta, rec->sectional_delta.value_or(-1));
    }

    SurfaceParam g = f;
    if (!f.c1.is_great())
        g = clifford_translate_surface(great, little, side);
    auto topo = topology_class(g, *cr, fx.seed);
    r.topology = to_string(topo.tag);
    d.expect("topology double root iff torus", topo.tag == Topology::torus, topo.double_root);

    append_lattice(r, LatticeType::S8);
    append_lattice(r, LatticeType::E4);
}

void little_little(const Fixture& fx, const ImplicitSurface& pi, const EllipticType& et, ClassificationReport& r,
                   Diffs& d)
{
    int k = 0;
    const char* sphere_labels[] = {"V1", "V2", "Va", "Vb"};
    const char* tau_labels[] = {"W1", "W2", "other", "other"};
    auto map = pi_ruling_map(et.shift, fx.center);
    for (const auto& gl : et.lines) {
        int m = family_multiplicity(pi.poly, map, gl);
        for (int j = 0; j < 2 && k < 4; ++j, ++k) {
            r.singular_components.push_back({sphere_labels[k], "sphere", line_text(gl, et.shift, j + 1), m, std::nullopt,
                                             "first partials of the stereographic image vanish along the pair"});
            r.singular_components.push_back({tau_labels[k], "tau", line_text(gl, et.shift, j + 1), gl.multiplicity,
                                             std::nullopt, "first partials vanish along the pair (content gcd)"});
        }
        d.expect("sphere multiplicity along generator pair", 2, m);
    }
    d.expect("generator pairs", 2, (int)et.lines.size());
}

} // namespace

std::string to_string(CliffordKind k)
{
    switch (k) {
    case CliffordKind::great_great:
        return "great-great";
    case CliffordKind::great_little:
        return "great-little";
    case CliffordKind::little_little:
        return "little-little";
    default:
        return "euclidean";
    }
}

CliffordKind clifford_kind(const Fixture& f)
{
    if (f.mode == FixtureMode::euclidean)
        return CliffordKind::not_clifford;
    int great = (f.c1.is_great() ? 1 : 0) + (f.c2.is_great() ? 1 : 0);
    return great == 2 ? CliffordKind::great_great : great == 1 ? CliffordKind::great_little : CliffordKind::little_little;
}

ClassificationReport classify_celestial(const Fixture& fx)
{
    SurfaceParam f = synthesize(fx);
    ClassificationReport r;
    Diffs d{r.expectation_diffs};

    ImplicitSurface tau = implicit_equation(f, Projection::tau, fx.max_degree, fx.center, fx.name);
    ImplicitSurface pi = implicit_equation(f, Projection::pi, fx.max_degree, fx.center, fx.name);
    r.implicit_tau = tau.poly.to_string();
    r.implicit_pi = pi.poly.to_string();
    r.degrees.tau = tau.degree;
    r.degrees.pi = pi.degree;
    r.degrees.sphere = pi.degree;
    d.expect("tau certificate", true, tau.certificate);
    d.expect("pi certificate", true, pi.certificate);

    EllipticType et = elliptic_type(tau);
    EuclideanType eu = euclidean_type(pi);
    r.elliptic_type = et.to_string();
    r.euclidean_type = eu.to_string();

    const CliffordKind kind = clifford_kind(fx);
    switch (kind) {
    case CliffordKind::great_great:
        d.expect("sphere degree", 4, r.degrees.sphere);
        d.expect("tau degree", 2, r.degrees.tau);
        d.expect("elliptic type", std::string("(2;1,1)"), r.elliptic_type);
        d.expect("euclidean type", std::string("(4,2)"), r.euclidean_type);
        d.expect("coincident rulings", false,
                 find_coincident_rulings(fx.c1, fx.c2, fx.mode == FixtureMode::clifford_right ? Side::right : Side::left)
                     .has_value());
        append_lattice(r, LatticeType::S4);
        r.lattice_checks.push_back({"S4: Moebius equivalent to a Clifford torus (expectation tag)", true});
        break;
    case CliffordKind::great_little:
        d.expect("sphere degree", 8, r.degrees.sphere);
        d.expect("tau degree", 4, r.degrees.tau);
        d.expect("elliptic type", std::string("(4;2,1)"), r.elliptic_type);
        d.expect("euclidean type", std::string("(8,4)"), r.euclidean_type);
        great_little(fx, f, tau, pi, et, eu, r, d);
        break;
    case CliffordKind::little_little:
        d.expect("sphere degree", 8, r.degrees.sphere);
        d.expect("tau degree", 8, r.degrees.tau);
        d.expect("elliptic type", std::string("(8;2,2)"), r.elliptic_type);
        little_little(fx, pi, et, r, d);
        break;
    case CliffordKind::not_clifford: {
        auto lift = lift_to_sphere(f);
        r.degrees.lift_bidegree = std::array<int, 2>{lift.degree_s, lift.degree_t};
        const int dpi = r.degrees.pi;
        d.expect("stereographic degree in {1, 2, 4}", true, dpi == 1 || dpi == 2 || dpi == 4);
        d.expect("euclidean type", "(" + std::to_string(dpi) + ",0)", r.euclidean_type);
        for (const char* t : {"(2;1,1)", "(4;2,1)", "(8;2,2)"})
            d.expect(std::string("elliptic type differs from ") + t, true, r.elliptic_type != t);
        break;
    }
    }
    if (kind != CliffordKind::not_clifford) {
        d.expect("generator lines closed under conjugation", true, et.conjugation_closed);
        d.expect("absolute section consists of generator lines", true, et.lines_only);
    }
    for (const auto& c : r.lattice_checks)
        if (!c.pass)
            d.expect("lattice " + c.name, true, false);
    return r;
}

std::string to_json(const ClassificationReport& r, int indent)
{
    ojson j;
    ojson deg;
    deg["sphere"] = r.degrees.sphere;
    deg["tau"] = r.degrees.tau;
    deg["pi"] = r.degrees.pi;
    if (r.degrees.lift_bidegree)
        deg["lift_bidegree"] = {(*r.degrees.lift_bidegree)[0], (*r.degrees.lift_bidegree)[1]};
    j["degrees"] = deg;
    j["elliptic_type"] = r.elliptic_type;
    j["euclidean_type"] = r.euclidean_type;
    ojson comps = ojson::array();
    for (const auto& c : r.singular_components) {
        ojson o;
        o["label"] = c.label;
        o["level"] = c.level;
        o["curve"] = c.curve;
        o["multiplicity"] = c.multiplicity;
        o["sectional_delta"] = c.sectional_delta ? ojson(*c.sectional_delta) : ojson(nullptr);
        o["certificate"] = c.certificate;
        comps.push_back(o);
    }
    j["singular_components"] = comps;
    j["topology"] = r.topology;
    ojson checks = ojson::array();
    for (const auto& c : r.lattice_checks)
        checks.push_back(ojson{{"name", c.name}, {"pass", c.pass}});
    j["lattice_checks"] = checks;
    ojson diffs = ojson::array();
    for (const auto& e : r.expectation_diffs)
        diffs.push_back(ojson{{"check", e.check}, {"expected", e.expected}, {"actual", e.actual}});
    j["expectation_diffs"] = diffs;
    j["implicit_equations"] = ojson{{"tau", r.implicit_tau}, {"pi", r.implicit_pi}};
    return j.dump(indent);
}

ClassificationReport report_from_json(const std::string& text)
{
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw InputError("malformed JSON at byte " + std::to_string(e.byte));
    }
    ClassificationReport r;
    try {
        const auto& deg = j.at("degrees");
        r.degrees.sphere = deg.at("sphere").get<int>();
        r.degrees.tau = deg.at("tau").get<int>();
        r.degrees.pi = deg.at("pi").get<int>();
        if (deg.contains("lift_bidegree"))
            r.degrees.lift_bidegree =
                std::array<int, 2>{deg["lift_bidegree"].at(0).get<int>(), deg["lift_bidegree"].at(1).get<int>()};
        r.elliptic_type = j.at("elliptic_type").get<std::string>();
        r.euclidean_type = j.at("euclidean_type").get<std::string>();
        for (const auto& o : j.at("singular_components")) {
            SingularComponentRecord c;
            c.label = o.at("label").get<std::string>();
            c.level = o.at("level").get<std::string>();
            c.curve = o.at("curve").get<std::string>();
            c.multiplicity = o.at("multiplicity").get<int>();
            if (!o.at("sectional_delta").is_null())
                c.sectional_delta = o.at("sectional_delta").get<int>();
            c.certificate = o.at("certificate").get<std::string>();
            r.singular_components.push_back(c);
        }
        r.topology = j.at("topology").get<std::string>();
        for (const auto& o : j.at("lattice_checks"))
            r.lattice_checks.push_back({o.at("name").get<std::string>(), o.at("pass").get<bool>()});
        for (const auto& o : j.at("expectation_diffs"))
            r.expectation_diffs.push_back({o.at("check").get<std::string>(), o.at("expected").get<std::string>(),
                                           o.at("actual").get<std::string>()});
        r.implicit_tau = j.at("implicit_equations").at("tau").get<std::string>();
        r.implicit_pi = j.at("implicit_equations").at("pi").get<std::string>();
    } catch (const ojson::exception& e) {
        throw InputError(std::string("report field error: ") + e.what());
    }
    return r;
}

} // namespace celestial
