#include "celestial/acceptance.hpp"

#include "celestial/classify/delta.hpp"
#include "celestial/classify/lattice.hpp"
#include "celestial/classify/report.hpp"
#include "celestial/classify/topology.hpp"
#include "celestial/classify/types.hpp"
#include "celestial/errors.hpp"
#include "celestial/exactalg/matrix.hpp"
#include "celestial/fixtures.hpp"
#include "celestial/implicitize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace celestial {

namespace {

class Suite {
public:
    explicit Suite(const AcceptanceOptions& opt) : opt_(opt) {}

    Fixture fixture(const std::string& name) const
    {
        Fixture f = builtin_fixture(name);
        if (opt_.inject_fault && *opt_.inject_fault == name)
            f.c2 = f.c2.is_great() ? radius_family_circle(make_rational(1, 3)) : great_circle_wj();
        return f;
    }

    const ClassificationReport& report(const std::string& name)
    {
        auto it = reports_.find(name);
        if (it == reports_.end())
            it = reports_.emplace(name, classify_celestial(fixture(name))).first;
        return it->second;
    }

    const ImplicitSurface& implicit(const std::string& name, Projection proj)
    {
        auto key = std::make_pair(name, proj);
        auto it = implicit_.find(key);
        if (it == implicit_.end()) {
            Fixture f = fixture(name);
            it = implicit_.emplace(key, implicit_equation(synthesize(f), proj, 8, f.center, name)).first;
        }
        return it->second;
    }

private:
    AcceptanceOptions opt_;
    std::map<std::string, ClassificationReport> reports_;
    std::map<std::pair<std::string, Projection>, ImplicitSurface> implicit_;
};

// collects sub-checks of one criterion
struct Checks {
    bool ok = true;
    std::vector<std::string> notes;

    void add(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            notes.push_back("FAILED " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }

    std::string detail() const
    {
        std::string s;
        for (std::size_t i = 0; i < notes.size(); ++i)
            s += (i ? "; " : "") + notes[i];
        return s;
    }
};

SpherePoint sample_point(std::mt19937_64& rng)
{
    auto r = [&] { return make_rational((long)(rng() % 13) - 6, (long)(rng() % 4) + 1); };
    return from_chart({r(), r(), r()});
}

Circle sample_circle_through_m(std::mt19937_64& rng)
{
    for (;;) {
        try {
            return Circle::through(identity_point(), sample_point(rng), sample_point(rng));
        } catch (const std::runtime_error&) {
        }
    }
}

Poly sphere_quadric(const std::array<Poly, 5>& x)
{
    Poly q = x[0] * x[0] * Rational(-1);
    for (int i = 1; i < 5; ++i)
        q += x[i] * x[i];
    return q;
}

const std::vector<std::string> kClifford{"torus", "great-little", "little-little"};
const std::vector<std::string> kEuclid{"euclid-plane", "euclid-circular-cylinder", "euclid-elliptic-cylinder",
                                       "euclid-quartic"};

void criterion_elliptic_types(Suite& s, Checks& c)
{
    const char* expected[] = {"(2;1,1)", "(4;2,1)", "(8;2,2)"};
    for (int k = 0; k < 3; ++k) {
        auto et = elliptic_type(s.implicit(kClifford[k], Projection::tau)).to_string();
        c.add(et == expected[k], kClifford[k] + " elliptic type " + et + " expected " + expected[k]);
        c.note(kClifford[k] + " " + et);
    }
}

void criterion_degrees(Suite& s, Checks& c)
{
    const int sphere[] = {4, 8, 8}, tau[] = {2, 4, 8};
    for (int k = 0; k < 3; ++k) {
        int dp = s.implicit(kClifford[k], Projection::pi).degree;
        int dt = s.implicit(kClifford[k], Projection::tau).degree;
        c.add(dp == sphere[k], kClifford[k] + " sphere degree " + std::to_string(dp));
        c.add(dt == tau[k], kClifford[k] + " tau degree " + std::to_string(dt));
        c.note(kClifford[k] + " " + std::to_string(dp) + "/" + std::to_string(dt));
    }
}

void criterion_euclidean_types(Suite& s, Checks& c)
{
    auto gl = euclidean_type(s.implicit("great-little", Projection::pi)).to_string();
    auto to = euclidean_type(s.implicit("torus", Projection::pi)).to_string();
    c.add(gl == "(8,4)", "great-little euclidean type " + gl);
    c.add(to == "(4,2)", "torus euclidean type " + to);
    // oracle: the classical ring torus quartic
    const auto& yv = projection_vars(Projection::pi);
    Poly a = parse_polynomial("y1^2+y2^2+y3^2+3*y0^2", yv);
    Poly ring = a * a - parse_polynomial("16*y0^2*y1^2+16*y0^2*y2^2", yv);
    auto oracle = euclidean_type(ImplicitSurface{ring, 4, Projection::pi, "ring torus", true}).to_string();
    c.add(oracle == to, "ring torus oracle " + oracle + " differs from " + to);
    c.note("great-little " + gl + ", torus " + to + ", ring torus " + oracle);
}

void criterion_singular_locus(Suite& s, Checks& c)
{
    const auto& r = s.report("great-little");
    std::map<std::string, const SingularComponentRecord*> by;
    for (const auto& comp : r.singular_components)
        by[comp.label] = &comp;
    std::string mult;
    for (const char* w : {"W0", "W1", "W2"}) {
        int k = by.count(w) ? by[w]->multiplicity : 0;
        c.add(k == 2, std::string(w) + " multiplicity " + std::to_string(k));
        mult += (mult.empty() ? "" : ",") + std::to_string(k);
    }
    const auto& tau = s.implicit("great-little", Projection::tau);
    std::vector<std::string> totals;
    for (std::uint64_t seed : {11, 12, 13}) {
        int total = plane_section_delta(tau.poly, random_plane(seed), seed).total;
        c.add(total == 3, "section delta " + std::to_string(total) + " on plane seed " + std::to_string(seed));
        totals.push_back(std::to_string(total));
    }
    c.note("multiplicities along W0 = tau(V0), W1, W2: " + mult + "; section deltas " + totals[0] + "," + totals[1] +
           "," + totals[2]);
}

void criterion_coincident(Suite& s, Checks& c)
{
    for (const char* name : {"great-little", "topology-inclusive"}) {
        Fixture f = s.fixture(name);
        auto cr = find_coincident_rulings(f.c1, f.c2);
        c.add(cr.has_value(), std::string(name) + " has no coincident rulings");
        if (!cr)
            continue;
        // the two real roots form one unordered off-diagonal pair
        int n = sturm_count(cr->eliminant, std::nullopt, std::nullopt);
        c.add(cr->eliminant.degree() == 2 && n == 2 && !cr->double_root,
              std::string(name) + " eliminant real roots " + std::to_string(n));
        if (cr->t1 && cr->t2) {
            auto p1 = f.c2.point_at((*cr->t1)[0], (*cr->t1)[1]);
            auto p2 = f.c2.point_at((*cr->t2)[0], (*cr->t2)[1]);
            c.add(p1 != p2, std::string(name) + " pair on the diagonal");
            bool same = true;
            for (long a = 0; a < 5; ++a) {
                auto q = ham_product(p1, f.c1.point_at(Rational(a), Rational(a + 1)));
                auto q2 = ham_product(p2, f.c1.point_at(Rational(a), Rational(a + 1)));
                same = same && cr->v0.contains(q) && cr->v0.contains(q2);
            }
            c.add(same, std::string(name) + " translates do not coincide");
        }
        c.note(std::string(name) + ": " + std::to_string(n) + " real roots, one off-diagonal pair");
    }
    for (const char* name : {"topology-exclusive", "topology-torus"}) {
        Fixture f = s.fixture(name);
        auto cr = find_coincident_rulings(f.c1, f.c2);
        bool ok = cr && cr->eliminant.degree() == 2 && (cr->real_roots == 0 || cr->double_root);
        c.add(ok, std::string(name) + " expected a complex or double coincident pair");
    }
    Fixture t = s.fixture("torus");
    bool none = !find_coincident_rulings(t.c1, t.c2).has_value();
    c.add(none, "torus has coincident rulings");
    c.note(none ? "torus: none" : "torus: found");
}

int topology_count(const Rational& r)
{
    Fixture f = builtin_fixture("topology-torus");
    f.c2 = radius_family_circle(r);
    auto sp = synthesize(f);
    auto cr = find_coincident_rulings(f.c1, f.c2);
    if (!cr)
        return -1;
    return topology_class(sp, *cr, f.seed).real_points;
}

void criterion_topology(Suite& s, Checks& c)
{
    const std::pair<const char*, Topology> rows[] = {{"topology-exclusive", Topology::exclusive_tori},
                                                     {"topology-torus", Topology::torus},
                                                     {"topology-inclusive", Topology::inclusive_tori}};
    for (const auto& [name, tag] : rows) {
        Fixture f = s.fixture(name);
        auto sp = synthesize(f);
        auto cr = find_coincident_rulings(f.c1, f.c2);
        c.add(cr.has_value(), std::string(name) + " has no coincident circle");
        if (!cr)
            continue;
        auto tr = topology_class(sp, *cr, f.seed);
        c.add(tr.tag == tag, std::string(name) + " classified " + to_string(tr.tag));
        if (tag == Topology::torus)
            c.add(tr.double_root, "threshold fixture has no double root");
        c.note(std::string(name) + " " + to_string(tr.tag));
    }
    // bisection on the Sturm count between the small and large radii
    Rational lo(1, 2), hi(2);
    lo.canonicalize();
    bool ends = topology_count(lo) == 0 && topology_count(hi) == 2;
    c.add(ends, "bisection endpoints do not bracket the threshold");
    for (int it = 0; ends && it < 12; ++it) {
        Rational mid = (lo + hi) / 2;
        int n = topology_count(mid);
        if (n == 1) {
            lo = hi = mid;
            break;
        }
        (n == 0 ? lo : hi) = mid;
    }
    c.add(lo <= 1 && 1 <= hi, "bisection bracket [" + lo.get_str() + ", " + hi.get_str() + "] misses radius 1");
    c.add(topology_count(Rational(1)) == 1, "radius 1 is not the threshold");
    c.note("threshold bracket [" + lo.get_str() + ", " + hi.get_str() + "]");
}

void criterion_symmetry(Suite&, Checks& c)
{
    std::mt19937_64 rng(2024);
    int agree = 0;
    for (int k = 0; k < 5; ++k) {
        auto c1 = sample_circle_through_m(rng), c2 = sample_circle_through_m(rng);
        auto l = implicit_equation(clifford_translate_surface(c1, c2, Side::left), Projection::tau);
        auto r = implicit_equation(clifford_translate_surface(c2, c1, Side::right), Projection::tau);
        // both are normalized content-free, so proportional means equal
        bool same = l.poly == r.poly;
        c.add(same, "random fixture " + std::to_string(k) + " left and right equations differ");
        agree += same;
    }
    c.note(std::to_string(agree) + "/5 random fixtures proportional");
}

void criterion_isometry(Suite&, Checks& c)
{
    std::mt19937_64 rng(77);
    double worst = 0;
    for (int k = 0; k < 10; ++k) {
        std::vector<SpherePoint> samples;
        for (int j = 0; j < 51; ++j)
            samples.push_back(sample_point(rng));
        CliffordMotion cm{sample_point(rng), k % 2 ? Side::right : Side::left};
        EuclideanMotion em{{make_rational((long)(rng() % 21) - 10, (long)(rng() % 5) + 1),
                            make_rational((long)(rng() % 21) - 10, (long)(rng() % 5) + 1),
                            make_rational((long)(rng() % 21) - 10, (long)(rng() % 5) + 1)}};
        double rc = isometry_residual(cm, samples);
        double re = isometry_residual(em, samples);
        c.add(rc <= 1e-9, "clifford motion " + std::to_string(k) + " residual too large");
        c.add(re <= 1e-9, "euclidean motion " + std::to_string(k) + " residual too large");
        worst = std::max({worst, rc, re});
    }
    c.note(worst <= 1e-9 ? "all residuals <= 1e-9" : "residual above 1e-9");
}

void criterion_euclidean_classification(Suite& s, Checks& c)
{
    const QuadricKind kinds[] = {QuadricKind::plane, QuadricKind::circular_cylinder, QuadricKind::elliptic_cylinder,
                                 QuadricKind::quartic};
    const int degrees[] = {1, 2, 2, 4};
    for (int k = 0; k < 4; ++k) {
        const auto& pi = s.implicit(kEuclid[k], Projection::pi);
        auto kind = euclidean_outcome(pi);
        auto et = euclidean_type(pi);
        c.add(kind == kinds[k], kEuclid[k] + " outcome " + to_string(kind));
        c.add(et.d == degrees[k] && et.m == 0, kEuclid[k] + " euclidean type " + et.to_string());
        c.note(kEuclid[k] + " " + to_string(kind) + " " + et.to_string());
    }
    auto lifted = s.report("euclid-quartic").elliptic_type;
    bool differs = lifted != "(2;1,1)" && lifted != "(4;2,1)" && lifted != "(8;2,2)";
    c.add(differs, "quartic lifted elliptic type " + lifted + " is a clifford type");
    c.note("quartic lifted elliptic type " + lifted);
}

void criterion_lattice(Suite&, Checks& c)
{
    int checks = 0;
    for (auto t : all_lattice_types())
        for (const auto& lc : lattice_consistency(t)) {
            c.add(lc.pass, lc.name);
            ++checks;
        }
    auto e4 = picard_lattice(LatticeType::E4);
    c.add(arithmetic_genus(e4, {1, 1}) == 0, "E4 genus of H+F");
    auto s2 = picard_lattice(LatticeType::S2);
    bool s2ok = true;
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b)
            s2ok = s2ok && arithmetic_genus(s2, {a, b}) == a * b - a - b + 1;
    c.add(s2ok && arithmetic_genus(s2, {3, 5}) == 8, "S2 genus of aH+bF");
    auto s8 = picard_lattice(LatticeType::S8);
    DivisorClass mk = s8.canonical;
    for (auto& x : mk)
        x = -x;
    c.add(arithmetic_genus(s8, mk) == 1, "S8 genus of -K");
    c.note(std::to_string(checks) + " consistency checks over 5 types; genus identities");
}

void criterion_properties(Suite& s, Checks& c)
{
    // quadric membership
    int surfaces = 0;
    for (const auto& name : builtin_fixture_names()) {
        c.add(sphere_quadric(sphere_coordinates(synthesize(s.fixture(name)))).is_zero(), name + " off the sphere");
        ++surfaces;
    }
    std::mt19937_64 rng(5);
    for (int k = 0; k < 10; ++k) {
        auto c1 = sample_circle_through_m(rng), c2 = sample_circle_through_m(rng);
        c.add(sphere_quadric(clifford_translate_surface(c1, c2, k % 2 ? Side::right : Side::left).sphere).is_zero(),
              "random clifford surface off the sphere");
        ++surfaces;
    }
    // nullspace: fraction-free, Gauss-Jordan over Q(i), modular
    std::mt19937_64 mr(6);
    for (int k = 0; k < 40; ++k) {
        int rows = 1 + (int)(mr() % 6), cols = 1 + (int)(mr() % 6), inner = 1 + (int)(mr() % 3);
        ExactMatrix<Rational> a(rows, inner), b(inner, cols), m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < inner; ++j)
                a.at(i, j) = make_rational((long)(mr() % 9) - 4, (long)(mr() % 5) + 1);
        for (int i = 0; i < inner; ++i)
            for (int j = 0; j < cols; ++j)
                b.at(i, j) = make_rational((long)(mr() % 9) - 4, (long)(mr() % 5) + 1);
        ExactMatrix<GaussianRational> mg(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                Rational x = 0;
                for (int l = 0; l < inner; ++l)
                    x += a.at(i, l) * b.at(l, j);
                m.at(i, j) = x;
                mg.at(i, j) = GaussianRational(x);
            }
        auto ker = nullspace(m);
        bool ok = nullspace(mg).size() == ker.size() && modular_nullspace(m, 1000000007ULL).size() == ker.size();
        for (const auto& v : ker)
            for (const auto& x : m.apply(v))
                ok = ok && sgn(x) == 0;
        if (ker.size() == 1) {
            auto v = multimodular_kernel_vector(m);
            ok = ok && v && primitive_vector(*v) == ker[0];
        }
        c.add(ok, "nullspace oracles disagree on random instance " + std::to_string(k));
    }
    // gcd and Sturm against products of known rational linear factors
    using RU = UPoly<Rational>;
    for (int k = 0; k < 40; ++k) {
        std::vector<Rational> roots;
        RU common = RU::constant(Rational(1)), pa = RU::constant(Rational(1)), pb = RU::constant(Rational(1));
        int nc = (int)(mr() % 3), na = (int)(mr() % 3), nb = (int)(mr() % 3);
        auto lin = [&](std::vector<Rational>& rs) {
            Rational r = make_rational((long)(mr() % 41) - 20, (long)(mr() % 3) + 1);
            while (std::find(rs.begin(), rs.end(), r) != rs.end())
                r += 50;
            rs.push_back(r);
            return RU::x() - RU::constant(r);
        };
        for (int i = 0; i < nc; ++i)
            common = common * lin(roots);
        for (int i = 0; i < na; ++i)
            pa = pa * lin(roots);
        for (int i = 0; i < nb; ++i)
            pb = pb * lin(roots);
        RU g = gcd(pa * common, pb * common);
        bool ok = g == common.monic();
        // an irreducible quadratic adds no real roots
        RU q = RU::x() * RU::x() + RU::constant(Rational(1 + (long)(mr() % 5)));
        ok = ok && real_root_count(pa * common * q) == na + nc;
        c.add(ok, "gcd or Sturm oracle disagrees on random instance " + std::to_string(k));
    }
    // determinism of reports
    for (const char* name : {"torus", "great-little"}) {
        std::string a = to_json(s.report(name));
        std::string b = to_json(classify_celestial(s.fixture(name)));
        c.add(a == b, std::string(name) + " report not byte-identical across runs");
        c.add(report_from_json(a) == s.report(name), std::string(name) + " report does not round trip");
    }
    c.note(std::to_string(surfaces) + " surfaces on the quadric; 40 nullspace and 40 gcd/Sturm instances; "
                                      "reports byte-identical");
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt)
{
    Suite suite(opt);
    using Fn = std::function<void(Suite&, Checks&)>;
    const std::vector<std::pair<std::string, Fn>> criteria{
        {"elliptic type table", criterion_elliptic_types},
        {"degree table", criterion_degrees},
        {"euclidean types", criterion_euclidean_types},
        {"singular locus of the one-ruled octic", criterion_singular_locus},
        {"coincident rulings", criterion_coincident},
        {"topology trichotomy", criterion_topology},
        {"left/right translation symmetry", criterion_symmetry},
        {"isometry property", criterion_isometry},
        {"euclidean translational classification", criterion_euclidean_classification},
        {"lattice arithmetic", criterion_lattice},
        {"property suites", criterion_properties},
    };
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checks c;
        try {
            criteria[i].second(suite, c);
        } catch (const std::exception& e) {
            c.add(false, std::string("exception: ") + e.what());
        }
        out.push_back({(int)i + 1, criteria[i].first, c.ok, c.detail()});
    }
    return out;
}

std::string format_results(const std::vector<CriterionResult>& rs)
{
    std::ostringstream os;
    for (const auto& r : rs)
        os << (r.pass ? "PASS" : "FAIL") << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << ": "
           << r.detail << "\n";
    int passed = (int)std::count_if(rs.begin(), rs.end(), [](const auto& r) { return r.pass; });
    os << passed << "/" << rs.size() << " criteria passed\n";
    return os.str();
}

bool all_pass(const std::vector<CriterionResult>& rs)
{
    return std::all_of(rs.begin(), rs.end(), [](const auto& r) { return r.pass; });
}

} // namespace celestial
