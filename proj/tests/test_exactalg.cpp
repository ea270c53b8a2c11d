#include "doctest.h"

#include "celestial/exactalg/matrix.hpp"
#include "celestial/exactalg/multipoly.hpp"
#include "celestial/exactalg/resultant.hpp"
#include "celestial/exactalg/upoly.hpp"

#include <random>

using namespace celestial;

using P = MultiPoly<Rational>;
using UQ = UPoly<Rational>;
using UG = UPoly<GaussianRational>;

namespace {

const std::vector<std::string> XY{"x", "y"};

P var(const std::vector<std::string>& v, std::size_t i) { return P::variable(v, i); }
P cst(const std::vector<std::string>& v, long c) { return P::constant(v, Rational(c)); }

UQ uq(std::vector<long> c)
{
    std::vector<Rational> r;
    for (long v : c)
        r.emplace_back(v);
    return UQ(r);
}

P random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int deg, int terms)
{
    std::uniform_int_distribution<int> coef(-5, 5), ex(0, deg);
    P p(vars);
    for (int k = 0; k < terms; ++k) {
        Exponent e(vars.size());
        for (auto& x : e)
            x = ex(rng) / (int)vars.size();
        p.add_term(e, Rational(coef(rng)));
    }
    return p;
}

} // namespace

TEST_CASE("rational canonical form")
{
    Rational r = make_rational(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(make_rational(0, 7)) == "0");
    CHECK(parse_rational("-10/4") == make_rational(-5, 2));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("gaussian rationals")
{
    GaussianRational a(Rational(3), Rational(4));
    CHECK(a.norm() == 25);
    CHECK(a * a.inverse() == GaussianRational(1));
    CHECK(a.conjugate().conjugate() == a);
    CHECK((a * GaussianRational::i()) == GaussianRational(Rational(-4), Rational(3)));
    auto s = gaussian_sqrt(GaussianRational(Rational(-7), Rational(24)));
    REQUIRE(s);
    CHECK((*s) * (*s) == GaussianRational(Rational(-7), Rational(24)));
    CHECK(!gaussian_sqrt(GaussianRational(Rational(2))));
    CHECK(to_string(a) == "(3+4i)");
    CHECK(to_string(GaussianRational(Rational(0), Rational(-1))) == "(-i)");
}

TEST_CASE("poly ops examples")
{
    P x = var(XY, 0), y = var(XY, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK(cst(XY, 5).derivative(0).is_zero());

    // x1 <- s^2 + t^2, x2 <- 2 s t into x1^2 - x2^2
    std::vector<std::string> st{"s", "t"};
    P s = var(st, 0), t = var(st, 1);
    std::vector<std::string> x12{"x1", "x2"};
    P x1 = var(x12, 0), x2 = var(x12, 1);
    P f = x1 * x1 - x2 * x2;
    P g = f.compose({s * s + t * t, cst(st, 2) * s * t});
    P sm = s * s - t * t;
    CHECK(g == sm * sm);
    // term-by-term oracle: coefficients of (s^2 - t^2)^2 = s^4 - 2 s^2 t^2 + t^4
    CHECK(g.size() == 3);
    CHECK(g.coefficient({4, 0}) == 1);
    CHECK(g.coefficient({2, 2}) == -2);
    CHECK(g.coefficient({0, 4}) == 1);

    CHECK_THROWS_AS(x + var({"a", "b"}, 0), std::invalid_argument);
}

TEST_CASE("bidegree bound on substitution of a (2,2) map")
{
    std::vector<std::string> st{"s0", "s1", "t0", "t1"};
    std::mt19937 rng(11);
    std::vector<P> images;
    std::uniform_int_distribution<int> c(-3, 3);
    for (int k = 0; k < 4; ++k) {
        P im(st);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                im.add_term({a, 2 - a, b, 2 - b}, Rational(c(rng)));
        images.push_back(im);
    }
    std::vector<std::string> xs{"x1", "x2", "x3", "x4"};
    P q(xs);
    for (const auto& e : monomials_of_degree(4, 3))
        q.add_term(e, Rational(c(rng)));
    P r = q.compose(images);
    CHECK(r.degree_in_group({0, 1}) <= 6);
    CHECK(r.degree_in_group({2, 3}) <= 6);
}

TEST_CASE("evaluation and text form")
{
    P x = var(XY, 0), y = var(XY, 1);
    P p = cst(XY, 3) * x * x * y - P::constant(XY, make_rational(1, 2)) * y + cst(XY, 1);
    CHECK(p.evaluate(std::vector<Rational>{Rational(2), Rational(1)}) == Rational(25, 2));
    CHECK(p.to_string() == "3*x^2*y-1/2*y+1");
    CHECK(parse_polynomial(p.to_string(), XY) == p);
    CHECK(parse_polynomial("x^2 - 2*x*y + y^2", XY) == (x - y) * (x - y));
}

TEST_CASE("exact multivariate division")
{
    P x = var(XY, 0), y = var(XY, 1);
    P a = x * x + x * y + cst(XY, 1), b = x - y + cst(XY, 2);
    auto q = divide_exact(a * b, b);
    REQUIRE(q);
    CHECK(*q == a);
    CHECK(!divide_exact(a, b));
}

TEST_CASE("distributivity on random polynomials")
{
    std::mt19937 rng(5);
    std::vector<std::string> v{"a", "b", "c"};
    for (int k = 0; k < 50; ++k) {
        P p = random_poly(rng, v, 6, 5), q = random_poly(rng, v, 6, 5), r = random_poly(rng, v, 6, 5);
        CHECK((p + q) * r == p * r + q * r);
    }
}

TEST_CASE("nullspace examples")
{
    ExactMatrix<Rational> id({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(nullspace(id).empty());

    ExactMatrix<Rational> m({{Rational(1), Rational(0), Rational(1)}, {Rational(0), Rational(1), Rational(1)}});
    auto k = nullspace(m);
    REQUIRE(k.size() == 1);
    // hand solution (1,1,-1) up to scale; basis normalized with positive first entry
    CHECK((k[0] == std::vector<Rational>{Rational(1), Rational(1), Rational(-1)}));

    ExactMatrix<Rational> z(3, 3);
    auto kz = nullspace(z);
    REQUIRE(kz.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(kz[i][j] == (i == j ? 1 : 0));
}

TEST_CASE("nullspace property on random matrices")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-4, 4), d(1, 6), dim(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = dim(rng), cols = dim(rng);
        // low-rank product so kernels are common
        int inner = std::uniform_int_distribution<int>(1, std::max(1, std::min(rows, cols)))(rng);
        ExactMatrix<Rational> a(rows, inner), b(inner, cols), m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < inner; ++j)
                a.at(i, j) = make_rational(c(rng), d(rng));
        for (int i = 0; i < inner; ++i)
            for (int j = 0; j < cols; ++j)
                b.at(i, j) = make_rational(c(rng), d(rng));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                Rational s = 0;
                for (int k = 0; k < inner; ++k)
                    s += a.at(i, k) * b.at(k, j);
                m.at(i, j) = s;
            }
        auto ker = nullspace(m);
        for (const auto& v : ker)
            for (const auto& x : m.apply(v))
                CHECK(sgn(x) == 0);
        CHECK(rank(m) + ker.size() == (std::size_t)cols);
        // independence: the kernel vectors stacked have full rank
        if (!ker.empty()) {
            ExactMatrix<Rational> kk(ker);
            CHECK(rank(kk) == ker.size());
        }
        // oracle: rank from an independent Gauss-Jordan over Q(i)
        ExactMatrix<GaussianRational> mg(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                mg.at(i, j) = GaussianRational(m.at(i, j));
        CHECK(nullspace(mg).size() == ker.size());
        // modular selection finds the same rank
        CHECK(modular_row_basis(m, 2305843009213693951ULL).size() == rank(m));
        CHECK(modular_nullspace(m, 1000000007ULL).size() == ker.size());
        if (ker.size() == 1) {
            auto v = multimodular_kernel_vector(m);
            REQUIRE(v.has_value());
            CHECK(primitive_vector(*v) == ker[0]);
        }
    }
}

TEST_CASE("multimodular kernel lifts large entries")
{
    // kernel (-a, -b, 1) with 60-digit a, b
    Rational a("123456789012345678901234567890123456789012345678901234567891/7");
    Rational b("-98765432109876543210987654321098765432109876543210987654321/11");
    a.canonicalize();
    b.canonicalize();
    ExactMatrix<Rational> m({{Rational(1), Rational(0), a}, {Rational(0), Rational(1), b}});
    auto v = multimodular_kernel_vector(m);
    REQUIRE(v.has_value());
    CHECK(primitive_vector(*v) == nullspace(m)[0]);
    CHECK((*v)[2] == 1);
    CHECK((*v)[0] == -a);
    ExactMatrix<Rational> full({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
    CHECK_FALSE(multimodular_kernel_vector(full).has_value());
}

TEST_CASE("determinant by Bareiss agrees with cofactor expansion")
{
    ExactMatrix<Rational> m({{Rational(2), Rational(-1), Rational(0)},
                             {Rational(1), Rational(3), Rational(4)},
                             {Rational(0), Rational(5), Rational(-2)}});
    // 2(3*-2 - 20) - (-1)(1*-2 - 0) + 0 = -52 - 2
    CHECK(determinant(m) == -54);
}

TEST_CASE("gcd and squarefree")
{
    CHECK(gcd(uq({-1, 0, 1}), uq({-1, 1})) == uq({-1, 1}));
    UQ p = uq({1, 0, 1}).pow(2) * uq({-3, 1});
    auto sf = squarefree_decomposition(p);
    REQUIRE(sf.size() == 2);
    CHECK(sf[0].factor == uq({-3, 1}));
    CHECK(sf[0].multiplicity == 1);
    CHECK(sf[1].factor == uq({1, 0, 1}));
    CHECK(sf[1].multiplicity == 2);
    CHECK_THROWS(squarefree_decomposition(UQ()));

    UG a = to_gaussian(uq({1, 0, 1}));
    UG b({-GaussianRational::i(), GaussianRational(1)});
    CHECK(gcd(a, b) == b);
}

TEST_CASE("squarefree re-multiplies and conjugation commutes")
{
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        UQ p = UQ::constant(Rational(c(rng) == 0 ? 2 : 3));
        int nf = 1 + trial % 3;
        for (int k = 0; k < nf; ++k) {
            UQ f = uq({c(rng), c(rng), 1});
            p = p * f.pow(1 + k % 3);
        }
        auto sf = squarefree_decomposition(p);
        UQ back = UQ::constant(p.lead());
        for (const auto& f : sf) {
            back = back * f.factor.pow(f.multiplicity);
            CHECK(is_squarefree(f.factor));
        }
        CHECK(back == p);

        UG g1({GaussianRational(Rational(c(rng)), Rational(c(rng))), GaussianRational(Rational(c(rng)), Rational(1)),
               GaussianRational(1)});
        UG g2({GaussianRational(Rational(c(rng)), Rational(c(rng))), GaussianRational(1)});
        UG h = g1 * g2;
        CHECK((g1 * g2).conjugate() == g1.conjugate() * g2.conjugate());
        CHECK(gcd(h, g1).conjugate() == gcd(h.conjugate(), g1.conjugate()));
    }
}

TEST_CASE("resultant examples")
{
    std::vector<std::string> xab{"x", "a", "b"};
    P x = var(xab, 0), a = var(xab, 1), b = var(xab, 2);
    CHECK(resultant(x - a, x - b, 0) == a - b);
    P x2 = x * x - cst(xab, 2);
    CHECK(resultant(x2, x2, 0).is_zero());
    P X = var(XY, 0), Y = var(XY, 1);
    CHECK(resultant(X * X + Y * Y - cst(XY, 1), X - Y, 0) == cst(XY, 2) * Y * Y - cst(XY, 1));
    CHECK_THROWS(resultant(Y, Y * Y, 0));
}

TEST_CASE("univariate resultant matches Sylvester determinant")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> c(-4, 4);
    std::vector<std::string> xv{"x"};
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<long> a(1 + trial % 4 + 1), b(1 + trial % 3 + 1);
        for (auto& v : a)
            v = c(rng);
        for (auto& v : b)
            v = c(rng);
        a.back() = 1;
        b.back() = 2;
        UQ pa = uq(a), pb = uq(b);
        P ma = upoly_to_multi(pa, xv, 0), mb = upoly_to_multi(pb, xv, 0);
        P r = resultant(ma, mb, 0);
        CHECK(r == P::constant(xv, resultant(pa, pb)));
        // product over roots property in the form Res(a, b) = 0 iff common factor
        CHECK((resultant(pa, pb) == 0) == (gcd(pa, pb).degree() > 0));
    }
}

TEST_CASE("first subresultant gives the common root")
{
    // p = (y - 2)(y - 3)(y + 1), q = (y - 2)(y + 5): S1 = c1*y + c0 with root 2
    std::vector<std::string> yv{"y"};
    P y = var(yv, 0);
    P p = (y - cst(yv, 2)) * (y - cst(yv, 3)) * (y + cst(yv, 1));
    P q = (y - cst(yv, 2)) * (y + cst(yv, 5));
    P s1 = subresultant(p, q, 0, 1);
    UQ u = multi_to_upoly(s1, 0);
    REQUIRE(u.degree() == 1);
    CHECK(-u.coeff(0) / u.coeff(1) == 2);
}

TEST_CASE("sturm examples")
{
    CHECK(real_root_count(uq({1, 0, 1})) == 0);
    CHECK(real_root_count(uq({-2, 0, 1})) == 2);
    CHECK(sturm_count(uq({0, -1, 0, 1}), Rational(0), std::nullopt) == 1);
    CHECK(sturm_count(uq({0, -1, 0, 1}), std::nullopt, Rational(0)) == 2);
    CHECK_THROWS(sturm_count(uq({1, 2, 1}), std::nullopt, std::nullopt));
}

TEST_CASE("sturm agrees with grid sign scanning")
{
    // polynomials with known well-separated rational roots and root-free quadratic factors;
    // the oracle counts sign changes on a grid of step 1/64, refined at exact zeros
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> nroots(0, 4), root(-12, 12), q(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> rts;
        int n = nroots(rng);
        while ((int)rts.size() < n) {
            int r = root(rng);
            bool ok = true;
            for (int s : rts)
                ok = ok && std::abs(s - r) >= 1;
            if (ok)
                rts.push_back(r);
        }
        UQ p = UQ::constant(Rational(1));
        for (int r : rts)
            p = p * UQ::linear(Rational(1), Rational(-r, 4)); // roots r/4
        int deg = (int)rts.size();
        while (deg + 2 <= 6 && (trial % 2)) {
            p = p * uq({q(rng), 0, 1});
            deg += 2;
            break;
        }
        if (p.degree() == 0)
            p = uq({1, 0, 1});
        int scan = 0;
        Rational lo(-4), step(1, 64);
        int last = sgn(p.eval(lo));
        for (Rational x = lo + step; x <= 4; x += step) {
            int s = sgn(p.eval(x));
            if (s == 0) {
                ++scan;
                last = 0;
                continue;
            }
            if (last != 0 && s != last)
                ++scan;
            last = s;
        }
        CHECK(real_root_count(p) == scan);
        CHECK(sturm_count(p, Rational(-4), Rational(4)) == scan);
    }
}
