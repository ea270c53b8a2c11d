#include "celestial/exactalg/multipoly.hpp"

#include <cctype>
#include <cmath>

namespace celestial {

MultiPoly<Rational> primitive_part(const MultiPoly<Rational>& p)
{
    if (p.is_zero())
        return p;
    Integer l = 1, g = 0;
    for (const auto& [e, c] : p.terms())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [e, c] : p.terms()) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational s(l, g);
    s.canonicalize();
    if (sgn(p.leading_coefficient()) < 0)
        s = -s;
    return p * s;
}

double evaluate_double(const MultiPoly<Rational>& p, const std::vector<double>& point)
{
    double acc = 0;
    for (const auto& [e, c] : p.terms()) {
        double t = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            t *= std::pow(point.at(i), e[i]);
        acc += t;
    }
    return acc;
}

double evaluate_abs_scale(const MultiPoly<Rational>& p, const std::vector<double>& point)
{
    double acc = 0;
    for (const auto& [e, c] : p.terms()) {
        double t = std::fabs(c.get_d());
        for (std::size_t i = 0; i < e.size(); ++i)
            t *= std::pow(std::fabs(point.at(i)), e[i]);
        acc += t;
    }
    return acc;
}

namespace {

struct Parser {
    const std::string& s;
    const std::vector<std::string>& vars;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < s.size() && std::isspace((unsigned char)s[pos]))
            ++pos;
    }
    [[noreturn]] void fail(const std::string& what)
    {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos) + ": " + what);
    }
    Integer integer()
    {
        skip();
        std::size_t b = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos]))
            ++pos;
        if (b == pos)
            fail("expected integer");
        return Integer(s.substr(b, pos - b));
    }
    MultiPoly<Rational> factor()
    {
        skip();
        if (pos < s.size() && std::isdigit((unsigned char)s[pos])) {
            Integer n = integer();
            Integer d = 1;
            skip();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                d = integer();
            }
            Rational r(n, d);
            r.canonicalize();
            return MultiPoly<Rational>::constant(vars, r);
        }
        std::size_t b = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_'))
            ++pos;
        std::string name = s.substr(b, pos - b);
        std::size_t k = 0;
        while (k < vars.size() && vars[k] != name)
            ++k;
        if (name.empty() || k == vars.size())
            fail("unknown variable '" + name + "'");
        int ex = 1;
        skip();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            ex = (int)integer().get_si();
        }
        Exponent e(vars.size(), 0);
        e[k] = ex;
        return MultiPoly<Rational>::monomial(vars, e, Rational(1));
    }
    MultiPoly<Rational> term()
    {
        MultiPoly<Rational> t = factor();
        skip();
        while (pos < s.size() && s[pos] == '*') {
            ++pos;
            t = t * factor();
            skip();
        }
        return t;
    }
    MultiPoly<Rational> expr()
    {
        MultiPoly<Rational> acc(vars);
        skip();
        bool first = true;
        while (pos < s.size()) {
            Rational sign = 1;
            if (s[pos] == '+' || s[pos] == '-') {
                if (s[pos] == '-')
                    sign = -1;
                ++pos;
            } else if (!first) {
                fail("expected + or -");
            }
            acc += term() * sign;
            first = false;
            skip();
        }
        if (first)
            fail("empty polynomial");
        return acc;
    }
};

} // namespace

MultiPoly<Rational> parse_polynomial(const std::string& text, const std::vector<std::string>& vars)
{
    Parser p{text, vars};
    return p.expr();
}

std::vector<Exponent> monomials_of_degree(std::size_t n, int d)
{
    std::vector<Exponent> out;
    Exponent e(n, 0);
    // recursive fill of compositions of d into n parts
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    if (n == 0)
        return out;
    rec(rec, 0, d);
    return out; // already descending lexicographic within one degree
}

} // namespace celestial
