#include "celestial/exactalg/gaussian.hpp"
#include "celestial/exactalg/rational.hpp"

#include <cctype>

namespace celestial {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    for (char ch : s)
        if (!(std::isdigit((unsigned char)ch) || ch == '-' || ch == '+' || ch == '/'))
            throw std::invalid_argument("bad rational literal: " + s);
    if (s[0] == '+')
        s.erase(0, 1);
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

Integer lcm_of_denominators(const Rational* begin, const Rational* end)
{
    Integer l = 1;
    for (const Rational* p = begin; p != end; ++p)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p->get_den_mpz_t());
    return l;
}

GaussianRational GaussianRational::inverse() const
{
    Rational n = norm();
    if (sgn(n) == 0)
        throw std::domain_error("inverse of zero");
    return GaussianRational(Rational(re / n), Rational(-im / n));
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

std::string to_string(const GaussianRational& g)
{
    if (sgn(g.im) == 0)
        return g.re.get_str();
    std::string im;
    if (g.im == 1)
        im = "i";
    else if (g.im == -1)
        im = "-i";
    else
        im = g.im.get_str() + "i";
    if (sgn(g.re) == 0)
        return "(" + im + ")";
    return "(" + g.re.get_str() + (sgn(g.im) > 0 ? "+" : "") + im + ")";
}

std::optional<Rational> rational_sqrt(const Rational& r)
{
    if (sgn(r) < 0)
        return std::nullopt;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
    return Rational(n, d);
}

// (x + y i)^2 = a + b i  =>  x^2 = (a + |g|) / 2
std::optional<GaussianRational> gaussian_sqrt(const GaussianRational& g)
{
    if (celestial::is_zero(g))
        return GaussianRational();
    auto mod = rational_sqrt(g.norm());
    if (!mod)
        return std::nullopt;
    if (sgn(g.im) == 0) {
        if (sgn(g.re) > 0) {
            auto x = rational_sqrt(g.re);
            if (!x)
                return std::nullopt;
            return GaussianRational(*x);
        }
        auto y = rational_sqrt(Rational(-g.re));
        if (!y)
            return std::nullopt;
        return GaussianRational(Rational(0), *y);
    }
    auto x = rational_sqrt(Rational((g.re + *mod) / 2));
    if (!x || sgn(*x) == 0)
        return std::nullopt;
    Rational y = g.im / (2 * *x);
    return GaussianRational(*x, y);
}

} // namespace celestial
