#pragma once

#include "celestial/exactalg/multipoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace celestial {

// Dense univariate polynomial over a field, coefficients low to high.
template <class F>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<F> c) : c_(std::move(c)) { trim(); }

    static UPoly constant(const F& a) { return UPoly(std::vector<F>{a}); }
    static UPoly x() { return UPoly(std::vector<F>{F(0), F(1)}); }
    static UPoly monomial(int d, const F& a)
    {
        std::vector<F> c(d + 1, F(0));
        c[d] = a;
        return UPoly(std::move(c));
    }
    // a x + b
    static UPoly linear(const F& a, const F& b) { return UPoly(std::vector<F>{b, a}); }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    const F& lead() const { return c_.back(); }
    F coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : F(0); }
    const std::vector<F>& coefficients() const { return c_; }

    UPoly& operator+=(const UPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), F(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UPoly& operator*=(const F& s)
    {
        for (auto& v : c_)
            v *= s;
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(UPoly a, const F& s) { return a *= s; }
    friend UPoly operator*(const F& s, UPoly a) { return a *= s; }
    friend UPoly operator*(const UPoly& a, const UPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return UPoly();
        std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (celestial::is_zero(a.c_[i]))
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += F(a.c_[i] * b.c_[j]);
        }
        return UPoly(std::move(r));
    }
    UPoly operator-() const
    {
        UPoly r(*this);
        for (auto& v : r.c_)
            v = F(-v);
        return r;
    }
    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    // returns (quotient, remainder)
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const
    {
        if (d.is_zero())
            throw std::invalid_argument("division by zero polynomial");
        if (degree() < d.degree())
            return {UPoly(), *this};
        std::vector<F> r = c_;
        std::vector<F> q(c_.size() - d.c_.size() + 1, F(0));
        F inv = F(1) / d.lead();
        for (int k = (int)q.size() - 1; k >= 0; --k) {
            F f = F(r[k + d.degree()] * inv);
            q[k] = f;
            if (celestial::is_zero(f))
                continue;
            for (int j = 0; j <= d.degree(); ++j)
                r[k + j] -= F(f * d.c_[j]);
        }
        r.resize(d.c_.size() - 1);
        return {UPoly(std::move(q)), UPoly(std::move(r))};
    }
    UPoly operator/(const UPoly& d) const { return divmod(d).first; }
    UPoly operator%(const UPoly& d) const { return divmod(d).second; }

    UPoly derivative() const
    {
        if (c_.size() <= 1)
            return UPoly();
        std::vector<F> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = F(c_[i] * F((int)i));
        return UPoly(std::move(r));
    }
    UPoly monic() const
    {
        if (is_zero())
            return *this;
        return *this * (F(1) / lead());
    }
    UPoly pow(unsigned k) const
    {
        UPoly r = constant(F(1)), b = *this;
        while (k) {
            if (k & 1)
                r = r * b;
            k >>= 1;
            if (k)
                b = b * b;
        }
        return r;
    }
    template <class T>
    T eval(const T& x) const
    {
        T acc(0);
        for (int i = degree(); i >= 0; --i) {
            acc *= x;
            acc += T(c_[i]);
        }
        return acc;
    }
    // p(q(x))
    UPoly compose(const UPoly& q) const
    {
        UPoly acc;
        for (int i = degree(); i >= 0; --i)
            acc = acc * q + constant(c_[i]);
        return acc;
    }
    UPoly conjugate() const
    {
        UPoly r(*this);
        for (auto& v : r.c_)
            v = conj(v);
        return r;
    }

    std::string to_string(const std::string& var = "x") const
    {
        std::vector<std::string> vars{var};
        MultiPoly<F> m(vars);
        for (int i = 0; i <= degree(); ++i)
            m.add_term(Exponent{i}, c_[i]);
        return m.to_string();
    }

private:
    void trim()
    {
        while (!c_.empty() && celestial::is_zero(c_.back()))
            c_.pop_back();
    }
    std::vector<F> c_;
};

template <class F>
bool is_zero(const UPoly<F>& p)
{
    return p.is_zero();
}

// Monic gcd (zero when both are zero).
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b)
{
    while (!b.is_zero()) {
        UPoly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// g = s a + t b with g monic
template <class F>
void xgcd(const UPoly<F>& a, const UPoly<F>& b, UPoly<F>& g, UPoly<F>& s, UPoly<F>& t)
{
    UPoly<F> r0 = a, r1 = b;
    UPoly<F> s0 = UPoly<F>::constant(F(1)), s1;
    UPoly<F> t0, t1 = UPoly<F>::constant(F(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UPoly<F> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UPoly<F> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        g = r0;
        s = UPoly<F>();
        t = UPoly<F>();
        return;
    }
    F inv = F(1) / r0.lead();
    g = r0 * inv;
    s = s0 * inv;
    t = t0 * inv;
}

// inverse of a modulo m, nullopt when not coprime
template <class F>
std::optional<UPoly<F>> inverse_mod(const UPoly<F>& a, const UPoly<F>& m)
{
    UPoly<F> g, s, t;
    xgcd(a % m, m, g, s, t);
    if (g.degree() != 0)
        return std::nullopt;
    return s % m;
}

template <class F>
struct SquarefreeFactor {
    UPoly<F> factor;
    int multiplicity;
};

// Yun's algorithm: p = lead * prod factor^multiplicity, factors monic, squarefree, coprime.
template <class F>
std::vector<SquarefreeFactor<F>> squarefree_decomposition(const UPoly<F>& p)
{
    if (p.is_zero())
        throw std::invalid_argument("squarefree decomposition of the zero polynomial");
    std::vector<SquarefreeFactor<F>> out;
    if (p.degree() == 0)
        return out;
    UPoly<F> a = p.monic();
    UPoly<F> d = a.derivative();
    UPoly<F> g = gcd(a, d);
    UPoly<F> b = a / g;
    UPoly<F> c = d / g;
    UPoly<F> e = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly<F> f = gcd(b, e);
        if (f.degree() > 0)
            out.push_back({f.monic(), i});
        b = b / f;
        c = e / f;
        e = c - b.derivative();
        ++i;
    }
    return out;
}

template <class F>
UPoly<F> squarefree_part(const UPoly<F>& p)
{
    UPoly<F> r = UPoly<F>::constant(F(1));
    for (const auto& f : squarefree_decomposition(p))
        r = r * f.factor;
    return r;
}

template <class F>
bool is_squarefree(const UPoly<F>& p)
{
    if (p.degree() <= 0)
        return true;
    return gcd(p, p.derivative()).degree() == 0;
}

// Res(a, b) = lead(a)^deg b * prod b(roots of a), by the Euclidean recursion.
template <class F>
F resultant(const UPoly<F>& a0, const UPoly<F>& b0)
{
    if (a0.is_zero() || b0.is_zero())
        return F(0);
    UPoly<F> a = a0, b = b0;
    F acc(1);
    while (true) {
        int m = a.degree(), n = b.degree();
        if (n == 0) {
            F r(1);
            for (int k = 0; k < m; ++k)
                r *= b.lead();
            return F(acc * r);
        }
        UPoly<F> r = a % b;
        if (r.is_zero())
            return F(0);
        int k = r.degree();
        F factor(1);
        for (int j = 0; j < m - k; ++j)
            factor *= b.lead();
        if ((m * n) % 2)
            factor = F(-factor);
        acc *= factor;
        a = std::move(b);
        b = std::move(r);
    }
}

template <class F>
MultiPoly<F> upoly_to_multi(const UPoly<F>& p, const std::vector<std::string>& vars, std::size_t var)
{
    MultiPoly<F> m(vars);
    for (int i = 0; i <= p.degree(); ++i) {
        Exponent e(vars.size(), 0);
        e[var] = i;
        m.add_term(e, p.coeff(i));
    }
    return m;
}

// p must only involve variable var
template <class F>
UPoly<F> multi_to_upoly(const MultiPoly<F>& p, std::size_t var)
{
    std::vector<F> c(std::max(p.degree_in(var) + 1, 0), F(0));
    for (const auto& [e, v] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw std::invalid_argument("polynomial is not univariate in the requested variable");
        c[e[var]] = v;
    }
    return UPoly<F>(std::move(c));
}

// Binary form f(x0, x1) of degree d -> f(x, 1).
template <class F>
UPoly<F> dehomogenize_binary(const MultiPoly<F>& f, std::size_t x0, std::size_t x1)
{
    std::vector<F> c(std::max(f.degree_in(x0) + 1, 0), F(0));
    for (const auto& [e, v] : f.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != x0 && i != x1 && e[i] != 0)
                throw std::invalid_argument("not a binary form in the requested variables");
        c[e[x0]] += v;
    }
    return UPoly<F>(std::move(c));
}

UPoly<GaussianRational> to_gaussian(const UPoly<Rational>& p);

// Real / imaginary parts of a Gaussian polynomial; the polynomial is real iff imag is zero.
std::pair<UPoly<Rational>, UPoly<Rational>> split_real_imag(const UPoly<GaussianRational>& p);

// Distinct real roots of squarefree p in (lo, hi]; nullopt endpoints are -inf / +inf.
int sturm_count(const UPoly<Rational>& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi);

int real_root_count(const UPoly<Rational>& p);

} // namespace celestial
