#pragma once

#include "celestial/exactalg/gaussian.hpp"
#include "celestial/exactalg/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace celestial {

using Exponent = std::vector<int>;

inline int exponent_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// graded lexicographic, largest monomial first
struct GrlexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        int da = exponent_degree(a), db = exponent_degree(b);
        if (da != db)
            return da > db;
        return a > b;
    }
};

template <class F>
class MultiPoly {
public:
    using Coeff = F;
    using Terms = std::map<Exponent, F, GrlexDescending>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const F& c)
    {
        MultiPoly p(std::move(vars));
        p.add_term(Exponent(p.nvars(), 0), c);
        return p;
    }
    static MultiPoly variable(std::vector<std::string> vars, std::size_t i)
    {
        MultiPoly p(std::move(vars));
        Exponent e(p.nvars(), 0);
        e.at(i) = 1;
        p.add_term(e, F(1));
        return p;
    }
    static MultiPoly monomial(std::vector<std::string> vars, const Exponent& e, const F& c)
    {
        MultiPoly p(std::move(vars));
        p.add_term(e, c);
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && exponent_degree(terms_.begin()->first) == 0);
    }

    int total_degree() const { return terms_.empty() ? -1 : exponent_degree(terms_.begin()->first); }
    int degree_in(std::size_t var) const
    {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e.at(var));
        return d;
    }
    int degree_in_group(const std::vector<std::size_t>& group) const
    {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (std::size_t v : group)
                s += e.at(v);
            d = std::max(d, s);
        }
        return d;
    }
    bool is_homogeneous() const
    {
        if (terms_.empty())
            return true;
        int d = total_degree();
        for (const auto& [e, c] : terms_)
            if (exponent_degree(e) != d)
                return false;
        return true;
    }

    F coefficient(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? F(0) : it->second;
    }
    const Exponent& leading_exponent() const { return terms_.begin()->first; }
    const F& leading_coefficient() const { return terms_.begin()->second; }

    void add_term(const Exponent& e, const F& c)
    {
        if (e.size() != vars_.size())
            throw std::invalid_argument("exponent length does not match variable count");
        if (celestial::is_zero(c))
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (celestial::is_zero(it->second))
                terms_.erase(it);
        }
    }

    MultiPoly& operator+=(const MultiPoly& o)
    {
        adopt(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o)
    {
        adopt(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, F(-c));
        return *this;
    }
    MultiPoly& operator*=(const F& s)
    {
        if (celestial::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o)
    {
        *this = *this * o;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const F& s) { return a *= s; }
    friend MultiPoly operator*(const F& s, MultiPoly a) { return a *= s; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        MultiPoly r(a.vars_.empty() ? b.vars_ : a.vars_);
        if (!a.vars_.empty() && !b.vars_.empty() && a.vars_ != b.vars_)
            throw std::invalid_argument("variable-arity mismatch");
        Exponent e(r.nvars());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, F(ca * cb));
            }
        return r;
    }
    MultiPoly operator-() const
    {
        MultiPoly r(*this);
        for (auto& [e, c] : r.terms_)
            c = F(-c);
        return r;
    }
    bool operator==(const MultiPoly& o) const
    {
        if (terms_.empty() && o.terms_.empty())
            return true;
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(std::size_t var) const
    {
        MultiPoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e.at(var) == 0)
                continue;
            Exponent f = e;
            f[var] -= 1;
            r.add_term(f, F(c * F(e[var])));
        }
        return r;
    }

    MultiPoly pow(unsigned k) const
    {
        MultiPoly r = constant(vars_, F(1));
        MultiPoly b = *this;
        while (k) {
            if (k & 1)
                r = r * b;
            k >>= 1;
            if (k)
                b = b * b;
        }
        return r;
    }

    template <class G, class Fn>
    MultiPoly<G> map_coefficients(Fn fn) const
    {
        MultiPoly<G> r(vars_);
        for (const auto& [e, c] : terms_)
            r.add_term(e, fn(c));
        return r;
    }

    // Substitute images[i] for variable i; images share one target ring.
    MultiPoly compose(const std::vector<MultiPoly>& images) const
    {
        if (images.size() != vars_.size())
            throw std::invalid_argument("substitution arity mismatch");
        std::vector<std::string> target;
        for (const auto& im : images)
            if (!im.vars_.empty()) {
                if (!target.empty() && target != im.vars_)
                    throw std::invalid_argument("substitution images live in different rings");
                target = im.vars_;
            }
        std::vector<std::vector<MultiPoly>> pows(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            pows[i].push_back(constant(target, F(1)));
        auto power = [&](std::size_t i, int k) -> const MultiPoly& {
            while ((int)pows[i].size() <= k)
                pows[i].push_back(pows[i].back() * images[i]);
            return pows[i][k];
        };
        MultiPoly r(target);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i])
                    t = t * power(i, e[i]);
            r += t;
        }
        return r;
    }

    template <class T>
    T evaluate(const std::vector<T>& point) const
    {
        if (point.size() != vars_.size())
            throw std::invalid_argument("evaluation arity mismatch");
        T acc(0);
        for (const auto& [e, c] : terms_) {
            T t(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k)
                    t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Re-express in a larger ring: variable i of this goes to slot placement[i].
    MultiPoly embed(const std::vector<std::string>& vars, const std::vector<std::size_t>& placement) const
    {
        MultiPoly r(vars);
        for (const auto& [e, c] : terms_) {
            Exponent f(vars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i)
                f.at(placement.at(i)) += e[i];
            r.add_term(f, c);
        }
        return r;
    }

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i])
                    continue;
                if (!mono.empty())
                    mono += '*';
                mono += vars_[i];
                if (e[i] > 1)
                    mono += '^' + std::to_string(e[i]);
            }
            std::string cs = celestial::to_string(c);
            std::string term;
            if (mono.empty())
                term = cs;
            else if (cs == "1")
                term = mono;
            else if (cs == "-1")
                term = "-" + mono;
            else
                term = cs + "*" + mono;
            if (!out.empty() && term[0] != '-')
                out += '+';
            out += term;
        }
        return out;
    }

private:
    void adopt(const MultiPoly& o)
    {
        if (vars_.empty() && terms_.empty()) {
            vars_ = o.vars_;
            return;
        }
        if (o.vars_.empty() && o.terms_.empty())
            return;
        if (vars_ != o.vars_)
            throw std::invalid_argument("variable-arity mismatch");
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

template <class F>
std::string to_string(const MultiPoly<F>& p)
{
    return p.to_string();
}

template <class F>
bool is_zero(const MultiPoly<F>& p)
{
    return p.is_zero();
}

// Exact quotient p / q, or nullopt when q does not divide p.
template <class F>
std::optional<MultiPoly<F>> divide_exact(MultiPoly<F> p, const MultiPoly<F>& q)
{
    if (q.is_zero())
        throw std::invalid_argument("division by zero polynomial");
    MultiPoly<F> quot(q.variables());
    if (p.is_zero())
        return quot;
    const Exponent& lq = q.leading_exponent();
    F lcinv = F(1) / q.leading_coefficient();
    while (!p.is_zero()) {
        const Exponent lp = p.leading_exponent();
        Exponent d(lp.size());
        for (std::size_t i = 0; i < lp.size(); ++i) {
            d[i] = lp[i] - lq[i];
            if (d[i] < 0)
                return std::nullopt;
        }
        F c = F(p.leading_coefficient() * lcinv);
        MultiPoly<F> t = MultiPoly<F>::monomial(q.variables(), d, c);
        quot += t;
        p -= t * q;
    }
    return quot;
}

template <class F>
MultiPoly<F> divide_or_throw(const MultiPoly<F>& p, const MultiPoly<F>& q)
{
    auto r = divide_exact(p, q);
    if (!r)
        throw std::runtime_error("inexact polynomial division");
    return *r;
}

// Coefficients of p as a polynomial in variable var (var kept in the ring with exponent 0).
template <class F>
std::vector<MultiPoly<F>> coefficients_in(const MultiPoly<F>& p, std::size_t var)
{
    int d = p.degree_in(var);
    std::vector<MultiPoly<F>> out(std::max(d + 1, 0), MultiPoly<F>(p.variables()));
    for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        f[var] = 0;
        out[e[var]].add_term(f, c);
    }
    return out;
}

inline MultiPoly<GaussianRational> to_gaussian(const MultiPoly<Rational>& p)
{
    return p.map_coefficients<GaussianRational>([](const Rational& c) { return GaussianRational(c); });
}

inline MultiPoly<GaussianRational> conjugate(const MultiPoly<GaussianRational>& p)
{
    return p.map_coefficients<GaussianRational>([](const GaussianRational& c) { return c.conjugate(); });
}

// Scale to integer coefficients with unit content and positive leading term.
MultiPoly<Rational> primitive_part(const MultiPoly<Rational>& p);

double evaluate_double(const MultiPoly<Rational>& p, const std::vector<double>& point);

// Sum of |c * monomial| at the point, the scale used for relative residuals.
double evaluate_abs_scale(const MultiPoly<Rational>& p, const std::vector<double>& point);

MultiPoly<Rational> parse_polynomial(const std::string& text, const std::vector<std::string>& vars);

// All exponents of total degree d in n variables, in descending grlex order.
std::vector<Exponent> monomials_of_degree(std::size_t n, int d);

} // namespace celestial
