#pragma once

#include "celestial/errors.hpp"
#include "celestial/exactalg/upoly.hpp"
#include "celestial/moebius.hpp"

#include <array>
#include <map>
#include <vector>

namespace celestial {

// all partial derivatives of order k, keyed by the derivative multi-index
template <class F>
std::map<Exponent, MultiPoly<F>> partials_of_order(const MultiPoly<F>& p, int k)
{
    std::map<Exponent, MultiPoly<F>> cur;
    cur.emplace(Exponent(p.nvars(), 0), p);
    for (int j = 0; j < k; ++j) {
        std::map<Exponent, MultiPoly<F>> next;
        for (const auto& [a, q] : cur)
            for (std::size_t v = 0; v < p.nvars(); ++v) {
                Exponent b = a;
                b[v] += 1;
                if (!next.count(b))
                    next.emplace(b, q.derivative(v));
            }
        cur = std::move(next);
    }
    return cur;
}

template <class F>
MultiPoly<F> lift_coefficients(const Poly& p);

template <>
inline MultiPoly<Rational> lift_coefficients<Rational>(const Poly& p)
{
    return p;
}

template <>
inline MultiPoly<GaussianRational> lift_coefficients<GaussianRational>(const Poly& p)
{
    return to_gaussian(p);
}

// Largest k such that every partial of order < k vanishes along the curve.
template <class F>
int multiplicity_along_curve(const Poly& surface, const std::array<MultiPoly<F>, 4>& curve, int max_order = 8)
{
    auto p = lift_coefficients<F>(surface);
    std::vector<MultiPoly<F>> images(curve.begin(), curve.end());
    MultiPoly<F> r = p.compose(images);
    if (!r.is_zero())
        throw PreconditionError("curve not on surface: residual " + r.to_string());
    for (int k = 1; k <= max_order; ++k) {
        for (const auto& [a, q] : partials_of_order(p, k))
            if (!q.compose(images).is_zero())
                return k;
    }
    return max_order + 1;
}

// gcd of the coefficients of h(u, w) viewed as a polynomial in w, on the chart of u only
template <class F>
UPoly<F> content_in_other(const MultiPoly<F>& h, std::size_t u, std::size_t w)
{
    std::map<int, std::vector<F>> byw;
    int du = std::max(h.degree_in(u), 0);
    for (const auto& [e, c] : h.terms()) {
        auto& v = byw[e[w]];
        if (v.empty())
            v.assign(du + 1, F(0));
        v[e[u]] = c;
    }
    UPoly<F> g;
    for (auto& [k, v] : byw)
        g = gcd(g, UPoly<F>(v));
    return g;
}

// same, reduced modulo f (gcd with f)
template <class F>
UPoly<F> content_gcd(const MultiPoly<F>& h, std::size_t u, std::size_t w, const UPoly<F>& f)
{
    std::map<int, std::vector<F>> byw;
    int du = std::max(h.degree_in(u), 0);
    for (const auto& [e, c] : h.terms()) {
        auto& v = byw[e[w]];
        if (v.empty())
            v.assign(du + 1, F(0));
        v[e[u]] = c;
    }
    UPoly<F> g = f;
    for (auto& [k, v] : byw) {
        g = gcd(g, UPoly<F>(v));
        if (g.degree() == 0)
            break;
    }
    return g;
}

template <class F>
struct FamilyPart {
    UPoly<F> factor;
    int multiplicity;
};

// Split the squarefree factor f(u) by the multiplicity of the surface along the
// lines {map(u*, w)} for roots u* of f. map lives in variables (u, w).
template <class F>
std::vector<FamilyPart<F>> family_multiplicities(const Poly& surface, const std::array<MultiPoly<F>, 4>& map,
                                                 std::size_t u, std::size_t w, const UPoly<F>& f, int max_order = 6)
{
    auto p = lift_coefficients<F>(surface);
    std::vector<MultiPoly<F>> images(map.begin(), map.end());
    if (content_gcd(p.compose(images), u, w, f).degree() != f.degree())
        throw PreconditionError("line family not contained in the surface");
    std::vector<FamilyPart<F>> out;
    UPoly<F> cur = f.monic();
    for (int k = 1; k <= max_order && cur.degree() > 0; ++k) {
        UPoly<F> still = cur;
        for (const auto& [a, q] : partials_of_order(p, k)) {
            still = content_gcd(q.compose(images), u, w, still);
            if (still.degree() == 0)
                break;
        }
        UPoly<F> exact = cur / still;
        if (exact.degree() > 0)
            out.push_back({exact.monic(), k});
        cur = still;
    }
    if (cur.degree() > 0)
        out.push_back({cur, max_order + 1});
    return out;
}

} // namespace celestial
