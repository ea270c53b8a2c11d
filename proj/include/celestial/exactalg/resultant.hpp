#pragma once

#include "celestial/exactalg/matrix.hpp"
#include "celestial/exactalg/multipoly.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace celestial {

namespace detail {

template <class F>
MultiPoly<F> sylvester_minor_det(std::vector<std::vector<MultiPoly<F>>> rows, const std::vector<std::string>& vars)
{
    MultiPoly<F> one = MultiPoly<F>::constant(vars, F(1));
    return bareiss_determinant(
        std::move(rows), one, [](const MultiPoly<F>& x) { return x.is_zero(); },
        [](const MultiPoly<F>& a, const MultiPoly<F>& b) { return divide_or_throw(a, b); });
}

} // namespace detail

// j-th subresultant of p and q with respect to var (j = 0 gives the resultant).
template <class F>
MultiPoly<F> subresultant(const MultiPoly<F>& p, const MultiPoly<F>& q, std::size_t var, int j)
{
    const auto& vars = p.variables();
    if (!q.is_zero() && q.variables() != vars)
        throw std::invalid_argument("variable-arity mismatch");
    int m = p.degree_in(var), n = q.degree_in(var);
    if (m <= 0 && n <= 0)
        throw std::invalid_argument("both inputs are constant in the elimination variable");
    if (m < 0 || n < 0)
        return MultiPoly<F>(vars);
    if (j < 0 || j > std::min(m, n))
        throw std::invalid_argument("subresultant index out of range");
    auto pc = coefficients_in(p, var);
    auto qc = coefficients_in(q, var);
    const int nrows = m + n - 2 * j;
    const int width = m + n - j; // columns index x^(width-1) .. x^0
    std::vector<std::vector<MultiPoly<F>>> full(nrows, std::vector<MultiPoly<F>>(width, MultiPoly<F>(vars)));
    int r = 0;
    for (int i = 0; i < n - j; ++i, ++r) {
        int shift = n - j - 1 - i;
        for (int k = 0; k <= m; ++k)
            full[r][width - 1 - (k + shift)] = pc[k];
    }
    for (int i = 0; i < m - j; ++i, ++r) {
        int shift = m - j - 1 - i;
        for (int k = 0; k <= n; ++k)
            full[r][width - 1 - (k + shift)] = qc[k];
    }
    MultiPoly<F> out(vars);
    if (nrows == 0)
        return MultiPoly<F>::constant(vars, F(1));
    for (int k = 0; k <= j; ++k) {
        std::vector<std::vector<MultiPoly<F>>> sq(nrows, std::vector<MultiPoly<F>>(nrows, MultiPoly<F>(vars)));
        for (int a = 0; a < nrows; ++a) {
            for (int b = 0; b < nrows - 1; ++b)
                sq[a][b] = full[a][b];
            sq[a][nrows - 1] = full[a][width - 1 - k];
        }
        MultiPoly<F> d = detail::sylvester_minor_det(std::move(sq), vars);
        Exponent e(vars.size(), 0);
        e[var] = k;
        out += d * MultiPoly<F>::monomial(vars, e, F(1));
    }
    return out;
}

template <class F>
MultiPoly<F> resultant(const MultiPoly<F>& p, const MultiPoly<F>& q, std::size_t var)
{
    return subresultant(p, q, var, 0);
}

} // namespace celestial
