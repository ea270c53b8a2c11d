#include "celestial/exactalg/upoly.hpp"

namespace celestial {

UPoly<GaussianRational> to_gaussian(const UPoly<Rational>& p)
{
    std::vector<GaussianRational> c;
    for (const auto& v : p.coefficients())
        c.emplace_back(v);
    return UPoly<GaussianRational>(std::move(c));
}

std::pair<UPoly<Rational>, UPoly<Rational>> split_real_imag(const UPoly<GaussianRational>& p)
{
    std::vector<Rational> re, im;
    for (const auto& v : p.coefficients()) {
        re.push_back(v.re);
        im.push_back(v.im);
    }
    return {UPoly<Rational>(std::move(re)), UPoly<Rational>(std::move(im))};
}

namespace {

std::vector<UPoly<Rational>> sturm_sequence(const UPoly<Rational>& p)
{
    std::vector<UPoly<Rational>> seq{p, p.derivative()};
    while (!seq.back().is_zero()) {
        UPoly<Rational> r = -(seq[seq.size() - 2] % seq.back());
        if (r.is_zero())
            break;
        seq.push_back(std::move(r));
    }
    if (seq.back().is_zero())
        seq.pop_back();
    return seq;
}

int sign_changes(const std::vector<int>& signs)
{
    int last = 0, changes = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

// sign variations at x, or at -inf/+inf when x is nullopt (dir = -1 / +1)
int variations(const std::vector<UPoly<Rational>>& seq, const std::optional<Rational>& x, int dir)
{
    std::vector<int> signs;
    for (const auto& q : seq) {
        if (x) {
            signs.push_back(sgn(q.eval(*x)));
        } else {
            int s = sgn(q.lead());
            if (dir < 0 && q.degree() % 2)
                s = -s;
            signs.push_back(s);
        }
    }
    return sign_changes(signs);
}

} // namespace

int sturm_count(const UPoly<Rational>& p, const std::optional<Rational>& lo, const std::optional<Rational>& hi)
{
    if (p.is_zero())
        throw std::invalid_argument("sturm_count of the zero polynomial");
    if (!is_squarefree(p))
        throw std::invalid_argument("sturm_count needs a squarefree input; take the squarefree part first");
    if (lo && hi && *lo >= *hi)
        return 0;
    if (p.degree() == 0)
        return 0;
    auto seq = sturm_sequence(p);
    return variations(seq, lo, -1) - variations(seq, hi, +1);
}

int real_root_count(const UPoly<Rational>& p) { return sturm_count(p, std::nullopt, std::nullopt); }

} // namespace celestial
