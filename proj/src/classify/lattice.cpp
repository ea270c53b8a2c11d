#include "celestial/classify/lattice.hpp"

#include <stdexcept>

namespace celestial {

namespace {

using Mat = std::vector<std::vector<int>>;

DivisorClass add(const DivisorClass& a, const DivisorClass& b, int k = 1)
{
    DivisorClass r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += k * b[i];
    return r;
}

DivisorClass scaled(const DivisorClass& a, int k)
{
    DivisorClass r = a;
    for (auto& v : r)
        v *= k;
    return r;
}

void check_arity(const PicardLattice& l, const DivisorClass& c)
{
    if (c.size() != l.basis.size())
        throw std::invalid_argument("class has " + std::to_string(c.size()) + " coordinates, lattice " +
                                    to_string(l.type) + " has rank " + std::to_string(l.basis.size()));
}

PicardLattice hf_lattice(LatticeType t, bool swap)
{
    PicardLattice l;
    l.type = t;
    l.basis = {"H", "F"};
    l.gram = {{0, 1}, {1, 0}};
    l.canonical = {-2, -2};
    l.sigma = swap ? std::vector<DivisorClass>{{0, 1}, {1, 0}} : std::vector<DivisorClass>{{1, 0}, {0, 1}};
    return l;
}

} // namespace

std::string to_string(LatticeType t)
{
    switch (t) {
    case LatticeType::S2:
        return "S2";
    case LatticeType::S4:
        return "S4";
    case LatticeType::S8:
        return "S8";
    case LatticeType::E4:
        return "E4";
    default:
        return "U1";
    }
}

LatticeType parse_lattice_type(const std::string& s)
{
    for (auto t : all_lattice_types())
        if (to_string(t) == s)
            return t;
    throw std::invalid_argument("unknown lattice type '" + s + "'");
}

const std::vector<LatticeType>& all_lattice_types()
{
    static const std::vector<LatticeType> v{LatticeType::S2, LatticeType::S4, LatticeType::S8, LatticeType::E4,
                                            LatticeType::U1};
    return v;
}

PicardLattice picard_lattice(LatticeType t)
{
    switch (t) {
    case LatticeType::S2: {
        auto l = hf_lattice(t, true);
        l.polarization = {"H+F", {1, 1}};
        return l;
    }
    case LatticeType::S8: {
        auto l = hf_lattice(t, false);
        l.h0_table = {{{"F", {0, 1}}, 2}, {{"H", {1, 0}}, 2}};
        l.polarization = {"-K", {2, 2}};
        return l;
    }
    case LatticeType::E4: {
        auto l = hf_lattice(t, false);
        l.h0_table = {{{"F", {0, 1}}, 2}, {{"H", {1, 0}}, 2}};
        l.polarization = {"H+2F", {1, 2}};
        return l;
    }
    case LatticeType::U1: {
        PicardLattice l;
        l.type = t;
        l.basis = {"H"};
        l.gram = {{1}};
        l.canonical = {-3};
        l.sigma = {{1}};
        l.polarization = {"H", {1}};
        return l;
    }
    case LatticeType::S4: {
        PicardLattice l;
        l.type = t;
        l.basis = {"H", "Q1", "Q2", "Q3", "Q4", "Q5"};
        l.gram.assign(6, std::vector<int>(6, 0));
        l.gram[0][0] = 1;
        for (int i = 1; i < 6; ++i)
            l.gram[i][i] = -1;
        l.canonical = {-3, 1, 1, 1, 1, 1};
        l.sigma = {{2, -1, -1, -1, 0, 0}, {1, 0, -1, -1, 0, 0}, {1, -1, 0, -1, 0, 0},
                   {1, -1, -1, 0, 0, 0},  {0, 0, 0, 0, 0, 1},   {0, 0, 0, 0, 1, 0}};
        l.h0_table = {{{"H-Q1", {1, -1, 0, 0, 0, 0}}, 2},
                      {{"H-Q2", {1, 0, -1, 0, 0, 0}}, 2},
                      {{"H-Q3", {1, 0, 0, -1, 0, 0}}, 2},
                      {{"2H-Q1-Q2-Q4-Q5", {2, -1, -1, 0, -1, -1}}, 2}};
        l.polarization = {"-K", {3, -1, -1, -1, -1, -1}};
        l.lines = {{"L1", {0, 0, 0, 1, 0, 0}},
                   {"L2", {1, -1, -1, 0, 0, 0}},
                   {"L3", {0, 0, 0, 0, 1, 0}},
                   {"L4", {0, 0, 0, 0, 0, 1}}};
        l.singular = {{"P1", {0, 1, 0, 0, -1, 0}},
                      {"P2", {1, 0, -1, -1, 0, -1}},
                      {"P3", {1, -1, 0, -1, -1, 0}},
                      {"P4", {0, 0, 1, 0, 0, -1}}};
        for (const auto& [c, h] : l.h0_table)
            l.families.push_back(c);
        return l;
    }
    }
    throw std::invalid_argument("unknown lattice type");
}

int intersection_product(const PicardLattice& l, const DivisorClass& a, const DivisorClass& b)
{
    check_arity(l, a);
    check_arity(l, b);
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            s += a[i] * l.gram[i][j] * b[j];
    return s;
}

int arithmetic_genus(const PicardLattice& l, const DivisorClass& c)
{
    int twice = intersection_product(l, c, c) + intersection_product(l, c, l.canonical);
    if (twice % 2 != 0)
        throw std::logic_error("odd C^2 + CK on " + to_string(l.type));
    return twice / 2 + 1;
}

DivisorClass apply_sigma(const PicardLattice& l, const DivisorClass& c)
{
    check_arity(l, c);
    DivisorClass r(c.size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        r = add(r, l.sigma[i], c[i]);
    return r;
}

std::vector<LatticeCheck> lattice_consistency(LatticeType t)
{
    const PicardLattice l = picard_lattice(t);
    const std::size_t n = l.basis.size();
    std::vector<LatticeCheck> out;
    auto push = [&](const std::string& name, bool ok) { out.push_back({to_string(t) + ": " + name, ok}); };
    auto e = [&](std::size_t i) {
        DivisorClass c(n, 0);
        c[i] = 1;
        return c;
    };

    bool sym = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sym = sym && l.gram[i][j] == l.gram[j][i];
    push("gram symmetric", sym);

    bool orth = true, invol = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            orth = orth && intersection_product(l, l.sigma[i], l.sigma[j]) == l.gram[i][j];
        invol = invol && apply_sigma(l, l.sigma[i]) == e(i);
    }
    push("sigma preserves the intersection form", orth);
    push("sigma fixes K", apply_sigma(l, l.canonical) == l.canonical);
    push("sigma is an involution", invol);

    bool h0_ok = true;
    for (const auto& [c, h] : l.h0_table) {
        bool found = false;
        for (const auto& [d, k] : l.h0_table)
            found = found || (d.c == apply_sigma(l, c.c) && k == h);
        h0_ok = h0_ok && found;
    }
    push("h0 table closed under sigma", h0_ok);

    const int k2 = intersection_product(l, l.canonical, l.canonical);
    switch (t) {
    case LatticeType::S2:
        push("H^2 = F^2 = 0, HF = 1", l.gram == Mat{{0, 1}, {1, 0}});
        push("sigma swaps H and F", apply_sigma(l, e(0)) == e(1));
        push("K^2 = 8", k2 == 8);
        break;
    case LatticeType::S8:
    case LatticeType::E4: {
        push("HF = 1", intersection_product(l, e(0), e(1)) == 1);
        push("K^2 = 8", k2 == 8);
        push("K = -2(H+F)", l.canonical == DivisorClass{-2, -2});
        // both tables list the same rank, form, K and sigma; the types are told
        // apart by the polarization (-K for S8, H+2F for E4)
        const PicardLattice o = picard_lattice(t == LatticeType::S8 ? LatticeType::E4 : LatticeType::S8);
        push("same structure as " + to_string(o.type) + " apart from polarization",
             o.gram == l.gram && o.canonical == l.canonical && o.sigma == l.sigma && o.h0_table.size() == l.h0_table.size() &&
                 o.polarization.c != l.polarization.c);
        break;
    }
    case LatticeType::U1:
        push("H^2 = 1", l.gram == Mat{{1}});
        push("K = -3H", l.canonical == DivisorClass{-3});
        push("K^2 = 9", k2 == 9);
        break;
    case LatticeType::S4: {
        bool rel = l.gram[0][0] == 1;
        for (std::size_t i = 1; i < n; ++i) {
            rel = rel && l.gram[0][i] == 0;
            for (std::size_t j = 1; j < n; ++j)
                rel = rel && l.gram[i][j] == (i == j ? -1 : 0);
        }
        push("H^2 = 1, QiQj = -delta_ij, HQi = 0", rel);
        push("-K = 3H - Q1 - ... - Q5", scaled(l.canonical, -1) == DivisorClass{3, -1, -1, -1, -1, -1});
        push("K^2 = 4", k2 == 4);
        DivisorClass sum(n, 0);
        for (const auto& c : l.lines)
            sum = add(sum, c.c);
        for (const auto& c : l.singular)
            sum = add(sum, c.c);
        push("-K = L1 + L2 + L3 + L4 + isolated singularity classes", sum == scaled(l.canonical, -1));
        push("sigma(L1) = L2, sigma(L3) = L4",
             apply_sigma(l, l.lines[0].c) == l.lines[1].c && apply_sigma(l, l.lines[2].c) == l.lines[3].c);
        bool minus1 = true;
        for (const auto& c : l.lines)
            minus1 = minus1 && intersection_product(l, c.c, c.c) == -1 && intersection_product(l, c.c, l.canonical) == -1;
        push("line classes are (-1)-curves", minus1);
        bool minus2 = true;
        for (const auto& c : l.singular)
            minus2 = minus2 && intersection_product(l, c.c, c.c) == -2 && intersection_product(l, c.c, l.canonical) == 0;
        push("isolated singularity classes are (-2)-curves", minus2);
        bool sing_closed = true;
        for (const auto& c : l.singular) {
            bool found = false;
            for (const auto& d : l.singular)
                found = found || d.c == apply_sigma(l, c.c);
            sing_closed = sing_closed && found;
        }
        push("sigma permutes the isolated singularity classes", sing_closed);
        // L meets L' directly or through a common isolated singularity
        auto meets = [&](const DivisorClass& a, const DivisorClass& b) {
            if (intersection_product(l, a, b) > 0)
                return true;
            for (const auto& p : l.singular)
                if (intersection_product(l, a, p.c) > 0 && intersection_product(l, b, p.c) > 0)
                    return true;
            return false;
        };
        bool conf = true;
        for (int i : {0, 1})
            for (int j : {2, 3})
                conf = conf && meets(l.lines[i].c, l.lines[j].c);
        push("left lines meet right lines", conf);
        bool fam = true;
        for (const auto& c : l.families)
            fam = fam && intersection_product(l, c.c, c.c) == 0 && intersection_product(l, c.c, l.canonical) == -2;
        push("circle families are conic classes", fam);
        break;
    }
    }
    return out;
}

} // namespace celestial
