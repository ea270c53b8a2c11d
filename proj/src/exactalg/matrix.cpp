#include "celestial/exactalg/matrix.hpp"

#include <algorithm>
#include <optional>

namespace celestial {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows integer_rows(const ExactMatrix<Rational>& m)
{
    IntRows a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& v = m.at(i, j);
            a[i][j] = v.get_num() * (l / v.get_den());
        }
    }
    return a;
}

// fraction-free row echelon form; returns pivot columns
std::vector<std::size_t> bareiss_echelon(IntRows& a, std::size_t cols)
{
    std::vector<std::size_t> piv;
    const std::size_t rows = a.size();
    Integer prev = 1, t;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(a[p][c]) == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                t = a[r][c] * a[i][j];
                t -= a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        piv.push_back(c);
        ++r;
    }
    return piv;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return (std::uint64_t)((unsigned __int128)a * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

std::vector<Rational> primitive_vector(const std::vector<Rational>& v)
{
    Integer l = 1, g = 0;
    for (const auto& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (const auto& x : v) {
        Integer n = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    if (g == 0)
        return v;
    Rational s(l, g);
    s.canonicalize();
    for (const auto& x : v)
        if (sgn(x) != 0) {
            if (sgn(x) < 0)
                s = -s;
            break;
        }
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.emplace_back(x * s);
    return out;
}

std::vector<std::vector<Rational>> nullspace(const ExactMatrix<Rational>& m)
{
    const std::size_t cols = m.cols();
    IntRows a = integer_rows(m);
    std::vector<std::size_t> piv = bareiss_echelon(a, cols);
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv)
        is_piv[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f])
            continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t k = piv.size(); k-- > 0;) {
            std::size_t pc = piv[k];
            Rational s = 0;
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (sgn(x[j]) != 0 && sgn(a[k][j]) != 0)
                    s += Rational(a[k][j]) * x[j];
            x[pc] = -s / Rational(a[k][pc]);
        }
        basis.push_back(primitive_vector(x));
    }
    return basis;
}

std::size_t rank(const ExactMatrix<Rational>& m)
{
    IntRows a = integer_rows(m);
    return bareiss_echelon(a, m.cols()).size();
}

std::vector<std::vector<GaussianRational>> nullspace(const ExactMatrix<GaussianRational>& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<GaussianRational>> a(rows);
    for (std::size_t i = 0; i < rows; ++i)
        a[i] = m.row(i);
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && is_zero(a[p][c]))
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        GaussianRational inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j)
            a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][c]))
                continue;
            GaussianRational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                a[i][j] -= f * a[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv)
        is_piv[c] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f])
            continue;
        std::vector<GaussianRational> x(cols);
        x[f] = 1;
        for (std::size_t k = 0; k < piv.size(); ++k)
            x[piv[k]] = -a[k][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

struct ModularEchelon {
    std::vector<std::vector<std::uint64_t>> rows; // fully reduced on pivot columns, pivot entry 1
    std::vector<std::size_t> pivcol, chosen;
};

ModularEchelon modular_echelon(const ExactMatrix<Rational>& m, std::uint64_t p)
{
    const std::size_t cols = m.cols();
    ModularEchelon out;
    auto& basis = out.rows;
    auto& pivcol = out.pivcol;
    std::vector<std::uint64_t> row(cols);
    for (std::size_t i = 0; i < m.rows() && out.chosen.size() < cols; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& v = m.at(i, j);
            std::uint64_t num = mpz_fdiv_ui(v.get_num_mpz_t(), p);
            std::uint64_t den = mpz_fdiv_ui(v.get_den_mpz_t(), p);
            if (den == 0)
                throw std::domain_error("denominator vanishes modulo the prime");
            row[j] = mulmod(num, powmod(den, p - 2, p), p);
        }
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::uint64_t f = row[pivcol[k]];
            if (!f)
                continue;
            const auto& b = basis[k];
            for (std::size_t j = pivcol[k]; j < cols; ++j)
                if (b[j])
                    row[j] = (row[j] + p - mulmod(f, b[j], p)) % p;
        }
        std::size_t c = 0;
        while (c < cols && row[c] == 0)
            ++c;
        if (c == cols)
            continue;
        std::uint64_t inv = powmod(row[c], p - 2, p);
        for (std::size_t j = c; j < cols; ++j)
            row[j] = mulmod(row[j], inv, p);
        // keep basis fully reduced on pivot columns so later rows reduce in one pass
        for (std::size_t k = 0; k < basis.size(); ++k) {
            std::uint64_t f = basis[k][c];
            if (!f)
                continue;
            for (std::size_t j = c; j < cols; ++j)
                if (row[j])
                    basis[k][j] = (basis[k][j] + p - mulmod(f, row[j], p)) % p;
        }
        basis.push_back(row);
        pivcol.push_back(c);
        out.chosen.push_back(i);
    }
    return out;
}

// n/d with |n|, d <= sqrt(M / 2) and n = a d mod M
std::optional<Rational> rational_reconstruction(const Integer& a, const Integer& M)
{
    Integer bound;
    mpz_sqrt(bound.get_mpz_t(), Integer(M / 2).get_mpz_t());
    Integer r0 = M, r1 = a, t0 = 0, t1 = 1;
    while (r1 > bound) {
        Integer q = r0 / r1;
        Integer r2 = r0 - q * r1, t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound)
        return std::nullopt;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1)
        return std::nullopt;
    Rational r(r1, t1);
    r.canonicalize();
    return r;
}

} // namespace

std::vector<std::size_t> modular_row_basis(const ExactMatrix<Rational>& m, std::uint64_t p)
{
    return modular_echelon(m, p).chosen;
}

std::vector<std::vector<std::uint64_t>> modular_nullspace(const ExactMatrix<Rational>& m, std::uint64_t p)
{
    auto e = modular_echelon(m, p);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : e.pivcol)
        is_piv[c] = true;
    std::vector<std::vector<std::uint64_t>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f])
            continue;
        std::vector<std::uint64_t> x(m.cols(), 0);
        x[f] = 1;
        for (std::size_t k = 0; k < e.pivcol.size(); ++k)
            x[e.pivcol[k]] = e.rows[k][f] ? p - e.rows[k][f] : 0;
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> multimodular_kernel_vector(const ExactMatrix<Rational>& m, int max_primes)
{
    Integer modulus = 1;
    std::vector<Integer> residues;
    std::optional<std::size_t> free_col;
    std::vector<Rational> last;
    Integer prime = Integer(1) << 62;
    for (int tried = 0; tried < max_primes; ++tried) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        const std::uint64_t p = prime.get_ui();
        std::vector<std::vector<std::uint64_t>> ker;
        try {
            ker = modular_nullspace(m, p);
        } catch (const std::domain_error&) {
            continue;
        }
        if (ker.empty())
            return std::nullopt; // full rank modulo p, so full rank over Q
        if (ker.size() != 1)
            continue; // unlucky prime or a larger kernel
        // the normal form has its 1 on the largest nonzero column; good primes agree on it
        std::size_t f = 0;
        for (std::size_t j = 0; j < ker[0].size(); ++j)
            if (ker[0][j])
                f = j;
        if (!free_col)
            free_col = f;
        if (*free_col != f)
            return std::nullopt;
        if (residues.empty()) {
            for (auto x : ker[0])
                residues.emplace_back((unsigned long)x);
            modulus = prime;
        } else {
            // CRT: r + modulus * ((x - r) * modulus^-1 mod p)
            Integer inv;
            mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), prime.get_mpz_t());
            for (std::size_t j = 0; j < residues.size(); ++j) {
                Integer x((unsigned long)ker[0][j]);
                Integer h = ((x - residues[j]) * inv) % prime;
                if (h < 0)
                    h += prime;
                residues[j] += modulus * h;
            }
            modulus *= prime;
        }
        std::vector<Rational> v;
        v.reserve(residues.size());
        bool ok = true;
        for (const auto& r : residues) {
            auto q = rational_reconstruction(r, modulus);
            if (!q) {
                ok = false;
                break;
            }
            v.push_back(*q);
        }
        if (!ok)
            continue;
        if (v == last) {
            bool zero = true;
            for (const auto& x : m.apply(v))
                if (sgn(x) != 0) {
                    zero = false;
                    break;
                }
            if (zero)
                return v;
        }
        last = std::move(v);
    }
    return std::nullopt;
}

Rational determinant(const ExactMatrix<Rational>& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    std::vector<std::vector<Rational>> a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        a[i] = m.row(i);
    Rational one(1);
    return bareiss_determinant(
        std::move(a), one, [](const Rational& x) { return sgn(x) == 0; },
        [](const Rational& x, const Rational& y) { return Rational(x / y); });
}

} // namespace celestial
