#include "limtower/poly.hpp"

#include <algorithm>
#include <optional>

namespace limtower {

Poly poly_trim(Poly p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

bool poly_divides(const Poly& d, const Poly& p, Poly* quotient)
{
    Poly dd = poly_trim(d), pp = poly_trim(p);
    require(!dd.empty(), "DimensionError", "division by the zero polynomial");
    if (pp.empty()) {
        if (quotient)
            quotient->clear();
        return true;
    }
    if (pp.size() < dd.size())
        return false;
    Poly q(pp.size() - dd.size() + 1, Int(0));
    for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
        Int lead = pp[k + dd.size() - 1];
        if (lead % dd.back() != 0)
            return false;
        Int c = lead / dd.back();
        q[k] = c;
        if (c != 0)
            for (std::size_t i = 0; i < dd.size(); ++i)
                pp[k + i] -= c * dd[i];
    }
    for (const Int& c : pp)
        if (c != 0)
            return false;
    if (quotient)
        *quotient = poly_trim(q);
    return true;
}

Int poly_eval(const Poly& p, const Int& x)
{
    Int r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        r = r * x + *it;
    return r;
}

bool poly_is_monic(const Poly& p) { return !p.empty() && p.back() == 1; }

Poly char_poly(const IntMatrix& a)
{
    require(a.is_square(), "DimensionError", "characteristic polynomial of non-square matrix");
    const int n = a.rows();
    Poly c(n + 1, Int(0));
    c[n] = 1;
    IntMatrix m(n, n); // zero
    for (int k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1} * I
        IntMatrix am = a.mul(m);
        for (int i = 0; i < n; ++i)
            am.at(i, i) += c[n - k + 1];
        m = std::move(am);
        IntMatrix t = a.mul(m);
        Int tr = 0;
        for (int i = 0; i < n; ++i)
            tr += t.at(i, i);
        // exact by construction
        Int ck = -tr;
        mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = ck;
    }
    return c;
}

IntMatrix poly_apply(const Poly& p, const IntMatrix& a)
{
    require(a.is_square(), "DimensionError", "polynomial of a non-square matrix");
    const int n = a.rows();
    IntMatrix r(n, n);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        r = r.mul(a);
        for (int i = 0; i < n; ++i)
            r.at(i, i) += *it;
    }
    return r;
}

namespace {

std::vector<Int> divisors_signed(const Int& v)
{
    Int a = abs(v);
    std::vector<Int> ds;
    for (Int d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            ds.push_back(d);
            if (d * d != a)
                ds.push_back(a / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    std::vector<Int> out;
    for (const Int& d : ds) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

/* Lagrange interpolation through integer points; returns the polynomial if
 * it has integer coefficients, nullopt otherwise. Points are distinct small
 * integers, so exact rational arithmetic via a common denominator works. */
std::optional<Poly> interpolate_integer(const std::vector<long>& xs, const std::vector<Int>& ys)
{
    const int n = static_cast<int>(xs.size());
    // Newton's divided differences with exactness checks
    std::vector<Int> coef(ys.begin(), ys.end());
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i) {
            Int num = coef[i] - coef[i - 1];
            Int den = xs[i] - xs[i - level];
            if (num % den != 0)
                return std::nullopt;
            coef[i] = num / den;
        }
    Poly p{};
    for (int i = n - 1; i >= 0; --i) {
        // p = p * (x - xs[i]) + coef[i]
        Poly shifted(p.size() + 1, Int(0));
        for (std::size_t k = 0; k < p.size(); ++k) {
            shifted[k + 1] += p[k];
            shifted[k] -= Int(xs[i]) * p[k];
        }
        if (shifted.empty())
            shifted.push_back(Int(0));
        shifted[0] += coef[i];
        p = poly_trim(std::move(shifted));
    }
    return p;
}

// smallest-degree monic irreducible factor of a monic p with no integer roots
std::optional<Poly> kronecker_factor(const Poly& p)
{
    const int deg = poly_deg(p);
    for (int d = 2; d <= deg / 2; ++d) {
        std::vector<long> xs;
        for (long x = 0; static_cast<int>(xs.size()) < d + 1; x = (x > 0 ? -x : -x + 1))
            xs.push_back(x);
        std::vector<std::vector<Int>> choices;
        for (long x : xs)
            choices.push_back(divisors_signed(poly_eval(p, Int(x))));
        std::vector<std::size_t> idx(xs.size(), 0);
        for (;;) {
            std::vector<Int> ys;
            for (std::size_t i = 0; i < xs.size(); ++i)
                ys.push_back(choices[i][idx[i]]);
            if (auto cand = interpolate_integer(xs, ys)) {
                if (poly_deg(*cand) == d && poly_is_monic(*cand) && poly_divides(*cand, p))
                    return cand;
            }
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == choices[k].size()) {
                idx[k] = 0;
                ++k;
            }
            if (k == idx.size())
                break;
        }
    }
    return std::nullopt;
}

void factor_rec(Poly p, std::vector<Poly>& out)
{
    for (;;) {
        int deg = poly_deg(p);
        if (deg <= 0)
            return;
        if (deg == 1) {
            out.push_back(p);
            return;
        }
        // integer roots divide the constant term (p is monic)
        if (p[0] == 0) {
            out.push_back(Poly{Int(0), Int(1)});
            Poly q;
            poly_divides(Poly{Int(0), Int(1)}, p, &q);
            p = std::move(q);
            continue;
        }
        bool split = false;
        for (const Int& r : divisors_signed(p[0])) {
            if (poly_eval(p, r) == 0) {
                Poly lin{-r, Int(1)};
                out.push_back(lin);
                Poly q;
                poly_divides(lin, p, &q);
                p = std::move(q);
                split = true;
                break;
            }
        }
        if (split)
            continue;
        if (auto f = kronecker_factor(p)) {
            Poly q;
            poly_divides(*f, p, &q);
            factor_rec(*f, out);
            p = std::move(q);
            continue;
        }
        out.push_back(p);
        return;
    }
}

} // namespace

std::vector<PolyFactor> factor_monic(const Poly& p_in)
{
    Poly p = poly_trim(p_in);
    require(poly_is_monic(p), "DimensionError", "factorization requires a monic polynomial");
    std::vector<Poly> flat;
    factor_rec(p, flat);
    std::sort(flat.begin(), flat.end(), [](const Poly& a, const Poly& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i])
                return a[i] < b[i];
        return false;
    });
    std::vector<PolyFactor> out;
    for (const Poly& f : flat) {
        if (!out.empty() && out.back().factor == f)
            ++out.back().multiplicity;
        else
            out.push_back({f, 1});
    }
    return out;
}

Poly unit_part(const Poly& char_polynomial)
{
    Poly u{Int(1)};
    for (const auto& [f, mult] : factor_monic(char_polynomial)) {
        if (abs(f[0]) == 1)
            for (int i = 0; i < mult; ++i)
                u = poly_mul(u, f);
    }
    return u;
}

} // namespace limtower
