#include <doctest.h>

#include "limtower/poly.hpp"
#include "limtower/rng.hpp"

using namespace limtower;

namespace {
Poly p(std::initializer_list<long> coeffs)
{
    Poly r;
    for (long c : coeffs)
        r.emplace_back(c);
    return r;
}
} // namespace

TEST_CASE("characteristic polynomial of small matrices")
{
    // diag(1,2): (x-1)(x-2) = x^2 - 3x + 2
    CHECK(char_poly(IntMatrix::from_rows({{1, 0}, {0, 2}})) == p({2, -3, 1}));
    // companion of x^2 - 3x + 1
    CHECK(char_poly(IntMatrix::from_rows({{0, -1}, {1, 3}})) == p({1, -3, 1}));
    // nilpotent
    CHECK(char_poly(IntMatrix::from_rows({{0, 1}, {0, 0}})) == p({0, 0, 1}));
    CHECK(char_poly(IntMatrix(0, 0)) == p({1}));
}

TEST_CASE("char poly matches the determinant and trace")
{
    Rng rng(5);
    for (int it = 0; it < 100; ++it) {
        int n = static_cast<int>(rng.range(1, 4));
        IntMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a.at(i, j) = rng.range(-4, 4);
        Poly c = char_poly(a);
        // constant term = (-1)^n det, next-to-leading = -trace
        Int det = bareiss_det(a);
        CHECK(c[0] == (n % 2 == 0 ? det : -det));
        Int tr = 0;
        for (int i = 0; i < n; ++i)
            tr += a.at(i, i);
        CHECK(c[n - 1] == -tr);
        // Cayley-Hamilton
        CHECK(poly_apply(c, a).is_zero());
    }
}

TEST_CASE("monic factorization finds linear and quadratic factors")
{
    // (x-2)(x^2-3x+1)
    Poly f = poly_mul(p({-2, 1}), p({1, -3, 1}));
    auto factors = factor_monic(f);
    REQUIRE(factors.size() == 2);
    bool saw_linear = false, saw_quad = false;
    for (const auto& [g, mult] : factors) {
        CHECK(mult == 1);
        if (g == p({-2, 1}))
            saw_linear = true;
        if (g == p({1, -3, 1}))
            saw_quad = true;
    }
    CHECK(saw_linear);
    CHECK(saw_quad);
}

TEST_CASE("factorization with two irreducible quadratics and multiplicity")
{
    // (x^2-3x+1)^2 (x^2-x-4): needs genuine interpolation splitting
    Poly f = poly_mul(poly_mul(p({1, -3, 1}), p({1, -3, 1})), p({-4, -1, 1}));
    auto factors = factor_monic(f);
    REQUIRE(factors.size() == 2);
    for (const auto& [g, mult] : factors) {
        if (g == p({1, -3, 1}))
            CHECK(mult == 2);
        else {
            CHECK(g == p({-4, -1, 1}));
            CHECK(mult == 1);
        }
    }
}

TEST_CASE("unit part keeps exactly the unit-constant-term spectrum")
{
    CHECK(unit_part(p({-2, 1})) == p({1}));          // x - 2: nothing
    CHECK(unit_part(p({-1, 1})) == p({-1, 1}));      // x - 1: kept
    CHECK(unit_part(p({1, -3, 1})) == p({1, -3, 1}));// golden-ratio unit: kept
    // x(x-1)(x-2): only x-1 survives
    Poly f = poly_mul(poly_mul(p({0, 1}), p({-1, 1})), p({-2, 1}));
    CHECK(unit_part(f) == p({-1, 1}));
    // irreducible x^2 + x + 1 (roots of unity)
    CHECK(unit_part(p({1, 1, 1})) == p({1, 1, 1}));
}
