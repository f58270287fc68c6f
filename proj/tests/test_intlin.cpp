#include <doctest.h>

#include "limtower/abelian.hpp"
#include "limtower/rng.hpp"
#include "limtower/smith.hpp"
#include "oracles.hpp"

using namespace limtower;

namespace {

IntMatrix random_matrix(Rng& rng, int max_dim, long max_entry)
{
    int r = static_cast<int>(rng.range(0, max_dim));
    int c = static_cast<int>(rng.range(0, max_dim));
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rng.range(-max_entry, max_entry);
    return m;
}

void check_smith_invariants(const IntMatrix& a)
{
    SmithForm sf = smith_normal_form(a);
    CHECK(sf.u.mul(a).mul(sf.v) == sf.s);
    CHECK(abs(bareiss_det(sf.u)) == 1);
    CHECK(abs(bareiss_det(sf.v)) == 1);
    CHECK(sf.u.mul(sf.u_inv) == IntMatrix::identity(a.rows()));
    CHECK(sf.v.mul(sf.v_inv) == IntMatrix::identity(a.cols()));
    IntVec d = sf.invariants();
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i] > 0);
        if (i + 1 < d.size())
            CHECK(d[i + 1] % d[i] == 0);
    }
    // off-diagonal zero
    for (int i = 0; i < sf.s.rows(); ++i)
        for (int j = 0; j < sf.s.cols(); ++j)
            if (i != j)
                CHECK(sf.s.at(i, j) == 0);
    // deterministic
    SmithForm sf2 = smith_normal_form(a);
    CHECK(sf2.s == sf.s);
    CHECK(sf2.u == sf.u);
    CHECK(sf2.v == sf.v);
}

} // namespace

TEST_CASE("smith normal form of the identity")
{
    IntMatrix a = IntMatrix::identity(2);
    SmithForm sf = smith_normal_form(a);
    CHECK(sf.s == IntMatrix::identity(2));
    CHECK(sf.u == IntMatrix::identity(2));
    CHECK(sf.v == IntMatrix::identity(2));
}

TEST_CASE("smith normal form of [[2,4],[6,8]]")
{
    IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
    SmithForm sf = smith_normal_form(a);
    // d1 = gcd of the entries; d1*d2 = |det|
    Int g = oracle::entry_gcd(a);
    Int det = abs(oracle::cofactor_det(a));
    CHECK(g == 2);
    CHECK(det == 8);
    CHECK(sf.s.at(0, 0) == g);
    CHECK(sf.s.at(0, 0) * sf.s.at(1, 1) == det);
    CHECK(sf.s == IntMatrix::from_rows({{2, 0}, {0, 4}}));
    CHECK(sf.u.mul(a).mul(sf.v) == sf.s);
}

TEST_CASE("smith normal form of the zero 1x1 matrix")
{
    SmithForm sf = smith_normal_form(IntMatrix::from_rows({{0}}));
    CHECK(sf.s == IntMatrix::from_rows({{0}}));
    CHECK(sf.rank == 0);
}

TEST_CASE("smith invariants on random matrices")
{
    Rng rng(20240517);
    for (int it = 0; it < 250; ++it)
        check_smith_invariants(random_matrix(rng, 5, 6));
}

TEST_CASE("bareiss determinant agrees with cofactor expansion")
{
    Rng rng(99);
    for (int it = 0; it < 200; ++it) {
        int n = static_cast<int>(rng.range(0, 4));
        IntMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a.at(i, j) = rng.range(-5, 5);
        CHECK(bareiss_det(a) == oracle::cofactor_det(a));
    }
}

TEST_CASE("integer system: forced solution")
{
    auto x = solve_integer_system(IntMatrix::from_rows({{2}}), {Int(4)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
}

TEST_CASE("integer system: parity obstruction")
{
    CHECK_FALSE(solve_integer_system(IntMatrix::from_rows({{2}}), {Int(3)}).has_value());
}

TEST_CASE("integer system: rational-only solution is rejected")
{
    IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
    IntVec b{Int(5), Int(6)};
    CHECK_FALSE(solve_integer_system(a, b).has_value());
    CHECK_FALSE(oracle::box_has_solution(a, b, -20, 20));
}

TEST_CASE("integer system: solutions are exact and misses are honest")
{
    Rng rng(7);
    for (int it = 0; it < 300; ++it) {
        int m = static_cast<int>(rng.range(0, 3));
        int n = static_cast<int>(rng.range(0, 3));
        IntMatrix a(m, n);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                a.at(i, j) = rng.range(-4, 4);
        IntVec b(m);
        for (int i = 0; i < m; ++i)
            b[i] = rng.range(-6, 6);
        auto x = solve_integer_system(a, b);
        if (x) {
            CHECK(a.apply(*x) == b);
        } else {
            CHECK_FALSE(oracle::box_has_solution(a, b, -20, 20));
        }
    }
}

TEST_CASE("integer system: dimension mismatch")
{
    CHECK_THROWS_WITH_AS(solve_integer_system(IntMatrix::from_rows({{1, 2}}), {Int(1), Int(2)}),
                         doctest::Contains("DimensionError"), Error);
}

TEST_CASE("kernel basis spans the kernel")
{
    Rng rng(13);
    for (int it = 0; it < 100; ++it) {
        IntMatrix a = random_matrix(rng, 4, 4);
        IntMatrix k = kernel_basis(a);
        CHECK(a.mul(k).is_zero());
        CHECK(k.cols() == a.cols() - smith_normal_form(a).rank);
    }
}

TEST_CASE("row hermite form is a lattice normal form")
{
    Rng rng(41);
    for (int it = 0; it < 100; ++it) {
        IntMatrix a = random_matrix(rng, 4, 5);
        IntMatrix h = row_hnf(a);
        // unimodular row mixing does not change the form
        IntMatrix b = a;
        if (b.rows() >= 2) {
            b.add_row(0, b.rows() - 1, Int(rng.range(-3, 3)));
            b.swap_rows(0, b.rows() - 1);
        }
        CHECK(row_hnf(b) == h);
    }
}

TEST_CASE("lattice index of 2Z^2 in Z^2")
{
    IntMatrix full = IntMatrix::identity(2);
    IntMatrix sub = IntMatrix::from_rows({{2, 0}, {0, 2}});
    CHECK(lattice_index(full, sub) == 4);
    CHECK(lattice_equal(full, full));
    CHECK_FALSE(lattice_equal(full, sub));
}

TEST_CASE("cokernel of multiplication by 6 on Z")
{
    FgAbGroup z(1, {});
    GroupHom h(z, z, IntMatrix::from_rows({{6}}));
    CokernelResult c = cokernel_classify(h);
    CHECK(c.group == FgAbGroup(0, {Int(6)}));
    // projection is surjective and kills exactly the image
    CHECK(c.projection.is_surjective());
    CHECK(c.group.is_zero_element(c.projection.apply({Int(6)})));
    CHECK_FALSE(c.group.is_zero_element(c.projection.apply({Int(1)})));
}

TEST_CASE("cokernel of the zero map on Z")
{
    FgAbGroup z(1, {});
    GroupHom h(z, z, IntMatrix::from_rows({{0}}));
    CHECK(cokernel_classify(h).group == FgAbGroup(1, {}));
}

TEST_CASE("cokernel of diag(2,3) on Z^2 is Z/6")
{
    FgAbGroup z2(2, {});
    GroupHom h(z2, z2, IntMatrix::from_rows({{2, 0}, {0, 3}}));
    CokernelResult c = cokernel_classify(h);
    CHECK(c.group == FgAbGroup(0, {Int(6)}));
    // oracle: |Z^2 / <(2,0),(0,3)>| = |det diag(2,3)| and (1,1) has order 6:
    // m*(1,1) lies in the lattice iff 2 | m and 3 | m
    CHECK(abs(oracle::cofactor_det(h.matrix)) == 6);
    IntVec cls = c.projection.apply({Int(1), Int(1)});
    for (int m = 1; m < 6; ++m)
        CHECK_FALSE(c.group.is_zero_element(vec_scaled(cls, Int(m))));
    CHECK(c.group.is_zero_element(vec_scaled(cls, Int(6))));
}

TEST_CASE("cokernel is invariant under unimodular precomposition")
{
    Rng rng(4242);
    for (int it = 0; it < 100; ++it) {
        int n = static_cast<int>(rng.range(1, 3));
        FgAbGroup dom(n, {});
        FgAbGroup cod(static_cast<int>(rng.range(1, 3)), {});
        IntMatrix m(cod.dims(), n);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                m.at(i, j) = rng.range(-4, 4);
        // random unimodular change of basis on the domain
        IntMatrix u = IntMatrix::identity(n);
        for (int s = 0; s < 4; ++s) {
            int i = static_cast<int>(rng.range(0, n - 1));
            int j = static_cast<int>(rng.range(0, n - 1));
            if (i != j)
                u.add_col(i, j, Int(rng.range(-2, 2)));
        }
        GroupHom h(dom, cod, m);
        GroupHom hu(dom, cod, m.mul(u));
        CHECK(cokernel_classify(h).group == cokernel_classify(hu).group);
    }
}

TEST_CASE("group hom compatibility is enforced")
{
    FgAbGroup z2tor(0, {Int(2)});
    FgAbGroup z(1, {});
    // Z/2 -> Z sending the generator to 1 is not a homomorphism
    CHECK_THROWS_WITH_AS(GroupHom(z2tor, z, IntMatrix::from_rows({{1}})),
                         doctest::Contains("HomError"), Error);
    // but Z/2 -> Z/4 sending the generator to 2 is
    FgAbGroup z4(0, {Int(4)});
    GroupHom ok(z2tor, z4, IntMatrix::from_rows({{2}}));
    CHECK(ok.apply({Int(1)}) == IntVec{Int(2)});
}

TEST_CASE("subgroup classification: 2Z inside Z and diagonal inside Z/2 x Z/4")
{
    FgAbGroup z(1, {});
    SubgroupResult s = classify_subgroup(z, {{Int(2)}});
    CHECK(s.group == FgAbGroup(1, {}));
    CHECK(s.inclusion.apply({Int(1)}) == IntVec{Int(2)});

    FgAbGroup g(0, {Int(2), Int(4)});
    SubgroupResult d = classify_subgroup(g, {{Int(1), Int(1)}});
    CHECK(d.group == FgAbGroup(0, {Int(4)}));
    auto c = d.coords_of({Int(1), Int(1)});
    REQUIRE(c.has_value());
    CHECK_FALSE(d.coords_of({Int(1), Int(0)}).has_value());
}

TEST_CASE("element reduction happens on construction paths")
{
    FgAbGroup g(1, {Int(3)});
    IntVec v = g.reduce({Int(5), Int(-4)});
    CHECK(v == IntVec{Int(5), Int(2)});
}
