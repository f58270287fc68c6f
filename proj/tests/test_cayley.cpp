#include <doctest.h>

#include "limtower/cayley.hpp"
#include "limtower/generate.hpp"

using namespace limtower;

namespace {

FiniteGroupTower constant_tower(const CayleyTable& g, int window, TailKind tail)
{
    std::vector<CayleyTable> w(window + 1, g);
    IndexMap id;
    id.image.resize(g.order);
    for (int a = 0; a < g.order; ++a)
        id.image[a] = a;
    std::vector<IndexMap> maps(window, id);
    std::optional<IndexMap> endo;
    if (tail == TailKind::Periodic)
        endo = id;
    return FiniteGroupTower(std::move(w), std::move(maps), tail, std::move(endo));
}

} // namespace

TEST_CASE("catalog groups satisfy the group axioms")
{
    CHECK(CayleyTable::symmetric3().order == 6);
    CHECK_FALSE(CayleyTable::symmetric3().is_abelian());
    CHECK(CayleyTable::dihedral4().order == 8);
    CHECK_FALSE(CayleyTable::dihedral4().is_abelian());
    CHECK(CayleyTable::cyclic(6).is_abelian());
    CHECK(CayleyTable::from_invariant_factors({2, 4}).order == 8);
}

TEST_CASE("a non-associative table is rejected")
{
    // 2-element table with a broken entry
    CHECK_THROWS_WITH_AS(CayleyTable(2, {0, 1, 1, 1}), doctest::Contains("TowerError"), Error);
}

TEST_CASE("action on the constant S3 tower matches direct table evaluation")
{
    CayleyTable s3 = CayleyTable::symmetric3();
    FiniteGroupTower t = constant_tower(s3, 1, TailKind::Trivial);
    // indices: 2 = (0 1) transposition, 3 = 3-cycle, 1 = (1 2) transposition
    IndexFamily g{{2, 2}};
    IndexFamily h{{3, 1}};
    IndexFamily out = tower_action(t, g, h);
    // level 0: g0*h0*p(g1^-1); level 1: g1*h1 (identity above the window)
    CHECK(out.levels[0] == s3.mul(s3.mul(2, 3), s3.inv(2)));
    CHECK(out.levels[1] == s3.mul(2, 1));
}

TEST_CASE("orbit partition of a tower of trivial groups")
{
    FiniteGroupTower t = constant_tower(CayleyTable(), 2, TailKind::Trivial);
    OrbitPartition p = lim1_orbits(t);
    CHECK(p.orbit_count == 1);
    CHECK(p.product_size == 1);
}

TEST_CASE("constant S3 tower with window 1 has a single 36-element orbit")
{
    FiniteGroupTower t = constant_tower(CayleyTable::symmetric3(), 1, TailKind::Trivial);
    OrbitPartition p = lim1_orbits(t);
    CHECK(p.product_size == 36);
    CHECK(p.orbit_count == 1);
    CHECK(p.orbit_size[0] == 36);
    CHECK(p.basepoint_orbit == 0);
}

TEST_CASE("Z/2 levels with zero maps still give one orbit")
{
    CayleyTable z2 = CayleyTable::cyclic(2);
    IndexMap zero;
    zero.image = {0, 0};
    FiniteGroupTower t({z2, z2, z2}, {zero, zero}, TailKind::Trivial);
    OrbitPartition p = lim1_orbits(t);
    CHECK(p.product_size == 8);
    CHECK(p.orbit_count == 1);
}

TEST_CASE("enumeration bound is enforced")
{
    FiniteGroupTower t = constant_tower(CayleyTable::dihedral4(), 3, TailKind::Trivial);
    CHECK_THROWS_WITH_AS(lim1_orbits(t, 100), doctest::Contains("TooLarge"), Error);
}

TEST_CASE("finite lim: trivial, constant, and periodic tails")
{
    CayleyTable s3 = CayleyTable::symmetric3();
    CHECK(lim_of_tower(constant_tower(s3, 2, TailKind::Trivial)).group.order == 1);

    FiniteLimResult constant = lim_of_tower(constant_tower(s3, 2, TailKind::Constant));
    CHECK(constant.group == s3);
    for (int a = 0; a < 6; ++a)
        CHECK(constant.projections[0].apply(a) == a);

    // periodic with the sign-style endomorphism s3 -> {e,(01)}: image stabilizes
    const auto homs = all_homomorphisms(s3, s3);
    bool found = false;
    for (const IndexMap& h : homs) {
        // look for an endomorphism with image of order 2
        std::vector<char> hit(6, 0);
        for (int a = 0; a < 6; ++a)
            hit[h.image[a]] = 1;
        int size = 0;
        for (char c : hit)
            size += c;
        if (size == 2) {
            FiniteGroupTower t = constant_tower(s3, 1, TailKind::Trivial);
            FiniteGroupTower pt({s3, s3}, {t.maps[0]}, TailKind::Periodic, h);
            FiniteLimResult lim = lim_of_tower(pt);
            CHECK(lim.group.order == 2);
            found = true;
            break;
        }
    }
    CHECK(found);
}

TEST_CASE("homomorphism enumeration: counts for small groups")
{
    CayleyTable z2 = CayleyTable::cyclic(2);
    CayleyTable z4 = CayleyTable::cyclic(4);
    CayleyTable s3 = CayleyTable::symmetric3();
    CHECK(all_homomorphisms(z2, z4).size() == 2);  // 0 and 2
    CHECK(all_homomorphisms(z4, z2).size() == 2);
    CHECK(all_homomorphisms(s3, z2).size() == 2);  // trivial and the sign
    // endomorphisms of S3: 1 trivial + 6 with order-2 image + 3 inner-by-... = 10
    CHECK(all_homomorphisms(s3, s3).size() == 10);
}

TEST_CASE("abelian towers reread as finite towers")
{
    FgAbGroup g(0, {Int(2), Int(4)});
    AbelianTower t({g, g},
                   {GroupHom(g, g, IntMatrix::from_rows({{1, 0}, {0, 1}}))},
                   TailKind::Trivial);
    FiniteGroupTower ft = as_finite_tower(t);
    CHECK(ft.window[0].order == 8);
    OrbitPartition p = lim1_orbits(ft);
    CHECK(p.orbit_count == 1);
    CHECK(p.product_size == 64);
}

TEST_CASE("random finite towers from the catalog have one orbit under trivial tails")
{
    Rng rng(321);
    GenParams p;
    p.window = 2;
    for (int it = 0; it < 40; ++it) {
        FiniteGroupTower t = random_finite_tower(rng, p, TailKind::Trivial);
        OrbitPartition orbits = lim1_orbits(t);
        CHECK(orbits.orbit_count == 1);
    }
}
