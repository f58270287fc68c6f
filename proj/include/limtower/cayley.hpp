#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "limtower/group_tower.hpp"

namespace limtower {

/* Finite group as a multiplication table over element indices 0..order-1,
 * identity at index 0. Associativity, identity, and inverses are verified at
 * construction. */
struct CayleyTable {
    int order = 1;
    std::vector<int> table; // order x order, row-major: table[a*order+b] = a*b
    std::vector<int> inverse;

    CayleyTable();
    CayleyTable(int order, std::vector<int> table);

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
    int inv(int a) const { return inverse[a]; }

    static CayleyTable cyclic(int n);
    static CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b);
    static CayleyTable symmetric3();
    static CayleyTable dihedral4(); // order 8
    static CayleyTable from_invariant_factors(const std::vector<int>& factors);

    bool is_abelian() const;
    bool operator==(const CayleyTable& o) const { return order == o.order && table == o.table; }
};

/* Map of element indices; checked to preserve identity and products. */
struct IndexMap {
    std::vector<int> image; // image[a] in the codomain

    int apply(int a) const { return image[a]; }
};

bool is_homomorphism(const CayleyTable& dom, const CayleyTable& cod, const IndexMap& f);

/* All homomorphisms dom -> cod, found by assigning generator images and
 * extending along a BFS word decomposition. Intended for small groups. */
std::vector<IndexMap> all_homomorphisms(const CayleyTable& dom, const CayleyTable& cod);

struct FiniteGroupTower {
    std::vector<CayleyTable> window;
    std::vector<IndexMap> maps; // maps[n-1] = p_n : G_n -> G_{n-1}
    TailKind tail = TailKind::Trivial;
    std::optional<IndexMap> tail_endo;

    FiniteGroupTower() = default;
    FiniteGroupTower(std::vector<CayleyTable> window, std::vector<IndexMap> maps, TailKind tail,
                     std::optional<IndexMap> endo = std::nullopt);

    int top_level() const { return static_cast<int>(window.size()) - 1; }
    const IndexMap& p(int n) const { return maps[n - 1]; }
};

struct IndexFamily {
    std::vector<int> levels; // element index per level
};

IndexFamily identity_index_family(const FiniteGroupTower& t);

/* Level n of g.h is g_n * h_n * p_{n+1}(g_{n+1}^-1), with the identity above
 * the window. */
IndexFamily tower_action(const FiniteGroupTower& t, const IndexFamily& g, const IndexFamily& h);
IndexFamily family_product(const FiniteGroupTower& t, const IndexFamily& a, const IndexFamily& b);

/* Orbit partition of the window product set under the action; orbits are
 * numbered by their minimal member (mixed-radix index, level 0 most
 * significant), so the labeling is deterministic. Orbit 0 contains the
 * all-identity family. */
struct OrbitPartition {
    long long product_size = 0;
    int orbit_count = 0;
    int basepoint_orbit = 0;
    std::vector<int> label;           // orbit id per element index
    std::vector<long long> orbit_size;
};

OrbitPartition lim1_orbits(const FiniteGroupTower& t, long long bound = 1000000);

struct FiniteLimResult {
    CayleyTable group;
    std::vector<IndexMap> projections; // group -> G_n
};

FiniteLimResult lim_of_tower(const FiniteGroupTower& t);

/* A finite abelian tower re-read as a Cayley tower; the cross-validation
 * bridge between the cokernel and orbit computations of lim^1. */
FiniteGroupTower as_finite_tower(const AbelianTower& t);

} // namespace limtower
