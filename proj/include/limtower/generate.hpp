#pragma once
#include "limtower/cayley.hpp"
#include "limtower/chain_tower.hpp"
#include "limtower/rng.hpp"

namespace limtower {

/* Deterministic instance generation: same seed and parameters, same value.
 * Entry bounds apply to the elementary building blocks (diagonal boundary
 * coefficients and basis-mixing coefficients); assembled matrices may
 * compound them. */
struct GenParams {
    int window = 2;     // top level N; the window holds N+1 objects
    int max_rank = 3;   // per-degree rank bound for building blocks
    int top_degree = 2; // chain complexes live in degrees 0..top_degree
    long max_entry = 2; // elementary coefficient bound
    int mix_ops = 4;    // unimodular mixing operations per degree
};

// hard limits for generated instances (the CLI rejects anything beyond)
bool gen_params_valid(const GenParams& p);

FgAbGroup random_finite_abelian(Rng& rng, long max_order);
FgAbGroup random_fg_abelian(Rng& rng, int max_free, long max_torsion_factor);

// uniform-ish homomorphism: each matrix column drawn from the full set of
// admissible images of that generator
GroupHom random_hom(Rng& rng, const FgAbGroup& dom, const FgAbGroup& cod, long max_entry);

AbelianTower random_abelian_tower(Rng& rng, const GenParams& p, TailKind tail,
                                  bool finite_groups, long max_order = 16);

// catalog-backed finite tower (cyclic and abelian groups, S3, D4)
FiniteGroupTower random_finite_tower(Rng& rng, const GenParams& p, TailKind tail);
FiniteGroupTower random_nonabelian_constant_tower(Rng& rng, int window, TailKind tail,
                                                  bool dihedral);

ChainComplex random_chain_complex(Rng& rng, const GenParams& p);

/* Random chain map generated compositionally (isomorphisms, inclusions,
 * projections, scalars, zero), so validity is by construction while shapes
 * and coefficients vary. */
ChainMap random_chain_map(Rng& rng, const GenParams& p);

ChainTower random_chain_tower(Rng& rng, const GenParams& p, TailKind tail);

/* The standing example: X_n free of rank one in degree `degree`, structure
 * maps multiplication by m; its homology tower is (Z, x m). */
ChainTower scalar_tower(int window, int degree, const Int& m, TailKind tail);

// random cycle in degree k of c: a random combination of the cycle basis
IntVec random_cycle(Rng& rng, const ChainComplex& c, int degree, long max_coeff);
// random chain (arbitrary vector) in one degree
IntVec random_chain(Rng& rng, const ChainComplex& c, int degree, long max_coeff);

// exactly compatible recipe: a random top-level cycle pushed down the window
LimCycleRecipe random_exact_recipe(Rng& rng, const ChainTower& t, int degree, long max_coeff);

} // namespace limtower
