#pragma once
#include <optional>
#include <string>
#include <vector>

#include "limtower/chain_complex.hpp"
#include "limtower/group_tower.hpp"

namespace limtower {

/* Tower of chain complexes X_0..X_N with maps q_n : X_n -> X_{n-1} and a
 * declared tail. Degreewise surjectivity (the fibration property in this
 * model) is computed per map at construction, never declared. */
struct ChainTower {
    std::vector<ChainComplex> window;
    std::vector<ChainMap> maps; // maps[n-1] = q_n : X_n -> X_{n-1}
    TailKind tail = TailKind::Trivial;
    std::optional<ChainMap> tail_endo;
    std::vector<bool> surjective; // per map
    bool all_surjective = false;

    ChainTower() = default;
    ChainTower(std::vector<ChainComplex> window, std::vector<ChainMap> maps, TailKind tail,
               std::optional<ChainMap> endo = std::nullopt);

    int top_level() const { return static_cast<int>(window.size()) - 1; }
    const ChainMap& q(int n) const { return maps[n - 1]; } // n = 1..N
    int max_top_degree() const;
};

/* Levelwise chain maps f_n between two towers, with exactly commuting
 * squares q_n f_n = f_{n-1} q_n. */
struct TowerMap {
    ChainTower source, target;
    std::vector<ChainMap> levels;

    TowerMap() = default;
    TowerMap(ChainTower source, ChainTower target, std::vector<ChainMap> levels);

    int top_level() const { return static_cast<int>(levels.size()) - 1; }
};

/* A k-cycle of the window limit: compatible per-level cycles,
 * q_{n+1}(z_{n+1}) = z_n exactly. */
struct LimCycleRecipe {
    int degree = 0;
    std::vector<IntVec> cycles; // z_0 .. z_N
};

LimCycleRecipe validate_recipe(const ChainTower& t, int degree, std::vector<IntVec> cycles);
LimCycleRecipe zero_recipe(const ChainTower& t, int degree);
LimCycleRecipe recipe_add(const ChainTower& t, const LimCycleRecipe& a, const LimCycleRecipe& b);

/* Bounding chains b_n with d(b_n) = z_n, one per level. */
struct NullhomotopyFamily {
    int degree = 0; // degree of the cycles; chains live one degree higher
    std::vector<IntVec> chains;
};

NullhomotopyFamily validate_bounding(const ChainTower& t, const LimCycleRecipe& r,
                                     std::vector<IntVec> chains);

/* The per-level classes c_n = [b_n - q_{n+1}(b_{n+1})] in H_{k+1}(X_n) for
 * n = 0..N-1: the value of the connecting construction on a kernel element. */
struct Lim1Witness {
    int degree = 0;                       // k+1
    std::vector<IntVec> representatives;  // cycles in X_n, n = 0..N-1
    std::vector<IntVec> class_coords;     // in the normal form of H_{k+1}(X_n)
};

/* Classes g_0..g_{N-1} with g_n + c_n - q_{n+1,*}(g_{n+1}) = c'_n for
 * n < N-1: the orbit relation identifying two witness families. */
struct OrbitEqualityWitness {
    int degree = 0;
    std::vector<IntVec> representatives; // cycles in X_n, n = 0..N-1
};

/* Chains d_0..d_N with d(delta_n) = zbar_n - z_n and q(delta_{n+1}) = delta_n. */
struct TowerHomotopy {
    int degree = 0; // k+1, the degree of the chains
    std::vector<IntVec> chains;
};

struct ReplacedTower {
    ChainTower tower;
    TowerMap j; // original -> replaced, levelwise quasi-isomorphisms
};

/* Levelwise mapping-path replacement: Y_0 = X_0 and Y_n the fibre product of
 * X_n over Y_{n-1}; all replaced maps are degreewise surjective and each
 * j_n is a quasi-isomorphism. Trivial or Constant tails only. */
ReplacedTower fibration_replace(const ChainTower& t);

// class of z_i in H_k(X_i)
HomologyClass project(const ChainTower& t, const LimCycleRecipe& r, int level);

/* Straightens per-level cycles with homologous-compatibility into an exactly
 * compatible recipe: z'_0 = z_0, each z'_n homologous to z_n, and
 * q(z'_{n+1}) = z'_n on the nose. */
LimCycleRecipe lift_compatible_classes(const ChainTower& t, int degree,
                                       const std::vector<IntVec>& cycles);

/* The connecting construction: for a recipe whose cycles all bound, choose
 * (or accept) bounding chains b_n and return the classes
 * [b_n - q_{n+1}(b_{n+1})]. */
Lim1Witness phi(const ChainTower& t, const LimCycleRecipe& r,
                const std::optional<NullhomotopyFamily>& bc = std::nullopt);

NullhomotopyFamily canonical_bounding(const ChainTower& t, const LimCycleRecipe& r);

/* For two bounding families of the same recipe: g_n = [b'_n - b_n], verified
 * to satisfy the orbit relation against phi of each family. */
OrbitEqualityWitness phi_change_witness(const ChainTower& t, const LimCycleRecipe& r,
                                        const NullhomotopyFamily& bc,
                                        const NullhomotopyFamily& bc_prime);

/* Builds a kernel recipe hitting prescribed classes: b_0 = 0 and
 * q(b_{n+1}) = b_n - gamma_n, z_n = d(b_n); phi of the result is gamma. */
std::pair<LimCycleRecipe, NullhomotopyFamily>
phi_preimage(const ChainTower& t, int degree, const std::vector<IntVec>& gamma_representatives);

/* Produces the compatible homotopy family connecting two recipes whose phi
 * values the witness identifies: d(delta_n) = zbar_n - z_n and
 * q(delta_{n+1}) = delta_n, built by bounding each discrepancy and lifting
 * it through the surjections. */
TowerHomotopy phi_equalize(const ChainTower& t, const LimCycleRecipe& r,
                           const LimCycleRecipe& r_bar, const NullhomotopyFamily& bc,
                           const NullhomotopyFamily& bc_bar, const OrbitEqualityWitness& w);

/* Lifts a recipe across a levelwise quasi-isomorphism of surjective towers:
 * returns x in the source with f_{n,*}[x_n] = [y_n] and exact compatibility. */
LimCycleRecipe tower_equiv_lift(const TowerMap& f, const LimCycleRecipe& y);

struct CheckItem {
    std::string name;
    bool pass;
    std::vector<std::pair<std::string, std::string>> values;
};

struct MilnorReport {
    int degree = 0;
    bool all_pass = true;
    std::vector<CheckItem> items;
    void add(CheckItem item);
};

/* Window-scale three-term check at one degree: computes H_k of the limit
 * complex, lim of the homology tower, and lim^1 of the degree-(k+1) homology
 * tower, and verifies that the projection-induced map is an isomorphism onto
 * lim H_k with trivial lim^1 term. Throws HypothesisViolated when some map
 * is not degreewise surjective. */
MilnorReport milnor_window_check(const ChainTower& t, int degree);

// the homology tower H_k(X_0) <- ... <- H_k(X_N) as an abelian group tower
AbelianTower homology_tower(const ChainTower& t, int degree);

} // namespace limtower
