#pragma once
#include <optional>
#include <string>
#include <vector>

#include "limtower/abelian.hpp"

namespace limtower {

/* A tower ... -> G_{n+1} -> G_n -> ... -> G_0 is stored as a finite window
 * G_0..G_N plus a declared tail:
 *   Trivial  - G_n is the trivial group for n > N,
 *   Constant - G_n = G_N with identity maps for n > N,
 *   Periodic - G_n = G_N with one fixed endomorphism for every map above N.
 */
enum class TailKind { Trivial, Constant, Periodic };

std::string tail_kind_name(TailKind k);

struct AbelianTower {
    std::vector<FgAbGroup> window; // G_0 .. G_N
    std::vector<GroupHom> maps;    // maps[n-1] = p_n : G_n -> G_{n-1}, n = 1..N
    TailKind tail = TailKind::Trivial;
    std::optional<GroupHom> tail_endo; // Periodic only: G_N -> G_N

    AbelianTower() = default;
    AbelianTower(std::vector<FgAbGroup> window, std::vector<GroupHom> maps, TailKind tail,
                 std::optional<GroupHom> endo = std::nullopt);

    int top_level() const { return static_cast<int>(window.size()) - 1; }
    const GroupHom& p(int n) const { return maps[n - 1]; } // n = 1..N
    bool all_finite() const;
};

/* One element g_0..g_N per level; levels above the window are the identity. */
struct TowerElementFamily {
    std::vector<IntVec> levels;
};

TowerElementFamily identity_family(const AbelianTower& t);

/* The left action of the product group on the product set whose orbit set is
 * lim^1: level n of g.h is g_n + h_n - p_{n+1}(g_{n+1}), with g_{N+1} = 0. */
TowerElementFamily tower_action(const AbelianTower& t, const TowerElementFamily& g,
                                const TowerElementFamily& h);
// levelwise product (sum), for the action-law tests
TowerElementFamily family_product(const AbelianTower& t, const TowerElementFamily& a,
                                  const TowerElementFamily& b);

/* Certificate for the image chain of the tail endomorphism at the top level.
 * Stabilization at one index is permanent, so `ml` is decided exactly. */
struct MlCertificate {
    bool ml = true;
    TailKind tail = TailKind::Trivial;
    int rank_stab_index = 0;        // first index with stable free-quotient rank
    Int descent_index = 0;          // > 1 witnesses strict descent forever (non-ML)
    int stab_index = 0;             // ML: image(e^k) = image(e^{k+1})
    std::vector<IntVec> stable_image_gens; // ML: generators of the stable image
    std::string describe() const;
};

MlCertificate mittag_leffler_check(const AbelianTower& t);

struct Lim1Result {
    std::optional<FgAbGroup> group; // absent iff status is NonML
    MlCertificate certificate;
    bool non_ml() const { return !group.has_value(); }
};

/* Trivial/Constant tails: the exact cokernel of (g_n) -> (g_n - p_{n+1} g_{n+1})
 * on the window product (always trivial for these tails). Periodic tails:
 * trivial with an ML certificate when the tail images stabilize, NonML status
 * otherwise (no claim about the value of lim^1 is made in that case). */
Lim1Result lim1_abelian(const AbelianTower& t);

struct AbelianLimResult {
    FgAbGroup group;
    std::vector<GroupHom> projections;  // group -> G_n for n = 0..N
    std::optional<GroupHom> tail_identification; // Periodic: the bijective restriction
    MlCertificate certificate;
};

/* lim of the tower. Trivial tail: 0. Constant tail: G_N via composite
 * projections. Periodic: the stable image when the image chain stabilizes;
 * for an injective, non-stabilizing endomorphism, the largest subgroup on
 * which it acts invertibly over the integers (unit-constant-term part of the
 * characteristic polynomial). Anything else is Unsupported. */
AbelianLimResult lim_of_tower(const AbelianTower& t);

} // namespace limtower
