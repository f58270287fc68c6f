#include "limtower/group_tower.hpp"

#include <sstream>

#include "limtower/poly.hpp"

namespace limtower {

std::string tail_kind_name(TailKind k)
{
    switch (k) {
    case TailKind::Trivial: return "trivial";
    case TailKind::Constant: return "constant";
    case TailKind::Periodic: return "periodic";
    }
    return "?";
}

AbelianTower::AbelianTower(std::vector<FgAbGroup> w, std::vector<GroupHom> m, TailKind t,
                           std::optional<GroupHom> endo)
    : window(std::move(w)), maps(std::move(m)), tail(t), tail_endo(std::move(endo))
{
    require(!window.empty(), "TowerError", "tower window must contain level 0");
    require(maps.size() + 1 == window.size(), "TowerError",
            "need one structure map per level 1..N");
    for (std::size_t n = 0; n < maps.size(); ++n) {
        require(maps[n].domain == window[n + 1], "TowerError",
                "map domain mismatch at level " + std::to_string(n + 1));
        require(maps[n].codomain == window[n], "TowerError",
                "map codomain mismatch at level " + std::to_string(n + 1));
    }
    if (tail == TailKind::Periodic) {
        require(tail_endo.has_value(), "TowerError", "periodic tail needs an endomorphism");
        require(tail_endo->domain == window.back() && tail_endo->codomain == window.back(),
                "TowerError", "tail endomorphism must act on the top window group");
    } else {
        require(!tail_endo.has_value(), "TowerError",
                "tail endomorphism only makes sense for a periodic tail");
    }
}

bool AbelianTower::all_finite() const
{
    for (const FgAbGroup& g : window)
        if (g.free_rank > 0)
            return false;
    return true;
}

TowerElementFamily identity_family(const AbelianTower& t)
{
    TowerElementFamily f;
    for (const FgAbGroup& g : t.window)
        f.levels.push_back(g.zero());
    return f;
}

static void check_family(const AbelianTower& t, const TowerElementFamily& f)
{
    require(f.levels.size() == t.window.size(), "ElementError",
            "family depth does not match the tower window");
    for (std::size_t n = 0; n < f.levels.size(); ++n)
        require(static_cast<int>(f.levels[n].size()) == t.window[n].dims(), "ElementError",
                "family entry has wrong length at level " + std::to_string(n));
}

TowerElementFamily tower_action(const AbelianTower& t, const TowerElementFamily& g,
                                const TowerElementFamily& h)
{
    check_family(t, g);
    check_family(t, h);
    const int top = t.top_level();
    TowerElementFamily out;
    for (int n = 0; n <= top; ++n) {
        IntVec v = vec_add(g.levels[n], h.levels[n]);
        if (n < top)
            v = vec_sub(v, t.p(n + 1).apply(g.levels[n + 1]));
        // level N: the acting element above the window is the identity
        out.levels.push_back(t.window[n].reduce(std::move(v)));
    }
    return out;
}

TowerElementFamily family_product(const AbelianTower& t, const TowerElementFamily& a,
                                  const TowerElementFamily& b)
{
    check_family(t, a);
    check_family(t, b);
    TowerElementFamily out;
    for (std::size_t n = 0; n < a.levels.size(); ++n)
        out.levels.push_back(t.window[n].reduce(vec_add(a.levels[n], b.levels[n])));
    return out;
}

std::string MlCertificate::describe() const
{
    std::ostringstream os;
    if (tail != TailKind::Periodic) {
        os << tail_kind_name(tail) << " tail: images stabilize within the window";
        return os.str();
    }
    if (ml)
        os << "image(e^" << stab_index << ") = image(e^" << stab_index + 1 << ")";
    else
        os << "free-quotient images descend with index " << descent_index.get_str()
           << " from step " << rank_stab_index << " on";
    return os.str();
}

namespace {

// generators of image(e^k) as columns (all generators of G pushed through e^k)
std::vector<IntVec> image_generators(const GroupHom& ek)
{
    std::vector<IntVec> gens;
    for (int j = 0; j < ek.matrix.cols(); ++j)
        gens.push_back(ek.codomain.reduce(ek.matrix.col_vec(j)));
    return gens;
}

bool subgroup_leq(const FgAbGroup& g, const std::vector<IntVec>& sub,
                  const std::vector<IntVec>& super)
{
    for (const IntVec& x : sub)
        if (!subgroup_contains(g, super, x))
            return false;
    return true;
}

/* Decides stabilization of image(e^k), k -> infinity.
 *
 * Free quotient first: ranks of the image lattices of Mf^k strictly decrease
 * and then stay constant; from the first equal-rank step k0 on, e maps each
 * image lattice isomorphically onto the next, so the index [L_k : L_{k+1}]
 * is constant. Index 1 at k0 means the free part is stable from k0 on;
 * index > 1 means strict descent forever.
 *
 * With the free part stable, every later step has index equal to the torsion
 * drop, and an index-1 step is permanent, so a full-chain equality appears
 * within log2 |torsion| further steps. */
MlCertificate decide_periodic(const FgAbGroup& g, const GroupHom& e)
{
    MlCertificate cert;
    cert.tail = TailKind::Periodic;

    const int fr = g.free_rank;
    IntMatrix mf = e.matrix.block(0, 0, fr, fr);

    int k0 = 0;
    IntMatrix power = IntMatrix::identity(fr);
    if (fr > 0) {
        int prev_rank = fr;
        for (int k = 1; k <= fr + 1; ++k) {
            IntMatrix next = mf.mul(power);
            int r = lattice_rank(next);
            if (r == prev_rank) {
                k0 = k - 1;
                if (!lattice_equal(power, next)) {
                    cert.ml = false;
                    cert.rank_stab_index = k0;
                    cert.descent_index = lattice_index(power, next);
                    return cert;
                }
                break;
            }
            prev_rank = r;
            power = std::move(next);
        }
    }
    cert.rank_stab_index = k0;

    // full chain including torsion; bounded by k0 + log2(torsion order) + 1
    Int tor_order = 1;
    for (const Int& d : g.torsion)
        tor_order *= d;
    int bound = k0 + static_cast<int>(mpz_sizeinbase(tor_order.get_mpz_t(), 2)) + 2;

    GroupHom ek = GroupHom::identity(g);
    std::vector<IntVec> gens_k = image_generators(ek);
    for (int k = 0; k <= bound; ++k) {
        GroupHom ek1 = GroupHom::compose(e, ek);
        std::vector<IntVec> gens_k1 = image_generators(ek1);
        if (subgroup_leq(g, gens_k, gens_k1)) { // reverse inclusion always holds
            cert.ml = true;
            cert.stab_index = k;
            cert.stable_image_gens = gens_k;
            return cert;
        }
        ek = std::move(ek1);
        gens_k = std::move(gens_k1);
    }
    fail("TowerError", "image chain failed to settle within its proven bound");
}

} // namespace

MlCertificate mittag_leffler_check(const AbelianTower& t)
{
    /* For all three tails the images-from-above at every window level are
     * determined by the chain at the top level: Trivial and Constant tails
     * stabilize immediately, and a Periodic tail stabilizes at every level
     * iff the top-level chain image(e^k) does (level N is that chain, and
     * its stabilization pushes down through the window maps). */
    MlCertificate cert;
    cert.tail = t.tail;
    if (t.tail != TailKind::Periodic)
        return cert;
    return decide_periodic(t.window.back(), *t.tail_endo);
}

Lim1Result lim1_abelian(const AbelianTower& t)
{
    if (t.tail == TailKind::Periodic) {
        MlCertificate cert = mittag_leffler_check(t);
        if (!cert.ml)
            return Lim1Result{std::nullopt, cert};
        return Lim1Result{FgAbGroup{}, cert};
    }

    // cokernel of (g_n) -> (g_n - p_{n+1} g_{n+1}) on the window product
    const int top = t.top_level();
    std::vector<int> offset(top + 2, 0);
    for (int n = 0; n <= top; ++n)
        offset[n + 1] = offset[n] + t.window[n].dims();
    const int total = offset[top + 1];

    IntMatrix f(total, total);
    for (int n = 0; n <= top; ++n) {
        f.set_block(offset[n], offset[n], IntMatrix::identity(t.window[n].dims()));
        if (n < top)
            f.set_block(offset[n], offset[n + 1], t.p(n + 1).matrix.negated());
    }
    IntMatrix rels(total, 0);
    for (int n = 0; n <= top; ++n) {
        IntMatrix cols = t.window[n].relation_columns();
        IntMatrix r(total, cols.cols());
        r.set_block(offset[n], 0, cols);
        rels = rels.hstack(r);
    }

    QuotientPresentation qp = classify_quotient(total, f.hstack(rels));
    MlCertificate cert;
    cert.tail = t.tail;
    return Lim1Result{qp.group, cert};
}

AbelianLimResult lim_of_tower(const AbelianTower& t)
{
    const int top = t.top_level();
    AbelianLimResult out;
    out.certificate = mittag_leffler_check(t);

    auto descend = [&](const GroupHom& top_proj) {
        std::vector<GroupHom> projs(top + 1, top_proj);
        projs[top] = top_proj;
        for (int n = top; n >= 1; --n)
            projs[n - 1] = GroupHom::compose(t.p(n), projs[n]);
        return projs;
    };

    switch (t.tail) {
    case TailKind::Trivial: {
        out.group = FgAbGroup{};
        std::vector<GroupHom> projs;
        for (int n = 0; n <= top; ++n)
            projs.push_back(GroupHom::zero(out.group, t.window[n]));
        out.projections = std::move(projs);
        return out;
    }
    case TailKind::Constant: {
        out.group = t.window[top];
        out.projections = descend(GroupHom::identity(t.window[top]));
        return out;
    }
    case TailKind::Periodic:
        break;
    }

    const FgAbGroup& g = t.window[top];
    const GroupHom& e = *t.tail_endo;

    std::vector<IntVec> stable_gens;
    if (out.certificate.ml) {
        stable_gens = out.certificate.stable_image_gens;
    } else {
        require(e.kernel_trivial(), "Unsupported",
                "periodic tail with non-injective, non-stabilizing endomorphism");
        /* The compatible sequences over the tail are exactly the elements of
         * the intersection of the images, which for an injective endomorphism
         * is the largest subgroup acted on invertibly over the integers:
         * torsion plus the kernel of the unit-constant-term part of the
         * characteristic polynomial on the free quotient. */
        const int fr = g.free_rank;
        IntMatrix mf = e.matrix.block(0, 0, fr, fr);
        Poly u = unit_part(char_poly(mf));
        IntMatrix efree = kernel_basis(poly_apply(u, mf));
        for (int j = 0; j < efree.cols(); ++j) {
            IntVec v = g.zero();
            for (int i = 0; i < fr; ++i)
                v[i] = efree.at(i, j);
            stable_gens.push_back(std::move(v));
        }
        for (std::size_t j = 0; j < g.torsion.size(); ++j) {
            IntVec v = g.zero();
            v[fr + static_cast<int>(j)] = 1;
            stable_gens.push_back(std::move(v));
        }
    }

    SubgroupResult sub = classify_subgroup(g, stable_gens);
    out.group = sub.group;
    out.projections = descend(sub.inclusion);

    // the tail endomorphism restricted to the stable subgroup, in its coordinates
    IntMatrix restr(sub.group.dims(), sub.group.dims());
    for (int j = 0; j < sub.group.dims(); ++j) {
        IntVec ej = zero_vec(sub.group.dims());
        ej[j] = 1;
        IntVec img = e.apply(sub.inclusion.apply(ej));
        auto coords = sub.coords_of(img);
        require(coords.has_value(), "TowerError", "stable subgroup is not endomorphism-invariant");
        for (int i = 0; i < sub.group.dims(); ++i)
            restr.at(i, j) = (*coords)[i];
    }
    GroupHom ident(sub.group, sub.group, std::move(restr));
    require(ident.is_isomorphism(), "TowerError",
            "tail endomorphism is not bijective on the stable subgroup");
    out.tail_identification = std::move(ident);
    return out;
}

} // namespace limtower
