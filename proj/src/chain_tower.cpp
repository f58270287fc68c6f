#include "limtower/chain_tower.hpp"

namespace limtower {

ChainTower::ChainTower(std::vector<ChainComplex> w, std::vector<ChainMap> m, TailKind t,
                       std::optional<ChainMap> endo)
    : window(std::move(w)), maps(std::move(m)), tail(t), tail_endo(std::move(endo))
{
    require(!window.empty(), "TowerError", "tower window must contain level 0");
    require(maps.size() + 1 == window.size(), "TowerError",
            "need one structure map per level 1..N");
    for (std::size_t n = 0; n < maps.size(); ++n) {
        require(maps[n].source() == window[n + 1], "TowerError",
                "map source mismatch at level " + std::to_string(n + 1));
        require(maps[n].target() == window[n], "TowerError",
                "map target mismatch at level " + std::to_string(n + 1));
    }
    if (tail == TailKind::Periodic) {
        require(tail_endo.has_value(), "TowerError", "periodic tail needs an endomorphism");
        require(tail_endo->source() == window.back() && tail_endo->target() == window.back(),
                "TowerError", "tail endomorphism must act on the top window complex");
    } else {
        require(!tail_endo.has_value(), "TowerError",
                "tail endomorphism only makes sense for a periodic tail");
    }
    all_surjective = true;
    for (const ChainMap& q : maps) {
        surjective.push_back(q.is_degreewise_surjective());
        all_surjective = all_surjective && surjective.back();
    }
    if (tail == TailKind::Periodic)
        all_surjective = all_surjective && tail_endo->is_degreewise_surjective();
}

int ChainTower::max_top_degree() const
{
    int top = 0;
    for (const ChainComplex& c : window)
        top = std::max(top, c.top_degree());
    return top;
}

TowerMap::TowerMap(ChainTower s, ChainTower t, std::vector<ChainMap> lv)
    : source(std::move(s)), target(std::move(t)), levels(std::move(lv))
{
    require(source.window.size() == target.window.size(), "TowerError",
            "tower map needs windows of equal depth");
    require(levels.size() == source.window.size(), "TowerError",
            "need one chain map per level");
    for (std::size_t n = 0; n < levels.size(); ++n) {
        require(levels[n].source() == source.window[n] && levels[n].target() == target.window[n],
                "TowerError", "level map shape mismatch at level " + std::to_string(n));
    }
    for (std::size_t n = 1; n < levels.size(); ++n) {
        ChainMap lhs = ChainMap::compose(target.q(static_cast<int>(n)), levels[n]);
        ChainMap rhs = ChainMap::compose(levels[n - 1], source.q(static_cast<int>(n)));
        require(lhs == rhs, "TowerError",
                "tower map square does not commute at level " + std::to_string(n));
    }
}

LimCycleRecipe validate_recipe(const ChainTower& t, int degree, std::vector<IntVec> cycles)
{
    require(cycles.size() == t.window.size(), "TowerError",
            "recipe needs one cycle per window level");
    for (int n = 0; n <= t.top_level(); ++n) {
        require(static_cast<int>(cycles[n].size()) == t.window[n].rank(degree), "DimensionError",
                "cycle length mismatch at level " + std::to_string(n));
        require(vec_is_zero(t.window[n].boundary(degree).apply(cycles[n])), "NotACycle",
                "recipe entry is not a cycle at level " + std::to_string(n));
    }
    for (int n = 1; n <= t.top_level(); ++n)
        require(t.q(n).apply(degree, cycles[n]) == cycles[n - 1], "NotCompatible",
                "recipe is not exactly compatible at level " + std::to_string(n));
    return LimCycleRecipe{degree, std::move(cycles)};
}

LimCycleRecipe zero_recipe(const ChainTower& t, int degree)
{
    std::vector<IntVec> z;
    for (const ChainComplex& c : t.window)
        z.push_back(zero_vec(c.rank(degree)));
    return LimCycleRecipe{degree, std::move(z)};
}

LimCycleRecipe recipe_add(const ChainTower& t, const LimCycleRecipe& a, const LimCycleRecipe& b)
{
    require(a.degree == b.degree, "DimensionError", "recipe degrees differ");
    std::vector<IntVec> z;
    for (std::size_t n = 0; n < a.cycles.size(); ++n)
        z.push_back(vec_add(a.cycles[n], b.cycles[n]));
    return validate_recipe(t, a.degree, std::move(z));
}

NullhomotopyFamily validate_bounding(const ChainTower& t, const LimCycleRecipe& r,
                                     std::vector<IntVec> chains)
{
    require(chains.size() == t.window.size(), "WitnessInvalid",
            "bounding family needs one chain per level");
    for (int n = 0; n <= t.top_level(); ++n) {
        require(static_cast<int>(chains[n].size()) == t.window[n].rank(r.degree + 1),
                "WitnessInvalid", "bounding chain length mismatch at level " + std::to_string(n));
        require(t.window[n].boundary(r.degree + 1).apply(chains[n]) == r.cycles[n],
                "WitnessInvalid",
                "chain does not bound the recipe cycle at level " + std::to_string(n));
    }
    return NullhomotopyFamily{r.degree, std::move(chains)};
}

ReplacedTower fibration_replace(const ChainTower& t)
{
    require(t.tail != TailKind::Periodic, "Unsupported",
            "the replacement construction is not closed under periodic tails");
    std::vector<ChainComplex> window{t.window[0]};
    std::vector<ChainMap> maps;
    std::vector<ChainMap> j{ChainMap::identity(t.window[0])};
    for (int n = 1; n <= t.top_level(); ++n) {
        ChainMap into_prev = ChainMap::compose(j[n - 1], t.q(n)); // X_n -> Y_{n-1}
        PathReplacement pr = path_fibration_replace(into_prev);
        window.push_back(pr.e);
        j.push_back(pr.j);
        maps.push_back(pr.ev1);
    }
    ChainTower replaced(window, std::move(maps), t.tail);
    TowerMap jt(t, replaced, std::move(j));
    return ReplacedTower{std::move(replaced), std::move(jt)};
}

HomologyClass project(const ChainTower& t, const LimCycleRecipe& r, int level)
{
    require(level >= 0 && level <= t.top_level(), "LevelError",
            "level " + std::to_string(level) + " outside the window");
    return HomologyClass{r.degree, r.cycles[level], t.window[level]};
}

LimCycleRecipe lift_compatible_classes(const ChainTower& t, int degree,
                                       const std::vector<IntVec>& cycles)
{
    const int top = t.top_level();
    require(cycles.size() == t.window.size(), "TowerError",
            "need one cycle per window level");
    for (int n = 0; n <= top; ++n)
        require(vec_is_zero(t.window[n].boundary(degree).apply(cycles[n])), "NotACycle",
                "input is not a cycle at level " + std::to_string(n));

    // homology-compatibility witnesses: q(z_{n+1}) - z_n must bound
    std::vector<IntVec> witness(top + 1); // witness[n+1] in X_n, degree+1
    for (int n = 0; n < top; ++n) {
        IntVec diff = vec_sub(t.q(n + 1).apply(degree, cycles[n + 1]), cycles[n]);
        auto nh = solve_boundary(t.window[n], degree, diff);
        require(nh.has_value(), "NotCompatible",
                "classes are not compatible between levels " + std::to_string(n + 1) + " and " +
                    std::to_string(n));
        witness[n + 1] = nh->bounding_chain;
    }

    std::vector<IntVec> out(top + 1);
    out[0] = cycles[0];
    IntVec correction = zero_vec(t.window[0].rank(degree + 1)); // z'_n = z_n + d(correction)
    for (int n = 0; n < top; ++n) {
        IntVec c = vec_sub(witness[n + 1], correction);
        auto v = solve_lift(t.q(n + 1), degree + 1, c);
        require(v.has_value(), "NoLift",
                "no lift through the structure map at level " + std::to_string(n + 1));
        out[n + 1] = vec_sub(cycles[n + 1], t.window[n + 1].boundary(degree + 1).apply(*v));
        correction = vec_neg(*v);
        require(t.q(n + 1).apply(degree, out[n + 1]) == out[n], "TowerError",
                "straightening failed to be exact");
    }
    return validate_recipe(t, degree, std::move(out));
}

NullhomotopyFamily canonical_bounding(const ChainTower& t, const LimCycleRecipe& r)
{
    std::vector<IntVec> chains;
    for (int n = 0; n <= t.top_level(); ++n) {
        auto nh = solve_boundary(t.window[n], r.degree, r.cycles[n]);
        require(nh.has_value(), "NotInKernel",
                "recipe cycle is not a boundary at level " + std::to_string(n));
        chains.push_back(nh->bounding_chain);
    }
    return NullhomotopyFamily{r.degree, std::move(chains)};
}

Lim1Witness phi(const ChainTower& t, const LimCycleRecipe& r,
                const std::optional<NullhomotopyFamily>& bc)
{
    const int top = t.top_level();
    NullhomotopyFamily b = bc ? validate_bounding(t, r, bc->chains) : canonical_bounding(t, r);

    Lim1Witness w;
    w.degree = r.degree + 1;
    for (int n = 0; n < top; ++n) {
        IntVec rep = vec_sub(b.chains[n], t.q(n + 1).apply(r.degree + 1, b.chains[n + 1]));
        HomologyData h = homology_or_trivial(t.window[n], r.degree + 1);
        IntVec coords = h.class_of(rep); // also checks that rep is a cycle
        w.representatives.push_back(std::move(rep));
        w.class_coords.push_back(std::move(coords));
    }
    return w;
}

OrbitEqualityWitness phi_change_witness(const ChainTower& t, const LimCycleRecipe& r,
                                        const NullhomotopyFamily& bc,
                                        const NullhomotopyFamily& bc_prime)
{
    const int top = t.top_level();
    NullhomotopyFamily b = validate_bounding(t, r, bc.chains);
    NullhomotopyFamily bp = validate_bounding(t, r, bc_prime.chains);

    OrbitEqualityWitness w;
    w.degree = r.degree + 1;
    for (int n = 0; n < top; ++n)
        w.representatives.push_back(vec_sub(bp.chains[n], b.chains[n]));

    // the orbit relation g_n + c_n - q_*(g_{n+1}) = c'_n, levelwise
    Lim1Witness c = phi(t, r, b);
    Lim1Witness cp = phi(t, r, bp);
    for (int n = 0; n + 1 < top; ++n) {
        HomologyData h = homology_or_trivial(t.window[n], r.degree + 1);
        IntVec lhs = vec_add(h.class_of(w.representatives[n]), c.class_coords[n]);
        IntVec pushed = h.class_of(t.q(n + 1).apply(r.degree + 1, w.representatives[n + 1]));
        lhs = h.group().reduce(vec_sub(lhs, pushed));
        require(lhs == cp.class_coords[n], "WitnessInvalid",
                "orbit relation failed at level " + std::to_string(n));
    }
    return w;
}

std::pair<LimCycleRecipe, NullhomotopyFamily>
phi_preimage(const ChainTower& t, int degree, const std::vector<IntVec>& gamma_representatives)
{
    const int top = t.top_level();
    require(t.all_surjective, "NoLift", "tower has a non-surjective structure map");
    require(static_cast<int>(gamma_representatives.size()) == top, "DimensionError",
            "need one class representative per level 0..N-1");
    for (int n = 0; n < top; ++n) {
        require(static_cast<int>(gamma_representatives[n].size()) ==
                    t.window[n].rank(degree + 1),
                "DimensionError", "representative length mismatch at level " + std::to_string(n));
        require(vec_is_zero(t.window[n].boundary(degree + 1).apply(gamma_representatives[n])),
                "NotACycle", "class representative is not a cycle at level " + std::to_string(n));
    }

    std::vector<IntVec> b(top + 1), z(top + 1);
    b[0] = zero_vec(t.window[0].rank(degree + 1));
    z[0] = zero_vec(t.window[0].rank(degree));
    for (int n = 0; n < top; ++n) {
        IntVec target = vec_sub(b[n], gamma_representatives[n]);
        auto lifted = solve_lift(t.q(n + 1), degree + 1, target);
        require(lifted.has_value(), "NoLift",
                "no lift through the structure map at level " + std::to_string(n + 1));
        b[n + 1] = *lifted;
        z[n + 1] = t.window[n + 1].boundary(degree + 1).apply(b[n + 1]);
    }
    LimCycleRecipe r = validate_recipe(t, degree, std::move(z));
    NullhomotopyFamily fam = validate_bounding(t, r, std::move(b));
    return {std::move(r), std::move(fam)};
}

TowerHomotopy phi_equalize(const ChainTower& t, const LimCycleRecipe& r,
                           const LimCycleRecipe& r_bar, const NullhomotopyFamily& bc,
                           const NullhomotopyFamily& bc_bar, const OrbitEqualityWitness& w)
{
    const int top = t.top_level();
    const int k = r.degree;
    require(r_bar.degree == k, "DimensionError", "recipe degrees differ");
    NullhomotopyFamily b = validate_bounding(t, r, bc.chains);
    NullhomotopyFamily bb = validate_bounding(t, r_bar, bc_bar.chains);
    require(static_cast<int>(w.representatives.size()) == top, "WitnessInvalid",
            "witness needs one class per level 0..N-1");
    for (int n = 0; n < top; ++n)
        require(vec_is_zero(t.window[n].boundary(k + 1).apply(w.representatives[n])),
                "WitnessInvalid", "witness entry is not a cycle at level " + std::to_string(n));

    // the witness must identify phi(r) with phi(r_bar), levelwise
    Lim1Witness c = phi(t, r, b);
    Lim1Witness cb = phi(t, r_bar, bb);
    for (int n = 0; n + 1 < top; ++n) {
        HomologyData h = homology_or_trivial(t.window[n], k + 1);
        IntVec lhs = vec_add(h.class_of(w.representatives[n]), c.class_coords[n]);
        IntVec pushed = h.class_of(t.q(n + 1).apply(k + 1, w.representatives[n + 1]));
        lhs = h.group().reduce(vec_sub(lhs, pushed));
        require(lhs == cb.class_coords[n], "WitnessInvalid",
                "orbit relation failed at level " + std::to_string(n));
    }

    // d_n = bbar_n - b_n - w_n, the uncorrected homotopies
    std::vector<IntVec> d(top + 1);
    for (int n = 0; n <= top; ++n) {
        d[n] = vec_sub(bb.chains[n], b.chains[n]);
        if (n < top)
            d[n] = vec_sub(d[n], w.representatives[n]);
    }

    TowerHomotopy delta;
    delta.degree = k + 1;
    delta.chains.resize(top + 1);
    delta.chains[0] = d[0];
    for (int n = 0; n < top; ++n) {
        IntVec disc = vec_sub(delta.chains[n], t.q(n + 1).apply(k + 1, d[n + 1]));
        auto nh = solve_boundary(t.window[n], k + 1, disc);
        require(nh.has_value(), "WitnessInvalid",
                "witness does not extend across the window top at level " + std::to_string(n));
        auto lifted = solve_lift(t.q(n + 1), k + 2, nh->bounding_chain);
        require(lifted.has_value(), "NoLift",
                "no lift through the structure map at level " + std::to_string(n + 1));
        delta.chains[n + 1] =
            vec_add(d[n + 1], t.window[n + 1].boundary(k + 2).apply(*lifted));
    }

    for (int n = 0; n <= top; ++n)
        require(t.window[n].boundary(k + 1).apply(delta.chains[n]) ==
                    vec_sub(r_bar.cycles[n], r.cycles[n]),
                "TowerError", "homotopy fails its boundary identity");
    for (int n = 0; n < top; ++n)
        require(t.q(n + 1).apply(k + 1, delta.chains[n + 1]) == delta.chains[n], "TowerError",
                "homotopy fails tower compatibility");
    return delta;
}

LimCycleRecipe tower_equiv_lift(const TowerMap& f, const LimCycleRecipe& y)
{
    const ChainTower& t = f.source;
    const ChainTower& s = f.target;
    const int top = t.top_level();
    const int k = y.degree;
    require(t.all_surjective, "NoLift", "source tower has a non-surjective structure map");
    for (int n = 0; n <= top; ++n)
        require(is_quasi_iso(f.levels[n]).quasi_iso, "NotEquivalence",
                "level map is not a quasi-isomorphism at level " + std::to_string(n));

    auto pull_class = [&](int n, const IntVec& target_cycle) {
        HomologyData hs = homology_or_trivial(t.window[n], k);
        HomologyData ht = homology_or_trivial(s.window[n], k);
        GroupHom ih = induced_hom(f.levels[n], k, hs, ht);
        auto pre = ih.preimage(ht.class_of(target_cycle));
        require(pre.has_value(), "NotEquivalence",
                "induced map fails to be surjective at level " + std::to_string(n));
        return hs.element_cycle(*pre);
    };

    std::vector<IntVec> x(top + 1);
    x[0] = pull_class(0, y.cycles[0]);
    for (int n = 0; n < top; ++n) {
        IntVec cand = pull_class(n + 1, y.cycles[n + 1]);
        IntVec mismatch = vec_sub(t.q(n + 1).apply(k, cand), x[n]);
        auto nh = solve_boundary(t.window[n], k, mismatch);
        require(nh.has_value(), "NotEquivalence",
                "mismatch class fails to vanish at level " + std::to_string(n));
        auto lifted = solve_lift(t.q(n + 1), k + 1, nh->bounding_chain);
        require(lifted.has_value(), "NoLift",
                "no lift through the structure map at level " + std::to_string(n + 1));
        x[n + 1] = vec_sub(cand, t.window[n + 1].boundary(k + 1).apply(*lifted));
    }

    LimCycleRecipe out = validate_recipe(t, k, std::move(x));
    for (int n = 0; n <= top; ++n) {
        HomologyData ht = homology_or_trivial(s.window[n], k);
        require(ht.class_of(f.levels[n].apply(k, out.cycles[n])) == ht.class_of(y.cycles[n]),
                "TowerError", "lift missed the prescribed class at level " + std::to_string(n));
    }
    return out;
}

void MilnorReport::add(CheckItem item)
{
    all_pass = all_pass && item.pass;
    items.push_back(std::move(item));
}

AbelianTower homology_tower(const ChainTower& t, int degree)
{
    std::vector<FgAbGroup> groups;
    std::vector<HomologyData> data;
    for (const ChainComplex& c : t.window) {
        data.push_back(homology_or_trivial(c, degree));
        groups.push_back(data.back().group());
    }
    std::vector<GroupHom> maps;
    for (int n = 1; n <= t.top_level(); ++n)
        maps.push_back(induced_hom(t.q(n), degree, data[n], data[n - 1]));
    std::optional<GroupHom> endo;
    if (t.tail == TailKind::Periodic)
        endo = induced_hom(*t.tail_endo, degree, data.back(), data.back());
    return AbelianTower(std::move(groups), std::move(maps), t.tail, std::move(endo));
}

namespace {

bool hom_equal(const GroupHom& a, const GroupHom& b)
{
    if (!(a.domain == b.domain) || !(a.codomain == b.codomain))
        return false;
    for (int j = 0; j < a.domain.dims(); ++j) {
        IntVec e = zero_vec(a.domain.dims());
        e[j] = 1;
        if (a.apply(e) != b.apply(e))
            return false;
    }
    return true;
}

} // namespace

MilnorReport milnor_window_check(const ChainTower& t, int degree)
{
    require(t.tail != TailKind::Periodic, "Unsupported",
            "window check needs a trivial or constant tail");
    const int top = t.top_level();
    if (!t.all_surjective) {
        std::string bad;
        for (int n = 1; n <= top; ++n)
            if (!t.surjective[n - 1])
                bad += (bad.empty() ? "" : ", ") + std::to_string(n);
        fail("HypothesisViolated",
             "structure maps are not degreewise surjective at levels " + bad);
    }

    MilnorReport rep;
    rep.degree = degree;
    rep.add({"maps_degreewise_surjective", true, {}});

    // the window limit complex and its projections
    ChainComplex lim_cx = t.tail == TailKind::Trivial ? ChainComplex::zero() : t.window[top];
    std::vector<ChainMap> proj(top + 1);
    if (t.tail == TailKind::Trivial) {
        for (int n = 0; n <= top; ++n)
            proj[n] = ChainMap::zero(lim_cx, t.window[n]);
    } else {
        proj[top] = ChainMap::identity(lim_cx);
        for (int n = top; n >= 1; --n)
            proj[n - 1] = ChainMap::compose(t.q(n), proj[n]);
    }

    HomologyData h_lim = homology_or_trivial(lim_cx, degree);

    AbelianTower hk = homology_tower(t, degree);
    AbelianLimResult lim_h = lim_of_tower(hk);

    Lim1Result l1 = lim1_abelian(homology_tower(t, degree + 1));
    bool lim1_trivial = l1.group.has_value() && l1.group->trivial();
    rep.add({"lim1_term_trivial",
             lim1_trivial,
             {{"lim1", l1.group ? l1.group->str() : std::string("not computed")}}});

    // P out of the homology of the limit complex, landing in lim of the
    // homology tower (for these tails the latter's group is the top one)
    HomologyData h_top = homology_or_trivial(t.window[top], degree);
    GroupHom p = t.tail == TailKind::Trivial
                     ? GroupHom::zero(h_lim.group(), lim_h.group)
                     : induced_hom(proj[top], degree, h_lim, h_top);

    rep.add({"P_surjective", p.is_surjective(), {{"image", lim_h.group.str()}}});
    rep.add({"P_injective", p.kernel_trivial(), {}});
    rep.add({"P_isomorphism_onto_lim",
             p.is_isomorphism(),
             {{"H_k_of_lim", h_lim.group().str()}, {"lim_H_k", lim_h.group.str()}}});

    bool compat = true;
    for (int n = 0; n <= top; ++n) {
        HomologyData h_n = homology_or_trivial(t.window[n], degree);
        GroupHom via_lim = GroupHom::compose(lim_h.projections[n], p);
        GroupHom direct = induced_hom(proj[n], degree, h_lim, h_n);
        compat = compat && hom_equal(via_lim, direct);
    }
    rep.add({"projection_compatibility", compat, {}});

    rep.add({"sequence_exact",
             lim1_trivial && p.is_surjective() && p.kernel_trivial(),
             {{"kernel", "trivial"}, {"cokernel", "trivial"}}});
    return rep;
}

} // namespace limtower
