#include "limtower/cayley.hpp"

#include <array>

namespace limtower {

CayleyTable::CayleyTable() : order(1), table{0}, inverse{0} {}

CayleyTable::CayleyTable(int n, std::vector<int> t) : order(n), table(std::move(t))
{
    require(n >= 1, "TowerError", "group order must be positive");
    require(table.size() == static_cast<std::size_t>(n) * n, "TowerError",
            "multiplication table size mismatch");
    for (int x : table)
        require(x >= 0 && x < n, "TowerError", "table entry out of range");
    for (int a = 0; a < n; ++a) {
        require(mul(0, a) == a && mul(a, 0) == a, "TowerError", "index 0 is not an identity");
    }
    inverse.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inverse[a] = b;
                break;
            }
        require(inverse[a] >= 0, "TowerError", "element without inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                require(mul(mul(a, b), c) == mul(a, mul(b, c)), "TowerError",
                        "multiplication table is not associative");
}

CayleyTable CayleyTable::cyclic(int n)
{
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    return CayleyTable(n, std::move(t));
}

CayleyTable CayleyTable::direct_product(const CayleyTable& a, const CayleyTable& b)
{
    int n = a.order * b.order;
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    auto idx = [&](int x, int y) { return x * b.order + y; };
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2)
                    t[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
                        idx(a.mul(x1, x2), b.mul(y1, y2));
    return CayleyTable(n, std::move(t));
}

CayleyTable CayleyTable::symmetric3()
{
    // permutations of {0,1,2} in lexicographic order; index 0 is the identity
    static const std::array<std::array<int, 3>, 6> perms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto find = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p)
                return i;
        return -1;
    };
    std::vector<int> t(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c; // a after b
            for (int x = 0; x < 3; ++x)
                c[x] = perms[a][perms[b][x]];
            t[static_cast<std::size_t>(a) * 6 + b] = find(c);
        }
    return CayleyTable(6, std::move(t));
}

CayleyTable CayleyTable::dihedral4()
{
    // r^i s^j with 0 <= i < 4, j in {0,1}, index = i + 4j; s r = r^-1 s
    int n = 8;
    std::vector<int> t(64);
    auto idx = [](int i, int j) { return i + 4 * j; };
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = ((j1 ? (i1 - i2) : (i1 + i2)) % 4 + 4) % 4;
                    int j = j1 ^ j2;
                    t[static_cast<std::size_t>(idx(i1, j1)) * n + idx(i2, j2)] = idx(i, j);
                }
    return CayleyTable(n, std::move(t));
}

CayleyTable CayleyTable::from_invariant_factors(const std::vector<int>& factors)
{
    CayleyTable g = cyclic(1);
    for (int d : factors)
        g = direct_product(g, cyclic(d));
    return g;
}

bool CayleyTable::is_abelian() const
{
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

bool is_homomorphism(const CayleyTable& dom, const CayleyTable& cod, const IndexMap& f)
{
    if (f.image.size() != static_cast<std::size_t>(dom.order))
        return false;
    for (int x : f.image)
        if (x < 0 || x >= cod.order)
            return false;
    if (f.image[0] != 0)
        return false;
    for (int a = 0; a < dom.order; ++a)
        for (int b = 0; b < dom.order; ++b)
            if (f.image[dom.mul(a, b)] != cod.mul(f.image[a], f.image[b]))
                return false;
    return true;
}

namespace {

// small generating set by greedy closure growth
std::vector<int> generating_set(const CayleyTable& g)
{
    std::vector<int> gens;
    std::vector<char> in_closure(g.order, 0);
    in_closure[0] = 1;
    int covered = 1;
    while (covered < g.order) {
        int pick = -1;
        for (int a = 0; a < g.order; ++a)
            if (!in_closure[a]) {
                pick = a;
                break;
            }
        gens.push_back(pick);
        // close under multiplication
        std::vector<int> members;
        for (int a = 0; a < g.order; ++a)
            if (in_closure[a])
                members.push_back(a);
        members.push_back(pick);
        in_closure[pick] = 1;
        bool grew = true;
        while (grew) {
            grew = false;
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = 0; j < members.size(); ++j) {
                    int p = g.mul(members[i], members[j]);
                    if (!in_closure[p]) {
                        in_closure[p] = 1;
                        members.push_back(p);
                        grew = true;
                    }
                }
        }
        covered = static_cast<int>(members.size());
    }
    return gens;
}

} // namespace

std::vector<IndexMap> all_homomorphisms(const CayleyTable& dom, const CayleyTable& cod)
{
    std::vector<int> gens = generating_set(dom);
    // express every element as a word in the generators (BFS)
    std::vector<std::pair<int, int>> parent(dom.order, {-1, -1}); // (previous element, generator)
    std::vector<int> order_found{0};
    std::vector<char> seen(dom.order, 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order_found.size(); ++head) {
        int a = order_found[head];
        for (int gi = 0; gi < static_cast<int>(gens.size()); ++gi) {
            int b = dom.mul(a, gens[gi]);
            if (!seen[b]) {
                seen[b] = 1;
                parent[b] = {a, gi};
                order_found.push_back(b);
            }
        }
    }

    std::vector<IndexMap> homs;
    std::vector<int> choice(gens.size(), 0);
    for (;;) {
        IndexMap f;
        f.image.assign(dom.order, -1);
        f.image[0] = 0;
        for (int a : order_found)
            if (a != 0) {
                auto [prev, gi] = parent[a];
                f.image[a] = cod.mul(f.image[prev], choice[gi]);
            }
        if (is_homomorphism(dom, cod, f))
            homs.push_back(f);
        std::size_t k = 0;
        while (k < choice.size() && ++choice[k] == cod.order) {
            choice[k] = 0;
            ++k;
        }
        if (k == choice.size())
            break;
    }
    return homs;
}

FiniteGroupTower::FiniteGroupTower(std::vector<CayleyTable> w, std::vector<IndexMap> m,
                                   TailKind t, std::optional<IndexMap> endo)
    : window(std::move(w)), maps(std::move(m)), tail(t), tail_endo(std::move(endo))
{
    require(!window.empty(), "TowerError", "tower window must contain level 0");
    require(maps.size() + 1 == window.size(), "TowerError",
            "need one structure map per level 1..N");
    for (std::size_t n = 0; n < maps.size(); ++n)
        require(is_homomorphism(window[n + 1], window[n], maps[n]), "TowerError",
                "structure map is not a homomorphism at level " + std::to_string(n + 1));
    if (tail == TailKind::Periodic) {
        require(tail_endo.has_value(), "TowerError", "periodic tail needs an endomorphism");
        require(is_homomorphism(window.back(), window.back(), *tail_endo), "TowerError",
                "tail endomorphism is not a homomorphism");
    } else {
        require(!tail_endo.has_value(), "TowerError",
                "tail endomorphism only makes sense for a periodic tail");
    }
}

IndexFamily identity_index_family(const FiniteGroupTower& t)
{
    IndexFamily f;
    f.levels.assign(t.window.size(), 0);
    return f;
}

static void check_family(const FiniteGroupTower& t, const IndexFamily& f)
{
    require(f.levels.size() == t.window.size(), "ElementError",
            "family depth does not match the tower window");
    for (std::size_t n = 0; n < f.levels.size(); ++n)
        require(f.levels[n] >= 0 && f.levels[n] < t.window[n].order, "ElementError",
                "element index out of range at level " + std::to_string(n));
}

IndexFamily tower_action(const FiniteGroupTower& t, const IndexFamily& g, const IndexFamily& h)
{
    check_family(t, g);
    check_family(t, h);
    const int top = t.top_level();
    IndexFamily out;
    out.levels.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        int v = t.window[n].mul(g.levels[n], h.levels[n]);
        if (n < top)
            v = t.window[n].mul(v, t.p(n + 1).apply(t.window[n + 1].inv(g.levels[n + 1])));
        out.levels[n] = v; // level N: identity above the window contributes nothing
    }
    return out;
}

IndexFamily family_product(const FiniteGroupTower& t, const IndexFamily& a, const IndexFamily& b)
{
    check_family(t, a);
    check_family(t, b);
    IndexFamily out;
    out.levels.resize(a.levels.size());
    for (std::size_t n = 0; n < a.levels.size(); ++n)
        out.levels[n] = t.window[n].mul(a.levels[n], b.levels[n]);
    return out;
}

OrbitPartition lim1_orbits(const FiniteGroupTower& t, long long bound)
{
    const int top = t.top_level();
    long long product = 1;
    for (const CayleyTable& g : t.window) {
        product *= g.order;
        require(product <= bound, "TooLarge",
                "product set size exceeds the enumeration bound " + std::to_string(bound));
    }

    // mixed-radix index, level 0 most significant
    std::vector<long long> stride(top + 1, 1);
    for (int n = top - 1; n >= 0; --n)
        stride[n] = stride[n + 1] * t.window[n + 1].order;

    auto decode = [&](long long idx) {
        IndexFamily f;
        f.levels.resize(top + 1);
        for (int n = 0; n <= top; ++n) {
            f.levels[n] = static_cast<int>(idx / stride[n]);
            idx %= stride[n];
        }
        return f;
    };
    auto encode = [&](const IndexFamily& f) {
        long long idx = 0;
        for (int n = 0; n <= top; ++n)
            idx += stride[n] * f.levels[n];
        return idx;
    };

    OrbitPartition part;
    part.product_size = product;
    part.label.assign(static_cast<std::size_t>(product), -1);

    /* BFS with one-level moves: acting by g supported at level n multiplies
     * level n on the left by g and level n-1 on the right by p_n(g^-1);
     * these moves generate the whole action. */
    std::vector<long long> queue;
    for (long long base = 0; base < product; ++base) {
        if (part.label[static_cast<std::size_t>(base)] >= 0)
            continue;
        int orbit = part.orbit_count++;
        part.orbit_size.push_back(0);
        part.label[static_cast<std::size_t>(base)] = orbit;
        queue.clear();
        queue.push_back(base);
        while (!queue.empty()) {
            long long cur = queue.back();
            queue.pop_back();
            ++part.orbit_size[orbit];
            IndexFamily h = decode(cur);
            for (int n = 0; n <= top; ++n) {
                const CayleyTable& gn = t.window[n];
                for (int s = 1; s < gn.order; ++s) {
                    IndexFamily moved = h;
                    moved.levels[n] = gn.mul(s, h.levels[n]);
                    if (n > 0)
                        moved.levels[n - 1] =
                            t.window[n - 1].mul(h.levels[n - 1], t.p(n).apply(gn.inv(s)));
                    long long m = encode(moved);
                    if (part.label[static_cast<std::size_t>(m)] < 0) {
                        part.label[static_cast<std::size_t>(m)] = orbit;
                        queue.push_back(m);
                    }
                }
            }
        }
    }
    part.basepoint_orbit = part.label[0];
    return part;
}

namespace {

// subgroup table on a sorted subset of element indices containing 0
CayleyTable subgroup_table(const CayleyTable& g, const std::vector<int>& members,
                           std::vector<int>& reindex)
{
    reindex.assign(g.order, -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        reindex[members[i]] = static_cast<int>(i);
    int n = static_cast<int>(members.size());
    std::vector<int> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int p = g.mul(members[a], members[b]);
            require(reindex[p] >= 0, "TowerError", "subset is not closed under multiplication");
            t[static_cast<std::size_t>(a) * n + b] = reindex[p];
        }
    return CayleyTable(n, std::move(t));
}

} // namespace

FiniteLimResult lim_of_tower(const FiniteGroupTower& t)
{
    const int top = t.top_level();
    FiniteLimResult out;

    auto descend = [&](const IndexMap& top_proj, const CayleyTable& lim_table) {
        std::vector<IndexMap> projs(top + 1);
        projs[top] = top_proj;
        for (int n = top; n >= 1; --n) {
            IndexMap next;
            next.image.resize(lim_table.order);
            for (int a = 0; a < lim_table.order; ++a)
                next.image[a] = t.p(n).apply(projs[n].image[a]);
            projs[n - 1] = std::move(next);
        }
        return projs;
    };

    switch (t.tail) {
    case TailKind::Trivial: {
        out.group = CayleyTable();
        IndexMap to_top;
        to_top.image = {0};
        out.projections = descend(to_top, out.group);
        return out;
    }
    case TailKind::Constant: {
        out.group = t.window[top];
        IndexMap id;
        id.image.resize(out.group.order);
        for (int a = 0; a < out.group.order; ++a)
            id.image[a] = a;
        out.projections = descend(id, out.group);
        return out;
    }
    case TailKind::Periodic:
        break;
    }

    // finite groups: the image chain of the tail endomorphism always stabilizes
    const CayleyTable& g = t.window[top];
    const IndexMap& e = *t.tail_endo;
    std::vector<char> in_image(g.order, 1);
    for (;;) {
        std::vector<char> next(g.order, 0);
        for (int a = 0; a < g.order; ++a)
            if (in_image[a])
                next[e.apply(a)] = 1;
        if (next == in_image)
            break;
        in_image = std::move(next);
    }
    std::vector<int> members;
    for (int a = 0; a < g.order; ++a)
        if (in_image[a])
            members.push_back(a);

    std::vector<int> reindex;
    out.group = subgroup_table(g, members, reindex);
    IndexMap incl;
    incl.image = members;
    out.projections = descend(incl, out.group);
    return out;
}

FiniteGroupTower as_finite_tower(const AbelianTower& t)
{
    require(t.all_finite(), "TowerError", "tower has a group of positive free rank");
    std::vector<CayleyTable> window;
    std::vector<std::vector<Int>> radices;
    for (const FgAbGroup& g : t.window) {
        std::vector<int> factors;
        for (const Int& d : g.torsion) {
            require(d.fits_sint_p(), "TooLarge", "torsion factor too large for a Cayley table");
            factors.push_back(static_cast<int>(d.get_si()));
        }
        window.push_back(CayleyTable::from_invariant_factors(factors));
        radices.push_back(g.torsion);
    }

    // element index <-> torsion coordinate tuple, first coordinate most significant
    auto encode = [](const FgAbGroup& g, const IntVec& v) {
        Int idx = 0;
        for (std::size_t i = 0; i < g.torsion.size(); ++i)
            idx = idx * g.torsion[i] + v[i];
        return static_cast<int>(idx.get_si());
    };
    auto decode = [](const FgAbGroup& g, int index) {
        IntVec v = zero_vec(static_cast<int>(g.torsion.size()));
        Int idx = index;
        for (std::size_t i = g.torsion.size(); i-- > 0;) {
            v[i] = idx % g.torsion[i];
            idx /= g.torsion[i];
        }
        return v;
    };

    auto convert_map = [&](const GroupHom& h) {
        IndexMap f;
        auto ord = h.domain.order();
        f.image.resize(static_cast<std::size_t>(ord->get_si()));
        for (std::size_t a = 0; a < f.image.size(); ++a)
            f.image[a] = encode(h.codomain, h.apply(decode(h.domain, static_cast<int>(a))));
        return f;
    };

    std::vector<IndexMap> maps;
    for (const GroupHom& h : t.maps)
        maps.push_back(convert_map(h));
    std::optional<IndexMap> endo;
    if (t.tail_endo)
        endo = convert_map(*t.tail_endo);
    return FiniteGroupTower(std::move(window), std::move(maps), t.tail, std::move(endo));
}

} // namespace limtower
