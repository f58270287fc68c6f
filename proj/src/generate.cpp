#include "limtower/generate.hpp"

#include <algorithm>
#include <map>

namespace limtower {

bool gen_params_valid(const GenParams& p)
{
    return p.window >= 0 && p.window <= 6 && p.max_rank >= 1 && p.max_rank <= 5 &&
           p.top_degree >= 0 && p.top_degree <= 3 && p.max_entry >= 1 && p.max_entry <= 4 &&
           p.mix_ops >= 0 && p.mix_ops <= 16;
}

FgAbGroup random_finite_abelian(Rng& rng, long max_order)
{
    // invariant factor chains with product bounded by max_order
    IntVec tors;
    Int order = 1;
    const long factor_choices[] = {2, 2, 2, 3, 4};
    Int d = 1;
    while (true) {
        long f = factor_choices[rng.below(5)];
        d = (d == 1) ? Int(f) : d * f; // each factor a multiple of the previous
        if (order * d > max_order)
            break;
        tors.push_back(d);
        order *= d;
        if (rng.below(2) == 0)
            break;
    }
    std::sort(tors.begin(), tors.end());
    return FgAbGroup(0, std::move(tors));
}

FgAbGroup random_fg_abelian(Rng& rng, int max_free, long max_torsion_factor)
{
    int free = static_cast<int>(rng.range(0, max_free));
    IntVec tors;
    Int d = 1;
    int count = static_cast<int>(rng.range(0, 2));
    for (int i = 0; i < count; ++i) {
        d = d * rng.range(2, std::max<long>(2, max_torsion_factor));
        tors.push_back(d);
    }
    return FgAbGroup(free, std::move(tors));
}

GroupHom random_hom(Rng& rng, const FgAbGroup& dom, const FgAbGroup& cod, long max_entry)
{
    IntMatrix m(cod.dims(), dom.dims());
    for (int j = 0; j < dom.dims(); ++j) {
        bool dom_torsion = j >= dom.free_rank;
        Int dj = dom_torsion ? dom.torsion[j - dom.free_rank] : Int(0);
        for (int i = 0; i < cod.dims(); ++i) {
            if (i < cod.free_rank) {
                // free target coordinate: torsion generators must map to zero
                m.at(i, j) = dom_torsion ? Int(0) : Int(rng.range(-max_entry, max_entry));
            } else {
                Int ei = cod.torsion[i - cod.free_rank];
                if (!dom_torsion) {
                    m.at(i, j) = Int(rng.range(0, 1 << 14)) % ei;
                } else {
                    Int g;
                    mpz_gcd(g.get_mpz_t(), ei.get_mpz_t(), dj.get_mpz_t());
                    Int step = ei / g; // admissible images are multiples of ei/gcd
                    Int t = Int(rng.range(0, 1 << 14)) % g;
                    m.at(i, j) = step * t;
                }
            }
        }
    }
    return GroupHom(dom, cod, std::move(m));
}

AbelianTower random_abelian_tower(Rng& rng, const GenParams& p, TailKind tail,
                                  bool finite_groups, long max_order)
{
    std::vector<FgAbGroup> window;
    for (int n = 0; n <= p.window; ++n)
        window.push_back(finite_groups ? random_finite_abelian(rng, max_order)
                                       : random_fg_abelian(rng, p.max_rank, 4));
    std::vector<GroupHom> maps;
    for (int n = 1; n <= p.window; ++n)
        maps.push_back(random_hom(rng, window[n], window[n - 1], p.max_entry));
    std::optional<GroupHom> endo;
    if (tail == TailKind::Periodic)
        endo = random_hom(rng, window.back(), window.back(), p.max_entry);
    return AbelianTower(std::move(window), std::move(maps), tail, std::move(endo));
}

namespace {

const std::vector<CayleyTable>& finite_catalog()
{
    static const std::vector<CayleyTable> cat = [] {
        std::vector<CayleyTable> v;
        v.push_back(CayleyTable()); // trivial
        v.push_back(CayleyTable::cyclic(2));
        v.push_back(CayleyTable::cyclic(3));
        v.push_back(CayleyTable::cyclic(4));
        v.push_back(CayleyTable::from_invariant_factors({2, 2}));
        v.push_back(CayleyTable::cyclic(6));
        v.push_back(CayleyTable::symmetric3());
        v.push_back(CayleyTable::dihedral4());
        return v;
    }();
    return cat;
}

const std::vector<IndexMap>& homs_between(const CayleyTable& dom, const CayleyTable& cod)
{
    static std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<IndexMap>> cache;
    auto key = std::make_pair(dom.table, cod.table);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, all_homomorphisms(dom, cod)).first;
    return it->second;
}

} // namespace

FiniteGroupTower random_finite_tower(Rng& rng, const GenParams& p, TailKind tail)
{
    const auto& cat = finite_catalog();
    std::vector<CayleyTable> window;
    for (int n = 0; n <= p.window; ++n)
        window.push_back(cat[rng.below(cat.size())]);
    std::vector<IndexMap> maps;
    for (int n = 1; n <= p.window; ++n) {
        const auto& homs = homs_between(window[n], window[n - 1]);
        maps.push_back(homs[rng.below(homs.size())]);
    }
    std::optional<IndexMap> endo;
    if (tail == TailKind::Periodic) {
        const auto& homs = homs_between(window.back(), window.back());
        endo = homs[rng.below(homs.size())];
    }
    return FiniteGroupTower(std::move(window), std::move(maps), tail, std::move(endo));
}

FiniteGroupTower random_nonabelian_constant_tower(Rng& rng, int window, TailKind tail,
                                                  bool dihedral)
{
    CayleyTable g = dihedral ? CayleyTable::dihedral4() : CayleyTable::symmetric3();
    const auto& homs = homs_between(g, g);
    std::vector<CayleyTable> w(window + 1, g);
    std::vector<IndexMap> maps;
    for (int n = 1; n <= window; ++n)
        maps.push_back(homs[rng.below(homs.size())]);
    std::optional<IndexMap> endo;
    if (tail == TailKind::Periodic)
        endo = homs[rng.below(homs.size())];
    return FiniteGroupTower(std::move(w), std::move(maps), tail, std::move(endo));
}

namespace {

/* Unimodular mix, accumulated together with its inverse. */
struct Mixer {
    IntMatrix a, a_inv;

    explicit Mixer(int n) : a(IntMatrix::identity(n)), a_inv(IntMatrix::identity(n)) {}

    void randomize(Rng& rng, int ops, long max_entry)
    {
        const int n = a.rows();
        if (n < 1)
            return;
        for (int s = 0; s < ops; ++s) {
            switch (rng.below(3)) {
            case 0: {
                int i = static_cast<int>(rng.below(n)), j = static_cast<int>(rng.below(n));
                a.swap_rows(i, j);
                a_inv.swap_cols(i, j);
                break;
            }
            case 1: {
                int i = static_cast<int>(rng.below(n));
                a.negate_row(i);
                a_inv.negate_col(i);
                break;
            }
            default: {
                int i = static_cast<int>(rng.below(n)), j = static_cast<int>(rng.below(n));
                if (i == j)
                    break;
                Int c(rng.range(-max_entry, max_entry));
                a.add_row(i, j, c);
                a_inv.add_col(j, i, -c);
                break;
            }
            }
        }
    }
};

// block-built complex: elementary two-term pieces plus free generators
ChainComplex random_block_complex(Rng& rng, const GenParams& p)
{
    const int top = p.top_degree;
    // pairs[d]: multiplicities m for summands Z --m--> Z spanning degrees (d, d-1)
    std::vector<std::vector<long>> pairs(top + 1);
    for (int d = 1; d <= top; ++d) {
        int count = static_cast<int>(rng.range(0, std::max(1, p.max_rank / 2)));
        for (int i = 0; i < count; ++i)
            pairs[d].push_back(rng.range(-p.max_entry, p.max_entry));
    }
    std::vector<int> frees(top + 1, 0);
    for (int d = 0; d <= top; ++d)
        frees[d] = static_cast<int>(rng.range(0, 1));
    if (frees[0] == 0 && pairs.size() > 1 && pairs[1].empty() && rng.below(2) == 0)
        frees[0] = 1;

    std::vector<int> ranks(top + 1, 0);
    for (int d = 0; d <= top; ++d) {
        ranks[d] = frees[d] + static_cast<int>(pairs[d].size());
        if (d + 1 <= top)
            ranks[d] += static_cast<int>(pairs[d + 1].size());
    }

    /* Layout in degree d: [targets of pairs[d+1] | sources of pairs[d] | frees]. */
    std::vector<IntMatrix> bd;
    for (int d = 1; d <= top; ++d) {
        IntMatrix m(ranks[d - 1], ranks[d]);
        int tgt_off_above = (d + 1 <= top) ? static_cast<int>(pairs[d + 1].size()) : 0;
        for (std::size_t i = 0; i < pairs[d].size(); ++i)
            m.at(static_cast<int>(i), tgt_off_above + static_cast<int>(i)) = pairs[d][i];
        bd.push_back(std::move(m));
    }
    return ChainComplex(std::move(ranks), std::move(bd));
}

ChainComplex mix_complex(Rng& rng, const ChainComplex& c, const GenParams& p)
{
    std::vector<Mixer> mixers;
    for (int k = 0; k <= c.top_degree(); ++k) {
        Mixer m(c.rank(k));
        m.randomize(rng, p.mix_ops, p.max_entry);
        mixers.push_back(std::move(m));
    }
    std::vector<IntMatrix> bd;
    for (int k = 1; k <= c.top_degree(); ++k)
        bd.push_back(mixers[k - 1].a.mul(c.boundary(k)).mul(mixers[k].a_inv));
    return ChainComplex(c.ranks(), std::move(bd));
}

} // namespace

ChainComplex random_chain_complex(Rng& rng, const GenParams& p)
{
    return mix_complex(rng, random_block_complex(rng, p), p);
}

ChainMap random_chain_map(Rng& rng, const GenParams& p)
{
    switch (rng.below(5)) {
    case 0: { // isomorphism given by a basis mix
        ChainComplex a = random_chain_complex(rng, p);
        std::vector<Mixer> mixers;
        for (int k = 0; k <= a.top_degree(); ++k) {
            Mixer m(a.rank(k));
            m.randomize(rng, p.mix_ops, p.max_entry);
            mixers.push_back(std::move(m));
        }
        std::vector<IntMatrix> bd;
        for (int k = 1; k <= a.top_degree(); ++k)
            bd.push_back(mixers[k - 1].a.mul(a.boundary(k)).mul(mixers[k].a_inv));
        ChainComplex b(a.ranks(), std::move(bd));
        std::vector<IntMatrix> f;
        for (int k = 0; k <= a.top_degree(); ++k)
            f.push_back(mixers[k].a);
        return ChainMap(a, b, std::move(f));
    }
    case 1: // zero map
        return ChainMap::zero(random_chain_complex(rng, p), random_chain_complex(rng, p));
    case 2: // scalar
        return ChainMap::scalar(random_chain_complex(rng, p), Int(rng.range(-3, 3)));
    case 3: { // inclusion into a direct sum
        ChainComplex a = random_chain_complex(rng, p);
        ChainComplex c = random_chain_complex(rng, p);
        ChainComplex b = ChainComplex::direct_sum(a, c);
        std::vector<IntMatrix> f;
        int top = std::max(a.top_degree(), b.top_degree());
        for (int k = 0; k <= top; ++k) {
            IntMatrix m(b.rank(k), a.rank(k));
            m.set_block(0, 0, IntMatrix::identity(a.rank(k)));
            f.push_back(std::move(m));
        }
        return ChainMap(a, b, std::move(f));
    }
    default: { // projection out of a direct sum
        ChainComplex b = random_chain_complex(rng, p);
        ChainComplex c = random_chain_complex(rng, p);
        ChainComplex a = ChainComplex::direct_sum(b, c);
        std::vector<IntMatrix> f;
        int top = std::max(a.top_degree(), b.top_degree());
        for (int k = 0; k <= top; ++k) {
            IntMatrix m(b.rank(k), a.rank(k));
            m.set_block(0, 0, IntMatrix::identity(b.rank(k)));
            f.push_back(std::move(m));
        }
        return ChainMap(a, b, std::move(f));
    }
    }
}

ChainTower random_chain_tower(Rng& rng, const GenParams& p, TailKind tail)
{
    /* Core with scalar structure maps plus per-level junk summands mapping to
     * zero; each level's basis is mixed unimodularly. */
    GenParams block_p = p;
    ChainComplex core = random_block_complex(rng, block_p);
    Int m(rng.range(-p.max_entry, p.max_entry));

    std::vector<ChainComplex> plain;
    for (int n = 0; n <= p.window; ++n)
        plain.push_back(ChainComplex::direct_sum(core, random_block_complex(rng, block_p)));

    std::vector<std::vector<Mixer>> mixers(p.window + 1);
    std::vector<ChainComplex> window;
    for (int n = 0; n <= p.window; ++n) {
        std::vector<Mixer> mx;
        for (int k = 0; k <= plain[n].top_degree(); ++k) {
            Mixer mix(plain[n].rank(k));
            mix.randomize(rng, p.mix_ops, p.max_entry);
            mx.push_back(std::move(mix));
        }
        std::vector<IntMatrix> bd;
        for (int k = 1; k <= plain[n].top_degree(); ++k)
            bd.push_back(mx[k - 1].a.mul(plain[n].boundary(k)).mul(mx[k].a_inv));
        window.emplace_back(plain[n].ranks(), std::move(bd));
        mixers[n] = std::move(mx);
    }

    auto scalar_block = [&](int n, int k) {
        IntMatrix f(plain[n - 1].rank(k), plain[n].rank(k));
        f.set_block(0, 0, IntMatrix::identity(core.rank(k)).scaled(m));
        return f;
    };

    std::vector<ChainMap> maps;
    for (int n = 1; n <= p.window; ++n) {
        std::vector<IntMatrix> f;
        int top = std::max(plain[n].top_degree(), plain[n - 1].top_degree());
        for (int k = 0; k <= top; ++k)
            f.push_back(mixers[n - 1][k].a.mul(scalar_block(n, k)).mul(mixers[n][k].a_inv));
        maps.emplace_back(window[n], window[n - 1], std::move(f));
    }

    std::optional<ChainMap> endo;
    if (tail == TailKind::Periodic) {
        int n = p.window;
        std::vector<IntMatrix> f;
        for (int k = 0; k <= plain[n].top_degree(); ++k) {
            IntMatrix s(plain[n].rank(k), plain[n].rank(k));
            s.set_block(0, 0, IntMatrix::identity(core.rank(k)).scaled(m));
            f.push_back(mixers[n][k].a.mul(s).mul(mixers[n][k].a_inv));
        }
        endo = ChainMap(window[n], window[n], std::move(f));
    }
    return ChainTower(std::move(window), std::move(maps), tail, std::move(endo));
}

ChainTower scalar_tower(int window, int degree, const Int& m, TailKind tail)
{
    ChainComplex c = ChainComplex::free_in_degree(degree);
    std::vector<ChainComplex> w(window + 1, c);
    std::vector<ChainMap> maps;
    for (int n = 1; n <= window; ++n)
        maps.push_back(ChainMap::scalar(c, m));
    std::optional<ChainMap> endo;
    if (tail == TailKind::Periodic)
        endo = ChainMap::scalar(c, m);
    return ChainTower(std::move(w), std::move(maps), tail, std::move(endo));
}

IntVec random_cycle(Rng& rng, const ChainComplex& c, int degree, long max_coeff)
{
    if (degree < 0 || degree > c.top_degree())
        return IntVec{};
    IntMatrix k = kernel_basis(c.boundary(degree));
    IntVec coeffs(k.cols());
    for (int i = 0; i < k.cols(); ++i)
        coeffs[i] = rng.range(-max_coeff, max_coeff);
    return k.apply(coeffs);
}

IntVec random_chain(Rng& rng, const ChainComplex& c, int degree, long max_coeff)
{
    IntVec v = zero_vec(c.rank(degree));
    for (auto& x : v)
        x = rng.range(-max_coeff, max_coeff);
    return v;
}

LimCycleRecipe random_exact_recipe(Rng& rng, const ChainTower& t, int degree, long max_coeff)
{
    const int top = t.top_level();
    std::vector<IntVec> z(top + 1);
    z[top] = random_cycle(rng, t.window[top], degree, max_coeff);
    if (static_cast<int>(z[top].size()) != t.window[top].rank(degree))
        z[top] = zero_vec(t.window[top].rank(degree));
    for (int n = top; n >= 1; --n)
        z[n - 1] = t.q(n).apply(degree, z[n]);
    return validate_recipe(t, degree, std::move(z));
}

} // namespace limtower
