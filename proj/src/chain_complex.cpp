#include "limtower/chain_complex.hpp"

namespace limtower {

ChainComplex::ChainComplex(std::vector<int> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries))
{
    require(!ranks_.empty(), "ComplexError", "a complex needs at least degree 0");
    for (int r : ranks_)
        require(r >= 0, "ComplexError", "negative rank");
    require(boundaries_.size() + 1 == ranks_.size(), "ComplexError",
            "need one boundary matrix per degree 1..top");
    for (int k = 1; k <= top_degree(); ++k) {
        const IntMatrix& d = boundaries_[k - 1];
        require(d.rows() == ranks_[k - 1] && d.cols() == ranks_[k], "ComplexError",
                "boundary matrix shape mismatch at degree " + std::to_string(k));
    }
    for (int k = 2; k <= top_degree(); ++k)
        require(boundaries_[k - 2].mul(boundaries_[k - 1]).is_zero(), "ComplexError",
                "d.d != 0 at degree " + std::to_string(k));
}

ChainComplex ChainComplex::zero() { return ChainComplex({0}, {}); }

ChainComplex ChainComplex::free_in_degree(int degree, int n)
{
    std::vector<int> ranks(degree + 1, 0);
    ranks[degree] = n;
    std::vector<IntMatrix> bd;
    for (int k = 1; k <= degree; ++k)
        bd.emplace_back(ranks[k - 1], ranks[k]);
    return ChainComplex(std::move(ranks), std::move(bd));
}

ChainComplex ChainComplex::direct_sum(const ChainComplex& a, const ChainComplex& b)
{
    int top = std::max(a.top_degree(), b.top_degree());
    std::vector<int> ranks(top + 1);
    for (int k = 0; k <= top; ++k)
        ranks[k] = a.rank(k) + b.rank(k);
    std::vector<IntMatrix> bd;
    for (int k = 1; k <= top; ++k) {
        IntMatrix d(ranks[k - 1], ranks[k]);
        d.set_block(0, 0, a.boundary(k));
        d.set_block(a.rank(k - 1), a.rank(k), b.boundary(k));
        bd.push_back(std::move(d));
    }
    return ChainComplex(std::move(ranks), std::move(bd));
}

IntMatrix ChainComplex::boundary(int k) const
{
    if (k >= 1 && k <= top_degree())
        return boundaries_[k - 1];
    return IntMatrix(rank(k - 1), rank(k));
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<IntMatrix> degree_matrices)
    : source_(std::move(source)), target_(std::move(target)), f_(std::move(degree_matrices))
{
    int top = std::max(source_.top_degree(), target_.top_degree());
    require(static_cast<int>(f_.size()) == top + 1, "ChainMapError",
            "need one matrix per degree 0..max top degree");
    for (int k = 0; k <= top; ++k)
        require(f_[k].rows() == target_.rank(k) && f_[k].cols() == source_.rank(k),
                "ChainMapError", "degree matrix shape mismatch at degree " + std::to_string(k));
    for (int k = 1; k <= top; ++k) {
        IntMatrix lhs = target_.boundary(k).mul(f_[k]);
        IntMatrix rhs = matrix(k - 1).mul(source_.boundary(k));
        require(lhs == rhs, "ChainMapError",
                "not a chain map: d f != f d at degree " + std::to_string(k));
    }
}

ChainMap ChainMap::identity(const ChainComplex& c)
{
    std::vector<IntMatrix> f;
    for (int k = 0; k <= c.top_degree(); ++k)
        f.push_back(IntMatrix::identity(c.rank(k)));
    return ChainMap(c, c, std::move(f));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target)
{
    std::vector<IntMatrix> f;
    int top = std::max(source.top_degree(), target.top_degree());
    for (int k = 0; k <= top; ++k)
        f.emplace_back(target.rank(k), source.rank(k));
    return ChainMap(source, target, std::move(f));
}

ChainMap ChainMap::scalar(const ChainComplex& c, const Int& m)
{
    std::vector<IntMatrix> f;
    for (int k = 0; k <= c.top_degree(); ++k)
        f.push_back(IntMatrix::identity(c.rank(k)).scaled(m));
    return ChainMap(c, c, std::move(f));
}

ChainMap ChainMap::compose(const ChainMap& g, const ChainMap& f)
{
    require(f.target() == g.source(), "ChainMapError", "composition domain mismatch");
    std::vector<IntMatrix> m;
    int top = std::max(f.source().top_degree(), g.target().top_degree());
    for (int k = 0; k <= top; ++k)
        m.push_back(g.matrix(k).mul(f.matrix(k)));
    return ChainMap(f.source(), g.target(), std::move(m));
}

IntMatrix ChainMap::matrix(int k) const
{
    if (k >= 0 && k < static_cast<int>(f_.size()))
        return f_[k];
    return IntMatrix(target_.rank(k), source_.rank(k));
}

IntVec ChainMap::apply(int k, const IntVec& v) const { return matrix(k).apply(v); }

bool ChainMap::is_degreewise_surjective() const
{
    for (int k = 0; k <= target_.top_degree(); ++k) {
        if (target_.rank(k) == 0)
            continue;
        SmithForm sf = smith_normal_form(matrix(k));
        if (sf.rank < target_.rank(k))
            return false;
        bool all_one = true;
        for (const Int& d : sf.invariants())
            all_one = all_one && d == 1;
        if (!all_one)
            return false;
    }
    return true;
}

HomologyData::HomologyData(const ChainComplex& c, int degree) : degree_(degree), complex_(c)
{
    IntMatrix dk = c.boundary(degree);
    kernel_ = kernel_basis(dk);
    kernel_sf_ = smith_normal_form(kernel_);
    // image generators of d_{k+1} written in the kernel basis
    IntMatrix dk1 = c.boundary(degree + 1);
    IntMatrix rels(kernel_.cols(), dk1.cols());
    for (int j = 0; j < dk1.cols(); ++j) {
        auto y = solve_with(kernel_sf_, dk1.col_vec(j));
        require(y.has_value(), "ComplexError", "boundary image escapes the cycle lattice");
        for (int i = 0; i < kernel_.cols(); ++i)
            rels.at(i, j) = (*y)[i];
    }
    pres_ = classify_quotient(kernel_.cols(), rels);
}

bool HomologyData::is_cycle(const IntVec& chain) const
{
    return vec_is_zero(complex_.boundary(degree_).apply(chain));
}

IntVec HomologyData::class_of(const IntVec& cycle) const
{
    require(static_cast<int>(cycle.size()) == complex_.rank(degree_), "DimensionError",
            "cycle length does not match the degree rank");
    require(is_cycle(cycle), "NotACycle", "chain has nonzero boundary");
    auto y = solve_with(kernel_sf_, cycle);
    require(y.has_value(), "NotACycle", "cycle is not in the kernel lattice");
    return pres_.project(*y);
}

IntVec HomologyData::generator_cycle(int coord) const
{
    return kernel_.apply(pres_.gen_lift(coord));
}

IntVec HomologyData::element_cycle(const IntVec& class_coords) const
{
    require(static_cast<int>(class_coords.size()) == group().dims(), "DimensionError",
            "class coordinate length mismatch");
    IntVec z = zero_vec(complex_.rank(degree_));
    for (int i = 0; i < group().dims(); ++i)
        if (class_coords[i] != 0)
            z = vec_add(z, vec_scaled(generator_cycle(i), class_coords[i]));
    return z;
}

bool HomologyData::same_class(const IntVec& cycle_a, const IntVec& cycle_b) const
{
    return class_of(cycle_a) == class_of(cycle_b);
}

HomologyData homology(const ChainComplex& c, int degree)
{
    require(degree >= 0 && degree <= c.top_degree(), "DegreeError",
            "degree " + std::to_string(degree) + " outside 0.." + std::to_string(c.top_degree()));
    return HomologyData(c, degree);
}

HomologyData homology_or_trivial(const ChainComplex& c, int degree)
{
    if (degree >= 0 && degree <= c.top_degree())
        return HomologyData(c, degree);
    return HomologyData(); // trivial group, no cycles
}

std::optional<Nullhomotopy> solve_boundary(const ChainComplex& c, int degree, const IntVec& cycle)
{
    require(static_cast<int>(cycle.size()) == c.rank(degree), "DimensionError",
            "cycle length does not match the degree rank");
    require(vec_is_zero(c.boundary(degree).apply(cycle)), "NotACycle",
            "chain has nonzero boundary");
    auto b = solve_integer_system(c.boundary(degree + 1), cycle);
    if (!b)
        return std::nullopt;
    return Nullhomotopy{degree, std::move(*b), cycle};
}

std::optional<IntVec> solve_lift(const ChainMap& q, int degree, const IntVec& y)
{
    return solve_integer_system(q.matrix(degree), y);
}

GroupHom induced_hom(const ChainMap& f, int degree, const HomologyData& h_src,
                     const HomologyData& h_tgt)
{
    IntMatrix m(h_tgt.group().dims(), h_src.group().dims());
    for (int j = 0; j < h_src.group().dims(); ++j) {
        IntVec img = f.apply(degree, h_src.generator_cycle(j));
        IntVec cls = h_tgt.class_of(img);
        for (int i = 0; i < m.rows(); ++i)
            m.at(i, j) = cls[i];
    }
    return GroupHom(h_src.group(), h_tgt.group(), std::move(m));
}

QuasiIsoReport is_quasi_iso(const ChainMap& f)
{
    QuasiIsoReport rep;
    rep.quasi_iso = true;
    int top = std::max(f.source().top_degree(), f.target().top_degree());
    for (int k = 0; k <= top; ++k) {
        HomologyData hs = homology_or_trivial(f.source(), k);
        HomologyData ht = homology_or_trivial(f.target(), k);
        bool iso;
        if (hs.group().trivial() && ht.group().trivial())
            iso = true;
        else
            iso = induced_hom(f, k, hs, ht).is_isomorphism();
        rep.degrees.push_back({k, hs.group(), ht.group(), iso});
        rep.quasi_iso = rep.quasi_iso && iso;
    }
    return rep;
}

PathReplacement path_fibration_replace(const ChainMap& f)
{
    const ChainComplex& a = f.source();
    const ChainComplex& b = f.target();
    int top = std::max(a.top_degree(), b.top_degree());

    std::vector<int> ranks(top + 1);
    for (int k = 0; k <= top; ++k)
        ranks[k] = a.rank(k) + b.rank(k) + b.rank(k + 1);

    std::vector<IntMatrix> bd;
    for (int k = 1; k <= top; ++k) {
        IntMatrix d(ranks[k - 1], ranks[k]);
        int ra = a.rank(k - 1), rb = b.rank(k - 1);
        d.set_block(0, 0, a.boundary(k));
        d.set_block(ra, a.rank(k), b.boundary(k));
        // h-component of the image: x - f(a) - dh
        d.set_block(ra + rb, 0, f.matrix(k).negated());
        d.set_block(ra + rb, a.rank(k), IntMatrix::identity(b.rank(k)));
        d.set_block(ra + rb, a.rank(k) + b.rank(k), b.boundary(k + 1).negated());
        bd.push_back(std::move(d));
    }
    ChainComplex e(std::move(ranks), std::move(bd));

    std::vector<IntMatrix> jm, evm;
    for (int k = 0; k <= top; ++k) {
        IntMatrix j(e.rank(k), a.rank(k));
        j.set_block(0, 0, IntMatrix::identity(a.rank(k)));
        j.set_block(a.rank(k), 0, f.matrix(k));
        jm.push_back(std::move(j));

        IntMatrix ev(b.rank(k), e.rank(k));
        ev.set_block(0, a.rank(k), IntMatrix::identity(b.rank(k)));
        evm.push_back(std::move(ev));
    }
    ChainMap j(a, e, std::move(jm));
    ChainMap ev1(e, b, std::move(evm));
    return PathReplacement{std::move(e), std::move(j), std::move(ev1)};
}

} // namespace limtower
