#include "limtower/abelian.hpp"

#include <sstream>

namespace limtower {

FgAbGroup::FgAbGroup(int free, IntVec tors) : free_rank(free), torsion(std::move(tors))
{
    require(free_rank >= 0, "HomError", "negative free rank");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        require(torsion[i] >= 2, "HomError", "torsion invariant factor must be >= 2");
        if (i + 1 < torsion.size())
            require(torsion[i + 1] % torsion[i] == 0, "HomError",
                    "invariant factors must form a divisibility chain");
    }
}

std::optional<Int> FgAbGroup::order() const
{
    if (free_rank > 0)
        return std::nullopt;
    Int n = 1;
    for (const Int& d : torsion)
        n *= d;
    return n;
}

IntVec FgAbGroup::reduce(IntVec v) const
{
    require(static_cast<int>(v.size()) == dims(), "ElementError",
            "element length does not match the group");
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        Int& x = v[free_rank + i];
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), torsion[i].get_mpz_t());
    }
    return v;
}

IntMatrix FgAbGroup::relation_columns() const
{
    IntMatrix r(dims(), static_cast<int>(torsion.size()));
    for (std::size_t j = 0; j < torsion.size(); ++j)
        r.at(free_rank + static_cast<int>(j), static_cast<int>(j)) = torsion[j];
    return r;
}

std::string FgAbGroup::str() const
{
    if (trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const Int& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

GroupHom::GroupHom(FgAbGroup dom, FgAbGroup cod, IntMatrix m)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m))
{
    require(matrix.rows() == codomain.dims() && matrix.cols() == domain.dims(), "HomError",
            "homomorphism matrix shape mismatch");
    // a torsion generator of order d must map to an element killed by d
    for (std::size_t j = 0; j < domain.torsion.size(); ++j) {
        IntVec img = matrix.col_vec(domain.free_rank + static_cast<int>(j));
        if (!codomain.is_zero_element(vec_scaled(img, domain.torsion[j])))
            fail("HomError", "map does not respect torsion relations");
    }
}

GroupHom GroupHom::identity(const FgAbGroup& g)
{
    return GroupHom(g, g, IntMatrix::identity(g.dims()));
}

GroupHom GroupHom::zero(const FgAbGroup& dom, const FgAbGroup& cod)
{
    return GroupHom(dom, cod, IntMatrix(cod.dims(), dom.dims()));
}

GroupHom GroupHom::compose(const GroupHom& g, const GroupHom& f)
{
    require(f.codomain == g.domain, "HomError", "composition domain mismatch");
    IntMatrix m = g.matrix.mul(f.matrix);
    // reduce columns to canonical representatives
    for (int j = 0; j < m.cols(); ++j) {
        IntVec c = g.codomain.reduce(m.col_vec(j));
        for (int i = 0; i < m.rows(); ++i)
            m.at(i, j) = c[i];
    }
    return GroupHom(f.domain, g.codomain, std::move(m));
}

IntVec GroupHom::apply(const IntVec& v) const
{
    require(static_cast<int>(v.size()) == domain.dims(), "ElementError",
            "element length does not match the domain");
    return codomain.reduce(matrix.apply(v));
}

std::optional<IntVec> GroupHom::preimage(const IntVec& target) const
{
    IntMatrix sys = matrix.hstack(codomain.relation_columns());
    auto sol = solve_integer_system(sys, codomain.reduce(target));
    if (!sol)
        return std::nullopt;
    IntVec x(sol->begin(), sol->begin() + domain.dims());
    return domain.reduce(std::move(x));
}

bool GroupHom::is_surjective() const { return cokernel_classify(*this).group.trivial(); }

bool GroupHom::kernel_trivial() const
{
    IntMatrix sys = matrix.hstack(codomain.relation_columns());
    IntMatrix k = kernel_basis(sys);
    for (int j = 0; j < k.cols(); ++j) {
        IntVec x(k.col_vec(j).begin(), k.col_vec(j).begin() + domain.dims());
        if (!domain.is_zero_element(x))
            return false;
    }
    return true;
}

bool GroupHom::is_isomorphism() const
{
    // finitely generated abelian groups are Hopfian: a surjection onto a
    // group with the same normal form is already bijective
    return domain == codomain && is_surjective();
}

QuotientPresentation classify_quotient(int n_gens, const IntMatrix& relations)
{
    require(relations.rows() == n_gens, "DimensionError",
            "relation matrix rows must match generator count");
    SmithForm sf = smith_normal_form(relations);
    QuotientPresentation qp;
    qp.n_gens = n_gens;
    qp.u = sf.u;
    qp.u_inv = sf.u_inv;
    qp.rank = sf.rank;
    int first_tor = 0;
    while (first_tor < sf.rank && sf.s.at(first_tor, first_tor) == 1)
        ++first_tor;
    qp.first_torsion = first_tor;
    IntVec tors;
    for (int i = first_tor; i < sf.rank; ++i)
        tors.push_back(sf.s.at(i, i));
    qp.group = FgAbGroup(n_gens - sf.rank, std::move(tors));
    return qp;
}

IntVec QuotientPresentation::project(const IntVec& v) const
{
    require(static_cast<int>(v.size()) == n_gens, "DimensionError",
            "projection input length mismatch");
    IntVec w = u.apply(v);
    IntVec out;
    out.reserve(group.dims());
    for (int i = rank; i < n_gens; ++i)
        out.push_back(w[i]);
    for (int i = first_torsion; i < rank; ++i)
        out.push_back(w[i]);
    return group.reduce(std::move(out));
}

IntVec QuotientPresentation::gen_lift(int coord) const
{
    require(coord >= 0 && coord < group.dims(), "DimensionError", "generator index out of range");
    int row = coord < group.free_rank ? rank + coord
                                      : first_torsion + (coord - group.free_rank);
    return u_inv.col_vec(row);
}

IntMatrix QuotientPresentation::projection_matrix() const
{
    IntMatrix p(group.dims(), n_gens);
    for (int j = 0; j < n_gens; ++j) {
        IntVec e = zero_vec(n_gens);
        e[j] = 1;
        IntVec q = project(e);
        for (int i = 0; i < group.dims(); ++i)
            p.at(i, j) = q[i];
    }
    return p;
}

CokernelResult cokernel_classify(const GroupHom& h)
{
    IntMatrix rels = h.matrix.hstack(h.codomain.relation_columns());
    QuotientPresentation qp = classify_quotient(h.codomain.dims(), rels);
    GroupHom proj(h.codomain, qp.group, qp.projection_matrix());
    return CokernelResult{qp.group, std::move(proj)};
}

SubgroupResult classify_subgroup(const FgAbGroup& ambient, const std::vector<IntVec>& gens)
{
    const int d = ambient.dims();
    const int s = static_cast<int>(gens.size());
    IntMatrix g(d, s);
    for (int j = 0; j < s; ++j) {
        require(static_cast<int>(gens[j].size()) == d, "ElementError",
                "subgroup generator length mismatch");
        IntVec c = ambient.reduce(gens[j]);
        for (int i = 0; i < d; ++i)
            g.at(i, j) = c[i];
    }
    IntMatrix member = g.hstack(ambient.relation_columns());
    // relations among the generators: combinations landing in the ambient
    // relation lattice
    IntMatrix k = kernel_basis(member);
    IntMatrix rels = k.block(0, 0, s, k.cols());
    QuotientPresentation qp = classify_quotient(s, rels);

    IntMatrix incl(d, qp.group.dims());
    for (int j = 0; j < qp.group.dims(); ++j) {
        IntVec lift = qp.gen_lift(j);         // in Z^s
        IntVec amb = ambient.reduce(g.apply(lift));
        for (int i = 0; i < d; ++i)
            incl.at(i, j) = amb[i];
    }

    SubgroupResult out;
    out.group = qp.group;
    out.inclusion = GroupHom(qp.group, ambient, std::move(incl));
    out.generators.reserve(gens.size());
    for (int j = 0; j < s; ++j)
        out.generators.push_back(g.col_vec(j));
    out.member_matrix = std::move(member);
    out.pres = std::move(qp);
    return out;
}

std::optional<IntVec> SubgroupResult::coords_of(const IntVec& ambient_element) const
{
    auto sol = solve_integer_system(member_matrix, ambient_element);
    if (!sol)
        return std::nullopt;
    IntVec c(sol->begin(), sol->begin() + pres.n_gens);
    return pres.project(c);
}

bool subgroup_contains(const FgAbGroup& ambient, const std::vector<IntVec>& gens,
                       const IntVec& element)
{
    const int d = ambient.dims();
    IntMatrix g(d, static_cast<int>(gens.size()));
    for (int j = 0; j < g.cols(); ++j) {
        IntVec c = ambient.reduce(gens[j]);
        for (int i = 0; i < d; ++i)
            g.at(i, j) = c[i];
    }
    IntMatrix member = g.hstack(ambient.relation_columns());
    return solve_integer_system(member, ambient.reduce(element)).has_value();
}

} // namespace limtower
