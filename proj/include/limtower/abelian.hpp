#pragma once
#include <optional>
#include <string>
#include <vector>

#include "limtower/smith.hpp"

namespace limtower {

/* Invariant-factor normal form: Z^free_rank + Z/d_1 + ... + Z/d_t with
 * 2 <= d_1 | d_2 | ... Two values are isomorphic iff they compare equal.
 * Elements are integer vectors laid out [free coords..., torsion coords...],
 * torsion coordinate i always reduced into [0, d_i). */
struct FgAbGroup {
    int free_rank = 0;
    IntVec torsion;

    FgAbGroup() = default;
    FgAbGroup(int free, IntVec tors);

    int dims() const { return free_rank + static_cast<int>(torsion.size()); }
    bool trivial() const { return dims() == 0; }
    // group order; nullopt when the free rank is positive
    std::optional<Int> order() const;

    IntVec reduce(IntVec v) const;
    bool is_zero_element(const IntVec& v) const { return vec_is_zero(reduce(v)); }
    IntVec zero() const { return zero_vec(dims()); }

    /* d_i * e_i columns for the torsion generators: the relations presenting
     * the group as a quotient of Z^dims. */
    IntMatrix relation_columns() const;

    bool operator==(const FgAbGroup& o) const
    {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool operator!=(const FgAbGroup& o) const { return !(*this == o); }

    std::string str() const;
};

struct GroupHom {
    FgAbGroup domain, codomain;
    IntMatrix matrix; // codomain.dims() rows, domain.dims() cols

    GroupHom() = default;
    GroupHom(FgAbGroup dom, FgAbGroup cod, IntMatrix m); // checks compatibility

    static GroupHom identity(const FgAbGroup& g);
    static GroupHom zero(const FgAbGroup& dom, const FgAbGroup& cod);
    // g after f
    static GroupHom compose(const GroupHom& g, const GroupHom& f);

    IntVec apply(const IntVec& v) const;
    std::optional<IntVec> preimage(const IntVec& target) const; // canonical

    bool is_surjective() const;
    bool kernel_trivial() const;
    bool is_isomorphism() const;
};

/* Z^n_gens modulo the column span of a relation matrix, in normal form,
 * with both directions of the identification:
 *   project  : Z^n_gens -> group element
 *   gen_lift : group generator -> Z^n_gens representative
 */
struct QuotientPresentation {
    int n_gens = 0;
    FgAbGroup group;
    IntMatrix u, u_inv; // from the Smith form of the relation matrix
    int rank = 0;       // number of nonzero invariant factors
    int first_torsion = 0;

    IntVec project(const IntVec& v) const;
    IntVec gen_lift(int coord) const;
    IntMatrix projection_matrix() const; // group.dims() x n_gens, unreduced rows
};

QuotientPresentation classify_quotient(int n_gens, const IntMatrix& relations);

struct CokernelResult {
    FgAbGroup group;
    GroupHom projection; // codomain of h -> cokernel
};

// codomain / image(h)
CokernelResult cokernel_classify(const GroupHom& h);

struct SubgroupResult {
    FgAbGroup group;
    GroupHom inclusion;             // subgroup -> ambient
    std::vector<IntVec> generators; // the generating elements, as given
    IntMatrix member_matrix;        // [gens | ambient relations], for membership solves
    QuotientPresentation pres;

    // coordinates of an ambient element inside the subgroup, if it lies there
    std::optional<IntVec> coords_of(const IntVec& ambient_element) const;
};

SubgroupResult classify_subgroup(const FgAbGroup& ambient, const std::vector<IntVec>& gens);

bool subgroup_contains(const FgAbGroup& ambient, const std::vector<IntVec>& gens,
                       const IntVec& element);

} // namespace limtower
