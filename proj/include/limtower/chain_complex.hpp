#pragma once
#include <optional>
#include <vector>

#include "limtower/abelian.hpp"

namespace limtower {

/* Bounded chain complex of finitely generated free abelian groups,
 * degrees 0..top_degree, boundary d_k : degree k -> degree k-1.
 * d_{k-1} * d_k = 0 is checked at construction. */
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(std::vector<int> ranks, std::vector<IntMatrix> boundaries);

    static ChainComplex zero();
    // Z^n concentrated in one degree
    static ChainComplex free_in_degree(int degree, int n = 1);
    static ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    int rank(int k) const
    {
        return (k >= 0 && k <= top_degree()) ? ranks_[k] : 0;
    }
    const std::vector<int>& ranks() const { return ranks_; }

    // d_k as a rank(k-1) x rank(k) matrix, zero outside 1..top_degree
    IntMatrix boundary(int k) const;
    const std::vector<IntMatrix>& stored_boundaries() const { return boundaries_; }

    bool operator==(const ChainComplex& o) const
    {
        return ranks_ == o.ranks_ && boundaries_ == o.boundaries_;
    }
    bool operator!=(const ChainComplex& o) const { return !(*this == o); }

private:
    std::vector<int> ranks_;            // size top_degree + 1
    std::vector<IntMatrix> boundaries_; // boundaries_[k-1] = d_k, size top_degree
};

/* Degreewise matrices f_k with d f = f d, exact. */
class ChainMap {
public:
    ChainMap() = default;
    ChainMap(ChainComplex source, ChainComplex target, std::vector<IntMatrix> degree_matrices);

    static ChainMap identity(const ChainComplex& c);
    static ChainMap zero(const ChainComplex& source, const ChainComplex& target);
    static ChainMap scalar(const ChainComplex& c, const Int& m);
    // g after f
    static ChainMap compose(const ChainMap& g, const ChainMap& f);

    const ChainComplex& source() const { return source_; }
    const ChainComplex& target() const { return target_; }

    // f_k as a target.rank(k) x source.rank(k) matrix, zero outside the stored range
    IntMatrix matrix(int k) const;
    IntVec apply(int k, const IntVec& v) const;

    bool is_degreewise_surjective() const;

    bool operator==(const ChainMap& o) const
    {
        return source_ == o.source_ && target_ == o.target_ && f_ == o.f_;
    }

private:
    ChainComplex source_, target_;
    std::vector<IntMatrix> f_; // f_[k] for k = 0..max(top degrees)
};

struct HomologyClass {
    int degree = 0;
    IntVec representative; // a cycle in the ambient complex
    ChainComplex ambient;
};

struct Nullhomotopy {
    int degree = 0;        // degree of the bounded cycle
    IntVec bounding_chain; // in degree + 1, with d(bounding_chain) = cycle
    IntVec cycle;
};

/* Homology in one degree with both directions of the identification:
 * class_of sends a cycle to its coordinates in the normal form, and
 * generator_cycle lifts a normal-form generator back to a cycle. */
class HomologyData {
public:
    HomologyData() = default;
    HomologyData(const ChainComplex& c, int degree);

    const FgAbGroup& group() const { return pres_.group; }
    int degree() const { return degree_; }

    bool is_cycle(const IntVec& chain) const;
    IntVec class_of(const IntVec& cycle) const; // throws NotACycle
    IntVec generator_cycle(int coord) const;
    IntVec element_cycle(const IntVec& class_coords) const;
    bool same_class(const IntVec& cycle_a, const IntVec& cycle_b) const;

private:
    int degree_ = 0;
    ChainComplex complex_;
    IntMatrix kernel_;    // columns: basis of the degree-k cycles
    SmithForm kernel_sf_; // for expressing cycles in the kernel basis
    QuotientPresentation pres_;
};

HomologyData homology(const ChainComplex& c, int degree); // DegreeError outside 0..top
// trivial-group data outside the degree range instead of an error
HomologyData homology_or_trivial(const ChainComplex& c, int degree);

// bounding chain for a cycle, iff its class vanishes
std::optional<Nullhomotopy> solve_boundary(const ChainComplex& c, int degree, const IntVec& cycle);

// canonical x with q_k(x) = y, iff y is in the image
std::optional<IntVec> solve_lift(const ChainMap& q, int degree, const IntVec& y);

// H_k(source) -> H_k(target) induced by f
GroupHom induced_hom(const ChainMap& f, int degree, const HomologyData& h_src,
                     const HomologyData& h_tgt);

struct DegreeReport {
    int degree;
    FgAbGroup h_source, h_target;
    bool isomorphism;
};
struct QuasiIsoReport {
    bool quasi_iso;
    std::vector<DegreeReport> degrees;
};
QuasiIsoReport is_quasi_iso(const ChainMap& f);

/* Mapping path replacement of f : A -> B. The middle complex is
 *   E_k = A_k + B_k + B_{k+1},  d(a, x, h) = (da, dx, x - f(a) - dh),
 * j : A -> E is a quasi-isomorphism, ev1 : E -> B is degreewise surjective,
 * and ev1 . j = f exactly. */
struct PathReplacement {
    ChainComplex e;
    ChainMap j;   // A -> E
    ChainMap ev1; // E -> B
};
PathReplacement path_fibration_replace(const ChainMap& f);

} // namespace limtower
