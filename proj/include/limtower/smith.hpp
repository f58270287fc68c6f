#pragma once
#include <optional>

#include "limtower/int_matrix.hpp"

namespace limtower {

/* u * source * v = s, with u and v unimodular and s diagonal, the nonzero
 * diagonal entries positive and each dividing the next. u_inv and v_inv are
 * accumulated alongside, so inverses never require a separate elimination. */
struct SmithForm {
    IntMatrix u, s, v;
    IntMatrix u_inv, v_inv;
    IntMatrix source;
    int rank = 0;

    IntVec invariants() const; // nonzero diagonal entries d_1 | d_2 | ...
};

SmithForm smith_normal_form(const IntMatrix& a);

/* Canonical particular solution of a*x = b over the integers: in Smith
 * coordinates the free components are set to zero, so identical inputs give
 * identical outputs everywhere downstream. */
std::optional<IntVec> solve_integer_system(const IntMatrix& a, const IntVec& b);
std::optional<IntVec> solve_with(const SmithForm& sf, const IntVec& b);

/* Columns form a basis of { x : a*x = 0 }; the kernel lattice is saturated. */
IntMatrix kernel_basis(const IntMatrix& a);
IntMatrix kernel_basis(const SmithForm& sf);

bool is_unimodular(const IntMatrix& a);

/* Canonical row Hermite form of the row span: echelon, positive pivots,
 * entries above each pivot reduced into [0, pivot). Zero rows dropped.
 * Two row sets span the same lattice iff their forms are equal. */
IntMatrix row_hnf(IntMatrix a);

/* Lattices given by generator columns. */
IntMatrix lattice_canonical(const IntMatrix& generator_cols); // row_hnf of transpose
int lattice_rank(const IntMatrix& generator_cols);
bool lattice_equal(const IntMatrix& gens_a, const IntMatrix& gens_b);
bool lattice_member(const IntMatrix& generator_cols, const IntVec& v);
// index [A : B] for B <= A of equal rank (the columns of each span the lattice)
Int lattice_index(const IntMatrix& gens_big, const IntMatrix& gens_small);

} // namespace limtower
