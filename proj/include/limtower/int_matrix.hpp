#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

#include "limtower/errors.hpp"

namespace limtower {

using Int = mpz_class;
using IntVec = std::vector<Int>;

/* Dense row-major matrix of arbitrary-precision integers. All arithmetic
 * in the library is exact; there is no floating point anywhere. */
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
    static IntMatrix column(const IntVec& v);
    static IntMatrix diagonal(const IntVec& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    const std::vector<Int>& entries() const { return e_; }

    IntMatrix mul(const IntMatrix& o) const;
    IntMatrix add(const IntMatrix& o) const;
    IntMatrix sub(const IntMatrix& o) const;
    IntMatrix negated() const;
    IntMatrix transposed() const;
    IntMatrix scaled(const Int& c) const;

    IntVec apply(const IntVec& v) const;

    void set_block(int r0, int c0, const IntMatrix& m);
    IntMatrix block(int r0, int c0, int nr, int nc) const;
    IntMatrix hstack(const IntMatrix& right) const;

    IntVec col_vec(int j) const;
    IntVec row_vec(int i) const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    // row i += c * row j
    void add_row(int i, int j, const Int& c);
    // col i += c * col j
    void add_col(int i, int j, const Int& c);

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const IntMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<Int> e_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return a.mul(b); }

IntVec zero_vec(int n);
IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_neg(const IntVec& a);
IntVec vec_scaled(const IntVec& a, const Int& c);
bool vec_is_zero(const IntVec& a);
std::string vec_str(const IntVec& a);

// Signed determinant by fraction-free (Bareiss) elimination.
Int bareiss_det(IntMatrix a);

} // namespace limtower
