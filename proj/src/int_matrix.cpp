#include "limtower/int_matrix.hpp"

#include <sstream>

namespace limtower {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols)
{
    require(rows >= 0 && cols >= 0, "DimensionError", "negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        require(static_cast<int>(rows[i].size()) == c, "DimensionError", "ragged rows");
        for (int j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::column(const IntVec& v)
{
    IntMatrix m(static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.rows(); ++i)
        m.at(i, 0) = v[i];
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d)
{
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i)
        m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::mul(const IntMatrix& o) const
{
    require(cols_ == o.rows_, "DimensionError", "matrix product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& aik = at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::add(const IntMatrix& o) const
{
    require(rows_ == o.rows_ && cols_ == o.cols_, "DimensionError", "matrix sum shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i] + o.e_[i];
    return r;
}

IntMatrix IntMatrix::sub(const IntMatrix& o) const
{
    require(rows_ == o.rows_ && cols_ == o.cols_, "DimensionError", "matrix difference shape mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i] - o.e_[i];
    return r;
}

IntMatrix IntMatrix::negated() const
{
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = -e_[i];
    return r;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

IntMatrix IntMatrix::scaled(const Int& c) const
{
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i] * c;
    return r;
}

IntVec IntMatrix::apply(const IntVec& v) const
{
    require(static_cast<int>(v.size()) == cols_, "DimensionError", "matrix-vector shape mismatch");
    IntVec r(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0)
                r[i] += at(i, j) * v[j];
    return r;
}

void IntMatrix::set_block(int r0, int c0, const IntMatrix& m)
{
    require(r0 >= 0 && c0 >= 0 && r0 + m.rows() <= rows_ && c0 + m.cols() <= cols_,
            "DimensionError", "block out of range");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            at(r0 + i, c0 + j) = m.at(i, j);
}

IntMatrix IntMatrix::block(int r0, int c0, int nr, int nc) const
{
    require(r0 >= 0 && c0 >= 0 && r0 + nr <= rows_ && c0 + nc <= cols_,
            "DimensionError", "block out of range");
    IntMatrix r(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j)
            r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const
{
    require(rows_ == right.rows_, "DimensionError", "hstack row mismatch");
    IntMatrix r(rows_, cols_ + right.cols_);
    r.set_block(0, 0, *this);
    r.set_block(0, cols_, right);
    return r;
}

IntVec IntMatrix::col_vec(int j) const
{
    IntVec v(rows_);
    for (int i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

IntVec IntMatrix::row_vec(int i) const
{
    IntVec v(cols_);
    for (int j = 0; j < cols_; ++j)
        v[j] = at(i, j);
    return v;
}

void IntMatrix::swap_rows(int i, int j)
{
    if (i == j)
        return;
    for (int k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(int i, int j)
{
    if (i == j)
        return;
    for (int k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

void IntMatrix::negate_row(int i)
{
    for (int k = 0; k < cols_; ++k)
        at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(int j)
{
    for (int k = 0; k < rows_; ++k)
        at(k, j) = -at(k, j);
}

void IntMatrix::add_row(int i, int j, const Int& c)
{
    if (c == 0)
        return;
    for (int k = 0; k < cols_; ++k)
        at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(int i, int j, const Int& c)
{
    if (c == 0)
        return;
    for (int k = 0; k < rows_; ++k)
        at(k, i) += c * at(k, j);
}

bool IntMatrix::is_zero() const
{
    for (const Int& x : e_)
        if (x != 0)
            return false;
    return true;
}

std::string IntMatrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

IntVec zero_vec(int n) { return IntVec(static_cast<std::size_t>(n), Int(0)); }

IntVec vec_add(const IntVec& a, const IntVec& b)
{
    require(a.size() == b.size(), "DimensionError", "vector sum length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

IntVec vec_sub(const IntVec& a, const IntVec& b)
{
    require(a.size() == b.size(), "DimensionError", "vector difference length mismatch");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

IntVec vec_neg(const IntVec& a)
{
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

IntVec vec_scaled(const IntVec& a, const Int& c)
{
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] * c;
    return r;
}

bool vec_is_zero(const IntVec& a)
{
    for (const Int& x : a)
        if (x != 0)
            return false;
    return true;
}

std::string vec_str(const IntVec& a)
{
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.size(); ++i)
        os << (i ? ", " : "") << a[i].get_str();
    os << ")";
    return os.str();
}

Int bareiss_det(IntMatrix a)
{
    require(a.is_square(), "DimensionError", "determinant of non-square matrix");
    int n = a.rows();
    if (n == 0)
        return 1;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

} // namespace limtower
