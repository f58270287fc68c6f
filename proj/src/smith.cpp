#include "limtower/smith.hpp"

namespace limtower {

namespace {

/* Tracks S = U * A * V together with U^-1 and V^-1 under elementary
 * operations. Row ops multiply U on the left by E and U^-1 on the right by
 * E^-1; column ops mirror on V. */
struct SnfState {
    IntMatrix s, u, v, u_inv, v_inv;

    explicit SnfState(const IntMatrix& a)
        : s(a),
          u(IntMatrix::identity(a.rows())),
          v(IntMatrix::identity(a.cols())),
          u_inv(IntMatrix::identity(a.rows())),
          v_inv(IntMatrix::identity(a.cols()))
    {
    }

    void swap_rows(int i, int j)
    {
        s.swap_rows(i, j);
        u.swap_rows(i, j);
        u_inv.swap_cols(i, j);
    }
    void swap_cols(int i, int j)
    {
        s.swap_cols(i, j);
        v.swap_cols(i, j);
        v_inv.swap_rows(i, j);
    }
    void negate_row(int i)
    {
        s.negate_row(i);
        u.negate_row(i);
        u_inv.negate_col(i);
    }
    // row i += c * row j
    void add_row(int i, int j, const Int& c)
    {
        s.add_row(i, j, c);
        u.add_row(i, j, c);
        u_inv.add_col(j, i, -c);
    }
    // col i += c * col j
    void add_col(int i, int j, const Int& c)
    {
        s.add_col(i, j, c);
        v.add_col(i, j, c);
        v_inv.add_row(j, i, -c);
    }
};

// smallest nonzero |entry| in the submatrix starting at (t, t); row-major ties
bool find_pivot(const IntMatrix& s, int t, int& pi, int& pj)
{
    bool found = false;
    Int best;
    for (int i = t; i < s.rows(); ++i)
        for (int j = t; j < s.cols(); ++j) {
            const Int& x = s.at(i, j);
            if (x == 0)
                continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& a)
{
    SnfState st(a);
    int m = a.rows(), n = a.cols();
    int bound = std::min(m, n);
    int t = 0;
    while (t < bound) {
        int pi, pj;
        if (!find_pivot(st.s, t, pi, pj))
            break;
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);
        if (st.s.at(t, t) < 0)
            st.negate_row(t);

        bool settled = false;
        while (!settled) {
            settled = true;
            if (st.s.at(t, t) < 0)
                st.negate_row(t);
            // clear the pivot column; a nonzero remainder becomes the new,
            // strictly smaller pivot and the pass restarts
            for (int i = t + 1; i < m; ++i) {
                if (st.s.at(i, t) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), st.s.at(i, t).get_mpz_t(), st.s.at(t, t).get_mpz_t());
                st.add_row(i, t, -q);
                if (st.s.at(i, t) != 0) {
                    st.swap_rows(t, i);
                    settled = false;
                    break;
                }
            }
            if (!settled)
                continue;
            for (int j = t + 1; j < n; ++j) {
                if (st.s.at(t, j) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), st.s.at(t, j).get_mpz_t(), st.s.at(t, t).get_mpz_t());
                st.add_col(j, t, -q);
                if (st.s.at(t, j) != 0) {
                    st.swap_cols(t, j);
                    settled = false;
                    break;
                }
            }
            if (!settled)
                continue;
            // divisibility sweep: fold any entry the pivot misses into row t
            for (int i = t + 1; i < m && settled; ++i)
                for (int j = t + 1; j < n && settled; ++j)
                    if (st.s.at(i, j) % st.s.at(t, t) != 0) {
                        st.add_row(t, i, Int(1));
                        settled = false;
                    }
        }
        ++t;
    }

    SmithForm out;
    out.u = std::move(st.u);
    out.s = std::move(st.s);
    out.v = std::move(st.v);
    out.u_inv = std::move(st.u_inv);
    out.v_inv = std::move(st.v_inv);
    out.source = a;
    out.rank = 0;
    for (int i = 0; i < bound; ++i)
        if (out.s.at(i, i) != 0)
            ++out.rank;
    return out;
}

IntVec SmithForm::invariants() const
{
    IntVec d;
    for (int i = 0; i < rank; ++i)
        d.push_back(s.at(i, i));
    return d;
}

std::optional<IntVec> solve_with(const SmithForm& sf, const IntVec& b)
{
    const int m = sf.source.rows(), n = sf.source.cols();
    require(static_cast<int>(b.size()) == m, "DimensionError", "right-hand side length mismatch");
    IntVec c = sf.u.apply(b);
    IntVec y = zero_vec(n);
    for (int i = 0; i < m; ++i) {
        const Int d = (i < std::min(m, n)) ? sf.s.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0)
                return std::nullopt;
        } else {
            if (c[i] % d != 0)
                return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    return sf.v.apply(y);
}

std::optional<IntVec> solve_integer_system(const IntMatrix& a, const IntVec& b)
{
    return solve_with(smith_normal_form(a), b);
}

IntMatrix kernel_basis(const SmithForm& sf)
{
    const int n = sf.source.cols();
    return sf.v.block(0, sf.rank, n, n - sf.rank);
}

IntMatrix kernel_basis(const IntMatrix& a) { return kernel_basis(smith_normal_form(a)); }

bool is_unimodular(const IntMatrix& a)
{
    if (!a.is_square())
        return false;
    Int d = bareiss_det(a);
    return d == 1 || d == -1;
}

IntMatrix row_hnf(IntMatrix a)
{
    const int m = a.rows(), n = a.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        // gcd the column entries at rows >= r into row r
        for (;;) {
            int best = -1;
            Int best_abs;
            for (int i = r; i < m; ++i) {
                if (a.at(i, c) == 0)
                    continue;
                Int ax = abs(a.at(i, c));
                if (best < 0 || ax < best_abs) {
                    best = i;
                    best_abs = ax;
                }
            }
            if (best < 0)
                break;
            a.swap_rows(r, best);
            if (a.at(r, c) < 0)
                a.negate_row(r);
            bool clean = true;
            for (int i = r + 1; i < m; ++i) {
                if (a.at(i, c) == 0)
                    continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, c).get_mpz_t(), a.at(r, c).get_mpz_t());
                a.add_row(i, r, -q);
                if (a.at(i, c) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (a.at(r, c) != 0) {
            for (int i = 0; i < r; ++i) {
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a.at(i, c).get_mpz_t(), a.at(r, c).get_mpz_t());
                a.add_row(i, r, -q);
            }
            ++r;
        }
    }
    return a.block(0, 0, r, n);
}

IntMatrix lattice_canonical(const IntMatrix& generator_cols)
{
    return row_hnf(generator_cols.transposed());
}

int lattice_rank(const IntMatrix& generator_cols)
{
    return lattice_canonical(generator_cols).rows();
}

bool lattice_equal(const IntMatrix& gens_a, const IntMatrix& gens_b)
{
    return gens_a.rows() == gens_b.rows() && lattice_canonical(gens_a) == lattice_canonical(gens_b);
}

bool lattice_member(const IntMatrix& generator_cols, const IntVec& v)
{
    return solve_integer_system(generator_cols, v).has_value();
}

Int lattice_index(const IntMatrix& gens_big, const IntMatrix& gens_small)
{
    IntMatrix big = lattice_canonical(gens_big).transposed();   // columns form a basis
    IntMatrix small = lattice_canonical(gens_small).transposed();
    require(big.cols() == small.cols(), "DimensionError", "lattice index needs equal ranks");
    SmithForm sf = smith_normal_form(big);
    IntMatrix x(big.cols(), small.cols());
    for (int j = 0; j < small.cols(); ++j) {
        auto sol = solve_with(sf, small.col_vec(j));
        require(sol.has_value(), "DimensionError", "lattice index of non-sublattice");
        for (int i = 0; i < big.cols(); ++i)
            x.at(i, j) = (*sol)[i];
    }
    return abs(bareiss_det(x));
}

} // namespace limtower
