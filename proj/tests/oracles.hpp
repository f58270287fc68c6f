#pragma once
/* Test-only oracles, independent of the library's solution paths: exhaustive
 * searches, cofactor determinants, and direct enumerations used to pin
 * expected values. */
#include <vector>

#include "limtower/int_matrix.hpp"

namespace oracle {

using limtower::Int;
using limtower::IntMatrix;
using limtower::IntVec;

// exhaustive search for an integer solution of a*x = b over a box
inline bool box_has_solution(const IntMatrix& a, const IntVec& b, long lo, long hi)
{
    const int n = a.cols();
    std::vector<long> x(n, lo);
    if (n == 0)
        return limtower::vec_is_zero(b);
    for (;;) {
        IntVec xv(n);
        for (int i = 0; i < n; ++i)
            xv[i] = x[i];
        if (a.apply(xv) == b)
            return true;
        int k = 0;
        while (k < n && ++x[k] > hi) {
            x[k] = lo;
            ++k;
        }
        if (k == n)
            return false;
    }
}

inline Int entry_gcd(const IntMatrix& a)
{
    Int g = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            Int e = abs(a.at(i, j));
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
        }
    return g;
}

// cofactor-expansion determinant; independent of the Bareiss route
inline Int cofactor_det(const IntMatrix& a)
{
    const int n = a.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return a.at(0, 0);
    Int det = 0;
    for (int j = 0; j < n; ++j) {
        if (a.at(0, j) == 0)
            continue;
        IntMatrix minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j)
                    continue;
                minor.at(i - 1, cc++) = a.at(i, c);
            }
        }
        Int term = a.at(0, j) * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace oracle
