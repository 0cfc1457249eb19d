#pragma once

#include <vector>

#include "ringlab/intmath.hpp"

namespace ringlab {

/// Row-major integer matrix, small (rows <= 4 in this codebase).
struct IMat {
    int rows = 0, cols = 0;
    std::vector<i64> a;

    IMat() = default;
    IMat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), 0) {}
    static IMat identity(int n);

    i64& at(int r, int c) { return a[size_t(r) * size_t(cols) + size_t(c)]; }
    i64 at(int r, int c) const { return a[size_t(r) * size_t(cols) + size_t(c)]; }
};

IMat imat_mul(const IMat& x, const IMat& y);

/// Smith normal form bookkeeping for the lattice L spanned by the columns of
/// A: U is unimodular with U * L = span{ d_i * e_i }, so Z^rows / L is
/// isomorphic to (+) Z/d_i via x -> (U x mod d). Uinv lifts coordinates back.
struct SmithForm {
    IMat U, Uinv;
    std::vector<i64> invariants; // d_1 | d_2 | ... | d_rows, all >= 1
};

SmithForm smith_form(IMat A);

} // namespace ringlab
