#include "ringlab/smith.hpp"

#include <cstdlib>

#include "ringlab/errors.hpp"

namespace ringlab {

IMat IMat::identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IMat imat_mul(const IMat& x, const IMat& y) {
    assert(x.cols == y.rows);
    IMat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k) == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                i128 t = i128(x.at(i, k)) * y.at(k, j) + r.at(i, j);
                assert(t <= i128(INT64_MAX) && t >= i128(INT64_MIN));
                r.at(i, j) = i64(t);
            }
        }
    return r;
}

namespace {

struct Worker {
    IMat A, U, Uinv;

    explicit Worker(IMat m) : A(std::move(m)) {
        U = IMat::identity(A.rows);
        Uinv = IMat::identity(A.rows);
    }

    // row_i += c * row_k  (and keep U * A_orig * V == A current)
    void row_add(int i, int k, i64 c) {
        for (int j = 0; j < A.cols; ++j) A.at(i, j) += c * A.at(k, j);
        for (int j = 0; j < U.cols; ++j) U.at(i, j) += c * U.at(k, j);
        for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, k) -= c * Uinv.at(r, i);
    }
    void row_swap(int i, int k) {
        for (int j = 0; j < A.cols; ++j) std::swap(A.at(i, j), A.at(k, j));
        for (int j = 0; j < U.cols; ++j) std::swap(U.at(i, j), U.at(k, j));
        for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, k));
    }
    void row_negate(int i) {
        for (int j = 0; j < A.cols; ++j) A.at(i, j) = -A.at(i, j);
        for (int j = 0; j < U.cols; ++j) U.at(i, j) = -U.at(i, j);
        for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
    }
    void col_add(int j, int k, i64 c) { // col_j += c * col_k
        for (int i = 0; i < A.rows; ++i) A.at(i, j) += c * A.at(i, k);
    }
    void col_swap(int j, int k) {
        for (int i = 0; i < A.rows; ++i) std::swap(A.at(i, j), A.at(i, k));
    }

    bool find_pivot(int k, int& pr, int& pc) {
        i64 best = 0;
        bool found = false;
        for (int i = k; i < A.rows; ++i)
            for (int j = k; j < A.cols; ++j) {
                i64 v = std::llabs(A.at(i, j));
                if (v != 0 && (!found || v < best)) {
                    best = v;
                    pr = i;
                    pc = j;
                    found = true;
                }
            }
        return found;
    }

    void eliminate(int k) {
        while (true) {
            int pr, pc;
            if (!find_pivot(k, pr, pc)) return;
            row_swap(k, pr);
            col_swap(k, pc);
            bool clean = true;
            for (int i = k + 1; i < A.rows; ++i) {
                if (A.at(i, k) == 0) continue;
                i64 q = A.at(i, k) / A.at(k, k);
                row_add(i, k, -q);
                if (A.at(i, k) != 0) clean = false;
            }
            for (int j = k + 1; j < A.cols; ++j) {
                if (A.at(k, j) == 0) continue;
                i64 q = A.at(k, j) / A.at(k, k);
                col_add(j, k, -q);
                if (A.at(k, j) != 0) clean = false;
            }
            if (clean) {
                bool zero = true;
                for (int i = k + 1; i < A.rows && zero; ++i) zero = A.at(i, k) == 0;
                for (int j = k + 1; j < A.cols && zero; ++j) zero = A.at(k, j) == 0;
                if (zero) return;
            }
        }
    }
};

} // namespace

SmithForm smith_form(IMat A) {
    int n = A.rows;
    Worker w(std::move(A));
    int steps = std::min(w.A.rows, w.A.cols);
    for (int k = 0; k < steps; ++k) w.eliminate(k);
    for (int i = 0; i < n; ++i)
        if (i < w.A.cols && w.A.at(i, i) < 0) w.row_negate(i);

    // enforce the divisibility chain d_i | d_{i+1}
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i + 1 < steps; ++i) {
            i64 a = w.A.at(i, i), b = w.A.at(i + 1, i + 1);
            if (a != 0 && b % a != 0) {
                w.row_add(i, i + 1, 1);
                w.eliminate(i);
                for (int r = i; r < n; ++r)
                    if (r < w.A.cols && w.A.at(r, r) < 0) w.row_negate(r);
                changed = true;
            }
        }
    }

    SmithForm out;
    out.invariants.resize(size_t(n), 0);
    for (int i = 0; i < n; ++i) out.invariants[size_t(i)] = i < w.A.cols ? w.A.at(i, i) : 0;
    require(std::all_of(out.invariants.begin(), out.invariants.end(), [](i64 d) { return d > 0; }),
            Errc::Internal, "lattice is not of full rank");
    out.U = std::move(w.U);
    out.Uinv = std::move(w.Uinv);
    return out;
}

} // namespace ringlab
