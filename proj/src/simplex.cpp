#include "adeg/simplex.hpp"

#include <algorithm>

namespace adeg {

namespace {

// Dense tableau over exact rationals. Columns: x+ block, x- block, slacks,
// artificials, RHS. Basis columns are kept at exact unit vectors.
struct Tableau {
    int rows = 0, cols = 0;  // cols excludes RHS
    std::vector<std::vector<Rat>> t;  // rows x (cols+1)
    std::vector<int> basis;
    std::vector<Rat> z;  // reduced-cost row, size cols+1 (last = -objective)
    long pivots = 0;

    void pivot(int r, int s) {
        Rat inv = Rat(1) / t[r][s];
        for (int j = 0; j <= cols; ++j) t[r][j] *= inv;
        t[r][s] = 1;
        for (int i = 0; i < rows; ++i) {
            if (i == r || t[i][s] == 0) continue;
            Rat f = t[i][s];
            for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
            t[i][s] = 0;
        }
        if (z[s] != 0) {
            Rat f = z[s];
            for (int j = 0; j <= cols; ++j) z[j] -= f * t[r][j];
            z[s] = 0;
        }
        basis[r] = s;
        ++pivots;
    }

    // Bland: entering = lowest-index column with negative reduced cost among
    // allowed columns; leaving = min ratio, ties by lowest basis index.
    // Returns false when optimal, throws on unbounded.
    bool step(int allowed_cols) {
        int s = -1;
        for (int j = 0; j < allowed_cols; ++j)
            if (z[j] < 0) {
                s = j;
                break;
            }
        if (s < 0) return false;
        int r = -1;
        Rat best;
        for (int i = 0; i < rows; ++i) {
            if (t[i][s] <= 0) continue;
            Rat ratio = t[i][cols] / t[i][s];
            if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
                r = i;
                best = ratio;
            }
        }
        if (r < 0) throw std::runtime_error("simplex: unbounded");
        pivot(r, s);
        return true;
    }

    void load_costs(const std::vector<Rat>& c) {
        z.assign(cols + 1, Rat(0));
        for (int j = 0; j < cols && j < static_cast<int>(c.size()); ++j) z[j] = c[j];
        for (int i = 0; i < rows; ++i) {
            int bj = basis[i];
            Rat cb = bj < static_cast<int>(c.size()) ? c[bj] : Rat(0);
            if (cb == 0) continue;
            for (int j = 0; j <= cols; ++j) z[j] -= cb * t[i][j];
        }
        for (int i = 0; i < rows; ++i) z[basis[i]] = 0;
    }
};

}  // namespace

SimplexResult simplex_min(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                          const std::vector<Rat>& c) {
    const int m = static_cast<int>(A.size());
    const int nv = static_cast<int>(c.size());
    for (const auto& row : A)
        if (static_cast<int>(row.size()) != nv)
            throw std::invalid_argument("simplex_min: ragged constraint matrix");

    // Column layout: [x+ 0..nv) [x- nv..2nv) [slack 2nv..2nv+m) [artificial ...]
    const int slack0 = 2 * nv;
    std::vector<int> art_rows;
    for (int i = 0; i < m; ++i)
        if (b[i] < 0) art_rows.push_back(i);
    const int art0 = slack0 + m;
    const int cols = art0 + static_cast<int>(art_rows.size());

    Tableau tb;
    tb.rows = m;
    tb.cols = cols;
    tb.t.assign(m, std::vector<Rat>(cols + 1, Rat(0)));
    tb.basis.assign(m, -1);
    int art = art0;
    for (int i = 0; i < m; ++i) {
        int sign = b[i] < 0 ? -1 : 1;
        for (int j = 0; j < nv; ++j) {
            tb.t[i][j] = sign * A[i][j];
            tb.t[i][nv + j] = -sign * A[i][j];
        }
        tb.t[i][slack0 + i] = sign;
        tb.t[i][cols] = sign * b[i];
        if (sign < 0) {
            tb.t[i][art] = 1;
            tb.basis[i] = art++;
        } else {
            tb.basis[i] = slack0 + i;
        }
    }

    SimplexResult res;
    if (!art_rows.empty()) {
        std::vector<Rat> c1(cols, Rat(0));
        for (int j = art0; j < cols; ++j) c1[j] = 1;
        tb.load_costs(c1);
        while (tb.step(cols)) {
        }
        if (-tb.z[cols] != 0) {
            res.status = SimplexResult::Status::Infeasible;
            res.pivots = tb.pivots;
            return res;
        }
        // Drive leftover artificials out of the basis (or they sit at zero on
        // redundant rows; keeping them basic at zero is harmless if they can
        // never re-enter, which load_costs + the phase-2 column cap ensure).
        for (int i = 0; i < m; ++i) {
            if (tb.basis[i] < art0) continue;
            for (int j = 0; j < art0; ++j)
                if (tb.t[i][j] != 0) {
                    tb.pivot(i, j);
                    break;
                }
        }
    }

    std::vector<Rat> c2(cols, Rat(0));
    for (int j = 0; j < nv; ++j) {
        c2[j] = c[j];
        c2[nv + j] = -c[j];
    }
    tb.load_costs(c2);
    try {
        while (tb.step(art0)) {
        }
    } catch (const std::runtime_error&) {
        res.status = SimplexResult::Status::Unbounded;
        res.pivots = tb.pivots;
        return res;
    }

    res.status = SimplexResult::Status::Optimal;
    res.value = -tb.z[cols];
    res.x.assign(nv, Rat(0));
    for (int i = 0; i < m; ++i) {
        int bj = tb.basis[i];
        if (bj < nv)
            res.x[bj] += tb.t[i][cols];
        else if (bj < 2 * nv)
            res.x[bj - nv] -= tb.t[i][cols];
    }
    // Dual value of constraint i is minus the reduced cost of its slack.
    res.y.assign(m, Rat(0));
    for (int i = 0; i < m; ++i) res.y[i] = -tb.z[slack0 + i];
    res.pivots = tb.pivots;
    return res;
}

}  // namespace adeg
