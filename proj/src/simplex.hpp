#pragma once

// Dense phase-1 simplex: find x >= 0 with A x = b. Internal header.

#include <cmath>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace tolrec::detail {

template <class T>
struct Tol;

template <>
struct Tol<double> {
    static bool pos(double x) { return x > 1e-9; }
    static bool neg(double x) { return x < -1e-9; }
};

template <>
struct Tol<mpq_class> {
    static bool pos(const mpq_class& x) { return sgn(x) > 0; }
    static bool neg(const mpq_class& x) { return sgn(x) < 0; }
};

// Rows of A are dense. Returns a feasible x or nullopt. Dantzig pricing,
// switching to Bland's rule after a run of degenerate pivots.
template <class T>
std::optional<std::vector<T>> phase1(const std::vector<std::vector<T>>& A, const std::vector<T>& b,
                                     long max_iter = 200000) {
    const int m = static_cast<int>(A.size());
    const int n = m ? static_cast<int>(A[0].size()) : 0;
    const int cols = n + m;  // structural + artificial
    std::vector<std::vector<T>> tab(m, std::vector<T>(cols + 1, T(0)));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        bool flip = Tol<T>::neg(b[i]);
        for (int j = 0; j < n; ++j) tab[i][j] = flip ? T(-A[i][j]) : A[i][j];
        tab[i][n + i] = 1;
        tab[i][cols] = flip ? T(-b[i]) : b[i];
        basis[i] = n + i;
    }
    // reduced costs of min sum(artificials)
    std::vector<T> cost(cols + 1, T(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= cols; ++j)
            if (j < n || j == cols) cost[j] -= tab[i][j];

    int degenerate_run = 0;
    bool bland = false;
    bool optimal = false;
    for (long it = 0; it < max_iter; ++it) {
        int enter = -1;
        for (int j = 0; j < cols; ++j) {
            if (!Tol<T>::neg(cost[j])) continue;
            if (bland) {
                enter = j;
                break;
            }
            if (enter < 0 || cost[j] < cost[enter]) enter = j;
        }
        if (enter < 0) {
            optimal = true;
            break;
        }
        int leave = -1;
        T best = 0;
        for (int i = 0; i < m; ++i) {
            if (!Tol<T>::pos(tab[i][enter])) continue;
            T ratio = tab[i][cols] / tab[i][enter];
            if (leave < 0 || ratio < best || (!(best < ratio) && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) return std::nullopt;  // unbounded cannot happen in phase 1
        if (Tol<T>::pos(best)) {
            degenerate_run = 0;
        } else if (++degenerate_run > 50) {
            bland = true;
        }
        T piv = tab[leave][enter];
        for (int j = 0; j <= cols; ++j) tab[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            T f = tab[i][enter];
            if (!Tol<T>::pos(f) && !Tol<T>::neg(f)) continue;
            for (int j = 0; j <= cols; ++j)
                if (Tol<T>::pos(tab[leave][j]) || Tol<T>::neg(tab[leave][j])) tab[i][j] -= f * tab[leave][j];
        }
        T f = cost[enter];
        for (int j = 0; j <= cols; ++j)
            if (Tol<T>::pos(tab[leave][j]) || Tol<T>::neg(tab[leave][j])) cost[j] -= f * tab[leave][j];
        basis[leave] = enter;
    }
    if (!optimal || Tol<T>::neg(cost[cols])) return std::nullopt;  // artificial sum stays positive
    std::vector<T> x(n, T(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = tab[i][cols];
    for (int i = 0; i < m; ++i)
        if (basis[i] >= n && Tol<T>::pos(tab[i][cols])) return std::nullopt;
    return x;
}

}  // namespace tolrec::detail
