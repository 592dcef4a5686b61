/*
 * Copyright 2026 The mfn authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poly_matrix.hpp"

namespace mfn {

/* ------------------------------------------------------------------ */
/* Column Hermite form                                                  */
/* ------------------------------------------------------------------ */

/* h = a * u with u unimodular; h in column echelon form with monic pivots,
 * entries right of a pivot reduced mod the pivot, zero columns pushed to
 * the right.  Deterministic pivot rule: among candidate columns pick the
 * entry of lowest degree, ties broken by the smaller column index. */
template <field_context F>
struct HermiteResult {
    PolyMatrix<F> h;
    PolyMatrix<F> u;
    std::vector<std::pair<int, int>> pivots;  /* (row, column of h) */
    typename F::Elem det_u;                   /* nonzero scalar */
};

template <field_context F>
HermiteResult<F> hermite_form(const PolyMatrix<F>& a) {
    const F& k = a.field();
    HermiteResult<F> res{a, PolyMatrix<F>::identity(k, a.cols()), {}, k.one()};
    PolyMatrix<F>& h = res.h;
    PolyMatrix<F>& u = res.u;

    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < h.rows(); ++r) std::swap(h.at(r, i), h.at(r, j));
        for (int r = 0; r < u.rows(); ++r) std::swap(u.at(r, i), u.at(r, j));
        res.det_u = k.neg(res.det_u);
    };
    auto axpy_col = [&](const Poly<F>& q, int src, int dst) {
        /* column dst -= q * column src */
        if (q.is_zero()) return;
        for (int r = 0; r < h.rows(); ++r) h.at(r, dst) = h.at(r, dst) - q * h.at(r, src);
        for (int r = 0; r < u.rows(); ++r) u.at(r, dst) = u.at(r, dst) - q * u.at(r, src);
    };
    auto scale_col = [&](const typename F::Elem& e, int j) {
        for (int r = 0; r < h.rows(); ++r) h.at(r, j) = scale(e, h.at(r, j));
        for (int r = 0; r < u.rows(); ++r) u.at(r, j) = scale(e, u.at(r, j));
        res.det_u = k.mul(res.det_u, e);
    };

    int pivot_col = 0;
    for (int row = 0; row < h.rows() && pivot_col < h.cols(); ++row) {
        /* euclidean elimination within the candidate columns */
        for (;;) {
            int best = -1;
            for (int j = pivot_col; j < h.cols(); ++j) {
                if (h.at(row, j).is_zero()) continue;
                if (best < 0 || h.at(row, j).degree() < h.at(row, best).degree()) best = j;
            }
            if (best < 0) break;  /* row has no pivot; move to next row */
            bool reduced_all = true;
            for (int j = pivot_col; j < h.cols(); ++j) {
                if (j == best || h.at(row, j).is_zero()) continue;
                auto [q, r] = divrem(h.at(row, j), h.at(row, best));
                axpy_col(q, best, j);
                if (!r.is_zero()) reduced_all = false;
            }
            if (reduced_all) {
                swap_cols(pivot_col, best);
                break;
            }
        }
        if (h.at(row, pivot_col).is_zero()) continue;
        if (!h.at(row, pivot_col).is_monic())
            scale_col(k.inv(h.at(row, pivot_col).lead()), pivot_col);
        /* canonical reduction of earlier pivot columns against this pivot */
        for (std::size_t t = 0; t < res.pivots.size(); ++t) {
            int j = res.pivots[t].second;
            auto [q, r] = divrem(h.at(row, j), h.at(row, pivot_col));
            (void)r;
            axpy_col(q, pivot_col, j);
        }
        res.pivots.emplace_back(row, pivot_col);
        ++pivot_col;
    }
    return res;
}

/* Columns form a free basis of { v : a v = 0 } (the syzygy module); over
 * k[x] kernels of matrices are free, so this is a complete description. */
template <field_context F>
PolyMatrix<F> kernel_basis(const PolyMatrix<F>& a) {
    HermiteResult<F> hf = hermite_form(a);
    int rank = static_cast<int>(hf.pivots.size());
    int nfree = a.cols() - rank;
    PolyMatrix<F> out(a.field(), a.cols(), nfree);
    for (int j = 0; j < nfree; ++j)
        for (int r = 0; r < a.cols(); ++r) out.at(r, j) = hf.u.at(r, rank + j);
    return out;
}

/* Solve a X = b over k[x]; nullopt when no solution exists. */
template <field_context F>
std::optional<PolyMatrix<F>> solve_right(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
    check_same_field(a.field(), b.field(), "solve_right");
    if (a.rows() != b.rows()) throw std::invalid_argument("solve_right: row count mismatch");
    const F& k = a.field();
    HermiteResult<F> hf = hermite_form(a);
    PolyMatrix<F> y(k, a.cols(), b.cols());
    for (int c = 0; c < b.cols(); ++c) {
        std::vector<Poly<F>> res;
        res.reserve(static_cast<std::size_t>(a.rows()));
        for (int r = 0; r < a.rows(); ++r) res.push_back(b.at(r, c));
        for (const auto& [prow, pcol] : hf.pivots) {
            auto [ok, q] = divide_exact(res[static_cast<std::size_t>(prow)], hf.h.at(prow, pcol));
            if (!ok) return std::nullopt;
            if (!q.is_zero())
                for (int r = 0; r < a.rows(); ++r)
                    res[static_cast<std::size_t>(r)] =
                        res[static_cast<std::size_t>(r)] - q * hf.h.at(r, pcol);
            y.at(pcol, c) = q;
        }
        for (int r = 0; r < a.rows(); ++r)
            if (!res[static_cast<std::size_t>(r)].is_zero()) return std::nullopt;
    }
    return hf.u * y;
}

/* Inverse of a square matrix with unit determinant (or any invertible one
 * over k[x]); nullopt if not invertible. */
template <field_context F>
std::optional<PolyMatrix<F>> inverse(const PolyMatrix<F>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
    auto x = solve_right(a, PolyMatrix<F>::identity(a.field(), a.rows()));
    if (!x) return std::nullopt;
    /* over a commutative ring a right inverse of a square matrix is two-sided */
    return x;
}

/* ------------------------------------------------------------------ */
/* Determinant (fraction-free Bareiss)                                  */
/* ------------------------------------------------------------------ */

template <field_context F>
Poly<F> det(const PolyMatrix<F>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("det: matrix not square");
    const F& k = a.field();
    int n = a.rows();
    if (n == 0) return Poly<F>::from_long(k, 1);
    PolyMatrix<F> m = a;
    bool negate = false;
    Poly<F> prev = Poly<F>::from_long(k, 1);
    for (int t = 0; t < n - 1; ++t) {
        if (m.at(t, t).is_zero()) {
            int swap_row = -1;
            for (int r = t + 1; r < n; ++r)
                if (!m.at(r, t).is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return Poly<F>::zero(k);
            for (int c = 0; c < n; ++c) std::swap(m.at(t, c), m.at(swap_row, c));
            negate = !negate;
        }
        for (int r = t + 1; r < n; ++r)
            for (int c = t + 1; c < n; ++c) {
                Poly<F> num = m.at(r, c) * m.at(t, t) - m.at(r, t) * m.at(t, c);
                auto [ok, q] = divide_exact(num, prev);
                if (!ok) throw std::logic_error("det: non-exact Bareiss division");
                m.at(r, c) = q;
            }
        prev = m.at(t, t);
    }
    Poly<F> d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

/* ------------------------------------------------------------------ */
/* Smith normal form                                                    */
/* ------------------------------------------------------------------ */

/* d = u * a * v with u, v unimodular; d diagonal with monic invariant
 * factors d_1 | d_2 | ... . */
template <field_context F>
struct SmithResult {
    PolyMatrix<F> d;
    PolyMatrix<F> u;
    PolyMatrix<F> v;
    std::vector<Poly<F>> invariants;  /* nonzero diagonal entries, in order */
};

template <field_context F>
SmithResult<F> smith_form(const PolyMatrix<F>& a) {
    const F& k = a.field();
    SmithResult<F> res{a, PolyMatrix<F>::identity(k, a.rows()),
                       PolyMatrix<F>::identity(k, a.cols()), {}};
    PolyMatrix<F>& d = res.d;
    PolyMatrix<F>& u = res.u;
    PolyMatrix<F>& v = res.v;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
    };
    auto row_axpy = [&](const Poly<F>& q, int src, int dst) {
        /* row dst -= q * row src */
        if (q.is_zero()) return;
        for (int c = 0; c < d.cols(); ++c) d.at(dst, c) = d.at(dst, c) - q * d.at(src, c);
        for (int c = 0; c < u.cols(); ++c) u.at(dst, c) = u.at(dst, c) - q * u.at(src, c);
    };
    auto col_axpy = [&](const Poly<F>& q, int src, int dst) {
        if (q.is_zero()) return;
        for (int r = 0; r < d.rows(); ++r) d.at(r, dst) = d.at(r, dst) - q * d.at(r, src);
        for (int r = 0; r < v.rows(); ++r) v.at(r, dst) = v.at(r, dst) - q * v.at(r, src);
    };

    int t = 0;
    int lim = std::min(d.rows(), d.cols());
    while (t < lim) {
        /* find pivot: minimal degree in the remaining block, ties by (row, col) */
        int pr = -1, pc = -1;
        for (int r = t; r < d.rows(); ++r)
            for (int c = t; c < d.cols(); ++c) {
                if (d.at(r, c).is_zero()) continue;
                if (pr < 0 || d.at(r, c).degree() < d.at(pr, pc).degree()) {
                    pr = r;
                    pc = c;
                }
            }
        if (pr < 0) break;
        swap_rows(t, pr);
        swap_cols(t, pc);
        bool clean = true;
        for (int r = t + 1; r < d.rows(); ++r) {
            if (d.at(r, t).is_zero()) continue;
            auto [q, rem] = divrem(d.at(r, t), d.at(t, t));
            row_axpy(q, t, r);
            if (!rem.is_zero()) clean = false;
        }
        for (int c = t + 1; c < d.cols(); ++c) {
            if (d.at(t, c).is_zero()) continue;
            auto [q, rem] = divrem(d.at(t, c), d.at(t, t));
            col_axpy(q, t, c);
            if (!rem.is_zero()) clean = false;
        }
        if (!clean) continue;  /* smaller-degree remainders appeared; re-pivot */
        /* enforce divisibility d_t | d_rc for the remaining block */
        bool divides_all = true;
        for (int r = t + 1; r < d.rows() && divides_all; ++r)
            for (int c = t + 1; c < d.cols() && divides_all; ++c) {
                if (d.at(r, c).is_zero()) continue;
                auto [ok, q] = divide_exact(d.at(r, c), d.at(t, t));
                (void)q;
                if (!ok) {
                    /* fold row r into row t and restart the pivot step */
                    row_axpy(Poly<F>::from_long(k, -1), r, t);
                    divides_all = false;
                }
            }
        if (!divides_all) continue;
        if (!d.at(t, t).is_monic()) {
            typename F::Elem s = k.inv(d.at(t, t).lead());
            for (int c = t; c < d.cols(); ++c) d.at(t, c) = scale(s, d.at(t, c));
            for (int c = 0; c < u.cols(); ++c) u.at(t, c) = scale(s, u.at(t, c));
        }
        ++t;
    }
    for (int i = 0; i < lim; ++i)
        if (!d.at(i, i).is_zero()) res.invariants.push_back(d.at(i, i));
    return res;
}

/* ------------------------------------------------------------------ */
/* Cokernel dimension                                                   */
/* ------------------------------------------------------------------ */

/* dim_k of coker(a : k[x]^cols -> k[x]^rows); nullopt means infinite. */
template <field_context F>
std::optional<long> coker_kdim(const PolyMatrix<F>& a) {
    SmithResult<F> sf = smith_form(a);
    if (static_cast<int>(sf.invariants.size()) < a.rows()) return std::nullopt;
    long dim = 0;
    for (const auto& p : sf.invariants) dim += p.degree();
    return dim;
}

}  // namespace mfn
