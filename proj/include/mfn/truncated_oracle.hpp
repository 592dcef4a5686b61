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

#include <stdexcept>
#include <string>
#include <vector>

#include "scalar_linalg.hpp"
#include "stable.hpp"

namespace mfn {

/* Brute-force recomputation of stable Hom dimensions by degree truncation
 * over the base field: no polynomial normal forms are involved.  Morphism
 * tuples with entries of degree < C form a finite-dimensional k-vector
 * space cut out by plain linear constraints on coefficients; null-homotopic
 * maps are spanned by cover composites.  Lifts are allowed extra degree
 * headroom and their images are intersected with the truncation window by
 * a rank difference, so no null map near the cutoff is missed.  A value is
 * accepted once two consecutive cutoffs agree. */

namespace detail {

/* Coefficient layout for morphism tuples truncated at degree < cutoff:
 * slot-major, then column-major within a component, then coefficient. */
struct TruncatedLayout {
    std::vector<int> offsets;                 /* per slot */
    std::vector<std::pair<int, int>> shapes;  /* (rows, cols) per slot */
    int cutoff = 0;
    int total = 0;
};

template <field_context F>
TruncatedLayout truncated_layout(const Factorization<F>& m, const Factorization<F>& nobj,
                                 int cutoff) {
    TruncatedLayout lay;
    lay.cutoff = cutoff;
    int off = 0;
    for (int i = 0; i < m.n(); ++i) {
        lay.offsets.push_back(off);
        lay.shapes.emplace_back(nobj.rank(i), m.rank(i));
        off += nobj.rank(i) * m.rank(i) * cutoff;
    }
    lay.total = off;
    return lay;
}

inline int coeff_index(const TruncatedLayout& lay, int slot, int row, int col, int deg) {
    int rows = lay.shapes[static_cast<std::size_t>(slot)].first;
    return lay.offsets[static_cast<std::size_t>(slot)] + (col * rows + row) * lay.cutoff + deg;
}

/* Constraint matrix of the intertwining equations on truncated coefficient
 * vectors. */
template <field_context F>
ScalarMat<F> truncated_constraints(const Factorization<F>& m, const Factorization<F>& nobj,
                                   const TruncatedLayout& lay) {
    const F& k = m.field();
    int n = m.n();
    int cutoff = lay.cutoff;
    int dmax = 0;
    for (int i = 0; i < n; ++i) {
        dmax = std::max(dmax, m.map(i).max_entry_degree());
        dmax = std::max(dmax, nobj.map(i).max_entry_degree());
    }
    int crows = 0;
    for (int i = 0; i < n; ++i) crows += nobj.rank(i + 1) * m.rank(i) * (cutoff + dmax);
    ScalarMat<F> t(k, crows, lay.total);
    int row0 = 0;
    for (int i = 0; i < n; ++i) {
        int in = (i + 1) % n;
        int nr = nobj.rank(in), nc = m.rank(i);
        /* coefficient of x^a in (f_{i+1} deltaM_i - deltaN_i f_i)[r][c] */
        for (int r = 0; r < nr; ++r)
            for (int c = 0; c < nc; ++c)
                for (int a = 0; a < cutoff + dmax; ++a) {
                    int row = row0 + ((c * nr + r) * (cutoff + dmax)) + a;
                    for (int s = 0; s < m.rank(in); ++s) {
                        const Poly<F>& dm = m.map(i).at(s, c);
                        for (int b = 0; b <= dm.degree(); ++b) {
                            if (a - b < 0 || a - b >= cutoff) continue;
                            int idx = coeff_index(lay, in, r, s, a - b);
                            t.at(row, idx) = k.add(t.at(row, idx), dm.coeff(b));
                        }
                    }
                    for (int s = 0; s < nobj.rank(i); ++s) {
                        const Poly<F>& dn = nobj.map(i).at(r, s);
                        for (int b = 0; b <= dn.degree(); ++b) {
                            if (a - b < 0 || a - b >= cutoff) continue;
                            int idx = coeff_index(lay, i, s, c, a - b);
                            t.at(row, idx) = k.sub(t.at(row, idx), dn.coeff(b));
                        }
                    }
                }
        row0 += nr * nc * (cutoff + dmax);
    }
    return t;
}

template <field_context F>
std::vector<PolyMatrix<F>> unpack_truncated(const F& k, const TruncatedLayout& lay,
                                            const ScalarMat<F>& v, int column) {
    std::vector<PolyMatrix<F>> comps;
    for (std::size_t i = 0; i < lay.shapes.size(); ++i) {
        auto [rows, cols] = lay.shapes[i];
        PolyMatrix<F> c(k, rows, cols);
        for (int col = 0; col < cols; ++col)
            for (int row = 0; row < rows; ++row) {
                std::vector<typename F::Elem> cf;
                cf.reserve(static_cast<std::size_t>(lay.cutoff));
                for (int d = 0; d < lay.cutoff; ++d)
                    cf.push_back(v.at(coeff_index(lay, static_cast<int>(i), row, col, d), column));
                c.at(row, col) = Poly<F>(k, std::move(cf));
            }
        comps.push_back(std::move(c));
    }
    return comps;
}

template <field_context F>
void pack_truncated(const TruncatedLayout& lay, const std::vector<PolyMatrix<F>>& comps,
                    ScalarMat<F>& out, int out_col) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        for (int col = 0; col < c.cols(); ++col)
            for (int row = 0; row < c.rows(); ++row) {
                const Poly<F>& p = c.at(row, col);
                if (p.degree() >= lay.cutoff)
                    throw std::logic_error("pack_truncated: degree exceeds cutoff");
                for (int d = 0; d <= p.degree(); ++d)
                    out.at(coeff_index(lay, static_cast<int>(i), row, col, d), out_col) =
                        p.coeff(d);
            }
    }
}

}  // namespace detail

/* dim_k of (truncated Hom) minus dim_k of the truncated null-homotopic
 * subspace, where the latter is the intersection of the span of cover
 * composites with the degree-< cutoff window. */
template <field_context F>
long truncated_stable_dim(const Factorization<F>& m, const Factorization<F>& nobj, int cutoff) {
    const F& k = m.field();
    detail::TruncatedLayout flay = detail::truncated_layout(m, nobj, cutoff);
    ScalarMat<F> t = detail::truncated_constraints(m, nobj, flay);
    long hom_dim = static_cast<long>(flay.total) - rank(t);

    Cover<F> cover = projective_cover(nobj);
    int e = 0;
    for (const auto& c : cover.q.comps) e = std::max(e, c.max_entry_degree());
    int gcut = cutoff + e;  /* headroom: lifts may exceed the degree of their image */
    detail::TruncatedLayout glay = detail::truncated_layout(m, cover.p, gcut);
    ScalarMat<F> lifts = kernel_basis(detail::truncated_constraints(m, cover.p, glay));
    detail::TruncatedLayout wide = detail::truncated_layout(m, nobj, gcut + e);
    ScalarMat<F> images(k, wide.total, lifts.cols());
    for (int c = 0; c < lifts.cols(); ++c) {
        std::vector<PolyMatrix<F>> g = detail::unpack_truncated(k, glay, lifts, c);
        std::vector<PolyMatrix<F>> qg;
        qg.reserve(g.size());
        for (int j = 0; j < nobj.n(); ++j)
            qg.push_back(cover.q.comp(j) * g[static_cast<std::size_t>(j)]);
        detail::pack_truncated(wide, qg, images, c);
    }
    /* null maps inside the window = span(images) ∩ {top coefficients zero} */
    int top_rows = 0;
    for (auto [rows, cols] : wide.shapes) top_rows += rows * cols * (wide.cutoff - cutoff);
    ScalarMat<F> top(k, top_rows, images.cols());
    int tr = 0;
    for (std::size_t i = 0; i < wide.shapes.size(); ++i) {
        auto [rows, cols] = wide.shapes[i];
        for (int col = 0; col < cols; ++col)
            for (int row = 0; row < rows; ++row)
                for (int d = cutoff; d < wide.cutoff; ++d) {
                    int src = detail::coeff_index(wide, static_cast<int>(i), row, col, d);
                    for (int cc = 0; cc < images.cols(); ++cc) top.at(tr, cc) = images.at(src, cc);
                    ++tr;
                }
    }
    long null_dim = rank(images) - rank(top);
    return hom_dim - null_dim;
}

/* Stable Hom dimension by truncation, accepted when two consecutive
 * cutoffs agree.  Throws if no stabilization occurs within max_rounds. */
struct OracleResult {
    long dim = 0;
    int settled_cutoff = 0;  /* first of the two agreeing cutoffs */
};

template <field_context F>
OracleResult oracle_stable_hom_dim(const Factorization<F>& m, const Factorization<F>& nobj,
                                   int base_cutoff = 0, int max_rounds = 16) {
    if (!(m.pot == nobj.pot))
        throw std::invalid_argument("oracle_stable_hom_dim: potential mismatch");
    int dmax = m.pot.w.degree();
    for (int i = 0; i < m.n(); ++i) {
        dmax = std::max(dmax, m.map(i).max_entry_degree());
        dmax = std::max(dmax, nobj.map(i).max_entry_degree());
    }
    int c = base_cutoff > 0 ? base_cutoff : dmax * 2 + 3;
    long prev = truncated_stable_dim(m, nobj, c);
    for (int round = 0; round < max_rounds; ++round) {
        long cur = truncated_stable_dim(m, nobj, c + 1);
        if (cur == prev) return {cur, c};
        prev = cur;
        ++c;
    }
    throw std::runtime_error("oracle_stable_hom_dim: no stabilization after " +
                             std::to_string(max_rounds) + " rounds (last value " +
                             std::to_string(prev) + ")");
}

/* Brute-force cokernel k-dimension by truncation, with the same headroom
 * treatment: shifted columns may stick out of the window; the span is
 * intersected with the window by a rank difference. */
template <field_context F>
long truncated_coker_dim(const PolyMatrix<F>& a, int cutoff) {
    const F& k = a.field();
    int rows = a.rows();
    int e = std::max(a.max_entry_degree(), 0);
    int wide = cutoff + e;
    int gens = a.cols() * cutoff;
    ScalarMat<F> span(k, rows * wide, gens);
    int col = 0;
    for (int c = 0; c < a.cols(); ++c)
        for (int shift_deg = 0; shift_deg < cutoff; ++shift_deg) {
            for (int r = 0; r < rows; ++r) {
                const Poly<F>& p = a.at(r, c);
                for (int d = 0; d <= p.degree(); ++d)
                    span.at(r * wide + shift_deg + d, col) = p.coeff(d);
            }
            ++col;
        }
    ScalarMat<F> top(k, rows * e, gens);
    for (int r = 0; r < rows; ++r)
        for (int d = cutoff; d < wide; ++d)
            for (int cc = 0; cc < gens; ++cc)
                top.at(r * e + (d - cutoff), cc) = span.at(r * wide + d, cc);
    long inside = rank(span) - rank(top);
    return static_cast<long>(rows) * cutoff - inside;
}

/* Truncated estimate of coker_kdim; nullopt when it keeps growing
 * (infinite-dimensional). */
template <field_context F>
std::optional<long> oracle_coker_kdim(const PolyMatrix<F>& a) {
    int cutoff = a.max_entry_degree() + 5;
    if (cutoff < 5) cutoff = 5;
    long s0 = truncated_coker_dim(a, cutoff);
    long s1 = truncated_coker_dim(a, cutoff + 1);
    if (s0 == s1) return s0;
    return std::nullopt;
}

}  // namespace mfn
