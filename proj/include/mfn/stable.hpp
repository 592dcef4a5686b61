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

#include "frobenius.hpp"

namespace mfn {

/* ------------------------------------------------------------------ */
/* The intertwining system                                              */
/* ------------------------------------------------------------------ */

/* Hom_MF(M, N) as the kernel of one big k[x]-linear system in the stacked
 * column-major vectorizations of the components f_0, ..., f_{n-1}. */
template <field_context F>
struct HomSystem {
    PolyMatrix<F> t;               /* constraints x unknowns */
    std::vector<int> offsets;      /* unknown offset of vec(f_i) */
    std::vector<std::pair<int, int>> shapes;  /* (N_i, M_i) per slot */
};

template <field_context F>
HomSystem<F> hom_system(const Factorization<F>& m, const Factorization<F>& nobj) {
    if (!(m.pot == nobj.pot)) throw std::invalid_argument("hom_system: potential mismatch");
    const F& k = m.field();
    int n = m.n();
    std::vector<int> offsets;
    std::vector<std::pair<int, int>> shapes;
    int unknowns = 0;
    for (int i = 0; i < n; ++i) {
        offsets.push_back(unknowns);
        shapes.emplace_back(nobj.rank(i), m.rank(i));
        unknowns += nobj.rank(i) * m.rank(i);
    }
    int rows = 0;
    for (int i = 0; i < n; ++i) rows += nobj.rank(i + 1) * m.rank(i);
    PolyMatrix<F> t(k, rows, unknowns);
    int row0 = 0;
    for (int i = 0; i < n; ++i) {
        int in = (i + 1) % n;
        /* f_{i+1} delta^M_i - delta^N_i f_i = 0, vectorized column-major:
         * ((delta^M_i)^T (x) I_{N_{i+1}}) vec f_{i+1} - (I_{M_i} (x) delta^N_i) vec f_i */
        PolyMatrix<F> a = kron(transpose(m.map(i)), PolyMatrix<F>::identity(k, nobj.rank(in)));
        PolyMatrix<F> b = kron(PolyMatrix<F>::identity(k, m.rank(i)), nobj.map(i));
        for (int r = 0; r < a.rows(); ++r) {
            for (int c = 0; c < a.cols(); ++c)
                t.at(row0 + r, offsets[static_cast<std::size_t>(in)] + c) = a.at(r, c);
            for (int c = 0; c < b.cols(); ++c)
                t.at(row0 + r, offsets[static_cast<std::size_t>(i)] + c) =
                    t.at(row0 + r, offsets[static_cast<std::size_t>(i)] + c) - b.at(r, c);
        }
        row0 += a.rows();
    }
    return HomSystem<F>{std::move(t), std::move(offsets), std::move(shapes)};
}

template <field_context F>
PolyMatrix<F> pack_morphism(const HomSystem<F>& sys, const std::vector<PolyMatrix<F>>& comps) {
    const F& k = sys.t.field();
    PolyMatrix<F> v(k, sys.t.cols(), 1);
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& c = comps[i];
        int off = sys.offsets[i];
        for (int col = 0; col < c.cols(); ++col)
            for (int row = 0; row < c.rows(); ++row)
                v.at(off + col * c.rows() + row, 0) = c.at(row, col);
    }
    return v;
}

template <field_context F>
std::vector<PolyMatrix<F>> unpack_morphism(const HomSystem<F>& sys, const PolyMatrix<F>& v,
                                           int column = 0) {
    const F& k = sys.t.field();
    std::vector<PolyMatrix<F>> comps;
    for (std::size_t i = 0; i < sys.shapes.size(); ++i) {
        auto [rows, cols] = sys.shapes[i];
        PolyMatrix<F> c(k, rows, cols);
        int off = sys.offsets[i];
        for (int col = 0; col < cols; ++col)
            for (int row = 0; row < rows; ++row) c.at(row, col) = v.at(off + col * rows + row, column);
        comps.push_back(std::move(c));
    }
    return comps;
}

/* Free k[x]-basis of Hom_MF(M, N). */
template <field_context F>
struct HomBasis {
    HomSystem<F> sys;
    PolyMatrix<F> basis;  /* unknowns x h */
};

template <field_context F>
HomBasis<F> hom_basis(const Factorization<F>& m, const Factorization<F>& nobj) {
    HomSystem<F> sys = hom_system(m, nobj);
    PolyMatrix<F> ker = kernel_basis(sys.t);
    return HomBasis<F>{std::move(sys), std::move(ker)};
}

template <field_context F>
Morphism<F> morphism_from_vector(const HomBasis<F>& hb, const Factorization<F>& m,
                                 const Factorization<F>& nobj, int column) {
    return make_morphism(m, nobj, unpack_morphism(hb.sys, hb.basis, column), false);
}

/* ------------------------------------------------------------------ */
/* Null-homotopic maps and stable Hom                                   */
/* ------------------------------------------------------------------ */

/* Decide whether f factors through the canonical projective cover of its
 * target; over the graded-split exact structure this is equivalent to
 * factoring through some projective-injective object.  On success returns
 * the lift g : M -> P(N) with q o g = f. */
template <field_context F>
std::optional<Morphism<F>> factors_through_projinj(const Morphism<F>& f) {
    const F& k = f.field();
    Cover<F> cover = projective_cover(f.target);
    HomSystem<F> sys = hom_system(f.source, cover.p);
    int n = f.n();
    /* stack the intertwining constraints with q_j g_j = f_j */
    int extra = 0;
    for (int j = 0; j < n; ++j) extra += f.target.rank(j) * f.source.rank(j);
    PolyMatrix<F> a(k, sys.t.rows() + extra, sys.t.cols());
    PolyMatrix<F> b(k, sys.t.rows() + extra, 1);
    for (int r = 0; r < sys.t.rows(); ++r)
        for (int c = 0; c < sys.t.cols(); ++c) a.at(r, c) = sys.t.at(r, c);
    int row0 = sys.t.rows();
    for (int j = 0; j < n; ++j) {
        PolyMatrix<F> qk =
            kron(PolyMatrix<F>::identity(k, f.source.rank(j)), cover.q.comp(j));
        for (int r = 0; r < qk.rows(); ++r)
            for (int c = 0; c < qk.cols(); ++c)
                a.at(row0 + r, sys.offsets[static_cast<std::size_t>(j)] + c) = qk.at(r, c);
        PolyMatrix<F> fv = vec_columns(f.comp(j));
        for (int r = 0; r < fv.rows(); ++r) b.at(row0 + r, 0) = fv.at(r, 0);
        row0 += qk.rows();
    }
    auto x = solve_right(a, b);
    if (!x) return std::nullopt;
    Morphism<F> g = make_morphism(f.source, cover.p, unpack_morphism(sys, *x), true);
    if (!(compose(cover.q, g) == f))
        throw std::logic_error("factors_through_projinj: witness verification failed");
    return g;
}

template <field_context F>
bool is_stably_zero(const Factorization<F>& m) {
    return factors_through_projinj(identity_morphism(m)).has_value();
}

/* The stable Hom space: Hom_MF(M, N) presented by a free basis, the
 * submodule of null-homotopic maps presented by coordinates in that basis,
 * and the dimension over k of the quotient. */
template <field_context F>
struct StableHomReport {
    std::string source_desc, target_desc;
    int hom_rank = 0;                      /* free rank of Hom_MF(M, N) */
    PolyMatrix<F> null_coords;             /* hom_rank x (number of null generators) */
    std::vector<Poly<F>> invariant_factors; /* nonzero Smith invariants of null_coords */
    std::optional<long> dim;               /* dim_k of the stable Hom; nullopt = infinite */
    std::optional<Morphism<F>> witness;    /* a map that is nonzero stably, when dim > 0 */
};

template <field_context F>
StableHomReport<F> stable_hom(const Factorization<F>& m, const Factorization<F>& nobj) {
    const F& k = m.field();
    StableHomReport<F> rep{describe(m), describe(nobj), 0, PolyMatrix<F>(k, 0, 0), {}, 0L,
                           std::nullopt};
    HomBasis<F> hb = hom_basis(m, nobj);
    int h = hb.basis.cols();
    rep.hom_rank = h;
    if (h == 0) {
        rep.null_coords = PolyMatrix<F>(k, 0, 0);
        rep.dim = 0;
        return rep;
    }
    Cover<F> cover = projective_cover(nobj);
    HomBasis<F> hp = hom_basis(m, cover.p);
    int g = hp.basis.cols();
    /* coordinates of q o (each generator of Hom(M, P(N))) in the hom basis */
    PolyMatrix<F> l(k, hb.basis.rows(), g);
    for (int c = 0; c < g; ++c) {
        Morphism<F> gm = morphism_from_vector(hp, m, cover.p, c);
        Morphism<F> qg = compose(cover.q, gm);
        PolyMatrix<F> v = pack_morphism(hb.sys, qg.comps);
        for (int r = 0; r < v.rows(); ++r) l.at(r, c) = v.at(r, 0);
    }
    auto coords = solve_right(hb.basis, l);
    if (!coords)
        throw std::logic_error("stable_hom: null-homotopic maps not in the hom module");
    rep.null_coords = *coords;
    SmithResult<F> sf = smith_form(rep.null_coords);
    rep.invariant_factors = sf.invariants;
    if (static_cast<int>(sf.invariants.size()) < h) {
        rep.dim = std::nullopt;  /* infinite-dimensional quotient */
    } else {
        long d = 0;
        for (const auto& p : sf.invariants) d += p.degree();
        rep.dim = d;
    }
    if (!rep.dim || *rep.dim > 0) {
        /* some basis vector lies outside the null submodule; find the first */
        for (int j = 0; j < h; ++j) {
            PolyMatrix<F> ej(k, h, 1);
            ej.at(j, 0) = Poly<F>::from_long(k, 1);
            if (!solve_right(rep.null_coords, ej)) {
                rep.witness = morphism_from_vector(hb, m, nobj, j);
                break;
            }
        }
    }
    return rep;
}

template <field_context F>
std::optional<long> stable_hom_dim(const Factorization<F>& m, const Factorization<F>& nobj) {
    return stable_hom(m, nobj).dim;
}

/* f is a stable isomorphism iff its cone is stably zero. */
template <field_context F>
bool stably_isomorphic_via(const Morphism<F>& f) {
    return is_stably_zero(cone(f).cone);
}

}  // namespace mfn
