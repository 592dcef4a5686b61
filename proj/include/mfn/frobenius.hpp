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

#include "factorization.hpp"

namespace mfn {

/* ------------------------------------------------------------------ */
/* Adjunction maps for the trivial factorizations                       */
/* ------------------------------------------------------------------ */

/* counit(M, i) : trivial(i)_{r_i} -> M, the morphism with identity slot-i
 * component; slot j carries the composite of the differentials from slot i
 * to slot j. */
template <field_context F>
Morphism<F> counit(const Factorization<F>& m, int i) {
    int n = m.n();
    if (i < 0 || i >= n) throw std::invalid_argument("counit: slot index out of range");
    Factorization<F> p = trivial(m.pot, i, m.rank(i));
    std::vector<PolyMatrix<F>> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) comps.push_back(composite_of_maps(m, i, (j - i + n) % n));
    return make_morphism(p, m, std::move(comps), false);
}

/* unit(M, i) : M -> T where T is the trivial factorization of rank r_i
 * whose W-arrow leaves slot i (namely trivial((i+1) mod n)).  Slot j
 * carries the composite of the differentials from slot j to slot i; the
 * slot-i component is the identity. */
template <field_context F>
Morphism<F> unit(const Factorization<F>& m, int i) {
    int n = m.n();
    if (i < 0 || i >= n) throw std::invalid_argument("unit: slot index out of range");
    Factorization<F> t = trivial(m.pot, (i + 1) % n, m.rank(i));
    std::vector<PolyMatrix<F>> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) comps.push_back(composite_of_maps(m, j, (i - j + n) % n));
    return make_morphism(m, t, std::move(comps), false);
}

/* Functorial lift of a single k[x]-matrix through the trivial construction:
 * a map X -> Y of free modules induces trivial(i)_X -> trivial(i)_Y with
 * every component equal to the given matrix. */
template <field_context F>
Morphism<F> trivial_lift(const Potential<F>& pot, int i, const PolyMatrix<F>& f) {
    Factorization<F> src = trivial(pot, i, f.cols());
    Factorization<F> dst = trivial(pot, i, f.rows());
    std::vector<PolyMatrix<F>> comps(static_cast<std::size_t>(pot.n), f);
    return make_morphism(src, dst, std::move(comps), false);
}

/* ------------------------------------------------------------------ */
/* Projective cover and injective hull                                  */
/* ------------------------------------------------------------------ */

/* Cover: P = (+)_i trivial(i)_{r_i} (summands in ascending slot order),
 * q : P -> M assembled from the counits.  q admits slotwise sections
 * (graded-split epi): section[i] : M_i -> P_i with q_i section[i] = I. */
template <field_context F>
struct Cover {
    Factorization<F> p;
    Morphism<F> q;
    std::vector<PolyMatrix<F>> section;
};

template <field_context F>
Cover<F> projective_cover(const Factorization<F>& m) {
    const F& k = m.field();
    int n = m.n();
    int total = m.total_rank();
    std::vector<int> ranks(static_cast<std::size_t>(n), total);
    std::vector<PolyMatrix<F>> maps;
    maps.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        /* block-diagonal over summands i: W where j == (i-1) mod n, else I */
        PolyMatrix<F> d(k, total, total);
        int off = 0;
        for (int i = 0; i < n; ++i) {
            bool carries_w = (j == (i - 1 + n) % n);
            for (int r = 0; r < m.rank(i); ++r)
                d.at(off + r, off + r) =
                    carries_w ? m.pot.w : Poly<F>::from_long(k, 1);
            off += m.rank(i);
        }
        maps.push_back(std::move(d));
    }
    Factorization<F> p = make_factorization(m.pot, std::move(ranks), std::move(maps), false);

    std::vector<PolyMatrix<F>> qcomps;
    std::vector<PolyMatrix<F>> section;
    for (int j = 0; j < n; ++j) {
        PolyMatrix<F> qj(k, m.rank(j), total);
        PolyMatrix<F> sj(k, total, m.rank(j));
        int off = 0;
        for (int i = 0; i < n; ++i) {
            PolyMatrix<F> cij = composite_of_maps(m, i, (j - i + n) % n);
            for (int r = 0; r < m.rank(j); ++r)
                for (int c = 0; c < m.rank(i); ++c) qj.at(r, off + c) = cij.at(r, c);
            if (i == j)
                for (int r = 0; r < m.rank(j); ++r)
                    sj.at(off + r, r) = Poly<F>::from_long(k, 1);
            off += m.rank(i);
        }
        qcomps.push_back(std::move(qj));
        section.push_back(std::move(sj));
    }
    return Cover<F>{p, make_morphism(p, m, std::move(qcomps), false), std::move(section)};
}

/* Hull: I = (+)_i trivial((i+1) mod n)_{r_i} (summands in ascending slot
 * order of i), u : M -> I assembled from the units; retraction[i] : I_i ->
 * M_i with retraction[i] u_i = I. */
template <field_context F>
struct Hull {
    Factorization<F> i;
    Morphism<F> u;
    std::vector<PolyMatrix<F>> retraction;
};

template <field_context F>
Hull<F> injective_hull(const Factorization<F>& m) {
    const F& k = m.field();
    int n = m.n();
    int total = m.total_rank();
    std::vector<int> ranks(static_cast<std::size_t>(n), total);
    std::vector<PolyMatrix<F>> maps;
    maps.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        /* summand i is trivial(i+1): W on arrow j == i, else I */
        PolyMatrix<F> d(k, total, total);
        int off = 0;
        for (int i = 0; i < n; ++i) {
            bool carries_w = (j == i);
            for (int r = 0; r < m.rank(i); ++r)
                d.at(off + r, off + r) =
                    carries_w ? m.pot.w : Poly<F>::from_long(k, 1);
            off += m.rank(i);
        }
        maps.push_back(std::move(d));
    }
    Factorization<F> hull = make_factorization(m.pot, std::move(ranks), std::move(maps), false);

    std::vector<PolyMatrix<F>> ucomps;
    std::vector<PolyMatrix<F>> retraction;
    for (int j = 0; j < n; ++j) {
        PolyMatrix<F> uj(k, total, m.rank(j));
        PolyMatrix<F> rj(k, m.rank(j), total);
        int off = 0;
        for (int i = 0; i < n; ++i) {
            PolyMatrix<F> uij = composite_of_maps(m, j, (i - j + n) % n);
            for (int r = 0; r < m.rank(i); ++r)
                for (int c = 0; c < m.rank(j); ++c) uj.at(off + r, c) = uij.at(r, c);
            if (i == j)
                for (int r = 0; r < m.rank(j); ++r)
                    rj.at(r, off + r) = Poly<F>::from_long(k, 1);
            off += m.rank(i);
        }
        ucomps.push_back(std::move(uj));
        retraction.push_back(std::move(rj));
    }
    return Hull<F>{hull, make_morphism(m, hull, std::move(ucomps), false), std::move(retraction)};
}

/* ------------------------------------------------------------------ */
/* Graded-split cokernels, shift, cone                                  */
/* ------------------------------------------------------------------ */

/* Given a slotwise-split mono M -> A (witnessed by retraction[i] with
 * retraction[i] mono_i = I), produce the quotient factorization C on the
 * slotwise complements ker(retraction[i]), the projection A -> C, and the
 * chosen complement bases K_i : C_i -> A_i. */
template <field_context F>
struct SplitCokernel {
    Factorization<F> c;
    Morphism<F> proj;                     /* A -> C */
    std::vector<PolyMatrix<F>> basis;     /* basis[i] : A_i x C_i, complement columns */
};

template <field_context F>
SplitCokernel<F> graded_split_cokernel(const Morphism<F>& mono,
                                       const std::vector<PolyMatrix<F>>& retraction) {
    const F& k = mono.field();
    const Factorization<F>& a = mono.target;
    int n = mono.n();
    if (static_cast<int>(retraction.size()) != n)
        throw std::invalid_argument("graded_split_cokernel: need one retraction per slot");
    for (int i = 0; i < n; ++i) {
        if (retraction[static_cast<std::size_t>(i)] * mono.comp(i) !=
            PolyMatrix<F>::identity(k, mono.source.rank(i)))
            throw std::invalid_argument(
                "graded_split_cokernel: retraction * mono != identity at slot " +
                std::to_string(i));
    }
    std::vector<PolyMatrix<F>> basis;
    std::vector<int> ranks;
    for (int i = 0; i < n; ++i) {
        PolyMatrix<F> ker = kernel_basis(retraction[static_cast<std::size_t>(i)]);
        int expected = a.rank(i) - mono.source.rank(i);
        if (ker.cols() != expected)
            throw std::logic_error("graded_split_cokernel: complement has unexpected rank");
        basis.push_back(std::move(ker));
        ranks.push_back(expected);
    }
    /* quotient differentials and projections in the basis [mono_i | K_i] */
    std::vector<PolyMatrix<F>> cmaps;
    std::vector<PolyMatrix<F>> pcomps;
    for (int i = 0; i < n; ++i) {
        int in = (i + 1) % n;
        PolyMatrix<F> amb_next = hstack(mono.comp(in), basis[static_cast<std::size_t>(in)]);
        auto x = solve_right(amb_next, a.map(i) * basis[static_cast<std::size_t>(i)]);
        if (!x) throw std::logic_error("graded_split_cokernel: quotient map solve failed");
        cmaps.push_back(block(*x, mono.source.rank(in), 0, ranks[static_cast<std::size_t>(in)],
                              ranks[static_cast<std::size_t>(i)]));
        PolyMatrix<F> amb_here = hstack(mono.comp(i), basis[static_cast<std::size_t>(i)]);
        auto y = solve_right(amb_here, PolyMatrix<F>::identity(k, a.rank(i)));
        if (!y) throw std::logic_error("graded_split_cokernel: projection solve failed");
        pcomps.push_back(
            block(*y, mono.source.rank(i), 0, ranks[static_cast<std::size_t>(i)], a.rank(i)));
    }
    Factorization<F> c = make_factorization(a.pot, std::move(ranks), std::move(cmaps), true);
    return SplitCokernel<F>{c, make_morphism(a, c, std::move(pcomps), true), std::move(basis)};
}

/* Suspension: the graded-split cokernel of the injective hull embedding.
 * Canonical up to the choices fixed above; shift(M) is well defined up to
 * stable isomorphism only. */
template <field_context F>
struct Shift {
    Factorization<F> shifted;
    Hull<F> hull;
    Morphism<F> proj;  /* I(M) -> M[1] */
};

template <field_context F>
Shift<F> shift(const Factorization<F>& m) {
    Hull<F> h = injective_hull(m);
    SplitCokernel<F> ck = graded_split_cokernel(h.u, h.retraction);
    return Shift<F>{ck.c, std::move(h), ck.proj};
}

/* Mapping cone of f : M -> N via the hull pushout: the graded-split
 * cokernel of (u, -f) : M -> I(M) (+) N, with the triangle maps
 * N -> C and C -> M[1]. */
template <field_context F>
struct Cone {
    Factorization<F> cone;
    Morphism<F> from_target;    /* N -> C */
    Morphism<F> to_shift;       /* C -> M[1] */
    Factorization<F> shifted_source;
};

template <field_context F>
Cone<F> cone(const Morphism<F>& f) {
    const F& k = f.field();
    const Factorization<F>& m = f.source;
    const Factorization<F>& nobj = f.target;
    int n = f.n();
    Hull<F> h = injective_hull(m);
    DirectSum<F> amb = direct_sum(h.i, nobj);
    std::vector<PolyMatrix<F>> mono_comps, retr;
    for (int i = 0; i < n; ++i) {
        mono_comps.push_back(vstack(h.u.comp(i), -f.comp(i)));
        retr.push_back(hstack(h.retraction[static_cast<std::size_t>(i)],
                              PolyMatrix<F>(k, m.rank(i), nobj.rank(i))));
    }
    Morphism<F> mono = make_morphism(m, amb.sum, std::move(mono_comps), true);
    SplitCokernel<F> ck = graded_split_cokernel(mono, retr);

    Morphism<F> from_target = compose(ck.proj, amb.incl_right);

    SplitCokernel<F> sh = graded_split_cokernel(h.u, h.retraction);
    std::vector<PolyMatrix<F>> conn;
    for (int i = 0; i < n; ++i) {
        PolyMatrix<F> top =
            block(ck.basis[static_cast<std::size_t>(i)], 0, 0, h.i.rank(i),
                  ck.basis[static_cast<std::size_t>(i)].cols());
        conn.push_back(sh.proj.comp(i) * top);
    }
    Morphism<F> to_shift = make_morphism(ck.c, sh.c, std::move(conn), true);
    return Cone<F>{ck.c, std::move(from_target), std::move(to_shift), sh.c};
}

/* ------------------------------------------------------------------ */
/* Admissible short exact sequences                                     */
/* ------------------------------------------------------------------ */

/* A graded-split short exact sequence: mono and epi compose to zero, each
 * slot is a split exact sequence of free modules, witnessed by a slotwise
 * retraction of mono and section of epi. */
template <field_context F>
struct GradedSplitSES {
    Morphism<F> mono;  /* A -> B */
    Morphism<F> epi;   /* B -> C */
    std::vector<PolyMatrix<F>> retraction;  /* B_i -> A_i */
    std::vector<PolyMatrix<F>> section;     /* C_i -> B_i */
};

template <field_context F>
struct SesCheck {
    bool ok = false;
    std::string reason;  /* empty when ok */
    std::optional<GradedSplitSES<F>> ses;
};

template <field_context F>
SesCheck<F> ses_admissible(const Morphism<F>& mono, const Morphism<F>& epi) {
    const F& k = mono.field();
    if (!(mono.target == epi.source))
        return {false, "maps are not composable", std::nullopt};
    if (!is_zero(compose(epi, mono)))
        return {false, "epi o mono is nonzero", std::nullopt};
    int n = mono.n();
    std::vector<PolyMatrix<F>> retraction, section;
    for (int i = 0; i < n; ++i) {
        if (kernel_basis(mono.comp(i)).cols() != 0)
            return {false, "mono fails injectivity at slot " + std::to_string(i), std::nullopt};
        auto sec = solve_right(epi.comp(i), PolyMatrix<F>::identity(k, epi.target.rank(i)));
        if (!sec)
            return {false, "epi is not split surjective at slot " + std::to_string(i),
                    std::nullopt};
        auto retr = solve_right(transpose(mono.comp(i)),
                                PolyMatrix<F>::identity(k, mono.source.rank(i)));
        if (!retr)
            return {false, "mono is not split injective at slot " + std::to_string(i),
                    std::nullopt};
        PolyMatrix<F> ker_epi = kernel_basis(epi.comp(i));
        if (!solve_right(mono.comp(i), ker_epi))
            return {false, "ker(epi) exceeds im(mono) at slot " + std::to_string(i),
                    std::nullopt};
        retraction.push_back(transpose(*retr));
        section.push_back(std::move(*sec));
    }
    return {true, "", GradedSplitSES<F>{mono, epi, std::move(retraction), std::move(section)}};
}

/* W-linearity witness: a factorization of W * id_M through a trivial
 * object, exhibiting that W acts null-homotopically.  Returns (s, c) with
 * s = unit(M, i) : M -> T and c : T -> M such that c o s = W * id_M
 * exactly; the free slot-(i+1) component of c is delta_i. */
template <field_context F>
std::pair<Morphism<F>, Morphism<F>> w_linearity_witness(const Factorization<F>& m, int i = 0) {
    int n = m.n();
    if (i < 0 || i >= n)
        throw std::invalid_argument("w_linearity_witness: slot index out of range");
    Morphism<F> s = unit(m, i);
    std::vector<PolyMatrix<F>> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        comps.push_back(composite_of_maps(m, i, ((j - i - 1 + 2 * n) % n) + 1));
    Morphism<F> c = make_morphism(s.target, m, std::move(comps), true);
    return {std::move(s), std::move(c)};
}

}  // namespace mfn
