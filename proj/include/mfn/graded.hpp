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
#include "scalar_linalg.hpp"

namespace mfn {

/* The model case: Z/n-graded torsion modules over k[u], u of weight 1,
 * with T = u^n acting nilpotently.  A module is a tuple of weight spaces
 * k^{d_0..d_{n-1}} with the u-action action[w] : weight w -> weight w+1. */
template <field_context F>
struct GradedModule {
    int n = 0;
    std::vector<int> dims;
    std::vector<ScalarMat<F>> action;  /* action[w] : dims[w+1] x dims[w] */

    const F& field() const { return action.at(0).field(); }
    int dim(int w) const { return dims[static_cast<std::size_t>(((w % n) + n) % n)]; }
    const ScalarMat<F>& act(int w) const {
        return action[static_cast<std::size_t>(((w % n) + n) % n)];
    }
    int total_dim() const {
        int t = 0;
        for (int d : dims) t += d;
        return t;
    }
};

template <field_context F>
ScalarMat<F> cycle_composite(const GradedModule<F>& m, int from, int steps) {
    ScalarMat<F> acc = ScalarMat<F>::identity(m.field(), m.dim(from));
    for (int s = 0; s < steps; ++s) acc = m.act(from + s) * acc;
    return acc;
}

template <field_context F>
GradedModule<F> make_graded_module(const F& k, int n, std::vector<int> dims,
                                   std::vector<ScalarMat<F>> action) {
    if (n < 2) throw std::invalid_argument("make_graded_module: need n >= 2");
    if (static_cast<int>(dims.size()) != n || static_cast<int>(action.size()) != n)
        throw std::invalid_argument("make_graded_module: need exactly n dims and n maps");
    GradedModule<F> m{n, std::move(dims), std::move(action)};
    for (int w = 0; w < n; ++w) {
        const auto& a = m.act(w);
        check_same_field(a.field(), k, "make_graded_module");
        if (a.rows() != m.dim(w + 1) || a.cols() != m.dim(w))
            throw std::invalid_argument("make_graded_module: map " + std::to_string(w) +
                                        " has the wrong shape");
    }
    /* torsion at the origin: T = u^n acts nilpotently on each weight */
    for (int w = 0; w < n; ++w) {
        ScalarMat<F> t = cycle_composite(m, w, n);
        ScalarMat<F> pw = ScalarMat<F>::identity(k, m.dim(w));
        for (int i = 0; i < m.dim(w); ++i) pw = t * pw;
        if (!pw.is_zero())
            throw std::invalid_argument("make_graded_module: u^n is not nilpotent (weight " +
                                        std::to_string(w) + ")");
    }
    return m;
}

/* The cyclic module k[u]/(u^n) with generator in weight m: one dimension
 * per weight; u kills only the top power (weight (m-1) mod n -> m). */
template <field_context F>
GradedModule<F> cyclic_module(const F& k, int n, int m) {
    std::vector<int> dims(static_cast<std::size_t>(n), 1);
    std::vector<ScalarMat<F>> action;
    for (int w = 0; w < n; ++w) {
        ScalarMat<F> a(k, 1, 1);
        if (w != ((m - 1) % n + n) % n) a.at(0, 0) = k.one();
        action.push_back(std::move(a));
    }
    return make_graded_module(k, n, std::move(dims), std::move(action));
}

/* The skyscraper k_m: one dimension in weight m, u acts by zero. */
template <field_context F>
GradedModule<F> skyscraper(const F& k, int n, int m) {
    std::vector<int> dims(static_cast<std::size_t>(n), 0);
    dims[static_cast<std::size_t>(((m % n) + n) % n)] = 1;
    std::vector<ScalarMat<F>> action;
    for (int w = 0; w < n; ++w) {
        int mm = ((m % n) + n) % n;
        action.emplace_back(k, w == ((mm - 1) % n + n) % n ? 1 : 0, w == mm ? 1 : 0);
    }
    return make_graded_module(k, n, std::move(dims), std::move(action));
}

/* Weight shift: (shifted M)_w = M_{w-s}. */
template <field_context F>
GradedModule<F> weight_shift(const GradedModule<F>& m, int s) {
    std::vector<int> dims;
    std::vector<ScalarMat<F>> action;
    for (int w = 0; w < m.n; ++w) {
        dims.push_back(m.dim(w - s));
        action.push_back(m.act(w - s));
    }
    return make_graded_module(m.field(), m.n, std::move(dims), std::move(action));
}

/* ------------------------------------------------------------------ */
/* Graded maps                                                          */
/* ------------------------------------------------------------------ */

template <field_context F>
struct GradedMap {
    GradedModule<F> src, dst;
    std::vector<ScalarMat<F>> comps;  /* comps[w] : dst.dims[w] x src.dims[w] */

    const ScalarMat<F>& comp(int w) const {
        int n = src.n;
        return comps[static_cast<std::size_t>(((w % n) + n) % n)];
    }
};

template <field_context F>
bool dims_equal(const GradedModule<F>& a, const GradedModule<F>& b) {
    return a.n == b.n && a.dims == b.dims;
}

template <field_context F>
GradedMap<F> make_graded_map(const GradedModule<F>& src, const GradedModule<F>& dst,
                             std::vector<ScalarMat<F>> comps, bool check = true) {
    if (src.n != dst.n) throw std::invalid_argument("make_graded_map: grading mismatch");
    if (static_cast<int>(comps.size()) != src.n)
        throw std::invalid_argument("make_graded_map: need one component per weight");
    for (int w = 0; w < src.n; ++w) {
        const auto& c = comps[static_cast<std::size_t>(w)];
        if (c.rows() != dst.dim(w) || c.cols() != src.dim(w))
            throw std::invalid_argument("make_graded_map: component " + std::to_string(w) +
                                        " has the wrong shape");
    }
    GradedMap<F> f{src, dst, std::move(comps)};
    if (check) {
        for (int w = 0; w < src.n; ++w)
            if (!(f.comp(w + 1) * src.act(w) == dst.act(w) * f.comp(w)))
                throw std::invalid_argument(
                    "make_graded_map: components do not commute with u at weight " +
                    std::to_string(w));
    }
    return f;
}

template <field_context F>
GradedMap<F> compose(const GradedMap<F>& g, const GradedMap<F>& f) {
    if (!dims_equal(f.dst, g.src))
        throw std::invalid_argument("GradedMap compose: endpoint mismatch");
    std::vector<ScalarMat<F>> comps;
    for (int w = 0; w < f.src.n; ++w) comps.push_back(g.comp(w) * f.comp(w));
    return make_graded_map(f.src, g.dst, std::move(comps), false);
}

template <field_context F>
bool is_zero(const GradedMap<F>& f) {
    for (const auto& c : f.comps)
        if (!c.is_zero()) return false;
    return true;
}

/* Multiplication by u as a map of cyclic modules:
 * cyclic(m+1) -> cyclic(m), generator -> u * generator. */
template <field_context F>
GradedMap<F> mult_by_u(const F& k, int n, int m) {
    GradedModule<F> src = cyclic_module(k, n, m + 1);
    GradedModule<F> dst = cyclic_module(k, n, m);
    std::vector<ScalarMat<F>> comps;
    for (int w = 0; w < n; ++w) {
        ScalarMat<F> c(k, 1, 1);
        if (w != ((m % n) + n) % n) c.at(0, 0) = k.one();
        comps.push_back(std::move(c));
    }
    return make_graded_map(src, dst, std::move(comps), true);
}

/* ------------------------------------------------------------------ */
/* Kernels, cokernels, isomorphism invariants                           */
/* ------------------------------------------------------------------ */

template <field_context F>
struct GradedKernel {
    GradedModule<F> ker;
    GradedMap<F> incl;
};

template <field_context F>
GradedKernel<F> kernel(const GradedMap<F>& f) {
    const F& k = f.src.field();
    int n = f.src.n;
    std::vector<ScalarMat<F>> bases;
    std::vector<int> dims;
    for (int w = 0; w < n; ++w) {
        bases.push_back(kernel_basis(f.comp(w)));
        dims.push_back(bases.back().cols());
    }
    std::vector<ScalarMat<F>> action;
    for (int w = 0; w < n; ++w) {
        /* u maps ker into ker; express in the chosen bases */
        auto x = solve(bases[static_cast<std::size_t>((w + 1) % n)],
                       f.src.act(w) * bases[static_cast<std::size_t>(w)]);
        if (!x) throw std::logic_error("graded kernel: induced action solve failed");
        action.push_back(std::move(*x));
    }
    GradedModule<F> ker = make_graded_module(k, n, std::move(dims), std::move(action));
    std::vector<ScalarMat<F>> incl;
    for (int w = 0; w < n; ++w) incl.push_back(bases[static_cast<std::size_t>(w)]);
    return GradedKernel<F>{ker, make_graded_map(ker, f.src, std::move(incl), true)};
}

template <field_context F>
struct GradedCokernel {
    GradedModule<F> coker;
    GradedMap<F> proj;
};

template <field_context F>
GradedCokernel<F> cokernel(const GradedMap<F>& f) {
    const F& k = f.src.field();
    int n = f.src.n;
    /* pick independent image columns and a standard-vector complement */
    std::vector<ScalarMat<F>> full;      /* [image basis | complement] per weight */
    std::vector<int> im_rank, dims;
    for (int w = 0; w < n; ++w) {
        const ScalarMat<F>& fw = f.comp(w);
        RrefResult<F> r = rref(fw);
        ScalarMat<F> basis(k, fw.rows(), fw.rows());
        int col = 0;
        for (int pc : r.pivot_cols) {
            for (int row = 0; row < fw.rows(); ++row) basis.at(row, col) = fw.at(row, pc);
            ++col;
        }
        int rank_w = col;
        for (int j = 0; j < fw.rows() && col < fw.rows(); ++j) {
            ScalarMat<F> trial(k, fw.rows(), col + 1);
            for (int row = 0; row < fw.rows(); ++row)
                for (int c2 = 0; c2 < col; ++c2) trial.at(row, c2) = basis.at(row, c2);
            trial.at(j, col) = k.one();
            if (rank(trial) == col + 1) {
                basis.at(j, col) = k.one();
                ++col;
            }
        }
        if (col != fw.rows()) throw std::logic_error("graded cokernel: basis completion failed");
        full.push_back(std::move(basis));
        im_rank.push_back(rank_w);
        dims.push_back(fw.rows() - rank_w);
    }
    std::vector<ScalarMat<F>> proj;  /* ambient -> complement coordinates */
    for (int w = 0; w < n; ++w) {
        auto x = solve(full[static_cast<std::size_t>(w)],
                       ScalarMat<F>::identity(k, f.dst.dim(w)));
        if (!x) throw std::logic_error("graded cokernel: projection solve failed");
        ScalarMat<F> p(k, dims[static_cast<std::size_t>(w)], f.dst.dim(w));
        for (int r2 = 0; r2 < p.rows(); ++r2)
            for (int c2 = 0; c2 < p.cols(); ++c2)
                p.at(r2, c2) = x->at(im_rank[static_cast<std::size_t>(w)] + r2, c2);
        proj.push_back(std::move(p));
    }
    std::vector<ScalarMat<F>> action;
    for (int w = 0; w < n; ++w) {
        /* induced action: project u applied to the complement representatives */
        ScalarMat<F> reps(k, f.dst.dim(w), dims[static_cast<std::size_t>(w)]);
        for (int r2 = 0; r2 < reps.rows(); ++r2)
            for (int c2 = 0; c2 < reps.cols(); ++c2)
                reps.at(r2, c2) =
                    full[static_cast<std::size_t>(w)].at(r2, im_rank[static_cast<std::size_t>(w)] + c2);
        action.push_back(proj[static_cast<std::size_t>((w + 1) % n)] * (f.dst.act(w) * reps));
    }
    GradedModule<F> coker = make_graded_module(k, n, std::move(dims), std::move(action));
    return GradedCokernel<F>{coker, make_graded_map(f.dst, coker, std::move(proj), true)};
}

/* Complete isomorphism invariant for torsion graded k[u]-modules: the
 * weight dimensions together with the rank of every composite
 * u^len : M_w -> M_{w+len} up to the nilpotency bound. */
template <field_context F>
std::vector<std::vector<int>> rank_table(const GradedModule<F>& m) {
    std::vector<std::vector<int>> table;
    int bound = m.total_dim() + 1;
    for (int w = 0; w < m.n; ++w) {
        std::vector<int> row;
        ScalarMat<F> acc = ScalarMat<F>::identity(m.field(), m.dim(w));
        for (int len = 1; len <= bound; ++len) {
            acc = m.act(w + len - 1) * acc;
            row.push_back(rank(acc));
        }
        table.push_back(std::move(row));
    }
    return table;
}

template <field_context F>
bool isomorphic(const GradedModule<F>& a, const GradedModule<F>& b) {
    if (a.n != b.n || a.dims != b.dims) return false;
    return rank_table(a) == rank_table(b);
}

/* ------------------------------------------------------------------ */
/* Model-case checks                                                    */
/* ------------------------------------------------------------------ */

struct CheckResult {
    bool ok = true;
    std::string detail;
};

/* The four-term sequence 0 -> k_0 -> cyclic(1) --u--> cyclic(0) -> k_0 -> 0:
 * built map by map and checked for exactness weight by weight. */
template <field_context F>
CheckResult four_term_check(const F& k, int n) {
    GradedModule<F> k0 = skyscraper(k, n, 0);
    GradedModule<F> c1 = cyclic_module(k, n, 1);
    GradedModule<F> c0 = cyclic_module(k, n, 0);
    /* alpha: k_0 -> c1 hits the weight-0 line u^{n-1} * generator */
    std::vector<ScalarMat<F>> acomp;
    for (int w = 0; w < n; ++w) {
        ScalarMat<F> c(k, 1, w == 0 ? 1 : 0);
        if (w == 0) c.at(0, 0) = k.one();
        acomp.push_back(std::move(c));
    }
    GradedMap<F> alpha = make_graded_map(k0, c1, std::move(acomp), true);
    GradedMap<F> beta = mult_by_u(k, n, 0);
    /* gamma: c0 -> k_0 is the weight-0 projection */
    std::vector<ScalarMat<F>> gcomp;
    for (int w = 0; w < n; ++w) {
        ScalarMat<F> c(k, w == 0 ? 1 : 0, 1);
        if (w == 0) c.at(0, 0) = k.one();
        gcomp.push_back(std::move(c));
    }
    GradedMap<F> gamma = make_graded_map(c0, k0, std::move(gcomp), true);

    if (!is_zero(compose(beta, alpha))) return {false, "beta o alpha != 0"};
    if (!is_zero(compose(gamma, beta))) return {false, "gamma o beta != 0"};
    for (int w = 0; w < n; ++w) {
        if (rank(alpha.comp(w)) != k0.dim(w))
            return {false, "alpha not injective at weight " + std::to_string(w)};
        if (rank(gamma.comp(w)) != k0.dim(w))
            return {false, "gamma not surjective at weight " + std::to_string(w)};
        /* exactness in the middle: ker = im by containment plus dimensions */
        ScalarMat<F> kb = kernel_basis(beta.comp(w));
        if (!columns_contained(kb, alpha.comp(w)))
            return {false, "ker(beta) exceeds im(alpha) at weight " + std::to_string(w)};
        if (kb.cols() != rank(alpha.comp(w)))
            return {false, "ker(beta) / im(alpha) dimension gap at weight " + std::to_string(w)};
        ScalarMat<F> kg = kernel_basis(gamma.comp(w));
        if (!columns_contained(kg, beta.comp(w)))
            return {false, "ker(gamma) exceeds im(beta) at weight " + std::to_string(w)};
        if (kg.cols() != rank(beta.comp(w)))
            return {false, "ker(gamma) / im(beta) dimension gap at weight " + std::to_string(w)};
    }
    return {true, ""};
}

/* dim Ext^1(k_a, N) computed from the free resolution
 * 0 -> A(a+1) --u--> A(a) -> k_a -> 0: graded Homs out of A(m) evaluate at
 * the generator, so the induced map is the u-action N_a -> N_{a+1} and
 * Ext^1 is its cokernel. */
template <field_context F>
long ext1_skyscraper(const F& k, int n, int a, const GradedModule<F>& nmod) {
    (void)k;
    if (nmod.n != n) throw std::invalid_argument("ext1_skyscraper: grading mismatch");
    const ScalarMat<F>& induced = nmod.act(a);
    return nmod.dim(a + 1) - rank(induced);
}

template <field_context F>
long ext1_cyclic(const F& k, int n, int a, int b) {
    return ext1_skyscraper(k, n, a, skyscraper(k, n, b));
}

/* Why the cone of multiplication by T splits: its kernel and cokernel are
 * both the weight-0 skyscraper and k_0 has no self-extensions. */
template <field_context F>
CheckResult cone_splitting_check(const F& k, int n) {
    GradedMap<F> beta = mult_by_u(k, n, 0);
    GradedKernel<F> ker = kernel(beta);
    GradedCokernel<F> cok = cokernel(beta);
    GradedModule<F> k0 = skyscraper(k, n, 0);
    if (!isomorphic(ker.ker, k0)) return {false, "kernel of u is not the weight-0 skyscraper"};
    if (!isomorphic(cok.coker, k0))
        return {false, "cokernel of u is not the weight-0 skyscraper"};
    if (ext1_cyclic(k, n, 0, 0) != 0)
        return {false, "Ext^1(k_0, k_0) does not vanish"};
    return {true, ""};
}

/* ------------------------------------------------------------------ */
/* Factorizations of W = t as graded presentations                      */
/* ------------------------------------------------------------------ */

/* A finitely generated Z/n-graded k[u]-module presented by free k[t]-
 * modules: weight w has rank ranks[w] and u acts by u_maps[w] over k[t]
 * (t = u^n).  This is the same data as an n-step factorization of t. */
template <field_context F>
struct GradedPresentation {
    int n = 0;
    std::vector<int> ranks;
    std::vector<PolyMatrix<F>> u_maps;  /* u_maps[w] : ranks[w+1] x ranks[w] */

    int rank(int w) const { return ranks[static_cast<std::size_t>(((w % n) + n) % n)]; }
    const PolyMatrix<F>& u_map(int w) const {
        return u_maps[static_cast<std::size_t>(((w % n) + n) % n)];
    }
};

template <field_context F>
bool operator==(const GradedPresentation<F>& a, const GradedPresentation<F>& b) {
    if (a.n != b.n || a.ranks != b.ranks) return false;
    for (int w = 0; w < a.n; ++w)
        if (a.u_map(w) != b.u_map(w)) return false;
    return true;
}

template <field_context F>
bool is_coordinate_potential(const Potential<F>& pot) {
    return pot.w == Poly<F>::variable(pot.w.field());
}

template <field_context F>
GradedPresentation<F> to_graded_presentation(const Factorization<F>& m) {
    if (!is_coordinate_potential(m.pot))
        throw std::invalid_argument(
            "to_graded_presentation: potential must be the coordinate t itself");
    GradedPresentation<F> g;
    g.n = m.n();
    g.ranks = m.ranks;
    g.u_maps = m.maps;
    return g;
}

template <field_context F>
Factorization<F> from_graded_presentation(const F& k, const GradedPresentation<F>& g) {
    Potential<F> pot = make_potential(Poly<F>::variable(k), g.n);
    return make_factorization(pot, g.ranks, g.u_maps, true);
}

template <field_context F>
GradedPresentation<F> grading_shift(const GradedPresentation<F>& g, int s) {
    GradedPresentation<F> out;
    out.n = g.n;
    for (int w = 0; w < g.n; ++w) {
        out.ranks.push_back(g.rank(w - s));
        out.u_maps.push_back(g.u_map(w - s));
    }
    return out;
}

/* Minimal-generator profile: the number of generators in weight w equals
 * dim_k of coker(u : weight w-1 -> weight w) over k[t]. */
template <field_context F>
std::vector<long> generator_weights(const GradedPresentation<F>& g) {
    std::vector<long> profile;
    for (int w = 0; w < g.n; ++w) {
        auto d = coker_kdim(g.u_map(w - 1));
        if (!d) throw std::invalid_argument("generator_weights: module is not torsion");
        profile.push_back(*d);
    }
    return profile;
}

}  // namespace mfn
