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

#include "normal_forms.hpp"

namespace mfn {

/* A potential: the pair (W, n) with W in k[x] nonzero of degree >= 1 and
 * n >= 2 the number of factors. */
template <field_context F>
struct Potential {
    Poly<F> w;
    int n;
};

template <field_context F>
Potential<F> make_potential(const Poly<F>& w, int n) {
    if (n < 2) throw std::invalid_argument("make_potential: need n >= 2");
    if (w.degree() < 1)
        throw std::invalid_argument("make_potential: potential must be nonconstant");
    return Potential<F>{w, n};
}

template <field_context F>
bool operator==(const Potential<F>& a, const Potential<F>& b) {
    return a.n == b.n && a.w == b.w;
}

/* An n-step factorization of W: free modules k[x]^{r_0..r_{n-1}} and maps
 * delta_i : slot i -> slot i+1 (indices mod n, delta_i of shape
 * r_{i+1} x r_i) with every cyclic n-fold composite equal to W * I. */
template <field_context F>
struct Factorization {
    Potential<F> pot;
    std::vector<int> ranks;               /* size n */
    std::vector<PolyMatrix<F>> maps;      /* maps[i] : slot i -> slot i+1 */

    const F& field() const { return pot.w.field(); }
    int n() const { return pot.n; }
    int rank(int i) const { return ranks[static_cast<std::size_t>(((i % pot.n) + pot.n) % pot.n)]; }
    const PolyMatrix<F>& map(int i) const {
        return maps[static_cast<std::size_t>(((i % pot.n) + pot.n) % pot.n)];
    }
    int total_rank() const {
        int t = 0;
        for (int r : ranks) t += r;
        return t;
    }
};

template <field_context F>
struct VerifyResult {
    bool ok = true;
    int first_bad_start = -1;  /* starting slot of the first failing cyclic product */
};

template <field_context F>
VerifyResult<F> verify(const Factorization<F>& m) {
    const F& k = m.field();
    for (int start = 0; start < m.n(); ++start) {
        PolyMatrix<F> acc = PolyMatrix<F>::identity(k, m.rank(start));
        for (int s = 0; s < m.n(); ++s) acc = m.map(start + s) * acc;
        if (acc != PolyMatrix<F>::scaled_identity(k, m.pot.w, m.rank(start)))
            return {false, start};
    }
    return {true, -1};
}

template <field_context F>
Factorization<F> make_factorization(const Potential<F>& pot, std::vector<int> ranks,
                                    std::vector<PolyMatrix<F>> maps, bool check = true) {
    if (static_cast<int>(ranks.size()) != pot.n || static_cast<int>(maps.size()) != pot.n)
        throw std::invalid_argument("make_factorization: need exactly n ranks and n maps");
    for (int r : ranks)
        if (r < 0) throw std::invalid_argument("make_factorization: negative rank");
    for (int i = 0; i < pot.n; ++i) {
        const auto& mp = maps[static_cast<std::size_t>(i)];
        check_same_field(mp.field(), pot.w.field(), "make_factorization");
        int src = ranks[static_cast<std::size_t>(i)];
        int dst = ranks[static_cast<std::size_t>((i + 1) % pot.n)];
        if (mp.rows() != dst || mp.cols() != src)
            throw std::invalid_argument(
                "make_factorization: map " + std::to_string(i) + " has shape " +
                std::to_string(mp.rows()) + "x" + std::to_string(mp.cols()) + ", expected " +
                std::to_string(dst) + "x" + std::to_string(src));
    }
    Factorization<F> m{pot, std::move(ranks), std::move(maps)};
    if (check) {
        VerifyResult<F> v = verify(m);
        if (!v.ok)
            throw std::invalid_argument(
                "make_factorization: cyclic product starting at slot " +
                std::to_string(v.first_bad_start) + " is not W * I");
    }
    return m;
}

template <field_context F>
bool operator==(const Factorization<F>& a, const Factorization<F>& b) {
    if (!(a.pot == b.pot) || a.ranks != b.ranks) return false;
    for (int i = 0; i < a.n(); ++i)
        if (a.map(i) != b.map(i)) return false;
    return true;
}

/* The zero object (all ranks zero). */
template <field_context F>
Factorization<F> zero_object(const Potential<F>& pot) {
    const F& k = pot.w.field();
    std::vector<int> ranks(static_cast<std::size_t>(pot.n), 0);
    std::vector<PolyMatrix<F>> maps(static_cast<std::size_t>(pot.n), PolyMatrix<F>(k, 0, 0));
    return make_factorization(pot, std::move(ranks), std::move(maps), false);
}

/* The trivial (projective-injective) factorization carrying W on the arrow
 * entering slot i, i.e. delta_{(i-1) mod n} = W * I and all other maps the
 * identity.  Its rank vector is constant r. */
template <field_context F>
Factorization<F> trivial(const Potential<F>& pot, int i, int r = 1) {
    const F& k = pot.w.field();
    if (i < 0 || i >= pot.n) throw std::invalid_argument("trivial: slot index out of range");
    if (r < 0) throw std::invalid_argument("trivial: negative rank");
    std::vector<int> ranks(static_cast<std::size_t>(pot.n), r);
    std::vector<PolyMatrix<F>> maps;
    maps.reserve(static_cast<std::size_t>(pot.n));
    for (int j = 0; j < pot.n; ++j)
        maps.push_back(j == (i - 1 + pot.n) % pot.n
                           ? PolyMatrix<F>::scaled_identity(k, pot.w, r)
                           : PolyMatrix<F>::identity(k, r));
    return make_factorization(pot, std::move(ranks), std::move(maps), false);
}

/* Twist by t steps: slot i of the result is slot i - t of the input. */
template <field_context F>
Factorization<F> twist(const Factorization<F>& m, int t = 1) {
    int n = m.n();
    std::vector<int> ranks;
    std::vector<PolyMatrix<F>> maps;
    ranks.reserve(static_cast<std::size_t>(n));
    maps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ranks.push_back(m.rank(i - t));
        maps.push_back(m.map(i - t));
    }
    return make_factorization(m.pot, std::move(ranks), std::move(maps), false);
}

/* Composite of `steps` consecutive differentials starting at slot `from`:
 * a map slot from -> slot from+steps of shape r_{from+steps} x r_{from}.
 * steps = 0 gives the identity. */
template <field_context F>
PolyMatrix<F> composite_of_maps(const Factorization<F>& m, int from, int steps) {
    const F& k = m.field();
    if (steps < 0) throw std::invalid_argument("composite_of_maps: negative step count");
    PolyMatrix<F> acc = PolyMatrix<F>::identity(k, m.rank(from));
    for (int s = 0; s < steps; ++s) acc = m.map(from + s) * acc;
    return acc;
}

/* ------------------------------------------------------------------ */
/* Morphisms                                                            */
/* ------------------------------------------------------------------ */

/* A morphism f : M -> N is a tuple of maps f_i : M_i -> N_i commuting with
 * the differentials: f_{i+1} delta^M_i = delta^N_i f_i for all i. */
template <field_context F>
struct Morphism {
    Factorization<F> source;
    Factorization<F> target;
    std::vector<PolyMatrix<F>> comps;  /* comps[i] : N_i x M_i */

    const F& field() const { return source.field(); }
    int n() const { return source.n(); }
    const PolyMatrix<F>& comp(int i) const {
        int n = source.n();
        return comps[static_cast<std::size_t>(((i % n) + n) % n)];
    }
};

template <field_context F>
bool is_morphism(const Factorization<F>& src, const Factorization<F>& dst,
                 const std::vector<PolyMatrix<F>>& comps) {
    if (!(src.pot == dst.pot)) return false;
    if (static_cast<int>(comps.size()) != src.n()) return false;
    for (int i = 0; i < src.n(); ++i) {
        const auto& c = comps[static_cast<std::size_t>(i)];
        if (c.rows() != dst.rank(i) || c.cols() != src.rank(i)) return false;
    }
    for (int i = 0; i < src.n(); ++i) {
        const auto& cnext = comps[static_cast<std::size_t>((i + 1) % src.n())];
        const auto& chere = comps[static_cast<std::size_t>(i)];
        if (cnext * src.map(i) != dst.map(i) * chere) return false;
    }
    return true;
}

template <field_context F>
bool is_morphism(const Morphism<F>& f) {
    return is_morphism(f.source, f.target, f.comps);
}

template <field_context F>
Morphism<F> make_morphism(const Factorization<F>& src, const Factorization<F>& dst,
                          std::vector<PolyMatrix<F>> comps, bool check = true) {
    if (check && !is_morphism(src, dst, comps))
        throw std::invalid_argument("make_morphism: components do not intertwine the differentials");
    return Morphism<F>{src, dst, std::move(comps)};
}

template <field_context F>
Morphism<F> identity_morphism(const Factorization<F>& m) {
    const F& k = m.field();
    std::vector<PolyMatrix<F>> comps;
    comps.reserve(static_cast<std::size_t>(m.n()));
    for (int i = 0; i < m.n(); ++i) comps.push_back(PolyMatrix<F>::identity(k, m.rank(i)));
    return make_morphism(m, m, std::move(comps), false);
}

template <field_context F>
Morphism<F> zero_morphism(const Factorization<F>& src, const Factorization<F>& dst) {
    const F& k = src.field();
    std::vector<PolyMatrix<F>> comps;
    comps.reserve(static_cast<std::size_t>(src.n()));
    for (int i = 0; i < src.n(); ++i)
        comps.push_back(PolyMatrix<F>(k, dst.rank(i), src.rank(i)));
    return make_morphism(src, dst, std::move(comps), false);
}

template <field_context F>
Morphism<F> compose(const Morphism<F>& g, const Morphism<F>& f) {
    /* g after f */
    if (!(f.target == g.source))
        throw std::invalid_argument("compose: target of first does not match source of second");
    std::vector<PolyMatrix<F>> comps;
    comps.reserve(static_cast<std::size_t>(f.n()));
    for (int i = 0; i < f.n(); ++i) comps.push_back(g.comp(i) * f.comp(i));
    return make_morphism(f.source, g.target, std::move(comps), false);
}

template <field_context F>
Morphism<F> operator+(const Morphism<F>& a, const Morphism<F>& b) {
    if (!(a.source == b.source) || !(a.target == b.target))
        throw std::invalid_argument("Morphism::operator+: endpoint mismatch");
    std::vector<PolyMatrix<F>> comps;
    comps.reserve(static_cast<std::size_t>(a.n()));
    for (int i = 0; i < a.n(); ++i) comps.push_back(a.comp(i) + b.comp(i));
    return make_morphism(a.source, a.target, std::move(comps), false);
}

template <field_context F>
Morphism<F> operator-(const Morphism<F>& a, const Morphism<F>& b) {
    if (!(a.source == b.source) || !(a.target == b.target))
        throw std::invalid_argument("Morphism::operator-: endpoint mismatch");
    std::vector<PolyMatrix<F>> comps;
    comps.reserve(static_cast<std::size_t>(a.n()));
    for (int i = 0; i < a.n(); ++i) comps.push_back(a.comp(i) - b.comp(i));
    return make_morphism(a.source, a.target, std::move(comps), false);
}

template <field_context F>
Morphism<F> scale(const Poly<F>& p, const Morphism<F>& a) {
    std::vector<PolyMatrix<F>> comps;
    comps.reserve(static_cast<std::size_t>(a.n()));
    for (int i = 0; i < a.n(); ++i) comps.push_back(p * a.comp(i));
    return make_morphism(a.source, a.target, std::move(comps), false);
}

template <field_context F>
bool operator==(const Morphism<F>& a, const Morphism<F>& b) {
    if (!(a.source == b.source) || !(a.target == b.target)) return false;
    for (int i = 0; i < a.n(); ++i)
        if (a.comp(i) != b.comp(i)) return false;
    return true;
}

template <field_context F>
bool is_zero(const Morphism<F>& a) {
    for (const auto& c : a.comps)
        if (!c.is_zero()) return false;
    return true;
}

/* ------------------------------------------------------------------ */
/* Direct sums                                                          */
/* ------------------------------------------------------------------ */

template <field_context F>
struct DirectSum {
    Factorization<F> sum;
    Morphism<F> incl_left, incl_right;  /* M -> M+N, N -> M+N */
    Morphism<F> proj_left, proj_right;  /* M+N -> M, M+N -> N */
};

template <field_context F>
DirectSum<F> direct_sum(const Factorization<F>& a, const Factorization<F>& b) {
    if (!(a.pot == b.pot)) throw std::invalid_argument("direct_sum: potential mismatch");
    const F& k = a.field();
    int n = a.n();
    std::vector<int> ranks;
    std::vector<PolyMatrix<F>> maps;
    for (int i = 0; i < n; ++i) {
        ranks.push_back(a.rank(i) + b.rank(i));
        PolyMatrix<F> m(k, a.rank(i + 1) + b.rank(i + 1), a.rank(i) + b.rank(i));
        for (int r = 0; r < a.rank(i + 1); ++r)
            for (int c = 0; c < a.rank(i); ++c) m.at(r, c) = a.map(i).at(r, c);
        for (int r = 0; r < b.rank(i + 1); ++r)
            for (int c = 0; c < b.rank(i); ++c)
                m.at(a.rank(i + 1) + r, a.rank(i) + c) = b.map(i).at(r, c);
        maps.push_back(std::move(m));
    }
    Factorization<F> s = make_factorization(a.pot, std::move(ranks), std::move(maps), false);
    std::vector<PolyMatrix<F>> il, ir, pl, pr;
    for (int i = 0; i < n; ++i) {
        PolyMatrix<F> li(k, s.rank(i), a.rank(i)), ri(k, s.rank(i), b.rank(i));
        PolyMatrix<F> lp(k, a.rank(i), s.rank(i)), rp(k, b.rank(i), s.rank(i));
        for (int r = 0; r < a.rank(i); ++r) {
            li.at(r, r) = Poly<F>::from_long(k, 1);
            lp.at(r, r) = Poly<F>::from_long(k, 1);
        }
        for (int r = 0; r < b.rank(i); ++r) {
            ri.at(a.rank(i) + r, r) = Poly<F>::from_long(k, 1);
            rp.at(r, a.rank(i) + r) = Poly<F>::from_long(k, 1);
        }
        il.push_back(std::move(li));
        ir.push_back(std::move(ri));
        pl.push_back(std::move(lp));
        pr.push_back(std::move(rp));
    }
    return DirectSum<F>{s, make_morphism(a, s, std::move(il), false),
                        make_morphism(b, s, std::move(ir), false),
                        make_morphism(s, a, std::move(pl), false),
                        make_morphism(s, b, std::move(pr), false)};
}

/* Short structural descriptor used in reports. */
template <field_context F>
std::string describe(const Factorization<F>& m) {
    std::string s = "MF(n=" + std::to_string(m.n()) + ", ranks=[";
    for (int i = 0; i < m.n(); ++i) {
        s += std::to_string(m.rank(i));
        if (i + 1 < m.n()) s += ",";
    }
    s += "], W=" + to_string(m.pot.w) + ", k=" + m.field().name() + ")";
    return s;
}

}  // namespace mfn
