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

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "stable.hpp"

namespace mfn {

/* Rank-one monomial factorizations of x^k into n factors: exponent tuples
 * (a_0, ..., a_{n-1}) with sum k, a_i >= 0; delta_i = [x^{a_i}]. */
struct MonomialShape {
    std::vector<int> exponents;
};

inline bool operator==(const MonomialShape& a, const MonomialShape& b) {
    return a.exponents == b.exponents;
}

/* All compositions of k into n nonnegative parts, in lexicographic order. */
inline std::vector<MonomialShape> enumerate_monomial_shapes(int n, int k) {
    if (n < 2) throw std::invalid_argument("enumerate_monomial_shapes: need n >= 2");
    if (k < 1) throw std::invalid_argument("enumerate_monomial_shapes: need k >= 1");
    std::vector<MonomialShape> out;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            cur[static_cast<std::size_t>(pos)] = rem;
            out.push_back(MonomialShape{cur});
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, k);
    return out;
}

/* A monomial shape is stably trivial exactly when some exponent is k
 * itself (so all others vanish and the object is a twist of the trivial
 * factorization). */
inline bool classify_trivial(const MonomialShape& m) {
    int k = std::accumulate(m.exponents.begin(), m.exponents.end(), 0);
    return std::any_of(m.exponents.begin(), m.exponents.end(),
                       [k](int a) { return a == k; });
}

inline MonomialShape twist_shape(const MonomialShape& m, int t = 1) {
    int n = static_cast<int>(m.exponents.size());
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        e.push_back(m.exponents[static_cast<std::size_t>(((i - t) % n + n) % n)]);
    return MonomialShape{std::move(e)};
}

template <field_context F>
Factorization<F> monomial_factorization(const F& k, const MonomialShape& m) {
    int n = static_cast<int>(m.exponents.size());
    int ktot = std::accumulate(m.exponents.begin(), m.exponents.end(), 0);
    Potential<F> pot = make_potential(Poly<F>::monomial(k, k.one(), ktot), n);
    std::vector<int> ranks(static_cast<std::size_t>(n), 1);
    std::vector<PolyMatrix<F>> maps;
    for (int i = 0; i < n; ++i) {
        PolyMatrix<F> d(k, 1, 1);
        d.at(0, 0) = Poly<F>::monomial(k, k.one(), m.exponents[static_cast<std::size_t>(i)]);
        maps.push_back(std::move(d));
    }
    return make_factorization(pot, std::move(ranks), std::move(maps), false);
}

/* Partition of the index set into twist orbits, each orbit listed in
 * enumeration order. */
inline std::vector<std::vector<int>> twist_orbits(const std::vector<MonomialShape>& shapes) {
    std::vector<std::vector<int>> orbits;
    std::vector<bool> seen(shapes.size(), false);
    auto find_index = [&](const MonomialShape& s) {
        for (std::size_t i = 0; i < shapes.size(); ++i)
            if (shapes[i] == s) return static_cast<int>(i);
        return -1;
    };
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> orbit;
        MonomialShape cur = shapes[i];
        int n = static_cast<int>(cur.exponents.size());
        for (int t = 0; t < n; ++t) {
            int idx = find_index(cur);
            if (idx < 0) throw std::logic_error("twist_orbits: twisted shape not in enumeration");
            if (!seen[static_cast<std::size_t>(idx)]) {
                seen[static_cast<std::size_t>(idx)] = true;
                orbit.push_back(idx);
            }
            cur = twist_shape(cur);
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

/* Census over the monomial rank-one objects: classification, twist orbits,
 * and the table of stable Hom dimensions between nontrivial objects. */
template <field_context F>
struct CensusReport {
    int n = 0, k = 0;
    std::vector<MonomialShape> objects;        /* lexicographic */
    std::vector<bool> trivial_flags;
    std::vector<std::vector<int>> orbits;      /* indices into objects */
    std::vector<int> nontrivial;               /* indices into objects */
    std::vector<std::vector<long>> table;      /* stable dims, nontrivial x nontrivial */
};

template <field_context F>
CensusReport<F> build_census(const F& field, int n, int k, int budget = 200) {
    std::vector<MonomialShape> shapes = enumerate_monomial_shapes(n, k);
    if (static_cast<int>(shapes.size()) > budget)
        throw std::invalid_argument("build_census: " + std::to_string(shapes.size()) +
                                    " objects exceed the budget of " + std::to_string(budget));
    CensusReport<F> rep;
    rep.n = n;
    rep.k = k;
    rep.objects = shapes;
    for (const auto& s : shapes) {
        bool combinatorial = classify_trivial(s);
        bool computed = is_stably_zero(monomial_factorization(field, s));
        if (combinatorial != computed)
            throw std::logic_error("build_census: combinatorial triviality disagrees with "
                                   "the stable computation");
        rep.trivial_flags.push_back(combinatorial);
    }
    rep.orbits = twist_orbits(shapes);
    for (std::size_t i = 0; i < shapes.size(); ++i)
        if (!rep.trivial_flags[i]) rep.nontrivial.push_back(static_cast<int>(i));
    for (int i : rep.nontrivial) {
        std::vector<long> row;
        Factorization<F> mi = monomial_factorization(field, shapes[static_cast<std::size_t>(i)]);
        for (int j : rep.nontrivial) {
            Factorization<F> mj =
                monomial_factorization(field, shapes[static_cast<std::size_t>(j)]);
            auto d = stable_hom_dim(mi, mj);
            if (!d) throw std::logic_error("build_census: infinite stable Hom dimension");
            row.push_back(*d);
        }
        rep.table.push_back(std::move(row));
    }
    return rep;
}

/* Counting checks used by the consistency suite. */
inline long binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    long acc = 1;
    for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return acc;
}

inline long expected_object_count(int n, int k) { return binomial(k + n - 1, n - 1); }
inline long expected_nontrivial_count(int n, int k) { return expected_object_count(n, k) - n; }

template <field_context F>
std::string render_table(const CensusReport<F>& rep) {
    auto shape_str = [](const MonomialShape& s) {
        std::string out = "(";
        for (std::size_t i = 0; i < s.exponents.size(); ++i) {
            out += std::to_string(s.exponents[i]);
            if (i + 1 < s.exponents.size()) out += ",";
        }
        return out + ")";
    };
    std::string out;
    out += "census n=" + std::to_string(rep.n) + " k=" + std::to_string(rep.k) + ": " +
           std::to_string(rep.objects.size()) + " objects, " +
           std::to_string(rep.nontrivial.size()) + " nontrivial, " +
           std::to_string(rep.orbits.size()) + " twist orbits\n";
    std::size_t width = 0;
    for (int i : rep.nontrivial)
        width = std::max(width, shape_str(rep.objects[static_cast<std::size_t>(i)]).size());
    out += std::string(width, ' ') + " |";
    for (int j : rep.nontrivial) {
        std::string h = shape_str(rep.objects[static_cast<std::size_t>(j)]);
        out += " " + h;
    }
    out += "\n";
    for (std::size_t r = 0; r < rep.table.size(); ++r) {
        std::string label = shape_str(rep.objects[static_cast<std::size_t>(rep.nontrivial[r])]);
        label.resize(width, ' ');
        out += label + " |";
        for (std::size_t c = 0; c < rep.table[r].size(); ++c) {
            std::string cell = std::to_string(rep.table[r][c]);
            std::string head =
                shape_str(rep.objects[static_cast<std::size_t>(rep.nontrivial[c])]);
            if (cell.size() < head.size()) cell = std::string(head.size() - cell.size(), ' ') + cell;
            out += " " + cell;
        }
        out += "\n";
    }
    return out;
}

}  // namespace mfn
