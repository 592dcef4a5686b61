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

#include <catch2/catch_amalgamated.hpp>
#include <mfn/stable.hpp>
#include <mfn/truncated_oracle.hpp>

#include <algorithm>
#include <random>

#include "support/corpus.hpp"

using namespace mfn;

namespace {

Rationals q;

Poly<Rationals> C(long v) { return Poly<Rationals>::from_long(q, v); }
Poly<Rationals> X() { return Poly<Rationals>::variable(q); }

Poly<Rationals> xpow(int e) {
    Poly<Rationals> p = C(1);
    for (int i = 0; i < e; ++i) p = p * X();
    return p;
}

Factorization<Rationals> monomial(const std::vector<int>& a) {
    int n = static_cast<int>(a.size());
    int k = 0;
    for (int e : a) k += e;
    Potential<Rationals> pot = make_potential(xpow(k), n);
    std::vector<int> ranks(a.size(), 1);
    std::vector<PolyMatrix<Rationals>> maps;
    for (int e : a) maps.push_back(PolyMatrix<Rationals>::scaled_identity(q, xpow(e), 1));
    return make_factorization(pot, std::move(ranks), std::move(maps), true);
}

}  // namespace

TEST_CASE("hom basis of rank-one endomorphisms", "[stable]") {
    Factorization<Rationals> m = monomial({1, 1});
    HomBasis<Rationals> hb = hom_basis(m, m);
    CHECK(hb.basis.cols() == 1);
    Morphism<Rationals> g = morphism_from_vector(hb, m, m, 0);
    CHECK(is_morphism(g));
    // pack/unpack round-trips
    PolyMatrix<Rationals> v = pack_morphism(hb.sys, g.comps);
    std::vector<PolyMatrix<Rationals>> back = unpack_morphism(hb.sys, v);
    for (int i = 0; i < 2; ++i) CHECK(back[static_cast<std::size_t>(i)] == g.comp(i));
}

TEST_CASE("hom basis spans the space of morphisms", "[stable]") {
    std::mt19937_64 rng(307);
    auto factors = mfn::testing::random_potential_factors(q, rng, 2);
    Factorization<Rationals> m = mfn::testing::random_factorization_of(q, rng, 2, 2, factors);
    Factorization<Rationals> n = mfn::testing::random_factorization_of(q, rng, 2, 2, factors);
    HomBasis<Rationals> hb = hom_basis(m, n);
    Morphism<Rationals> f = mfn::testing::random_morphism(q, rng, m, n);
    // f's packed vector lies in the span of the basis
    PolyMatrix<Rationals> v = pack_morphism(hb.sys, f.comps);
    CHECK(solve_right(hb.basis, v).has_value());
    // identity lies in End(M)
    HomBasis<Rationals> he = hom_basis(m, m);
    PolyMatrix<Rationals> idv = pack_morphism(he.sys, identity_morphism(m).comps);
    CHECK(solve_right(he.basis, idv).has_value());
}

TEST_CASE("stable endomorphisms of the square-root factorization", "[stable]") {
    Factorization<Rationals> m = monomial({1, 1});
    StableHomReport<Rationals> rep = stable_hom(m, m);
    CHECK(rep.hom_rank == 1);
    REQUIRE(rep.dim.has_value());
    CHECK(*rep.dim == 1);
    REQUIRE(rep.invariant_factors.size() == 1);
    CHECK(rep.invariant_factors[0] == X());
    REQUIRE(rep.witness.has_value());
    CHECK(is_morphism(*rep.witness));
    CHECK_FALSE(factors_through_projinj(*rep.witness).has_value());
}

TEST_CASE("stable endomorphisms of the three-step cube-root shape", "[stable]") {
    Factorization<Rationals> m = monomial({1, 1, 0});
    auto d = stable_hom_dim(m, m);
    REQUIRE(d.has_value());
    CHECK(*d == 1);
}

TEST_CASE("monomial stable endomorphism dimension is k minus the largest exponent",
          "[stable]") {
    std::vector<std::vector<int>> shapes = {
        {1, 3}, {2, 2}, {3, 1}, {4, 0}, {1, 1, 1}, {2, 1, 0}, {3, 0, 0}, {1, 2, 1}};
    for (const auto& a : shapes) {
        int k = 0, mx = 0;
        for (int e : a) {
            k += e;
            mx = std::max(mx, e);
        }
        Factorization<Rationals> m = monomial(a);
        auto d = stable_hom_dim(m, m);
        REQUIRE(d.has_value());
        CHECK(*d == k - mx);
    }
}

TEST_CASE("stable hom table for the cubic two-step shapes is all ones", "[stable]") {
    Factorization<Rationals> a = monomial({1, 2});
    Factorization<Rationals> b = monomial({2, 1});
    for (const auto* src : {&a, &b})
        for (const auto* dst : {&a, &b}) {
            auto d = stable_hom_dim(*src, *dst);
            REQUIRE(d.has_value());
            CHECK(*d == 1);
        }
}

TEST_CASE("trivial objects are stably zero and stably invisible", "[stable]") {
    Potential<Rationals> pot = make_potential(xpow(2), 2);
    Factorization<Rationals> t = trivial(pot, 0, 1);
    CHECK(is_stably_zero(t));
    Factorization<Rationals> m = monomial({1, 1});
    CHECK_FALSE(is_stably_zero(m));
    CHECK(stable_hom_dim(t, m) == std::optional<long>(0));
    CHECK(stable_hom_dim(m, t) == std::optional<long>(0));
    // direct sums of trivials stay stably zero
    CHECK(is_stably_zero(direct_sum(t, trivial(pot, 1, 2)).sum));
    // adding a trivial summand does not change stable homs
    DirectSum<Rationals> s = direct_sum(m, t);
    CHECK(stable_hom_dim(s.sum, s.sum) == stable_hom_dim(m, m));
}

TEST_CASE("stable hom is additive over direct sums", "[stable]") {
    Factorization<Rationals> a = monomial({1, 2});
    Factorization<Rationals> b = monomial({2, 1});
    DirectSum<Rationals> s = direct_sum(a, b);
    auto d = stable_hom_dim(a, s.sum);
    auto d1 = stable_hom_dim(a, a);
    auto d2 = stable_hom_dim(a, b);
    REQUIRE(d.has_value());
    CHECK(*d == *d1 + *d2);
}

TEST_CASE("twist preserves stable hom dimensions", "[stable]") {
    std::mt19937_64 rng(311);
    auto factors = mfn::testing::random_potential_factors(q, rng, 2);
    Factorization<Rationals> m = mfn::testing::random_factorization_of(q, rng, 3, 2, factors);
    Factorization<Rationals> n = mfn::testing::random_factorization_of(q, rng, 3, 2, factors);
    auto d = stable_hom_dim(m, n);
    auto dt = stable_hom_dim(twist(m, 1), twist(n, 1));
    CHECK(d == dt);
}

TEST_CASE("shift preserves stable hom dimensions", "[stable]") {
    Factorization<Rationals> m = monomial({1, 2});
    Factorization<Rationals> n = monomial({2, 1});
    auto d = stable_hom_dim(m, n);
    auto ds = stable_hom_dim(shift(m).shifted, shift(n).shifted);
    CHECK(d == ds);
}

TEST_CASE("null-homotopic maps are recognized with an exact lift", "[stable]") {
    std::mt19937_64 rng(313);
    Factorization<Rationals> m = mfn::testing::random_factorization(q, rng, 2, 2, 2);
    // W * id is always null-homotopic
    Morphism<Rationals> wid = scale(m.pot.w, identity_morphism(m));
    auto lift = factors_through_projinj(wid);
    REQUIRE(lift.has_value());
    Cover<Rationals> cover = projective_cover(m);
    CHECK(compose(cover.q, *lift) == wid);
    // the zero morphism factors trivially
    CHECK(factors_through_projinj(zero_morphism(m, m)).has_value());
}

TEST_CASE("stable isomorphism detection via the cone", "[stable]") {
    Factorization<Rationals> m = monomial({1, 1});
    CHECK(stably_isomorphic_via(identity_morphism(m)));
    Factorization<Rationals> n = monomial({2, 0});  // trivial shape
    // zero map to a stably-zero object: cone = shift(m) + trivial, not stably zero
    CHECK_FALSE(stably_isomorphic_via(zero_morphism(m, m)));
    // but anything between stably-zero objects is a stable isomorphism
    CHECK(stably_isomorphic_via(zero_morphism(n, n)));
}

TEST_CASE("truncated oracle agrees with the exact stable dimension", "[stable]") {
    // frozen small cases
    Factorization<Rationals> m = monomial({1, 1});
    OracleResult r = oracle_stable_hom_dim(m, m);
    CHECK(r.dim == 1);

    Factorization<Rationals> a = monomial({1, 2});
    Factorization<Rationals> b = monomial({2, 1});
    OracleResult rab = oracle_stable_hom_dim(a, b);
    CHECK(stable_hom_dim(a, b) == std::optional<long>(rab.dim));

    // trivial target
    Potential<Rationals> pot = make_potential(xpow(3), 2);
    OracleResult rt = oracle_stable_hom_dim(a, trivial(pot, 0, 1));
    CHECK(rt.dim == 0);

    std::mt19937_64 rng(317);
    for (int trial = 0; trial < 4; ++trial) {
        auto factors = mfn::testing::random_potential_factors(q, rng, 2);
        Factorization<Rationals> s = mfn::testing::random_factorization_of(q, rng, 2, 2, factors);
        Factorization<Rationals> t = mfn::testing::random_factorization_of(q, rng, 2, 2, factors);
        OracleResult orc = oracle_stable_hom_dim(s, t);
        CHECK(stable_hom_dim(s, t) == std::optional<long>(orc.dim));
    }
}

TEST_CASE("stable computations work over prime fields", "[stable]") {
    PrimeField f(7);
    Poly<PrimeField> x = Poly<PrimeField>::variable(f);
    Potential<PrimeField> pot = make_potential(x * x, 2);
    std::vector<PolyMatrix<PrimeField>> maps{
        PolyMatrix<PrimeField>::scaled_identity(f, x, 1),
        PolyMatrix<PrimeField>::scaled_identity(f, x, 1)};
    Factorization<PrimeField> m = make_factorization(pot, {1, 1}, maps, true);
    CHECK(stable_hom_dim(m, m) == std::optional<long>(1));
    CHECK(is_stably_zero(trivial(pot, 0, 1)));
    OracleResult r = oracle_stable_hom_dim(m, m);
    CHECK(r.dim == 1);
}
