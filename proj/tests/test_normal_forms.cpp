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
#include <mfn/normal_forms.hpp>
#include <mfn/scalar_linalg.hpp>
#include <mfn/truncated_oracle.hpp>

#include <random>

#include "support/corpus.hpp"

using namespace mfn;

namespace {

Rationals q;

Poly<Rationals> C(long v) { return Poly<Rationals>::from_long(q, v); }
Poly<Rationals> X() { return Poly<Rationals>::variable(q); }

PolyMatrix<Rationals> mat(int rows, int cols, std::vector<Poly<Rationals>> entries) {
    PolyMatrix<Rationals> m(q, rows, cols);
    std::size_t idx = 0;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = entries.at(idx++);
    return m;
}

}  // namespace

TEST_CASE("matrix basics", "[linalg]") {
    PolyMatrix<Rationals> a = mat(2, 2, {C(1), X(), C(0), C(1)});
    PolyMatrix<Rationals> b = mat(2, 2, {C(1), -X(), C(0), C(1)});
    CHECK(a * b == PolyMatrix<Rationals>::identity(q, 2));
    CHECK(transpose(transpose(a)) == a);
    CHECK(hstack(a, b).cols() == 4);
    CHECK(vstack(a, b).rows() == 4);
    CHECK(block(hstack(a, b), 0, 2, 2, 2) == b);
    // zero-sized matrices are legal and compose
    PolyMatrix<Rationals> e(q, 2, 0);
    PolyMatrix<Rationals> f(q, 0, 3);
    PolyMatrix<Rationals> z = e * f;
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 3);
    CHECK(z.is_zero());
    CHECK_THROWS_AS(a.at(2, 0), std::out_of_range);
}

TEST_CASE("column hermite form of a row vector", "[linalg]") {
    PolyMatrix<Rationals> a = mat(1, 2, {X(), X() * X()});
    HermiteResult<Rationals> h = hermite_form(a);
    CHECK(a * h.u == h.h);
    CHECK(h.h == mat(1, 2, {X(), C(0)}));
    CHECK(h.u == mat(2, 2, {C(1), -X(), C(0), C(1)}));
    REQUIRE(h.pivots.size() == 1);
    CHECK(h.pivots[0] == std::pair<int, int>{0, 0});
    CHECK_FALSE(h.det_u.is_zero());
}

TEST_CASE("hermite form of a unimodular matrix is scaled identity-like", "[linalg]") {
    PolyMatrix<Rationals> a = mat(2, 2, {C(1), X(), C(0), C(1)});
    HermiteResult<Rationals> h = hermite_form(a);
    CHECK(h.h == PolyMatrix<Rationals>::identity(q, 2));
    CHECK(a * h.u == h.h);
}

TEST_CASE("hermite form properties on random matrices", "[linalg]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        PolyMatrix<Rationals> a = mfn::testing::random_matrix(q, rng, 3, 4, 3);
        HermiteResult<Rationals> h = hermite_form(a);
        CHECK(a * h.u == h.h);
        // det(u) must be a nonzero scalar (unimodularity)
        CHECK(!q.is_zero(h.det_u));
        // pivot staircase: each pivot strictly below-and-right of the previous
        int last_row = -1, last_col = -1;
        for (auto [r, c] : h.pivots) {
            CHECK(r > last_row);
            CHECK(c > last_col);
            last_row = r;
            last_col = c;
            CHECK(h.h.at(r, c).is_monic());
            // all columns after the pivot have zero in this row
            for (int cc = c + 1; cc < h.h.cols(); ++cc) CHECK(h.h.at(r, cc).is_zero());
        }
    }
}

TEST_CASE("hermite form is deterministic", "[linalg]") {
    std::mt19937_64 rng(99);
    PolyMatrix<Rationals> a = mfn::testing::random_matrix(q, rng, 3, 3, 2);
    HermiteResult<Rationals> h1 = hermite_form(a);
    HermiteResult<Rationals> h2 = hermite_form(a);
    CHECK(h1.h == h2.h);
    CHECK(h1.u == h2.u);
}

TEST_CASE("kernel basis frozen values", "[linalg]") {
    PolyMatrix<Rationals> a = mat(1, 2, {X(), C(-1)});
    PolyMatrix<Rationals> k = kernel_basis(a);
    REQUIRE(k.cols() == 1);
    CHECK(k == mat(2, 1, {C(1), X()}));
    CHECK((a * k).is_zero());

    CHECK(kernel_basis(PolyMatrix<Rationals>::identity(q, 2)).cols() == 0);

    PolyMatrix<Rationals> z = mat(1, 1, {C(0)});
    PolyMatrix<Rationals> kz = kernel_basis(z);
    REQUIRE(kz.cols() == 1);
    CHECK(kz == mat(1, 1, {C(1)}));
}

TEST_CASE("kernel basis on random matrices", "[linalg]") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        PolyMatrix<Rationals> a = mfn::testing::random_matrix(q, rng, 2, 4, 3);
        PolyMatrix<Rationals> k = kernel_basis(a);
        CHECK((a * k).is_zero());
        // columns of k are linearly independent over k(x): hermite of k has
        // as many pivots as columns
        if (k.cols() > 0) {
            HermiteResult<Rationals> h = hermite_form(k);
            CHECK(static_cast<int>(h.pivots.size()) == k.cols());
        }
    }
}

TEST_CASE("solve_right frozen values", "[linalg]") {
    PolyMatrix<Rationals> a = mat(2, 2, {C(1), C(0), C(0), X()});
    PolyMatrix<Rationals> b = mat(2, 1, {C(1), X() * X() * X()});
    auto sol = solve_right(a, b);
    REQUIRE(sol.has_value());
    CHECK(*sol == mat(2, 1, {C(1), X() * X()}));
    CHECK(a * *sol == b);

    // x * y = 1 has no polynomial solution
    CHECK_FALSE(solve_right(mat(1, 1, {X()}), mat(1, 1, {C(1)})).has_value());
}

TEST_CASE("solve_right on random consistent systems", "[linalg]") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        PolyMatrix<Rationals> a = mfn::testing::random_matrix(q, rng, 3, 3, 2);
        PolyMatrix<Rationals> y = mfn::testing::random_matrix(q, rng, 3, 2, 2);
        PolyMatrix<Rationals> b = a * y;
        auto sol = solve_right(a, b);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == b);
    }
}

TEST_CASE("matrix inverse", "[linalg]") {
    std::mt19937_64 rng(17);
    auto u = mfn::testing::random_unimodular(q, rng, 3, 6);
    auto inv = inverse(u.fwd);
    REQUIRE(inv.has_value());
    CHECK(*inv == u.inv);
    CHECK(u.fwd * *inv == PolyMatrix<Rationals>::identity(q, 3));
    // x I is not invertible over the polynomial ring
    CHECK_FALSE(inverse(mat(1, 1, {X()})).has_value());
}

TEST_CASE("determinant", "[linalg]") {
    PolyMatrix<Rationals> a = mat(2, 2, {X(), C(1), C(1), X()});
    CHECK(det(a) == X() * X() - C(1));
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMatrix<Rationals> m1 = mfn::testing::random_matrix(q, rng, 3, 3, 2);
        PolyMatrix<Rationals> m2 = mfn::testing::random_matrix(q, rng, 3, 3, 2);
        CHECK(det(m1 * m2) == det(m1) * det(m2));
    }
}

TEST_CASE("smith form frozen values", "[linalg]") {
    // [[x^2, x], [x, 1]] has rank 1 with unit content: invariants = (1)
    PolyMatrix<Rationals> a = mat(2, 2, {X() * X(), X(), X(), C(1)});
    SmithResult<Rationals> s = smith_form(a);
    CHECK(s.u * a * s.v == s.d);
    REQUIRE(s.invariants.size() == 1);
    CHECK(s.invariants[0] == C(1));

    PolyMatrix<Rationals> b = mat(2, 2, {X(), C(0), C(0), X() * X() - X()});
    SmithResult<Rationals> sb = smith_form(b);
    REQUIRE(sb.invariants.size() == 2);
    CHECK(sb.invariants[0] == X());
    CHECK(sb.invariants[1] == X() * X() - X());
}

TEST_CASE("smith form properties on random matrices", "[linalg]") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        PolyMatrix<Rationals> a = mfn::testing::random_matrix(q, rng, 3, 3, 2);
        SmithResult<Rationals> s = smith_form(a);
        CHECK(s.u * a * s.v == s.d);
        // diagonal, monic, divisibility chain
        for (int r = 0; r < s.d.rows(); ++r)
            for (int c = 0; c < s.d.cols(); ++c)
                if (r != c) CHECK(s.d.at(r, c).is_zero());
        for (std::size_t i = 0; i < s.invariants.size(); ++i) {
            CHECK(s.invariants[i].is_monic());
            if (i + 1 < s.invariants.size()) {
                auto [ok, quo] = divide_exact(s.invariants[i + 1], s.invariants[i]);
                CHECK(ok);
                (void)quo;
            }
        }
        // u and v are unimodular
        CHECK(det(s.u).degree() == 0);
        CHECK(det(s.v).degree() == 0);
    }
}

TEST_CASE("cokernel dimension frozen values", "[linalg]") {
    CHECK(coker_kdim(mat(1, 1, {X() * X()})) == std::optional<long>(2));
    CHECK(coker_kdim(PolyMatrix<Rationals>::identity(q, 3)) == std::optional<long>(0));
    CHECK(coker_kdim(mat(2, 2, {X(), C(0), C(0), X() * X()})) == std::optional<long>(3));
    // a row of zeros means a free summand survives: infinite dimension
    CHECK_FALSE(coker_kdim(PolyMatrix<Rationals>(q, 1, 0)).has_value());
    CHECK_FALSE(coker_kdim(mat(2, 1, {X(), C(0)})).has_value());
    // extra columns are fine
    CHECK(coker_kdim(mat(1, 2, {X(), C(1)})) == std::optional<long>(0));
}

TEST_CASE("truncated cokernel oracle agrees with the exact computation", "[linalg]") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 15; ++trial) {
        PolyMatrix<Rationals> a = mfn::testing::random_matrix(q, rng, 2, 3, 3);
        CHECK(oracle_coker_kdim(a) == coker_kdim(a));
    }
    // shapes with free quotients
    CHECK_FALSE(oracle_coker_kdim(mat(2, 1, {X(), C(0)})).has_value());
    CHECK(oracle_coker_kdim(mat(1, 1, {X() * X()})) == std::optional<long>(2));
}

TEST_CASE("scalar rank, kernel and solve", "[linalg]") {
    ScalarMat<Rationals> m(q, 2, 3);
    m.at(0, 0) = q.from_long(1);
    m.at(0, 1) = q.from_long(2);
    m.at(1, 0) = q.from_long(2);
    m.at(1, 1) = q.from_long(4);
    m.at(1, 2) = q.from_long(1);
    CHECK(rank(m) == 2);
    ScalarMat<Rationals> k = kernel_basis(m);
    CHECK(k.cols() == 1);
    CHECK((m * k).is_zero());

    ScalarMat<Rationals> rhs(q, 2, 1);
    rhs.at(0, 0) = q.from_long(1);
    rhs.at(1, 0) = q.from_long(2);
    auto sol = solve(m, rhs);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == rhs);
}

TEST_CASE("kron and vec satisfy the mixed-product identity", "[linalg]") {
    std::mt19937_64 rng(31);
    PolyMatrix<Rationals> a = mfn::testing::random_matrix(q, rng, 2, 3, 2);
    PolyMatrix<Rationals> xm = mfn::testing::random_matrix(q, rng, 3, 2, 2);
    PolyMatrix<Rationals> b = mfn::testing::random_matrix(q, rng, 2, 2, 2);
    // vec(A X B) = (B^T (x) A) vec(X), column-major vec
    PolyMatrix<Rationals> lhs = vec_columns(a * xm * b);
    PolyMatrix<Rationals> rhs = kron(transpose(b), a) * vec_columns(xm);
    CHECK(lhs == rhs);
    CHECK(unvec_columns(q, vec_columns(xm), xm.rows(), xm.cols(), 0) == xm);
}

TEST_CASE("normal forms over a prime field", "[linalg]") {
    PrimeField f(5);
    PolyMatrix<PrimeField> a(f, 2, 2);
    Poly<PrimeField> x = Poly<PrimeField>::variable(f);
    a.at(0, 0) = x * x;
    a.at(0, 1) = x;
    a.at(1, 0) = x;
    a.at(1, 1) = Poly<PrimeField>::from_long(f, 1);
    SmithResult<PrimeField> s = smith_form(a);
    CHECK(s.u * a * s.v == s.d);
    REQUIRE(s.invariants.size() == 1);
    CHECK(s.invariants[0] == Poly<PrimeField>::from_long(f, 1));

    HermiteResult<PrimeField> h = hermite_form(a);
    CHECK(a * h.u == h.h);
}
