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
 *
 * A guided tour of the library: builds a few factorizations of x^k,
 * walks through the Frobenius-category constructions, and finishes with
 * a stable-hom census and the root-model graded checks.
 */

#include <iostream>

#include <mfn/mfn.hpp>

using mfn::Factorization;
using mfn::Morphism;
using mfn::Poly;
using mfn::Rationals;

namespace {

void print_matrix(const mfn::PolyMatrix<Rationals>& m) {
    for (int r = 0; r < m.rows(); ++r) {
        std::cout << "    [";
        for (int c = 0; c < m.cols(); ++c)
            std::cout << (c ? ", " : " ") << mfn::to_string(m.at(r, c));
        std::cout << " ]\n";
    }
}

void print_factorization(const Factorization<Rationals>& m, const std::string& name) {
    std::cout << name << " = " << mfn::describe(m) << "\n";
    for (int i = 0; i < m.n(); ++i) {
        std::cout << "  map " << i << " -> " << (i + 1) % m.n() << ":\n";
        print_matrix(m.map(i));
    }
}

}  // namespace

int main() {
    Rationals q;

    std::cout << "== 1. the factorization (x, x) of W = x^2 ==\n";
    Factorization<Rationals> m =
        mfn::monomial_factorization(q, mfn::MonomialShape{{1, 1}});
    print_factorization(m, "M");
    std::cout << "verify: " << (mfn::verify(m).ok ? "ok" : "FAIL") << "\n\n";

    std::cout << "== 2. counit and unit at slot 0 ==\n";
    Morphism<Rationals> eps = mfn::counit(m, 0);
    Morphism<Rationals> eta = mfn::unit(m, 0);
    std::cout << "counit components (trivial object -> M):\n";
    for (int i = 0; i < m.n(); ++i) print_matrix(eps.comp(i));
    std::cout << "unit components (M -> trivial object):\n";
    for (int i = 0; i < m.n(); ++i) print_matrix(eta.comp(i));
    std::cout << "\n";

    std::cout << "== 3. projective cover and injective hull ==\n";
    mfn::Cover<Rationals> cover = mfn::projective_cover(m);
    mfn::Hull<Rationals> hull = mfn::injective_hull(m);
    std::cout << "cover object: " << mfn::describe(cover.p) << "\n";
    std::cout << "hull object:  " << mfn::describe(hull.i) << "\n";
    bool split = true;
    for (int j = 0; j < m.n(); ++j) {
        auto eye = mfn::PolyMatrix<Rationals>::identity(q, m.rank(j));
        split = split && cover.q.comp(j) * cover.section[static_cast<std::size_t>(j)] == eye;
        split = split && hull.retraction[static_cast<std::size_t>(j)] * hull.u.comp(j) == eye;
    }
    std::cout << "slotwise splittings: " << (split ? "ok" : "FAIL") << "\n\n";

    std::cout << "== 4. suspension ==\n";
    mfn::Shift<Rationals> sh = mfn::shift(m);
    print_factorization(sh.shifted, "M[1]");
    std::cout << "\n";

    std::cout << "== 5. the cone of the identity is stably zero ==\n";
    mfn::Cone<Rationals> c = mfn::cone(mfn::identity_morphism(m));
    std::cout << "cone object: " << mfn::describe(c.cone) << "\n";
    std::cout << "stably zero: " << (mfn::is_stably_zero(c.cone) ? "yes" : "no") << "\n\n";

    std::cout << "== 6. stable endomorphisms ==\n";
    mfn::StableHomReport<Rationals> rep = mfn::stable_hom(m, m);
    std::cout << "hom rank " << rep.hom_rank << ", stable dimension "
              << (rep.dim ? std::to_string(*rep.dim) : std::string("infinite")) << "\n\n";

    std::cout << "== 7. census of the monomial factorizations of x^3, n = 2 ==\n";
    mfn::CensusReport<Rationals> census = mfn::build_census(q, 2, 3);
    std::cout << mfn::render_table(census) << "\n";

    std::cout << "== 8. root-model graded checks, n = 3 ==\n";
    mfn::CheckResult four = mfn::four_term_check(q, 3);
    mfn::CheckResult splitting = mfn::cone_splitting_check(q, 3);
    std::cout << "four-term sequence: " << (four.ok ? "ok" : four.detail) << "\n";
    std::cout << "cone splitting:     " << (splitting.ok ? "ok" : splitting.detail) << "\n";

    std::cout << "\n== 9. a factorization document ==\n";
    mfn::Document doc{1, mfn::field_spec_of(q), "x", mfn::factorization_payload(q, m)};
    std::cout << mfn::serialize(doc);
    return 0;
}
