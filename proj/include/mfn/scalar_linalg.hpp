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

#include "fields.hpp"

namespace mfn {

/* Dense matrix over the base field itself (not k[x]); the workhorse for
 * weight-graded modules and for degree-truncated checks. */
template <field_context F>
class ScalarMat {
  public:
    using Elem = typename F::Elem;

    ScalarMat(const F& k, int rows, int cols)
        : field_(k), rows_(rows), cols_(cols),
          e_(checked_size(rows, cols), k.zero()) {}

    static ScalarMat identity(const F& k, int n) {
        ScalarMat m(k, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
        return m;
    }

    const F& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Elem& at(int r, int c) { return e_[index(r, c)]; }
    const Elem& at(int r, int c) const { return e_[index(r, c)]; }

    bool is_zero() const {
        for (const auto& v : e_)
            if (!field_.is_zero(v)) return false;
        return true;
    }

  private:
    F field_;
    int rows_, cols_;
    std::vector<Elem> e_;

    static std::size_t checked_size(int rows, int cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("ScalarMat: negative dimension");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("ScalarMat: index (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") out of " + std::to_string(rows_) +
                                    "x" + std::to_string(cols_));
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }
};

template <field_context F>
bool operator==(const ScalarMat<F>& a, const ScalarMat<F>& b) {
    if (!a.field().same(b.field())) return false;
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (!a.field().eq(a.at(r, c), b.at(r, c))) return false;
    return true;
}

template <field_context F>
ScalarMat<F> operator*(const ScalarMat<F>& a, const ScalarMat<F>& b) {
    check_same_field(a.field(), b.field(), "ScalarMat::operator*");
    if (a.cols() != b.rows())
        throw std::invalid_argument("ScalarMat::operator*: inner dimension mismatch");
    const F& k = a.field();
    ScalarMat<F> out(k, a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int i = 0; i < a.cols(); ++i) {
            if (k.is_zero(a.at(r, i))) continue;
            for (int c = 0; c < b.cols(); ++c)
                out.at(r, c) = k.add(out.at(r, c), k.mul(a.at(r, i), b.at(i, c)));
        }
    return out;
}

template <field_context F>
ScalarMat<F> operator+(const ScalarMat<F>& a, const ScalarMat<F>& b) {
    check_same_field(a.field(), b.field(), "ScalarMat::operator+");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("ScalarMat::operator+: shape mismatch");
    const F& k = a.field();
    ScalarMat<F> out(k, a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = k.add(a.at(r, c), b.at(r, c));
    return out;
}

template <field_context F>
ScalarMat<F> operator-(const ScalarMat<F>& a, const ScalarMat<F>& b) {
    check_same_field(a.field(), b.field(), "ScalarMat::operator-");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("ScalarMat::operator-: shape mismatch");
    const F& k = a.field();
    ScalarMat<F> out(k, a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = k.sub(a.at(r, c), b.at(r, c));
    return out;
}

template <field_context F>
ScalarMat<F> hstack(const ScalarMat<F>& a, const ScalarMat<F>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("ScalarMat::hstack: row mismatch");
    ScalarMat<F> out(a.field(), a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

template <field_context F>
struct RrefResult {
    ScalarMat<F> reduced;
    std::vector<int> pivot_cols;
    int rank = 0;
};

/* Reduced row echelon form by Gauss-Jordan with first-nonzero pivoting
 * (deterministic). */
template <field_context F>
RrefResult<F> rref(const ScalarMat<F>& a) {
    const F& k = a.field();
    RrefResult<F> res{a, {}, 0};
    ScalarMat<F>& m = res.reduced;
    int pr = 0;
    for (int pc = 0; pc < m.cols() && pr < m.rows(); ++pc) {
        int pivot = -1;
        for (int r = pr; r < m.rows(); ++r)
            if (!k.is_zero(m.at(r, pc))) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != pr)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(pr, c));
        typename F::Elem piv_inv = k.inv(m.at(pr, pc));
        for (int c = 0; c < m.cols(); ++c) m.at(pr, c) = k.mul(piv_inv, m.at(pr, c));
        for (int r = 0; r < m.rows(); ++r) {
            if (r == pr || k.is_zero(m.at(r, pc))) continue;
            typename F::Elem f = m.at(r, pc);
            for (int c = 0; c < m.cols(); ++c)
                m.at(r, c) = k.sub(m.at(r, c), k.mul(f, m.at(pr, c)));
        }
        res.pivot_cols.push_back(pc);
        ++pr;
    }
    res.rank = pr;
    return res;
}

template <field_context F>
int rank(const ScalarMat<F>& a) {
    return rref(a).rank;
}

/* Columns form a basis of { v : a v = 0 }. */
template <field_context F>
ScalarMat<F> kernel_basis(const ScalarMat<F>& a) {
    const F& k = a.field();
    RrefResult<F> r = rref(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int pc : r.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
    int nfree = a.cols() - r.rank;
    ScalarMat<F> out(k, a.cols(), nfree);
    int col = 0;
    for (int fc = 0; fc < a.cols(); ++fc) {
        if (is_pivot[static_cast<std::size_t>(fc)]) continue;
        out.at(fc, col) = k.one();
        for (int pr = 0; pr < r.rank; ++pr) {
            int pc = r.pivot_cols[static_cast<std::size_t>(pr)];
            out.at(pc, col) = k.neg(r.reduced.at(pr, fc));
        }
        ++col;
    }
    return out;
}

/* Solve a X = b column by column; nullopt if any column is inconsistent. */
template <field_context F>
std::optional<ScalarMat<F>> solve(const ScalarMat<F>& a, const ScalarMat<F>& b) {
    check_same_field(a.field(), b.field(), "ScalarMat::solve");
    if (a.rows() != b.rows()) throw std::invalid_argument("ScalarMat::solve: row mismatch");
    const F& k = a.field();
    RrefResult<F> r = rref(hstack(a, b));
    /* any pivot in the b-block means inconsistency */
    for (int pc : r.pivot_cols)
        if (pc >= a.cols()) return std::nullopt;
    ScalarMat<F> x(k, a.cols(), b.cols());
    for (int pr = 0; pr < r.rank; ++pr) {
        int pc = r.pivot_cols[static_cast<std::size_t>(pr)];
        for (int c = 0; c < b.cols(); ++c) x.at(pc, c) = r.reduced.at(pr, a.cols() + c);
    }
    return x;
}

/* dim of the span of the columns of [a | b] minus rank of a == 0 iff all of
 * b's columns lie in the column span of a. */
template <field_context F>
bool columns_contained(const ScalarMat<F>& sub, const ScalarMat<F>& ambient) {
    return solve(ambient, sub).has_value();
}

}  // namespace mfn
