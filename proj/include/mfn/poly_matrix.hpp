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
#include <utility>
#include <vector>

#include "poly.hpp"

namespace mfn {

/* Dense rows x cols matrix over k[x].  Zero-sized shapes are legal and
 * behave as expected (products over an empty inner dimension are zero). */
template <field_context F>
class PolyMatrix {
  public:
    PolyMatrix(const F& k, int rows, int cols)
        : field_(k), rows_(rows), cols_(cols),
          e_(checked_size(rows, cols), Poly<F>::zero(k)) {}

    static PolyMatrix identity(const F& k, int n) {
        PolyMatrix m(k, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Poly<F>::from_long(k, 1);
        return m;
    }
    static PolyMatrix scaled_identity(const F& k, const Poly<F>& p, int n) {
        PolyMatrix m(k, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = p;
        return m;
    }

    const F& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Poly<F>& at(int r, int c) { return e_[index(r, c)]; }
    const Poly<F>& at(int r, int c) const { return e_[index(r, c)]; }

    bool is_zero() const {
        for (const auto& p : e_)
            if (!p.is_zero()) return false;
        return true;
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) {
                if (r == c && !at(r, c).is_one()) return false;
                if (r != c && !at(r, c).is_zero()) return false;
            }
        return true;
    }
    int max_entry_degree() const {
        int d = -1;
        for (const auto& p : e_) d = std::max(d, p.degree());
        return d;
    }

  private:
    F field_;
    int rows_, cols_;
    std::vector<Poly<F>> e_;

    static std::size_t checked_size(int rows, int cols) {
        if (rows < 0 || cols < 0)
            throw std::invalid_argument("PolyMatrix: negative dimension");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }
    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("PolyMatrix: index (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") out of " + std::to_string(rows_) +
                                    "x" + std::to_string(cols_));
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }
};

template <field_context F>
bool operator==(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
    if (!a.field().same(b.field())) return false;
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (a.at(r, c) != b.at(r, c)) return false;
    return true;
}

template <field_context F>
bool operator!=(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
    return !(a == b);
}

template <field_context F>
PolyMatrix<F> operator+(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
    check_same_field(a.field(), b.field(), "PolyMatrix::operator+");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("PolyMatrix::operator+: shape mismatch");
    PolyMatrix<F> out(a.field(), a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

template <field_context F>
PolyMatrix<F> operator-(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
    check_same_field(a.field(), b.field(), "PolyMatrix::operator-");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("PolyMatrix::operator-: shape mismatch");
    PolyMatrix<F> out(a.field(), a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
    return out;
}

template <field_context F>
PolyMatrix<F> operator-(const PolyMatrix<F>& a) {
    PolyMatrix<F> out(a.field(), a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = -a.at(r, c);
    return out;
}

template <field_context F>
PolyMatrix<F> operator*(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
    check_same_field(a.field(), b.field(), "PolyMatrix::operator*");
    if (a.cols() != b.rows())
        throw std::invalid_argument("PolyMatrix::operator*: inner dimension mismatch (" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    PolyMatrix<F> out(a.field(), a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int i = 0; i < a.cols(); ++i) {
            if (a.at(r, i).is_zero()) continue;
            for (int c = 0; c < b.cols(); ++c) {
                if (b.at(i, c).is_zero()) continue;
                out.at(r, c) = out.at(r, c) + a.at(r, i) * b.at(i, c);
            }
        }
    return out;
}

template <field_context F>
PolyMatrix<F> operator*(const Poly<F>& p, const PolyMatrix<F>& a) {
    PolyMatrix<F> out(a.field(), a.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = p * a.at(r, c);
    return out;
}

template <field_context F>
PolyMatrix<F> transpose(const PolyMatrix<F>& a) {
    PolyMatrix<F> out(a.field(), a.cols(), a.rows());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(c, r) = a.at(r, c);
    return out;
}

template <field_context F>
PolyMatrix<F> hstack(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
    check_same_field(a.field(), b.field(), "PolyMatrix::hstack");
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
    PolyMatrix<F> out(a.field(), a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

template <field_context F>
PolyMatrix<F> vstack(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
    check_same_field(a.field(), b.field(), "PolyMatrix::vstack");
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
    PolyMatrix<F> out(a.field(), a.rows() + b.rows(), a.cols());
    for (int c = 0; c < a.cols(); ++c) {
        for (int r = 0; r < a.rows(); ++r) out.at(r, c) = a.at(r, c);
        for (int r = 0; r < b.rows(); ++r) out.at(a.rows() + r, c) = b.at(r, c);
    }
    return out;
}

template <field_context F>
PolyMatrix<F> block(const PolyMatrix<F>& a, int r0, int c0, int nrows, int ncols) {
    if (r0 < 0 || c0 < 0 || nrows < 0 || ncols < 0 || r0 + nrows > a.rows() ||
        c0 + ncols > a.cols())
        throw std::out_of_range("PolyMatrix::block: range out of bounds");
    PolyMatrix<F> out(a.field(), nrows, ncols);
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < ncols; ++c) out.at(r, c) = a.at(r0 + r, c0 + c);
    return out;
}

/* Kronecker product: (A (x) B)[(i*B.rows+k), (j*B.cols+l)] = A[i][j] * B[k][l].
 * With column-major vectorization, vec(A X B^T) = (B (x) A) vec(X). */
template <field_context F>
PolyMatrix<F> kron(const PolyMatrix<F>& a, const PolyMatrix<F>& b) {
    check_same_field(a.field(), b.field(), "PolyMatrix::kron");
    PolyMatrix<F> out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b.at(k, l).is_zero()) continue;
                    out.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
                }
        }
    return out;
}

/* Column-major vectorization of a matrix into a single column. */
template <field_context F>
PolyMatrix<F> vec_columns(const PolyMatrix<F>& a) {
    PolyMatrix<F> out(a.field(), a.rows() * a.cols(), 1);
    for (int c = 0; c < a.cols(); ++c)
        for (int r = 0; r < a.rows(); ++r) out.at(c * a.rows() + r, 0) = a.at(r, c);
    return out;
}

template <field_context F>
PolyMatrix<F> unvec_columns(const F& k, const PolyMatrix<F>& v, int rows, int cols, int offset) {
    PolyMatrix<F> out(k, rows, cols);
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r) out.at(r, c) = v.at(offset + c * rows + r, 0);
    return out;
}

template <field_context F>
std::string to_string(const PolyMatrix<F>& a, const std::string& var = "x") {
    std::string out = "[";
    for (int r = 0; r < a.rows(); ++r) {
        out += (r == 0 ? "[" : " [");
        for (int c = 0; c < a.cols(); ++c) {
            out += to_string(a.at(r, c), var);
            if (c + 1 < a.cols()) out += ", ";
        }
        out += "]";
        if (r + 1 < a.rows()) out += "\n";
    }
    return out + "]";
}

}  // namespace mfn
