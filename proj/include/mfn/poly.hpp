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
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace mfn {

/* Univariate polynomial over a field context F.  Coefficients are stored
 * lowest-degree first and kept canonical (no trailing zeros); the zero
 * polynomial has an empty coefficient vector and degree -1. */
template <field_context F>
class Poly {
  public:
    using Elem = typename F::Elem;

    explicit Poly(const F& k) : field_(k) {}
    Poly(const F& k, std::vector<Elem> coeffs) : field_(k), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(const F& k) { return Poly(k); }
    static Poly constant(const F& k, const Elem& e) { return Poly(k, {e}); }
    static Poly from_long(const F& k, long v) { return constant(k, k.from_long(v)); }
    static Poly variable(const F& k) { return monomial(k, k.one(), 1); }
    static Poly monomial(const F& k, const Elem& e, int deg) {
        if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
        if (k.is_zero(e)) return Poly(k);
        std::vector<Elem> c(static_cast<std::size_t>(deg) + 1, k.zero());
        c.back() = e;
        return Poly(k, std::move(c));
    }

    const F& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    /* Coefficient of x^i (zero beyond the degree). */
    Elem coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return field_.zero();
        return c_[static_cast<std::size_t>(i)];
    }
    Elem lead() const {
        if (c_.empty()) return field_.zero();
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && field_.eq(c_.back(), field_.one()); }
    bool is_one() const { return c_.size() == 1 && field_.eq(c_[0], field_.one()); }

  private:
    F field_;
    std::vector<Elem> c_;

    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }
};

template <field_context F>
bool operator==(const Poly<F>& a, const Poly<F>& b) {
    if (!a.field().same(b.field())) return false;
    if (a.degree() != b.degree()) return false;
    for (int i = 0; i <= a.degree(); ++i)
        if (!a.field().eq(a.coeff(i), b.coeff(i))) return false;
    return true;
}

template <field_context F>
bool operator!=(const Poly<F>& a, const Poly<F>& b) {
    return !(a == b);
}

template <field_context F>
Poly<F> operator+(const Poly<F>& a, const Poly<F>& b) {
    check_same_field(a.field(), b.field(), "Poly::operator+");
    const F& k = a.field();
    std::vector<typename F::Elem> c;
    int n = std::max(a.degree(), b.degree()) + 1;
    c.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) c.push_back(k.add(a.coeff(i), b.coeff(i)));
    return Poly<F>(k, std::move(c));
}

template <field_context F>
Poly<F> operator-(const Poly<F>& a) {
    const F& k = a.field();
    std::vector<typename F::Elem> c;
    c.reserve(static_cast<std::size_t>(a.degree() + 1));
    for (int i = 0; i <= a.degree(); ++i) c.push_back(k.neg(a.coeff(i)));
    return Poly<F>(k, std::move(c));
}

template <field_context F>
Poly<F> operator-(const Poly<F>& a, const Poly<F>& b) {
    check_same_field(a.field(), b.field(), "Poly::operator-");
    const F& k = a.field();
    std::vector<typename F::Elem> c;
    int n = std::max(a.degree(), b.degree()) + 1;
    c.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) c.push_back(k.sub(a.coeff(i), b.coeff(i)));
    return Poly<F>(k, std::move(c));
}

template <field_context F>
Poly<F> operator*(const Poly<F>& a, const Poly<F>& b) {
    check_same_field(a.field(), b.field(), "Poly::operator*");
    const F& k = a.field();
    if (a.is_zero() || b.is_zero()) return Poly<F>(k);
    int d = a.degree() + b.degree();
    if (d > k.max_degree)
        throw degree_limit_error("polynomial degree " + std::to_string(d) +
                                 " exceeds the configured limit " +
                                 std::to_string(k.max_degree));
    std::vector<typename F::Elem> c(static_cast<std::size_t>(d) + 1, k.zero());
    for (int i = 0; i <= a.degree(); ++i) {
        if (k.is_zero(a.coeff(i))) continue;
        for (int j = 0; j <= b.degree(); ++j)
            c[static_cast<std::size_t>(i + j)] =
                k.add(c[static_cast<std::size_t>(i + j)], k.mul(a.coeff(i), b.coeff(j)));
    }
    return Poly<F>(k, std::move(c));
}

template <field_context F>
Poly<F> scale(const typename F::Elem& e, const Poly<F>& a) {
    const F& k = a.field();
    std::vector<typename F::Elem> c;
    c.reserve(static_cast<std::size_t>(a.degree() + 1));
    for (int i = 0; i <= a.degree(); ++i) c.push_back(k.mul(e, a.coeff(i)));
    return Poly<F>(k, std::move(c));
}

/* Euclidean division: a = q*b + r with deg r < deg b.  Throws on b = 0. */
template <field_context F>
std::pair<Poly<F>, Poly<F>> divrem(const Poly<F>& a, const Poly<F>& b) {
    check_same_field(a.field(), b.field(), "Poly::divrem");
    const F& k = a.field();
    if (b.is_zero()) throw std::invalid_argument("Poly::divrem: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly<F>(k), a};
    std::vector<typename F::Elem> rem(a.coeffs());
    std::vector<typename F::Elem> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                                      k.zero());
    typename F::Elem lead_inv = k.inv(b.lead());
    for (int i = a.degree(); i >= b.degree(); --i) {
        typename F::Elem top = rem[static_cast<std::size_t>(i)];
        if (k.is_zero(top)) continue;
        typename F::Elem q = k.mul(top, lead_inv);
        quo[static_cast<std::size_t>(i - b.degree())] = q;
        for (int j = 0; j <= b.degree(); ++j) {
            std::size_t idx = static_cast<std::size_t>(i - b.degree() + j);
            rem[idx] = k.sub(rem[idx], k.mul(q, b.coeff(j)));
        }
    }
    return {Poly<F>(k, std::move(quo)), Poly<F>(k, std::move(rem))};
}

/* Exact quotient; returns nothing if b does not divide a. */
template <field_context F>
std::pair<bool, Poly<F>> divide_exact(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) return {false, Poly<F>(a.field())};
    return {true, q};
}

template <field_context F>
Poly<F> make_monic(const Poly<F>& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(a.field().inv(a.lead()), a);
}

template <field_context F>
std::string to_string(const Poly<F>& a, const std::string& var = "x") {
    const F& k = a.field();
    if (a.is_zero()) return "0";
    std::string out;
    for (int i = 0; i <= a.degree(); ++i) {
        if (k.is_zero(a.coeff(i))) continue;
        std::string cs = k.str(a.coeff(i));
        bool negative = !cs.empty() && cs[0] == '-';
        std::string mag = negative ? cs.substr(1) : cs;
        std::string term;
        if (i == 0) {
            term = mag;
        } else {
            if (mag != "1") term = mag + "*";
            term += var;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

}  // namespace mfn
