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

#include <boost/multiprecision/gmp.hpp>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mfn {

/* Default cap on polynomial degrees produced by arithmetic; guards runaway
 * eliminations.  Carried by each field context so it can be tuned per run
 * without global state. */
inline constexpr int default_max_degree = 512;

struct degree_limit_error : std::runtime_error {
    explicit degree_limit_error(const std::string& what)
        : std::runtime_error(what) {}
};

/* A field context: pure value describing the coefficient field.  All
 * arithmetic goes through it so that runtime-parameterized fields (F_p)
 * and big-rational fields share one code path. */
template <class F>
concept field_context = requires(const F k, const typename F::Elem a,
                                 const typename F::Elem b, const std::string s) {
    { k.zero() } -> std::same_as<typename F::Elem>;
    { k.one() } -> std::same_as<typename F::Elem>;
    { k.add(a, b) } -> std::same_as<typename F::Elem>;
    { k.sub(a, b) } -> std::same_as<typename F::Elem>;
    { k.mul(a, b) } -> std::same_as<typename F::Elem>;
    { k.neg(a) } -> std::same_as<typename F::Elem>;
    { k.inv(a) } -> std::same_as<typename F::Elem>;
    { k.is_zero(a) } -> std::same_as<bool>;
    { k.eq(a, b) } -> std::same_as<bool>;
    { k.from_long(long{}) } -> std::same_as<typename F::Elem>;
    { k.str(a) } -> std::same_as<std::string>;
    { k.parse(s) } -> std::same_as<typename F::Elem>;
    { k.same(k) } -> std::same_as<bool>;
    { k.name() } -> std::same_as<std::string>;
    { k.max_degree } -> std::convertible_to<int>;
};

/* The rational numbers, with arbitrary-precision arithmetic. */
struct Rationals {
    using Elem = boost::multiprecision::mpq_rational;

    int max_degree = default_max_degree;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw std::invalid_argument("Rationals::inv: division by zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem from_long(long v) const { return Elem(v); }
    std::string str(const Elem& a) const { return a.str(); }
    Elem parse(const std::string& s) const {
        if (s.empty()) throw std::invalid_argument("Rationals::parse: empty literal");
        for (char c : s) {
            if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
                throw std::invalid_argument("Rationals::parse: bad literal '" + s + "'");
        }
        std::size_t slash = s.find('/');
        if (slash != std::string::npos) {
            std::string den = s.substr(slash + 1);
            if (den.empty() || den.find_first_not_of('0') == std::string::npos ||
                den.find('/') != std::string::npos || den.find('-') != std::string::npos)
                throw std::invalid_argument("Rationals::parse: bad literal '" + s + "'");
        }
        try {
            Elem v(s);
            return v;
        } catch (const std::exception&) {
            throw std::invalid_argument("Rationals::parse: bad literal '" + s + "'");
        }
    }
    bool same(const Rationals&) const { return true; }
    std::string name() const { return "Q"; }
};

inline bool is_prime_u32(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/* The prime field F_p for a runtime prime p (p < 2^31 so products fit in
 * 64 bits).  Elements are canonical residues in [0, p). */
struct PrimeField {
    using Elem = std::uint64_t;

    std::uint32_t p;
    int max_degree = default_max_degree;

    explicit PrimeField(std::uint32_t prime, int max_deg = default_max_degree)
        : p(prime), max_degree(max_deg) {
        if (p > 0x7fffffffu)
            throw std::invalid_argument("PrimeField: modulus too large (need p < 2^31)");
        if (!is_prime_u32(p))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                        " is not prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return p == 1 ? 0 : 1; }
    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::invalid_argument("PrimeField::inv: division by zero");
        /* extended Euclid on signed 64-bit */
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p),
                     nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    Elem from_long(long v) const {
        std::int64_t m = static_cast<std::int64_t>(v) % static_cast<std::int64_t>(p);
        if (m < 0) m += static_cast<std::int64_t>(p);
        return static_cast<Elem>(m);
    }
    std::string str(Elem a) const { return std::to_string(a); }
    Elem parse(const std::string& s) const {
        if (s.empty()) throw std::invalid_argument("PrimeField::parse: empty literal");
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("PrimeField::parse: bad literal '" + s + "'");
        Elem acc = 0;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c < '0' || c > '9')
                throw std::invalid_argument("PrimeField::parse: bad literal '" + s + "'");
            acc = (acc * 10 + static_cast<Elem>(c - '0')) % p;
        }
        return s[0] == '-' ? neg(acc) : acc;
    }
    bool same(const PrimeField& other) const { return p == other.p; }
    std::string name() const { return "F_" + std::to_string(p); }
};

template <field_context F>
void check_same_field(const F& a, const F& b, const char* where) {
    if (!a.same(b))
        throw std::invalid_argument(std::string(where) + ": operands over different fields (" +
                                    a.name() + " vs " + b.name() + ")");
}

}  // namespace mfn
