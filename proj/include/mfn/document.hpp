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

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "factorization.hpp"
#include "graded.hpp"

namespace mfn {

using json = nlohmann::json;

/* Syntax errors carry a position; semantic errors are invalid_argument. */
struct document_parse_error : std::runtime_error {
    int line = 0, column = 0;
    document_parse_error(const std::string& what, int l, int c)
        : std::runtime_error("line " + std::to_string(l) + ", column " + std::to_string(c) +
                             ": " + what),
          line(l), column(c) {}
};

/* Runtime description of the coefficient field. */
struct FieldSpec {
    bool rational = true;
    std::uint32_t p = 0;

    std::string name() const { return rational ? "Q" : "F_" + std::to_string(p); }
};

inline bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.rational == b.rational && (a.rational || a.p == b.p);
}

inline FieldSpec field_spec_of(const Rationals&) { return FieldSpec{true, 0}; }
inline FieldSpec field_spec_of(const PrimeField& k) { return FieldSpec{false, k.p}; }

inline json field_spec_to_json(const FieldSpec& spec) {
    if (spec.rational) return json("Q");
    return json{{"Fp", spec.p}};
}

inline FieldSpec field_spec_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldSpec{true, 0};
        throw std::invalid_argument("document: unknown field \"" + j.get<std::string>() + "\"");
    }
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_integer()) {
        std::int64_t signed_p = j["Fp"].get<std::int64_t>();
        if (signed_p < 2)
            throw std::invalid_argument("document: field modulus must be at least 2");
        std::uint64_t p = static_cast<std::uint64_t>(signed_p);
        if (p > 0x7fffffffull)
            throw std::invalid_argument("document: field modulus too large (need p < 2^31)");
        if (!is_prime_u32(static_cast<std::uint32_t>(p)))
            throw std::invalid_argument("document: field modulus " + std::to_string(p) +
                                        " is not prime");
        return FieldSpec{false, static_cast<std::uint32_t>(p)};
    }
    throw std::invalid_argument("document: field must be \"Q\" or {\"Fp\": prime}");
}

/* Call fn with the matching field context.  fn must return the same type
 * for both contexts. */
template <class Fn>
auto with_field(const FieldSpec& spec, int max_degree, Fn&& fn) {
    if (spec.rational) {
        Rationals k;
        k.max_degree = max_degree;
        return fn(k);
    }
    return fn(PrimeField(spec.p, max_degree));
}

/* ------------------------------------------------------------------ */
/* Envelope                                                             */
/* ------------------------------------------------------------------ */

struct Document {
    int format_version = 1;
    FieldSpec field;
    std::string variable = "x";
    json payload;
};

inline std::pair<int, int> offset_to_line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = offset_to_line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw document_parse_error(e.what(), line, col);
    }
    if (!j.is_object()) throw std::invalid_argument("document: top level must be an object");
    if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != 1)
        throw std::invalid_argument("document: unsupported or missing format_version (expect 1)");
    if (!j.contains("field")) throw std::invalid_argument("document: missing field");
    if (!j.contains("payload") || !j["payload"].is_object())
        throw std::invalid_argument("document: missing payload object");
    Document doc;
    doc.format_version = 1;
    doc.field = field_spec_from_json(j["field"]);
    doc.variable = j.value("variable", std::string("x"));
    if (doc.variable.empty())
        throw std::invalid_argument("document: variable name must be nonempty");
    doc.payload = j["payload"];
    if (!doc.payload.contains("type") || !doc.payload["type"].is_string())
        throw std::invalid_argument("document: payload must carry a type string");
    return doc;
}

inline std::string serialize(const Document& doc) {
    json j;
    j["format_version"] = doc.format_version;
    j["field"] = field_spec_to_json(doc.field);
    j["variable"] = doc.variable;
    j["payload"] = doc.payload;
    return j.dump(2) + "\n";
}

/* ------------------------------------------------------------------ */
/* Polynomials and matrices                                             */
/* ------------------------------------------------------------------ */

template <field_context F>
json poly_to_json(const F& k, const Poly<F>& p) {
    json arr = json::array();
    for (int i = 0; i <= p.degree(); ++i) arr.push_back(k.str(p.coeff(i)));
    return arr;
}

template <field_context F>
Poly<F> poly_from_json(const F& k, const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("document: polynomial must be an array of coefficients");
    std::vector<typename F::Elem> coeffs;
    coeffs.reserve(j.size());
    for (const auto& c : j) {
        if (c.is_string())
            coeffs.push_back(k.parse(c.get<std::string>()));
        else if (c.is_number_integer())
            coeffs.push_back(k.from_long(c.get<long>()));
        else
            throw std::invalid_argument("document: coefficients must be strings or integers");
    }
    return Poly<F>(k, std::move(coeffs));
}

template <field_context F>
json matrix_to_json(const F& k, const PolyMatrix<F>& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(poly_to_json(k, m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <field_context F>
PolyMatrix<F> matrix_from_json(const F& k, const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("document: matrix needs rows, cols, entries");
    int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
    if (rows < 0 || cols < 0) throw std::invalid_argument("document: negative matrix dimension");
    const json& e = j["entries"];
    if (!e.is_array() || static_cast<int>(e.size()) != rows)
        throw std::invalid_argument("document: matrix entry rows do not match declared shape");
    PolyMatrix<F> m(k, rows, cols);
    for (int r = 0; r < rows; ++r) {
        const json& row = e[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("document: matrix entry columns do not match shape");
        for (int c = 0; c < cols; ++c)
            m.at(r, c) = poly_from_json(k, row[static_cast<std::size_t>(c)]);
    }
    return m;
}

/* ------------------------------------------------------------------ */
/* Factorizations and morphisms                                         */
/* ------------------------------------------------------------------ */

template <field_context F>
json factorization_to_json(const F& k, const Factorization<F>& m) {
    json maps = json::array();
    for (int i = 0; i < m.n(); ++i) maps.push_back(matrix_to_json(k, m.map(i)));
    return json{{"n", m.n()},
                {"potential", poly_to_json(k, m.pot.w)},
                {"ranks", m.ranks},
                {"maps", std::move(maps)}};
}

template <field_context F>
Factorization<F> factorization_from_json(const F& k, const json& j, bool check = true) {
    if (!j.is_object() || !j.contains("n") || !j.contains("potential") || !j.contains("ranks") ||
        !j.contains("maps"))
        throw std::invalid_argument("document: factorization needs n, potential, ranks, maps");
    int n = j["n"].get<int>();
    if (n < 2) throw std::invalid_argument("document: factorization needs n >= 2");
    Potential<F> pot = make_potential(poly_from_json(k, j["potential"]), n);
    std::vector<int> ranks = j["ranks"].get<std::vector<int>>();
    if (!j["maps"].is_array() || static_cast<int>(j["maps"].size()) != n)
        throw std::invalid_argument("document: factorization needs exactly n maps");
    std::vector<PolyMatrix<F>> maps;
    maps.reserve(static_cast<std::size_t>(n));
    for (const auto& mj : j["maps"]) maps.push_back(matrix_from_json(k, mj));
    return make_factorization(pot, std::move(ranks), std::move(maps), check);
}

template <field_context F>
json factorization_payload(const F& k, const Factorization<F>& m) {
    json p = factorization_to_json(k, m);
    p["type"] = "factorization";
    return p;
}

template <field_context F>
json morphism_payload(const F& k, const Morphism<F>& f) {
    json comps = json::array();
    for (int i = 0; i < f.n(); ++i) comps.push_back(matrix_to_json(k, f.comp(i)));
    return json{{"type", "morphism"},
                {"source", factorization_to_json(k, f.source)},
                {"target", factorization_to_json(k, f.target)},
                {"components", std::move(comps)}};
}

template <field_context F>
Morphism<F> morphism_from_json(const F& k, const json& j) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
        !j.contains("components"))
        throw std::invalid_argument("document: morphism needs source, target, components");
    Factorization<F> src = factorization_from_json(k, j["source"]);
    Factorization<F> dst = factorization_from_json(k, j["target"]);
    if (!j["components"].is_array() || static_cast<int>(j["components"].size()) != src.n())
        throw std::invalid_argument("document: morphism needs one component per slot");
    std::vector<PolyMatrix<F>> comps;
    comps.reserve(j["components"].size());
    for (const auto& cj : j["components"]) comps.push_back(matrix_from_json(k, cj));
    return make_morphism(src, dst, std::move(comps), true);
}

/* ------------------------------------------------------------------ */
/* Graded modules                                                       */
/* ------------------------------------------------------------------ */

template <field_context F>
json scalar_matrix_to_json(const F& k, const ScalarMat<F>& m) {
    json rows = json::array();
    for (int r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(k.str(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <field_context F>
ScalarMat<F> scalar_matrix_from_json(const F& k, const json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("document: matrix needs rows, cols, entries");
    int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
    if (rows < 0 || cols < 0) throw std::invalid_argument("document: negative matrix dimension");
    ScalarMat<F> m(k, rows, cols);
    const json& e = j["entries"];
    if (!e.is_array() || static_cast<int>(e.size()) != rows)
        throw std::invalid_argument("document: matrix entry rows do not match declared shape");
    for (int r = 0; r < rows; ++r) {
        const json& row = e[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("document: matrix entry columns do not match shape");
        for (int c = 0; c < cols; ++c) {
            const json& cell = row[static_cast<std::size_t>(c)];
            if (cell.is_string())
                m.at(r, c) = k.parse(cell.get<std::string>());
            else if (cell.is_number_integer())
                m.at(r, c) = k.from_long(cell.get<long>());
            else
                throw std::invalid_argument("document: entries must be strings or integers");
        }
    }
    return m;
}

template <field_context F>
json graded_module_payload(const F& k, const GradedModule<F>& m) {
    json action = json::array();
    for (int w = 0; w < m.n; ++w) action.push_back(scalar_matrix_to_json(k, m.act(w)));
    return json{{"type", "graded-module"}, {"n", m.n}, {"dims", m.dims},
                {"action", std::move(action)}};
}

template <field_context F>
GradedModule<F> graded_module_from_json(const F& k, const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("dims") || !j.contains("action"))
        throw std::invalid_argument("document: graded module needs n, dims, action");
    int n = j["n"].get<int>();
    std::vector<int> dims = j["dims"].get<std::vector<int>>();
    if (!j["action"].is_array() || static_cast<int>(j["action"].size()) != n)
        throw std::invalid_argument("document: graded module needs exactly n action maps");
    std::vector<ScalarMat<F>> action;
    for (const auto& aj : j["action"]) action.push_back(scalar_matrix_from_json(k, aj));
    return make_graded_module(k, n, std::move(dims), std::move(action));
}

}  // namespace mfn
