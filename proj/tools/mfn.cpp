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
 * mfn - command-line workbench for n-step matrix factorizations.
 *
 * Exit codes: 0 = mathematical success, 1 = mathematical failure
 * (a verification or predicate that came back false), 2 = usage,
 * parse, or semantic error.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <mfn/mfn.hpp>

namespace {

constexpr int exit_success = 0;
constexpr int exit_math_failure = 1;
constexpr int exit_usage = 2;

int default_max_degree_from_env() {
    const char* env = std::getenv("MFN_MAX_DEGREE");
    if (env == nullptr) return mfn::default_max_degree;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 1000000)
        throw std::invalid_argument("MFN_MAX_DEGREE must be a positive integer");
    return static_cast<int>(v);
}

/* Options shared by every subcommand. */
struct CommonOpts {
    std::string field = "Q";
    bool field_given = false;
    int max_degree = 0;
    unsigned long seed = 0; /* accepted for reproducibility bookkeeping; all
                               subcommands are deterministic without it */
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--field", o.field,
                    "coefficient field: Q or an odd prime p (< 2^31)")
        ->each([&o](const std::string&) { o.field_given = true; });
    cmd->add_option("--max-degree", o.max_degree,
                    "polynomial degree guard (default: MFN_MAX_DEGREE or 512)");
    cmd->add_option("--seed", o.seed, "random seed (recorded; output is deterministic)");
    cmd->add_option("--out", o.out, "write the output document to this file");
}

mfn::FieldSpec field_spec_from_flag(const std::string& flag) {
    if (flag == "Q") return mfn::FieldSpec{true, 0};
    char* end = nullptr;
    unsigned long v = std::strtoul(flag.c_str(), &end, 10);
    if (end == flag.c_str() || *end != '\0' || v == 0 || v > 0x7fffffffUL)
        throw std::invalid_argument("--field must be Q or a prime below 2^31");
    return mfn::FieldSpec{false, static_cast<std::uint32_t>(v)};
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

mfn::Document load_document(const std::string& path, const CommonOpts& o) {
    mfn::Document doc = mfn::parse_document(read_input(path));
    if (o.field_given && !(doc.field == field_spec_from_flag(o.field)))
        throw std::invalid_argument("--field disagrees with the document header (" +
                                    doc.field.name() + ")");
    return doc;
}

/* The effective degree guard for a run. */
int guard(const CommonOpts& o) {
    return o.max_degree > 0 ? o.max_degree : default_max_degree_from_env();
}

mfn::Document make_report(const mfn::FieldSpec& spec, const std::string& variable,
                          mfn::json payload) {
    payload["type"] = "report";
    return mfn::Document{1, spec, variable, std::move(payload)};
}

/* ------------------------------------------------------------------ */
/* Subcommand bodies.  Each returns the process exit code.             */
/* ------------------------------------------------------------------ */

int run_verify(const std::string& input, const CommonOpts& o) {
    mfn::Document doc = load_document(input, o);
    return mfn::with_field(doc.field, guard(o), [&](const auto& k) {
        /* decode without the constructor check so a broken factorization
         * reports exit 1 (mathematical failure), not exit 2 */
        auto m = mfn::factorization_from_json(k, doc.payload, false);
        auto v = mfn::verify(m);
        std::ostringstream line;
        if (v.ok)
            line << "verify: ok  " << mfn::describe(m) << "\n";
        else
            line << "verify: FAIL  " << mfn::describe(m)
                 << "  cyclic product from slot " << v.first_bad_start
                 << " is not W*I\n";
        std::cout << line.str();
        if (!o.out.empty()) {
            mfn::json payload{{"operation", "verify"},
                              {"ok", v.ok},
                              {"first_bad_start", v.first_bad_start},
                              {"object", mfn::describe(m)}};
            emit(mfn::serialize(make_report(doc.field, doc.variable, payload)), o.out);
        }
        return v.ok ? exit_success : exit_math_failure;
    });
}

int run_twist(const std::string& input, int steps, const CommonOpts& o) {
    mfn::Document doc = load_document(input, o);
    return mfn::with_field(doc.field, guard(o), [&](const auto& k) {
        auto m = mfn::factorization_from_json(k, doc.payload, true);
        auto t = mfn::twist(m, steps);
        mfn::Document outdoc{1, doc.field, doc.variable, mfn::factorization_payload(k, t)};
        emit(mfn::serialize(outdoc), o.out);
        return exit_success;
    });
}

int run_shift(const std::string& input, const CommonOpts& o) {
    mfn::Document doc = load_document(input, o);
    return mfn::with_field(doc.field, guard(o), [&](const auto& k) {
        auto m = mfn::factorization_from_json(k, doc.payload, true);
        auto sh = mfn::shift(m);
        mfn::Document outdoc{1, doc.field, doc.variable,
                             mfn::factorization_payload(k, sh.shifted)};
        emit(mfn::serialize(outdoc), o.out);
        return exit_success;
    });
}

int run_cone(const std::string& input, const CommonOpts& o) {
    mfn::Document doc = load_document(input, o);
    return mfn::with_field(doc.field, guard(o), [&](const auto& k) {
        auto f = mfn::morphism_from_json(k, doc.payload);
        auto c = mfn::cone(f);
        mfn::Document outdoc{1, doc.field, doc.variable,
                             mfn::factorization_payload(k, c.cone)};
        emit(mfn::serialize(outdoc), o.out);
        return exit_success;
    });
}

int run_shom(const std::string& source_path, const std::string& target_path,
             const CommonOpts& o) {
    mfn::Document sdoc = load_document(source_path, o);
    mfn::Document tdoc = load_document(target_path, o);
    if (!(sdoc.field == tdoc.field))
        throw std::invalid_argument("shom: the two documents use different fields");
    if (sdoc.variable != tdoc.variable)
        throw std::invalid_argument("shom: the two documents use different variables");
    return mfn::with_field(sdoc.field, guard(o), [&](const auto& k) {
        auto m = mfn::factorization_from_json(k, sdoc.payload, true);
        auto nobj = mfn::factorization_from_json(k, tdoc.payload, true);
        auto rep = mfn::stable_hom(m, nobj);
        std::ostringstream lines;
        lines << "shom: " << rep.source_desc << " -> " << rep.target_desc << "\n";
        lines << "hom rank: " << rep.hom_rank << "\n";
        lines << "invariant factors:";
        for (const auto& p : rep.invariant_factors) lines << " " << mfn::to_string(p);
        if (rep.invariant_factors.empty()) lines << " (none)";
        lines << "\n";
        if (rep.dim.has_value())
            lines << "stable hom dimension: " << *rep.dim << "\n";
        else
            lines << "stable hom dimension: infinite\n";
        std::cout << lines.str();
        if (!o.out.empty()) {
            mfn::json factors = mfn::json::array();
            for (const auto& p : rep.invariant_factors)
                factors.push_back(mfn::to_string(p));
            mfn::json payload{{"operation", "shom"},
                              {"source", rep.source_desc},
                              {"target", rep.target_desc},
                              {"hom_rank", rep.hom_rank},
                              {"invariant_factors", std::move(factors)}};
            if (rep.dim.has_value())
                payload["dim"] = *rep.dim;
            else
                payload["dim"] = "infinite";
            emit(mfn::serialize(make_report(sdoc.field, sdoc.variable, payload)), o.out);
        }
        return exit_success;
    });
}

int run_oracle_shom(const std::string& source_path, const std::string& target_path,
                    int base_cutoff, const CommonOpts& o) {
    mfn::Document sdoc = load_document(source_path, o);
    mfn::Document tdoc = load_document(target_path, o);
    if (!(sdoc.field == tdoc.field))
        throw std::invalid_argument("oracle-shom: the two documents use different fields");
    if (sdoc.variable != tdoc.variable)
        throw std::invalid_argument("oracle-shom: the two documents use different variables");
    return mfn::with_field(sdoc.field, guard(o), [&](const auto& k) {
        auto m = mfn::factorization_from_json(k, sdoc.payload, true);
        auto nobj = mfn::factorization_from_json(k, tdoc.payload, true);
        mfn::OracleResult r = mfn::oracle_stable_hom_dim(m, nobj, base_cutoff);
        std::ostringstream lines;
        lines << "oracle-shom: " << mfn::describe(m) << " -> " << mfn::describe(nobj)
              << "\n";
        lines << "stable hom dimension: " << r.dim << " (settled at cutoff "
              << r.settled_cutoff << ")\n";
        std::cout << lines.str();
        if (!o.out.empty()) {
            mfn::json payload{{"operation", "oracle-shom"},
                              {"dim", r.dim},
                              {"settled_cutoff", r.settled_cutoff}};
            emit(mfn::serialize(make_report(sdoc.field, sdoc.variable, payload)), o.out);
        }
        return exit_success;
    });
}

int run_stablyzero(const std::string& input, const CommonOpts& o) {
    mfn::Document doc = load_document(input, o);
    return mfn::with_field(doc.field, guard(o), [&](const auto& k) {
        auto m = mfn::factorization_from_json(k, doc.payload, true);
        bool z = mfn::is_stably_zero(m);
        std::cout << "stably zero: " << (z ? "yes" : "no") << "  " << mfn::describe(m)
                  << "\n";
        if (!o.out.empty()) {
            mfn::json payload{{"operation", "stablyzero"},
                              {"object", mfn::describe(m)},
                              {"stably_zero", z}};
            emit(mfn::serialize(make_report(doc.field, doc.variable, payload)), o.out);
        }
        return z ? exit_success : exit_math_failure;
    });
}

int run_census(int n, int k, int budget, const CommonOpts& o) {
    mfn::FieldSpec spec = field_spec_from_flag(o.field);
    return mfn::with_field(spec, guard(o), [&](const auto& field) {
        auto rep = mfn::build_census(field, n, k, budget);
        std::cout << mfn::render_table(rep);
        if (!o.out.empty()) {
            mfn::json objects = mfn::json::array();
            for (const auto& s : rep.objects) objects.push_back(s.exponents);
            mfn::json payload{{"operation", "census"},
                              {"n", rep.n},
                              {"k", rep.k},
                              {"objects", std::move(objects)},
                              {"trivial", rep.trivial_flags},
                              {"nontrivial", rep.nontrivial},
                              {"orbits", rep.orbits},
                              {"table", rep.table}};
            emit(mfn::serialize(make_report(spec, "x", payload)), o.out);
        }
        return exit_success;
    });
}

int run_rootstack_check(int n, const CommonOpts& o) {
    mfn::FieldSpec spec = field_spec_from_flag(o.field);
    return mfn::with_field(spec, guard(o), [&](const auto& k) {
        auto four = mfn::four_term_check(k, n);
        auto splitting = mfn::cone_splitting_check(k, n);
        auto mult = mfn::mult_by_u(k, n, 0);
        auto ker = mfn::kernel(mult);
        auto coker = mfn::cokernel(mult);
        auto sky = mfn::skyscraper(k, n, 0);
        bool ker_ok = mfn::isomorphic(ker.ker, sky);
        bool coker_ok = mfn::isomorphic(coker.coker, sky);

        std::vector<std::vector<long>> ext(static_cast<std::size_t>(n),
                                           std::vector<long>(static_cast<std::size_t>(n)));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                ext[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                    mfn::ext1_cyclic(k, n, a, b);

        std::ostringstream lines;
        lines << "rootstack-check: n=" << n << " over " << spec.name() << "\n";
        lines << "four-term sequence: " << (four.ok ? "ok" : "FAIL " + four.detail)
              << "\n";
        lines << "cone splitting: "
              << (splitting.ok ? "ok" : "FAIL " + splitting.detail) << "\n";
        lines << "kernel of u is the weight-0 skyscraper: " << (ker_ok ? "ok" : "FAIL")
              << "\n";
        lines << "cokernel of u is the weight-0 skyscraper: "
              << (coker_ok ? "ok" : "FAIL") << "\n";
        lines << "ext^1 table (rows a, cols b):\n";
        for (int a = 0; a < n; ++a) {
            lines << " ";
            for (int b = 0; b < n; ++b)
                lines << " " << ext[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
            lines << "\n";
        }
        std::cout << lines.str();
        bool ok = four.ok && splitting.ok && ker_ok && coker_ok;
        if (!o.out.empty()) {
            mfn::json payload{{"operation", "rootstack-check"},
                              {"n", n},
                              {"four_term_ok", four.ok},
                              {"cone_splitting_ok", splitting.ok},
                              {"kernel_is_skyscraper", ker_ok},
                              {"cokernel_is_skyscraper", coker_ok},
                              {"ext1_table", ext}};
            emit(mfn::serialize(make_report(spec, "t", payload)), o.out);
        }
        return ok ? exit_success : exit_math_failure;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for n-step matrix factorizations"};
    app.require_subcommand(1);

    CommonOpts verify_o, twist_o, shift_o, cone_o, shom_o, oracle_o, zero_o, census_o,
        root_o;
    std::string verify_in, twist_in, shift_in, cone_in, zero_in;
    std::string shom_src, shom_dst, oracle_src, oracle_dst;
    int twist_steps = 1;
    int oracle_cutoff = 0;
    int census_n = 2, census_k = 2, census_budget = 200;
    int root_n = 2;

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check that the cyclic composites equal W*I");
    verify_cmd->add_option("input", verify_in, "factorization document (- for stdin)")
        ->required();
    add_common(verify_cmd, verify_o);

    CLI::App* twist_cmd =
        app.add_subcommand("twist", "rotate the slots of a factorization");
    twist_cmd->add_option("input", twist_in, "factorization document (- for stdin)")
        ->required();
    twist_cmd->add_option("--steps", twist_steps, "number of rotation steps (default 1)");
    add_common(twist_cmd, twist_o);

    CLI::App* shift_cmd = app.add_subcommand(
        "shift", "suspension: graded-split cokernel of the hull embedding");
    shift_cmd->add_option("input", shift_in, "factorization document (- for stdin)")
        ->required();
    add_common(shift_cmd, shift_o);

    CLI::App* cone_cmd =
        app.add_subcommand("cone", "mapping cone of a morphism document");
    cone_cmd->add_option("input", cone_in, "morphism document (- for stdin)")
        ->required();
    add_common(cone_cmd, cone_o);

    CLI::App* shom_cmd = app.add_subcommand(
        "shom", "stable hom dimension via the invariant-factor pipeline");
    shom_cmd->add_option("source", shom_src, "source factorization document")->required();
    shom_cmd->add_option("target", shom_dst, "target factorization document")->required();
    add_common(shom_cmd, shom_o);

    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle-shom", "stable hom dimension via the truncated-degree oracle");
    oracle_cmd->add_option("source", oracle_src, "source factorization document")
        ->required();
    oracle_cmd->add_option("target", oracle_dst, "target factorization document")
        ->required();
    oracle_cmd->add_option("--cutoff", oracle_cutoff,
                           "initial truncation cutoff (default 0)");
    add_common(oracle_cmd, oracle_o);

    CLI::App* zero_cmd = app.add_subcommand(
        "stablyzero", "does the identity factor through a projective-injective?");
    zero_cmd->add_option("input", zero_in, "factorization document (- for stdin)")
        ->required();
    add_common(zero_cmd, zero_o);

    CLI::App* census_cmd = app.add_subcommand(
        "census", "stable-hom table of the monomial factorizations of x^k");
    census_cmd->add_option("--n", census_n, "number of steps (>= 2)")->required();
    census_cmd->add_option("--k", census_k, "exponent of the potential x^k")->required();
    census_cmd->add_option("--budget", census_budget,
                           "maximum number of objects to enumerate (default 200)");
    add_common(census_cmd, census_o);

    CLI::App* root_cmd = app.add_subcommand(
        "rootstack-check", "graded-module checks for the order-n root model");
    root_cmd->add_option("--n", root_n, "root order (>= 2)")->required();
    add_common(root_cmd, root_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_success : exit_usage;
    }

    try {
        if (verify_cmd->parsed()) return run_verify(verify_in, verify_o);
        if (twist_cmd->parsed()) return run_twist(twist_in, twist_steps, twist_o);
        if (shift_cmd->parsed()) return run_shift(shift_in, shift_o);
        if (cone_cmd->parsed()) return run_cone(cone_in, cone_o);
        if (shom_cmd->parsed()) return run_shom(shom_src, shom_dst, shom_o);
        if (oracle_cmd->parsed())
            return run_oracle_shom(oracle_src, oracle_dst, oracle_cutoff, oracle_o);
        if (zero_cmd->parsed()) return run_stablyzero(zero_in, zero_o);
        if (census_cmd->parsed())
            return run_census(census_n, census_k, census_budget, census_o);
        if (root_cmd->parsed()) return run_rootstack_check(root_n, root_o);
    } catch (const mfn::document_parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const mfn::degree_limit_error& e) {
        std::cerr << "degree guard: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
