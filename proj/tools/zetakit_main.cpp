/*
   Copyright 2026 The zetakit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetakit/render.hpp"
#include "zetakit/zetakit.hpp"

namespace {

using namespace zetakit;

mpfr_prec_t default_precision() {
    if (const char* env = std::getenv("ZETAKIT_PREC")) {
        long v = std::atol(env);
        if (v >= 64 && v <= 8192) return static_cast<mpfr_prec_t>(v);
    }
    return 192;
}

SumKind parse_kind(const std::string& s) {
    if (s == "S") return SumKind::plain;
    if (s == "Shat") return SumKind::alternating;
    throw CLI::ValidationError("--kind", "expected S or Shat, got '" + s + "'");
}

struct SumOptions {
    std::string kind = "S";
    int n = 2, k = 2, l = 1;
    mpfr_prec_t prec = 192;
    std::string format = "text";
    bool verify = false;
    bool radical = false;
    bool numeric_only = false;
    long verify_tol_bits = 0; // 0 -> prec/2
};

int emit_records(const std::vector<OutputRecord>& records, const SumOptions& opt) {
    bool verification_failed = false;
    for (const OutputRecord& rec : records) {
        if (opt.format == "json")
            std::cout << record_to_json(rec, !opt.numeric_only).dump() << "\n";
        else
            std::cout << record_to_text(rec, opt.radical, !opt.numeric_only) << "\n";
        if (rec.verified && !*rec.verified) verification_failed = true;
    }
    return verification_failed ? 2 : 0;
}

int run_sum(const SumOptions& opt) {
    SumQuery q{parse_kind(opt.kind), opt.n, opt.k, opt.l};
    q.validate();
    OutputRecord rec = make_record(q, evaluate(q), opt.prec);
    if (opt.verify) {
        long tol = opt.verify_tol_bits > 0 ? opt.verify_tol_bits : opt.prec / 2;
        verify_record(rec, tol);
    }
    return emit_records({rec}, opt);
}

int run_table(const SumOptions& opt, const std::string& kind_sel) {
    std::vector<SumKind> kinds;
    if (kind_sel == "both") {
        kinds = {SumKind::plain, SumKind::alternating};
    } else {
        kinds = {parse_kind(kind_sel)};
    }
    SumQuery probe{SumKind::plain, opt.n, opt.k, 1};
    probe.validate();
    std::vector<OutputRecord> records;
    for (SumKind kind : kinds) {
        for (int l = 1; l <= opt.k / 2; ++l) {
            SumQuery q{kind, opt.n, opt.k, l};
            OutputRecord rec = make_record(q, evaluate(q), opt.prec);
            if (opt.verify) {
                long tol = opt.verify_tol_bits > 0 ? opt.verify_tol_bits : opt.prec / 2;
                verify_record(rec, tol);
            }
            records.push_back(std::move(rec));
        }
    }
    return emit_records(records, opt);
}

int run_hurwitz(int n, const std::string& p_str, bool alternating, mpfr_prec_t prec,
                const std::string& format) {
    Rational p = parse_rational(p_str);
    AlgebraicPiMultiple v = hurwitz_combination(n, p, alternating);
    std::string decimal = decimal_string(v.to_real(prec), prec);
    std::optional<std::string> radical = radical_string(v);
    if (format == "json") {
        nlohmann::json exact;
        exact["pi_exponent"] = v.pi_exponent;
        exact["conductor"] = v.coeff.conductor();
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Rational& c : v.coeff.coeffs()) coeffs.push_back(to_string(c));
        exact["coeffs"] = std::move(coeffs);
        exact["radical"] = radical ? nlohmann::json(*radical) : nlohmann::json(nullptr);
        nlohmann::json j;
        j["query"] = {{"kind", alternating ? "hurwitz-alternating" : "hurwitz"},
                      {"n", n},
                      {"p", to_string(p)}};
        j["exact"] = std::move(exact);
        j["decimal"] = decimal;
        j["verified"] = nullptr;
        j["residual"] = nullptr;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (alternating ? "alternating " : "") << "zeta combination at n=" << n
                  << ", p=" << to_string(p) << "\n";
        if (radical) std::cout << "  radical: " << *radical << "\n";
        std::cout << "  exact coeff (conductor " << v.coeff.conductor() << ", * pi^"
                  << v.pi_exponent << "): [";
        const auto& cs = v.coeff.coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i)
            std::cout << (i ? ", " : "") << to_string(cs[i]);
        std::cout << "]\n  decimal: " << decimal << "\n";
    }
    return 0;
}

int run_poly(const std::string& kind, unsigned m, const std::string& eval_at,
             const std::string& format) {
    NormalizedPolynomial p;
    if (kind == "c")
        p = cosine_poly(m);
    else if (kind == "s")
        p = sine_poly(m);
    else
        throw CLI::ValidationError("--kind", "expected c or s");
    std::optional<Rational> value;
    if (!eval_at.empty()) value = eval_normalized(p, parse_rational(eval_at));
    if (format == "json") {
        nlohmann::json j;
        j["kind"] = kind;
        j["m"] = m;
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Rational& c : p.coeffs) coeffs.push_back(to_string(c));
        j["coeffs"] = std::move(coeffs);
        j["display"] = poly_string(p);
        if (value) j["eval"] = {{"t", eval_at}, {"value", to_string(*value)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << poly_string(p) << "\n";
        if (value) std::cout << "value at t=" << eval_at << ": " << to_string(*value) << "\n";
    }
    return 0;
}

// ---- selftest -------------------------------------------------------------

struct CheckLine {
    std::string name;
    long passed = 0;
    long failed = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        if (ok) {
            ++passed;
        } else {
            ++failed;
            if (first_failure.empty()) first_failure = what;
        }
    }

    bool print() const {
        std::cout << (failed == 0 ? "pass" : "FAIL") << "  " << name << "  (" << passed << "/"
                  << (passed + failed) << ")";
        if (failed > 0) std::cout << "  first failure: " << first_failure;
        std::cout << "\n";
        return failed == 0;
    }
};

int run_selftest(int max_n, int max_k, mpfr_prec_t prec, bool perturb) {
    bool all_ok = true;

    CheckLine fourier_line{"Fourier coefficient law (exact)"};
    for (unsigned m = 0; m <= 8; ++m) {
        for (unsigned n = 1; n <= 12; ++n) {
            Rational want_s = make_rational((n % 2 == 0) ? 1 : -1, 1) /
                              Rational(pow_integer(Integer(n), 2 * m + 1));
            if (perturb && m == 1 && n == 2) want_s += make_rational(1, 7); // negative control
            fourier_line.record(exact_fourier_coefficient(sine_poly(m), n) == want_s,
                                "sine m=" + std::to_string(m) + " n=" + std::to_string(n));
            Rational want_c = make_rational((n % 2 == 0) ? 1 : -1, 1) /
                              Rational(pow_integer(Integer(n), 2 * m + 2));
            fourier_line.record(exact_fourier_coefficient(cosine_poly(m), n) == want_c,
                                "cosine m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    }
    for (unsigned m = 0; m <= 10; ++m) {
        Rational mean = Rational(2) * zeta_even_coeff(m + 1) *
                        (Rational(1) - pow_rational(make_rational(1, 2), 2 * m + 1));
        fourier_line.record(cosine_poly_mean(m) ==
                                AlgebraicPiMultiple::rational_multiple(mean, 2 * m + 2),
                            "mean m=" + std::to_string(m));
    }
    all_ok &= fourier_line.print();

    CheckLine det_line{"node matrices exactly nonsingular"};
    int det_max = std::max(2 * max_k + 1, 7);
    for (int n = 3; n <= det_max; ++n) {
        det_line.record(!determinant(trig_node_matrix(TrigKind::cosine, n, true)).is_zero(),
                        "cos odd-node n=" + std::to_string(n));
        det_line.record(!determinant(trig_node_matrix(TrigKind::sine, n, true)).is_zero(),
                        "sin odd-node n=" + std::to_string(n));
        if (n % 2 != 0) {
            det_line.record(!determinant(trig_node_matrix(TrigKind::cosine, n, false)).is_zero(),
                            "cos even-node n=" + std::to_string(n));
            det_line.record(!determinant(trig_node_matrix(TrigKind::sine, n, false)).is_zero(),
                            "sin even-node n=" + std::to_string(n));
        }
    }
    all_ok &= det_line.print();

    CheckLine ident_line{"reflection and splitting identities (exact)"};
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 2; k <= max_k; ++k) {
            for (int l = 1; l <= k - 1; ++l) {
                for (SumKind kind : {SumKind::plain, SumKind::alternating}) {
                    SumQuery q{kind, n, k, l};
                    AlgebraicPiMultiple lhs = evaluate(SumQuery{kind, n, k, k - l});
                    bool flip = (kind == SumKind::plain) ? (n % 2 != 0) : (n % 2 == 0);
                    AlgebraicPiMultiple rhs = flip ? -evaluate(q) : evaluate(q);
                    ident_line.record(lhs == rhs, "reflection " + kind_name(kind) + "(" +
                                                      std::to_string(n) + "," + std::to_string(k) +
                                                      "," + std::to_string(l) + ")");
                }
                AlgebraicPiMultiple split_a = evaluate(SumQuery{SumKind::plain, n, 2 * k, l});
                AlgebraicPiMultiple split_b = evaluate(SumQuery{SumKind::plain, n, 2 * k, k - l});
                AlgebraicPiMultiple s_plain =
                    (n % 2 == 0) ? split_a + split_b : split_a - split_b;
                ident_line.record(evaluate(SumQuery{SumKind::plain, n, k, l}) == s_plain,
                                  "split S(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                      std::to_string(l) + ")");
                AlgebraicPiMultiple s_alt =
                    (n % 2 == 0) ? split_a - split_b : split_a + split_b;
                ident_line.record(evaluate(SumQuery{SumKind::alternating, n, k, l}) == s_alt,
                                  "split Shat(" + std::to_string(n) + "," + std::to_string(k) +
                                      "," + std::to_string(l) + ")");
            }
        }
    }
    all_ok &= ident_line.print();

    CheckLine oracle_line{"oracle sweep |exact - numeric| < 1e-30"};
    PrecisionContext ctx = PrecisionContext::for_target(prec);
    BigFloat tol = BigFloat::from(1L, 64);
    for (int i = 0; i < 30; ++i) tol = tol / BigFloat::from(10L, 64);
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 2; k <= max_k; ++k) {
            for (int l = 1; l <= k - 1; ++l) {
                for (SumKind kind : {SumKind::plain, SumKind::alternating}) {
                    SumQuery q{kind, n, k, l};
                    BigFloat e = evaluate(q).to_real(prec);
                    BigFloat o = numeric_eval(q, ctx).value;
                    oracle_line.record((e - o).abs() < tol,
                                       kind_name(kind) + "(" + std::to_string(n) + "," +
                                           std::to_string(k) + "," + std::to_string(l) + ")");
                }
            }
        }
    }
    all_ok &= oracle_line.print();

    std::cout << (all_ok ? "selftest: all checks passed\n" : "selftest: FAILURES present\n");
    return all_ok ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zetakit: exact two-sided lattice sums as algebraic multiples of pi^n"};
    app.require_subcommand(1);
    const mpfr_prec_t prec_default = default_precision();

    SumOptions sum_opt;
    sum_opt.prec = prec_default;
    CLI::App* sum = app.add_subcommand("sum", "evaluate one sum exactly (and optionally verify)");
    sum->add_option("--kind", sum_opt.kind, "S or Shat")->required();
    sum->add_option("--n", sum_opt.n, "exponent (>= 2)")->required();
    sum->add_option("--k", sum_opt.k, "modulus (>= 2)")->required();
    sum->add_option("--l", sum_opt.l, "residue (1..k-1)")->required();
    sum->add_option("--prec", sum_opt.prec, "working precision in bits");
    sum->add_option("--format", sum_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sum->add_flag("--verify", sum_opt.verify, "cross-check against the numerical oracle");
    sum->add_flag("--radical", sum_opt.radical, "show a radical rendering when available");
    sum->add_option("--verify-tol-bits", sum_opt.verify_tol_bits,
                    "verification tolerance 2^-bits (default prec/2)");
    sum->add_flag("--numeric-only", sum_opt.numeric_only, "omit the exact block from the output");

    SumOptions table_opt;
    table_opt.prec = prec_default;
    std::string table_kind = "both";
    CLI::App* table = app.add_subcommand("table", "all residues of one (n, k) family");
    table->add_option("--n", table_opt.n, "exponent (>= 2)")->required();
    table->add_option("--k", table_opt.k, "modulus (>= 2)")->required();
    table->add_option("--kind", table_kind, "S, Shat or both");
    table->add_option("--prec", table_opt.prec, "working precision in bits");
    table->add_option("--format", table_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    table->add_flag("--verify", table_opt.verify, "cross-check every row");
    table->add_flag("--radical", table_opt.radical, "show radical renderings");
    table->add_option("--verify-tol-bits", table_opt.verify_tol_bits,
                      "verification tolerance 2^-bits (default prec/2)");
    table->add_flag("--numeric-only", table_opt.numeric_only,
                    "omit the exact blocks from the output");

    int hz_n = 2;
    std::string hz_p = "1/2";
    bool hz_alt = false;
    mpfr_prec_t hz_prec = prec_default;
    std::string hz_format = "text";
    CLI::App* hz = app.add_subcommand(
        "hurwitz", "exact symmetric Hurwitz-zeta combination at rational argument");
    hz->add_option("--n", hz_n, "exponent (>= 2)")->required();
    hz->add_option("--p", hz_p, "rational in (0,1), e.g. 1/4")->required();
    hz->add_flag("--alternating", hz_alt, "alternating-series combination");
    hz->add_option("--prec", hz_prec, "working precision in bits");
    hz->add_option("--format", hz_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string poly_kind = "s";
    unsigned poly_m = 0;
    std::string poly_eval;
    std::string poly_format = "text";
    CLI::App* poly = app.add_subcommand("poly", "inspect the Fourier polynomial families");
    poly->add_option("--kind", poly_kind, "c (cosine family) or s (sine family)")->required();
    poly->add_option("--m", poly_m, "family index (>= 0)")->required();
    poly->add_option("--eval", poly_eval, "also evaluate at rational t");
    poly->add_option("--format", poly_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int st_max_n = 6, st_max_k = 12;
    mpfr_prec_t st_prec = prec_default;
    bool st_perturb = false;
#ifdef ZETAKIT_SELFTEST_PERTURB
    st_perturb = true;
#endif
    CLI::App* st = app.add_subcommand("selftest", "run the full invariant and oracle sweeps");
    st->add_option("--max-n", st_max_n, "largest exponent in the sweeps");
    st->add_option("--max-k", st_max_k, "largest modulus in the sweeps");
    st->add_option("--prec", st_prec, "oracle precision in bits");
    st->add_flag("--inject-perturbation", st_perturb,
                 "deliberately perturb one identity (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sum->parsed()) return run_sum(sum_opt);
        if (table->parsed()) return run_table(table_opt, table_kind);
        if (hz->parsed()) return run_hurwitz(hz_n, hz_p, hz_alt, hz_prec, hz_format);
        if (poly->parsed()) return run_poly(poly_kind, poly_m, poly_eval, poly_format);
        if (st->parsed()) return run_selftest(st_max_n, st_max_k, st_prec, st_perturb);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const zetakit::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
