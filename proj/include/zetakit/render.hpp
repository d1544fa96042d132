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

#ifndef ZETAKIT_RENDER_HPP
#define ZETAKIT_RENDER_HPP

#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "zetakit/fourier.hpp"
#include "zetakit/numerics.hpp"
#include "zetakit/pi_multiple.hpp"
#include "zetakit/query.hpp"
#include "zetakit/solver.hpp"

namespace zetakit {

inline int decimal_digits(mpfr_prec_t bits) {
    int d = static_cast<int>(static_cast<double>(bits) * 0.3010299957);
    return d < 4 ? 4 : d;
}

inline std::string decimal_string(const BigFloat& v, mpfr_prec_t bits) {
    return v.str(decimal_digits(bits));
}

namespace detail {

inline std::string quadratic_term_string(const Rational& a, const Rational& b, int d) {
    std::ostringstream os;
    bool wrote = false;
    if (a != 0) {
        os << to_string(a);
        wrote = true;
    }
    if (b != 0) {
        if (wrote)
            os << (b > 0 ? " + " : " - ");
        else if (b < 0)
            os << "-";
        Rational mag = abs_rational(b);
        if (mag != 1) os << to_string(mag) << "*";
        os << "sqrt(" << d << ")";
        wrote = true;
    }
    if (!wrote) os << "0";
    return os.str();
}

} // namespace detail

/// Best-effort radical form. Exact rationals and elements of the quadratic
/// real subfields Q(sqrt 2) and Q(sqrt 3) are recognised; everything else
/// keeps only its canonical coefficient-vector form and yields nullopt.
inline std::optional<std::string> radical_string(const AlgebraicPiMultiple& v) {
    const CycloElement& c = v.coeff;
    std::string body;
    if (c.is_rational()) {
        body = to_string(c.rational_value());
    } else {
        const unsigned N = c.conductor();
        bool matched = false;
        for (int d : {2, 3}) {
            unsigned need = (d == 2) ? 8u : 12u;
            if (N % need != 0) continue;
            long e = static_cast<long>(N / need);
            CycloElement root =
                CycloElement::zeta_power(N, e) + CycloElement::zeta_power(N, -e);
            // solve c = alpha + beta*root on the coefficient vectors
            std::size_t probe = 0;
            for (std::size_t i = 1; i < root.coeffs().size(); ++i)
                if (root.coeffs()[i] != 0) {
                    probe = i;
                    break;
                }
            if (probe == 0) continue;
            Rational beta = c.coeffs()[probe] / root.coeffs()[probe];
            Rational alpha = c.coeffs()[0] - beta * root.coeffs()[0];
            CycloElement rebuilt = CycloElement::from_rational(alpha, N) + beta * root;
            if (rebuilt == c) {
                body = "(" + detail::quadratic_term_string(alpha, beta, d) + ")";
                matched = true;
                break;
            }
        }
        if (!matched) return std::nullopt;
    }
    if (v.is_zero()) return std::string("0");
    if (v.pi_exponent == 0) return body;
    std::string pi_part = (v.pi_exponent == 1) ? "pi" : "pi^" + std::to_string(v.pi_exponent);
    return body + "*" + pi_part;
}

/// One CLI result row: query echo, exact form, decimal, verification state.
struct OutputRecord {
    SumQuery query;
    AlgebraicPiMultiple exact;
    mpfr_prec_t precision_bits = 192;
    std::string decimal;
    std::optional<std::string> radical;
    std::optional<bool> verified;
    std::optional<std::string> residual;
};

inline OutputRecord make_record(const SumQuery& q, const AlgebraicPiMultiple& value,
                                mpfr_prec_t prec) {
    OutputRecord rec;
    rec.query = q;
    rec.exact = value;
    rec.precision_bits = prec;
    rec.decimal = decimal_string(value.to_real(prec), prec);
    rec.radical = radical_string(value);
    return rec;
}

/// Runs the independent oracle against the exact value and stores the
/// residual; acceptance is |residual| < 2^-tolerance_bits.
inline void verify_record(OutputRecord& rec, mpfr_prec_t tolerance_bits) {
    PrecisionContext ctx = PrecisionContext::for_target(rec.precision_bits);
    NumericValue oracle = numeric_eval(rec.query, ctx);
    BigFloat residual = (rec.exact.to_real(rec.precision_bits) - oracle.value).abs();
    rec.residual = residual.str(6);
    rec.verified = residual < BigFloat::pow2(-static_cast<long>(tolerance_bits), 64);
}

inline nlohmann::json record_to_json(const OutputRecord& rec, bool include_exact = true) {
    nlohmann::json j;
    j["query"] = {{"kind", kind_name(rec.query.kind)},
                  {"n", rec.query.n},
                  {"k", rec.query.k},
                  {"l", rec.query.l}};
    if (include_exact) {
        nlohmann::json exact;
        exact["pi_exponent"] = rec.exact.pi_exponent;
        exact["conductor"] = rec.exact.coeff.conductor();
        nlohmann::json coeffs = nlohmann::json::array();
        for (const Rational& c : rec.exact.coeff.coeffs()) coeffs.push_back(to_string(c));
        exact["coeffs"] = std::move(coeffs);
        exact["radical"] = rec.radical ? nlohmann::json(*rec.radical) : nlohmann::json(nullptr);
        j["exact"] = std::move(exact);
    } else {
        j["exact"] = nullptr;
    }
    j["decimal"] = rec.decimal;
    j["verified"] = rec.verified ? nlohmann::json(*rec.verified) : nlohmann::json(nullptr);
    j["residual"] = rec.residual ? nlohmann::json(*rec.residual) : nlohmann::json(nullptr);
    return j;
}

/// Rebuilds the exact value from the JSON "exact" block (round-trip path).
inline AlgebraicPiMultiple exact_from_json(const nlohmann::json& j) {
    unsigned conductor = j.at("conductor").get<unsigned>();
    const auto& coeffs = j.at("coeffs");
    CycloElement acc(conductor);
    std::size_t i = 0;
    for (const auto& entry : coeffs) {
        Rational q = parse_rational(entry.get<std::string>());
        acc = acc + q * CycloElement::zeta_power(conductor, static_cast<long>(i));
        ++i;
    }
    return AlgebraicPiMultiple(j.at("pi_exponent").get<int>(), acc);
}

inline std::string record_to_text(const OutputRecord& rec, bool show_radical,
                                  bool include_exact = true) {
    std::ostringstream os;
    os << kind_name(rec.query.kind) << "(" << rec.query.n << "," << rec.query.k << ","
       << rec.query.l << ")";
    if (include_exact) {
        os << "\n  exact coeff (conductor " << rec.exact.coeff.conductor() << ", * pi^"
           << rec.exact.pi_exponent << "): [";
        const auto& cs = rec.exact.coeff.coeffs();
        for (std::size_t i = 0; i < cs.size(); ++i) os << (i ? ", " : "") << to_string(cs[i]);
        os << "]";
        if (show_radical && rec.radical) os << "\n  radical: " << *rec.radical;
    }
    os << "\n  decimal: " << rec.decimal;
    if (rec.verified)
        os << "\n  verified: " << (*rec.verified ? "yes" : "NO") << " (residual " << *rec.residual
           << ")";
    return os.str();
}

/// Human form of a normalized polynomial over a common denominator,
/// e.g. "(t^3 - t)/12".
inline std::string poly_string(const NormalizedPolynomial& p) {
    Integer den(1);
    for (const Rational& c : p.coeffs)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::ostringstream num;
    int terms = 0;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        if (p.coeffs[i] == 0) continue;
        Rational scaled = p.coeffs[i] * Rational(den);
        Integer coef = scaled.get_num();
        bool neg = coef < 0;
        Integer mag = neg ? Integer(-coef) : coef;
        if (terms == 0)
            num << (neg ? "-" : "");
        else
            num << (neg ? " - " : " + ");
        if (mag != 1 || i == 0) num << mag.get_str();
        if (i >= 1) {
            if (mag != 1) num << "*";
            num << "t";
            if (i > 1) num << "^" << i;
        }
        ++terms;
    }
    if (terms == 0) return "0";
    std::string body = num.str();
    if (den == 1) return body;
    if (terms > 1) body = "(" + body + ")";
    return body + "/" + den.get_str();
}

} // namespace zetakit

#endif
