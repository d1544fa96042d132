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

#ifndef ZETAKIT_SOLVER_HPP
#define ZETAKIT_SOLVER_HPP

#include <map>
#include <numeric>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "zetakit/cyclo.hpp"
#include "zetakit/fourier.hpp"
#include "zetakit/numerics.hpp"
#include "zetakit/pi_multiple.hpp"
#include "zetakit/query.hpp"

namespace zetakit {

/// A query rewritten to the reduced residue range, together with the sign
/// picked up from the reflection law and the rational scale picked up from
/// pulling a common factor out of the plain-sum denominator.
struct NormalizedQuery {
    SumQuery query;
    int sign = 1;
    Rational scale = Rational(1);
};

/// Reflection l -> k-l (sign (-1)^n for the plain sum, (-1)^{n+1} for the
/// alternating one), then gcd extraction for the plain sum only: dividing
/// d out of (jk+l) rescales by d^-n, but would scramble the (-1)^j weight
/// of the alternating sum, so alternating queries keep their modulus.
inline NormalizedQuery normalize(const SumQuery& q) {
    q.validate();
    NormalizedQuery out{q, 1, Rational(1)};
    int& k = out.query.k;
    int& l = out.query.l;
    if (2 * l > k) {
        l = k - l;
        bool flip = (q.kind == SumKind::plain) ? (q.n % 2 != 0) : (q.n % 2 == 0);
        out.sign = flip ? -1 : 1;
    }
    if (q.kind == SumKind::plain) {
        int d = std::gcd(k, l);
        if (d > 1) {
            k /= d;
            l /= d;
            out.scale = pow_rational(make_rational(1, d), q.n);
        }
    }
    return out;
}

namespace detail {

/// S(n,4,1)/pi^n: Bernoulli branch for even n, Euler-number branch for odd.
inline Rational unit_progression_coeff(int n) {
    if (n < 2) throw bad_query("closed form needs n >= 2");
    if (n % 2 == 0) {
        unsigned L = static_cast<unsigned>(n) / 2;
        Rational r = Rational(pow_integer(Integer(2), 2 * L) - 1) * bernoulli(2 * L) /
                     (Rational(2) * Rational(factorial(2 * L)));
        return (L % 2 == 0) ? Rational(-r) : r; // (-1)^{L+1}
    }
    unsigned L = static_cast<unsigned>(n - 1) / 2;
    Rational r = Rational(euler_number(2 * L)) /
                 (Rational(pow_integer(Integer(2), 2 * L + 2)) * Rational(factorial(2 * L)));
    return (L % 2 == 0) ? r : Rational(-r); // (-1)^L
}

/// sqrt(3) = 2 cos(pi/6) as an element of Q(zeta_12).
inline CycloElement sqrt3_element() {
    return CycloElement::zeta_power(12, 1) + CycloElement::zeta_power(12, -1);
}

/// Odd-exponent modulus-3 value: pi^{2m+1} times a rational multiple of
/// sqrt(3), m >= 1.
inline AlgebraicPiMultiple modulus3_odd_value(unsigned m) {
    Rational acc(0);
    for (unsigned j = 0; j <= m; ++j) {
        Rational term = Rational(binomial(2 * m + 1, 2 * j + 1)) * bernoulli(2 * (m - j)) *
                        half_power_factor(m - j) /
                        Rational(pow_integer(Integer(3), 2 * j + 1));
        acc += term;
    }
    Rational front = make_rational(4, 3) / (Rational(2) * Rational(factorial(2 * m + 1)));
    if (m % 2 == 0) front = -front; // (-1)^{m+1}
    CycloElement coeff = (front * acc) * sqrt3_element();
    return AlgebraicPiMultiple(static_cast<int>(2 * m + 1), coeff);
}

} // namespace detail

/// Tabulated closed forms for the moduli 2, 3, 4 and 6 (residue 1, reduced
/// queries only), for the exponent parities that admit one. Everything else
/// returns nullopt and is handled by the linear systems.
inline std::optional<AlgebraicPiMultiple> closed_form(const SumQuery& q) {
    const int n = q.n;
    const bool even_n = (n % 2 == 0);
    if (q.l != 1) return std::nullopt;
    const unsigned L = static_cast<unsigned>(n) / 2; // n = 2L or 2L+1

    if (q.kind == SumKind::alternating) {
        if (q.k != 2) return std::nullopt;
        if (even_n) return AlgebraicPiMultiple(n, CycloElement(1)); // exact zero
        return AlgebraicPiMultiple::rational_multiple(
            Rational(2) * detail::unit_progression_coeff(n), n);
    }

    switch (q.k) {
        case 2: {
            if (!even_n) return AlgebraicPiMultiple(n, CycloElement(1)); // exact zero
            Rational r = Rational(pow_integer(Integer(2), n) - 1) * bernoulli(2 * L) /
                         Rational(factorial(2 * L));
            if (L % 2 == 0) r = -r;
            return AlgebraicPiMultiple::rational_multiple(r, n);
        }
        case 3: {
            if (!even_n) return detail::modulus3_odd_value((static_cast<unsigned>(n) - 1) / 2);
            Rational r = pow_rational(make_rational(2, 3), n) *
                         Rational(pow_integer(Integer(3), n) - 1) * bernoulli(2 * L) /
                         (Rational(2) * Rational(factorial(2 * L)));
            if (L % 2 == 0) r = -r;
            return AlgebraicPiMultiple::rational_multiple(r, n);
        }
        case 4:
            return AlgebraicPiMultiple::rational_multiple(detail::unit_progression_coeff(n), n);
        case 6: {
            if (!even_n) return std::nullopt;
            Rational r = Rational(pow_integer(Integer(2), n) - 1) *
                         (Rational(1) - pow_rational(make_rational(1, 3), n)) * bernoulli(2 * L) /
                         (Rational(2) * Rational(factorial(2 * L)));
            if (L % 2 == 0) r = -r;
            return AlgebraicPiMultiple::rational_multiple(r, n);
        }
        default:
            return std::nullopt;
    }
}

/// One candidate linear system tying the unknown normalized sums of a
/// (kind, n, k) family to rational polynomial values at the Fourier nodes.
/// Rows cover the full plausible node range; the solver validates each row
/// numerically before trusting it.
struct FamilySystem {
    SumKind kind = SumKind::plain;
    int n = 2;
    int k = 3;
    TrigKind trig = TrigKind::cosine;
    bool odd_nodes = true; ///< node numerators 2l-1 (true) or 2l (false)
    unsigned conductor = 12;
    std::vector<int> unknowns;          ///< residues j carried by the columns
    std::vector<long> node_numerators;  ///< per row
    std::vector<Rational> rhs_rational; ///< polynomial value minus known terms
    CycloMatrix matrix;
    std::vector<AlgebraicPiMultiple> rhs; ///< rhs_rational * pi^n, exact form
};

/// Assembles the family system for (kind, n, k), k >= 3. Plain sums at even
/// modulus have no direct system (they reduce through even_reduction).
inline FamilySystem build_system(SumKind kind, int n, int k) {
    if (n < 2 || k < 3) throw bad_query("build_system needs n >= 2 and k >= 3");
    const bool even_n = (n % 2 == 0);
    const bool even_k = (k % 2 == 0);
    if (kind == SumKind::plain && even_k)
        throw bad_query("plain sums at even modulus reduce via even_reduction");

    const int i = k / 2;
    const unsigned m = even_n ? static_cast<unsigned>(n - 2) / 2 : static_cast<unsigned>(n - 1) / 2;
    const NormalizedPolynomial poly = even_n ? cosine_poly(m) : sine_poly(m);

    FamilySystem sys{kind,
                      n,
                      k,
                      even_n ? TrigKind::cosine : TrigKind::sine,
                      /*odd_nodes=*/!(kind == SumKind::alternating && !even_k),
                      trig_conductor(static_cast<unsigned>(k)),
                      {},
                      {},
                      {},
                      CycloMatrix(static_cast<std::size_t>(i),
                                  static_cast<std::size_t>(even_k ? i - 1 : i),
                                  trig_conductor(static_cast<unsigned>(k))),
                      {}};
    for (int j = 1; j <= (even_k ? i - 1 : i); ++j) sys.unknowns.push_back(j);

    // base known term shared by all rows of the cosine cases, composed from
    // the family mean and the even zeta value
    Rational base_known(0);
    if (even_n) {
        Rational half_mean = cosine_poly_mean(m).coeff.rational_value() / Rational(2);
        Rational k_pow = pow_rational(make_rational(1, k), n);
        if (kind == SumKind::plain)
            base_known = half_mean + zeta_even_coeff(static_cast<unsigned>(n) / 2) * k_pow;
        else
            base_known = half_mean * (Rational(1) - k_pow);
    }

    for (int l = 1; l <= i; ++l) {
        long numerator = sys.odd_nodes ? 2L * l - 1 : 2L * l;
        sys.node_numerators.push_back(numerator);
        Rational node = make_rational(numerator, k);
        Rational value = eval_normalized(poly, node);
        Rational known = base_known;
        if (!even_n && kind == SumKind::alternating && even_k) {
            // the central residue contributes a known unit-progression term
            Rational central = pow_rational(make_rational(1, i), n) *
                               detail::unit_progression_coeff(n);
            if ((i + l) % 2 == 0) central = -central; // (-1)^{i+l+1}
            known = known + central;
        }
        Rational rhs = value - known;
        sys.rhs_rational.push_back(rhs);
        sys.rhs.push_back(AlgebraicPiMultiple(
            n, CycloElement::from_rational(rhs, sys.conductor)));
        for (std::size_t col = 0; col < sys.unknowns.size(); ++col) {
            int j = sys.unknowns[col];
            CycloElement entry =
                trig_element(sys.trig, numerator * j, static_cast<unsigned>(k));
            if (j % 2 != 0) entry = -entry;
            sys.matrix.set(static_cast<std::size_t>(l - 1), col, std::move(entry));
        }
    }
    return sys;
}

/// Exact values of every residue of one (kind, n, k) family, plus a note on
/// how they were obtained.
struct SolvedFamily {
    SumKind kind = SumKind::plain;
    int n = 2;
    int k = 2;
    std::map<int, AlgebraicPiMultiple> values; ///< residues 1..floor(k/2)
    std::string provenance;
    std::vector<long> dropped_nodes; ///< numerators of candidate rows that failed the pre-check
};

inline AlgebraicPiMultiple evaluate(const SumQuery& q);

namespace detail {

/// Numeric residual of one candidate row against oracle values of the
/// unknowns; rows are admitted only below 10^-25.
inline BigFloat row_residual(const FamilySystem& sys, std::size_t row,
                             const std::vector<BigFloat>& unknowns_numeric,
                             const std::vector<BigFloat>& row_coeffs) {
    BigFloat acc(unknowns_numeric.empty() ? 192 : unknowns_numeric[0].precision());
    for (std::size_t c = 0; c < unknowns_numeric.size(); ++c)
        acc += row_coeffs[c] * unknowns_numeric[c];
    return (acc - BigFloat::from(sys.rhs_rational[row], 192)).abs();
}

inline SolvedFamily solve_family_uncached(SumKind kind, int n, int k) {
    FamilySystem sys = build_system(kind, n, k);
    const bool even_k = (k % 2 == 0);
    const int i = k / 2;
    const PrecisionContext ctx = PrecisionContext::for_target(160);
    const mpfr_prec_t wp = 224;

    // oracle values of the unknowns, divided by pi^n
    BigFloat pi_pow = BigFloat::pi(wp).pow_si(n);
    std::vector<BigFloat> x_numeric;
    for (int j : sys.unknowns)
        x_numeric.push_back(numeric_eval(SumQuery{kind, n, k, j}, ctx).value / pi_pow);

    const BigFloat admit = BigFloat::pow2(-83, 64); // ~1e-25
    std::vector<std::size_t> kept;
    SolvedFamily fam{kind, n, k, {}, "", {}};
    for (std::size_t row = 0; row < sys.node_numerators.size(); ++row) {
        std::vector<BigFloat> coeffs;
        for (std::size_t c = 0; c < sys.unknowns.size(); ++c) {
            BigFloat angle = BigFloat::pi(wp) *
                             BigFloat::from(sys.node_numerators[row] * sys.unknowns[c], wp) /
                             BigFloat::from(static_cast<long>(k), wp);
            BigFloat t = (sys.trig == TrigKind::cosine) ? angle.cos() : angle.sin();
            if (sys.unknowns[c] % 2 != 0) t = -t;
            coeffs.push_back(std::move(t));
        }
        if (row_residual(sys, row, x_numeric, coeffs) < admit) {
            kept.push_back(row);
        } else {
            fam.dropped_nodes.push_back(sys.node_numerators[row]);
        }
    }

    // the even-exponent plain families also satisfy the zeta-closure
    // identity; admit it as a closing equation after the same pre-check
    bool closure = (kind == SumKind::plain && n % 2 == 0);
    Rational closure_rhs(0);
    if (closure) {
        closure_rhs = (Rational(1) - pow_rational(make_rational(1, k), n)) *
                      zeta_even_coeff(static_cast<unsigned>(n) / 2);
        BigFloat acc(wp);
        for (const BigFloat& xv : x_numeric) acc += xv;
        if (!((acc - BigFloat::from(closure_rhs, wp)).abs() < admit)) closure = false;
    }

    const std::size_t cols = sys.unknowns.size();
    const std::size_t rows = kept.size() + (closure ? 1 : 0);
    if (rows < cols)
        throw internal_error("family (" + kind_name(kind) + "," + std::to_string(n) + "," +
                             std::to_string(k) +
                             "): too few validated equations; contradicts nonsingularity");

    CycloMatrix A(rows, cols, sys.conductor);
    std::vector<CycloElement> b;
    for (std::size_t r = 0; r < kept.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) A.set(r, c, sys.matrix.at(kept[r], c));
        b.push_back(CycloElement::from_rational(sys.rhs_rational[kept[r]], sys.conductor));
    }
    if (closure) {
        for (std::size_t c = 0; c < cols; ++c)
            A.set(kept.size(), c, CycloElement::from_rational(Rational(1), sys.conductor));
        b.push_back(CycloElement::from_rational(closure_rhs, sys.conductor));
    }

    std::vector<CycloElement> x;
    try {
        x = solve_linear_system(A, b);
    } catch (const singular_system& e) {
        throw internal_error("family (" + kind_name(kind) + "," + std::to_string(n) + "," +
                             std::to_string(k) + ") is exactly singular at column " +
                             std::to_string(e.pivot_column) + "; contradicts nonsingularity");
    } catch (const inconsistent_system& e) {
        throw internal_error("family (" + kind_name(kind) + "," + std::to_string(n) + "," +
                             std::to_string(k) + ") has an exact residual mismatch in row " +
                             std::to_string(e.offending_row));
    }

    if (closure) {
        CycloElement total(sys.conductor);
        for (const CycloElement& xi : x) total = total + xi;
        if (total != CycloElement::from_rational(closure_rhs, sys.conductor))
            throw internal_error("zeta-closure identity failed exactly for family (" +
                                 kind_name(kind) + "," + std::to_string(n) + "," +
                                 std::to_string(k) + ")");
    }

    for (std::size_t c = 0; c < cols; ++c)
        fam.values.emplace(sys.unknowns[c], AlgebraicPiMultiple(n, x[c]));
    if (even_k) {
        // central residue k/2: the modulus collapses to the +-1 progression
        AlgebraicPiMultiple central =
            (n % 2 == 0)
                ? AlgebraicPiMultiple(n, CycloElement(1))
                : AlgebraicPiMultiple::rational_multiple(
                      pow_rational(make_rational(1, i), n) * Rational(2) *
                          unit_progression_coeff(n),
                      n);
        fam.values.emplace(i, central);
    }
    fam.provenance = "trigonometric node system at modulus " + std::to_string(k) +
                     (closure ? " with zeta-closure row" : "");
    return fam;
}

} // namespace detail

inline AlgebraicPiMultiple even_reduction(SumKind kind, int n, int k, int l);

/// Solved family values for (kind, n, k >= 3), cached. Plain families at
/// even modulus are assembled residue-by-residue through the halving
/// identities; everything else is one exact linear solve.
inline const SolvedFamily& solve_family(SumKind kind, int n, int k) {
    if (k < 3) throw bad_query("solve_family needs k >= 3");
    using Key = std::tuple<int, int, int>;
    static std::map<Key, SolvedFamily> cache;
    static std::shared_mutex mutex;
    const Key key{static_cast<int>(kind), n, k};
    {
        std::shared_lock lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    SolvedFamily fam;
    if (kind == SumKind::plain && k % 2 == 0) {
        fam.kind = kind;
        fam.n = n;
        fam.k = k;
        for (int l = 1; l <= k / 2; ++l)
            fam.values.emplace(l, evaluate(SumQuery{kind, n, k, l}));
        fam.provenance = "assembled by modulus halving";
    } else {
        fam = detail::solve_family_uncached(kind, n, k);
    }
    std::unique_lock lock(mutex);
    return cache.emplace(key, std::move(fam)).first->second;
}

/// Plain sums at even modulus: peel one factor of two off the modulus,
/// combining the plain and alternating sums of the halved modulus. The
/// central residue collapses to the +-1 progression directly.
inline AlgebraicPiMultiple even_reduction(SumKind kind, int n, int k, int l) {
    if (kind != SumKind::plain)
        throw bad_query("even_reduction applies to plain sums; alternating families "
                        "are solved directly");
    if (k % 2 != 0) throw bad_query("even_reduction needs an even modulus");
    if (2 * l == k) {
        Rational scale = pow_rational(make_rational(2, k), n);
        return scale * evaluate(SumQuery{SumKind::plain, n, 2, 1});
    }
    int half = k / 2;
    AlgebraicPiMultiple plain = evaluate(SumQuery{SumKind::plain, n, half, l});
    AlgebraicPiMultiple alt = evaluate(SumQuery{SumKind::alternating, n, half, l});
    return make_rational(1, 2) * (plain + alt);
}

/// Exact value of any valid query as an algebraic multiple of pi^n.
inline AlgebraicPiMultiple evaluate(const SumQuery& q) {
    NormalizedQuery nq = normalize(q);
    AlgebraicPiMultiple value;
    if (auto cf = closed_form(nq.query)) {
        value = *cf;
    } else {
        const SumQuery& r = nq.query;
        if (r.k % 2 != 0 || r.kind == SumKind::alternating)
            value = solve_family(r.kind, r.n, r.k).values.at(r.l);
        else
            value = even_reduction(r.kind, r.n, r.k, r.l);
    }
    Rational factor = nq.scale * Rational(nq.sign);
    return factor * value;
}

/// The square node matrices whose exact nonsingularity underwrites every
/// family solve: entries trig(numerator_l * j * pi / n) for l, j ranging
/// over 1..floor((n-1)/2), with node numerators 2l-1 (odd_nodes) or 2l.
/// The even-node variants only arise for odd n.
inline CycloMatrix trig_node_matrix(TrigKind kind, int n, bool odd_nodes) {
    const int size = (n - 1) / 2;
    if (size <= 0) throw bad_query("node matrix needs n >= 3");
    CycloMatrix M(static_cast<std::size_t>(size), static_cast<std::size_t>(size),
                  trig_conductor(static_cast<unsigned>(n)));
    for (int l = 1; l <= size; ++l) {
        long numerator = odd_nodes ? 2L * l - 1 : 2L * l;
        for (int j = 1; j <= size; ++j)
            M.set(static_cast<std::size_t>(l - 1), static_cast<std::size_t>(j - 1),
                  trig_element(kind, numerator * j, static_cast<unsigned>(n)));
    }
    return M;
}

/// Exact value of zeta(n,p) + (-1)^n zeta(n,1-p) (plain) or its alternating
/// counterpart, for rational p in (0,1): the lattice sum scaled by k^n.
inline AlgebraicPiMultiple hurwitz_combination(int n, const Rational& p, bool alternating) {
    if (p <= 0 || p >= 1) throw bad_query("hurwitz_combination needs p in (0,1)");
    Rational canon = p; // mpq_class arithmetic results are canonical
    long k = canon.get_den().get_si();
    long l = canon.get_num().get_si();
    if (k < 2 || k > 1000000)
        throw bad_query("denominator of p out of supported range");
    SumQuery q{alternating ? SumKind::alternating : SumKind::plain, n, static_cast<int>(k),
               static_cast<int>(l)};
    Rational scale(pow_integer(Integer(k), static_cast<unsigned long>(n)));
    return scale * evaluate(q);
}

} // namespace zetakit

#endif
