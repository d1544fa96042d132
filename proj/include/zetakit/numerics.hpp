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

#ifndef ZETAKIT_NUMERICS_HPP
#define ZETAKIT_NUMERICS_HPP

#include <algorithm>
#include <cmath>

#include "zetakit/bigfloat.hpp"
#include "zetakit/fourier.hpp"
#include "zetakit/numtheory.hpp"
#include "zetakit/query.hpp"

namespace zetakit {

/// Precision bookkeeping for the numerical oracle. Results are reported
/// together with a rigorous bound: analytic tail remainder plus a rounding
/// budget of (operation count) * ulp at the working precision.
struct PrecisionContext {
    mpfr_prec_t working_bits = 288;
    mpfr_prec_t target_bits = 192;
    mpfr_prec_t margin_bits = 48;

    static PrecisionContext for_target(mpfr_prec_t target) {
        PrecisionContext ctx;
        ctx.target_bits = target;
        ctx.margin_bits = 48;
        ctx.working_bits = target + 96;
        return ctx;
    }

    void validate() const {
        if (margin_bits < 16) throw bad_query("precision margin must be >= 16 bits");
        if (working_bits < target_bits + margin_bits)
            throw bad_query("working precision must cover target + margin");
    }
};

/// A computed value together with a rigorous absolute error bound.
struct NumericValue {
    BigFloat value;
    BigFloat error_bound;
};

namespace detail {

inline Integer rising_factorial(long n, unsigned m) {
    Integer r(1);
    for (unsigned i = 0; i < m; ++i) r *= Integer(n + static_cast<long>(i));
    return r;
}

/// sum_{j>=0} (a*j + b)^{-n} for integer a >= 1 and rational b > 0, by
/// direct summation of `terms` leading terms plus an Euler-Maclaurin tail.
/// The summand is completely monotone, so the first omitted correction term
/// bounds the tail remainder. `forced_terms` pins the split point (tests);
/// zero lets the routine grow it until the remainder is below
/// 2^-(target+margin).
inline NumericValue one_sided_power_sum(int n, long a, const Rational& b,
                                        const PrecisionContext& ctx, long forced_terms = 0) {
    ctx.validate();
    if (n < 2) throw bad_query("power sums need exponent n >= 2");
    if (a < 1 || b <= 0) throw bad_query("power sum needs a >= 1 and b > 0");
    const mpfr_prec_t wp = ctx.working_bits + 32;
    constexpr unsigned R = 24; // fixed correction depth
    const BigFloat goal =
        BigFloat::pow2(-static_cast<long>(ctx.target_bits + ctx.margin_bits), 64);

    // |B_{2R+2}| (n)_{2R+1} a^{2R+1} / (2R+2)! * (aJ+b)^{-n-2R-1}
    Rational rem_front = abs_rational(bernoulli(2 * R + 2)) *
                         Rational(rising_factorial(n, 2 * R + 1)) *
                         Rational(pow_integer(Integer(a), 2 * R + 1)) /
                         Rational(factorial(2 * R + 2));
    auto remainder_bound = [&](long J) {
        BigFloat edge = BigFloat::from(Rational(a) * J + b, 128);
        return BigFloat::from(rem_front, 128) * edge.pow_si(-(n + 2 * static_cast<int>(R) + 1));
    };

    long J = forced_terms > 0 ? forced_terms : 64;
    if (forced_terms == 0) {
        while (!(remainder_bound(J) < goal)) {
            J *= 2;
            if (J > (1L << 22))
                throw internal_error("tail split point exploded; target precision unreachable");
        }
    }

    BigFloat sum(wp);
    for (long j = 0; j < J; ++j) {
        BigFloat term = BigFloat::from(Rational(a) * j + b, wp).pow_si(-n);
        sum += term;
    }

    const BigFloat edge = BigFloat::from(Rational(a) * J + b, wp); // aJ + b
    BigFloat tail = edge.pow_si(1 - n) /
                    BigFloat::from(Rational(a) * Rational(n - 1), wp); // integral part
    tail += edge.pow_si(-n).ldexp(-1);                               // f(J)/2
    for (unsigned r = 1; r <= R; ++r) {
        Rational c = bernoulli(2 * r) * Rational(rising_factorial(n, 2 * r - 1)) *
                     Rational(pow_integer(Integer(a), 2 * r - 1)) /
                     Rational(factorial(2 * r));
        tail += BigFloat::from(c, wp) * edge.pow_si(-(n + 2 * static_cast<int>(r) - 1));
    }

    NumericValue out{(sum + tail).at_precision(ctx.target_bits + 32), BigFloat(64)};
    BigFloat magnitude = out.value.abs();
    if (magnitude < BigFloat::from(1L, 64)) magnitude = BigFloat::from(1L, 64);
    BigFloat rounding = BigFloat::from(J + static_cast<long>(R) + 32, 64) *
                        BigFloat::pow2(-static_cast<long>(wp) + 4, 64) * magnitude;
    // plus the representation rounding of the returned value itself
    rounding += BigFloat::pow2(-static_cast<long>(ctx.target_bits) - 29, 64) * magnitude;
    out.error_bound = remainder_bound(J) + rounding;
    return out;
}

} // namespace detail

/// Direct evaluation of the lattice sum itself: the +j and -j branches are
/// two one-sided sums, each with its own rigorous tail.
inline NumericValue numeric_eval(const SumQuery& q, const PrecisionContext& ctx) {
    q.validate();
    const int sgn_n = (q.n % 2 == 0) ? 1 : -1;
    if (q.kind == SumKind::plain) {
        NumericValue pos = detail::one_sided_power_sum(q.n, q.k, Rational(q.l), ctx);
        NumericValue neg = detail::one_sided_power_sum(q.n, q.k, Rational(q.k - q.l), ctx);
        BigFloat v = sgn_n > 0 ? pos.value + neg.value : pos.value - neg.value;
        return {std::move(v), pos.error_bound + neg.error_bound};
    }
    // alternating: split each branch by the parity of j (modulus doubles)
    NumericValue a = detail::one_sided_power_sum(q.n, 2 * q.k, Rational(q.l), ctx);
    NumericValue b = detail::one_sided_power_sum(q.n, 2 * q.k, Rational(q.k + q.l), ctx);
    NumericValue c = detail::one_sided_power_sum(q.n, 2 * q.k, Rational(2 * q.k - q.l), ctx);
    NumericValue d = detail::one_sided_power_sum(q.n, 2 * q.k, Rational(q.k - q.l), ctx);
    BigFloat v = a.value - b.value;
    BigFloat w = c.value - d.value;
    BigFloat total = sgn_n > 0 ? v + w : v - w;
    return {std::move(total),
            a.error_bound + b.error_bound + c.error_bound + d.error_bound};
}

/// Hurwitz zeta by direct summation with the Euler-Maclaurin tail.
inline NumericValue hurwitz_direct(int n, const Rational& x, const PrecisionContext& ctx) {
    if (x <= 0 || x > 1) throw bad_query("hurwitz_direct needs 0 < x <= 1");
    return detail::one_sided_power_sum(n, 1, x, ctx);
}

/// Alternating Hurwitz zeta, as the difference of the even-index and
/// odd-index sub-series.
inline NumericValue hurwitz_alternating(int n, const Rational& x, const PrecisionContext& ctx) {
    if (x <= 0 || x > 1) throw bad_query("hurwitz_alternating needs 0 < x <= 1");
    NumericValue even = detail::one_sided_power_sum(n, 2, x, ctx);
    NumericValue odd = detail::one_sided_power_sum(n, 2, Rational(x + 1), ctx);
    return {even.value - odd.value, even.error_bound + odd.error_bound};
}

/// Residual of the duplication identities that split a Hurwitz zeta value
/// into the two half-residue values, checked numerically for both the plain
/// and the alternating series. Returns the larger of the two residuals.
inline BigFloat multiplication_theorem_check(int n, const Rational& x,
                                             const PrecisionContext& ctx) {
    if (x <= 0 || x > 1) throw bad_query("multiplication_theorem_check needs 0 < x <= 1");
    BigFloat lhs = hurwitz_direct(n, x, ctx).value;
    BigFloat lhs_alt = hurwitz_alternating(n, x, ctx).value;
    BigFloat za = hurwitz_direct(n, Rational(x / 2), ctx).value;
    BigFloat zb = hurwitz_direct(n, Rational((x + 1) / 2), ctx).value;
    BigFloat scale = BigFloat::pow2(-n, 64);
    BigFloat r1 = (lhs - (za + zb) * scale).abs();
    BigFloat r2 = (lhs_alt - (za - zb) * scale).abs();
    return r1 > r2 ? r1 : r2;
}

namespace detail {

/// De-normalized polynomial value: p was built in t = x/pi, so the value at
/// x is pi^order * p(x/pi).
inline BigFloat denormalized_value(const NormalizedPolynomial& p, const BigFloat& x,
                                   mpfr_prec_t wp) {
    const long order = static_cast<long>(p.kind == PolyKind::cosine ? 2 * p.m + 2 : 2 * p.m + 1);
    BigFloat pi = BigFloat::pi(wp);
    BigFloat t = x / pi;
    BigFloat acc(wp);
    for (std::size_t i = p.coeffs.size(); i-- > 0;)
        acc = acc * t + BigFloat::from(p.coeffs[i], wp);
    return acc * pi.pow_si(order);
}

} // namespace detail

/// (1/pi) * integral over [-pi,pi] of p_denorm(x) * trig(n x) dx by
/// adaptive tanh-sinh quadrature (the integrand is entire, so the
/// double-exponential rule converges at an essentially geometric rate in
/// the refinement level). n = 0 with the cosine kind gives the mean.
inline BigFloat quadrature_fourier(const NormalizedPolynomial& p, TrigKind trig, unsigned n,
                                   const PrecisionContext& ctx) {
    ctx.validate();
    const mpfr_prec_t wp = ctx.working_bits + 32;
    const BigFloat pi = BigFloat::pi(wp);
    const BigFloat half_pi = pi.ldexp(-1);

    auto integrand = [&](const BigFloat& u) {
        // x = pi * u; weight handled by caller
        BigFloat x = pi * u;
        BigFloat phase = x * BigFloat::from(static_cast<long>(n), wp);
        BigFloat tr = (trig == TrigKind::cosine) ? phase.cos() : phase.sin();
        return detail::denormalized_value(p, x, wp) * tr;
    };

    // integral over u in [-1,1] with u = tanh((pi/2) sinh(w))
    const double wmax_d = 1.0 + std::log(0.70 * static_cast<double>(wp) + 4.0);
    const BigFloat goal = BigFloat::pow2(-static_cast<long>(ctx.target_bits + 8), 64);
    BigFloat prev(wp), result(wp);
    bool have_prev = false;
    for (int level = 3; level <= 14; ++level) {
        const long steps = static_cast<long>(std::ldexp(wmax_d, level)) + 1;
        const BigFloat h = BigFloat::from(make_rational(1, 1L << level), wp);
        BigFloat acc(wp);
        for (long j = -steps; j <= steps; ++j) {
            BigFloat w = h * BigFloat::from(j, wp);
            mpfr_t sh, ch;
            mpfr_init2(sh, wp);
            mpfr_init2(ch, wp);
            mpfr_sinh_cosh(sh, ch, w.raw(), MPFR_RNDN);
            BigFloat shw(wp), chw(wp);
            mpfr_set(shw.raw(), sh, MPFR_RNDN);
            mpfr_set(chw.raw(), ch, MPFR_RNDN);
            mpfr_clear(sh);
            mpfr_clear(ch);
            BigFloat inner = half_pi * shw;
            mpfr_t th, sech;
            mpfr_init2(th, wp);
            mpfr_init2(sech, wp);
            mpfr_tanh(th, inner.raw(), MPFR_RNDN);
            mpfr_cosh(sech, inner.raw(), MPFR_RNDN);
            BigFloat u(wp), cosh_inner(wp);
            mpfr_set(u.raw(), th, MPFR_RNDN);
            mpfr_set(cosh_inner.raw(), sech, MPFR_RNDN);
            mpfr_clear(th);
            mpfr_clear(sech);
            BigFloat weight = half_pi * chw / (cosh_inner * cosh_inner);
            if (mpfr_number_p(weight.raw()) == 0 || weight.is_zero()) continue;
            acc += integrand(u) * weight;
        }
        result = h * acc; // the outer pi of dx = pi du cancels against the 1/pi prefactor
        if (have_prev) {
            BigFloat diff = (result - prev).abs();
            if (diff < goal) return result.at_precision(ctx.target_bits + 32);
        }
        prev = result;
        have_prev = true;
    }
    throw internal_error("tanh-sinh quadrature failed to converge");
}

} // namespace zetakit

#endif
