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

#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "zetakit/numerics.hpp"

using namespace zetakit;

namespace {

BigFloat pi_power(int e, mpfr_prec_t prec) { return BigFloat::pi(prec).pow_si(e); }

} // namespace

TEST_CASE("precision context validation") {
    PrecisionContext ok = PrecisionContext::for_target(128);
    CHECK_NOTHROW(ok.validate());
    PrecisionContext bad{100, 96, 32};
    CHECK_THROWS_AS(bad.validate(), bad_query);
}

TEST_CASE("hurwitz zeta against pi-power values") {
    PrecisionContext ctx = PrecisionContext::for_target(192);
    BigFloat tol = BigFloat::pow2(-180, 64);

    CHECK((hurwitz_direct(2, Rational(1), ctx).value -
           pi_power(2, 256) / BigFloat::from(6L, 256))
              .abs() < tol);
    CHECK((hurwitz_direct(2, make_rational(1, 2), ctx).value -
           pi_power(2, 256) / BigFloat::from(2L, 256))
              .abs() < tol);
    CHECK((hurwitz_direct(4, Rational(1), ctx).value -
           pi_power(4, 256) / BigFloat::from(90L, 256))
              .abs() < tol);

    CHECK_THROWS_AS(hurwitz_direct(2, Rational(2), ctx), bad_query);
    CHECK_THROWS_AS(hurwitz_direct(1, Rational(1), ctx), bad_query);
}

TEST_CASE("lattice sums against pi-power values") {
    PrecisionContext ctx = PrecisionContext::for_target(192);
    BigFloat tol = BigFloat::pow2(-180, 64);

    // sum over all integers of 1/(4j+1)^2 = pi^2/8
    CHECK((numeric_eval(SumQuery{SumKind::plain, 2, 4, 1}, ctx).value -
           pi_power(2, 256) / BigFloat::from(8L, 256))
              .abs() < tol);

    // alternating sum at modulus 4, exponent 3: 3 sqrt(2) pi^3 / 128
    BigFloat expect = BigFloat::from(3L, 256) * BigFloat::from(2L, 256).sqrt() *
                      pi_power(3, 256) / BigFloat::from(128L, 256);
    CHECK((numeric_eval(SumQuery{SumKind::alternating, 3, 4, 1}, ctx).value - expect).abs() <
          tol);

    // the reported bound really covers the target
    NumericValue nv = numeric_eval(SumQuery{SumKind::plain, 2, 12, 5}, ctx);
    CHECK(nv.error_bound < BigFloat::pow2(-192, 64));
}

TEST_CASE("tail bound soundness: doubling the split point") {
    std::mt19937 rng(20260810);
    std::uniform_int_distribution<int> pick_n(2, 6), pick_a(1, 12), pick_b(1, 11);
    PrecisionContext ctx = PrecisionContext::for_target(160);
    for (int it = 0; it < 50; ++it) {
        int n = pick_n(rng);
        long a = pick_a(rng);
        Rational b = make_rational(pick_b(rng), 1 + (it % 3));
        NumericValue v1 = detail::one_sided_power_sum(n, a, b, ctx, 64);
        NumericValue v2 = detail::one_sided_power_sum(n, a, b, ctx, 128);
        CHECK((v1.value - v2.value).abs() <= v1.error_bound + v2.error_bound);
    }
}

TEST_CASE("precision monotonicity") {
    PrecisionContext lo = PrecisionContext::for_target(128);
    PrecisionContext hi = PrecisionContext::for_target(256);
    for (const SumQuery q : {SumQuery{SumKind::plain, 2, 7, 3},
                             SumQuery{SumKind::alternating, 3, 10, 3},
                             SumQuery{SumKind::plain, 6, 12, 5}}) {
        BigFloat a = numeric_eval(q, lo).value;
        BigFloat b = numeric_eval(q, hi).value;
        CHECK((a - b).abs() < BigFloat::pow2(-(128 - 48), 64));
    }
}

TEST_CASE("duplication identity residuals") {
    PrecisionContext ctx = PrecisionContext::for_target(192);
    BigFloat tol = BigFloat::pow2(-185, 64);
    CHECK(multiplication_theorem_check(2, Rational(1), ctx) < tol);
    CHECK(multiplication_theorem_check(3, make_rational(1, 3), ctx) < tol);
    CHECK(multiplication_theorem_check(5, make_rational(2, 5), ctx) < tol);
    for (int n = 2; n <= 6; ++n)
        for (int q = 2; q <= 12; ++q)
            for (int p = 1; p <= q; p += (q > 6 ? 3 : 1))
                CHECK(multiplication_theorem_check(n, make_rational(p, q), ctx) < tol);
}

TEST_CASE("lattice sums split into Hurwitz combinations numerically") {
    // modulus-k sum vs k^-n (zeta(n,l/k) + (-1)^n zeta(n,1-l/k))
    PrecisionContext ctx = PrecisionContext::for_target(192);
    BigFloat tol = BigFloat::pow2(-180, 64);
    for (const SumQuery q : {SumQuery{SumKind::plain, 2, 5, 2}, SumQuery{SumKind::plain, 3, 7, 2},
                             SumQuery{SumKind::plain, 4, 9, 4}}) {
        BigFloat direct = numeric_eval(q, ctx).value;
        BigFloat za = hurwitz_direct(q.n, make_rational(q.l, q.k), ctx).value;
        BigFloat zb = hurwitz_direct(q.n, make_rational(q.k - q.l, q.k), ctx).value;
        BigFloat combined = (q.n % 2 == 0 ? za + zb : za - zb) *
                            BigFloat::from(q.k, 256).pow_si(-q.n);
        CHECK((direct - combined).abs() < tol);
    }
}
