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

#include <catch2/catch_amalgamated.hpp>

#include "zetakit/fourier.hpp"
#include "zetakit/numerics.hpp"

using namespace zetakit;

TEST_CASE("polynomial families, small members") {
    NormalizedPolynomial c0 = cosine_poly(0);
    CHECK(c0.coeffs == std::vector<Rational>{Rational(0), Rational(0), make_rational(1, 4)});

    NormalizedPolynomial s0 = sine_poly(0);
    CHECK(s0.coeffs == std::vector<Rational>{Rational(0), make_rational(-1, 2)});

    NormalizedPolynomial s1 = sine_poly(1);
    CHECK(s1.coeffs == std::vector<Rational>{Rational(0), make_rational(-1, 12), Rational(0),
                                             make_rational(1, 12)});
}

TEST_CASE("degree and parity invariants") {
    for (unsigned m = 0; m <= 20; ++m) {
        NormalizedPolynomial c = cosine_poly(m);
        CHECK(c.degree() == 2 * m + 2);
        CHECK(c.coeffs[0] == 0);
        CHECK(c.coeffs[1] == 0);
        CHECK(c.coeffs[2 * m + 2] != 0);
        for (std::size_t d = 1; d < c.coeffs.size(); d += 2) CHECK(c.coeffs[d] == 0);

        NormalizedPolynomial s = sine_poly(m);
        CHECK(s.degree() == 2 * m + 1);
        CHECK(s.coeffs[2 * m + 1] != 0);
        for (std::size_t d = 0; d < s.coeffs.size(); d += 2) CHECK(s.coeffs[d] == 0);
    }
}

TEST_CASE("exact evaluation") {
    CHECK(eval_normalized(sine_poly(0), make_rational(1, 2)) == make_rational(-1, 4));
    CHECK(eval_normalized(sine_poly(1), make_rational(1, 2)) == make_rational(-1, 32));
    CHECK(eval_normalized(cosine_poly(0), Rational(1)) == make_rational(1, 4));
}

TEST_CASE("monomial transforms: base cases and one recursion step") {
    for (unsigned n = 1; n <= 5; ++n) {
        PiPolynomial b0 = monomial_fourier(TrigKind::sine, 1, n);
        CHECK(b0.coefficient(0) ==
              make_rational((n % 2 == 0) ? -2 : 2, static_cast<long>(n)));
        CHECK(b0.terms().size() == 1);
        CHECK(monomial_fourier(TrigKind::cosine, 0, n).is_zero());
    }
    PiPolynomial b1 = monomial_fourier(TrigKind::sine, 3, 1);
    CHECK(b1.coefficient(2) == Rational(2));
    CHECK(b1.coefficient(0) == Rational(-12));
    CHECK(b1.terms().size() == 2);

    CHECK_THROWS_AS(monomial_fourier(TrigKind::sine, 2, 1), bad_query);
    CHECK_THROWS_AS(monomial_fourier(TrigKind::cosine, 3, 1), bad_query);
}

TEST_CASE("monomial transforms match their closed-form expansions") {
    // sine, odd power 2m+1: (-1)^{n+1} (2 (2m+1)!/n^{2m+1}) *
    //     sum_k (-1)^k pi^{2(m-k)} n^{2(m-k)} / (2m+1-2k)!
    for (unsigned m = 0; m <= 6; ++m) {
        for (unsigned n = 1; n <= 6; ++n) {
            PiPolynomial expect;
            Rational front = make_rational((n % 2 == 0) ? -2 : 2, 1) *
                             Rational(factorial(2 * m + 1)) /
                             Rational(pow_integer(Integer(n), 2 * m + 1));
            for (unsigned k = 0; k <= m; ++k) {
                Rational c = front * Rational(pow_integer(Integer(n), 2 * (m - k))) /
                             Rational(factorial(2 * m + 1 - 2 * k));
                if (k % 2 == 1) c = -c;
                expect.add_term(2 * static_cast<long>(m - k), c);
            }
            CHECK(monomial_fourier(TrigKind::sine, 2 * m + 1, n) == expect);
        }
    }
    // cosine, even power 2m: (-1)^n (2 (2m)!/n^{2m}) *
    //     sum_{k<m} (-1)^k pi^{2(m-1-k)} n^{2(m-1-k)} / (2m-1-2k)!
    for (unsigned m = 1; m <= 6; ++m) {
        for (unsigned n = 1; n <= 6; ++n) {
            PiPolynomial expect;
            Rational front = make_rational((n % 2 == 0) ? 2 : -2, 1) *
                             Rational(factorial(2 * m)) /
                             Rational(pow_integer(Integer(n), 2 * m));
            for (unsigned k = 0; k < m; ++k) {
                Rational c = front * Rational(pow_integer(Integer(n), 2 * (m - 1 - k))) /
                             Rational(factorial(2 * m - 1 - 2 * k));
                if (k % 2 == 1) c = -c;
                expect.add_term(2 * static_cast<long>(m - 1 - k), c);
            }
            CHECK(monomial_fourier(TrigKind::cosine, 2 * m, n) == expect);
        }
    }
}

TEST_CASE("coefficient law with exact pi cancellation") {
    for (unsigned m = 0; m <= 8; ++m) {
        for (unsigned n = 1; n <= 12; ++n) {
            Rational sgn((n % 2 == 0) ? 1 : -1);
            CHECK(exact_fourier_coefficient(sine_poly(m), n) ==
                  sgn / Rational(pow_integer(Integer(n), 2 * m + 1)));
            CHECK(exact_fourier_coefficient(cosine_poly(m), n) ==
                  sgn / Rational(pow_integer(Integer(n), 2 * m + 2)));
        }
    }
}

TEST_CASE("mean value of the cosine family") {
    CHECK(cosine_poly_mean(0) == AlgebraicPiMultiple::rational_multiple(make_rational(1, 6), 2));
    CHECK(cosine_poly_mean(1) ==
          AlgebraicPiMultiple::rational_multiple(make_rational(7, 360), 4));
    // the Bernoulli form and the zeta form agree exactly
    for (unsigned m = 0; m <= 10; ++m) {
        Rational via_zeta = Rational(2) * zeta_even_coeff(m + 1) *
                            (Rational(1) - pow_rational(make_rational(1, 2), 2 * m + 1));
        CHECK(cosine_poly_mean(m) ==
              AlgebraicPiMultiple::rational_multiple(via_zeta, 2 * m + 2));
    }
}

TEST_CASE("alternating Dirichlet series closed forms") {
    CHECK(dirichlet_closed_form(DirichletKind::cosine, 2, Rational(0)) ==
          AlgebraicPiMultiple::rational_multiple(make_rational(-1, 12), 2));
    CHECK(dirichlet_closed_form(DirichletKind::sine, 3, make_rational(1, 2)) ==
          AlgebraicPiMultiple::rational_multiple(make_rational(-1, 32), 3));
    CHECK(dirichlet_closed_form(DirichletKind::sine, 3, Rational(0)).is_zero());

    CHECK_THROWS_AS(dirichlet_closed_form(DirichletKind::cosine, 3, Rational(0)), bad_query);
    CHECK_THROWS_AS(dirichlet_closed_form(DirichletKind::sine, 4, Rational(0)), bad_query);
    CHECK_THROWS_AS(dirichlet_closed_form(DirichletKind::sine, 1, Rational(0)), bad_query);
    CHECK_THROWS_AS(dirichlet_closed_form(DirichletKind::cosine, 2, Rational(2)), bad_query);
}

TEST_CASE("partial sums converge to the closed forms") {
    // cosine kind at a few sampled points, J terms, bound 10 * 2/J^s
    const long J = 2000;
    struct Sample {
        int order;
        Rational t;
    };
    Sample samples[] = {{2, make_rational(1, 3)}, {4, make_rational(1, 2)},
                        {6, make_rational(2, 3)}, {2, Rational(0)}};
    for (const auto& s : samples) {
        BigFloat closed =
            dirichlet_closed_form(DirichletKind::cosine, s.order, s.t).to_real(192);
        const mpfr_prec_t wp = 256;
        BigFloat pi_t = BigFloat::pi(wp) * BigFloat::from(s.t, wp);
        BigFloat acc(wp);
        for (long j = 1; j <= J; ++j) {
            BigFloat term = (BigFloat::from(j, wp) * pi_t).cos() /
                            BigFloat::from(j, wp).pow_si(s.order);
            if (j % 2 == 1) term = -term;
            acc += term;
        }
        BigFloat bound = BigFloat::from(20L, 64) * BigFloat::from(J, 64).pow_si(-s.order);
        CHECK((acc - closed).abs() < bound);
    }
}

TEST_CASE("quadrature agrees with the exact coefficients") {
    PrecisionContext ctx = PrecisionContext::for_target(128);
    BigFloat tol = BigFloat::from(1L, 64);
    for (int i = 0; i < 20; ++i) tol = tol / BigFloat::from(10L, 64);
    struct Pair {
        unsigned m, n;
    };
    for (Pair p : {Pair{0, 1}, Pair{1, 2}, Pair{2, 3}, Pair{3, 5}}) {
        BigFloat q = quadrature_fourier(sine_poly(p.m), TrigKind::sine, p.n, ctx);
        BigFloat exact = BigFloat::from(exact_fourier_coefficient(sine_poly(p.m), p.n), 256);
        CHECK((q - exact).abs() < tol);

        BigFloat qc = quadrature_fourier(cosine_poly(p.m), TrigKind::cosine, p.n, ctx);
        BigFloat exactc = BigFloat::from(exact_fourier_coefficient(cosine_poly(p.m), p.n), 256);
        CHECK((qc - exactc).abs() < tol);
    }
    // the 0-mode of the cosine family is its mean
    BigFloat mean = quadrature_fourier(cosine_poly(0), TrigKind::cosine, 0, ctx);
    CHECK((mean - cosine_poly_mean(0).to_real(192)).abs() < tol);
}
