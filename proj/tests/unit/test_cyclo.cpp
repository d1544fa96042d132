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

#include "zetakit/cyclo.hpp"
#include "zetakit/solver.hpp"

using namespace zetakit;

namespace {

CycloElement random_element(std::mt19937& rng, unsigned N) {
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 40);
    CycloElement acc(N);
    unsigned deg = euler_totient(N);
    for (unsigned i = 0; i < deg; ++i)
        acc = acc + make_rational(num(rng), den(rng)) *
                        CycloElement::zeta_power(N, static_cast<long>(i));
    return acc;
}

} // namespace

TEST_CASE("roots of unity basics") {
    CycloElement z = CycloElement::zeta_power(8, 1);
    CycloElement z7 = CycloElement::zeta_power(8, 7);
    CHECK(z * z7 == CycloElement::from_rational(Rational(1), 8));

    CycloElement two = CycloElement::from_rational(Rational(2), 12);
    CHECK(two.inverse() == CycloElement::from_rational(make_rational(1, 2), 12));

    // (zeta_8 + zeta_8^-1)^2 = 2
    CycloElement s = z + CycloElement::zeta_power(8, -1);
    CHECK(s * s == CycloElement::from_rational(Rational(2), 8));

    CHECK_THROWS_AS(CycloElement(8).inverse(), division_by_zero);
    CHECK_THROWS_AS(CycloElement(8) + CycloElement(12), conductor_mismatch);
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(20260810);
    for (unsigned N : {1u, 4u, 5u, 8u, 12u, 15u, 24u, 36u, 60u}) {
        CycloElement a = random_element(rng, N);
        CycloElement b = random_element(rng, N);
        CycloElement c = random_element(rng, N);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        if (!a.is_zero())
            CHECK(a * a.inverse() == CycloElement::from_rational(Rational(1), N));
    }
}

TEST_CASE("trig elements: pythagoras and angle addition") {
    for (unsigned k = 1; k <= 20; ++k) {
        unsigned L = trig_conductor(k);
        CycloElement one = CycloElement::from_rational(Rational(1), L);
        for (long j = 0; j <= 2 * static_cast<long>(k); ++j) {
            CycloElement c = trig_element(TrigKind::cosine, j, k);
            CycloElement s = trig_element(TrigKind::sine, j, k);
            CHECK(c * c + s * s == one);
        }
    }

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> pick(-30, 30);
    for (int it = 0; it < 40; ++it) {
        unsigned k = 1 + static_cast<unsigned>(std::uniform_int_distribution<int>(0, 14)(rng));
        long j1 = pick(rng), j2 = pick(rng);
        CycloElement lhs = trig_element(TrigKind::cosine, j1 + j2, k);
        CycloElement rhs = trig_element(TrigKind::cosine, j1, k) *
                               trig_element(TrigKind::cosine, j2, k) -
                           trig_element(TrigKind::sine, j1, k) * trig_element(TrigKind::sine, j2, k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("trig element samples") {
    CHECK(trig_element(TrigKind::cosine, 0, 1).rational_value() == 1);
    CHECK(trig_element(TrigKind::cosine, 1, 2).is_zero());
    CycloElement c = trig_element(TrigKind::cosine, 1, 4);
    CHECK((c * c).rational_value() == make_rational(1, 2));
    CHECK(embed_decimal(c, 128).str(18).substr(0, 10) == "7.07106781");
    CycloElement s = trig_element(TrigKind::sine, 1, 3);
    CHECK((s * s).rational_value() == make_rational(3, 4));
}

TEST_CASE("conductor lifting") {
    CycloElement one4 = CycloElement::from_rational(Rational(1), 4);
    CHECK(one4.lift(8) == CycloElement::from_rational(Rational(1), 8));

    CHECK(CycloElement::zeta_power(4, 1).lift(8) == CycloElement::zeta_power(8, 2));

    // cos(pi/3) assembled at conductor 6 equals the direct build at 12
    CycloElement c6 = make_rational(1, 2) *
                      (CycloElement::zeta_power(6, 1) + CycloElement::zeta_power(6, -1));
    CHECK(c6.lift(12) == trig_element(TrigKind::cosine, 2, 6));

    CHECK_THROWS_AS(CycloElement::zeta_power(8, 1).lift(12), bad_query);
}

TEST_CASE("linear solve: identity, 1x1 inverse, diagnostics") {
    std::mt19937 rng(99);
    unsigned N = 12;
    CycloMatrix I(3, 3, N);
    for (int i = 0; i < 3; ++i) I.set(i, i, CycloElement::from_rational(Rational(1), N));
    std::vector<CycloElement> b{random_element(rng, N), random_element(rng, N),
                                random_element(rng, N)};
    CHECK(solve_linear_system(I, b) == b);

    CycloMatrix M(1, 1, trig_conductor(4));
    M.set(0, 0, trig_element(TrigKind::cosine, 1, 4));
    auto x = solve_linear_system(
        M, {CycloElement::from_rational(Rational(1), trig_conductor(4))});
    CHECK(embed_decimal(x[0], 128).str(18).substr(0, 10) == "1.41421356");

    // singular square system carries the pivot column
    CycloMatrix Z(2, 2, N);
    Z.set(0, 0, CycloElement::from_rational(Rational(1), N));
    Z.set(1, 0, CycloElement::from_rational(Rational(2), N));
    try {
        solve_linear_system(Z, {CycloElement(N), CycloElement(N)});
        FAIL("expected singular_system");
    } catch (const singular_system& e) {
        CHECK(e.pivot_column == 1);
    }

    // inconsistent overdetermined system names the offending row
    CycloMatrix O(3, 1, N);
    for (int r = 0; r < 3; ++r) O.set(r, 0, CycloElement::from_rational(Rational(1), N));
    std::vector<CycloElement> rhs{CycloElement::from_rational(Rational(2), N),
                                  CycloElement::from_rational(Rational(2), N),
                                  CycloElement::from_rational(Rational(3), N)};
    try {
        solve_linear_system(O, rhs);
        FAIL("expected inconsistent_system");
    } catch (const inconsistent_system& e) {
        CHECK(e.offending_row == 2);
    }

    // consistent overdetermined system verifies and solves
    rhs[2] = CycloElement::from_rational(Rational(2), N);
    auto y = solve_linear_system(O, rhs);
    CHECK(y[0] == CycloElement::from_rational(Rational(2), N));
}

TEST_CASE("random square systems round-trip") {
    std::mt19937 rng(4242);
    for (unsigned N : {4u, 8u, 12u}) {
        CycloMatrix A(3, 3, N);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) A.set(r, c, random_element(rng, N));
        std::vector<CycloElement> x{random_element(rng, N), random_element(rng, N),
                                    random_element(rng, N)};
        if (determinant(A).is_zero()) continue;
        std::vector<CycloElement> b;
        for (int r = 0; r < 3; ++r) {
            CycloElement acc(N);
            for (int c = 0; c < 3; ++c) acc = acc + A.at(r, c) * x[c];
            b.push_back(acc);
        }
        CHECK(solve_linear_system(A, b) == x);
    }
}

TEST_CASE("determinants") {
    CycloMatrix M(1, 1, trig_conductor(3));
    M.set(0, 0, trig_element(TrigKind::cosine, 1, 3));
    CHECK(determinant(M).rational_value() == make_rational(1, 2));

    // det of the 1x1 sine node matrix at modulus 3 squares to 3/4
    CycloElement d3 = determinant(trig_node_matrix(TrigKind::sine, 3, true));
    CHECK((d3 * d3).rational_value() == make_rational(3, 4));

    CHECK_FALSE(determinant(trig_node_matrix(TrigKind::cosine, 5, true)).is_zero());

    // explicitly singular
    CycloMatrix S(2, 2, 8);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) S.set(r, c, CycloElement::from_rational(Rational(1), 8));
    CHECK(determinant(S).is_zero());

    // determinant respects row count: 2x2 with swap-sensitive entries
    CycloMatrix T(2, 2, 8);
    T.set(0, 1, CycloElement::from_rational(Rational(1), 8));
    T.set(1, 0, CycloElement::from_rational(Rational(1), 8));
    CHECK(determinant(T).rational_value() == Rational(-1));
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937 rng(321);
    for (unsigned N : {4u, 8u, 12u}) {
        CycloMatrix A(3, 3, N), B(3, 3, N), AB(3, 3, N);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                A.set(r, c, random_element(rng, N));
                B.set(r, c, random_element(rng, N));
            }
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                CycloElement acc(N);
                for (int t = 0; t < 3; ++t) acc = acc + A.at(r, t) * B.at(t, c);
                AB.set(r, c, acc);
            }
        CHECK(determinant(AB) == determinant(A) * determinant(B));
    }
}

TEST_CASE("embedding") {
    CHECK(embed_decimal(CycloElement::from_rational(Rational(1), 8), 128).str(8).substr(0, 3) ==
          "1.0");

    // embedding is multiplicative within tolerance
    std::mt19937 rng(11);
    for (unsigned N : {8u, 12u, 20u}) {
        CycloElement a = random_element(rng, N);
        // build totally real elements: x + conj(x)
        CycloElement conj(N);
        for (unsigned i = 0; i < euler_totient(N); ++i)
            conj = conj + a.coeffs()[i] * CycloElement::zeta_power(N, -static_cast<long>(i));
        CycloElement re = a + conj;
        CycloElement re2 = re * re;
        BigFloat e1 = embed_decimal(re, 192);
        BigFloat e2 = embed_decimal(re2, 192);
        CHECK((e1 * e1 - e2).abs() <
              BigFloat::pow2(-160, 64) * (e2.abs() + BigFloat::from(1L, 64)));
    }

    // a visibly non-real element is rejected
    CHECK_THROWS_AS(embed_decimal(CycloElement::zeta_power(8, 1), 128), nonreal_embedding);
}

TEST_CASE("exact value of a solved 2x2 family matches the oracle") {
    // even-exponent system at modulus 5 solves both residues at once
    const SolvedFamily& fam = solve_family(SumKind::plain, 4, 5);
    PrecisionContext ctx = PrecisionContext::for_target(192);
    for (int l : {1, 2}) {
        BigFloat exact = fam.values.at(l).to_real(192);
        BigFloat oracle = numeric_eval(SumQuery{SumKind::plain, 4, 5, l}, ctx).value;
        BigFloat tol = BigFloat::from(1L, 64);
        for (int i = 0; i < 30; ++i) tol = tol / BigFloat::from(10L, 64);
        CHECK((exact - oracle).abs() < tol);
    }
}
