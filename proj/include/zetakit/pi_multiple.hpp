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

#ifndef ZETAKIT_PI_MULTIPLE_HPP
#define ZETAKIT_PI_MULTIPLE_HPP

#include <numeric>
#include <utility>

#include "zetakit/cyclo.hpp"

namespace zetakit {

/// A totally real cyclotomic number times a power of pi; the exact form of
/// every lattice-sum and zeta-combination value this library produces.
struct AlgebraicPiMultiple {
    int pi_exponent = 0;
    CycloElement coeff{1};

    AlgebraicPiMultiple() = default;
    AlgebraicPiMultiple(int exponent, CycloElement c)
        : pi_exponent(exponent), coeff(std::move(c)) {}

    static AlgebraicPiMultiple zero() { return AlgebraicPiMultiple(); }

    static AlgebraicPiMultiple rational_multiple(const Rational& q, int exponent) {
        return AlgebraicPiMultiple(exponent, CycloElement::from_rational(q, 1));
    }

    bool is_zero() const { return coeff.is_zero(); }

    friend AlgebraicPiMultiple operator*(const Rational& q, const AlgebraicPiMultiple& v) {
        return AlgebraicPiMultiple(v.pi_exponent, q * v.coeff);
    }

    friend AlgebraicPiMultiple operator-(const AlgebraicPiMultiple& v) {
        return AlgebraicPiMultiple(v.pi_exponent, -v.coeff);
    }

    /// Addition is only defined within one pi-power; zero is exponent-agnostic.
    friend AlgebraicPiMultiple operator+(const AlgebraicPiMultiple& a,
                                         const AlgebraicPiMultiple& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.pi_exponent != b.pi_exponent)
            throw internal_error("adding pi-multiples of different exponents");
        unsigned M = std::lcm(a.coeff.conductor(), b.coeff.conductor());
        return AlgebraicPiMultiple(a.pi_exponent, a.coeff.lift(M) + b.coeff.lift(M));
    }

    friend AlgebraicPiMultiple operator-(const AlgebraicPiMultiple& a,
                                         const AlgebraicPiMultiple& b) {
        return a + (-b);
    }

    /// Exact equality as algebraic numbers.
    friend bool operator==(const AlgebraicPiMultiple& a, const AlgebraicPiMultiple& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.pi_exponent == b.pi_exponent && equal_as_numbers(a.coeff, b.coeff);
    }
    friend bool operator!=(const AlgebraicPiMultiple& a, const AlgebraicPiMultiple& b) {
        return !(a == b);
    }

    BigFloat to_real(mpfr_prec_t precision) const {
        BigFloat c = embed_decimal(coeff, precision);
        BigFloat p = BigFloat::pi(precision + 32).pow_si(pi_exponent);
        return (c * p).at_precision(precision);
    }
};

/// zeta(2l) as an exact rational multiple of pi^{2l}.
inline AlgebraicPiMultiple zeta_even(unsigned l) {
    return AlgebraicPiMultiple::rational_multiple(zeta_even_coeff(l), static_cast<int>(2 * l));
}

} // namespace zetakit

#endif
