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

#ifndef ZETAKIT_RATIONAL_HPP
#define ZETAKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "zetakit/errors.hpp"

namespace zetakit {

// GMP keeps mpq_class results of arithmetic canonical (lowest terms,
// positive denominator); construction from raw parts does not, so all
// construction goes through the helpers below.
using Rational = mpq_class;
using Integer  = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw division_by_zero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// Accepts "p", "p/q" and leading '-'; arbitrary-precision digits.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw bad_query("cannot parse rational: '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw division_by_zero("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

/// "p/q", or plain "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// base^exp for integer exp; negative exp requires base != 0.
inline Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw division_by_zero("0 raised to a negative power");
    unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
    Rational r = make_rational(pow_integer(Integer(base.get_num()), e),
                               pow_integer(Integer(base.get_den()), e));
    if (exp < 0) {
        Rational inv = make_rational(Integer(r.get_den()), Integer(r.get_num()));
        return inv;
    }
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Rational abs_rational(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

} // namespace zetakit

#endif
