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

#ifndef ZETAKIT_BIGFLOAT_HPP
#define ZETAKIT_BIGFLOAT_HPP

#include <mpfr.h>

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "zetakit/rational.hpp"

namespace zetakit {

/// Thin RAII wrapper around mpfr_t with round-to-nearest everywhere.
/// Binary operations produce a result at the larger operand precision.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    static BigFloat from(const Integer& z, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
        return r;
    }

    static BigFloat from(long n, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, n, MPFR_RNDN);
        return r;
    }

    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    /// 2^e exactly.
    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.v_, 1, MPFR_RNDN);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) {
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& o) {
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& o) {
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(const BigFloat& o) {
        mpfr_div(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat ldexp(long e) const {
        BigFloat r(precision());
        mpfr_mul_2si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    /// x^e for any machine-integer exponent (x != 0 when e < 0).
    BigFloat pow_si(long e) const {
        BigFloat r(precision());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }

    BigFloat cos() const {
        BigFloat r(precision());
        mpfr_cos(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sin() const {
        BigFloat r(precision());
        mpfr_sin(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(precision());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }

    /// Rounded copy at a different precision.
    BigFloat at_precision(mpfr_prec_t prec) const {
        BigFloat r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    /// Scientific-notation decimal string with the given significant digits.
    std::string str(int digits) const {
        if (digits < 1) digits = 1;
        std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
        mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
        return std::string(buf.data());
    }

  private:
    static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
        return a.precision() > b.precision() ? a.precision() : b.precision();
    }

    mpfr_t v_;
};

} // namespace zetakit

#endif
