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

#ifndef ZETAKIT_FOURIER_HPP
#define ZETAKIT_FOURIER_HPP

#include <map>
#include <vector>

#include "zetakit/numtheory.hpp"
#include "zetakit/pi_multiple.hpp"
#include "zetakit/rational.hpp"

namespace zetakit {

enum class PolyKind { cosine, sine };

/// The two polynomial families whose full-period Fourier coefficients are
/// exactly (-1)^n / n^{2m+2} (cosine kind) and (-1)^n / n^{2m+1} (sine kind),
/// written in the scaled variable t = x/pi so that every coefficient, and
/// every value at rational t, is exactly rational.
///
/// cosine kind: degree 2m+2, even, zero constant and linear terms.
/// sine kind:   degree 2m+1, odd polynomial.
struct NormalizedPolynomial {
    PolyKind kind = PolyKind::cosine;
    unsigned m = 0;
    std::vector<Rational> coeffs; ///< index = power of t

    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

namespace detail {

/// 2^{2j-1} - 1 as an exact rational (equals -1/2 at j = 0).
inline Rational half_power_factor(unsigned j) {
    if (j == 0) return make_rational(-1, 2);
    return Rational(pow_integer(Integer(2), 2 * j - 1) - 1);
}

} // namespace detail

inline NormalizedPolynomial cosine_poly(unsigned m) {
    NormalizedPolynomial p;
    p.kind = PolyKind::cosine;
    p.m = m;
    p.coeffs.assign(2 * m + 3, Rational(0));
    Rational front = make_rational(Integer((m % 2 == 0) ? -1 : 1), factorial(2 * m + 2));
    for (unsigned j = 0; j <= m; ++j) {
        Rational term = Rational(binomial(2 * m + 2, 2 * j)) * bernoulli(2 * j) *
                        detail::half_power_factor(j);
        p.coeffs[2 * (m - j) + 2] = front * term;
    }
    return p;
}

inline NormalizedPolynomial sine_poly(unsigned m) {
    NormalizedPolynomial p;
    p.kind = PolyKind::sine;
    p.m = m;
    p.coeffs.assign(2 * m + 2, Rational(0));
    Rational front = make_rational(Integer((m % 2 == 0) ? 1 : -1), factorial(2 * m + 1));
    for (unsigned j = 0; j <= m; ++j) {
        Rational term = Rational(binomial(2 * m + 1, 2 * j)) * bernoulli(2 * j) *
                        detail::half_power_factor(j);
        p.coeffs[2 * (m - j) + 1] = front * term;
    }
    return p;
}

/// Exact Horner evaluation at rational t.
inline Rational eval_normalized(const NormalizedPolynomial& p, const Rational& t) {
    Rational acc(0);
    for (std::size_t i = p.coeffs.size(); i-- > 0;) acc = acc * t + p.coeffs[i];
    return acc;
}

/// Finitely supported exact map from even pi-exponents to rationals;
/// the value it denotes is sum of coeff * pi^exponent.
class PiPolynomial {
  public:
    PiPolynomial() = default;

    static PiPolynomial constant(const Rational& q) {
        PiPolynomial p;
        p.add_term(0, q);
        return p;
    }

    void add_term(long exponent, const Rational& q) {
        if (q == 0) return;
        if (exponent < 0 || exponent % 2 != 0)
            throw internal_error("pi-polynomial exponents must be even and non-negative");
        Rational& slot = terms_[exponent];
        slot += q;
        if (slot == 0) terms_.erase(exponent);
    }

    Rational coefficient(long exponent) const {
        auto it = terms_.find(exponent);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    PiPolynomial& operator+=(const PiPolynomial& o) {
        for (const auto& [e, q] : o.terms_) add_term(e, q);
        return *this;
    }

    friend PiPolynomial operator*(const Rational& q, const PiPolynomial& p) {
        PiPolynomial r;
        if (q == 0) return r;
        for (const auto& [e, c] : p.terms_) r.terms_[e] = q * c;
        return r;
    }

    /// Multiply by pi^shift (shift even, may not drive exponents negative).
    PiPolynomial shifted(long shift) const {
        PiPolynomial r;
        for (const auto& [e, c] : terms_) r.add_term(e + shift, c);
        return r;
    }

    const std::map<long, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const PiPolynomial& a, const PiPolynomial& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<long, Rational> terms_;
};

/// Exact value of (1/pi) * integral over [-pi,pi] of x^power * trig(n x) dx,
/// by the two-term integration-by-parts recursions. The sine transform needs
/// an odd power, the cosine transform an even power; n >= 1.
inline PiPolynomial monomial_fourier(TrigKind kind, unsigned power, unsigned n) {
    if (n == 0) throw bad_query("monomial_fourier needs n >= 1");
    Rational inv_n2 = make_rational(1, static_cast<long>(n) * static_cast<long>(n));
    int sgn_n = (n % 2 == 0) ? 1 : -1; // (-1)^n
    if (kind == TrigKind::sine) {
        if (power % 2 != 1) throw bad_query("sine transform needs an odd power");
        unsigned m = (power - 1) / 2;
        // b_0 = 2(-1)^{n+1}/n; b_r = 2(-1)^{n+1} pi^{2r}/n - (2r+1)(2r) b_{r-1}/n^2
        PiPolynomial b;
        b.add_term(0, make_rational(-2 * sgn_n, static_cast<long>(n)));
        for (unsigned r = 1; r <= m; ++r) {
            PiPolynomial next;
            next.add_term(2 * static_cast<long>(r), make_rational(-2 * sgn_n, static_cast<long>(n)));
            Rational f = Rational(static_cast<long>(2 * r + 1) * static_cast<long>(2 * r)) * inv_n2;
            next += Rational(-f) * b;
            b = next;
        }
        return b;
    }
    if (power % 2 != 0) throw bad_query("cosine transform needs an even power");
    unsigned m = power / 2;
    // a_0 = 0; a_r = (-1)^n (4r/n^2) pi^{2r-2} - 2r(2r-1) a_{r-1}/n^2
    PiPolynomial a;
    for (unsigned r = 1; r <= m; ++r) {
        PiPolynomial next;
        next.add_term(2 * static_cast<long>(r) - 2,
                      Rational(sgn_n) * Rational(4 * static_cast<long>(r)) * inv_n2);
        Rational f = Rational(static_cast<long>(2 * r) * static_cast<long>(2 * r - 1)) * inv_n2;
        next += Rational(-f) * a;
        a = next;
    }
    return a;
}

/// n-th Fourier coefficient of the de-normalized polynomial, assembled by
/// linearity over the exact monomial transforms. Every positive pi-power
/// must cancel exactly; the surviving rational is returned. This is the
/// quadrature-free route to the coefficient law the families satisfy.
inline Rational exact_fourier_coefficient(const NormalizedPolynomial& p, unsigned n) {
    if (n == 0) throw bad_query("exact_fourier_coefficient needs n >= 1");
    const long normalization =
        static_cast<long>(p.kind == PolyKind::cosine ? 2 * p.m + 2 : 2 * p.m + 1);
    TrigKind trig = (p.kind == PolyKind::cosine) ? TrigKind::cosine : TrigKind::sine;
    PiPolynomial total;
    for (std::size_t d = 0; d < p.coeffs.size(); ++d) {
        if (p.coeffs[d] == 0) continue;
        PiPolynomial part = monomial_fourier(trig, static_cast<unsigned>(d), n);
        total += p.coeffs[d] * part.shifted(normalization - static_cast<long>(d));
    }
    for (const auto& [e, c] : total.terms())
        if (e != 0)
            throw internal_error("pi powers failed to cancel in exact Fourier coefficient");
    return total.coefficient(0);
}

/// Mean value (1/pi) integral over [-pi,pi] of the de-normalized cosine-kind
/// polynomial: an exact rational multiple of pi^{2m+2}.
inline AlgebraicPiMultiple cosine_poly_mean(unsigned m) {
    Rational r = bernoulli(2 * m + 2) * Rational(2) *
                 Rational(pow_integer(Integer(2), 2 * m + 1) - 1);
    r /= Rational(factorial(2 * m + 2));
    if (m % 2 == 1) r = -r;
    // the same value through the even zeta values; kept as a live cross-check
    Rational via_zeta = Rational(2) * zeta_even_coeff(m + 1) *
                        (Rational(1) - pow_rational(make_rational(1, 2), 2 * m + 1));
    if (r != via_zeta)
        throw internal_error("cosine family mean disagrees with its zeta form");
    return AlgebraicPiMultiple::rational_multiple(r, static_cast<int>(2 * m + 2));
}

enum class DirichletKind { cosine, sine };

/// Closed form of the alternating Dirichlet series
///   sum_{j>=1} (-1)^j cos(j*pi*t)/j^s   (cosine kind, even s >= 2)
///   sum_{j>=1} (-1)^j sin(j*pi*t)/j^s   (sine kind, odd s >= 3)
/// for |t| <= 1, as an exact rational multiple of pi^s. Other orders have no
/// elementary closed form of this shape and are rejected.
inline AlgebraicPiMultiple dirichlet_closed_form(DirichletKind kind, int order,
                                                 const Rational& t) {
    if (abs_rational(t) > 1) throw bad_query("dirichlet_closed_form needs |t| <= 1");
    if (kind == DirichletKind::cosine) {
        if (order < 2 || order % 2 != 0)
            throw bad_query("cosine-kind closed form exists only for even order >= 2; "
                            "other orders are an open problem");
        unsigned m = static_cast<unsigned>((order - 2) / 2);
        Rational value = eval_normalized(cosine_poly(m), t);
        Rational shift = bernoulli(2 * m + 2) *
                         Rational(pow_integer(Integer(2), 2 * m + 1) - 1) /
                         Rational(factorial(2 * m + 2));
        if (m % 2 == 0) shift = -shift; // (-1)^{m+1}
        return AlgebraicPiMultiple::rational_multiple(value + shift, order);
    }
    if (order < 3 || order % 2 != 1)
        throw bad_query("sine-kind closed form exists only for odd order >= 3; "
                        "other orders are an open problem");
    unsigned m_plus_1 = static_cast<unsigned>((order - 1) / 2);
    Rational value = eval_normalized(sine_poly(m_plus_1), t);
    return AlgebraicPiMultiple::rational_multiple(value, order);
}

} // namespace zetakit

#endif
