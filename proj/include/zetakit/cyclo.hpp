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

#ifndef ZETAKIT_CYCLO_HPP
#define ZETAKIT_CYCLO_HPP

#include <cstddef>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "zetakit/bigfloat.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/numtheory.hpp"
#include "zetakit/rational.hpp"

namespace zetakit {

namespace detail {

// In-place reduction of a rational polynomial modulo the (monic) N-th
// cyclotomic polynomial; the result is truncated to degree < phi(N).
inline void reduce_mod_cyclotomic(std::vector<Rational>& p, unsigned N) {
    const std::vector<Integer>& phi = cyclotomic_polynomial(N);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        if (p[i] == 0) continue;
        Rational c = p[i];
        p[i] = 0;
        for (std::size_t t = 0; t < deg; ++t)
            p[i - deg + t] -= c * Rational(phi[t]);
    }
    p.resize(deg);
}

inline std::size_t poly_degree(const std::vector<Rational>& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d; // 0 means the zero polynomial; otherwise degree + 1
}

// Quotient of rational polynomial division; `num` becomes the remainder.
inline std::vector<Rational> poly_divmod(std::vector<Rational>& num,
                                         const std::vector<Rational>& den) {
    std::size_t dn = poly_degree(num), dd = poly_degree(den);
    if (dd == 0) throw division_by_zero("polynomial division by zero");
    if (dn < dd) return {};
    std::vector<Rational> quot(dn - dd + 1);
    const Rational& lead = den[dd - 1];
    for (std::size_t sh = quot.size(); sh-- > 0;) {
        Rational c = num[sh + dd - 1] / lead;
        quot[sh] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < dd; ++j)
            num[sh + j] -= c * den[j];
    }
    return quot;
}

} // namespace detail

/// Element of Q(zeta_N), stored as a rational coefficient vector of length
/// phi(N) reduced modulo the N-th cyclotomic polynomial. The reduced vector
/// is a canonical form, so equality of vectors is equality of numbers.
class CycloElement {
  public:
    explicit CycloElement(unsigned conductor = 1)
        : conductor_(check(conductor)), coeffs_(euler_totient(conductor_)) {}

    static CycloElement from_rational(const Rational& q, unsigned conductor) {
        CycloElement e(conductor);
        e.coeffs_[0] = q;
        return e;
    }

    /// zeta_N^e for any integer exponent, reduced to canonical form.
    static CycloElement zeta_power(unsigned conductor, long e) {
        CycloElement r(conductor);
        long N = static_cast<long>(conductor);
        long red = ((e % N) + N) % N;
        std::vector<Rational> raw(static_cast<std::size_t>(red) + 1);
        raw[static_cast<std::size_t>(red)] = 1;
        detail::reduce_mod_cyclotomic(raw, conductor);
        r.coeffs_ = std::move(raw);
        return r;
    }

    unsigned conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const Rational& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }

    Rational rational_value() const {
        if (!is_rational()) throw bad_query("element is not rational");
        return coeffs_[0];
    }

    friend CycloElement operator+(const CycloElement& a, const CycloElement& b) {
        a.expect_same(b);
        CycloElement r(a.conductor_);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return r;
    }

    friend CycloElement operator-(const CycloElement& a, const CycloElement& b) {
        a.expect_same(b);
        CycloElement r(a.conductor_);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return r;
    }

    friend CycloElement operator-(const CycloElement& a) {
        CycloElement r(a.conductor_);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] = -a.coeffs_[i];
        return r;
    }

    friend CycloElement operator*(const CycloElement& a, const CycloElement& b) {
        a.expect_same(b);
        std::vector<Rational> prod(2 * a.coeffs_.size());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        detail::reduce_mod_cyclotomic(prod, a.conductor_);
        CycloElement r(a.conductor_);
        r.coeffs_ = std::move(prod);
        return r;
    }

    friend CycloElement operator*(const Rational& q, const CycloElement& a) {
        CycloElement r(a.conductor_);
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
            r.coeffs_[i] = q * a.coeffs_[i];
        return r;
    }

    friend CycloElement operator*(const CycloElement& a, const Rational& q) { return q * a; }

    /// Multiplicative inverse via extended gcd with the cyclotomic modulus.
    CycloElement inverse() const {
        if (is_zero()) throw division_by_zero("inverse of zero field element");
        const std::vector<Integer>& phi_int = cyclotomic_polynomial(conductor_);
        std::vector<Rational> r0(phi_int.size());
        for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rational(phi_int[i]);
        std::vector<Rational> r1 = coeffs_;
        std::vector<Rational> s0{Rational(0)};
        std::vector<Rational> s1{Rational(1)};
        while (detail::poly_degree(r1) != 0) {
            std::vector<Rational> q = detail::poly_divmod(r0, r1);
            std::swap(r0, r1); // r0 now old remainder
            // s0, s1 <- s1, s0 - q*s1
            std::size_t qs = detail::poly_degree(q);
            std::vector<Rational> t(std::max(s0.size(), qs + s1.size()));
            for (std::size_t i = 0; i < s0.size(); ++i) t[i] = s0[i];
            for (std::size_t i = 0; i < qs; ++i) {
                if (q[i] == 0) continue;
                for (std::size_t j = 0; j < s1.size(); ++j) t[i + j] -= q[i] * s1[j];
            }
            s0 = std::move(s1);
            s1 = std::move(t);
        }
        // r0 is a nonzero constant: cyclotomics are irreducible over Q
        if (detail::poly_degree(r0) != 1)
            throw internal_error("gcd with cyclotomic polynomial is not a unit");
        Rational unit = r0[0];
        std::vector<Rational> inv = std::move(s0);
        for (Rational& c : inv) c /= unit;
        detail::reduce_mod_cyclotomic(inv, conductor_);
        CycloElement out(conductor_);
        out.coeffs_ = std::move(inv);
        return out;
    }

    /// Same number re-expressed in Q(zeta_M); requires conductor | M.
    CycloElement lift(unsigned M) const {
        if (M % conductor_ != 0)
            throw bad_query("lift target " + std::to_string(M) +
                            " is not a multiple of conductor " + std::to_string(conductor_));
        if (M == conductor_) return *this;
        unsigned d = M / conductor_;
        std::vector<Rational> raw((coeffs_.size() - 1) * d + 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * d] = coeffs_[i];
        detail::reduce_mod_cyclotomic(raw, M);
        CycloElement r(M);
        r.coeffs_ = std::move(raw);
        return r;
    }

    friend bool operator==(const CycloElement& a, const CycloElement& b) {
        return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycloElement& a, const CycloElement& b) { return !(a == b); }

  private:
    static unsigned check(unsigned N) {
        if (N == 0) throw bad_query("conductor must be positive");
        return N;
    }

    void expect_same(const CycloElement& o) const {
        if (conductor_ != o.conductor_) throw conductor_mismatch(conductor_, o.conductor_);
    }

    unsigned conductor_;
    std::vector<Rational> coeffs_;
};

/// Equality as abstract numbers: both sides are lifted to the lcm conductor.
inline bool equal_as_numbers(const CycloElement& a, const CycloElement& b) {
    unsigned M = std::lcm(a.conductor(), b.conductor());
    return a.lift(M) == b.lift(M);
}

enum class TrigKind { cosine, sine };

/// Conductor in which both cos(j*pi/k) and sin(j*pi/k) are representable:
/// lcm(2k, 4), the 4 providing the imaginary unit the sine needs.
inline unsigned trig_conductor(unsigned k) {
    return std::lcm(2 * k, 4u);
}

/// Exact cos(j*pi/k) or sin(j*pi/k) as an element of Q(zeta_{lcm(2k,4)}).
/// cos = (z^e + z^-e)/2 and sin = (z^e - z^-e) * (-zeta_4/2) for z^e the
/// matching root of unity; both are fixed by conjugation, hence totally real.
inline CycloElement trig_element(TrigKind kind, long j, unsigned k) {
    if (k == 0) throw bad_query("trig_element needs k >= 1");
    unsigned L = trig_conductor(k);
    long step = static_cast<long>(L / (2 * k));
    long e = j * step; // zeta_L^(j*L/2k) = exp(i j pi / k)
    CycloElement zp = CycloElement::zeta_power(L, e);
    CycloElement zm = CycloElement::zeta_power(L, -e);
    if (kind == TrigKind::cosine) return make_rational(1, 2) * (zp + zm);
    CycloElement half_over_i =
        make_rational(-1, 2) * CycloElement::zeta_power(L, static_cast<long>(L / 4));
    return (zp - zm) * half_over_i;
}

/// Dense matrix over one cyclotomic field.
class CycloMatrix {
  public:
    CycloMatrix(std::size_t rows, std::size_t cols, unsigned conductor)
        : rows_(rows), cols_(cols), conductor_(conductor),
          entries_(rows * cols, CycloElement(conductor)) {
        if (rows == 0 || cols == 0) throw bad_query("matrix dimensions must be positive");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned conductor() const { return conductor_; }

    const CycloElement& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    void set(std::size_t r, std::size_t c, CycloElement e) {
        if (e.conductor() != conductor_) throw conductor_mismatch(conductor_, e.conductor());
        entries_[r * cols_ + c] = std::move(e);
    }

  private:
    std::size_t rows_, cols_;
    unsigned conductor_;
    std::vector<CycloElement> entries_;
};

namespace detail {

// Fraction-free (Bareiss) elimination on an augmented matrix with nonzero
// pivot search. Exactness makes magnitude pivoting pointless; Bareiss keeps
// coefficient growth down, which is the actual enemy.
struct Elimination {
    std::vector<std::vector<CycloElement>> m; // row-major, width = cols (+augment)
    std::vector<std::size_t> pivot_rows;      // step t -> row index
    std::vector<std::size_t> leftover_rows;
    int swap_sign = 1;
    CycloElement last_pivot;

    Elimination() : last_pivot(1) {}
};

inline Elimination eliminate(const CycloMatrix& A, const std::vector<CycloElement>* rhs) {
    const std::size_t rows = A.rows(), cols = A.cols();
    const unsigned N = A.conductor();
    const std::size_t width = cols + (rhs ? 1 : 0);
    Elimination el;
    el.m.assign(rows, std::vector<CycloElement>(width, CycloElement(N)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) el.m[r][c] = A.at(r, c);
        if (rhs) {
            if ((*rhs)[r].conductor() != N) throw conductor_mismatch(N, (*rhs)[r].conductor());
            el.m[r][cols] = (*rhs)[r];
        }
    }

    std::vector<bool> used(rows, false);
    CycloElement prev = CycloElement::from_rational(Rational(1), N);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pr = rows;
        for (std::size_t r = 0; r < rows; ++r)
            if (!used[r] && !el.m[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr == rows) throw singular_system(col);
        used[pr] = true;
        el.pivot_rows.push_back(pr);
        // parity of the final permutation is accumulated at the end
        const CycloElement piv = el.m[pr][col];
        const CycloElement prev_inv = prev.inverse();
        for (std::size_t r = 0; r < rows; ++r) {
            if (used[r]) continue;
            const CycloElement factor = el.m[r][col];
            for (std::size_t j = col + 1; j < width; ++j)
                el.m[r][j] = (piv * el.m[r][j] - factor * el.m[pr][j]) * prev_inv;
            el.m[r][col] = CycloElement(N);
        }
        prev = piv;
    }
    el.last_pivot = prev;
    for (std::size_t r = 0; r < rows; ++r)
        if (!used[r]) el.leftover_rows.push_back(r);

    // permutation parity of pivot_rows extended by the leftover rows
    std::vector<std::size_t> perm = el.pivot_rows;
    perm.insert(perm.end(), el.leftover_rows.begin(), el.leftover_rows.end());
    std::vector<bool> seen(rows, false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    el.swap_sign = sign;
    return el;
}

} // namespace detail

/// Exact solve of A x = b with rows >= cols. Overdetermined consistent
/// systems are solved on the pivot rows and every leftover row is verified
/// exactly; any exact residual mismatch raises inconsistent_system.
inline std::vector<CycloElement> solve_linear_system(const CycloMatrix& A,
                                                     const std::vector<CycloElement>& b) {
    if (b.size() != A.rows()) throw bad_query("right-hand side size does not match rows");
    if (A.rows() < A.cols()) throw bad_query("underdetermined system");
    const std::size_t cols = A.cols();
    detail::Elimination el = detail::eliminate(A, &b);

    for (std::size_t r : el.leftover_rows)
        if (!el.m[r][cols].is_zero()) throw inconsistent_system(r);

    std::vector<CycloElement> x(cols, CycloElement(A.conductor()));
    for (std::size_t t = cols; t-- > 0;) {
        const std::vector<CycloElement>& row = el.m[el.pivot_rows[t]];
        CycloElement acc = row[cols];
        for (std::size_t j = t + 1; j < cols; ++j) acc = acc - row[j] * x[j];
        x[t] = acc * row[t].inverse();
    }
    return x;
}

/// Exact determinant via fraction-free elimination; zero when singular.
inline CycloElement determinant(const CycloMatrix& A) {
    if (A.rows() != A.cols()) throw bad_query("determinant of a non-square matrix");
    try {
        detail::Elimination el = detail::eliminate(A, nullptr);
        Rational s(el.swap_sign);
        return s * el.last_pivot;
    } catch (const singular_system&) {
        return CycloElement(A.conductor());
    }
}

/// Numerical embedding at zeta_N -> exp(2*pi*i/N). Requires a totally real
/// element; a residual imaginary part above 2^-precision signals a bug
/// upstream and raises nonreal_embedding. Absolute error <= 2^-precision.
inline BigFloat embed_decimal(const CycloElement& a, mpfr_prec_t precision) {
    const std::vector<Rational>& cs = a.coeffs();
    // coarse magnitude of the coefficients to size the working precision
    long max_exp = 0;
    for (const Rational& c : cs) {
        if (c == 0) continue;
        BigFloat m = BigFloat::from(c, 64).abs();
        long e = mpfr_get_exp(m.raw());
        if (e > max_exp) max_exp = e;
    }
    const mpfr_prec_t wp = precision + 64 + max_exp +
                           static_cast<mpfr_prec_t>(8 * sizeof(unsigned) -
                                                    __builtin_clz(a.conductor() + 1));
    BigFloat re(wp), im(wp);
    BigFloat two_pi = BigFloat::pi(wp).ldexp(1);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (cs[i] == 0) continue;
        BigFloat angle = two_pi * BigFloat::from(static_cast<long>(i), wp) /
                         BigFloat::from(static_cast<long>(a.conductor()), wp);
        BigFloat c = BigFloat::from(cs[i], wp);
        re += c * angle.cos();
        im += c * angle.sin();
    }
    BigFloat tol = BigFloat::pow2(-static_cast<long>(precision), 64);
    BigFloat scale = re.abs();
    if (scale < BigFloat::from(1L, 64)) scale = BigFloat::from(1L, 64);
    if (im.abs() > tol * scale)
        throw nonreal_embedding("imaginary part " + im.str(8) + " beyond tolerance");
    return re.at_precision(precision + 32);
}

} // namespace zetakit

#endif
