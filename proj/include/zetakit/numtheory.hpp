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

#ifndef ZETAKIT_NUMTHEORY_HPP
#define ZETAKIT_NUMTHEORY_HPP

#include <functional>
#include <map>
#include <mutex>
#include <vector>

#include "zetakit/rational.hpp"

namespace zetakit {

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k); // 0 when k > n
    return r;
}

namespace detail {

// Akiyama-Tanigawa tableau; one run of `upto` sweeps yields B_0..B_upto.
// This scheme produces the B_1 = +1/2 sign convention, which is the one
// assumed by every formula in this library; only even indices ever feed
// the lattice-sum formulas, so the convention is visible in B_1 alone.
inline std::vector<Rational> bernoulli_table(std::size_t upto) {
    std::vector<Rational> table(upto + 1);
    std::vector<Rational> row(upto + 1);
    for (std::size_t j = 0; j <= upto; ++j)
        row[j] = make_rational(1, static_cast<long>(j) + 1);
    table[0] = row[0];
    for (std::size_t m = 1; m <= upto; ++m) {
        for (std::size_t j = 0; j + m <= upto; ++j)
            row[j] = Rational(static_cast<long>(j) + 1) * (row[j] - row[j + 1]);
        table[m] = row[0];
    }
    return table;
}

inline std::mutex& numtheory_mutex() {
    static std::mutex m;
    return m;
}

} // namespace detail

/// k-th Bernoulli number with B_1 = +1/2. Memoized; thread-safe.
inline Rational bernoulli(unsigned k) {
    std::lock_guard<std::mutex> lock(detail::numtheory_mutex());
    static std::vector<Rational> cache;
    if (k >= cache.size()) cache = detail::bernoulli_table(k + 16);
    return cache[k];
}

/// k-th Euler number (Taylor coefficients of sech); k must be even.
/// Computed as the exact power-series reciprocal of cosh.
inline Integer euler_number(unsigned k) {
    if (k % 2 != 0) throw bad_query("odd-index Euler number not used by this artifact");
    std::lock_guard<std::mutex> lock(detail::numtheory_mutex());
    static std::vector<Integer> cache; // cache[t] = E_{2t}
    unsigned t = k / 2;
    if (t >= cache.size()) {
        std::size_t upto = t + 8;
        // cosh x = sum x^{2i}/(2i)!; e = 1/cosh as a series in x^2
        std::vector<Rational> e(upto + 1);
        e[0] = Rational(1);
        for (std::size_t s = 1; s <= upto; ++s) {
            Rational acc(0);
            for (std::size_t i = 1; i <= s; ++i)
                acc += make_rational(Integer(1), factorial(2 * i)) * e[s - i];
            e[s] = -acc;
        }
        cache.resize(upto + 1);
        for (std::size_t s = 0; s <= upto; ++s) {
            Rational v = e[s] * Rational(factorial(2 * s));
            if (v.get_den() != 1)
                throw internal_error("Euler number reciprocal-series produced a non-integer");
            cache[s] = v.get_num();
        }
    }
    return cache[t];
}

namespace detail {

// Exact division of integer polynomials, remainder must vanish.
inline std::vector<Integer> poly_exact_div(const std::vector<Integer>& num,
                                           const std::vector<Integer>& den) {
    if (den.empty() || den.back() == 0)
        throw internal_error("polynomial division by zero polynomial");
    if (num.size() < den.size())
        throw internal_error("polynomial division with smaller numerator");
    std::vector<Integer> rem = num;
    std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
    const std::size_t dd = den.size() - 1;
    const Integer& lead = den.back();
    for (std::size_t sh = quot.size(); sh-- > 0;) {
        if (rem[sh + dd] == 0) continue;
        if (!mpz_divisible_p(rem[sh + dd].get_mpz_t(), lead.get_mpz_t()))
            throw internal_error("inexact polynomial division");
        Integer c = rem[sh + dd] / lead;
        quot[sh] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[sh + j] -= c * den[j];
    }
    for (const Integer& c : rem)
        if (c != 0) throw internal_error("nonzero remainder in exact polynomial division");
    return quot;
}

} // namespace detail

/// Integer coefficients of the N-th cyclotomic polynomial, low degree first.
/// Obtained by dividing x^N - 1 by every proper-divisor cyclotomic.
inline const std::vector<Integer>& cyclotomic_polynomial(unsigned N) {
    if (N == 0) throw bad_query("cyclotomic polynomial needs N >= 1");
    std::lock_guard<std::mutex> lock(detail::numtheory_mutex());
    static std::map<unsigned, std::vector<Integer>> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    // Resolve proper divisors bottom-up so the recursion stays iterative.
    std::function<const std::vector<Integer>&(unsigned)> get =
        [&](unsigned n) -> const std::vector<Integer>& {
        auto hit = cache.find(n);
        if (hit != cache.end()) return hit->second;
        std::vector<Integer> p(n + 1, Integer(0));
        p[0] = -1;
        p[n] = 1;
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) p = detail::poly_exact_div(p, get(d));
        return cache.emplace(n, std::move(p)).first->second;
    };
    return get(N);
}

/// phi(N), read off as the degree of the N-th cyclotomic polynomial.
inline unsigned euler_totient(unsigned N) {
    return static_cast<unsigned>(cyclotomic_polynomial(N).size() - 1);
}

/// Rational r with zeta(2l) = r * pi^{2l}.
inline Rational zeta_even_coeff(unsigned l) {
    if (l == 0) throw bad_query("zeta_even needs l >= 1");
    int sign = (l % 2 == 0) ? -1 : 1; // (-1)^{l+1}
    Rational r = bernoulli(2 * l) * Rational(pow_integer(Integer(2), 2 * l));
    r /= Rational(2) * Rational(factorial(2 * l));
    return sign > 0 ? r : Rational(-r);
}

} // namespace zetakit

#endif
