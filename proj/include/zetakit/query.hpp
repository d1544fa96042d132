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

#ifndef ZETAKIT_QUERY_HPP
#define ZETAKIT_QUERY_HPP

#include <string>

#include "zetakit/errors.hpp"

namespace zetakit {

/// plain:       sum over all integers j of 1/(j*k+l)^n
/// alternating: same with a (-1)^j weight
enum class SumKind { plain, alternating };

inline std::string kind_name(SumKind kind) {
    return kind == SumKind::plain ? "S" : "Shat";
}

struct SumQuery {
    SumKind kind = SumKind::plain;
    int n = 2; ///< exponent, >= 2 for absolute convergence
    int k = 2; ///< modulus, >= 2
    int l = 1; ///< residue, 1 <= l <= k-1 so the denominator never vanishes

    void validate() const {
        if (n < 2) throw bad_query("exponent n must be >= 2, got " + std::to_string(n));
        if (k < 2) throw bad_query("modulus k must be >= 2, got " + std::to_string(k));
        if (l < 1 || l > k - 1)
            throw bad_query("residue l must satisfy 1 <= l <= k-1, got l=" + std::to_string(l) +
                            " for k=" + std::to_string(k));
    }

    friend bool operator==(const SumQuery& a, const SumQuery& b) {
        return a.kind == b.kind && a.n == b.n && a.k == b.k && a.l == b.l;
    }
};

} // namespace zetakit

#endif
