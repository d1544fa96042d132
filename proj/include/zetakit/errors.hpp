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

#ifndef ZETAKIT_ERRORS_HPP
#define ZETAKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetakit {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A query or argument violates a documented precondition.
class bad_query : public error {
  public:
    using error::error;
};

/// Two field elements with different conductors met without a lift.
class conductor_mismatch : public error {
  public:
    conductor_mismatch(unsigned lhs, unsigned rhs)
        : error("conductor mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
          lhs_conductor(lhs), rhs_conductor(rhs) {}
    unsigned lhs_conductor;
    unsigned rhs_conductor;
};

class division_by_zero : public error {
  public:
    using error::error;
};

/// Exact elimination found no nonzero pivot in some column.
class singular_system : public error {
  public:
    explicit singular_system(std::size_t column)
        : error("singular system: no nonzero pivot in column " + std::to_string(column)),
          pivot_column(column) {}
    std::size_t pivot_column;
};

/// An overdetermined system failed exact verification of a leftover row.
class inconsistent_system : public error {
  public:
    explicit inconsistent_system(std::size_t row)
        : error("inconsistent system: row " + std::to_string(row) +
                " has a nonzero exact residual"),
          offending_row(row) {}
    std::size_t offending_row;
};

/// A supposedly real element embedded with a non-negligible imaginary part.
class nonreal_embedding : public error {
  public:
    using error::error;
};

/// A condition that valid inputs can never trigger; indicates a bug.
class internal_error : public error {
  public:
    using error::error;
};

} // namespace zetakit

#endif
