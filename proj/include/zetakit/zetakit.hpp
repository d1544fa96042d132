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

#ifndef ZETAKIT_ZETAKIT_HPP
#define ZETAKIT_ZETAKIT_HPP

#include "zetakit/bigfloat.hpp"
#include "zetakit/cyclo.hpp"
#include "zetakit/errors.hpp"
#include "zetakit/fourier.hpp"
#include "zetakit/numerics.hpp"
#include "zetakit/numtheory.hpp"
#include "zetakit/pi_multiple.hpp"
#include "zetakit/query.hpp"
#include "zetakit/rational.hpp"
#include "zetakit/solver.hpp"

#endif
