/*
   Copyright 2026 The hopfglue authors

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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hopfglue {

// Exact rationals. mpq_class keeps values canonical (reduced, positive denominator)
// after every arithmetic operation.
using Scalar = mpq_class;

// Accepts "n", "-n", "p/q". Throws Error(schema) on malformed text or zero denominator.
Scalar parse_scalar(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Scalar& x);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace hopfglue
