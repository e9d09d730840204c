// Copyright 2026 floqudit Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLOQUDIT_PRIME_FIELD_HPP
#define FLOQUDIT_PRIME_FIELD_HPP

#include <cstdint>

namespace floqudit {

/// A residue in [D] = {0, ..., D-1}. The dimension D is carried by context.
using Residue = uint32_t;

/// Largest supported qudit dimension (exclusive).
constexpr uint32_t MAX_DIMENSION = 1u << 16;

/// Trial-division primality test.
bool is_prime(uint32_t d);

/// Throws std::invalid_argument unless d is a prime below MAX_DIMENSION.
void validate_prime_dimension(uint32_t d);

inline Residue mod_add(Residue a, Residue b, uint32_t d) {
    Residue s = a + b;
    return s >= d ? s - d : s;
}

inline Residue mod_sub(Residue a, Residue b, uint32_t d) {
    return a >= b ? a - b : a + d - b;
}

inline Residue mod_neg(Residue a, uint32_t d) {
    return a == 0 ? 0 : d - a;
}

inline Residue mod_mul(Residue a, Residue b, uint32_t d) {
    return (Residue)(((uint64_t)a * b) % d);
}

/// Reduces an arbitrary signed integer into [d].
inline Residue mod_reduce(int64_t v, uint32_t d) {
    int64_t r = v % (int64_t)d;
    return (Residue)(r < 0 ? r + d : r);
}

Residue mod_pow(Residue a, uint64_t e, uint32_t d);

/// Multiplicative inverse modulo the prime d. Throws std::invalid_argument for a = 0.
Residue mod_inverse(Residue a, uint32_t d);

}  // namespace floqudit

#endif
