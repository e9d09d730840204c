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

#include "floqudit/prime_field.hpp"

#include <sstream>
#include <stdexcept>

using namespace floqudit;

bool floqudit::is_prime(uint32_t d) {
    if (d < 2) {
        return false;
    }
    for (uint32_t k = 2; k * k <= d; k++) {
        if (d % k == 0) {
            return false;
        }
    }
    return true;
}

void floqudit::validate_prime_dimension(uint32_t d) {
    if (d >= MAX_DIMENSION || !is_prime(d)) {
        std::stringstream ss;
        ss << "Qudit dimension must be a prime below " << MAX_DIMENSION << ", but got D=" << d << ".";
        throw std::invalid_argument(ss.str());
    }
}

Residue floqudit::mod_pow(Residue a, uint64_t e, uint32_t d) {
    uint64_t result = 1 % d;
    uint64_t base = a % d;
    while (e) {
        if (e & 1) {
            result = result * base % d;
        }
        base = base * base % d;
        e >>= 1;
    }
    return (Residue)result;
}

Residue floqudit::mod_inverse(Residue a, uint32_t d) {
    a %= d;
    if (a == 0) {
        std::stringstream ss;
        ss << "Zero has no inverse modulo " << d << ".";
        throw std::invalid_argument(ss.str());
    }
    // Fermat: a^(d-2) for prime d.
    return mod_pow(a, d - 2, d);
}
