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

#include "gtest/gtest.h"

using namespace floqudit;

TEST(prime_field, is_prime) {
    ASSERT_FALSE(is_prime(0));
    ASSERT_FALSE(is_prime(1));
    ASSERT_TRUE(is_prime(2));
    ASSERT_TRUE(is_prime(3));
    ASSERT_FALSE(is_prime(4));
    ASSERT_TRUE(is_prime(65521));
    ASSERT_FALSE(is_prime(65535));
}

TEST(prime_field, validate_prime_dimension) {
    ASSERT_NO_THROW(validate_prime_dimension(7));
    ASSERT_THROW(validate_prime_dimension(6), std::invalid_argument);
    ASSERT_THROW(validate_prime_dimension(1), std::invalid_argument);
    ASSERT_THROW(validate_prime_dimension(MAX_DIMENSION + 1), std::invalid_argument);
}

TEST(prime_field, arithmetic) {
    ASSERT_EQ(mod_add(2, 2, 3), 1u);
    ASSERT_EQ(mod_sub(0, 1, 5), 4u);
    ASSERT_EQ(mod_neg(0, 5), 0u);
    ASSERT_EQ(mod_neg(2, 5), 3u);
    ASSERT_EQ(mod_mul(4, 4, 5), 1u);
    ASSERT_EQ(mod_reduce(-2, 3), 1u);
    ASSERT_EQ(mod_reduce(-7, 5), 3u);
    ASSERT_EQ(mod_pow(2, 10, 7), 2u);
}

TEST(prime_field, inverse_exhaustive) {
    for (uint32_t d : {2u, 3u, 5u, 7u, 11u, 13u}) {
        for (Residue a = 1; a < d; a++) {
            ASSERT_EQ(mod_mul(a, mod_inverse(a, d), d), 1u) << a << " mod " << d;
        }
        ASSERT_THROW(mod_inverse(0, d), std::invalid_argument);
    }
    ASSERT_EQ(mod_inverse(3, 5), 2u);
}
