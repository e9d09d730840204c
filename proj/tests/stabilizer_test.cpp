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


#include "floqudit/stabilizer.hpp"

#include <random>

#include "floqudit/dense_oracle.hpp"
#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace floqudit;

namespace {

GeneratorSet group(uint32_t d, size_t n, const std::vector<std::string> &literals) {
    std::vector<PauliOperator> gens;
    for (const auto &s : literals) {
        gens.push_back(lit(d, n, s));
    }
    return GeneratorSet(d, n, std::move(gens));
}

const std::vector<std::string> XX_ZZI{"w^0 X^1 Z^0 @ 0 * w^0 X^1 Z^0 @ 1", "w^0 X^0 Z^1 @ 0 * w^0 X^0 Z^2 @ 1"};

}  // namespace

TEST(stabilizer, generator_set_validation) {
    ASSERT_THROW(group(3, 1, {"w^0 X^1 Z^0 @ 0", "w^0 X^0 Z^1 @ 0"}), std::invalid_argument);
    ASSERT_THROW(group(3, 1, {"w^0 X^0 Z^1 @ 0", "w^1 X^0 Z^1 @ 0"}), std::invalid_argument);
    ASSERT_THROW(group(2, 1, {"w^0 X^1 Z^1 @ 0"}), std::invalid_argument);
    ASSERT_THROW(group(3, 1, {"w^1 X^0 Z^0 @ 0"}), std::invalid_argument);
    ASSERT_NO_THROW(group(3, 2, XX_ZZI));
}

TEST(stabilizer, contains_up_to_phase_examples) {
    ASSERT_EQ(contains_up_to_phase(group(3, 1, {"w^0 X^0 Z^1 @ 0"}), lit(3, 1, "w^0 X^0 Z^1 @ 0")), 0u);
    ASSERT_EQ(contains_up_to_phase(group(3, 1, {"w^-2 X^0 Z^1 @ 0"}), lit(3, 1, "w^0 X^0 Z^1 @ 0")), 2u);
    ASSERT_FALSE(contains_up_to_phase(group(3, 1, {"w^0 X^0 Z^1 @ 0"}), lit(3, 1, "w^0 X^1 Z^0 @ 0")).has_value());

    // The product of the two generators fixes the phase of X Z (x) X Z^-1.
    GeneratorSet s = group(3, 2, XX_ZZI);
    PauliOperator prod = s[0] * s[1];
    PauliOperator bare = prod.with_phase(0);
    std::optional<Residue> o = contains_up_to_phase(s, bare);
    ASSERT_TRUE(o.has_value());
    ASSERT_EQ(bare.with_phase(mod_neg(*o, 3)), prod);
    // Dense check: the operator acts as w^o on the code space.
    DenseMatrix proj = dense_codespace_projector(s);
    ASSERT_TRUE(dense_approx_equal(dense_matrix(bare) * proj, omega_power(3, *o) * proj));
}

TEST(stabilizer, measure_rule1) {
    GeneratorSet s = group(3, 1, {"w^0 X^0 Z^1 @ 0"});
    MeasurementResult r = measure(s, lit(3, 1, "w^0 X^0 Z^1 @ 0"), AllZeroOutcomes{});
    ASSERT_EQ(r.rule, UpdateRule::ALREADY_STABILIZED);
    ASSERT_EQ(r.outcome.value, 0u);
    ASSERT_TRUE(r.outcome.deterministic);
    ASSERT_TRUE(groups_equal(r.state, s));
    ASSERT_THROW(measure(s, lit(3, 1, "w^0 X^0 Z^1 @ 0"), ForcedOutcome{1}), std::invalid_argument);
}

TEST(stabilizer, measure_rule2) {
    MeasurementResult r = measure(GeneratorSet(3, 1), lit(3, 1, "w^0 X^0 Z^1 @ 0"), ForcedOutcome{2});
    ASSERT_EQ(r.rule, UpdateRule::COMMUTING);
    ASSERT_EQ(r.outcome.value, 2u);
    ASSERT_FALSE(r.outcome.deterministic);
    ASSERT_TRUE(groups_equal(r.state, group(3, 1, {"w^-2 X^0 Z^1 @ 0"})));
}

TEST(stabilizer, measure_rule3) {
    GeneratorSet s = group(3, 2, XX_ZZI);
    PauliOperator z0 = lit(3, 2, "w^0 X^0 Z^1 @ 0");
    ASSERT_EQ(commutation(z0, s[1]), 0u);
    MeasurementResult r = measure(s, z0, ForcedOutcome{0});
    ASSERT_EQ(r.rule, UpdateRule::ANTICOMMUTING);
    ASSERT_TRUE(groups_equal(r.state, group(3, 2, {"w^0 X^0 Z^1 @ 0", "w^0 X^0 Z^1 @ 0 * w^0 X^0 Z^2 @ 1"})));
    // Dense oracle: the new code space is the old one conditioned on the outcome.
    DenseMatrix before = dense_codespace_projector(s);
    DenseMatrix cond = dense_eigenprojector(z0, 0) * before * dense_eigenprojector(z0, 0);
    double prob = cond.trace().real() / before.trace().real();
    ASSERT_NEAR(prob, 1.0 / 3.0, 1e-9);
    DenseMatrix after = dense_codespace_projector(r.state);
    ASSERT_TRUE(dense_approx_equal(cond / cond.trace().real(), after / after.trace().real()));
}

TEST(stabilizer, measure_rejects_order_d2_xz) {
    ASSERT_THROW(measure(GeneratorSet(2, 1), lit(2, 1, "w^0 X^1 Z^1 @ 0"), AllZeroOutcomes{}), std::invalid_argument);
    ASSERT_THROW(measure(GeneratorSet(2, 1), lit(2, 1, "w^1 X^1 Z^1 @ 0"), AllZeroOutcomes{}), std::invalid_argument);
    ASSERT_NO_THROW(measure(GeneratorSet(2, 2), lit(2, 2, "w^0 X^1 Z^1 @ 0 * w^0 X^1 Z^1 @ 1"), AllZeroOutcomes{}));
}

TEST(stabilizer, canonical_form_examples) {
    ASSERT_EQ(rank(group(3, 1, {"w^0 X^0 Z^1 @ 0", "w^0 X^0 Z^2 @ 0"})), 1u);
    GeneratorSet a = group(3, 2, XX_ZZI);
    GeneratorSet b(3, 2, {a[1], power(a[0], 2), a[0] * a[1]});
    ASSERT_TRUE(groups_equal(a, b));
    ASSERT_EQ(canonical_form(a), canonical_form(b));
    GeneratorSet z = group(3, 1, {"w^0 X^0 Z^1 @ 0"});
    GeneratorSet wz = group(3, 1, {"w^1 X^0 Z^1 @ 0"});
    ASSERT_FALSE(groups_equal(z, wz));
    ASSERT_FALSE(dense_approx_equal(dense_codespace_projector(z), dense_codespace_projector(wz)));
}

TEST(stabilizer, codespace_dimension_examples) {
    ASSERT_EQ(codespace_dimension_oracle(GeneratorSet(3, 1)), 3u);
    ASSERT_EQ(codespace_dimension_oracle(group(3, 1, {"w^0 X^0 Z^1 @ 0"})), 1u);
    ASSERT_EQ(codespace_dimension_oracle(group(3, 2, XX_ZZI)), 1u);
    ASSERT_EQ(codespace_dimension_oracle(group(3, 2, {"w^0 X^1 Z^0 @ 0 * w^0 X^1 Z^0 @ 1"})), 3u);
}

TEST(stabilizer, canonical_form_rank_matches_codespace_dimension) {
    std::mt19937_64 rng(21);
    for (uint32_t d : {2u, 3u}) {
        for (int trial = 0; trial < 40; trial++) {
            GeneratorSet s(d, 3);
            for (int k = 0; k < 4; k++) {
                PauliOperator p = random_pauli(rng, d, 3).with_phase(0);
                if (!has_order_dividing_dimension(p)) {
                    continue;
                }
                SampledOutcomes mode{&rng};
                measure_in_place(s, p, mode);
            }
            size_t dim = 1;
            for (size_t k = 0; k < 3 - rank(s); k++) {
                dim *= d;
            }
            ASSERT_EQ(codespace_dimension_oracle(s), dim);
        }
    }
}

TEST(stabilizer, generator_set_file_round_trip) {
    GeneratorSet s = group(3, 2, XX_ZZI);
    std::string text = format_generator_set(s);
    GeneratorSet t = parse_generator_set(text);
    ASSERT_EQ(s, t);
    ASSERT_THROW(parse_generator_set("D=4 n=2\n"), std::invalid_argument);
    ASSERT_THROW(parse_generator_set("D=3 n=2\nw^0 X^1 Z^0 @ 0\nw^0 X^0 Z^1 @ 0\n"), std::invalid_argument);
}

TEST(stabilizer, uniform_residue_range) {
    std::mt19937_64 rng(1);
    std::vector<size_t> counts(5, 0);
    for (int k = 0; k < 5000; k++) {
        counts[uniform_residue(rng, 5)]++;
    }
    for (size_t c : counts) {
        ASSERT_GT(c, 800u);
        ASSERT_LT(c, 1200u);
    }
    ASSERT_EQ(uniform_residue(rng, 1), 0u);
}

TEST(stabilizer, dense_measurement_suite) {
    OracleSuiteReport report = run_measurement_oracle_suite(2, {2, 3});
    ASSERT_TRUE(report.ok()) << (report.messages.empty() ? "" : report.messages[0]);
}

TEST(stabilizer, outcome_statistics_suite) {
    OracleSuiteReport report = run_outcome_statistics_suite({2, 3, 5});
    ASSERT_TRUE(report.ok()) << (report.messages.empty() ? "" : report.messages[0]);
}

TEST(stabilizer, pauli_oracle_suite) {
    for (OracleSuiteReport report : {run_pauli_oracle_suite(2, {2, 3}), run_pauli_oracle_suite(1, {5})}) {
        ASSERT_TRUE(report.ok()) << (report.messages.empty() ? "" : report.messages[0]);
    }
}
