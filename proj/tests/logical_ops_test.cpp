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


#include "floqudit/logical_ops.hpp"

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace floqudit;

TEST(logical_ops, torus_loop_operators_are_logical) {
    ColoredLattice lat = build_torus_honeycomb(6, 8);
    for (uint32_t d : {3u, 5u}) {
        CheckAssignment checks = circle_square_checks(lat, d);
        IsgTrace trace = run_schedule(lat, checks, 10);
        for (size_t r = 4; r < 10; r++) {
            std::vector<LoopOperator> ops = loop_operators(lat, checks, r);
            ASSERT_EQ(ops.size(), 4u);
            for (const LoopOperator &op : ops) {
                ASSERT_TRUE(verify_logical(trace.at(r).isg, op.op)) << op.loop_name << " " << r;
                ASSERT_EQ(op.round_color, round_color(r));
                ASSERT_EQ(op.support_edges.size(), op.exponents.size());
                for (Residue e : op.exponents) {
                    ASSERT_NE(e, 0u);
                }
            }
        }
    }
}

TEST(logical_ops, round6_operators) {
    ColoredLattice lat = build_torus_honeycomb(6, 8);
    CheckAssignment checks = circle_square_checks(lat, 3);
    std::vector<LoopOperator> ops = loop_operators(lat, checks, 6);
    ASSERT_EQ(ops[0].loop_name, "horizontal");
    ASSERT_EQ(ops[0].kind, LoopOperatorKind::TYPE1);
    ASSERT_EQ(ops[1].kind, LoopOperatorKind::TYPE2);
    ASSERT_EQ(ops[2].loop_name, "vertical");
    for (const LoopOperator &op : ops) {
        ASSERT_GE(weight(op.op), 8u);
        ASSERT_LE(weight(op.op), 16u);
    }
    ASSERT_EQ(distance_upper_bound(lat, checks, 6), 8u);
}

TEST(logical_ops, verify_logical_examples) {
    GeneratorSet s = parse_generator_set("D=3 n=2\nw^0 X^1 Z^0 @ 0 * w^0 X^1 Z^0 @ 1\n");
    ASSERT_TRUE(verify_logical(s, lit(3, 2, "w^0 X^1 Z^0 @ 0")));
    ASSERT_FALSE(verify_logical(s, lit(3, 2, "w^0 X^1 Z^0 @ 0 * w^0 X^1 Z^0 @ 1")));
    ASSERT_FALSE(verify_logical(s, lit(3, 2, "w^0 X^0 Z^1 @ 0")));
    ASSERT_TRUE(verify_logical(s, lit(3, 2, "w^0 X^0 Z^1 @ 0 * w^0 X^0 Z^2 @ 1")));
}

TEST(logical_ops, pair_and_normalize) {
    PauliOperator x = lit(5, 1, "w^0 X^1 Z^0 @ 0");
    PauliOperator z3 = lit(5, 1, "w^0 X^0 Z^3 @ 0");
    // c(X, Z^3) = -3 = 2 mod 5, inverse 3.
    LogicalPair p = pair_and_normalize(x, z3);
    ASSERT_EQ(commutation(p.x_bar, p.z_bar), 1u);
    ASSERT_EQ(p.power, mod_inverse(commutation(x, z3), 5));
    PauliOperator q = lit(5, 1, "w^0 X^0 Z^1 @ 0");
    PauliOperator x3 = lit(5, 1, "w^0 X^2 Z^0 @ 0");
    // c(Z, X^2) = 2, inverse 3.
    LogicalPair r = pair_and_normalize(q, x3, 1);
    ASSERT_EQ(r.power, 3u);
    ASSERT_EQ(r.index, 1u);
    ASSERT_EQ(commutation(r.x_bar, r.z_bar), 1u);
    ASSERT_THROW(pair_and_normalize(x, lit(5, 1, "w^0 X^4 Z^0 @ 0")), std::invalid_argument);
}

TEST(logical_ops, torus_pairs) {
    ColoredLattice lat = build_torus_honeycomb(6, 8);
    for (uint32_t d : {3u, 5u}) {
        CheckAssignment checks = circle_square_checks(lat, d);
        IsgTrace trace = run_schedule(lat, checks, 8);
        std::vector<LogicalPair> pairs = logical_pairs(lat, checks, 6);
        ASSERT_EQ(pairs.size(), 2u);
        for (size_t i = 0; i < pairs.size(); i++) {
            ASSERT_EQ(commutation(pairs[i].x_bar, pairs[i].z_bar), 1u);
            ASSERT_TRUE(verify_logical(trace.at(6).isg, pairs[i].x_bar));
            ASSERT_TRUE(verify_logical(trace.at(6).isg, pairs[i].z_bar));
            for (size_t j = 0; j < pairs.size(); j++) {
                if (i != j) {
                    ASSERT_EQ(commutation(pairs[i].x_bar, pairs[j].x_bar), 0u);
                    ASSERT_EQ(commutation(pairs[i].x_bar, pairs[j].z_bar), 0u);
                    ASSERT_EQ(commutation(pairs[i].z_bar, pairs[j].z_bar), 0u);
                }
            }
        }
    }
}

TEST(logical_ops, fixture_pairs) {
    ColoredLattice lat = load_lattice(data_path("hyperbolic_8_3_genus2.lattice"));
    CheckAssignment checks = circle_square_checks(lat, 3);
    IsgTrace trace = run_schedule(lat, checks, 8);
    std::vector<LogicalPair> pairs = logical_pairs(lat, checks, 6);
    ASSERT_EQ(pairs.size(), 4u);
    std::vector<PauliOperator> all = trace.at(6).isg.generators();
    for (const LogicalPair &p : pairs) {
        all.push_back(p.x_bar);
        all.push_back(p.z_bar);
    }
    ASSERT_EQ(symplectic_rank(all, 3, lat.num_vertices()), trace.at(6).canonical.rank() + 8);
}

TEST(logical_ops, local_stabilizers_are_in_isg) {
    ColoredLattice lat = build_torus_honeycomb(3, 3);
    CheckAssignment checks = circle_square_checks(lat, 3);
    IsgTrace trace = run_schedule(lat, checks, 8);
    for (size_t r = 4; r < 8; r++) {
        for (const PauliOperator &s : local_stabilizer_generators(lat, checks, r)) {
            ASSERT_TRUE(contains_up_to_phase(trace.at(r).isg, s).has_value());
        }
    }
}

TEST(logical_ops, distance_bound_reduces_by_stabilizers) {
    GeneratorSet s = parse_generator_set("D=3 n=3\nw^0 X^1 Z^0 @ 0 * w^0 X^1 Z^0 @ 1\nw^0 X^1 Z^0 @ 1 * w^0 X^1 Z^0 @ 2\n");
    ASSERT_EQ(distance_upper_bound(s.generators(), {lit(3, 3, "w^0 X^1 Z^0 @ 0 * w^0 X^2 Z^0 @ 1")}), 1u);
    ASSERT_THROW(distance_upper_bound(s.generators(), {}), std::invalid_argument);
}

TEST(logical_ops, brute_force_qubit_torus) {
    ColoredLattice lat = build_torus_honeycomb(3, 3);
    CheckAssignment checks = qubit_honeycomb_checks(lat);
    IsgTrace trace = run_schedule(lat, checks, 8);
    std::optional<size_t> d = brute_force_distance(trace, 6, 4);
    ASSERT_TRUE(d.has_value());
    ASSERT_LE(*d, distance_upper_bound(lat, checks, 6));
    ASSERT_GE(*d, 2u);
    ASSERT_FALSE(brute_force_distance(trace, 6, *d - 1).has_value());
    IsgTrace big = run_schedule(build_torus_honeycomb(6, 8), qubit_honeycomb_checks(build_torus_honeycomb(6, 8)), 7);
    ASSERT_THROW(brute_force_distance(big, 6, 2), std::invalid_argument);
    IsgTrace qutrit = run_schedule(lat, circle_square_checks(lat, 3), 7);
    ASSERT_THROW(brute_force_distance(qutrit, 6, 2), std::invalid_argument);
}
