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


#include "floqudit/noise_syndrome.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace floqudit;

namespace {

struct Code {
    ColoredLattice lat;
    CheckAssignment checks;
};

Code torus(size_t l1, size_t l2, uint32_t d) {
    ColoredLattice lat = build_torus_honeycomb(l1, l2);
    CheckAssignment checks = d == 2 ? qubit_honeycomb_checks(lat) : circle_square_checks(lat, d);
    return {std::move(lat), std::move(checks)};
}

std::vector<Residue> node_values(const SpaceTimeLattice &s) {
    std::vector<Residue> out;
    for (const SyndromeNode &n : s.nodes) {
        out.push_back(n.value);
    }
    return out;
}

}  // namespace

TEST(noise_syndrome, zero_probability_is_identity) {
    NoiseModel model{3, 0.0};
    for (size_t r = 0; r < 20; r++) {
        ASSERT_TRUE(sample_round_errors(model, 5, r, 50).is_identity());
    }
}

TEST(noise_syndrome, unit_probability_qubit) {
    NoiseModel model{2, 1.0};
    PauliOperator e = sample_round_errors(model, 5, 3, 40);
    for (size_t q = 0; q < 40; q++) {
        ASSERT_EQ(e.factor(q), (SingleQuditPauli{1, 1}));
    }
}

TEST(noise_syndrome, model_validation) {
    ASSERT_THROW((NoiseModel{4, 0.1}).validate(), std::invalid_argument);
    ASSERT_THROW((NoiseModel{3, -0.1}).validate(), std::invalid_argument);
    ASSERT_THROW((NoiseModel{3, 1.5}).validate(), std::invalid_argument);
    ASSERT_THROW((NoiseModel{3, std::nan("")}).validate(), std::invalid_argument);
    (NoiseModel{3, 1.0}).validate();
}

TEST(noise_syndrome, sampled_rates_within_five_sigma) {
    for (uint32_t d : {2u, 3u, 5u}) {
        NoiseModel model{d, 0.1};
        size_t draws = 0;
        size_t x_hits = 0;
        size_t z_hits = 0;
        std::vector<size_t> powers(d, 0);
        for (size_t r = 0; r < 100; r++) {
            PauliOperator e = sample_round_errors(model, 11, r, 1000);
            for (size_t q = 0; q < 1000; q++) {
                draws++;
                x_hits += e.x(q) != 0;
                z_hits += e.z(q) != 0;
                powers[e.x(q)]++;
            }
        }
        double sigma = std::sqrt(0.1 * 0.9 / (double)draws);
        ASSERT_LT(std::abs((double)x_hits / (double)draws - 0.1), 5 * sigma) << d;
        ASSERT_LT(std::abs((double)z_hits / (double)draws - 0.1), 5 * sigma) << d;
        for (uint32_t a = 1; a < d; a++) {
            double frac = (double)powers[a] / (double)x_hits;
            double s = std::sqrt((1.0 / (d - 1)) * (1.0 - 1.0 / (d - 1)) / (double)x_hits);
            ASSERT_LE(std::abs(frac - 1.0 / (d - 1)), 5 * s + 1e-12) << d << " " << a;
        }
    }
}

TEST(noise_syndrome, sampling_is_reproducible) {
    NoiseModel model{5, 0.3};
    ASSERT_EQ(sample_round_errors(model, 9, 4, 30), sample_round_errors(model, 9, 4, 30));
    ASSERT_NE(sample_round_errors(model, 9, 4, 30), sample_round_errors(model, 9, 5, 30));
    ASSERT_NE(sample_round_errors(model, 9, 4, 30), sample_round_errors(model, 10, 4, 30));
}

TEST(noise_syndrome, noisy_outcome_examples) {
    Code s = torus(3, 3, 3);
    size_t v = 0;
    while (s.lat.mark(v) != VertexMark::CIRCLE) {
        v++;
    }
    PauliOperator m = s.checks.check_operator(s.lat.edge_at(v, Color::GREEN));
    PauliOperator f = embed({0, 1}, v, s.lat.num_vertices(), 3);
    // c(X^-2, Z) = 2.
    ASSERT_EQ(noisy_outcome(m, 0, f), 2u);
    ASSERT_EQ(noisy_outcome(m, 2, f), 1u);
    ASSERT_EQ(noisy_outcome(m, 1, PauliOperator(3, s.lat.num_vertices())), 1u);
}

TEST(noise_syndrome, single_qudit_error_flips_two_of_three_checks) {
    for (uint32_t d : {3u, 5u}) {
        Code s = torus(3, 3, d);
        for (size_t v = 0; v < s.lat.num_vertices(); v++) {
            for (Residue x = 0; x < d; x++) {
                for (Residue z = 0; z < d; z++) {
                    if (x == 0 && z == 0) {
                        continue;
                    }
                    PauliOperator e = embed({x, z}, v, s.lat.num_vertices(), d);
                    size_t flipped = 0;
                    for (Color c : ALL_COLORS) {
                        flipped += noisy_outcome(s.checks.check_operator(s.lat.edge_at(v, c)), 0, e) != 0;
                    }
                    ASSERT_GE(flipped, 2u);
                }
            }
        }
    }
}

TEST(noise_syndrome, noiseless_run_matches_baseline) {
    Code s = torus(3, 3, 3);
    NoisyTrace t = run_noisy_schedule(s.lat, s.checks, 10, {3, 0.0}, 1);
    for (size_t r = 0; r < 10; r++) {
        ASSERT_EQ(t.noisy.rounds[r].outcomes, t.baseline.rounds[r].outcomes);
        ASSERT_TRUE(t.frames[r].is_identity());
    }
    SpaceTimeLattice st = build_space_time_lattice(s.lat, infer_plaquette_values(s.lat, s.checks, t), t);
    ASSERT_EQ(st.num_detections(), 0u);
    ASSERT_FALSE(st.nodes.empty());
}

TEST(noise_syndrome, frames_accumulate_errors) {
    Code s = torus(3, 3, 5);
    NoisyTrace t = run_noisy_schedule(s.lat, s.checks, 9, {5, 0.1}, 3);
    PauliOperator acc(5, s.lat.num_vertices());
    for (size_t r = 0; r < 9; r++) {
        acc = (t.errors[r] * acc).with_phase(0);
        ASSERT_EQ(t.frames[r], acc);
        ASSERT_EQ(t.errors[r], sample_round_errors({5, 0.1}, 3, r, s.lat.num_vertices()));
    }
}

TEST(noise_syndrome, noise_only_changes_phases) {
    Code s = torus(3, 3, 3);
    NoisyTrace t = run_noisy_schedule(s.lat, s.checks, 9, {3, 0.2}, 8);
    for (size_t r = 0; r < 9; r++) {
        CanonicalTableau a = canonical_form(t.noisy.rounds[r].isg);
        const CanonicalTableau &b = t.baseline.rounds[r].canonical;
        ASSERT_EQ(a.pivots, b.pivots);
        for (size_t k = 0; k < a.rows.size(); k++) {
            ASSERT_EQ(a.rows[k].with_phase(0), b.rows[k].with_phase(0));
        }
    }
}

TEST(noise_syndrome, inference_schedule) {
    ASSERT_EQ(inferred_color(0), Color::RED);
    ASSERT_EQ(inferred_color(1), Color::BLUE);
    ASSERT_EQ(inferred_color(2), Color::GREEN);
    ASSERT_EQ(first_inference_round(Color::BLUE), 4u);
    ASSERT_EQ(first_inference_round(Color::GREEN), 5u);
    ASSERT_EQ(first_inference_round(Color::RED), 6u);
    Code s = torus(3, 3, 3);
    NoisyTrace t = run_noisy_schedule(s.lat, s.checks, 6, {3, 0.0}, 1);
    ASSERT_THROW(infer_plaquette_values(s.lat, s.checks, t), std::invalid_argument);
}

TEST(noise_syndrome, single_error_is_confined) {
    for (uint32_t d : {3u, 5u}) {
        Code s = torus(3, 3, d);
        size_t n = s.lat.num_vertices();
        for (size_t v = 0; v < n; v++) {
            PauliOperator e = embed({1, 0}, v, n, d);
            SpaceTimeLattice st = simulate_syndrome(s.lat, s.checks, 12, {d, 0.0}, 1, {{6, e}});
            ASSERT_GE(st.num_detections(), 1u);
            const auto &near = s.lat.vertex_plaquettes(v);
            for (const SyndromeNode &node : st.nodes) {
                if (node.value != 0) {
                    ASSERT_NE(std::find(near.begin(), near.end(), node.plaquette), near.end()) << v;
                    ASSERT_GE(node.round, 6u);
                }
            }
        }
    }
}

TEST(noise_syndrome, inject_x_on_qudit4) {
    Code s = torus(3, 3, 3);
    PauliOperator e = lit(3, s.lat.num_vertices(), "w^0 X^1 Z^0 @ 4");
    NoisyTrace t = run_noisy_schedule(s.lat, s.checks, 12, {3, 0.0}, 1, {{6, e}});
    std::vector<Color> shifted;
    for (size_t r = 6; r < 7; r++) {
        for (size_t k = 0; k < t.baseline.rounds[r].edge_order.size(); k++) {
            if (t.noisy.rounds[r].outcomes[k] != t.baseline.rounds[r].outcomes[k]) {
                shifted.push_back(s.lat.edge(t.baseline.rounds[r].edge_order[k]).color);
            }
        }
    }
    // Round 6 measures green checks, which are X-type and commute with X.
    ASSERT_TRUE(shifted.empty());
    SpaceTimeLattice st = build_space_time_lattice(s.lat, infer_plaquette_values(s.lat, s.checks, t), t);
    ASSERT_EQ(st.num_detections(), 2u);
    for (const SyndromeNode &node : st.nodes) {
        if (node.value != 0) {
            ASSERT_NE(s.lat.plaquette(node.plaquette).color, Color::GREEN);
        }
    }
}

TEST(noise_syndrome, syndrome_is_linear_in_errors) {
    Code s = torus(3, 3, 5);
    size_t n = s.lat.num_vertices();
    std::mt19937_64 rng(4);
    for (size_t trial = 0; trial < 5; trial++) {
        PauliOperator a = random_pauli(rng, 5, n).with_phase(0);
        PauliOperator b = random_pauli(rng, 5, n).with_phase(0);
        SpaceTimeLattice sa = simulate_syndrome(s.lat, s.checks, 12, {5, 0.0}, 1, {{5, a}});
        SpaceTimeLattice sb = simulate_syndrome(s.lat, s.checks, 12, {5, 0.0}, 1, {{8, b}});
        SpaceTimeLattice sab = simulate_syndrome(s.lat, s.checks, 12, {5, 0.0}, 1, {{5, a}, {8, b}});
        std::vector<Residue> va = node_values(sa);
        std::vector<Residue> vb = node_values(sb);
        std::vector<Residue> vab = node_values(sab);
        ASSERT_EQ(va.size(), vab.size());
        for (size_t k = 0; k < va.size(); k++) {
            ASSERT_EQ(vab[k], mod_add(va[k], vb[k], 5));
        }
    }
}

TEST(noise_syndrome, space_time_edges) {
    Code s = torus(3, 3, 3);
    SpaceTimeLattice st = simulate_syndrome(s.lat, s.checks, 12, {3, 0.05}, 2);
    ASSERT_FALSE(st.edges.empty());
    for (const auto &edge : st.edges) {
        ASSERT_LT(edge[0], edge[1]);
        const SyndromeNode &a = st.nodes[edge[0]];
        const SyndromeNode &b = st.nodes[edge[1]];
        ASSERT_EQ(b.round, a.round + 1);
        std::vector<size_t> nb = s.lat.neighbor_plaquettes(a.plaquette);
        ASSERT_NE(std::find(nb.begin(), nb.end(), b.plaquette), nb.end());
    }
    for (size_t k = 1; k < st.nodes.size(); k++) {
        ASSERT_LE(
            std::make_pair(st.nodes[k - 1].round, st.nodes[k - 1].plaquette),
            std::make_pair(st.nodes[k].round, st.nodes[k].plaquette));
    }
}

TEST(noise_syndrome, deterministic_and_thread_independent) {
    Code s = torus(3, 3, 3);
    NoiseModel model{3, 0.05};
    SpaceTimeLattice a = simulate_syndrome(s.lat, s.checks, 12, model, 42);
    ASSERT_EQ(a, simulate_syndrome(s.lat, s.checks, 12, model, 42));
    std::vector<SpaceTimeLattice> one = simulate_syndrome_shots(s.lat, s.checks, 12, model, 42, 4, 1);
    std::vector<SpaceTimeLattice> many = simulate_syndrome_shots(s.lat, s.checks, 12, model, 42, 4, 3);
    ASSERT_EQ(one, many);
    for (size_t k = 0; k < 4; k++) {
        ASSERT_EQ(one[k], simulate_syndrome(s.lat, s.checks, 12, model, 42 + k));
    }
    ASSERT_NE(one[0], one[1]);
}

TEST(noise_syndrome, json_round_trip) {
    Code s = torus(3, 3, 5);
    SpaceTimeLattice a = simulate_syndrome(s.lat, s.checks, 10, {5, 0.1}, 7);
    std::string text = space_time_lattice_to_json(a);
    ASSERT_EQ(space_time_lattice_from_json(text), a);
    std::string path = (std::filesystem::temp_directory_path() / "floqudit_syndrome_test.json").string();
    save_space_time_lattice(a, path);
    ASSERT_EQ(load_space_time_lattice(path), a);
    std::remove(path.c_str());
    ASSERT_THROW(space_time_lattice_from_json("{\"dim\": 3}"), std::invalid_argument);
    ASSERT_THROW(space_time_lattice_from_json("not json"), std::invalid_argument);
}

TEST(noise_syndrome, rejects_bad_inputs) {
    Code s = torus(3, 3, 3);
    ASSERT_THROW(run_noisy_schedule(s.lat, s.checks, 8, {5, 0.1}, 1), std::invalid_argument);
    PauliOperator e(3, s.lat.num_vertices());
    ASSERT_THROW(run_noisy_schedule(s.lat, s.checks, 8, {3, 0.1}, 1, {{8, e}}), std::invalid_argument);
    ASSERT_THROW(run_noisy_schedule(s.lat, s.checks, 8, {3, 0.1}, 1, {{2, PauliOperator(3, 2)}}), std::invalid_argument);
}

TEST(noise_syndrome, frame_soundness_suite) {
    OracleSuiteReport r = run_frame_soundness_suite(3, {2, 3});
    ASSERT_TRUE(r.ok()) << (r.messages.empty() ? "" : r.messages[0]);
}
