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


#include "floqudit/lattice.hpp"

#include <cstdio>
#include <set>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace floqudit;

namespace {

std::vector<size_t> concat(const std::vector<size_t> &a, const std::vector<size_t> &b) {
    std::vector<size_t> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

TEST(lattice, colors) {
    ASSERT_EQ(next_color(Color::GREEN), Color::RED);
    ASSERT_EQ(next_color(Color::BLUE), Color::GREEN);
    ASSERT_EQ(previous_color(Color::GREEN), Color::BLUE);
    ASSERT_EQ(third_color(Color::GREEN, Color::BLUE), Color::RED);
    ASSERT_EQ(parse_color("blue"), Color::BLUE);
    ASSERT_STREQ(color_name(Color::RED), "red");
    ASSERT_THROW(parse_color("purple"), std::invalid_argument);
}

TEST(lattice, torus_6x8_counts) {
    ColoredLattice lat = build_torus_honeycomb(6, 8);
    LatticeCombinatorics c = lat.combinatorics();
    ASSERT_EQ(c.num_vertices, 96u);
    ASSERT_EQ(c.num_edges, 144u);
    ASSERT_EQ(c.num_plaquettes, 48u);
    ASSERT_EQ(c.genus, 1u);
    ASSERT_EQ(c.face_size, 6u);
    ASSERT_TRUE(c.identities_hold);
    for (size_t k = 0; k < 3; k++) {
        ASSERT_EQ(c.edges_per_color[k], 48u);
        ASSERT_EQ(c.plaquettes_per_color[k], 16u);
    }
    // Euler: V - E + F = 2 - 2g.
    ASSERT_EQ((int64_t)c.num_vertices - (int64_t)c.num_edges + (int64_t)c.num_plaquettes, 0);
}

TEST(lattice, torus_3x3_counts) {
    ColoredLattice lat = build_torus_honeycomb(3, 3);
    LatticeCombinatorics c = lat.combinatorics();
    ASSERT_EQ(c.num_vertices, 18u);
    ASSERT_EQ(c.num_plaquettes, 9u);
    for (size_t k = 0; k < 3; k++) {
        ASSERT_EQ(c.plaquettes_per_color[k], 3u);
    }
}

TEST(lattice, torus_improper_coloring_rejected) {
    ASSERT_THROW(build_torus_honeycomb(4, 4), std::invalid_argument);
    ASSERT_THROW(build_torus_honeycomb(0, 3), std::invalid_argument);
}

TEST(lattice, torus_structure) {
    ColoredLattice lat = build_torus_honeycomb(6, 8);
    for (size_t e = 0; e < lat.num_edges(); e++) {
        const Edge &ed = lat.edge(e);
        ASSERT_NE(lat.mark(ed.v), lat.mark(ed.u));
        // The two plaquettes beside an edge have the two other colors.
        auto fs = lat.edge_plaquettes(e);
        std::set<Color> colors{lat.plaquette(fs[0]).color, lat.plaquette(fs[1]).color, ed.color};
        ASSERT_EQ(colors.size(), 3u);
    }
    for (size_t v = 0; v < lat.num_vertices(); v++) {
        for (Color c : ALL_COLORS) {
            ASSERT_EQ(lat.plaquette(lat.vertex_plaquettes(v)[(int)c]).color, c);
            size_t e = lat.edge_at(v, c);
            ASSERT_EQ(lat.edge(e).color, c);
        }
    }
    for (size_t f = 0; f < lat.num_plaquettes(); f++) {
        ASSERT_EQ(lat.plaquette(f).boundary.size(), 6u);
        ASSERT_EQ(lat.neighbor_plaquettes(f).size(), 6u);
    }
}

TEST(lattice, fixture_8_3_counts) {
    ColoredLattice lat = load_lattice(data_path("hyperbolic_8_3_genus2.lattice"));
    LatticeCombinatorics c = lat.combinatorics();
    ASSERT_EQ(c.num_vertices, 16u);
    ASSERT_EQ(c.num_edges, 24u);
    ASSERT_EQ(c.num_plaquettes, 6u);
    ASSERT_EQ(c.face_size, 8u);
    ASSERT_EQ(c.genus, 2u);
    ASSERT_TRUE(c.identities_hold);
    for (size_t k = 0; k < 3; k++) {
        ASSERT_EQ(c.plaquettes_per_color[k], 2u);
    }
    // n - 3n/2 + 3n/p = 2 - 2g.
    ASSERT_EQ(16 - 24 + 3 * 16 / 8, 2 - 2 * 2);
    ASSERT_EQ(lat.loops().size(), 4u);
    for (const Loop &loop : lat.loops()) {
        ASSERT_TRUE(is_nontrivial_loop(lat, loop.edges)) << loop.name;
    }
}

TEST(lattice, file_round_trip) {
    ColoredLattice lat = build_torus_honeycomb(3, 3);
    std::string text = format_lattice(lat);
    ASSERT_EQ(parse_lattice(text), lat);
    std::string path = testing::TempDir() + "floqudit_lattice_round_trip.lattice";
    save_lattice(lat, path);
    ASSERT_EQ(load_lattice(path), lat);
    std::remove(path.c_str());
}

TEST(lattice, degree_two_vertex_rejected) {
    std::string text = format_lattice(build_torus_honeycomb(3, 3));
    // Drop the first edge line: its endpoints keep only two edges.
    size_t start = text.find("\nedge ");
    size_t end = text.find('\n', start + 1);
    std::string broken = text.substr(0, start) + text.substr(end);
    try {
        parse_lattice(broken);
        FAIL() << "expected an error";
    } catch (const std::invalid_argument &ex) {
        ASSERT_NE(std::string(ex.what()).find("vertex"), std::string::npos) << ex.what();
    }
}

TEST(lattice, malformed_files_rejected) {
    ASSERT_THROW(parse_lattice(""), std::invalid_argument);
    ASSERT_THROW(parse_lattice("p=6 genus=1\nvertex 0 o\nbogus line\n"), std::invalid_argument);
}

TEST(lattice, loop_nontriviality) {
    ColoredLattice lat = build_torus_honeycomb(6, 8);
    ASSERT_FALSE(is_nontrivial_loop(lat, lat.plaquette_edges(0)));
    const Loop &v = lat.loop("vertical");
    const Loop &h = lat.loop("horizontal");
    ASSERT_TRUE(is_nontrivial_loop(lat, v.edges));
    ASSERT_TRUE(is_nontrivial_loop(lat, h.edges));
    ASSERT_FALSE(is_nontrivial_loop(lat, concat(v.edges, v.edges)));
    ASSERT_THROW(lat.loop("diagonal"), std::invalid_argument);
}

TEST(lattice, canonical_loop_colors) {
    ColoredLattice lat = build_torus_honeycomb(6, 8);
    std::array<size_t, 3> h{};
    for (size_t e : lat.loop("horizontal").edges) {
        h[(int)lat.edge(e).color]++;
    }
    ASSERT_EQ(h, (std::array<size_t, 3>{4, 4, 4}));
    std::array<size_t, 3> v{};
    for (size_t e : lat.loop("vertical").edges) {
        v[(int)lat.edge(e).color]++;
    }
    ASSERT_EQ(v[0] + v[1] + v[2], 16u);
    std::vector<size_t> sorted(v.begin(), v.end());
    std::sort(sorted.begin(), sorted.end());
    ASSERT_EQ(sorted, (std::vector<size_t>{4, 4, 8}));
}

TEST(lattice, loop_vertices_closed) {
    ColoredLattice lat = build_torus_honeycomb(3, 3);
    const Loop &h = lat.loop("horizontal");
    std::vector<size_t> verts = loop_vertices(lat, h.edges);
    ASSERT_EQ(verts.size(), h.edges.size());
    for (size_t k = 0; k < verts.size(); k++) {
        ASSERT_EQ(lat.edge_between(verts[k], verts[(k + 1) % verts.size()]), h.edges[k]);
    }
    std::vector<size_t> open(h.edges.begin(), h.edges.end() - 1);
    ASSERT_THROW(loop_vertices(lat, open), std::invalid_argument);
}

TEST(lattice, odd_rows_are_twisted_but_valid) {
    for (auto [l1, l2] : std::vector<std::pair<size_t, size_t>>{{3, 3}, {6, 5}, {3, 7}, {9, 9}}) {
        ColoredLattice lat = build_torus_honeycomb(l1, l2);
        ASSERT_EQ(lat.num_vertices(), 2 * l1 * l2);
        ASSERT_EQ(lat.genus(), 1u);
        ASSERT_TRUE(is_nontrivial_loop(lat, lat.loop("vertical").edges));
        ASSERT_TRUE(is_nontrivial_loop(lat, lat.loop("horizontal").edges));
    }
}
