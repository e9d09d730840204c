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

#ifndef FLOQUDIT_LATTICE_HPP
#define FLOQUDIT_LATTICE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace floqudit {

enum class Color : uint8_t { GREEN = 0, RED = 1, BLUE = 2 };

constexpr std::array<Color, 3> ALL_COLORS{Color::GREEN, Color::RED, Color::BLUE};

/// green -> red -> blue -> green.
inline Color next_color(Color c) {
    return (Color)(((int)c + 1) % 3);
}
inline Color previous_color(Color c) {
    return (Color)(((int)c + 2) % 3);
}
/// The color distinct from both arguments, which must differ.
inline Color third_color(Color a, Color b) {
    return (Color)(3 - (int)a - (int)b);
}

const char *color_name(Color c);
/// Parses "green", "red" or "blue".
Color parse_color(std::string_view name);

enum class VertexMark : uint8_t { NONE = 0, CIRCLE = 1, SQUARE = 2 };

/// Geometric edge direction of a honeycomb edge, recorded only for generated tori.
enum class EdgeDirection : uint8_t { NONE = 0, X = 1, Y = 2, Z = 3 };

struct Edge {
    size_t v;
    size_t u;
    Color color;
    EdgeDirection direction = EdgeDirection::NONE;

    bool operator==(const Edge &other) const = default;
};

struct Plaquette {
    Color color;
    /// Boundary vertices in cyclic order.
    std::vector<size_t> boundary;

    bool operator==(const Plaquette &other) const = default;
};

struct Loop {
    std::string name;
    /// Edge indices in cyclic order.
    std::vector<size_t> edges;

    bool operator==(const Loop &other) const = default;
};

/// Counting report of a lattice.
struct LatticeCombinatorics {
    size_t num_vertices;
    size_t num_edges;
    size_t num_plaquettes;
    size_t face_size;
    size_t genus;
    std::array<size_t, 3> edges_per_color;
    std::array<size_t, 3> plaquettes_per_color;
    /// All counting identities hold.
    bool identities_hold;
};

/// A three-colorable {p,3} lattice on a closed orientable surface.
class ColoredLattice {
   public:
    /// Builds and fully validates; throws std::invalid_argument naming the offending element.
    ColoredLattice(
        size_t face_size,
        size_t genus,
        std::vector<VertexMark> marks,
        std::vector<Edge> edges,
        std::vector<Plaquette> plaquettes,
        std::vector<Loop> loops);

    size_t num_vertices() const {
        return marks_.size();
    }
    size_t num_edges() const {
        return edges_.size();
    }
    size_t num_plaquettes() const {
        return plaquettes_.size();
    }
    size_t face_size() const {
        return face_size_;
    }
    size_t genus() const {
        return genus_;
    }
    bool is_marked() const;
    VertexMark mark(size_t v) const {
        return marks_[v];
    }
    const std::vector<VertexMark> &marks() const {
        return marks_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    const Edge &edge(size_t e) const {
        return edges_[e];
    }
    const std::vector<Plaquette> &plaquettes() const {
        return plaquettes_;
    }
    const Plaquette &plaquette(size_t f) const {
        return plaquettes_[f];
    }
    const std::vector<Loop> &loops() const {
        return loops_;
    }
    /// Throws std::invalid_argument if no loop has this name.
    const Loop &loop(std::string_view name) const;

    /// The unique edge of the given color at v.
    size_t edge_at(size_t v, Color c) const {
        return incident_[v][(int)c];
    }
    /// The edge joining v and u, if any.
    std::optional<size_t> edge_between(size_t v, size_t u) const;
    /// Boundary edges of plaquette f, in boundary order (edge k joins boundary[k] and boundary[k+1]).
    const std::vector<size_t> &plaquette_edges(size_t f) const {
        return plaquette_edges_[f];
    }
    /// The two plaquettes containing edge e.
    const std::array<size_t, 2> &edge_plaquettes(size_t e) const {
        return edge_plaquettes_[e];
    }
    /// The three plaquettes containing vertex v, indexed by color.
    const std::array<size_t, 3> &vertex_plaquettes(size_t v) const {
        return vertex_plaquettes_[v];
    }
    /// Plaquettes sharing an edge with f, sorted.
    std::vector<size_t> neighbor_plaquettes(size_t f) const;

    LatticeCombinatorics combinatorics() const;

    bool operator==(const ColoredLattice &other) const;

   private:
    void validate_and_index();

    size_t face_size_;
    size_t genus_;
    std::vector<VertexMark> marks_;
    std::vector<Edge> edges_;
    std::vector<Plaquette> plaquettes_;
    std::vector<Loop> loops_;

    std::vector<std::array<size_t, 3>> incident_;
    std::vector<std::vector<size_t>> plaquette_edges_;
    std::vector<std::array<size_t, 2>> edge_plaquettes_;
    std::vector<std::array<size_t, 3>> vertex_plaquettes_;
};

/// Hexagonal lattice on an L1 x L2 torus with hexagon (i, j) colored (i + 2j) mod 3.
///
/// Rows are wrapped with a horizontal twist of t in {floor(L2/2) - 1, floor(L2/2), floor(L2/2) + 1}
/// satisfying t = 2 L2 (mod 3); even L2 gives the brick-wall rectangle. Canonical loops named
/// "horizontal" and "vertical" are attached. Throws if the coloring is not proper.
ColoredLattice build_torus_honeycomb(size_t l1, size_t l2);

/// Parses and validates the lattice file format.
ColoredLattice parse_lattice(std::string_view text);
std::string format_lattice(const ColoredLattice &lat);
ColoredLattice load_lattice(const std::string &path);
void save_lattice(const ColoredLattice &lat, const std::string &path);

/// Vertex sequence of a closed edge cycle, starting at the vertex shared by the last and first edges.
/// Throws std::invalid_argument for open chains.
std::vector<size_t> loop_vertices(const ColoredLattice &lat, const std::vector<size_t> &edges);

/// True iff the loop's GF(2) edge-indicator vector is outside the span of plaquette boundaries.
/// The edge list must form a closed edge chain.
bool is_nontrivial_loop(const ColoredLattice &lat, const std::vector<size_t> &edges);

}  // namespace floqudit

#endif
