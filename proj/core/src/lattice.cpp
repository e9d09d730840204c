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

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "floqudit/gf_linear.hpp"
#include "text_util.hpp"

using namespace floqudit;

namespace {

constexpr size_t NONE = SIZE_MAX;

[[noreturn]] void fail(const std::string &message) {
    throw std::invalid_argument("Invalid lattice: " + message);
}

std::pair<size_t, size_t> ordered(size_t a, size_t b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

const char *mark_token(VertexMark m) {
    switch (m) {
        case VertexMark::CIRCLE:
            return "o";
        case VertexMark::SQUARE:
            return "s";
        default:
            return "";
    }
}

const char *direction_token(EdgeDirection d) {
    switch (d) {
        case EdgeDirection::X:
            return "x";
        case EdgeDirection::Y:
            return "y";
        case EdgeDirection::Z:
            return "z";
        default:
            return "";
    }
}

}  // namespace

const char *floqudit::color_name(Color c) {
    switch (c) {
        case Color::GREEN:
            return "green";
        case Color::RED:
            return "red";
        case Color::BLUE:
            return "blue";
    }
    return "?";
}

Color floqudit::parse_color(std::string_view name) {
    if (name == "green") {
        return Color::GREEN;
    }
    if (name == "red") {
        return Color::RED;
    }
    if (name == "blue") {
        return Color::BLUE;
    }
    throw std::invalid_argument("Unknown color '" + std::string(name) + "' (expected green, red or blue).");
}

ColoredLattice::ColoredLattice(
    size_t face_size,
    size_t genus,
    std::vector<VertexMark> marks,
    std::vector<Edge> edges,
    std::vector<Plaquette> plaquettes,
    std::vector<Loop> loops)
    : face_size_(face_size),
      genus_(genus),
      marks_(std::move(marks)),
      edges_(std::move(edges)),
      plaquettes_(std::move(plaquettes)),
      loops_(std::move(loops)) {
    validate_and_index();
}

void ColoredLattice::validate_and_index() {
    size_t n = marks_.size();
    if (face_size_ < 4 || face_size_ % 2 != 0) {
        std::stringstream ss;
        ss << "face size p=" << face_size_ << " must be even and at least 4.";
        fail(ss.str());
    }
    if (n == 0) {
        fail("no vertices.");
    }

    // Edges and vertex incidence.
    incident_.assign(n, {NONE, NONE, NONE});
    std::map<std::pair<size_t, size_t>, size_t> edge_index;
    for (size_t e = 0; e < edges_.size(); e++) {
        const Edge &ed = edges_[e];
        if (ed.v >= n || ed.u >= n || ed.v == ed.u) {
            std::stringstream ss;
            ss << "edge " << e << " (" << ed.v << ", " << ed.u << ") has an invalid endpoint.";
            fail(ss.str());
        }
        if (!edge_index.emplace(ordered(ed.v, ed.u), e).second) {
            std::stringstream ss;
            ss << "edge " << e << " duplicates edge " << edge_index[ordered(ed.v, ed.u)] << " between vertices " << ed.v
               << " and " << ed.u << ".";
            fail(ss.str());
        }
        for (size_t w : {ed.v, ed.u}) {
            size_t &slot = incident_[w][(int)ed.color];
            if (slot != NONE) {
                std::stringstream ss;
                ss << "vertex " << w << " has two " << color_name(ed.color) << " edges (" << slot << " and " << e << ").";
                fail(ss.str());
            }
            slot = e;
        }
    }
    for (size_t v = 0; v < n; v++) {
        size_t degree = 0;
        for (Color c : ALL_COLORS) {
            degree += incident_[v][(int)c] != NONE;
        }
        if (degree != 3) {
            std::stringstream ss;
            ss << "vertex " << v << " has degree " << degree << " but every vertex needs one edge of each color.";
            fail(ss.str());
        }
    }

    // Marking.
    bool any_marked = false;
    bool any_unmarked = false;
    for (VertexMark m : marks_) {
        (m == VertexMark::NONE ? any_unmarked : any_marked) = true;
    }
    if (any_marked && any_unmarked) {
        fail("either every vertex or no vertex must carry a circle/square mark.");
    }
    if (any_marked) {
        for (size_t e = 0; e < edges_.size(); e++) {
            if (marks_[edges_[e].v] == marks_[edges_[e].u]) {
                std::stringstream ss;
                ss << "edge " << e << " (" << edges_[e].v << ", " << edges_[e].u << ") joins two vertices with the same mark.";
                fail(ss.str());
            }
        }
    }

    // Plaquettes.
    plaquette_edges_.assign(plaquettes_.size(), {});
    std::vector<std::vector<size_t>> edge_faces(edges_.size());
    vertex_plaquettes_.assign(n, {NONE, NONE, NONE});
    for (size_t f = 0; f < plaquettes_.size(); f++) {
        const Plaquette &pl = plaquettes_[f];
        if (pl.boundary.size() != face_size_) {
            std::stringstream ss;
            ss << "plaquette " << f << " has " << pl.boundary.size() << " boundary vertices but p=" << face_size_ << ".";
            fail(ss.str());
        }
        std::set<size_t> seen;
        for (size_t k = 0; k < pl.boundary.size(); k++) {
            size_t v = pl.boundary[k];
            size_t u = pl.boundary[(k + 1) % pl.boundary.size()];
            if (v >= n || !seen.insert(v).second) {
                std::stringstream ss;
                ss << "plaquette " << f << " has an invalid or repeated boundary vertex " << v << ".";
                fail(ss.str());
            }
            auto it = edge_index.find(ordered(v, u));
            if (it == edge_index.end()) {
                std::stringstream ss;
                ss << "plaquette " << f << " boundary vertices " << v << " and " << u << " are not joined by an edge.";
                fail(ss.str());
            }
            size_t e = it->second;
            if (edges_[e].color == pl.color) {
                std::stringstream ss;
                ss << "plaquette " << f << " (" << color_name(pl.color) << ") has boundary edge " << e
                   << " of its own color.";
                fail(ss.str());
            }
            if (k > 0 && edges_[e].color == edges_[plaquette_edges_[f].back()].color) {
                std::stringstream ss;
                ss << "plaquette " << f << " boundary edges do not alternate colors at vertex " << v << ".";
                fail(ss.str());
            }
            plaquette_edges_[f].push_back(e);
            edge_faces[e].push_back(f);
            size_t &slot = vertex_plaquettes_[v][(int)pl.color];
            if (slot != NONE) {
                std::stringstream ss;
                ss << "vertex " << v << " lies on two " << color_name(pl.color) << " plaquettes (" << slot << " and " << f
                   << ").";
                fail(ss.str());
            }
            slot = f;
        }
    }
    edge_plaquettes_.assign(edges_.size(), {NONE, NONE});
    for (size_t e = 0; e < edges_.size(); e++) {
        if (edge_faces[e].size() != 2) {
            std::stringstream ss;
            ss << "edge " << e << " lies on " << edge_faces[e].size() << " plaquettes instead of 2.";
            fail(ss.str());
        }
        edge_plaquettes_[e] = {edge_faces[e][0], edge_faces[e][1]};
        const Edge &ed = edges_[e];
        size_t a = vertex_plaquettes_[ed.v][(int)ed.color];
        size_t b = vertex_plaquettes_[ed.u][(int)ed.color];
        if (a == NONE || b == NONE || a == b) {
            std::stringstream ss;
            ss << "endpoints of " << color_name(ed.color) << " edge " << e
               << " do not lie on two distinct plaquettes of that color.";
            fail(ss.str());
        }
    }
    for (size_t v = 0; v < n; v++) {
        for (Color c : ALL_COLORS) {
            if (vertex_plaquettes_[v][(int)c] == NONE) {
                std::stringstream ss;
                ss << "vertex " << v << " lies on no " << color_name(c) << " plaquette.";
                fail(ss.str());
            }
        }
    }

    // Counting identities.
    size_t ne = edges_.size();
    size_t np = plaquettes_.size();
    if (2 * ne != 3 * n) {
        std::stringstream ss;
        ss << "|E| = " << ne << " but 3n/2 = " << 3 * n / 2.0 << ".";
        fail(ss.str());
    }
    if (np * face_size_ != 3 * n) {
        std::stringstream ss;
        ss << "n_p = " << np << " but 3n/p = " << 3.0 * n / face_size_ << ".";
        fail(ss.str());
    }
    int64_t euler = (int64_t)n - (int64_t)ne + (int64_t)np;
    if (euler != 2 - 2 * (int64_t)genus_) {
        std::stringstream ss;
        ss << "declared genus " << genus_ << " disagrees with the Euler characteristic " << euler << ".";
        fail(ss.str());
    }
    if (12 * ((int64_t)genus_ - 1) != (int64_t)np * ((int64_t)face_size_ - 6)) {
        fail("4(g - 1) = n_p (p - 2 - 2p/3) does not hold.");
    }

    // Loops.
    std::set<std::string> names;
    for (const Loop &loop : loops_) {
        if (loop.name.empty() || loop.name.find_first_of(" \t#") != std::string::npos) {
            fail("loop name '" + loop.name + "' must be a non-empty token.");
        }
        if (!names.insert(loop.name).second) {
            fail("duplicate loop name '" + loop.name + "'.");
        }
        for (size_t e : loop.edges) {
            if (e >= ne) {
                std::stringstream ss;
                ss << "loop '" << loop.name << "' refers to missing edge " << e << ".";
                fail(ss.str());
            }
        }
        try {
            if (!is_nontrivial_loop(*this, loop.edges)) {
                fail("loop '" + loop.name + "' is contractible (in the span of plaquette boundaries).");
            }
        } catch (const std::invalid_argument &ex) {
            std::string what = ex.what();
            if (what.rfind("Invalid lattice", 0) == 0) {
                throw;
            }
            fail("loop '" + loop.name + "': " + what);
        }
    }
}

bool ColoredLattice::is_marked() const {
    return marks_[0] != VertexMark::NONE;
}

const Loop &ColoredLattice::loop(std::string_view name) const {
    for (const auto &l : loops_) {
        if (l.name == name) {
            return l;
        }
    }
    throw std::invalid_argument("The lattice has no loop named '" + std::string(name) + "'.");
}

std::optional<size_t> ColoredLattice::edge_between(size_t v, size_t u) const {
    for (size_t e : incident_[v]) {
        if (edges_[e].v == u || edges_[e].u == u) {
            return e;
        }
    }
    return std::nullopt;
}

std::vector<size_t> ColoredLattice::neighbor_plaquettes(size_t f) const {
    std::set<size_t> out;
    for (size_t e : plaquette_edges_[f]) {
        for (size_t g : edge_plaquettes_[e]) {
            if (g != f) {
                out.insert(g);
            }
        }
    }
    return {out.begin(), out.end()};
}

LatticeCombinatorics ColoredLattice::combinatorics() const {
    LatticeCombinatorics r{};
    r.num_vertices = num_vertices();
    r.num_edges = num_edges();
    r.num_plaquettes = num_plaquettes();
    r.face_size = face_size_;
    r.genus = genus_;
    r.edges_per_color = {0, 0, 0};
    r.plaquettes_per_color = {0, 0, 0};
    for (const auto &e : edges_) {
        r.edges_per_color[(int)e.color]++;
    }
    for (const auto &f : plaquettes_) {
        r.plaquettes_per_color[(int)f.color]++;
    }
    size_t n = r.num_vertices;
    bool ok = 2 * r.num_edges == 3 * n && r.num_plaquettes * face_size_ == 3 * n;
    ok = ok && (int64_t)n - (int64_t)r.num_edges + (int64_t)r.num_plaquettes == 2 - 2 * (int64_t)genus_;
    ok = ok && 12 * ((int64_t)genus_ - 1) == (int64_t)r.num_plaquettes * ((int64_t)face_size_ - 6);
    for (Color c : ALL_COLORS) {
        ok = ok && 2 * r.edges_per_color[(int)c] == n;
    }
    r.identities_hold = ok;
    return r;
}

bool ColoredLattice::operator==(const ColoredLattice &other) const {
    return face_size_ == other.face_size_ && genus_ == other.genus_ && marks_ == other.marks_ &&
           edges_ == other.edges_ && plaquettes_ == other.plaquettes_ && loops_ == other.loops_;
}

std::vector<size_t> floqudit::loop_vertices(const ColoredLattice &lat, const std::vector<size_t> &edges) {
    if (edges.size() < 3) {
        throw std::invalid_argument("A closed edge cycle needs at least three edges.");
    }
    for (size_t e : edges) {
        if (e >= lat.num_edges()) {
            std::stringstream ss;
            ss << "Edge " << e << " does not exist.";
            throw std::invalid_argument(ss.str());
        }
    }
    const Edge &first = lat.edge(edges.front());
    const Edge &last = lat.edge(edges.back());
    size_t start;
    if (first.v == last.v || first.v == last.u) {
        start = first.v;
    } else if (first.u == last.v || first.u == last.u) {
        start = first.u;
    } else {
        throw std::invalid_argument("Edge chain is open: its last edge does not meet its first edge.");
    }
    std::vector<size_t> vertices;
    size_t cur = start;
    for (size_t k = 0; k < edges.size(); k++) {
        const Edge &ed = lat.edge(edges[k]);
        vertices.push_back(cur);
        if (ed.v == cur) {
            cur = ed.u;
        } else if (ed.u == cur) {
            cur = ed.v;
        } else {
            std::stringstream ss;
            ss << "Edge chain is open: edge " << edges[k] << " does not continue from vertex " << cur << ".";
            throw std::invalid_argument(ss.str());
        }
    }
    if (cur != start) {
        throw std::invalid_argument("Edge chain is open: the walk does not return to its start.");
    }
    return vertices;
}

bool floqudit::is_nontrivial_loop(const ColoredLattice &lat, const std::vector<size_t> &edges) {
    loop_vertices(lat, edges);
    GfMatrix m(2, 0, lat.num_edges());
    for (size_t f = 0; f < lat.num_plaquettes(); f++) {
        std::vector<Residue> row(lat.num_edges(), 0);
        for (size_t e : lat.plaquette_edges(f)) {
            row[e] ^= 1;
        }
        m.append_row(row);
    }
    size_t base = gf_rank(m);
    std::vector<Residue> row(lat.num_edges(), 0);
    for (size_t e : edges) {
        row[e] ^= 1;
    }
    m.append_row(row);
    return gf_rank(m) > base;
}

ColoredLattice floqudit::build_torus_honeycomb(size_t l1, size_t l2) {
    if (l1 < 2 || l2 < 2 || l1 * l2 < 4) {
        std::stringstream ss;
        ss << "Degenerate torus size " << l1 << "x" << l2 << ".";
        throw std::invalid_argument(ss.str());
    }
    int64_t L1 = (int64_t)l1;
    int64_t L2 = (int64_t)l2;
    int64_t t = -1;
    for (int64_t cand = L2 / 2 - 1; cand <= L2 / 2 + 1; cand++) {
        if (cand >= 0 && ((cand - 2 * L2) % 3 + 3) % 3 == 0) {
            t = cand;
            break;
        }
    }
    auto hex = [&](int64_t q, int64_t r) -> size_t {
        int64_t rr = ((r % L2) + L2) % L2;
        int64_t k = (r - rr) / L2;
        int64_t qq = (((q + k * t) % L1) + L1) % L1;
        return (size_t)(rr * L1 + qq);
    };
    auto hex_color = [&](size_t h) {
        int64_t q = (int64_t)(h % l1);
        int64_t r = (int64_t)(h / l1);
        return (Color)((q + 2 * r) % 3);
    };
    auto A = [&](int64_t q, int64_t r) {
        return 2 * hex(q, r);
    };
    auto B = [&](int64_t q, int64_t r) {
        return 2 * hex(q, r) + 1;
    };

    size_t nh = l1 * l2;
    std::vector<VertexMark> marks(2 * nh);
    for (size_t h = 0; h < nh; h++) {
        marks[2 * h] = VertexMark::CIRCLE;
        marks[2 * h + 1] = VertexMark::SQUARE;
    }

    struct Pending {
        size_t a;
        size_t b;
        size_t face1;
        size_t face2;
        EdgeDirection dir;
    };
    std::vector<Pending> pending;
    for (int64_t r = 0; r < L2; r++) {
        for (int64_t q = 0; q < L1; q++) {
            pending.push_back({A(q, r), B(q, r + 1), hex(q, r), hex(q, r + 1), EdgeDirection::X});
            pending.push_back({A(q, r), B(q - 1, r + 1), hex(q, r), hex(q - 1, r + 1), EdgeDirection::Y});
            pending.push_back({A(q, r), B(q - 1, r + 2), hex(q - 1, r + 1), hex(q, r + 1), EdgeDirection::Z});
        }
    }
    std::sort(pending.begin(), pending.end(), [](const Pending &x, const Pending &y) {
        return ordered(x.a, x.b) < ordered(y.a, y.b);
    });
    std::vector<Edge> edges;
    for (const auto &pe : pending) {
        Color c1 = hex_color(pe.face1);
        Color c2 = hex_color(pe.face2);
        if (c1 == c2) {
            std::stringstream ss;
            ss << "Torus " << l1 << "x" << l2 << " cannot be three-colored with hexagon colors (i + 2j) mod 3: "
               << "hexagons " << pe.face1 << " and " << pe.face2 << " are adjacent and both " << color_name(c1) << ".";
            throw std::invalid_argument(ss.str());
        }
        edges.push_back({pe.a, pe.b, third_color(c1, c2), pe.dir});
    }

    std::vector<Plaquette> faces;
    for (int64_t r = 0; r < L2; r++) {
        for (int64_t q = 0; q < L1; q++) {
            faces.push_back(
                {hex_color(hex(q, r)),
                 {A(q, r), B(q, r + 1), A(q + 1, r - 1), B(q, r), A(q, r - 1), B(q - 1, r + 1)}});
        }
    }

    auto find_edge = [&](size_t a, size_t b) -> size_t {
        auto key = ordered(a, b);
        auto it = std::lower_bound(edges.begin(), edges.end(), key, [](const Edge &e, const std::pair<size_t, size_t> &k) {
            return ordered(e.v, e.u) < k;
        });
        if (it == edges.end() || ordered(it->v, it->u) != key) {
            throw std::logic_error("Torus construction lost an edge.");
        }
        return (size_t)(it - edges.begin());
    };

    Loop horizontal{"horizontal", {}};
    for (int64_t q = 0; q < L1; q++) {
        horizontal.edges.push_back(find_edge(A(q, -1), B(q, 0)));
        horizontal.edges.push_back(find_edge(B(q, 0), A(q + 1, -1)));
    }
    Loop vertical{"vertical", {}};
    int64_t q = 0;
    int64_t r = 0;
    for (int64_t k = 0; k < L2; k++) {
        bool shift = ((k + 1) * t) / L2 > (k * t) / L2;
        size_t mid = B(q - 1, r + 2);
        vertical.edges.push_back(find_edge(A(q, r), mid));
        int64_t nq = shift ? q - 1 : q;
        vertical.edges.push_back(find_edge(mid, A(nq, r + 1)));
        q = nq;
        r++;
    }

    return ColoredLattice(6, 1, std::move(marks), std::move(edges), std::move(faces), {horizontal, vertical});
}

ColoredLattice floqudit::parse_lattice(std::string_view text) {
    auto lines = split_content_lines(text);
    if (lines.empty()) {
        throw std::invalid_argument("Lattice text is missing its 'p=<p> genus=<g>' header.");
    }
    auto header = split_tokens(lines[0].text);
    if (header.size() != 2) {
        std::stringstream ss;
        ss << "Line " << lines[0].number << ": expected header 'p=<p> genus=<g>'.";
        throw std::invalid_argument(ss.str());
    }
    size_t p = (size_t)parse_key_value(header[0], "p", lines[0].number);
    size_t genus = (size_t)parse_key_value(header[1], "genus", lines[0].number);

    std::vector<VertexMark> marks;
    std::vector<Edge> edges;
    std::vector<Plaquette> faces;
    std::vector<Loop> loops;
    for (size_t k = 1; k < lines.size(); k++) {
        size_t ln = lines[k].number;
        auto tok = split_tokens(lines[k].text);
        auto bad = [&](const std::string &what) {
            std::stringstream ss;
            ss << "Line " << ln << ": " << what;
            throw std::invalid_argument(ss.str());
        };
        if (tok[0] == "vertex") {
            if (tok.size() < 2 || tok.size() > 3) {
                bad("expected 'vertex <id> [o|s]'.");
            }
            size_t id = (size_t)parse_uint(tok[1], ln);
            if (id != marks.size()) {
                bad("vertex ids must be declared in order 0, 1, 2, ...");
            }
            VertexMark m = VertexMark::NONE;
            if (tok.size() == 3) {
                if (tok[2] == "o") {
                    m = VertexMark::CIRCLE;
                } else if (tok[2] == "s") {
                    m = VertexMark::SQUARE;
                } else {
                    bad("vertex mark must be 'o' or 's'.");
                }
            }
            marks.push_back(m);
        } else if (tok[0] == "edge") {
            if (tok.size() < 4 || tok.size() > 5) {
                bad("expected 'edge <v> <u> <color> [x|y|z]'.");
            }
            Edge e{(size_t)parse_uint(tok[1], ln), (size_t)parse_uint(tok[2], ln), Color::GREEN, EdgeDirection::NONE};
            try {
                e.color = parse_color(tok[3]);
            } catch (const std::invalid_argument &ex) {
                bad(ex.what());
            }
            if (tok.size() == 5) {
                if (tok[4] == "x") {
                    e.direction = EdgeDirection::X;
                } else if (tok[4] == "y") {
                    e.direction = EdgeDirection::Y;
                } else if (tok[4] == "z") {
                    e.direction = EdgeDirection::Z;
                } else {
                    bad("edge direction must be x, y or z.");
                }
            }
            edges.push_back(e);
        } else if (tok[0] == "face") {
            if (tok.size() < 3) {
                bad("expected 'face <color> <v1> ... <vp>'.");
            }
            Plaquette f{Color::GREEN, {}};
            try {
                f.color = parse_color(tok[1]);
            } catch (const std::invalid_argument &ex) {
                bad(ex.what());
            }
            for (size_t j = 2; j < tok.size(); j++) {
                f.boundary.push_back((size_t)parse_uint(tok[j], ln));
            }
            faces.push_back(std::move(f));
        } else if (tok[0] == "loop") {
            if (tok.size() < 3) {
                bad("expected 'loop <name> <edge> <edge> ...'.");
            }
            Loop l{std::string(tok[1]), {}};
            for (size_t j = 2; j < tok.size(); j++) {
                l.edges.push_back((size_t)parse_uint(tok[j], ln));
            }
            loops.push_back(std::move(l));
        } else {
            bad("unknown record '" + std::string(tok[0]) + "'.");
        }
    }
    return ColoredLattice(p, genus, std::move(marks), std::move(edges), std::move(faces), std::move(loops));
}

std::string floqudit::format_lattice(const ColoredLattice &lat) {
    std::stringstream ss;
    ss << "# floqudit lattice: n=" << lat.num_vertices() << " edges=" << lat.num_edges()
       << " plaquettes=" << lat.num_plaquettes() << "\n";
    ss << "p=" << lat.face_size() << " genus=" << lat.genus() << "\n";
    for (size_t v = 0; v < lat.num_vertices(); v++) {
        ss << "vertex " << v;
        if (lat.mark(v) != VertexMark::NONE) {
            ss << " " << mark_token(lat.mark(v));
        }
        ss << "\n";
    }
    for (const auto &e : lat.edges()) {
        ss << "edge " << e.v << " " << e.u << " " << color_name(e.color);
        if (e.direction != EdgeDirection::NONE) {
            ss << " " << direction_token(e.direction);
        }
        ss << "\n";
    }
    for (const auto &f : lat.plaquettes()) {
        ss << "face " << color_name(f.color);
        for (size_t v : f.boundary) {
            ss << " " << v;
        }
        ss << "\n";
    }
    for (const auto &l : lat.loops()) {
        ss << "loop " << l.name;
        for (size_t e : l.edges) {
            ss << " " << e;
        }
        ss << "\n";
    }
    return ss.str();
}

ColoredLattice floqudit::load_lattice(const std::string &path) {
    return parse_lattice(read_file(path));
}

void floqudit::save_lattice(const ColoredLattice &lat, const std::string &path) {
    write_file(path, format_lattice(lat));
}
