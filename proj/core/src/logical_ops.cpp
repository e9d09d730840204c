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

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

using namespace floqudit;

namespace {

void require_logical_round(size_t round) {
    if (round + 1 < INITIALIZATION_ROUNDS) {
        std::stringstream ss;
        ss << "Logical operators need a round >= " << INITIALIZATION_ROUNDS - 1 << " but got round " << round << ".";
        throw std::invalid_argument(ss.str());
    }
}

std::pair<size_t, size_t> sorted_endpoints(const Edge &e) {
    return {std::min(e.v, e.u), std::max(e.v, e.u)};
}

/// Weight of p * q^e ignoring phases.
size_t product_weight(const PauliOperator &p, const PauliOperator &q, Residue e, uint32_t d) {
    size_t w = 0;
    for (size_t k = 0; k < p.num_qudits(); k++) {
        Residue x = mod_add(p.x(k), mod_mul(q.x(k), e, d), d);
        Residue z = mod_add(p.z(k), mod_mul(q.z(k), e, d), d);
        w += x != 0 || z != 0;
    }
    return w;
}

PauliOperator scaled_product(const PauliOperator &p, const PauliOperator &q, Residue e) {
    return (p * power(q, e)).with_phase(0);
}

}  // namespace

const char *floqudit::loop_operator_kind_name(LoopOperatorKind kind) {
    return kind == LoopOperatorKind::TYPE1 ? "type-1" : "type-2";
}

LoopOperator floqudit::build_loop_operator(
    const ColoredLattice &lat, const CheckAssignment &checks, const Loop &loop, size_t round, LoopOperatorKind kind) {
    require_logical_round(round);
    if (!is_nontrivial_loop(lat, loop.edges)) {
        std::stringstream ss;
        ss << "Loop '" << loop.name << "' is contractible.";
        throw std::invalid_argument(ss.str());
    }
    uint32_t d = checks.dim();
    Color l = round_color(round);
    Color sigma = kind == LoopOperatorKind::TYPE1 ? l : next_color(l);
    Color pi = kind == LoopOperatorKind::TYPE1 ? next_color(l) : l;
    std::vector<size_t> verts = loop_vertices(lat, loop.edges);
    size_t len = loop.edges.size();

    std::vector<size_t> positions;
    for (size_t k = 0; k < len; k++) {
        if (lat.edge(loop.edges[k]).color == sigma) {
            positions.push_back(k);
        }
    }
    if (positions.empty()) {
        std::stringstream ss;
        ss << "Loop '" << loop.name << "' has no " << color_name(sigma) << " edge.";
        throw std::invalid_argument(ss.str());
    }
    size_t seed = 0;
    for (size_t i = 1; i < positions.size(); i++) {
        if (sorted_endpoints(lat.edge(loop.edges[positions[i]])) <
            sorted_endpoints(lat.edge(loop.edges[positions[seed]]))) {
            seed = i;
        }
    }

    auto c_at = [&](size_t w) {
        return commutation(checks.vertex_pauli(lat, w, sigma), checks.vertex_pauli(lat, w, pi), d);
    };
    size_t m = positions.size();
    std::vector<Residue> beta(m, 0);
    beta[seed] = 1;
    Residue carried = 1;
    for (size_t step = 0; step < m; step++) {
        size_t i = (seed + step) % m;
        size_t j = (i + 1) % m;
        size_t exit_vertex = verts[(positions[i] + 1) % len];
        size_t entry_vertex = verts[positions[j]];
        Residue num = c_at(exit_vertex);
        Residue den = c_at(entry_vertex);
        if (den == 0) {
            std::stringstream ss;
            ss << "Vertex " << entry_vertex << " has commuting " << color_name(sigma) << " and " << color_name(pi)
               << " factors.";
            throw std::invalid_argument(ss.str());
        }
        carried = mod_neg(mod_mul(mod_mul(carried, num, d), mod_inverse(den, d), d), d);
        if (j == seed) {
            if (carried != 1) {
                std::stringstream ss;
                ss << "Exponent recursion on loop '" << loop.name << "' does not close: returns " << carried
                   << " instead of 1.";
                throw std::invalid_argument(ss.str());
            }
        } else {
            beta[j] = carried;
        }
    }

    LoopOperator out{loop.name, kind, round, l, {}, beta, PauliOperator(d, lat.num_vertices())};
    for (size_t i = 0; i < m; i++) {
        size_t e = loop.edges[positions[i]];
        const Edge &ed = lat.edge(e);
        out.support_edges.push_back(e);
        PauliOperator piece = embed_pair(
            checks.vertex_pauli(lat, ed.v, pi), ed.v, checks.vertex_pauli(lat, ed.u, pi), ed.u, lat.num_vertices(), d);
        out.op *= power(piece, beta[i]);
    }
    out.op = out.op.with_phase(0);
    return out;
}

bool floqudit::verify_logical(const GeneratorSet &isg, const PauliOperator &l) {
    for (const PauliOperator &g : isg.generators()) {
        if (commutation(g, l) != 0) {
            return false;
        }
    }
    return !contains_up_to_phase(isg, l).has_value();
}

LogicalPair floqudit::pair_and_normalize(const PauliOperator &q1, const PauliOperator &q2, size_t index) {
    Residue c = commutation(q1, q2);
    if (c == 0) {
        throw std::invalid_argument("Cannot pair commuting operators " + q1.str() + " and " + q2.str() + ".");
    }
    Residue a = mod_inverse(c, q1.dim());
    return {power(q1, a).with_phase(0), q2.with_phase(0), index, a};
}

std::vector<LoopOperator> floqudit::loop_operators(
    const ColoredLattice &lat, const CheckAssignment &checks, size_t round) {
    std::vector<LoopOperator> out;
    for (const Loop &loop : lat.loops()) {
        out.push_back(build_loop_operator(lat, checks, loop, round, LoopOperatorKind::TYPE1));
        out.push_back(build_loop_operator(lat, checks, loop, round, LoopOperatorKind::TYPE2));
    }
    return out;
}

std::vector<LogicalPair> floqudit::logical_pairs(const ColoredLattice &lat, const CheckAssignment &checks, size_t round) {
    std::vector<LoopOperator> ops = loop_operators(lat, checks, round);
    size_t m = ops.size();
    std::vector<std::vector<Residue>> c(m, std::vector<Residue>(m, 0));
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            c[i][j] = commutation(ops[i].op, ops[j].op);
        }
    }

    std::vector<std::pair<size_t, size_t>> chosen;
    std::vector<bool> used(m, false);
    std::function<bool()> search = [&]() -> bool {
        size_t i = 0;
        while (i < m && used[i]) {
            i++;
        }
        if (i == m) {
            return true;
        }
        for (size_t j = i + 1; j < m; j++) {
            if (used[j] || c[i][j] == 0) {
                continue;
            }
            bool compatible = true;
            for (const auto &[a, b] : chosen) {
                if (c[i][a] || c[i][b] || c[j][a] || c[j][b]) {
                    compatible = false;
                    break;
                }
            }
            if (!compatible) {
                continue;
            }
            used[i] = used[j] = true;
            chosen.push_back({i, j});
            if (search()) {
                return true;
            }
            chosen.pop_back();
            used[i] = used[j] = false;
        }
        return false;
    };
    if (m == 0 || m % 2 != 0 || !search()) {
        std::stringstream ss;
        ss << "The " << m << " loop operators of round " << round << " admit no conjugate pairing.";
        throw std::invalid_argument(ss.str());
    }
    std::vector<LogicalPair> out;
    for (size_t k = 0; k < chosen.size(); k++) {
        out.push_back(pair_and_normalize(ops[chosen[k].first].op, ops[chosen[k].second].op, k + 1));
    }
    return out;
}

std::vector<PauliOperator> floqudit::local_stabilizer_generators(
    const ColoredLattice &lat, const CheckAssignment &checks, size_t round) {
    std::vector<PauliOperator> out;
    Color l = round_color(round);
    for (size_t e = 0; e < lat.num_edges(); e++) {
        if (lat.edge(e).color == l) {
            out.push_back(checks.check_operator(e));
        }
    }
    for (size_t f = 0; f < lat.num_plaquettes(); f++) {
        if (plaquette_formation_round(lat.plaquette(f).color) <= round) {
            out.push_back(expected_plaquette(lat, checks, f));
        }
    }
    return out;
}

size_t floqudit::distance_upper_bound(
    const std::vector<PauliOperator> &stabilizers, const std::vector<PauliOperator> &logicals, size_t depth) {
    if (logicals.empty()) {
        throw std::invalid_argument("Distance bound needs at least one logical operator.");
    }
    size_t best = SIZE_MAX;
    for (const PauliOperator &logical : logicals) {
        uint32_t d = logical.dim();
        PauliOperator cur = logical.with_phase(0);
        size_t w = weight(cur);
        while (true) {
            size_t best_w = w;
            PauliOperator best_op = cur;
            for (size_t i = 0; i < stabilizers.size(); i++) {
                for (Residue e = 1; e < d; e++) {
                    size_t cand = product_weight(cur, stabilizers[i], e, d);
                    if (cand < best_w) {
                        best_w = cand;
                        best_op = scaled_product(cur, stabilizers[i], e);
                    }
                }
            }
            if (best_w == w && depth >= 2) {
                for (size_t i = 0; i < stabilizers.size(); i++) {
                    for (Residue e = 1; e < d; e++) {
                        PauliOperator first = scaled_product(cur, stabilizers[i], e);
                        for (size_t j = i + 1; j < stabilizers.size(); j++) {
                            for (Residue f = 1; f < d; f++) {
                                size_t cand = product_weight(first, stabilizers[j], f, d);
                                if (cand < best_w) {
                                    best_w = cand;
                                    best_op = scaled_product(first, stabilizers[j], f);
                                }
                            }
                        }
                    }
                }
            }
            if (best_w >= w) {
                break;
            }
            cur = best_op;
            w = best_w;
        }
        best = std::min(best, w);
    }
    return best;
}

size_t floqudit::distance_upper_bound(
    const ColoredLattice &lat, const CheckAssignment &checks, size_t round, size_t depth) {
    std::vector<PauliOperator> logicals;
    for (const LoopOperator &op : loop_operators(lat, checks, round)) {
        logicals.push_back(op.op);
    }
    return distance_upper_bound(local_stabilizer_generators(lat, checks, round), logicals, depth);
}

std::optional<size_t> floqudit::brute_force_distance(
    const IsgTrace &trace, size_t round, size_t w_max, const BruteForceLimits &limits) {
    uint32_t d = trace.dim;
    size_t n = trace.num_qudits;
    if (n > limits.max_qudits) {
        std::stringstream ss;
        ss << "Brute-force distance is limited to " << limits.max_qudits << " qudits but the code has " << n << ".";
        throw std::invalid_argument(ss.str());
    }
    if (std::find(limits.dims.begin(), limits.dims.end(), d) == limits.dims.end()) {
        std::stringstream ss;
        ss << "Brute-force distance is not enabled for D=" << d << ".";
        throw std::invalid_argument(ss.str());
    }
    const RoundRecord &rec = trace.at(round);
    const std::vector<PauliOperator> &gens = rec.isg.generators();
    const CanonicalTableau &tab = rec.canonical;

    auto in_group = [&](std::vector<Residue> vec) {
        for (size_t r = 0; r < tab.rows.size(); r++) {
            size_t pc = tab.pivots[r];
            if (vec[pc] == 0) {
                continue;
            }
            Residue coef = mod_mul(vec[pc], mod_inverse(tab.rows[r].symplectic(pc), d), d);
            for (size_t col = 0; col < 2 * n; col++) {
                vec[col] = mod_sub(vec[col], mod_mul(coef, tab.rows[r].symplectic(col), d), d);
            }
        }
        return std::all_of(vec.begin(), vec.end(), [](Residue v) { return v == 0; });
    };

    std::vector<SingleQuditPauli> singles;
    for (Residue x = 0; x < d; x++) {
        for (Residue z = 0; z < d; z++) {
            if (x != 0 || z != 0) {
                singles.push_back({x, z});
            }
        }
    }

    for (size_t w = 1; w <= std::min(w_max, n); w++) {
        std::vector<size_t> qs(w);
        for (size_t i = 0; i < w; i++) {
            qs[i] = i;
        }
        while (true) {
            std::vector<size_t> choice(w, 0);
            while (true) {
                bool commutes = true;
                for (const PauliOperator &g : gens) {
                    Residue c = 0;
                    for (size_t i = 0; i < w; i++) {
                        const SingleQuditPauli &s = singles[choice[i]];
                        c = mod_add(c, commutation(g.factor(qs[i]), s, d), d);
                    }
                    if (c != 0) {
                        commutes = false;
                        break;
                    }
                }
                if (commutes) {
                    std::vector<Residue> vec(2 * n, 0);
                    for (size_t i = 0; i < w; i++) {
                        vec[qs[i]] = singles[choice[i]].x;
                        vec[n + qs[i]] = singles[choice[i]].z;
                    }
                    if (!in_group(vec)) {
                        return w;
                    }
                }
                size_t k = 0;
                while (k < w && ++choice[k] == singles.size()) {
                    choice[k] = 0;
                    k++;
                }
                if (k == w) {
                    break;
                }
            }
            // Next combination of w qudits.
            size_t i = w;
            while (i > 0 && qs[i - 1] == n - w + i - 1) {
                i--;
            }
            if (i == 0) {
                break;
            }
            qs[i - 1]++;
            for (size_t j = i; j < w; j++) {
                qs[j] = qs[j - 1] + 1;
            }
        }
    }
    return std::nullopt;
}
