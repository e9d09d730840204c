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

#include "floqudit/floquet_code.hpp"

#include <json.hpp>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "floqudit/gf_linear.hpp"
#include "text_util.hpp"

using namespace floqudit;

namespace {

constexpr size_t MAX_LISTED_VIOLATIONS = 32;

void add_violation(ConditionReport &report, size_t condition, const std::string &message) {
    report.passed[condition] = false;
    if (report.violations[condition].size() < MAX_LISTED_VIOLATIONS) {
        report.violations[condition].push_back(message);
    }
}

std::string pauli_name(SingleQuditPauli p) {
    std::stringstream ss;
    ss << "X^" << p.x << " Z^" << p.z;
    return ss.str();
}

/// Fisher-Yates with the library's exact uniform draw.
void shuffle_in_place(std::vector<size_t> &items, std::mt19937_64 &rng) {
    for (size_t k = items.size(); k > 1; k--) {
        size_t j = (size_t)uniform_residue(rng, (uint32_t)k);
        std::swap(items[k - 1], items[j]);
    }
}

}  // namespace

CheckAssignment::CheckAssignment(const ColoredLattice &lat, uint32_t dim, std::vector<EdgeCheck> checks)
    : dim_(dim), num_qudits_(lat.num_vertices()), checks_(std::move(checks)) {
    validate_prime_dimension(dim);
    if (checks_.size() != lat.num_edges()) {
        std::stringstream ss;
        ss << "Check assignment has " << checks_.size() << " checks but the lattice has " << lat.num_edges()
           << " edges; every edge needs exactly one check.";
        throw std::invalid_argument(ss.str());
    }
    for (size_t e = 0; e < checks_.size(); e++) {
        EdgeCheck &c = checks_[e];
        const Edge &ed = lat.edge(e);
        bool same = c.v == ed.v && c.u == ed.u;
        bool flipped = c.v == ed.u && c.u == ed.v;
        if (!same && !flipped) {
            std::stringstream ss;
            ss << "Check " << e << " acts on (" << c.v << ", " << c.u << ") but edge " << e << " joins (" << ed.v << ", "
               << ed.u << ").";
            throw std::invalid_argument(ss.str());
        }
        c.at_v = {c.at_v.x % dim, c.at_v.z % dim};
        c.at_u = {c.at_u.x % dim, c.at_u.z % dim};
        if (c.at_v.is_identity() || c.at_u.is_identity()) {
            std::stringstream ss;
            ss << "Check on edge " << e << " has an identity factor.";
            throw std::invalid_argument(ss.str());
        }
    }
}

SingleQuditPauli CheckAssignment::factor_at(size_t e, size_t w) const {
    const EdgeCheck &c = checks_[e];
    if (c.v == w) {
        return c.at_v;
    }
    if (c.u == w) {
        return c.at_u;
    }
    std::stringstream ss;
    ss << "Check " << e << " does not act on vertex " << w << ".";
    throw std::invalid_argument(ss.str());
}

SingleQuditPauli CheckAssignment::vertex_pauli(const ColoredLattice &lat, size_t v, Color c) const {
    return factor_at(lat.edge_at(v, c), v);
}

PauliOperator CheckAssignment::check_operator(size_t e) const {
    const EdgeCheck &c = checks_[e];
    return embed_pair(c.at_v, c.v, c.at_u, c.u, num_qudits_, dim_);
}

PauliOperator floqudit::check_operator(const CheckAssignment &checks, size_t e) {
    return checks.check_operator(e);
}

CheckAssignment floqudit::parse_check_assignment(const ColoredLattice &lat, std::string_view text) {
    auto lines = split_content_lines(text);
    if (lines.empty()) {
        throw std::invalid_argument("Check-assignment text is missing its 'D=<d>' header.");
    }
    auto header = split_tokens(lines[0].text);
    if (header.size() != 1) {
        std::stringstream ss;
        ss << "Line " << lines[0].number << ": expected header 'D=<d>'.";
        throw std::invalid_argument(ss.str());
    }
    uint32_t dim = (uint32_t)parse_key_value(header[0], "D", lines[0].number);
    validate_prime_dimension(dim);
    std::vector<std::optional<EdgeCheck>> slots(lat.num_edges());
    for (size_t k = 1; k < lines.size(); k++) {
        size_t ln = lines[k].number;
        auto tok = split_tokens(lines[k].text);
        if (tok.size() != 8 || tok[0] != "check") {
            std::stringstream ss;
            ss << "Line " << ln << ": expected 'check <v> <u> <color> <a_v> <b_v> <a_u> <b_u>'.";
            throw std::invalid_argument(ss.str());
        }
        size_t v = (size_t)parse_uint(tok[1], ln);
        size_t u = (size_t)parse_uint(tok[2], ln);
        if (v >= lat.num_vertices() || u >= lat.num_vertices()) {
            std::stringstream ss;
            ss << "Line " << ln << ": vertex out of range.";
            throw std::invalid_argument(ss.str());
        }
        Color color = parse_color(tok[3]);
        auto e = lat.edge_between(v, u);
        if (!e.has_value() || lat.edge(*e).color != color) {
            std::stringstream ss;
            ss << "Line " << ln << ": there is no " << color_name(color) << " edge between " << v << " and " << u << ".";
            throw std::invalid_argument(ss.str());
        }
        if (slots[*e].has_value()) {
            std::stringstream ss;
            ss << "Line " << ln << ": edge " << *e << " already has a check.";
            throw std::invalid_argument(ss.str());
        }
        EdgeCheck c{
            v,
            u,
            {mod_reduce(parse_int(tok[4], ln), dim), mod_reduce(parse_int(tok[5], ln), dim)},
            {mod_reduce(parse_int(tok[6], ln), dim), mod_reduce(parse_int(tok[7], ln), dim)}};
        slots[*e] = c;
    }
    std::vector<EdgeCheck> checks;
    for (size_t e = 0; e < slots.size(); e++) {
        if (!slots[e].has_value()) {
            std::stringstream ss;
            ss << "Edge " << e << " (" << lat.edge(e).v << ", " << lat.edge(e).u << ") has no check.";
            throw std::invalid_argument(ss.str());
        }
        checks.push_back(*slots[e]);
    }
    return CheckAssignment(lat, dim, std::move(checks));
}

std::string floqudit::format_check_assignment(const ColoredLattice &lat, const CheckAssignment &checks) {
    std::stringstream ss;
    ss << "D=" << checks.dim() << "\n";
    for (size_t e = 0; e < checks.size(); e++) {
        const EdgeCheck &c = checks.check(e);
        ss << "check " << c.v << " " << c.u << " " << color_name(lat.edge(e).color) << " " << c.at_v.x << " " << c.at_v.z
           << " " << c.at_u.x << " " << c.at_u.z << "\n";
    }
    return ss.str();
}

ConditionReport floqudit::validate_conditions(const ColoredLattice &lat, const CheckAssignment &checks) {
    if (checks.num_qudits() != lat.num_vertices() || checks.size() != lat.num_edges()) {
        throw std::invalid_argument("Check assignment does not cover this lattice.");
    }
    uint32_t d = checks.dim();
    size_t n = lat.num_vertices();
    ConditionReport report;

    for (size_t e = 0; e < lat.num_edges(); e++) {
        const Edge &ed = lat.edge(e);
        Color l = ed.color;
        Color other = previous_color(l);
        Residue cv = commutation(checks.vertex_pauli(lat, ed.v, l), checks.vertex_pauli(lat, ed.v, other), d);
        Residue cu = commutation(checks.vertex_pauli(lat, ed.u, l), checks.vertex_pauli(lat, ed.u, other), d);
        if (mod_add(cv, cu, d) != 0) {
            std::stringstream ss;
            ss << color_name(l) << " edge " << e << " (" << ed.v << ", " << ed.u << "): c(P_" << color_name(l) << ", P_"
               << color_name(other) << ") is " << cv << " at " << ed.v << " and " << cu << " at " << ed.u
               << ", which are not negatives";
            add_violation(report, 0, ss.str());
        }
    }

    for (size_t v = 0; v < n; v++) {
        for (size_t i = 0; i < 3; i++) {
            for (size_t j = i + 1; j < 3; j++) {
                Color a = ALL_COLORS[i];
                Color b = ALL_COLORS[j];
                SingleQuditPauli pa = checks.vertex_pauli(lat, v, a);
                SingleQuditPauli pb = checks.vertex_pauli(lat, v, b);
                if (commutation(pa, pb, d) == 0) {
                    std::stringstream ss;
                    ss << "vertex " << v << ": " << color_name(a) << " factor " << pauli_name(pa) << " commutes with "
                       << color_name(b) << " factor " << pauli_name(pb);
                    add_violation(report, 1, ss.str());
                }
            }
        }
    }

    std::vector<PauliOperator> vertex_products;
    for (size_t v = 0; v < n; v++) {
        PauliOperator prod(d, 1);
        for (Color c : ALL_COLORS) {
            prod *= embed(checks.vertex_pauli(lat, v, c), 0, 1, d);
        }
        vertex_products.push_back(prod);
    }
    for (size_t e = 0; e < lat.num_edges(); e++) {
        const Edge &ed = lat.edge(e);
        const PauliOperator &pv = vertex_products[ed.v];
        const PauliOperator &pu = vertex_products[ed.u];
        Residue phase = mod_add(pv.phase(), pu.phase(), d);
        if (!pv.is_scalar() || !pu.is_scalar() || phase != 0) {
            std::stringstream ss;
            ss << "edge " << e << " (" << ed.v << ", " << ed.u << "): product of the three colors' factors is "
               << pv.str() << " at " << ed.v << " and " << pu.str() << " at " << ed.u << " (combined phase w^" << phase
               << "), not the identity";
            add_violation(report, 2, ss.str());
        }
    }

    for (size_t e = 0; e < lat.num_edges(); e++) {
        if (!has_order_dividing_dimension(checks.check_operator(e))) {
            std::stringstream ss;
            ss << "check on edge " << e << " (" << checks.check_operator(e) << ") has M^D != I";
            if (report.unmeasurable.size() < MAX_LISTED_VIOLATIONS) {
                report.unmeasurable.push_back(ss.str());
            }
        }
    }
    return report;
}

std::vector<size_t> floqudit::measurement_order(const ColoredLattice &lat, Color c) {
    std::vector<size_t> order;
    Color host = next_color(c);
    for (size_t f = 0; f < lat.num_plaquettes(); f++) {
        if (lat.plaquette(f).color != host) {
            continue;
        }
        for (size_t e : lat.plaquette_edges(f)) {
            if (lat.edge(e).color == c) {
                order.push_back(e);
            }
        }
    }
    return order;
}

const RoundRecord &IsgTrace::at(size_t round) const {
    if (round >= rounds.size()) {
        std::stringstream ss;
        ss << "Round " << round << " is beyond the " << rounds.size() << " recorded rounds.";
        throw std::invalid_argument(ss.str());
    }
    return rounds[round];
}

IsgTrace floqudit::run_schedule(
    const ColoredLattice &lat, const CheckAssignment &checks, size_t rounds, const ScheduleOptions &options) {
    ConditionReport conditions = validate_conditions(lat, checks);
    if (!conditions.ok()) {
        std::stringstream ss;
        ss << "Check conditions fail; refusing to run the schedule.";
        for (size_t k = 0; k < 3; k++) {
            if (!conditions.violations[k].empty()) {
                ss << " Condition " << k + 1 << ": " << conditions.violations[k][0] << ".";
            }
        }
        if (!conditions.unmeasurable.empty()) {
            ss << " " << conditions.unmeasurable[0] << ".";
        }
        throw std::invalid_argument(ss.str());
    }
    uint32_t d = checks.dim();
    size_t n = lat.num_vertices();
    IsgTrace trace{d, n, {}};
    std::array<std::vector<size_t>, 3> orders;
    for (Color c : ALL_COLORS) {
        orders[(int)c] = measurement_order(lat, c);
    }
    std::vector<PauliOperator> ops;
    for (size_t e = 0; e < lat.num_edges(); e++) {
        ops.push_back(checks.check_operator(e));
    }

    std::mt19937_64 outcome_rng(options.seed);
    GeneratorSet isg(d, n);
    for (size_t r = 0; r < rounds; r++) {
        Color c = round_color(r);
        std::vector<size_t> order = orders[(int)c];
        if (options.shuffle_seed.has_value()) {
            std::mt19937_64 shuffle_rng(*options.shuffle_seed + 0x9E3779B97F4A7C15ull * (r + 1));
            shuffle_in_place(order, shuffle_rng);
        }
        RoundRecord rec{r, c, order, {}, GeneratorSet(d, n), {}};
        for (size_t e : order) {
            OutcomeMode mode = AllZeroOutcomes{};
            if (options.outcomes == ScheduleOutcomes::SAMPLED) {
                mode = SampledOutcomes{&outcome_rng};
            }
            rec.outcomes.push_back(measure_in_place(isg, ops[e], mode));
        }
        rec.isg = isg;
        rec.canonical = canonical_form(isg);
        trace.rounds.push_back(std::move(rec));
    }
    return trace;
}

PauliOperator floqudit::expected_plaquette(const ColoredLattice &lat, const CheckAssignment &checks, size_t plaquette) {
    const Plaquette &f = lat.plaquette(plaquette);
    uint32_t d = checks.dim();
    size_t n = lat.num_vertices();
    std::vector<uint16_t> xs(n, 0);
    std::vector<uint16_t> zs(n, 0);
    for (size_t w : f.boundary) {
        SingleQuditPauli acc{0, 0};
        for (Color c : ALL_COLORS) {
            if (c != f.color) {
                acc = symplectic_product(acc, checks.vertex_pauli(lat, w, c), d);
            }
        }
        xs[w] = (uint16_t)acc.x;
        zs[w] = (uint16_t)acc.z;
    }
    return PauliOperator(d, 0, std::move(xs), std::move(zs));
}

PauliOperator floqudit::boundary_check_product(
    const ColoredLattice &lat, const CheckAssignment &checks, size_t plaquette, Color c) {
    PauliOperator prod(checks.dim(), lat.num_vertices());
    for (size_t e : lat.plaquette_edges(plaquette)) {
        if (lat.edge(e).color == c) {
            prod *= checks.check_operator(e);
        }
    }
    return prod;
}

size_t floqudit::plaquette_formation_round(Color c) {
    switch (c) {
        case Color::BLUE:
            return 2;
        case Color::GREEN:
            return 3;
        case Color::RED:
            return 4;
    }
    return 4;
}

std::vector<PlaquetteStabilizer> floqudit::plaquette_stabilizers(
    const ColoredLattice &lat, const CheckAssignment &checks, const IsgTrace &trace, size_t round) {
    const GeneratorSet &isg = trace.at(round).isg;
    std::vector<PlaquetteStabilizer> out;
    for (size_t f = 0; f < lat.num_plaquettes(); f++) {
        Color c = lat.plaquette(f).color;
        size_t formed_at = plaquette_formation_round(c);
        PauliOperator op = expected_plaquette(lat, checks, f);
        bool formed = round >= formed_at && contains_up_to_phase(isg, op).has_value();
        if (!formed && round + 1 >= formed_at) {
            // Unformed version: product of the checks measured two rounds before formation.
            op = boundary_check_product(lat, checks, f, round_color(formed_at - 2));
        }
        out.push_back({f, c, std::move(op), formed});
    }
    return out;
}

CodeParameters floqudit::code_parameters(const ColoredLattice &lat, const IsgTrace &trace, size_t round) {
    if (round + 1 < INITIALIZATION_ROUNDS) {
        std::stringstream ss;
        ss << "Code parameters need a round >= " << INITIALIZATION_ROUNDS - 1 << " but got round " << round << ".";
        throw std::invalid_argument(ss.str());
    }
    const RoundRecord &rec = trace.at(round);
    size_t n = lat.num_vertices();
    size_t r = rec.canonical.rank();
    CodeParameters out{n, n - r, 0, 1, std::nullopt, std::nullopt, {}};
    size_t g = std::gcd(out.k, n);
    out.rate_numerator = out.k / g;
    out.rate_denominator = n / g;

    size_t genus = lat.genus();
    if (out.k != 2 * genus) {
        std::stringstream ss;
        ss << "k = " << out.k << " but 2g = " << 2 * genus;
        out.mismatches.push_back(ss.str());
    }
    int64_t np = (int64_t)lat.num_plaquettes();
    int64_t p = (int64_t)lat.face_size();
    if ((np * p) % 6 != 0 || np * p / 6 - np + 2 != (int64_t)out.k) {
        std::stringstream ss;
        ss << "k = " << out.k << " but n_p p/6 - n_p + 2 = " << (double)(np * p) / 6.0 - (double)np + 2.0;
        out.mismatches.push_back(ss.str());
    }
    // k/n = 1/2 - 3/p + 2/n  <=>  2 p k = p n - 6 n + 4 p.
    int64_t nn = (int64_t)n;
    if (2 * p * (int64_t)out.k != p * nn - 6 * nn + 4 * p) {
        std::stringstream ss;
        ss << "rate " << out.k << "/" << n << " differs from 1/2 - 3/" << p << " + 2/" << n;
        out.mismatches.push_back(ss.str());
    }
    return out;
}

GaugeReport floqudit::gauge_analysis(const ColoredLattice &lat, const CheckAssignment &checks) {
    uint32_t d = checks.dim();
    size_t n = lat.num_vertices();
    std::vector<PauliOperator> ops;
    for (size_t e = 0; e < lat.num_edges(); e++) {
        ops.push_back(checks.check_operator(e));
    }
    GfMatrix a = symplectic_matrix(ops, d, n);
    size_t m = ops.size();
    GfMatrix gram(d, m, m);
    for (size_t i = 0; i < m; i++) {
        for (size_t j = 0; j < m; j++) {
            gram.set(i, j, commutation(ops[i], ops[j]));
        }
    }
    GfMatrix kernel = gf_nullspace(gram);
    GaugeReport report{};
    report.gauge_rank = gf_rank(a);
    report.center_rank = kernel.rows() ? gf_rank(kernel.multiply(a)) : 0;
    size_t diff = report.gauge_rank - report.center_rank;
    report.gauge_qudits = diff / 2;
    report.logical_qudits = n - report.center_rank - report.gauge_qudits;
    report.identities_hold = diff % 2 == 0 && report.center_rank + report.gauge_qudits == n;
    return report;
}

CheckAssignment floqudit::circle_square_checks(const ColoredLattice &lat, uint32_t dim) {
    validate_prime_dimension(dim);
    if (dim < 3) {
        throw std::invalid_argument("The circle-square instance needs a prime dimension D >= 3.");
    }
    if (!lat.is_marked()) {
        throw std::invalid_argument("The circle-square instance needs a lattice with circle/square vertex marks.");
    }
    Residue m1 = dim - 1;
    Residue m2 = mod_reduce(-2, dim);
    // Indexed by color: green, red, blue.
    std::array<SingleQuditPauli, 3> circle{{{m2, 0}, {1, 1}, {1, m1}}};
    std::array<SingleQuditPauli, 3> square{{{m2, 0}, {1, m1}, {1, 1}}};

    for (size_t i = 0; i < 3; i++) {
        for (size_t j = i + 1; j < 3; j++) {
            if (mod_add(commutation(circle[i], circle[j], dim), commutation(square[i], square[j], dim), dim) != 0) {
                throw std::logic_error("Circle-square check types do not mutually commute.");
            }
            if (commutation(circle[i], circle[j], dim) == 0 || commutation(square[i], square[j], dim) == 0) {
                throw std::logic_error("Circle-square vertex factors of distinct colors commute.");
            }
        }
    }
    for (const auto &type : {circle, square}) {
        Residue sx = 0;
        Residue sz = 0;
        for (const auto &p : type) {
            sx = mod_add(sx, p.x, dim);
            sz = mod_add(sz, p.z, dim);
        }
        if (sx != 0 || sz != 0) {
            throw std::logic_error("Circle-square exponent sums are not zero.");
        }
    }

    std::vector<EdgeCheck> out;
    for (const Edge &e : lat.edges()) {
        auto factor = [&](size_t w) {
            return lat.mark(w) == VertexMark::CIRCLE ? circle[(int)e.color] : square[(int)e.color];
        };
        out.push_back({e.v, e.u, factor(e.v), factor(e.u)});
    }
    CheckAssignment checks(lat, dim, std::move(out));
    if (!validate_conditions(lat, checks).ok()) {
        throw std::logic_error("Circle-square checks fail the check conditions on this lattice.");
    }
    return checks;
}

CheckAssignment floqudit::qubit_honeycomb_checks(const ColoredLattice &lat) {
    std::array<SingleQuditPauli, 3> factors{{{1, 0}, {1, 1}, {0, 1}}};
    std::vector<EdgeCheck> out;
    for (const Edge &e : lat.edges()) {
        out.push_back({e.v, e.u, factors[(int)e.color], factors[(int)e.color]});
    }
    return CheckAssignment(lat, 2, std::move(out));
}

CheckAssignment floqudit::ellison_style_checks(
    const ColoredLattice &lat, uint32_t dim, std::optional<Residue> z_exponent) {
    validate_prime_dimension(dim);
    if (!z_exponent.has_value()) {
        std::stringstream ss;
        ss << "The direction-labelled instance is written with Z^D factors, but Z^D = I for dimension D, "
           << "which makes distinct colors commute. Pass an explicit Z exponent (for example 1 or D-1).";
        throw std::invalid_argument(ss.str());
    }
    Residue e = *z_exponent % dim;
    if (e == 0) {
        throw std::invalid_argument("The Z exponent of the direction-labelled instance must be nonzero modulo D.");
    }
    std::vector<EdgeCheck> out;
    for (size_t k = 0; k < lat.num_edges(); k++) {
        const Edge &ed = lat.edge(k);
        SingleQuditPauli p;
        switch (ed.direction) {
            case EdgeDirection::X:
                p = {1, 0};
                break;
            case EdgeDirection::Y:
                p = {dim - 1, mod_neg(e, dim)};
                break;
            case EdgeDirection::Z:
                p = {0, e};
                break;
            default: {
                std::stringstream ss;
                ss << "The direction-labelled instance needs x/y/z edge directions, but edge " << k << " has none.";
                throw std::invalid_argument(ss.str());
            }
        }
        out.push_back({ed.v, ed.u, p, p});
    }
    return CheckAssignment(lat, dim, std::move(out));
}

CheckAssignment floqudit::builtin_checks(
    const ColoredLattice &lat, std::string_view name, uint32_t dim, std::optional<Residue> z_exponent) {
    if (name == "circle-square") {
        return circle_square_checks(lat, dim);
    }
    if (name == "qubit") {
        if (dim != 2) {
            std::stringstream ss;
            ss << "The qubit instance needs D=2 but got D=" << dim << ".";
            throw std::invalid_argument(ss.str());
        }
        return qubit_honeycomb_checks(lat);
    }
    if (name == "ellison") {
        return ellison_style_checks(lat, dim, z_exponent);
    }
    throw std::invalid_argument(
        "Unknown instance '" + std::string(name) + "' (expected circle-square, qubit or ellison).");
}

std::string floqudit::export_trace_json(const IsgTrace &trace) {
    nlohmann::json doc;
    doc["D"] = trace.dim;
    doc["n"] = trace.num_qudits;
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto &rec : trace.rounds) {
        nlohmann::json r;
        r["round"] = rec.round;
        r["color"] = color_name(rec.color);
        r["edges"] = rec.edge_order;
        nlohmann::json outcomes = nlohmann::json::array();
        nlohmann::json deterministic = nlohmann::json::array();
        for (const auto &o : rec.outcomes) {
            outcomes.push_back(o.value);
            deterministic.push_back(o.deterministic);
        }
        r["outcomes"] = outcomes;
        r["deterministic"] = deterministic;
        r["rank"] = rec.canonical.rank();
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &row : rec.canonical.rows) {
            rows.push_back(row.str());
        }
        r["tableau"] = rows;
        rounds.push_back(r);
    }
    doc["rounds"] = rounds;
    return doc.dump(1) + "\n";
}
