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

#include <algorithm>
#include <atomic>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "text_util.hpp"

using namespace floqudit;

namespace {

bool bernoulli(std::mt19937_64 &rng, double p) {
    return (double)(rng() >> 11) * 0x1.0p-53 < p;
}

Residue nontrivial_power(std::mt19937_64 &rng, uint32_t d) {
    return 1 + uniform_residue(rng, d - 1);
}

/// Conjugates every generator by E: g -> E g E^-1 = w^{c(E, g)} g.
GeneratorSet conjugate(const GeneratorSet &s, const PauliOperator &e) {
    if (e.is_scalar()) {
        return s;
    }
    uint32_t d = s.dim();
    std::vector<PauliOperator> gens;
    gens.reserve(s.size());
    for (const PauliOperator &g : s.generators()) {
        gens.push_back(g.with_phase(mod_add(g.phase(), commutation(e, g), d)));
    }
    return GeneratorSet(d, s.num_qudits(), std::move(gens));
}

}  // namespace

void NoiseModel::validate() const {
    validate_prime_dimension(dim);
    if (!(p >= 0.0 && p <= 1.0)) {
        std::stringstream ss;
        ss << "Error probability must lie in [0, 1] but got " << p << ".";
        throw std::invalid_argument(ss.str());
    }
}

PauliOperator floqudit::sample_round_errors(const NoiseModel &model, uint64_t seed, size_t round, size_t num_qudits) {
    model.validate();
    std::seed_seq seq{
        (uint32_t)seed, (uint32_t)(seed >> 32), (uint32_t)round, (uint32_t)((uint64_t)round >> 32)};
    std::mt19937_64 rng(seq);
    uint32_t d = model.dim;
    std::vector<uint16_t> xs(num_qudits, 0);
    std::vector<uint16_t> zs(num_qudits, 0);
    for (size_t q = 0; q < num_qudits; q++) {
        if (bernoulli(rng, model.p)) {
            xs[q] = (uint16_t)nontrivial_power(rng, d);
        }
        if (bernoulli(rng, model.p)) {
            zs[q] = (uint16_t)nontrivial_power(rng, d);
        }
    }
    return PauliOperator(d, 0, std::move(xs), std::move(zs));
}

Residue floqudit::noisy_outcome(const PauliOperator &m, Residue o, const PauliOperator &frame) {
    return mod_add(o % m.dim(), commutation(m, frame), m.dim());
}

NoisyTrace floqudit::run_noisy_schedule(
    const ColoredLattice &lat,
    const CheckAssignment &checks,
    size_t rounds,
    const NoiseModel &model,
    uint64_t seed,
    const std::vector<ForcedError> &forced) {
    model.validate();
    uint32_t d = checks.dim();
    size_t n = lat.num_vertices();
    if (model.dim != d) {
        std::stringstream ss;
        ss << "Noise model dimension " << model.dim << " differs from check dimension " << d << ".";
        throw std::invalid_argument(ss.str());
    }
    for (const ForcedError &f : forced) {
        if (f.op.dim() != d || f.op.num_qudits() != n) {
            throw std::invalid_argument("Forced error has the wrong dimension or qudit count.");
        }
        if (f.round >= rounds) {
            std::stringstream ss;
            ss << "Forced error at round " << f.round << " lies past the last round " << rounds - 1 << ".";
            throw std::invalid_argument(ss.str());
        }
    }

    NoisyTrace out{model, seed, run_schedule(lat, checks, rounds), IsgTrace{d, n, {}}, {}, {}};
    std::vector<PauliOperator> ops;
    for (size_t e = 0; e < lat.num_edges(); e++) {
        ops.push_back(checks.check_operator(e));
    }

    GeneratorSet isg(d, n);
    PauliOperator frame(d, n);
    for (size_t r = 0; r < rounds; r++) {
        PauliOperator err = sample_round_errors(model, seed, r, n);
        for (const ForcedError &f : forced) {
            if (f.round == r) {
                err *= f.op;
            }
        }
        err = err.with_phase(0);
        isg = conjugate(isg, err);
        frame = (err * frame).with_phase(0);

        const RoundRecord &base = out.baseline.rounds[r];
        RoundRecord rec{r, base.color, base.edge_order, {}, GeneratorSet(d, n), {}};
        for (size_t k = 0; k < base.edge_order.size(); k++) {
            const PauliOperator &m = ops[base.edge_order[k]];
            Residue o = noisy_outcome(m, base.outcomes[k].value, frame);
            rec.outcomes.push_back(measure_in_place(isg, m, ForcedOutcome{o}));
        }
        rec.isg = isg;
        out.noisy.rounds.push_back(std::move(rec));
        out.errors.push_back(std::move(err));
        out.frames.push_back(frame);
    }
    return out;
}

Color floqudit::inferred_color(size_t round) {
    switch (round % 3) {
        case 0:
            return Color::RED;
        case 1:
            return Color::BLUE;
        default:
            return Color::GREEN;
    }
}

size_t floqudit::first_inference_round(Color c) {
    size_t r = plaquette_formation_round(c);
    while (inferred_color(r) != c) {
        r++;
    }
    return r;
}

std::vector<PlaquetteInference> floqudit::infer_plaquette_values(
    const ColoredLattice &lat, const CheckAssignment &checks, const NoisyTrace &trace) {
    size_t rounds = trace.noisy.rounds.size();
    if (rounds < INITIALIZATION_ROUNDS + 2) {
        std::stringstream ss;
        ss << "Plaquette inference needs at least " << INITIALIZATION_ROUNDS + 2 << " rounds but the trace has "
           << rounds << ".";
        throw std::invalid_argument(ss.str());
    }
    std::vector<PauliOperator> plaquette_ops;
    for (size_t f = 0; f < lat.num_plaquettes(); f++) {
        plaquette_ops.push_back(expected_plaquette(lat, checks, f));
    }
    uint32_t d = checks.dim();
    std::vector<PlaquetteInference> out;
    for (size_t r = 0; r < rounds; r++) {
        Color c = inferred_color(r);
        if (r < first_inference_round(c)) {
            continue;
        }
        for (size_t f = 0; f < lat.num_plaquettes(); f++) {
            if (lat.plaquette(f).color != c) {
                continue;
            }
            std::optional<Residue> noisy = contains_up_to_phase(trace.noisy.rounds[r].isg, plaquette_ops[f]);
            std::optional<Residue> base = contains_up_to_phase(trace.baseline.rounds[r].isg, plaquette_ops[f]);
            if (!noisy.has_value() || !base.has_value()) {
                std::stringstream ss;
                ss << "Plaquette " << f << " (" << color_name(c) << ") is not formed in round " << r << ".";
                throw std::invalid_argument(ss.str());
            }
            out.push_back({f, r, mod_sub(*noisy, *base, d)});
        }
    }
    return out;
}

size_t SpaceTimeLattice::num_detections() const {
    size_t total = 0;
    for (const SyndromeNode &node : nodes) {
        total += node.value != 0;
    }
    return total;
}

SpaceTimeLattice floqudit::build_space_time_lattice(
    const ColoredLattice &lat, const std::vector<PlaquetteInference> &inferences, const NoisyTrace &trace) {
    uint32_t d = trace.model.dim;
    std::vector<PlaquetteInference> sorted = inferences;
    std::sort(sorted.begin(), sorted.end(), [](const PlaquetteInference &a, const PlaquetteInference &b) {
        return std::make_pair(a.round, a.plaquette) < std::make_pair(b.round, b.plaquette);
    });

    SpaceTimeLattice out{d, trace.model.p, trace.seed, trace.noisy.rounds.size(), {}, {}};
    std::vector<Residue> previous(lat.num_plaquettes(), 0);
    std::map<std::pair<size_t, size_t>, size_t> index;
    for (const PlaquetteInference &inf : sorted) {
        if (inf.plaquette >= lat.num_plaquettes()) {
            std::stringstream ss;
            ss << "Inference names plaquette " << inf.plaquette << " but the lattice has " << lat.num_plaquettes()
               << ".";
            throw std::invalid_argument(ss.str());
        }
        index[{inf.plaquette, inf.round}] = out.nodes.size();
        out.nodes.push_back({inf.plaquette, inf.round, mod_sub(inf.value, previous[inf.plaquette], d)});
        previous[inf.plaquette] = inf.value;
    }
    for (size_t i = 0; i < out.nodes.size(); i++) {
        const SyndromeNode &node = out.nodes[i];
        for (size_t g : lat.neighbor_plaquettes(node.plaquette)) {
            auto it = index.find({g, node.round + 1});
            if (it != index.end()) {
                out.edges.push_back({i, it->second});
            }
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

SpaceTimeLattice floqudit::simulate_syndrome(
    const ColoredLattice &lat,
    const CheckAssignment &checks,
    size_t rounds,
    const NoiseModel &model,
    uint64_t seed,
    const std::vector<ForcedError> &forced) {
    NoisyTrace trace = run_noisy_schedule(lat, checks, rounds, model, seed, forced);
    return build_space_time_lattice(lat, infer_plaquette_values(lat, checks, trace), trace);
}

std::vector<SpaceTimeLattice> floqudit::simulate_syndrome_shots(
    const ColoredLattice &lat,
    const CheckAssignment &checks,
    size_t rounds,
    const NoiseModel &model,
    uint64_t seed,
    size_t shots,
    size_t jobs) {
    std::vector<std::optional<SpaceTimeLattice>> results(shots);
    std::vector<std::string> errors(shots);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t k = next.fetch_add(1);
            if (k >= shots) {
                return;
            }
            try {
                results[k] = simulate_syndrome(lat, checks, rounds, model, seed + k);
            } catch (const std::exception &ex) {
                errors[k] = ex.what();
            }
        }
    };
    size_t threads = std::max<size_t>(1, std::min(jobs, shots));
    std::vector<std::thread> pool;
    for (size_t t = 1; t < threads; t++) {
        pool.emplace_back(worker);
    }
    worker();
    for (std::thread &t : pool) {
        t.join();
    }
    std::vector<SpaceTimeLattice> out;
    for (size_t k = 0; k < shots; k++) {
        if (!errors[k].empty()) {
            throw std::invalid_argument(errors[k]);
        }
        out.push_back(std::move(*results[k]));
    }
    return out;
}

std::string floqudit::space_time_lattice_to_json(const SpaceTimeLattice &lattice) {
    nlohmann::ordered_json j;
    j["D"] = lattice.dim;
    j["p"] = lattice.p;
    j["seed"] = lattice.seed;
    j["rounds"] = lattice.rounds;
    nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
    for (const SyndromeNode &node : lattice.nodes) {
        nodes.push_back({{"plaquette", node.plaquette}, {"round", node.round}, {"value", node.value}});
    }
    j["nodes"] = std::move(nodes);
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto &e : lattice.edges) {
        edges.push_back({e[0], e[1]});
    }
    j["edges"] = std::move(edges);
    return j.dump(2) + "\n";
}

SpaceTimeLattice floqudit::space_time_lattice_from_json(std::string_view text) {
    try {
        nlohmann::json j = nlohmann::json::parse(text);
        SpaceTimeLattice out{
            j.at("D").get<uint32_t>(), j.at("p").get<double>(), j.at("seed").get<uint64_t>(),
            j.at("rounds").get<size_t>(), {}, {}};
        validate_prime_dimension(out.dim);
        for (const auto &node : j.at("nodes")) {
            SyndromeNode parsed{
                node.at("plaquette").get<size_t>(), node.at("round").get<size_t>(), node.at("value").get<Residue>()};
            if (parsed.value >= out.dim) {
                std::stringstream ss;
                ss << "Syndrome value " << parsed.value << " is not a residue mod " << out.dim << ".";
                throw std::invalid_argument(ss.str());
            }
            out.nodes.push_back(parsed);
        }
        for (const auto &edge : j.at("edges")) {
            std::array<size_t, 2> e{edge.at(0).get<size_t>(), edge.at(1).get<size_t>()};
            if (e[0] >= out.nodes.size() || e[1] >= out.nodes.size()) {
                throw std::invalid_argument("Syndrome edge refers to a missing node.");
            }
            out.edges.push_back(e);
        }
        return out;
    } catch (const nlohmann::json::exception &ex) {
        std::stringstream ss;
        ss << "Malformed syndrome lattice JSON: " << ex.what();
        throw std::invalid_argument(ss.str());
    }
}

void floqudit::save_space_time_lattice(const SpaceTimeLattice &lattice, const std::string &path) {
    write_file(path, space_time_lattice_to_json(lattice));
}

SpaceTimeLattice floqudit::load_space_time_lattice(const std::string &path) {
    return space_time_lattice_from_json(read_file(path));
}
