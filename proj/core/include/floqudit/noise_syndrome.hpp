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

#ifndef FLOQUDIT_NOISE_SYNDROME_HPP
#define FLOQUDIT_NOISE_SYNDROME_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "floqudit/floquet_code.hpp"
#include "floqudit/lattice.hpp"
#include "floqudit/pauli.hpp"
#include "floqudit/stabilizer.hpp"

namespace floqudit {

/// Independent X-type and Z-type channels on every qudit before every round. Each applies a uniformly
/// random non-trivial power with total probability p.
struct NoiseModel {
    uint32_t dim;
    double p;

    /// Throws std::invalid_argument unless D is prime and p is in [0, 1].
    void validate() const;
};

/// The error injected before `round`. Reproducible from (seed, round) alone.
PauliOperator sample_round_errors(const NoiseModel &model, uint64_t seed, size_t round, size_t num_qudits);

/// Outcome of check M on E|psi> when M|psi> = w^o |psi>: o + c(M, E) mod D.
Residue noisy_outcome(const PauliOperator &m, Residue o, const PauliOperator &frame);

/// An extra error applied before the given round, multiplied onto the sampled one.
struct ForcedError {
    size_t round;
    PauliOperator op;
};

struct NoisyTrace {
    NoiseModel model;
    uint64_t seed;
    /// All-zero-outcome reference run.
    IsgTrace baseline;
    /// Phase-tracked groups and outcomes of the noisy run (canonical tableaus are left empty).
    IsgTrace noisy;
    /// Error injected before each round.
    std::vector<PauliOperator> errors;
    /// Accumulated Pauli frame after each round's injection.
    std::vector<PauliOperator> frames;
};

/// Runs the schedule with errors injected before each round and check outcomes shifted by the frame.
/// Throws std::invalid_argument if validate_conditions fails.
NoisyTrace run_noisy_schedule(
    const ColoredLattice &lat,
    const CheckAssignment &checks,
    size_t rounds,
    const NoiseModel &model,
    uint64_t seed,
    const std::vector<ForcedError> &forced = {});

/// Color whose plaquettes are read out in a round: red at r = 0, blue at r = 1, green at r = 2 (mod 3).
Color inferred_color(size_t round);

/// First round at which plaquettes of color c are read out.
size_t first_inference_round(Color c);

struct PlaquetteInference {
    size_t plaquette;
    size_t round;
    /// Eigenvalue exponent minus its noiseless value.
    Residue value;

    bool operator==(const PlaquetteInference &other) const = default;
};

/// Plaquette eigenvalue exponents of every inference round, sorted by (round, plaquette).
/// Requires at least INITIALIZATION_ROUNDS + 2 rounds.
std::vector<PlaquetteInference> infer_plaquette_values(
    const ColoredLattice &lat, const CheckAssignment &checks, const NoisyTrace &trace);

struct SyndromeNode {
    size_t plaquette;
    size_t round;
    /// Change of the plaquette's inferred value since its previous inference; nonzero is a detection event.
    Residue value;

    bool operator==(const SyndromeNode &other) const = default;
};

struct SpaceTimeLattice {
    uint32_t dim;
    double p;
    uint64_t seed;
    size_t rounds;
    /// Sorted by (round, plaquette).
    std::vector<SyndromeNode> nodes;
    /// Node index pairs (i < j) joining neighboring plaquettes at consecutive inference rounds.
    std::vector<std::array<size_t, 2>> edges;

    size_t num_detections() const;
    bool operator==(const SpaceTimeLattice &other) const = default;
};

SpaceTimeLattice build_space_time_lattice(
    const ColoredLattice &lat, const std::vector<PlaquetteInference> &inferences, const NoisyTrace &trace);

/// Runs the noisy schedule, inference and lattice construction in one call.
SpaceTimeLattice simulate_syndrome(
    const ColoredLattice &lat,
    const CheckAssignment &checks,
    size_t rounds,
    const NoiseModel &model,
    uint64_t seed,
    const std::vector<ForcedError> &forced = {});

/// One lattice per shot, shot k using seed + k, computed on up to `jobs` threads and returned in shot order.
std::vector<SpaceTimeLattice> simulate_syndrome_shots(
    const ColoredLattice &lat,
    const CheckAssignment &checks,
    size_t rounds,
    const NoiseModel &model,
    uint64_t seed,
    size_t shots,
    size_t jobs);

std::string space_time_lattice_to_json(const SpaceTimeLattice &lattice);
SpaceTimeLattice space_time_lattice_from_json(std::string_view text);
void save_space_time_lattice(const SpaceTimeLattice &lattice, const std::string &path);
SpaceTimeLattice load_space_time_lattice(const std::string &path);

}  // namespace floqudit

#endif
