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

#ifndef FLOQUDIT_FLOQUET_CODE_HPP
#define FLOQUDIT_FLOQUET_CODE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "floqudit/lattice.hpp"
#include "floqudit/pauli.hpp"
#include "floqudit/stabilizer.hpp"

namespace floqudit {

/// Two-qudit check [at_v]_v [at_u]_u on an edge.
struct EdgeCheck {
    size_t v;
    size_t u;
    SingleQuditPauli at_v;
    SingleQuditPauli at_u;

    bool operator==(const EdgeCheck &other) const = default;
};

/// One check per lattice edge, indexed by edge id.
class CheckAssignment {
   public:
    /// Checks must be given in lattice edge order, each on the endpoints of its edge (either orientation),
    /// with non-identity single-qudit factors.
    CheckAssignment(const ColoredLattice &lat, uint32_t dim, std::vector<EdgeCheck> checks);

    uint32_t dim() const {
        return dim_;
    }
    size_t num_qudits() const {
        return num_qudits_;
    }
    size_t size() const {
        return checks_.size();
    }
    const EdgeCheck &check(size_t e) const {
        return checks_[e];
    }
    const std::vector<EdgeCheck> &checks() const {
        return checks_;
    }
    /// The factor the check on edge e places on vertex w.
    SingleQuditPauli factor_at(size_t e, size_t w) const;
    /// P_{v_c}: the factor the color-c check at v places on v.
    SingleQuditPauli vertex_pauli(const ColoredLattice &lat, size_t v, Color c) const;
    /// The phase-free operator M_e.
    PauliOperator check_operator(size_t e) const;

    bool operator==(const CheckAssignment &other) const = default;

   private:
    uint32_t dim_;
    size_t num_qudits_;
    std::vector<EdgeCheck> checks_;
};

/// Check-assignment file: header `D=<d>`, then `check <v> <u> <color> <a_v> <b_v> <a_u> <b_u>` lines.
CheckAssignment parse_check_assignment(const ColoredLattice &lat, std::string_view text);
std::string format_check_assignment(const ColoredLattice &lat, const CheckAssignment &checks);

/// Pass/fail of the three check conditions with up to 32 offending elements each.
struct ConditionReport {
    /// [0]: opposite commutation values across every edge; [1]: distinct colors never commute at a vertex;
    /// [2]: every check times the two other colors' vertex factors gives I (x) I exactly.
    std::array<bool, 3> passed{true, true, true};
    std::array<std::vector<std::string>, 3> violations;
    /// Checks M with M^D != I cannot be measured and are reported here.
    std::vector<std::string> unmeasurable;

    bool ok() const {
        return passed[0] && passed[1] && passed[2] && unmeasurable.empty();
    }
};

ConditionReport validate_conditions(const ColoredLattice &lat, const CheckAssignment &checks);

/// Schedule color of a round: 0 green, 1 red, 2 blue, repeating.
inline Color round_color(size_t round) {
    return (Color)(round % 3);
}

/// Number of initialization rounds after which the stabilizer group is periodic.
constexpr size_t INITIALIZATION_ROUNDS = 5;

/// Edge order in which a round measures its checks: plaquettes of color next(c) in id order, and the
/// color-c edges around each plaquette in boundary order.
std::vector<size_t> measurement_order(const ColoredLattice &lat, Color c);

enum class ScheduleOutcomes : uint8_t { ALL_ZERO, SAMPLED };

struct ScheduleOptions {
    ScheduleOutcomes outcomes = ScheduleOutcomes::ALL_ZERO;
    uint64_t seed = 0;
    /// When set, each round's measurement order is shuffled with this seed.
    std::optional<uint64_t> shuffle_seed;
};

struct RoundRecord {
    size_t round;
    Color color;
    /// Edge ids in measurement order.
    std::vector<size_t> edge_order;
    std::vector<MeasurementOutcome> outcomes;
    GeneratorSet isg;
    CanonicalTableau canonical;
};

/// Instantaneous stabilizer groups of consecutive rounds.
struct IsgTrace {
    uint32_t dim;
    size_t num_qudits;
    std::vector<RoundRecord> rounds;

    const RoundRecord &at(size_t round) const;
};

/// Starts from the trivial group and measures every check of each round's color.
/// Throws std::invalid_argument if validate_conditions fails.
IsgTrace run_schedule(
    const ColoredLattice &lat, const CheckAssignment &checks, size_t rounds, const ScheduleOptions &options = {});

/// Operator of the color-c check on e, phase 0.
PauliOperator check_operator(const CheckAssignment &checks, size_t e);

/// Per-vertex product of the two other colors' vertex factors (green, red, blue order), phase 0.
PauliOperator expected_plaquette(const ColoredLattice &lat, const CheckAssignment &checks, size_t plaquette);

/// Product, in boundary order, of the color-c checks on plaquette f's boundary.
PauliOperator boundary_check_product(const ColoredLattice &lat, const CheckAssignment &checks, size_t plaquette, Color c);

/// Round in which a plaquette color first becomes a member of the group (unformed or formed).
size_t plaquette_formation_round(Color c);

struct PlaquetteStabilizer {
    size_t plaquette;
    Color color;
    PauliOperator op;
    bool formed;
};

/// Status of every plaquette in the given round of a trace.
std::vector<PlaquetteStabilizer> plaquette_stabilizers(
    const ColoredLattice &lat, const CheckAssignment &checks, const IsgTrace &trace, size_t round);

struct CodeParameters {
    size_t n;
    size_t k;
    /// k / n in lowest terms.
    size_t rate_numerator;
    size_t rate_denominator;
    std::optional<size_t> d_upper;
    std::optional<size_t> d_exact;
    /// Human-readable descriptions of failed cross-checks (k = 2g, k = n_p p/6 - n_p + 2, rate identity).
    std::vector<std::string> mismatches;
};

/// k = n - rank of the round's group, with counting cross-checks. Requires round >= 4.
CodeParameters code_parameters(const ColoredLattice &lat, const IsgTrace &trace, size_t round);

struct GaugeReport {
    size_t gauge_rank;
    size_t center_rank;
    size_t gauge_qudits;
    size_t logical_qudits;
    /// gauge_rank - center_rank = 2 gauge_qudits and center_rank + gauge_qudits = n.
    bool identities_hold;
};

/// Ranks over GF(D) of the check group and of its center.
GaugeReport gauge_analysis(const ColoredLattice &lat, const CheckAssignment &checks);

/// Circle vertices: green X^-2, red XZ, blue XZ^-1. Square vertices: green X^-2, red XZ^-1, blue XZ.
CheckAssignment circle_square_checks(const ColoredLattice &lat, uint32_t dim);

/// Qubit honeycomb with vertex factors X (green), XZ (red), Z (blue).
CheckAssignment qubit_honeycomb_checks(const ColoredLattice &lat);

/// Direction-labelled checks X (x edges), (X Z^e)^-1 (y edges), Z^e (z edges). The exponent e must be supplied.
CheckAssignment ellison_style_checks(const ColoredLattice &lat, uint32_t dim, std::optional<Residue> z_exponent);

/// Builds a builtin by name: "circle-square", "qubit", or "ellison".
CheckAssignment builtin_checks(
    const ColoredLattice &lat, std::string_view name, uint32_t dim, std::optional<Residue> z_exponent = std::nullopt);

/// One JSON record per round: round, color, outcomes, canonical tableau rows as literals.
std::string export_trace_json(const IsgTrace &trace);

}  // namespace floqudit

#endif
