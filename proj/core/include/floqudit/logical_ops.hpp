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

#ifndef FLOQUDIT_LOGICAL_OPS_HPP
#define FLOQUDIT_LOGICAL_OPS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "floqudit/floquet_code.hpp"
#include "floqudit/lattice.hpp"
#include "floqudit/pauli.hpp"
#include "floqudit/stabilizer.hpp"

namespace floqudit {

enum class LoopOperatorKind : uint8_t {
    /// Supported on the current round's edges, carrying next-round check factors.
    TYPE1 = 1,
    /// Supported on the next round's edges, carrying current-round check factors.
    TYPE2 = 2,
};

const char *loop_operator_kind_name(LoopOperatorKind kind);

struct LoopOperator {
    std::string loop_name;
    LoopOperatorKind kind;
    size_t round;
    Color round_color;
    /// Loop edges of the support color, in loop order.
    std::vector<size_t> support_edges;
    /// Nonzero exponent of each support edge.
    std::vector<Residue> exponents;
    PauliOperator op;
};

/// Builds a type-1 or type-2 operator on a non-contractible loop for the group after `round` (>= 4).
///
/// The least support edge (by sorted endpoint pair) gets exponent 1 and the rest follow by the
/// plaquette-commutation recursion along the loop. Throws if the loop is contractible, has no edge
/// of the support color, or the recursion does not close.
LoopOperator build_loop_operator(
    const ColoredLattice &lat, const CheckAssignment &checks, const Loop &loop, size_t round, LoopOperatorKind kind);

/// True iff L commutes with every generator and no phase multiple of L is in the group.
bool verify_logical(const GeneratorSet &isg, const PauliOperator &l);

struct LogicalPair {
    PauliOperator x_bar;
    PauliOperator z_bar;
    size_t index;
    /// Power a with x_bar = Q1^a.
    Residue power;
};

/// x_bar = Q1^a with a = c(Q1, Q2)^-1, z_bar = Q2. Throws if Q1 and Q2 commute.
LogicalPair pair_and_normalize(const PauliOperator &q1, const PauliOperator &q2, size_t index = 0);

/// Type-1 and type-2 operators on every declared loop (loop order, type-1 first).
std::vector<LoopOperator> loop_operators(const ColoredLattice &lat, const CheckAssignment &checks, size_t round);

/// Splits the loop operators of a round into conjugate pairs with vanishing cross commutators.
/// Throws if no such split exists.
std::vector<LogicalPair> logical_pairs(const ColoredLattice &lat, const CheckAssignment &checks, size_t round);

/// Local generators of the round's group: the round's checks and every formed plaquette.
std::vector<PauliOperator> local_stabilizer_generators(
    const ColoredLattice &lat, const CheckAssignment &checks, size_t round);

/// Minimum weight over the logicals after greedy multiplication by up to `depth` stabilizer
/// generators (and their powers) at a time.
size_t distance_upper_bound(
    const std::vector<PauliOperator> &stabilizers, const std::vector<PauliOperator> &logicals, size_t depth = 2);

/// distance_upper_bound over the round's loop operators and local generators.
size_t distance_upper_bound(const ColoredLattice &lat, const CheckAssignment &checks, size_t round, size_t depth = 2);

struct BruteForceLimits {
    size_t max_qudits = 20;
    std::vector<uint32_t> dims{2};
};

/// Smallest weight of a Pauli commuting with the round's group but outside it, searched by
/// increasing weight up to w_max. Throws std::invalid_argument when the instance exceeds the limits.
std::optional<size_t> brute_force_distance(
    const IsgTrace &trace, size_t round, size_t w_max, const BruteForceLimits &limits = {});

}  // namespace floqudit

#endif
