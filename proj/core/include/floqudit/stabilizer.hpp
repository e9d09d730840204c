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

#ifndef FLOQUDIT_STABILIZER_HPP
#define FLOQUDIT_STABILIZER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "floqudit/pauli.hpp"

namespace floqudit {

/// An ordered list of mutually commuting Pauli generators of a stabilizer group.
///
/// Generators may be dependent. The generated group never contains w^l I with l != 0.
class GeneratorSet {
   public:
    /// The trivial group.
    GeneratorSet(uint32_t dim, size_t num_qudits);
    /// Validates pairwise commutation, that each generator has order dividing D, and that the
    /// generated group contains no nontrivial scalar.
    GeneratorSet(uint32_t dim, size_t num_qudits, std::vector<PauliOperator> generators);

    uint32_t dim() const {
        return dim_;
    }
    size_t num_qudits() const {
        return num_qudits_;
    }
    size_t size() const {
        return generators_.size();
    }
    const std::vector<PauliOperator> &generators() const {
        return generators_;
    }
    const PauliOperator &operator[](size_t k) const {
        return generators_[k];
    }

    bool operator==(const GeneratorSet &other) const = default;

   private:
    friend struct MeasurementEngine;
    uint32_t dim_;
    size_t num_qudits_;
    std::vector<PauliOperator> generators_;
};

/// Reduced row echelon form of a stabilizer group, with rows formed by group multiplication.
struct CanonicalTableau {
    std::vector<PauliOperator> rows;
    /// Pivot column of each row; columns 0..n-1 are x, n..2n-1 are z.
    std::vector<size_t> pivots;

    size_t rank() const {
        return rows.size();
    }
    bool operator==(const CanonicalTableau &other) const = default;
};

struct MeasurementOutcome {
    Residue value = 0;
    bool deterministic = false;

    bool operator==(const MeasurementOutcome &other) const = default;
};

/// Which update rule handled a measurement.
enum class UpdateRule : uint8_t {
    /// w^a P already in the group; the outcome is determined.
    ALREADY_STABILIZED = 1,
    /// P commutes with every generator but is not in the group; appended.
    COMMUTING = 2,
    /// P fails to commute with some generator, which is replaced.
    ANTICOMMUTING = 3,
};

struct ForcedOutcome {
    Residue value;
};
struct AllZeroOutcomes {};
struct SampledOutcomes {
    std::mt19937_64 *rng;
};
/// How outcomes of non-deterministic measurements are chosen.
using OutcomeMode = std::variant<ForcedOutcome, AllZeroOutcomes, SampledOutcomes>;

struct MeasurementResult {
    GeneratorSet state;
    MeasurementOutcome outcome;
    UpdateRule rule;
};

/// Returns the eigenvalue exponent o of P on the code space, meaning w^{-o} P is in S, or absent when
/// no phase multiple of P belongs to S.
std::optional<Residue> contains_up_to_phase(const GeneratorSet &s, const PauliOperator &p);

/// Measures P and returns the updated group. Throws std::invalid_argument when a forced outcome
/// contradicts a deterministic measurement or when P^D != I.
MeasurementResult measure(const GeneratorSet &s, const PauliOperator &p, const OutcomeMode &mode);

/// In-place form of measure used by long schedules.
MeasurementOutcome measure_in_place(
    GeneratorSet &s, const PauliOperator &p, const OutcomeMode &mode, UpdateRule *rule_out = nullptr);

CanonicalTableau canonical_form(const GeneratorSet &s);
bool groups_equal(const GeneratorSet &a, const GeneratorSet &b);
size_t rank(const GeneratorSet &s);

/// Draws a uniform residue in [d].
Residue uniform_residue(std::mt19937_64 &rng, uint32_t d);

/// Parses a generator-set file: header `D=<d> n=<n>`, one Pauli literal per line, `#` comments.
GeneratorSet parse_generator_set(std::string_view text);
std::string format_generator_set(const GeneratorSet &s);

}  // namespace floqudit

#endif
