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

#ifndef FLOQUDIT_DENSE_ORACLE_HPP
#define FLOQUDIT_DENSE_ORACLE_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "floqudit/pauli.hpp"
#include "floqudit/stabilizer.hpp"

namespace floqudit {

/// Dense state-space matrices used to cross-check the symbolic algebra on tiny registers.
using DenseMatrix = Eigen::MatrixXcd;

/// Default cap on D^n for dense matrices.
constexpr uint64_t DEFAULT_ORACLE_BOUND = 27;

/// The active cap: FLOQUDIT_ORACLE_BOUND if set to a positive integer, else DEFAULT_ORACLE_BOUND.
uint64_t oracle_bound();

/// D^n, or throws std::invalid_argument if it exceeds oracle_bound().
size_t oracle_space_size(uint32_t dim, size_t num_qudits);

/// w^l (X)_i X^{x_i} Z^{z_i}, with qudit 0 as the most significant tensor factor.
DenseMatrix dense_matrix(const PauliOperator &p);

/// Projector onto the w^a eigenspace of P: (1/D) sum_j (w^{-a} P)^j.
DenseMatrix dense_eigenprojector(const PauliOperator &p, Residue a);

/// Projector onto the joint +1 eigenspace of the group: product over generators of (1/D) sum_j g^j.
DenseMatrix dense_codespace_projector(const GeneratorSet &s);

/// Trace of dense_codespace_projector, rounded to the nearest integer.
size_t codespace_dimension_oracle(const GeneratorSet &s);

bool dense_approx_equal(const DenseMatrix &a, const DenseMatrix &b, double tol = 1e-9);

/// Outcome of one oracle suite.
struct OracleSuiteReport {
    std::string name;
    size_t cases = 0;
    size_t failures = 0;
    /// First few failure descriptions.
    std::vector<std::string> messages;

    bool ok() const {
        return failures == 0 && cases > 0;
    }
};

/// Products and commutation phases against dense matrices: exhaustive for n <= min(max_n, 2), randomized at n = 3.
OracleSuiteReport run_pauli_oracle_suite(size_t max_n, const std::vector<uint32_t> &dims, uint64_t seed = 1);

/// Measurement update rules against dense projector conditioning, exhaustive over groups generated by up to
/// two elements of a fixed pool and all single-qudit measurements.
OracleSuiteReport run_measurement_oracle_suite(size_t max_n, const std::vector<uint32_t> &dims);

/// Outcome uniformity of random measurements: 10 D^2 seeded trials per configuration, each frequency within 5 sigma.
OracleSuiteReport run_outcome_statistics_suite(const std::vector<uint32_t> &dims, uint64_t seed = 7);

/// Frame rule o + c(M, E) against dense error-then-measure outcome distributions, exhaustive over
/// single-qudit errors.
OracleSuiteReport run_frame_soundness_suite(size_t max_n, const std::vector<uint32_t> &dims);

/// Every Pauli on n qudits whose D-th power is the identity, with phase 0.
std::vector<PauliOperator> all_measurable_paulis(uint32_t dim, size_t num_qudits);

}  // namespace floqudit

#endif
