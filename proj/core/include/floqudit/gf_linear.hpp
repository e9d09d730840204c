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

#ifndef FLOQUDIT_GF_LINEAR_HPP
#define FLOQUDIT_GF_LINEAR_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "floqudit/pauli.hpp"
#include "floqudit/prime_field.hpp"

namespace floqudit {

/// Dense row-major matrix over GF(D).
class GfMatrix {
   public:
    GfMatrix(uint32_t dim, size_t rows, size_t cols);

    uint32_t dim() const {
        return dim_;
    }
    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    Residue at(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }
    void set(size_t r, size_t c, Residue v) {
        data_[r * cols_ + c] = (uint16_t)(v % dim_);
    }
    uint16_t *row(size_t r) {
        return data_.data() + r * cols_;
    }
    const uint16_t *row(size_t r) const {
        return data_.data() + r * cols_;
    }

    void append_row(const std::vector<Residue> &values);

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<size_t> row_reduce();

    GfMatrix multiply(const GfMatrix &other) const;
    GfMatrix transpose() const;

   private:
    uint32_t dim_;
    size_t rows_;
    size_t cols_;
    std::vector<uint16_t> data_;
};

size_t gf_rank(GfMatrix m);

/// Basis (as rows) of the right kernel {v : M v = 0}.
GfMatrix gf_nullspace(const GfMatrix &m);

/// Rows are the 2n-dimensional symplectic vectors (x | z) of the given operators.
GfMatrix symplectic_matrix(const std::vector<PauliOperator> &ops, uint32_t dim, size_t num_qudits);

/// GF(D) rank of the symplectic vectors of the given operators.
size_t symplectic_rank(const std::vector<PauliOperator> &ops, uint32_t dim, size_t num_qudits);

}  // namespace floqudit

#endif
