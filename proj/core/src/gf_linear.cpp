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

#include "floqudit/gf_linear.hpp"

#include <sstream>
#include <stdexcept>

using namespace floqudit;

GfMatrix::GfMatrix(uint32_t dim, size_t rows, size_t cols)
    : dim_(dim), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    validate_prime_dimension(dim);
}

void GfMatrix::append_row(const std::vector<Residue> &values) {
    if (values.size() != cols_) {
        std::stringstream ss;
        ss << "Row of length " << values.size() << " does not fit a matrix with " << cols_ << " columns.";
        throw std::invalid_argument(ss.str());
    }
    for (Residue v : values) {
        data_.push_back((uint16_t)(v % dim_));
    }
    rows_++;
}

std::vector<size_t> GfMatrix::row_reduce() {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; c++) {
        size_t found = rows_;
        for (size_t k = r; k < rows_; k++) {
            if (at(k, c)) {
                found = k;
                break;
            }
        }
        if (found == rows_) {
            continue;
        }
        if (found != r) {
            for (size_t j = 0; j < cols_; j++) {
                std::swap(data_[r * cols_ + j], data_[found * cols_ + j]);
            }
        }
        Residue scale = mod_inverse(at(r, c), dim_);
        uint16_t *pr = row(r);
        for (size_t j = c; j < cols_; j++) {
            pr[j] = (uint16_t)mod_mul(pr[j], scale, dim_);
        }
        for (size_t k = 0; k < rows_; k++) {
            if (k == r) {
                continue;
            }
            Residue f = at(k, c);
            if (!f) {
                continue;
            }
            uint16_t *pk = row(k);
            Residue neg = mod_neg(f, dim_);
            for (size_t j = c; j < cols_; j++) {
                if (pr[j]) {
                    pk[j] = (uint16_t)((pk[j] + (uint64_t)neg * pr[j]) % dim_);
                }
            }
        }
        pivots.push_back(c);
        r++;
    }
    return pivots;
}

GfMatrix GfMatrix::multiply(const GfMatrix &other) const {
    if (cols_ != other.rows_ || dim_ != other.dim_) {
        throw std::invalid_argument("Incompatible GF(D) matrix product.");
    }
    GfMatrix out(dim_, rows_, other.cols_);
    for (size_t i = 0; i < rows_; i++) {
        std::vector<uint64_t> acc(other.cols_, 0);
        for (size_t k = 0; k < cols_; k++) {
            uint64_t a = at(i, k);
            if (!a) {
                continue;
            }
            const uint16_t *ok = other.row(k);
            for (size_t j = 0; j < other.cols_; j++) {
                acc[j] += a * ok[j];
            }
        }
        for (size_t j = 0; j < other.cols_; j++) {
            out.set(i, j, (Residue)(acc[j] % dim_));
        }
    }
    return out;
}

GfMatrix GfMatrix::transpose() const {
    GfMatrix out(dim_, cols_, rows_);
    for (size_t i = 0; i < rows_; i++) {
        for (size_t j = 0; j < cols_; j++) {
            out.set(j, i, at(i, j));
        }
    }
    return out;
}

size_t floqudit::gf_rank(GfMatrix m) {
    return m.row_reduce().size();
}

GfMatrix floqudit::gf_nullspace(const GfMatrix &m) {
    GfMatrix reduced = m;
    std::vector<size_t> pivots = reduced.row_reduce();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots) {
        is_pivot[c] = true;
    }
    GfMatrix basis(m.dim(), 0, m.cols());
    for (size_t free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Residue> v(m.cols(), 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); r++) {
            v[pivots[r]] = mod_neg(reduced.at(r, free), m.dim());
        }
        basis.append_row(v);
    }
    return basis;
}

GfMatrix floqudit::symplectic_matrix(const std::vector<PauliOperator> &ops, uint32_t dim, size_t num_qudits) {
    GfMatrix m(dim, ops.size(), 2 * num_qudits);
    for (size_t i = 0; i < ops.size(); i++) {
        if (ops[i].num_qudits() != num_qudits || ops[i].dim() != dim) {
            throw std::invalid_argument("Operator size does not match symplectic matrix.");
        }
        for (size_t c = 0; c < 2 * num_qudits; c++) {
            m.set(i, c, ops[i].symplectic(c));
        }
    }
    return m;
}

size_t floqudit::symplectic_rank(const std::vector<PauliOperator> &ops, uint32_t dim, size_t num_qudits) {
    return gf_rank(symplectic_matrix(ops, dim, num_qudits));
}
