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

#ifndef FLOQUDIT_PAULI_HPP
#define FLOQUDIT_PAULI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "floqudit/prime_field.hpp"

namespace floqudit {

/// A phase-free single-qudit Pauli X^x Z^z.
struct SingleQuditPauli {
    Residue x = 0;
    Residue z = 0;

    bool is_identity() const {
        return x == 0 && z == 0;
    }
    bool operator==(const SingleQuditPauli &other) const = default;
};

/// An n-qudit generalized Pauli operator w^l (X) X^{x_i} Z^{z_i} over prime dimension D.
///
/// Each tensor factor is written in normal form with the X power left of the Z power, which
/// fixes the product phase rule l_P + l_Q + sum_i z_{P,i} x_{Q,i}.
class PauliOperator {
   public:
    /// The identity on n qudits.
    PauliOperator(uint32_t dim, size_t num_qudits);
    /// Validates that every residue lies in [dim] and that the sequences have equal length.
    PauliOperator(uint32_t dim, Residue phase, std::vector<uint16_t> xs, std::vector<uint16_t> zs);

    /// Parses the literal format `w^l X^a Z^b @ v * w^l X^a Z^b @ u ...`.
    static PauliOperator from_literal(uint32_t dim, size_t num_qudits, std::string_view text);

    uint32_t dim() const {
        return dim_;
    }
    size_t num_qudits() const {
        return xs_.size();
    }
    Residue phase() const {
        return phase_;
    }
    Residue x(size_t q) const {
        return xs_[q];
    }
    Residue z(size_t q) const {
        return zs_[q];
    }
    const std::vector<uint16_t> &xs() const {
        return xs_;
    }
    const std::vector<uint16_t> &zs() const {
        return zs_;
    }
    SingleQuditPauli factor(size_t q) const {
        return {xs_[q], zs_[q]};
    }

    /// Coordinate of the 2n-dimensional symplectic vector (x columns first, then z columns).
    Residue symplectic(size_t col) const {
        return col < xs_.size() ? xs_[col] : zs_[col - xs_.size()];
    }

    /// True when every x and z exponent is zero (the phase is ignored).
    bool is_scalar() const;
    /// True for phase 0 with trivial support.
    bool is_identity() const;

    PauliOperator with_phase(Residue phase) const;
    /// Right-multiplies in place: *this = *this * other.
    PauliOperator &operator*=(const PauliOperator &other);

    bool operator==(const PauliOperator &other) const;
    bool operator!=(const PauliOperator &other) const;

    /// Prints in the literal format. The phase is carried by the first term.
    std::string str() const;

   private:
    uint32_t dim_;
    Residue phase_;
    std::vector<uint16_t> xs_;
    std::vector<uint16_t> zs_;
};

std::ostream &operator<<(std::ostream &out, const PauliOperator &p);

/// Returns c with P Q = w^c Q P.
Residue commutation(const PauliOperator &p, const PauliOperator &q);
/// Single-qudit commutation -ab' + ba'.
Residue commutation(const SingleQuditPauli &p, const SingleQuditPauli &q, uint32_t dim);

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);
PauliOperator operator*(const PauliOperator &p, const PauliOperator &q);
PauliOperator power(const PauliOperator &p, uint64_t exponent);
PauliOperator inverse(const PauliOperator &p);
size_t weight(const PauliOperator &p);

/// Qudit indices carrying a non-identity factor.
std::vector<size_t> support(const PauliOperator &p);

/// Embeds w^phase X^a Z^b on qudit v of an n-qudit register.
PauliOperator embed(SingleQuditPauli single, size_t v, size_t num_qudits, uint32_t dim, Residue phase = 0);

/// Builds the phase-free two-qudit operator [a]_v [b]_u.
PauliOperator embed_pair(SingleQuditPauli a, size_t v, SingleQuditPauli b, size_t u, size_t num_qudits, uint32_t dim);

/// Single-qudit product a*b with the phase dropped.
SingleQuditPauli symplectic_product(SingleQuditPauli a, SingleQuditPauli b, uint32_t dim);

/// True when P^D is the identity, the requirement for P to be measured with outcomes in [D].
bool has_order_dividing_dimension(const PauliOperator &p);

}  // namespace floqudit

#endif
