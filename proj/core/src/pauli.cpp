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

#include "floqudit/pauli.hpp"

#include <charconv>
#include <ostream>
#include <sstream>
#include <stdexcept>

using namespace floqudit;

namespace {

void require_compatible(const PauliOperator &p, const PauliOperator &q) {
    if (p.dim() != q.dim() || p.num_qudits() != q.num_qudits()) {
        std::stringstream ss;
        ss << "Incompatible Pauli operators: D=" << p.dim() << " n=" << p.num_qudits() << " versus D=" << q.dim()
           << " n=" << q.num_qudits() << ".";
        throw std::invalid_argument(ss.str());
    }
}

int64_t parse_int(std::string_view token, std::string_view whole) {
    int64_t v = 0;
    auto begin = token.data();
    auto end = token.data() + token.size();
    if (begin != end && *begin == '+') {
        begin++;
    }
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || begin == end) {
        std::stringstream ss;
        ss << "Bad integer '" << token << "' in Pauli literal '" << whole << "'.";
        throw std::invalid_argument(ss.str());
    }
    return v;
}

std::vector<std::string_view> split_whitespace(std::string_view text) {
    std::vector<std::string_view> out;
    size_t k = 0;
    while (k < text.size()) {
        while (k < text.size() && isspace((unsigned char)text[k])) {
            k++;
        }
        size_t start = k;
        while (k < text.size() && !isspace((unsigned char)text[k])) {
            k++;
        }
        if (k > start) {
            out.push_back(text.substr(start, k - start));
        }
    }
    return out;
}

int64_t parse_prefixed(std::string_view token, std::string_view prefix, std::string_view whole) {
    if (token.substr(0, prefix.size()) != prefix) {
        std::stringstream ss;
        ss << "Expected '" << prefix << "<int>' but got '" << token << "' in Pauli literal '" << whole << "'.";
        throw std::invalid_argument(ss.str());
    }
    return parse_int(token.substr(prefix.size()), whole);
}

}  // namespace

PauliOperator::PauliOperator(uint32_t dim, size_t num_qudits)
    : dim_(dim), phase_(0), xs_(num_qudits, 0), zs_(num_qudits, 0) {
    validate_prime_dimension(dim);
}

PauliOperator::PauliOperator(uint32_t dim, Residue phase, std::vector<uint16_t> xs, std::vector<uint16_t> zs)
    : dim_(dim), phase_(phase), xs_(std::move(xs)), zs_(std::move(zs)) {
    validate_prime_dimension(dim);
    if (xs_.size() != zs_.size()) {
        throw std::invalid_argument("Pauli x and z exponent sequences have different lengths.");
    }
    if (phase_ >= dim) {
        std::stringstream ss;
        ss << "Phase exponent " << phase_ << " is not a residue modulo " << dim << ".";
        throw std::invalid_argument(ss.str());
    }
    for (size_t q = 0; q < xs_.size(); q++) {
        if (xs_[q] >= dim || zs_[q] >= dim) {
            std::stringstream ss;
            ss << "Exponent on qudit " << q << " is not a residue modulo " << dim << ".";
            throw std::invalid_argument(ss.str());
        }
    }
}

PauliOperator PauliOperator::from_literal(uint32_t dim, size_t num_qudits, std::string_view text) {
    PauliOperator result(dim, num_qudits);
    size_t start = 0;
    while (start <= text.size()) {
        size_t star = text.find('*', start);
        std::string_view term = text.substr(start, star == std::string_view::npos ? std::string_view::npos : star - start);
        auto tokens = split_whitespace(term);
        if (tokens.size() != 5 || tokens[3] != "@") {
            std::stringstream ss;
            ss << "Pauli literal term '" << term << "' is not of the form 'w^l X^a Z^b @ v' in '" << text << "'.";
            throw std::invalid_argument(ss.str());
        }
        int64_t l = parse_prefixed(tokens[0], "w^", text);
        int64_t a = parse_prefixed(tokens[1], "X^", text);
        int64_t b = parse_prefixed(tokens[2], "Z^", text);
        int64_t v = parse_int(tokens[4], text);
        if (v < 0 || (size_t)v >= num_qudits) {
            std::stringstream ss;
            ss << "Qudit index " << v << " out of range for n=" << num_qudits << " in Pauli literal '" << text << "'.";
            throw std::invalid_argument(ss.str());
        }
        result *= embed({mod_reduce(a, dim), mod_reduce(b, dim)}, (size_t)v, num_qudits, dim, mod_reduce(l, dim));
        if (star == std::string_view::npos) {
            break;
        }
        start = star + 1;
    }
    return result;
}

bool PauliOperator::is_scalar() const {
    for (size_t q = 0; q < xs_.size(); q++) {
        if (xs_[q] || zs_[q]) {
            return false;
        }
    }
    return true;
}

bool PauliOperator::is_identity() const {
    return phase_ == 0 && is_scalar();
}

PauliOperator PauliOperator::with_phase(Residue phase) const {
    PauliOperator result = *this;
    result.phase_ = phase % dim_;
    return result;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    require_compatible(*this, other);
    uint64_t acc = (uint64_t)phase_ + other.phase_;
    for (size_t q = 0; q < xs_.size(); q++) {
        acc += (uint64_t)zs_[q] * other.xs_[q];
        xs_[q] = (uint16_t)mod_add(xs_[q], other.xs_[q], dim_);
        zs_[q] = (uint16_t)mod_add(zs_[q], other.zs_[q], dim_);
    }
    phase_ = (Residue)(acc % dim_);
    return *this;
}

bool PauliOperator::operator==(const PauliOperator &other) const {
    return dim_ == other.dim_ && phase_ == other.phase_ && xs_ == other.xs_ && zs_ == other.zs_;
}

bool PauliOperator::operator!=(const PauliOperator &other) const {
    return !(*this == other);
}

std::string PauliOperator::str() const {
    std::stringstream ss;
    bool first = true;
    for (size_t q = 0; q < xs_.size(); q++) {
        if (xs_[q] == 0 && zs_[q] == 0) {
            continue;
        }
        if (!first) {
            ss << " * ";
        }
        ss << "w^" << (first ? phase_ : 0) << " X^" << xs_[q] << " Z^" << zs_[q] << " @ " << q;
        first = false;
    }
    if (first) {
        ss << "w^" << phase_ << " X^0 Z^0 @ 0";
    }
    return ss.str();
}

std::ostream &floqudit::operator<<(std::ostream &out, const PauliOperator &p) {
    return out << p.str();
}

Residue floqudit::commutation(const PauliOperator &p, const PauliOperator &q) {
    require_compatible(p, q);
    uint32_t d = p.dim();
    uint64_t plus = 0;
    uint64_t minus = 0;
    for (size_t k = 0; k < p.num_qudits(); k++) {
        plus += (uint64_t)p.z(k) * q.x(k);
        minus += (uint64_t)p.x(k) * q.z(k);
    }
    return mod_sub((Residue)(plus % d), (Residue)(minus % d), d);
}

Residue floqudit::commutation(const SingleQuditPauli &p, const SingleQuditPauli &q, uint32_t dim) {
    return mod_sub(mod_mul(p.z, q.x, dim), mod_mul(p.x, q.z, dim), dim);
}

PauliOperator floqudit::multiply(const PauliOperator &p, const PauliOperator &q) {
    PauliOperator result = p;
    result *= q;
    return result;
}

PauliOperator floqudit::operator*(const PauliOperator &p, const PauliOperator &q) {
    return multiply(p, q);
}

PauliOperator floqudit::power(const PauliOperator &p, uint64_t exponent) {
    uint32_t d = p.dim();
    Residue e = (Residue)(exponent % d);
    // P^e = w^{e l + (sum z x) e(e-1)/2} X^{e x} Z^{e z}, with e(e-1)/2 taken on the exact exponent.
    uint64_t zx = 0;
    std::vector<uint16_t> xs(p.num_qudits());
    std::vector<uint16_t> zs(p.num_qudits());
    for (size_t q = 0; q < p.num_qudits(); q++) {
        zx += (uint64_t)p.z(q) * p.x(q);
        xs[q] = (uint16_t)mod_mul(p.x(q), e, d);
        zs[q] = (uint16_t)mod_mul(p.z(q), e, d);
    }
    uint64_t ex = exponent % (2 * (uint64_t)d);
    Residue tri = (Residue)((ex * (ex + 2 * (uint64_t)d - 1) / 2) % d);
    Residue phase = mod_add(mod_mul(p.phase(), e, d), mod_mul((Residue)(zx % d), tri, d), d);
    return PauliOperator(d, phase, std::move(xs), std::move(zs));
}

PauliOperator floqudit::inverse(const PauliOperator &p) {
    uint32_t d = p.dim();
    uint64_t zx = 0;
    std::vector<uint16_t> xs(p.num_qudits());
    std::vector<uint16_t> zs(p.num_qudits());
    for (size_t q = 0; q < p.num_qudits(); q++) {
        zx += (uint64_t)p.z(q) * p.x(q);
        xs[q] = (uint16_t)mod_neg(p.x(q), d);
        zs[q] = (uint16_t)mod_neg(p.z(q), d);
    }
    Residue phase = mod_add(mod_neg(p.phase(), d), (Residue)(zx % d), d);
    return PauliOperator(d, phase, std::move(xs), std::move(zs));
}

size_t floqudit::weight(const PauliOperator &p) {
    size_t w = 0;
    for (size_t q = 0; q < p.num_qudits(); q++) {
        w += p.x(q) != 0 || p.z(q) != 0;
    }
    return w;
}

std::vector<size_t> floqudit::support(const PauliOperator &p) {
    std::vector<size_t> out;
    for (size_t q = 0; q < p.num_qudits(); q++) {
        if (p.x(q) != 0 || p.z(q) != 0) {
            out.push_back(q);
        }
    }
    return out;
}

PauliOperator floqudit::embed(SingleQuditPauli single, size_t v, size_t num_qudits, uint32_t dim, Residue phase) {
    if (v >= num_qudits) {
        std::stringstream ss;
        ss << "Cannot embed on qudit " << v << " of an n=" << num_qudits << " register.";
        throw std::invalid_argument(ss.str());
    }
    std::vector<uint16_t> xs(num_qudits, 0);
    std::vector<uint16_t> zs(num_qudits, 0);
    xs[v] = (uint16_t)(single.x % dim);
    zs[v] = (uint16_t)(single.z % dim);
    return PauliOperator(dim, phase % dim, std::move(xs), std::move(zs));
}

PauliOperator floqudit::embed_pair(
    SingleQuditPauli a, size_t v, SingleQuditPauli b, size_t u, size_t num_qudits, uint32_t dim) {
    if (v == u) {
        std::stringstream ss;
        ss << "Two-qudit operator needs distinct qudits, but got " << v << " twice.";
        throw std::invalid_argument(ss.str());
    }
    return embed(a, v, num_qudits, dim) * embed(b, u, num_qudits, dim);
}

SingleQuditPauli floqudit::symplectic_product(SingleQuditPauli a, SingleQuditPauli b, uint32_t dim) {
    return {mod_add(a.x, b.x, dim), mod_add(a.z, b.z, dim)};
}

bool floqudit::has_order_dividing_dimension(const PauliOperator &p) {
    return power(p, p.dim()).is_identity();
}
