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

#include "floqudit/stabilizer.hpp"

#include <sstream>
#include <stdexcept>

#include "floqudit/gf_linear.hpp"
#include "text_util.hpp"

using namespace floqudit;

namespace floqudit {

struct MeasurementEngine {
    static std::vector<PauliOperator> &gens(GeneratorSet &s) {
        return s.generators_;
    }
};

}  // namespace floqudit

namespace {

void require_compatible(const GeneratorSet &s, const PauliOperator &p) {
    if (s.dim() != p.dim() || s.num_qudits() != p.num_qudits()) {
        std::stringstream ss;
        ss << "Pauli operator (D=" << p.dim() << ", n=" << p.num_qudits()
           << ") does not match the stabilizer group (D=" << s.dim() << ", n=" << s.num_qudits() << ").";
        throw std::invalid_argument(ss.str());
    }
}

/// Gaussian elimination by group multiplication. Rows must pairwise commute.
CanonicalTableau reduce_rows(std::vector<PauliOperator> rows, uint32_t dim, size_t n) {
    CanonicalTableau out;
    size_t r = 0;
    for (size_t col = 0; col < 2 * n && r < rows.size(); col++) {
        size_t found = rows.size();
        for (size_t k = r; k < rows.size(); k++) {
            if (rows[k].symplectic(col)) {
                found = k;
                break;
            }
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[found]);
        Residue lead = rows[r].symplectic(col);
        if (lead != 1) {
            rows[r] = power(rows[r], mod_inverse(lead, dim));
        }
        for (size_t k = 0; k < rows.size(); k++) {
            if (k == r) {
                continue;
            }
            Residue f = rows[k].symplectic(col);
            if (f) {
                rows[k] *= power(rows[r], dim - f);
            }
        }
        out.pivots.push_back(col);
        r++;
    }
    for (size_t k = r; k < rows.size(); k++) {
        if (!rows[k].is_scalar()) {
            throw std::logic_error("Row reduction left a non-scalar residual row.");
        }
        if (rows[k].phase() != 0) {
            std::stringstream ss;
            ss << "Invalid stabilizer group: it contains the scalar w^" << rows[k].phase() << " I.";
            throw std::invalid_argument(ss.str());
        }
    }
    rows.erase(rows.begin() + (std::ptrdiff_t)r, rows.end());
    out.rows = std::move(rows);
    return out;
}

/// Commutation restricted to the support of p.
Residue sparse_commutation(const PauliOperator &p, const std::vector<size_t> &p_support, const PauliOperator &q) {
    uint32_t d = p.dim();
    uint64_t plus = 0;
    uint64_t minus = 0;
    for (size_t k : p_support) {
        plus += (uint64_t)p.z(k) * q.x(k);
        minus += (uint64_t)p.x(k) * q.z(k);
    }
    return mod_sub((Residue)(plus % d), (Residue)(minus % d), d);
}

Residue choose_outcome(const OutcomeMode &mode, uint32_t dim) {
    if (auto forced = std::get_if<ForcedOutcome>(&mode)) {
        if (forced->value >= dim) {
            std::stringstream ss;
            ss << "Forced outcome " << forced->value << " is not a residue modulo " << dim << ".";
            throw std::invalid_argument(ss.str());
        }
        return forced->value;
    }
    if (auto sampled = std::get_if<SampledOutcomes>(&mode)) {
        if (sampled->rng == nullptr) {
            throw std::invalid_argument("Sampled outcome mode needs a random generator.");
        }
        return uniform_residue(*sampled->rng, dim);
    }
    return 0;
}

}  // namespace

GeneratorSet::GeneratorSet(uint32_t dim, size_t num_qudits) : dim_(dim), num_qudits_(num_qudits) {
    validate_prime_dimension(dim);
}

GeneratorSet::GeneratorSet(uint32_t dim, size_t num_qudits, std::vector<PauliOperator> generators)
    : dim_(dim), num_qudits_(num_qudits), generators_(std::move(generators)) {
    validate_prime_dimension(dim);
    for (size_t i = 0; i < generators_.size(); i++) {
        require_compatible(*this, generators_[i]);
        if (!has_order_dividing_dimension(generators_[i])) {
            std::stringstream ss;
            ss << "Generator " << i << " (" << generators_[i] << ") does not satisfy g^D = I.";
            throw std::invalid_argument(ss.str());
        }
        for (size_t j = 0; j < i; j++) {
            if (commutation(generators_[i], generators_[j]) != 0) {
                std::stringstream ss;
                ss << "Generators " << j << " and " << i << " do not commute.";
                throw std::invalid_argument(ss.str());
            }
        }
    }
    reduce_rows(generators_, dim_, num_qudits_);
}

std::optional<Residue> floqudit::contains_up_to_phase(const GeneratorSet &s, const PauliOperator &p) {
    require_compatible(s, p);
    std::vector<size_t> p_support = support(p);
    for (const auto &g : s.generators()) {
        if (sparse_commutation(p, p_support, g) != 0) {
            return std::nullopt;
        }
    }
    CanonicalTableau tableau = reduce_rows(s.generators(), s.dim(), s.num_qudits());
    PauliOperator rem = p;
    for (size_t k = 0; k < tableau.rows.size(); k++) {
        Residue f = rem.symplectic(tableau.pivots[k]);
        if (f) {
            rem *= power(tableau.rows[k], s.dim() - f);
        }
    }
    if (!rem.is_scalar()) {
        return std::nullopt;
    }
    // rem = p * (group element) = w^o I, so w^{-o} p lies in the group.
    return rem.phase();
}

MeasurementOutcome floqudit::measure_in_place(
    GeneratorSet &s, const PauliOperator &p, const OutcomeMode &mode, UpdateRule *rule_out) {
    require_compatible(s, p);
    if (!has_order_dividing_dimension(p)) {
        std::stringstream ss;
        ss << "Cannot measure " << p << ": its D-th power is not the identity, so its eigenvalues are not powers of w.";
        throw std::invalid_argument(ss.str());
    }
    uint32_t d = s.dim();
    auto &gens = MeasurementEngine::gens(s);
    std::vector<size_t> p_support = support(p);
    std::vector<Residue> comm(gens.size());
    size_t star = gens.size();
    for (size_t i = 0; i < gens.size(); i++) {
        comm[i] = sparse_commutation(p, p_support, gens[i]);
        if (comm[i] && star == gens.size()) {
            star = i;
        }
    }

    if (star == gens.size()) {
        std::optional<Residue> known = contains_up_to_phase(s, p);
        if (known.has_value()) {
            if (auto forced = std::get_if<ForcedOutcome>(&mode); forced && forced->value != *known) {
                std::stringstream ss;
                ss << "Forced outcome " << forced->value << " contradicts the deterministic outcome " << *known
                   << " of measuring " << p << ".";
                throw std::invalid_argument(ss.str());
            }
            if (rule_out) {
                *rule_out = UpdateRule::ALREADY_STABILIZED;
            }
            return {*known, true};
        }
        Residue o = choose_outcome(mode, d);
        gens.push_back(p.with_phase(mod_sub(p.phase(), o, d)));
        if (rule_out) {
            *rule_out = UpdateRule::COMMUTING;
        }
        return {o, false};
    }

    Residue inv = mod_inverse(comm[star], d);
    for (size_t i = star + 1; i < gens.size(); i++) {
        if (comm[i]) {
            Residue t = mod_neg(mod_mul(comm[i], inv, d), d);
            gens[i] *= power(gens[star], t);
        }
    }
    Residue o = choose_outcome(mode, d);
    gens[star] = p.with_phase(mod_sub(p.phase(), o, d));
    if (rule_out) {
        *rule_out = UpdateRule::ANTICOMMUTING;
    }
    return {o, false};
}

MeasurementResult floqudit::measure(const GeneratorSet &s, const PauliOperator &p, const OutcomeMode &mode) {
    GeneratorSet next = s;
    UpdateRule rule;
    MeasurementOutcome outcome = measure_in_place(next, p, mode, &rule);
    return {std::move(next), outcome, rule};
}

CanonicalTableau floqudit::canonical_form(const GeneratorSet &s) {
    return reduce_rows(s.generators(), s.dim(), s.num_qudits());
}

bool floqudit::groups_equal(const GeneratorSet &a, const GeneratorSet &b) {
    if (a.dim() != b.dim() || a.num_qudits() != b.num_qudits()) {
        return false;
    }
    return canonical_form(a) == canonical_form(b);
}

size_t floqudit::rank(const GeneratorSet &s) {
    return symplectic_rank(s.generators(), s.dim(), s.num_qudits());
}

Residue floqudit::uniform_residue(std::mt19937_64 &rng, uint32_t d) {
    // Rejection sampling keeps the draw exactly uniform and independent of the standard library.
    uint64_t limit = UINT64_MAX - UINT64_MAX % d;
    while (true) {
        uint64_t v = rng();
        if (v < limit) {
            return (Residue)(v % d);
        }
    }
}

GeneratorSet floqudit::parse_generator_set(std::string_view text) {
    auto lines = split_content_lines(text);
    if (lines.empty()) {
        throw std::invalid_argument("Generator-set text is missing its 'D=<d> n=<n>' header.");
    }
    auto header = split_tokens(lines[0].text);
    if (header.size() != 2) {
        std::stringstream ss;
        ss << "Line " << lines[0].number << ": expected header 'D=<d> n=<n>'.";
        throw std::invalid_argument(ss.str());
    }
    uint32_t dim = (uint32_t)parse_key_value(header[0], "D", lines[0].number);
    size_t n = (size_t)parse_key_value(header[1], "n", lines[0].number);
    std::vector<PauliOperator> gens;
    for (size_t k = 1; k < lines.size(); k++) {
        try {
            gens.push_back(PauliOperator::from_literal(dim, n, lines[k].text));
        } catch (const std::invalid_argument &ex) {
            std::stringstream ss;
            ss << "Line " << lines[k].number << ": " << ex.what();
            throw std::invalid_argument(ss.str());
        }
    }
    return GeneratorSet(dim, n, std::move(gens));
}

std::string floqudit::format_generator_set(const GeneratorSet &s) {
    std::stringstream ss;
    ss << "D=" << s.dim() << " n=" << s.num_qudits() << "\n";
    for (const auto &g : s.generators()) {
        ss << g << "\n";
    }
    return ss.str();
}
