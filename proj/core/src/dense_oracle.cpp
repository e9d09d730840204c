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

#include "floqudit/dense_oracle.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "floqudit/noise_syndrome.hpp"

using namespace floqudit;

namespace {

constexpr size_t MAX_MESSAGES = 8;

std::complex<double> omega_power(uint64_t k, uint32_t d) {
    double angle = 2.0 * std::numbers::pi * (double)(k % d) / (double)d;
    return {std::cos(angle), std::sin(angle)};
}

void record_failure(OracleSuiteReport &report, const std::string &message) {
    report.failures++;
    if (report.messages.size() < MAX_MESSAGES) {
        report.messages.push_back(message);
    }
}

PauliOperator random_pauli(std::mt19937_64 &rng, uint32_t d, size_t n) {
    std::vector<uint16_t> xs(n);
    std::vector<uint16_t> zs(n);
    for (size_t q = 0; q < n; q++) {
        xs[q] = (uint16_t)uniform_residue(rng, d);
        zs[q] = (uint16_t)uniform_residue(rng, d);
    }
    return PauliOperator(d, uniform_residue(rng, d), std::move(xs), std::move(zs));
}

/// Every n-qudit Pauli with the given phase, in lexicographic order of (x, z).
std::vector<PauliOperator> all_paulis(uint32_t d, size_t n, Residue phase) {
    std::vector<PauliOperator> out;
    size_t count = 1;
    for (size_t k = 0; k < 2 * n; k++) {
        count *= d;
    }
    for (size_t code = 0; code < count; code++) {
        std::vector<uint16_t> xs(n);
        std::vector<uint16_t> zs(n);
        size_t c = code;
        for (size_t q = 0; q < n; q++) {
            xs[q] = (uint16_t)(c % d);
            c /= d;
            zs[q] = (uint16_t)(c % d);
            c /= d;
        }
        out.emplace_back(d, phase, std::move(xs), std::move(zs));
    }
    return out;
}

std::vector<PauliOperator> single_qudit_measurements(uint32_t d, size_t n) {
    std::vector<PauliOperator> out;
    for (size_t q = 0; q < n; q++) {
        for (Residue a = 0; a < d; a++) {
            for (Residue b = 0; b < d; b++) {
                if (a == 0 && b == 0) {
                    continue;
                }
                PauliOperator p = embed({a, b}, q, n, d);
                if (has_order_dividing_dimension(p)) {
                    out.push_back(p);
                }
            }
        }
    }
    return out;
}

std::vector<PauliOperator> single_qudit_errors(uint32_t d, size_t n) {
    std::vector<PauliOperator> out;
    for (size_t q = 0; q < n; q++) {
        for (Residue a = 0; a < d; a++) {
            for (Residue b = 0; b < d; b++) {
                if (a != 0 || b != 0) {
                    out.push_back(embed({a, b}, q, n, d));
                }
            }
        }
    }
    return out;
}

/// The trivial group plus every valid group generated by one or two pool elements.
std::vector<GeneratorSet> pool_groups(uint32_t d, size_t n, size_t max_generators) {
    std::vector<PauliOperator> pool;
    for (const auto &p : all_measurable_paulis(d, n)) {
        for (Residue l = 0; l < d; l++) {
            pool.push_back(p.with_phase(l));
        }
    }
    std::vector<GeneratorSet> out;
    out.emplace_back(d, n);
    for (size_t i = 0; i < pool.size(); i++) {
        out.emplace_back(d, n, std::vector<PauliOperator>{pool[i]});
        if (max_generators < 2) {
            continue;
        }
        for (size_t j = i + 1; j < pool.size(); j++) {
            if (commutation(pool[i], pool[j]) != 0) {
                continue;
            }
            try {
                out.emplace_back(d, n, std::vector<PauliOperator>{pool[i], pool[j]});
            } catch (const std::invalid_argument &) {
                // The pair generates a nontrivial scalar.
            }
        }
    }
    return out;
}

std::string describe(const GeneratorSet &s) {
    std::stringstream ss;
    ss << "<";
    for (size_t k = 0; k < s.size(); k++) {
        ss << (k ? ", " : "") << s[k];
    }
    ss << ">";
    return ss.str();
}

}  // namespace

uint64_t floqudit::oracle_bound() {
    const char *env = std::getenv("FLOQUDIT_ORACLE_BOUND");
    if (env != nullptr && *env != '\0') {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0' && v > 0) {
            return v;
        }
    }
    return DEFAULT_ORACLE_BOUND;
}

size_t floqudit::oracle_space_size(uint32_t dim, size_t num_qudits) {
    uint64_t bound = oracle_bound();
    uint64_t size = 1;
    for (size_t k = 0; k < num_qudits; k++) {
        size *= dim;
        if (size > bound) {
            std::stringstream ss;
            ss << "Dense oracle size D^n = " << dim << "^" << num_qudits << " exceeds the bound " << bound
               << " (set FLOQUDIT_ORACLE_BOUND to raise it).";
            throw std::invalid_argument(ss.str());
        }
    }
    return (size_t)size;
}

DenseMatrix floqudit::dense_matrix(const PauliOperator &p) {
    uint32_t d = p.dim();
    size_t n = p.num_qudits();
    size_t size = oracle_space_size(d, n);
    DenseMatrix m = DenseMatrix::Zero((Eigen::Index)size, (Eigen::Index)size);
    std::vector<size_t> digits(n);
    for (size_t col = 0; col < size; col++) {
        size_t c = col;
        for (size_t q = n; q-- > 0;) {
            digits[q] = c % d;
            c /= d;
        }
        uint64_t phase = p.phase();
        size_t row = 0;
        for (size_t q = 0; q < n; q++) {
            // X^a Z^b |j> = w^{b j} |j + a>.
            phase += (uint64_t)p.z(q) * digits[q];
            row = row * d + (digits[q] + p.x(q)) % d;
        }
        m((Eigen::Index)row, (Eigen::Index)col) = omega_power(phase, d);
    }
    return m;
}

DenseMatrix floqudit::dense_eigenprojector(const PauliOperator &p, Residue a) {
    uint32_t d = p.dim();
    DenseMatrix shifted = dense_matrix(p.with_phase(mod_sub(p.phase(), a % d, d)));
    DenseMatrix term = DenseMatrix::Identity(shifted.rows(), shifted.cols());
    DenseMatrix sum = DenseMatrix::Zero(shifted.rows(), shifted.cols());
    for (uint32_t j = 0; j < d; j++) {
        sum += term;
        term = term * shifted;
    }
    return sum / (double)d;
}

DenseMatrix floqudit::dense_codespace_projector(const GeneratorSet &s) {
    size_t size = oracle_space_size(s.dim(), s.num_qudits());
    DenseMatrix proj = DenseMatrix::Identity((Eigen::Index)size, (Eigen::Index)size);
    for (const auto &g : s.generators()) {
        proj = proj * dense_eigenprojector(g, 0);
    }
    return proj;
}

size_t floqudit::codespace_dimension_oracle(const GeneratorSet &s) {
    std::complex<double> tr = dense_codespace_projector(s).trace();
    return (size_t)std::llround(tr.real());
}

bool floqudit::dense_approx_equal(const DenseMatrix &a, const DenseMatrix &b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

std::vector<PauliOperator> floqudit::all_measurable_paulis(uint32_t dim, size_t num_qudits) {
    std::vector<PauliOperator> out;
    for (auto &p : all_paulis(dim, num_qudits, 0)) {
        if (!p.is_scalar() && has_order_dividing_dimension(p)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

OracleSuiteReport floqudit::run_pauli_oracle_suite(size_t max_n, const std::vector<uint32_t> &dims, uint64_t seed) {
    OracleSuiteReport report;
    report.name = "pauli-algebra";
    std::mt19937_64 rng(seed);
    for (uint32_t d : dims) {
        auto check_pair = [&](const PauliOperator &p, const PauliOperator &q) {
            report.cases++;
            DenseMatrix mp = dense_matrix(p);
            DenseMatrix mq = dense_matrix(q);
            if (!dense_approx_equal(dense_matrix(multiply(p, q)), mp * mq)) {
                record_failure(report, "product mismatch for " + p.str() + " and " + q.str());
            }
            std::complex<double> w = omega_power(commutation(p, q), d);
            if (!dense_approx_equal(mp * mq, w * (mq * mp))) {
                record_failure(report, "commutation mismatch for " + p.str() + " and " + q.str());
            }
        };
        auto check_single = [&](const PauliOperator &p) {
            report.cases++;
            DenseMatrix mp = dense_matrix(p);
            DenseMatrix acc = DenseMatrix::Identity(mp.rows(), mp.cols());
            for (uint32_t e = 0; e <= d; e++) {
                if (!dense_approx_equal(dense_matrix(power(p, e)), acc)) {
                    record_failure(report, "power mismatch for " + p.str());
                    break;
                }
                acc = acc * mp;
            }
            if (!dense_approx_equal(dense_matrix(inverse(p)) * mp, DenseMatrix::Identity(mp.rows(), mp.cols()))) {
                record_failure(report, "inverse mismatch for " + p.str());
            }
        };
        for (size_t n = 1; n <= std::min<size_t>(max_n, 2); n++) {
            if (oracle_bound() < (uint64_t)std::pow(d, n)) {
                continue;
            }
            std::vector<PauliOperator> all;
            for (Residue l = 0; l < d; l++) {
                for (auto &p : all_paulis(d, n, l)) {
                    all.push_back(std::move(p));
                }
            }
            for (const auto &p : all) {
                check_single(p);
                if (p.phase() != 0 && d > 2) {
                    continue;
                }
                for (const auto &q : all) {
                    check_pair(p, q);
                }
            }
        }
        if (max_n >= 3 && oracle_bound() >= (uint64_t)d * d * d) {
            for (size_t trial = 0; trial < 200; trial++) {
                PauliOperator p = random_pauli(rng, d, 3);
                PauliOperator q = random_pauli(rng, d, 3);
                PauliOperator r = random_pauli(rng, d, 3);
                check_pair(p, q);
                check_single(p);
                report.cases++;
                if ((p * q) * r != p * (q * r)) {
                    record_failure(report, "associativity failure");
                }
            }
        }
    }
    return report;
}

OracleSuiteReport floqudit::run_measurement_oracle_suite(size_t max_n, const std::vector<uint32_t> &dims) {
    OracleSuiteReport report;
    report.name = "measurement-update";
    for (uint32_t d : dims) {
        for (size_t n = 1; n <= std::min<size_t>(max_n, 2); n++) {
            if (oracle_bound() < (uint64_t)std::pow(d, n)) {
                continue;
            }
            std::vector<PauliOperator> measurements = single_qudit_measurements(d, n);
            std::vector<DenseMatrix> dense_meas;
            for (const auto &m : measurements) {
                dense_meas.push_back(dense_matrix(m));
            }
            for (const GeneratorSet &s : pool_groups(d, n, 2)) {
                DenseMatrix proj = dense_codespace_projector(s);
                double dim_before = proj.trace().real();
                size_t r = rank(s);
                report.cases++;
                if (std::llround(dim_before) != (long long)std::pow(d, n - r)) {
                    record_failure(report, "codespace dimension mismatch for " + describe(s));
                }
                for (size_t mi = 0; mi < measurements.size(); mi++) {
                    const PauliOperator &p = measurements[mi];
                    for (Residue o = 0; o < d; o++) {
                        report.cases++;
                        DenseMatrix pi_o = dense_eigenprojector(p, o);
                        DenseMatrix conditioned = pi_o * proj * pi_o;
                        double prob = conditioned.trace().real() / dim_before;
                        std::string where = "measuring " + p.str() + " with outcome " + std::to_string(o) + " on " + describe(s);
                        MeasurementResult result{s, {}, UpdateRule::ALREADY_STABILIZED};
                        try {
                            result = measure(s, p, ForcedOutcome{o});
                        } catch (const std::invalid_argument &) {
                            if (prob > 1e-9) {
                                record_failure(report, "engine rejected a possible outcome when " + where);
                            }
                            continue;
                        }
                        double expected_prob = result.outcome.deterministic ? 1.0 : 1.0 / d;
                        if (std::abs(prob - expected_prob) > 1e-9) {
                            record_failure(report, "outcome probability mismatch when " + where);
                            continue;
                        }
                        size_t r_after = rank(result.state);
                        size_t expected_rank = r + (result.rule == UpdateRule::COMMUTING ? 1 : 0);
                        if (r_after != expected_rank) {
                            record_failure(report, "rank law violated when " + where);
                        }
                        DenseMatrix after = dense_codespace_projector(result.state);
                        DenseMatrix normalized = conditioned * (after.trace().real() / conditioned.trace().real());
                        if (!dense_approx_equal(normalized, after)) {
                            record_failure(report, "post-measurement projector mismatch when " + where);
                        }
                        auto again = measure(result.state, p, AllZeroOutcomes{});
                        if (!again.outcome.deterministic || again.outcome.value != o) {
                            record_failure(report, "re-measurement not deterministic when " + where);
                        }
                    }
                }
            }
        }
    }
    return report;
}

OracleSuiteReport floqudit::run_outcome_statistics_suite(const std::vector<uint32_t> &dims, uint64_t seed) {
    OracleSuiteReport report;
    report.name = "outcome-statistics";
    std::mt19937_64 rng(seed);
    for (uint32_t d : dims) {
        struct Config {
            GeneratorSet s;
            PauliOperator p;
        };
        std::vector<Config> configs{
            {GeneratorSet(d, 1, {embed({1, 0}, 0, 1, d)}), embed({0, 1}, 0, 1, d)},
            {GeneratorSet(d, 1), embed({0, 1}, 0, 1, d)},
            {GeneratorSet(d, 2, {embed_pair({1, 0}, 0, {1, 0}, 1, 2, d)}), embed({0, 1}, 0, 2, d)},
        };
        size_t trials = 10 * (size_t)d * d;
        for (const auto &config : configs) {
            report.cases++;
            std::vector<size_t> counts(d, 0);
            for (size_t t = 0; t < trials; t++) {
                auto result = measure(config.s, config.p, SampledOutcomes{&rng});
                counts[result.outcome.value]++;
            }
            double pr = 1.0 / d;
            double sigma = std::sqrt(trials * pr * (1 - pr));
            for (uint32_t o = 0; o < d; o++) {
                if (std::abs((double)counts[o] - trials * pr) > 5 * sigma) {
                    std::stringstream ss;
                    ss << "outcome " << o << " frequency " << counts[o] << "/" << trials << " outside 5 sigma for D=" << d;
                    record_failure(report, ss.str());
                }
            }
        }
    }
    return report;
}

OracleSuiteReport floqudit::run_frame_soundness_suite(size_t max_n, const std::vector<uint32_t> &dims) {
    OracleSuiteReport report;
    report.name = "frame-soundness";
    for (uint32_t d : dims) {
        for (size_t n = 1; n <= std::min<size_t>(max_n, 2); n++) {
            if (oracle_bound() < (uint64_t)std::pow(d, n)) {
                continue;
            }
            std::vector<PauliOperator> checks = all_measurable_paulis(d, n);
            std::vector<std::vector<DenseMatrix>> check_projectors;
            for (const auto &m : checks) {
                std::vector<DenseMatrix> per;
                for (Residue o = 0; o < d; o++) {
                    per.push_back(dense_eigenprojector(m, o));
                }
                check_projectors.push_back(std::move(per));
            }
            std::vector<PauliOperator> errors = single_qudit_errors(d, n);
            std::vector<DenseMatrix> dense_errors;
            for (const auto &e : errors) {
                dense_errors.push_back(dense_matrix(e));
            }
            for (const GeneratorSet &s : pool_groups(d, n, n >= 2 ? 1 : 2)) {
                DenseMatrix proj = dense_codespace_projector(s);
                DenseMatrix rho = proj / proj.trace().real();
                for (size_t ci = 0; ci < checks.size(); ci++) {
                    const PauliOperator &m = checks[ci];
                    std::optional<Residue> fixed = contains_up_to_phase(s, m);
                    std::vector<double> base(d, fixed.has_value() ? 0.0 : 1.0 / d);
                    if (fixed.has_value()) {
                        base[*fixed] = 1.0;
                    }
                    for (size_t ei = 0; ei < errors.size(); ei++) {
                        report.cases++;
                        DenseMatrix noisy = dense_errors[ei] * rho * dense_errors[ei].adjoint();
                        std::vector<double> predicted(d, 0.0);
                        for (Residue o = 0; o < d; o++) {
                            predicted[noisy_outcome(m, o, errors[ei])] += base[o];
                        }
                        for (Residue o = 0; o < d; o++) {
                            double actual = (check_projectors[ci][o] * noisy).trace().real();
                            if (std::abs(actual - predicted[o]) > 1e-9) {
                                record_failure(
                                    report, "frame rule mismatch for check " + m.str() + " error " + errors[ei].str() +
                                                " on " + describe(s));
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}
