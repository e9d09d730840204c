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

#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "floqudit/floqudit.hpp"

using namespace floqudit;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A failed validation whose machine-readable report goes to the output stream.
struct ValidationFailure {
    Json report;
};

struct Options {
    std::string lattice = "torus:6x8";
    std::string instance = "circle-square";
    std::string checks_path;
    uint32_t dim = 3;
    int64_t z_exponent = 0;
    size_t rounds = 12;
    std::string outcomes = "zero";
    uint64_t seed = 0;
    double p = 0.0;
    std::string out;
    size_t shots = 1;
    size_t jobs = 1;
    size_t max_n = 2;
    std::vector<uint32_t> dims{2, 3};
    size_t round = 0;
    std::string error_literal;
    size_t error_round = 6;
    bool exact_distance = false;
    size_t max_weight = 8;
    size_t depth = 2;

    std::vector<CLI::Option *> dim_flags;
    std::vector<CLI::Option *> z_flags;
    CLI::Option *round_flag = nullptr;
};

bool any_given(const std::vector<CLI::Option *> &flags) {
    for (const CLI::Option *f : flags) {
        if (f->count() > 0) {
            return true;
        }
    }
    return false;
}

ColoredLattice load_lattice_arg(const std::string &spec) {
    const std::string prefix = "torus:";
    if (spec.rfind(prefix, 0) == 0) {
        std::string dims = spec.substr(prefix.size());
        size_t x = dims.find('x');
        size_t l1 = 0;
        size_t l2 = 0;
        try {
            if (x == std::string::npos) {
                throw std::invalid_argument("missing 'x'");
            }
            size_t used1 = 0;
            size_t used2 = 0;
            l1 = std::stoul(dims.substr(0, x), &used1);
            l2 = std::stoul(dims.substr(x + 1), &used2);
            if (used1 != x || used2 != dims.size() - x - 1) {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw UsageError("Lattice '" + spec + "' is not of the form torus:<L1>x<L2>.");
        }
        try {
            return build_torus_honeycomb(l1, l2);
        } catch (const std::invalid_argument &ex) {
            throw UsageError(ex.what());
        }
    }
    std::ifstream probe(spec);
    if (!probe) {
        throw UsageError("Cannot open lattice file '" + spec + "'.");
    }
    return load_lattice(spec);
}

bool dim_given(const Options &o) {
    return any_given(o.dim_flags);
}

uint32_t effective_dim(const Options &o) {
    uint32_t d = o.dim;
    if (!dim_given(o) && o.checks_path.empty() && o.instance == "qubit") {
        d = 2;
    }
    if (!is_prime(d)) {
        throw UsageError("--dim must be a prime but got " + std::to_string(d) + ".");
    }
    return d;
}

CheckAssignment load_checks_arg(const ColoredLattice &lat, const Options &o) {
    if (!o.checks_path.empty()) {
        std::ifstream in(o.checks_path);
        if (!in) {
            throw UsageError("Cannot open check file '" + o.checks_path + "'.");
        }
        std::stringstream ss;
        ss << in.rdbuf();
        CheckAssignment checks = parse_check_assignment(lat, ss.str());
        if (dim_given(o) && checks.dim() != o.dim) {
            throw UsageError(
                "Check file has D=" + std::to_string(checks.dim()) + " but --dim is " + std::to_string(o.dim) + ".");
        }
        return checks;
    }
    std::optional<Residue> z;
    if (any_given(o.z_flags)) {
        z = mod_reduce(o.z_exponent, effective_dim(o));
    }
    try {
        return builtin_checks(lat, o.instance, effective_dim(o), z);
    } catch (const std::invalid_argument &ex) {
        throw UsageError(ex.what());
    }
}

void emit(const Options &o, std::ostream &out, const std::string &text) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw UsageError("Cannot write '" + o.out + "'.");
    }
    f << text;
}

void require_rounds(const Options &o, size_t minimum) {
    if (o.rounds < minimum) {
        throw UsageError("--rounds must be at least " + std::to_string(minimum) + ".");
    }
}

Json condition_report_json(const ConditionReport &report) {
    Json j;
    j["ok"] = report.ok();
    Json conds = Json::array();
    for (size_t k = 0; k < 3; k++) {
        conds.push_back({{"condition", k + 1}, {"passed", report.passed[k]}, {"violations", report.violations[k]}});
    }
    j["conditions"] = conds;
    j["unmeasurable"] = report.unmeasurable;
    return j;
}

void require_conditions(const ColoredLattice &lat, const CheckAssignment &checks) {
    ConditionReport report = validate_conditions(lat, checks);
    if (!report.ok()) {
        throw ValidationFailure{condition_report_json(report)};
    }
}

Json suite_json(const OracleSuiteReport &r) {
    return {{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"ok", r.ok()}, {"messages", r.messages}};
}

Json syndrome_json(const SpaceTimeLattice &lattice) {
    return Json::parse(space_time_lattice_to_json(lattice));
}

void cmd_build_lattice(const Options &o, std::ostream &out) {
    ColoredLattice lat = load_lattice_arg(o.lattice);
    std::string text = format_lattice(lat);
    if (o.out.empty()) {
        out << text;
        return;
    }
    emit(o, out, text);
    LatticeCombinatorics c = lat.combinatorics();
    Json j{
        {"path", o.out},
        {"n", c.num_vertices},
        {"edges", c.num_edges},
        {"plaquettes", c.num_plaquettes},
        {"p", c.face_size},
        {"genus", c.genus},
        {"identities_hold", c.identities_hold}};
    out << j.dump(2) << "\n";
}

void cmd_validate_checks(const Options &o, std::ostream &out) {
    ColoredLattice lat = load_lattice_arg(o.lattice);
    CheckAssignment checks = load_checks_arg(lat, o);
    ConditionReport report = validate_conditions(lat, checks);
    if (!report.ok()) {
        throw ValidationFailure{condition_report_json(report)};
    }
    emit(o, out, condition_report_json(report).dump(2) + "\n");
}

void cmd_run(const Options &o, std::ostream &out) {
    ColoredLattice lat = load_lattice_arg(o.lattice);
    CheckAssignment checks = load_checks_arg(lat, o);
    require_conditions(lat, checks);
    ScheduleOptions opts;
    opts.outcomes = o.outcomes == "sampled" ? ScheduleOutcomes::SAMPLED : ScheduleOutcomes::ALL_ZERO;
    opts.seed = o.seed;
    emit(o, out, export_trace_json(run_schedule(lat, checks, o.rounds, opts)));
}

void cmd_params(const Options &o, std::ostream &out) {
    require_rounds(o, INITIALIZATION_ROUNDS);
    ColoredLattice lat = load_lattice_arg(o.lattice);
    CheckAssignment checks = load_checks_arg(lat, o);
    require_conditions(lat, checks);
    size_t round = o.rounds - 1;
    IsgTrace trace = run_schedule(lat, checks, o.rounds);
    CodeParameters params = code_parameters(lat, trace, round);
    params.d_upper = distance_upper_bound(lat, checks, round, o.depth);
    if (o.exact_distance) {
        params.d_exact = brute_force_distance(trace, round, o.max_weight);
    }
    GaugeReport gauge = gauge_analysis(lat, checks);

    Json j;
    j["n"] = params.n;
    j["k"] = params.k;
    j["d_upper"] = *params.d_upper;
    j["d_exact"] = params.d_exact.has_value() ? Json(*params.d_exact) : Json(nullptr);
    j["rate"] = std::to_string(params.rate_numerator) + "/" + std::to_string(params.rate_denominator);
    j["D"] = checks.dim();
    j["round"] = round;
    j["mismatches"] = params.mismatches;
    j["gauge"] = {
        {"gauge_rank", gauge.gauge_rank},
        {"center_rank", gauge.center_rank},
        {"gauge_qudits", gauge.gauge_qudits},
        {"logical_qudits", gauge.logical_qudits},
        {"identities_hold", gauge.identities_hold}};
    if (!params.mismatches.empty()) {
        throw ValidationFailure{j};
    }
    emit(o, out, j.dump(2) + "\n");
}

void cmd_logicals(const Options &o, std::ostream &out) {
    require_rounds(o, INITIALIZATION_ROUNDS);
    ColoredLattice lat = load_lattice_arg(o.lattice);
    CheckAssignment checks = load_checks_arg(lat, o);
    require_conditions(lat, checks);
    IsgTrace trace = run_schedule(lat, checks, o.rounds);
    size_t first = INITIALIZATION_ROUNDS - 1;
    size_t last = o.rounds - 1;
    if (o.round_flag != nullptr && o.round_flag->count() > 0) {
        if (o.round < first || o.round > last) {
            throw UsageError(
                "--round must lie in [" + std::to_string(first) + ", " + std::to_string(last) + "].");
        }
        first = last = o.round;
    }
    bool all_ok = true;
    Json rounds = Json::array();
    for (size_t r = first; r <= last; r++) {
        const GeneratorSet &isg = trace.at(r).isg;
        Json ops = Json::array();
        for (const LoopOperator &op : loop_operators(lat, checks, r)) {
            bool ok = verify_logical(isg, op.op);
            all_ok = all_ok && ok;
            ops.push_back(
                {{"loop", op.loop_name},
                 {"kind", loop_operator_kind_name(op.kind)},
                 {"weight", weight(op.op)},
                 {"support_edges", op.support_edges},
                 {"exponents", op.exponents},
                 {"operator", op.op.str()},
                 {"verified", ok}});
        }
        Json pairs = Json::array();
        for (const LogicalPair &pair : logical_pairs(lat, checks, r)) {
            pairs.push_back(
                {{"index", pair.index},
                 {"power", pair.power},
                 {"commutation", commutation(pair.x_bar, pair.z_bar)},
                 {"x_bar", pair.x_bar.str()},
                 {"z_bar", pair.z_bar.str()}});
        }
        rounds.push_back({{"round", r}, {"color", color_name(round_color(r))}, {"operators", ops}, {"pairs", pairs}});
    }
    Json j{{"D", checks.dim()}, {"n", lat.num_vertices()}, {"rounds", rounds}};
    if (!all_ok) {
        throw ValidationFailure{j};
    }
    emit(o, out, j.dump(2) + "\n");
}

void cmd_inject(const Options &o, std::ostream &out) {
    require_rounds(o, INITIALIZATION_ROUNDS + 2);
    ColoredLattice lat = load_lattice_arg(o.lattice);
    CheckAssignment checks = load_checks_arg(lat, o);
    require_conditions(lat, checks);
    if (o.error_round >= o.rounds) {
        throw UsageError("--error-round must be below --rounds.");
    }
    PauliOperator e(checks.dim(), lat.num_vertices());
    try {
        e = PauliOperator::from_literal(checks.dim(), lat.num_vertices(), o.error_literal);
    } catch (const std::invalid_argument &ex) {
        throw UsageError(ex.what());
    }
    NoiseModel model{checks.dim(), 0.0};
    NoisyTrace trace = run_noisy_schedule(lat, checks, o.rounds, model, o.seed, {{o.error_round, e}});
    Json shifts = Json::array();
    for (size_t r = 0; r < o.rounds; r++) {
        const RoundRecord &base = trace.baseline.rounds[r];
        const RoundRecord &noisy = trace.noisy.rounds[r];
        for (size_t k = 0; k < base.edge_order.size(); k++) {
            Residue shift = mod_sub(noisy.outcomes[k].value, base.outcomes[k].value, checks.dim());
            if (shift != 0) {
                size_t edge = base.edge_order[k];
                shifts.push_back(
                    {{"round", r}, {"edge", edge}, {"color", color_name(lat.edge(edge).color)}, {"shift", shift}});
            }
        }
    }
    SpaceTimeLattice syndrome = build_space_time_lattice(lat, infer_plaquette_values(lat, checks, trace), trace);
    Json j{
        {"error", e.str()},
        {"error_round", o.error_round},
        {"outcome_shifts", shifts},
        {"detections", syndrome.num_detections()},
        {"syndrome", syndrome_json(syndrome)}};
    emit(o, out, j.dump(2) + "\n");
}

void cmd_syndrome(const Options &o, std::ostream &out) {
    require_rounds(o, INITIALIZATION_ROUNDS + 2);
    ColoredLattice lat = load_lattice_arg(o.lattice);
    CheckAssignment checks = load_checks_arg(lat, o);
    require_conditions(lat, checks);
    NoiseModel model{checks.dim(), o.p};
    try {
        model.validate();
    } catch (const std::invalid_argument &ex) {
        throw UsageError(ex.what());
    }
    if (o.shots == 1) {
        emit(o, out, space_time_lattice_to_json(simulate_syndrome(lat, checks, o.rounds, model, o.seed)));
        return;
    }
    Json all = Json::array();
    for (const SpaceTimeLattice &s : simulate_syndrome_shots(lat, checks, o.rounds, model, o.seed, o.shots, o.jobs)) {
        all.push_back(syndrome_json(s));
    }
    emit(o, out, all.dump(2) + "\n");
}

void cmd_oracle_test(const Options &o, std::ostream &out) {
    for (uint32_t d : o.dims) {
        if (!is_prime(d)) {
            throw UsageError("--dims entries must be prime but got " + std::to_string(d) + ".");
        }
    }
    std::vector<OracleSuiteReport> reports{
        run_pauli_oracle_suite(o.max_n, o.dims, o.seed + 1),
        run_measurement_oracle_suite(o.max_n, o.dims),
        run_outcome_statistics_suite(o.dims, o.seed + 7),
        run_frame_soundness_suite(o.max_n, o.dims),
    };
    bool ok = true;
    Json suites = Json::array();
    for (const auto &r : reports) {
        ok = ok && r.ok();
        suites.push_back(suite_json(r));
    }
    Json j{{"ok", ok}, {"suites", suites}};
    if (!ok) {
        throw ValidationFailure{j};
    }
    emit(o, out, j.dump(2) + "\n");
}

void add_lattice_flags(CLI::App *cmd, Options &o) {
    cmd->add_option("--lattice", o.lattice, "torus:<L1>x<L2> or a lattice file")->capture_default_str();
}

void add_code_flags(CLI::App *cmd, Options &o, bool with_rounds) {
    add_lattice_flags(cmd, o);
    cmd->add_option("--instance", o.instance, "Builtin check instance")
        ->check(CLI::IsMember({"circle-square", "qubit", "ellison"}))
        ->capture_default_str();
    cmd->add_option("--checks", o.checks_path, "Check-assignment file (overrides --instance)");
    o.dim_flags.push_back(cmd->add_option("--dim", o.dim, "Prime qudit dimension D")->capture_default_str());
    o.z_flags.push_back(cmd->add_option("--z-exponent", o.z_exponent, "Exponent e of the ellison instance"));
    if (with_rounds) {
        cmd->add_option("--rounds", o.rounds, "Number of measurement rounds")->capture_default_str();
    }
    cmd->add_option("--out", o.out, "Output path (default: standard output)");
}

}  // namespace

int floqudit::run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"floqudit: qudit Floquet codes on three-colorable lattices", "floqudit"};
    app.require_subcommand(1);

    CLI::App *build = app.add_subcommand("build-lattice", "Generate or re-validate a lattice and print it");
    add_lattice_flags(build, o);
    build->add_option("--out", o.out, "Output path (default: standard output)");

    CLI::App *validate = app.add_subcommand("validate-checks", "Check the three commutation conditions");
    add_code_flags(validate, o, false);

    CLI::App *run = app.add_subcommand("run", "Run the measurement schedule and export the stabilizer-group trace");
    add_code_flags(run, o, true);
    run->add_option("--outcomes", o.outcomes, "Random outcome mode")
        ->check(CLI::IsMember({"zero", "sampled"}))
        ->capture_default_str();
    run->add_option("--seed", o.seed, "Seed for sampled outcomes")->capture_default_str();

    CLI::App *params = app.add_subcommand("params", "Report n, k, rate, distance bound and gauge ranks");
    add_code_flags(params, o, true);
    params->add_flag("--exact-distance", o.exact_distance, "Also run the brute-force distance search");
    params->add_option("--max-weight", o.max_weight, "Largest weight for the brute-force search")
        ->capture_default_str();
    params->add_option("--depth", o.depth, "Generators per greedy move for the distance bound")->capture_default_str();

    CLI::App *logicals = app.add_subcommand("logicals", "Build and verify loop logical operators and pairs");
    add_code_flags(logicals, o, true);
    o.round_flag = logicals->add_option("--round", o.round, "Report a single round");

    CLI::App *inject = app.add_subcommand("inject", "Inject one Pauli error and report outcome shifts and syndromes");
    add_code_flags(inject, o, true);
    inject->add_option("--error", o.error_literal, "Pauli literal, e.g. 'w^0 X^1 Z^0 @ 4'")->required();
    inject->add_option("--error-round", o.error_round, "Round before which the error acts")->capture_default_str();
    inject->add_option("--seed", o.seed, "Seed")->capture_default_str();

    CLI::App *syndrome = app.add_subcommand("syndrome", "Simulate noise and export the space-time syndrome lattice");
    add_code_flags(syndrome, o, true);
    syndrome->add_option("--p", o.p, "Error probability of each X-type and Z-type channel")->capture_default_str();
    syndrome->add_option("--seed", o.seed, "Seed")->capture_default_str();
    syndrome->add_option("--shots", o.shots, "Number of shots (seed, seed+1, ...)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    syndrome->add_option("--jobs", o.jobs, "Worker threads across shots")->check(CLI::PositiveNumber)->capture_default_str();

    CLI::App *oracle = app.add_subcommand("oracle-test", "Cross-check the tableau against dense matrices");
    oracle->add_option("--max-n", o.max_n, "Largest qudit count")->capture_default_str();
    oracle->add_option("--dims", o.dims, "Comma-separated prime dimensions")->delimiter(',');
    oracle->add_option("--seed", o.seed, "Seed")->capture_default_str();
    oracle->add_option("--out", o.out, "Output path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (build->parsed()) {
            cmd_build_lattice(o, out);
        } else if (validate->parsed()) {
            cmd_validate_checks(o, out);
        } else if (run->parsed()) {
            cmd_run(o, out);
        } else if (params->parsed()) {
            cmd_params(o, out);
        } else if (logicals->parsed()) {
            cmd_logicals(o, out);
        } else if (inject->parsed()) {
            cmd_inject(o, out);
        } else if (syndrome->parsed()) {
            cmd_syndrome(o, out);
        } else if (oracle->parsed()) {
            cmd_oracle_test(o, out);
        }
    } catch (const UsageError &ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    } catch (const ValidationFailure &failure) {
        out << failure.report.dump(2) << "\n";
        return 1;
    } catch (const std::exception &ex) {
        Json j{{"ok", false}, {"errors", {ex.what()}}};
        out << j.dump(2) << "\n";
        return 1;
    }
    return 0;
}
