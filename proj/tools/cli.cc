// Copyright 2026 The qgeo Authors
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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgeo/error.h"
#include "qgeo/families.h"
#include "qgeo/format.h"
#include "qgeo/measure.h"
#include "qgeo/oracle.h"
#include "qgeo/statevector.h"
#include "qgeo/verify.h"

namespace qgeo::cli {

namespace {

constexpr double kPrettyCutoff = 1e-14;

struct GlobalFlags {
    std::string format = "table";
    double tol = 1e-6;
    int digits = 12;
    std::uint64_t seed = 42;
};

/// Usage-level failure that is not a library Error (exit 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string signed_real(double value, int digits) {
    std::string s = format_real(value, digits);
    return s.front() == '-' ? s : "+" + s;
}

std::string pretty_amplitude(Amplitude a, int digits) {
    bool has_re = std::abs(a.real()) >= kPrettyCutoff;
    bool has_im = std::abs(a.imag()) >= kPrettyCutoff;
    if (has_re && !has_im) {
        return signed_real(a.real(), digits);
    }
    if (!has_re && has_im) {
        return signed_real(a.imag(), digits) + "i";
    }
    return "(" + signed_real(a.real(), digits) + signed_real(a.imag(), digits) + "i)";
}

StateVector load_source(const std::string &source) {
    if (std::filesystem::is_regular_file(source)) {
        return read_state_file(source);
    }
    return build_family(parse_family(source));
}

std::optional<FamilySpec> source_family(const std::string &source) {
    if (std::filesystem::is_regular_file(source)) {
        return std::nullopt;
    }
    return parse_family(source);
}

void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    }
    file << text;
}

int cmd_state(const std::string &spec, const std::string &output, bool pretty,
              const GlobalFlags &flags, std::ostream &out) {
    StateVector psi = build_family(parse_family(spec));
    if (!output.empty() && output != "-") {
        write_state_file(output, psi);
    } else if (!pretty) {
        out << to_json(psi);
    }
    if (pretty) {
        for (std::size_t j = 0; j < psi.dimension(); j++) {
            if (std::abs(psi[j]) < kPrettyCutoff) {
                continue;
            }
            out << pretty_amplitude(psi[j], flags.digits) << " |"
                << ket_label(j, psi.num_qubits()) << "⟩\n";
        }
    }
    return kExitOk;
}

int cmd_measure(const std::string &source, bool check_oracles, const GlobalFlags &flags,
                std::ostream &out, std::ostream &err) {
    StateVector psi = load_source(source);
    EntanglementProfile profile = entanglement_profile(psi);
    std::size_t n = psi.num_qubits();

    std::vector<double> eigen;
    std::vector<double> grid;
    double max_dev = 0;
    if (check_oracles) {
        for (std::size_t q = 1; q <= n; q++) {
            eigen.push_back(eigen_oracle(psi, q));
            grid.push_back(grid_oracle(psi, q).E_est);
            double e = profile.per_qubit[q - 1];
            max_dev = std::max({max_dev, std::abs(e - eigen.back()), std::abs(e - grid.back())});
        }
    }
    auto num = [&](double v) { return format_real(v, flags.digits); };

    if (flags.format == "json") {
        nlohmann::ordered_json doc;
        doc["source"] = source;
        doc["n"] = n;
        doc["per_qubit"] = profile.per_qubit;
        doc["total"] = profile.total;
        if (check_oracles) {
            doc["eigen_oracle"] = eigen;
            doc["grid_oracle"] = grid;
            doc["max_deviation"] = max_dev;
            doc["tolerance"] = flags.tol;
        }
        out << doc.dump(2) << "\n";
    } else if (flags.format == "csv") {
        out << "qubit,E";
        if (check_oracles) {
            out << ",E_eigen,E_grid";
        }
        out << "\n";
        for (std::size_t q = 1; q <= n; q++) {
            out << q << "," << num(profile.per_qubit[q - 1]);
            if (check_oracles) {
                out << "," << num(eigen[q - 1]) << "," << num(grid[q - 1]);
            }
            out << "\n";
        }
        out << "total," << num(profile.total);
        if (check_oracles) {
            out << ",,";
        }
        out << "\n";
    } else {
        int width = flags.digits + 8;
        out << "source: " << source << "\n";
        out << std::left << std::setw(7) << "qubit" << std::setw(width) << "E";
        if (check_oracles) {
            out << std::setw(width) << "E_eigen" << std::setw(width) << "E_grid";
        }
        out << "\n";
        for (std::size_t q = 1; q <= n; q++) {
            out << std::setw(7) << q << std::setw(width) << num(profile.per_qubit[q - 1]);
            if (check_oracles) {
                out << std::setw(width) << num(eigen[q - 1]) << std::setw(width) << num(grid[q - 1]);
            }
            out << "\n";
        }
        out << std::setw(7) << "total" << num(profile.total) << "\n";
        if (check_oracles) {
            out << "max oracle deviation: " << format_real(max_dev, 3) << " (tol "
                << format_real(flags.tol, 3) << ")\n";
        }
    }

    if (check_oracles && !(max_dev <= flags.tol)) {
        err << "error: oracle deviation " << format_real(max_dev, 6) << " exceeds tolerance "
            << format_real(flags.tol, 6) << "\n";
        return kExitClaimFailure;
    }
    return kExitOk;
}

int cmd_sweep(const std::string &family, std::size_t n, std::size_t steps,
              const std::string &output, const GlobalFlags &flags, std::ostream &out,
              std::ostream &err) {
    if (n < 2) {
        throw Error(ErrorCode::BadRange, "sweep needs --n >= 2");
    }
    std::vector<std::pair<double, FamilySpec>> points;
    if (family == "dicke") {
        for (std::size_t k = 0; k <= n; k++) {
            points.emplace_back(static_cast<double>(k), DickeSpec{n, k});
        }
    } else if (family == "ghz" || family == "werner-symmetric") {
        if (steps < 2) {
            throw Error(ErrorCode::BadRange, "sweep needs --steps >= 2");
        }
        for (std::size_t j = 0; j < steps; j++) {
            double p = static_cast<double>(j) / static_cast<double>(steps - 1);
            if (family == "ghz") {
                points.emplace_back(p, GhzSpec{n, std::sqrt(p), std::sqrt(1.0 - p)});
            } else {
                std::vector<Amplitude> c(n, std::sqrt((1.0 - p) / static_cast<double>(n - 1)));
                c[0] = std::sqrt(p);
                points.emplace_back(p, WernerSpec{c});
            }
        }
    } else {
        throw Error(ErrorCode::UnknownFamily,
                    "sweep family must be ghz, werner-symmetric or dicke, got '" + family + "'");
    }

    std::ostringstream csv;
    csv << "param";
    for (std::size_t q = 1; q <= n; q++) {
        csv << ",E_" << q;
    }
    csv << ",total,predicted\n";
    double worst = 0;
    for (const auto &[param, spec] : points) {
        auto profile = entanglement_profile(build_family(spec));
        double predicted = predicted_entanglement(spec, 1);
        worst = std::max(worst, std::abs(profile.per_qubit[0] - predicted));
        csv << format_real(param, flags.digits);
        for (double e : profile.per_qubit) {
            csv << "," << format_real(e, flags.digits);
        }
        csv << "," << format_real(profile.total, flags.digits) << ","
            << format_real(predicted, flags.digits) << "\n";
    }
    emit(csv.str(), output, out);
    if (!(worst <= 1e-9)) {
        err << "error: computed E_1 deviates from prediction by " << format_real(worst, 6) << "\n";
        return kExitClaimFailure;
    }
    return kExitOk;
}

int cmd_verify(std::size_t max_n, const GlobalFlags &flags, std::ostream &out) {
    VerifyOptions options;
    options.max_n = max_n;
    options.seed = flags.seed;
    auto results = run_claims(options);
    out << "verify: max_n=" << max_n << " seed=" << flags.seed << "\n";
    std::size_t passed = 0;
    for (const auto &claim : results) {
        out << format_claim(claim) << "\n";
        passed += claim.passed ? 1 : 0;
    }
    out << passed << "/" << results.size() << " claims passed\n";
    return passed == results.size() ? kExitOk : kExitClaimFailure;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Geometric entanglement of one qubit with the rest of a pure state"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--format", flags.format, "Output format for measure")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--tol", flags.tol, "Oracle agreement tolerance")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--digits", flags.digits, "Significant digits for printed reals")
        ->check(CLI::Range(1, 17));
    app.add_option("--seed", flags.seed, "Seed for random corpora");

    std::string state_spec;
    std::string state_out;
    bool pretty = false;
    auto *state = app.add_subcommand("state", "Build a family state and write its state file");
    state->add_option("spec", state_spec, "werner:c1,..|dicke:n,k|ghz:n,c1|sin:n|cos:n")
        ->required();
    state->add_option("-o,--output", state_out, "Output path (default stdout)");
    state->add_flag("--pretty", pretty, "Print nonzero amplitudes as kets");

    std::string measure_source;
    bool check_oracles = false;
    auto *measure = app.add_subcommand("measure", "Per-qubit entanglement profile");
    measure->add_option("source", measure_source, "Family spec or state file")->required();
    measure->add_flag("--check-oracles", check_oracles, "Compare against both oracles");

    std::string sweep_family;
    std::size_t sweep_n = 0;
    std::size_t sweep_steps = 11;
    std::string sweep_out;
    auto *sweep = app.add_subcommand("sweep", "Parameter sweep as CSV");
    sweep->add_option("family", sweep_family, "ghz | werner-symmetric | dicke")->required();
    sweep->add_option("--n", sweep_n, "Number of qubits")->required();
    sweep->add_option("--steps", sweep_steps, "Points in [0, 1] for ghz and werner-symmetric");
    sweep->add_option("-o,--output", sweep_out, "Output path (default stdout)");

    long long max_n = 10;
    auto *verify = app.add_subcommand("verify", "Check every claim against both oracles");
    verify->add_option("--max-n", max_n, "Largest qubit count (2..14)");

    for (auto *sub : {state, measure, sweep, verify}) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (state->parsed()) {
            return cmd_state(state_spec, state_out, pretty, flags, out);
        }
        if (measure->parsed()) {
            return cmd_measure(measure_source, check_oracles, flags, out, err);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_family, sweep_n, sweep_steps, sweep_out, flags, out, err);
        }
        if (max_n < 2 || max_n > 14) {
            throw Error(ErrorCode::BadRange, "--max-n must lie in 2..14");
        }
        return cmd_verify(static_cast<std::size_t>(max_n), flags, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qgeo::cli
