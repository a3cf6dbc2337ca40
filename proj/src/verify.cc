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

#include "qgeo/verify.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "qgeo/decompose.h"
#include "qgeo/error.h"
#include "qgeo/format.h"
#include "qgeo/measure.h"

namespace qgeo {

namespace {

constexpr std::size_t kRandomStates = 1000;
constexpr std::size_t kRandomMaxN = 8;
constexpr std::size_t kGridMaxN = 8;
constexpr std::size_t kFamilyMaxN = 12;
constexpr std::size_t kGhzSweepPoints = 21;

std::mt19937_64 claim_rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

/// Accumulates the worst deviation of a claim and whether any case broke it.
class Tally {
   public:
    Tally(int id, std::string name, double tolerance)
        : result_{id, std::move(name), true, 0.0, tolerance, 0, ""} {
    }

    void check(double deviation, const std::string &label) {
        result_.cases++;
        if (!(deviation <= result_.tolerance)) {
            if (result_.passed) {
                result_.detail = "first failure: " + label;
            }
            result_.passed = false;
        }
        if (std::isnan(deviation)) {
            result_.max_deviation = std::numeric_limits<double>::infinity();
        } else {
            result_.max_deviation = std::max(result_.max_deviation, deviation);
        }
    }

    void require(bool condition, const std::string &label) {
        if (!condition) {
            if (result_.passed) {
                result_.detail = "first failure: " + label;
            }
            result_.passed = false;
        }
    }

    ClaimResult done() && {
        return std::move(result_);
    }

   private:
    ClaimResult result_;
};

std::vector<Amplitude> random_coefficients(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Amplitude> c(n);
    double total = 0;
    for (auto &x : c) {
        x = Amplitude(gauss(rng), gauss(rng));
        total += std::norm(x);
    }
    double scale = 1.0 / std::sqrt(total);
    for (auto &x : c) {
        x *= scale;
    }
    return c;
}

std::string qubit_label(const std::string &label, std::size_t qubit) {
    return label + " qubit " + std::to_string(qubit);
}

double amplitude_distance(const StateVector &x, const StateVector &y) {
    double worst = 0;
    for (std::size_t j = 0; j < x.dimension(); j++) {
        worst = std::max(worst, std::abs(x[j] - y[j]));
    }
    return worst;
}

/// (|0>|first> + sign |1>|second>) / sqrt2 built by index placement.
StateVector attach_leading_qubit(const StateVector &first, const StateVector &second, double sign) {
    std::size_t half = first.dimension();
    std::vector<Amplitude> amps(2 * half);
    double h = std::numbers::sqrt2 / 2;
    for (std::size_t j = 0; j < half; j++) {
        amps[j] = h * first[j];
        amps[half + j] = sign * h * second[j];
    }
    return make_state(first.num_qubits() + 1, std::move(amps), false);
}

ClaimResult closed_vs_eigen(const std::vector<CorpusEntry> &corpus) {
    Tally tally(1, "closed form vs eigenvalue oracle", 1e-10);
    for (const auto &entry : corpus) {
        for (std::size_t q = 1; q <= entry.state.num_qubits(); q++) {
            double closed = geometric_entanglement(entry.state, q).E;
            tally.check(std::abs(closed - eigen_oracle(entry.state, q)),
                        qubit_label(entry.label, q));
        }
    }
    return std::move(tally).done();
}

ClaimResult closed_vs_grid(const std::vector<CorpusEntry> &corpus, const GridOptions &grid) {
    Tally tally(2, "closed form vs grid oracle", 1e-6);
    for (const auto &entry : corpus) {
        if (entry.state.num_qubits() > kGridMaxN) {
            continue;
        }
        for (std::size_t q = 1; q <= entry.state.num_qubits(); q++) {
            double closed = geometric_entanglement(entry.state, q).E;
            tally.check(std::abs(closed - grid_oracle(entry.state, q, grid).E_est),
                        qubit_label(entry.label, q));
        }
    }
    return std::move(tally).done();
}

ClaimResult werner_sum_rule(std::size_t max_n, std::uint64_t seed) {
    Tally tally(3, "Werner sum rule (all |c_i|^2 <= 1/2)", 1e-9);
    auto rng = claim_rng(seed, 3);
    std::size_t top = std::min<std::size_t>(10, max_n);
    if (top < 3) {
        return std::move(tally).done();
    }
    for (std::size_t t = 0; t < 200; t++) {
        std::size_t n = 3 + t % (top - 2);
        std::vector<Amplitude> c;
        do {
            c = random_coefficients(n, rng);
        } while (std::any_of(c.begin(), c.end(), [](Amplitude x) { return std::norm(x) > 0.5; }));
        auto profile = entanglement_profile(werner({c}));
        tally.check(std::abs(profile.total - 1.0), "werner sample " + std::to_string(t));
    }
    return std::move(tally).done();
}

ClaimResult werner_majorization(std::size_t max_n, std::uint64_t seed) {
    Tally tally(4, "Werner majorization (one |c_m|^2 > 1/2)", 1e-9);
    auto rng = claim_rng(seed, 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t top = std::min<std::size_t>(10, max_n);
    for (std::size_t t = 0; t < 200; t++) {
        std::size_t n = 2 + t % (top - 1);
        double dominant = 0.5 + 0.5 * (0.005 + 0.99 * unit(rng));
        std::size_t m = static_cast<std::size_t>(unit(rng) * static_cast<double>(n)) % n;
        auto others = random_coefficients(n - 1, rng);
        std::vector<Amplitude> c;
        double rest = std::sqrt(1.0 - dominant);
        for (std::size_t i = 0, k = 0; i < n; i++) {
            c.push_back(i == m ? std::polar(std::sqrt(dominant), 2 * std::numbers::pi * unit(rng))
                               : rest * others[k++]);
        }
        auto profile = entanglement_profile(werner({c}));
        std::string label = "werner sample " + std::to_string(t);
        tally.check(std::abs(profile.total - 2.0 * (1.0 - dominant)), label);
        tally.require(profile.total < 1.0, label + " total not below 1");
    }
    return std::move(tally).done();
}

ClaimResult proper_werner(std::size_t max_n) {
    Tally tally(5, "proper Werner E_i = 1/n", 1e-12);
    for (std::size_t n = 2; n <= max_n; n++) {
        std::vector<Amplitude> c(n, 1.0 / std::sqrt(static_cast<double>(n)));
        auto psi = werner({c});
        for (std::size_t q = 1; q <= n; q++) {
            tally.check(std::abs(geometric_entanglement(psi, q).E - 1.0 / static_cast<double>(n)),
                        "W_" + std::to_string(n) + " qubit " + std::to_string(q));
        }
    }
    return std::move(tally).done();
}

ClaimResult dicke_formula(std::size_t max_n) {
    Tally tally(6, "Dicke E = 1/2(1-|1-2k/n|), peak at k=n/2, k<->n-k", 1e-12);
    for (std::size_t n = 2; n <= max_n; n++) {
        std::vector<double> first_qubit(n + 1);
        for (std::size_t k = 0; k <= n; k++) {
            DickeSpec spec{n, k};
            auto psi = dicke(spec);
            std::string label = "D_" + std::to_string(n) + "," + std::to_string(k);
            for (std::size_t q = 1; q <= n; q++) {
                double E = geometric_entanglement(psi, q).E;
                tally.check(std::abs(E - predicted_entanglement(spec, q)), qubit_label(label, q));
                if (q == 1) {
                    first_qubit[k] = E;
                }
            }
        }
        for (std::size_t k = 0; k <= n; k++) {
            tally.check(std::abs(first_qubit[k] - first_qubit[n - k]),
                        "duality n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
        if (n % 2 == 0) {
            double peak = first_qubit[n / 2];
            tally.check(std::abs(peak - 0.5), "peak n=" + std::to_string(n));
            for (std::size_t k = 0; k <= n; k++) {
                tally.require(first_qubit[k] <= peak + 1e-12,
                              "k=" + std::to_string(k) + " exceeds k=n/2 for n=" +
                                  std::to_string(n));
            }
        }
    }
    return std::move(tally).done();
}

ClaimResult ghz_tent(std::size_t max_n) {
    Tally tally(7, "GHZ tent map E = 1/2(1-|1-2|c1|^2|)", 1e-12);
    for (std::size_t n = 2; n <= max_n; n++) {
        for (std::size_t j = 0; j < kGhzSweepPoints; j++) {
            double p = static_cast<double>(j) / static_cast<double>(kGhzSweepPoints - 1);
            GhzSpec spec{n, std::sqrt(p), std::sqrt(1.0 - p)};
            auto psi = ghz(spec);
            double expected = 0.5 * (1.0 - std::abs(1.0 - 2.0 * p));
            for (std::size_t q = 1; q <= n; q++) {
                tally.check(std::abs(geometric_entanglement(psi, q).E - expected),
                            "ghz n=" + std::to_string(n) + " p=" + format_real(p, 6));
            }
        }
        auto proper = ghz({n, std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2});
        tally.check(std::abs(geometric_entanglement(proper, 1).E - 0.5),
                    "proper GHZ n=" + std::to_string(n));
    }
    return std::move(tally).done();
}

ClaimResult trig_independence(std::size_t max_n) {
    Tally tally(8, "trig states E = 1/2 for all n; sum-of-angles recursion", 1e-9);
    double worst_recursion = 0;
    for (std::size_t n = 2; n <= max_n; n++) {
        auto s = trig_sin(n);
        auto c = trig_cos(n);
        for (std::size_t q = 1; q <= n; q++) {
            tally.check(std::abs(geometric_entanglement(s, q).E - 0.5),
                        "sin n=" + std::to_string(n) + " qubit " + std::to_string(q));
            tally.check(std::abs(geometric_entanglement(c, q).E - 0.5),
                        "cos n=" + std::to_string(n) + " qubit " + std::to_string(q));
        }
        StateVector prev_s = n == 2 ? basis_state(1, 1) : trig_sin(n - 1);
        StateVector prev_c = n == 2 ? basis_state(1, 0) : trig_cos(n - 1);
        double dev = std::max(amplitude_distance(s, attach_leading_qubit(prev_s, prev_c, 1.0)),
                              amplitude_distance(c, attach_leading_qubit(prev_c, prev_s, -1.0)));
        worst_recursion = std::max(worst_recursion, dev);
        tally.require(dev <= 1e-12, "recursion n=" + std::to_string(n));
    }
    auto result = std::move(tally).done();
    result.detail += (result.detail.empty() ? "" : "; ") + std::string("recursion max_dev=") +
                     format_real(worst_recursion, 3);
    return result;
}

ClaimResult two_qubit_consistency(std::uint64_t seed) {
    Tally tally(9, "two-qubit E = 1/2(1-sqrt(1-C^2))", 1e-9);
    auto rng = claim_rng(seed, 9);
    for (std::size_t t = 0; t < 500; t++) {
        auto psi = random_state(2, rng);
        double via_concurrence = entanglement_from_concurrence(concurrence_two_qubit(psi));
        tally.check(std::abs(geometric_entanglement(psi, 1).E - via_concurrence),
                    "two-qubit sample " + std::to_string(t));
    }
    double worked = entanglement_from_concurrence(0.8);
    tally.require(std::abs(worked - 0.2) <= 1e-12, "C=0.8 gives " + format_real(worked, 17));
    return std::move(tally).done();
}

ClaimResult separable_detection(std::size_t max_n, std::uint64_t seed) {
    Tally tally(10, "product states have E = 0", 1e-10);
    auto rng = claim_rng(seed, 10);
    std::size_t top = std::min(kRandomMaxN, max_n);
    for (std::size_t t = 0; t < 200; t++) {
        std::size_t n = 2 + t % (top - 1);
        auto psi = tensor(random_state(1, rng), random_state(n - 1, rng));
        tally.check(geometric_entanglement(psi, 1).E, "product sample " + std::to_string(t));
    }
    return std::move(tally).done();
}

template <typename Fn>
void for_each_basis_sample(std::size_t max_n, std::uint64_t seed, std::uint64_t stream, Fn &&fn) {
    auto rng = claim_rng(seed, stream);
    std::size_t top = std::min(kRandomMaxN, max_n);
    for (std::size_t t = 0; t < 200; t++) {
        std::size_t n = 2 + t % (top - 1);
        fn(random_state(n, rng), "basis sample " + std::to_string(t));
    }
}

ClaimResult basis_invariance(std::size_t max_n, std::uint64_t seed) {
    Tally tally(11, "basis invariance of E", 1e-9);
    auto bases = standard_bases();
    for_each_basis_sample(max_n, seed, 11, [&](const StateVector &psi, const std::string &label) {
        for (std::size_t q = 1; q <= psi.num_qubits(); q++) {
            std::vector<double> values;
            for (const auto &basis : bases) {
                values.push_back(entanglement_of_split(split_qubit(psi, q, basis)));
            }
            auto [lo, hi] = std::minmax_element(values.begin(), values.end());
            tally.check(*hi - *lo, qubit_label(label, q));
        }
    });
    return std::move(tally).done();
}

ClaimResult maximizer_validity(const std::vector<CorpusEntry> &corpus) {
    Tally tally(12, "optimal product state attains 1 - E", 1e-9);
    for (const auto &entry : corpus) {
        for (std::size_t q = 1; q <= entry.state.num_qubits(); q++) {
            auto result = geometric_entanglement(entry.state, q);
            tally.check(std::abs(separable_overlap_sq(entry.state, q, result) - (1.0 - result.E)),
                        qubit_label(entry.label, q));
        }
    }
    return std::move(tally).done();
}

ClaimResult round_trip(std::size_t max_n, std::uint64_t seed) {
    Tally tally(13, "reassemble(split) reproduces the state", 1e-12);
    auto bases = standard_bases();
    for_each_basis_sample(max_n, seed, 11, [&](const StateVector &psi, const std::string &label) {
        for (std::size_t q = 1; q <= psi.num_qubits(); q++) {
            for (const auto &basis : bases) {
                auto rebuilt = reassemble(split_qubit(psi, q, basis), psi.num_qubits());
                tally.check(amplitude_distance(psi, rebuilt), qubit_label(label, q));
            }
        }
    });
    return std::move(tally).done();
}

}  // namespace

std::vector<CorpusEntry> family_corpus(std::size_t max_n, std::uint64_t seed) {
    auto rng = claim_rng(seed, 100);
    std::uniform_real_distribution<double> phase(0.0, 2 * std::numbers::pi);
    std::vector<CorpusEntry> corpus;
    for (std::size_t n = 2; n <= max_n; n++) {
        std::string ns = std::to_string(n);
        std::vector<Amplitude> proper(n, 1.0 / std::sqrt(static_cast<double>(n)));
        corpus.push_back({"W_" + ns, werner({proper})});
        for (int r = 0; r < 3; r++) {
            corpus.push_back({"werner random n=" + ns + " #" + std::to_string(r),
                              werner({random_coefficients(n, rng)})});
        }
        for (std::size_t k = 0; k <= n; k++) {
            corpus.push_back({"D_" + ns + "," + std::to_string(k), dicke({n, k})});
        }
        for (std::size_t j = 0; j < kGhzSweepPoints; j++) {
            double p = static_cast<double>(j) / static_cast<double>(kGhzSweepPoints - 1);
            corpus.push_back({"ghz n=" + ns + " p=" + format_real(p, 6),
                              ghz({n, std::sqrt(p), std::polar(std::sqrt(1.0 - p), phase(rng))})});
        }
        corpus.push_back({"sin_" + ns, trig_sin(n)});
        corpus.push_back({"cos_" + ns, trig_cos(n)});
    }
    return corpus;
}

std::vector<CorpusEntry> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed) {
    auto rng = claim_rng(seed, 101);
    std::vector<CorpusEntry> corpus;
    corpus.reserve(count);
    for (std::size_t t = 0; t < count; t++) {
        std::size_t n = 2 + t % (max_n - 1);
        corpus.push_back({"random #" + std::to_string(t) + " n=" + std::to_string(n),
                          random_state(n, rng)});
    }
    return corpus;
}

std::vector<ClaimResult> run_claims(const VerifyOptions &options) {
    if (options.max_n < 2 || options.max_n > 14) {
        throw Error(ErrorCode::BadRange, "max_n must lie in 2..14");
    }
    std::size_t family_n = std::min(kFamilyMaxN, options.max_n);
    auto corpus = family_corpus(family_n, options.seed);
    auto randoms = random_corpus(kRandomStates, std::min(kRandomMaxN, options.max_n), options.seed);
    corpus.insert(corpus.end(), std::make_move_iterator(randoms.begin()),
                  std::make_move_iterator(randoms.end()));

    std::vector<ClaimResult> results;
    results.push_back(closed_vs_eigen(corpus));
    results.push_back(closed_vs_grid(corpus, options.grid));
    results.push_back(werner_sum_rule(options.max_n, options.seed));
    results.push_back(werner_majorization(options.max_n, options.seed));
    results.push_back(proper_werner(family_n));
    results.push_back(dicke_formula(family_n));
    results.push_back(ghz_tent(family_n));
    results.push_back(trig_independence(family_n));
    results.push_back(two_qubit_consistency(options.seed));
    results.push_back(separable_detection(options.max_n, options.seed));
    results.push_back(basis_invariance(options.max_n, options.seed));
    results.push_back(maximizer_validity(corpus));
    results.push_back(round_trip(options.max_n, options.seed));
    return results;
}

std::string format_claim(const ClaimResult &claim) {
    std::string id = std::to_string(claim.id);
    if (id.size() < 2) {
        id = " " + id;
    }
    std::string line = std::string(claim.passed ? "PASS" : "FAIL") + "  [" + id + "] " +
                       claim.name + "  max_dev=" + format_real(claim.max_deviation, 3) +
                       " tol=" + format_real(claim.tolerance, 3) +
                       " cases=" + std::to_string(claim.cases);
    if (!claim.detail.empty()) {
        line += "  (" + claim.detail + ")";
    }
    return line;
}

}  // namespace qgeo
