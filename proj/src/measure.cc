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

#include "qgeo/measure.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qgeo/error.h"

namespace qgeo {

namespace {

constexpr double kPi = std::numbers::pi;

// Below this, 2ab|s| and a^2-b^2 are both treated as zero and the maximizer is
// degenerate in theta.
constexpr double kAngleDegeneracy = 1e-15;

}  // namespace

QubitKet EntanglementResult::optimal_qubit() const {
    return {Amplitude(std::cos(theta_opt / 2), 0.0),
            std::sin(theta_opt / 2) * std::polar(1.0, alpha_opt)};
}

double entanglement_closed_form(double a, double b, double overlap_abs) {
    if (!(a >= 0) || !(b >= 0) || std::abs(a * a + b * b - 1.0) > 1e-9) {
        throw Error(ErrorCode::NotNormalizedWeights, "weights must be nonnegative with a^2+b^2=1");
    }
    double s = std::clamp(overlap_abs, 0.0, 1.0);
    double a2 = a * a;
    double b2 = b * b;
    double radicand = (a2 - b2) * (a2 - b2) + 4 * a2 * b2 * s * s;
    double root = std::sqrt(std::clamp(radicand, 0.0, 1.0));
    return std::clamp(0.5 * (1.0 - root), 0.0, 0.5);
}

double entanglement_of_split(const QubitSplit &split) {
    return entanglement_closed_form(split.a, split.b, std::abs(split.overlap));
}

EntanglementResult geometric_entanglement(const StateVector &psi, std::size_t qubit_index) {
    QubitSplit split = split_qubit(psi, qubit_index, QubitBasis::computational());

    if (!split.phi2) {
        return {0.0, 0.0, 0.0, split.phi1, 1.0};
    }
    if (!split.phi1) {
        return {0.0, kPi, 0.0, split.phi2, 1.0};
    }

    double a = split.a;
    double b = split.b;
    double s = std::abs(split.overlap);
    double E = entanglement_closed_form(a, b, s);

    double alpha = s > 0 ? std::arg(split.overlap) : 0.0;
    if (alpha < 0) {
        alpha += 2 * kPi;
    }
    if (alpha >= 2 * kPi) {
        alpha = 0.0;
    }

    double cross = 2 * a * b * s;
    double diff = a * a - b * b;
    double theta = std::abs(cross) < kAngleDegeneracy && std::abs(diff) < kAngleDegeneracy
                       ? kPi / 2
                       : std::atan2(cross, diff);

    // phi_tilde = (a cos(theta/2) phi1 + b sin(theta/2) e^{-i alpha} phi2) / lambda
    double c = a * std::cos(theta / 2);
    Amplitude d = b * std::sin(theta / 2) * std::polar(1.0, -alpha);
    std::vector<Amplitude> amps(split.phi1->dimension());
    for (std::size_t r = 0; r < amps.size(); r++) {
        amps[r] = c * (*split.phi1)[r] + d * (*split.phi2)[r];
    }
    StateVector phi_tilde = make_state(psi.num_qubits() - 1, std::move(amps), true);
    return {E, theta, alpha, std::move(phi_tilde), 1.0 - E};
}

double separable_overlap_sq(const StateVector &psi, std::size_t qubit_index,
                            const EntanglementResult &result) {
    if (!result.phi_tilde) {
        throw Error(ErrorCode::InconsistentSplit, "result carries no companion state");
    }
    StateVector product = embed_qubit(result.optimal_qubit(), *result.phi_tilde, qubit_index);
    return std::norm(inner_product(psi, product));
}

EntanglementProfile entanglement_profile(const StateVector &psi) {
    if (psi.num_qubits() < 2) {
        throw Error(ErrorCode::SingleQubitState, "profile needs at least two qubits");
    }
    EntanglementProfile profile{{}, 0.0};
    profile.per_qubit.reserve(psi.num_qubits());
    for (std::size_t i = 1; i <= psi.num_qubits(); i++) {
        profile.per_qubit.push_back(geometric_entanglement(psi, i).E);
        profile.total += profile.per_qubit.back();
    }
    return profile;
}

double concurrence_two_qubit(const StateVector &psi) {
    if (psi.num_qubits() != 2) {
        throw Error(ErrorCode::NotTwoQubits,
                    "concurrence needs a two-qubit state, got " + std::to_string(psi.num_qubits()));
    }
    // Reduced matrix of qubit 1; l+ l- is its determinant.
    double r00 = std::norm(psi[0]) + std::norm(psi[1]);
    double r11 = std::norm(psi[2]) + std::norm(psi[3]);
    Amplitude r01 = psi[0] * std::conj(psi[2]) + psi[1] * std::conj(psi[3]);
    double det = std::max(0.0, r00 * r11 - std::norm(r01));
    return std::clamp(2 * std::sqrt(det), 0.0, 1.0);
}

double entanglement_from_concurrence(double concurrence) {
    if (!(concurrence >= 0.0 && concurrence <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "concurrence must lie in [0, 1]");
    }
    return 0.5 * (1.0 - std::sqrt(1.0 - concurrence * concurrence));
}

}  // namespace qgeo
