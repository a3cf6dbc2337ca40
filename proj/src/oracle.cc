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

#include "qgeo/oracle.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "qgeo/error.h"

namespace qgeo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kShrink = 4.0;

void check_index(const StateVector &psi, std::size_t qubit_index) {
    if (psi.num_qubits() < 2) {
        throw Error(ErrorCode::SingleQubitState, "need at least two qubits");
    }
    if (qubit_index < 1 || qubit_index > psi.num_qubits()) {
        throw Error(ErrorCode::IndexOutOfRange, "qubit index " + std::to_string(qubit_index) +
                                                    " outside 1.." +
                                                    std::to_string(psi.num_qubits()));
    }
}

// Gram matrix of the two slices psi(0, .) and psi(1, .). The projected weight is the
// quadratic form c^2 g00 + s^2 g11 + 2 c s Re(e^{i alpha} g01).
struct SliceGram {
    double g00 = 0;
    double g11 = 0;
    Amplitude g01 = 0;

    double weight(double cos_half, double sin_half, Amplitude phase) const {
        return cos_half * cos_half * g00 + sin_half * sin_half * g11 +
               2 * cos_half * sin_half * std::real(phase * g01);
    }
};

SliceGram slice_gram(const StateVector &psi, std::size_t qubit_index) {
    std::size_t n = psi.num_qubits();
    SliceGram gram;
    for (std::size_t r = 0; r < (std::size_t{1} << (n - 1)); r++) {
        Amplitude zero = psi[insert_bit(r, 0, qubit_index, n)];
        Amplitude one = psi[insert_bit(r, 1, qubit_index, n)];
        gram.g00 += std::norm(zero);
        gram.g11 += std::norm(one);
        gram.g01 += zero * std::conj(one);
    }
    return gram;
}

}  // namespace

ReducedDensity reduced_density(const StateVector &psi, std::size_t qubit_index) {
    check_index(psi, qubit_index);
    std::size_t n = psi.num_qubits();
    ReducedDensity rho{0.0, 0.0, 0.0};
    for (std::size_t j = 0; j < psi.dimension(); j++) {
        std::size_t bit = (j >> (n - qubit_index)) & 1u;
        if (bit == 0) {
            rho.r00 += std::norm(psi[j]);
            rho.r01 += psi[j] * std::conj(psi[j | (std::size_t{1} << (n - qubit_index))]);
        } else {
            rho.r11 += std::norm(psi[j]);
        }
    }
    return rho;
}

double eigen_oracle(const StateVector &psi, std::size_t qubit_index) {
    ReducedDensity rho = reduced_density(psi, qubit_index);
    double diff = rho.r00 - rho.r11;
    double spread = std::sqrt(diff * diff + 4 * std::norm(rho.r01));
    double trace = rho.r00 + rho.r11;
    return std::clamp(0.5 * (trace - spread), 0.0, 0.5);
}

double projected_weight(const StateVector &psi, std::size_t qubit_index, double theta,
                        double alpha) {
    check_index(psi, qubit_index);
    std::size_t n = psi.num_qubits();
    double c = std::cos(theta / 2);
    Amplitude s = std::sin(theta / 2) * std::polar(1.0, -alpha);
    double total = 0;
    for (std::size_t r = 0; r < (std::size_t{1} << (n - 1)); r++) {
        total += std::norm(c * psi[insert_bit(r, 0, qubit_index, n)] +
                           s * psi[insert_bit(r, 1, qubit_index, n)]);
    }
    return total;
}

GridSearchReport grid_oracle(const StateVector &psi, std::size_t qubit_index,
                             std::size_t coarse_points, std::size_t refinement_rounds) {
    check_index(psi, qubit_index);
    if (coarse_points < 16) {
        throw Error(ErrorCode::BadResolution, "grid oracle needs at least 16 points per axis");
    }
    SliceGram gram = slice_gram(psi, qubit_index);

    std::size_t points = coarse_points;
    std::vector<double> cos_half(points);
    std::vector<double> sin_half(points);
    std::vector<double> thetas(points);
    std::vector<double> alphas(points);
    std::vector<Amplitude> phases(points);

    double best = -1.0;
    double best_theta = 0.0;
    double best_alpha = 0.0;

    auto scan = [&]() {
        // Row-major scan with strict improvement keeps the smallest (theta, alpha) on ties.
        std::size_t best_i = points;
        std::size_t best_j = points;
        double round_best = best;
        for (std::size_t i = 0; i < points; i++) {
            for (std::size_t j = 0; j < points; j++) {
                double f = gram.weight(cos_half[i], sin_half[i], phases[j]);
                if (f > round_best) {
                    round_best = f;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_i < points) {
            best = round_best;
            best_theta = thetas[best_i];
            best_alpha = alphas[best_j];
        }
    };
    auto fill_axes = [&](double theta_lo, double theta_hi, double alpha_lo, double alpha_span,
                         bool alpha_closed) {
        for (std::size_t i = 0; i < points; i++) {
            double t = theta_lo + (theta_hi - theta_lo) * static_cast<double>(i) /
                                      static_cast<double>(points - 1);
            thetas[i] = t;
            cos_half[i] = std::cos(t / 2);
            sin_half[i] = std::sin(t / 2);
        }
        double divisor = static_cast<double>(alpha_closed ? points - 1 : points);
        for (std::size_t j = 0; j < points; j++) {
            double a = alpha_lo + alpha_span * static_cast<double>(j) / divisor;
            a = std::fmod(a, 2 * kPi);
            if (a < 0) {
                a += 2 * kPi;
            }
            alphas[j] = a;
            phases[j] = std::polar(1.0, a);
        }
    };

    fill_axes(0.0, kPi, 0.0, 2 * kPi, false);
    scan();

    double theta_width = kPi;
    double alpha_width = 2 * kPi;
    for (std::size_t round = 0; round < refinement_rounds; round++) {
        theta_width /= kShrink;
        alpha_width /= kShrink;
        double lo = std::max(0.0, best_theta - theta_width / 2);
        double hi = std::min(kPi, best_theta + theta_width / 2);
        // A step in alpha moves the qubit state by sin(theta) times that step, so near the
        // poles the alpha window is widened accordingly (up to the full circle).
        double metric = std::sin(best_theta);
        if (metric * 2 * kPi <= alpha_width) {
            fill_axes(lo, hi, 0.0, 2 * kPi, false);
        } else {
            double span = alpha_width / metric;
            fill_axes(lo, hi, best_alpha - span / 2, span, true);
        }
        scan();
    }

    double E = std::clamp(1.0 - best, 0.0, 0.5);
    return {E, best_theta, best_alpha, coarse_points, refinement_rounds};
}

}  // namespace qgeo
