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

#ifndef QGEO_TESTS_TEST_UTIL_H
#define QGEO_TESTS_TEST_UTIL_H

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "qgeo/statevector.h"

namespace qgeo::testing {

inline std::mt19937_64 rng_for(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

inline double max_amplitude_distance(const StateVector &x, const StateVector &y) {
    double worst = 0;
    for (std::size_t j = 0; j < x.dimension(); j++) {
        worst = std::max(worst, std::abs(x[j] - y[j]));
    }
    return worst;
}

/// Test-only ground truth: maximizes |<psi|chi (x) phi>|^2 by alternating updates
/// (best phi for fixed chi, then best chi for fixed phi). This is power iteration on the
/// 2 x 2^(n-1) coefficient matrix and shares no code with the library's measure routines.
inline double alternating_entanglement(const StateVector &psi, std::size_t qubit_index,
                                       int iterations = 2000) {
    std::size_t n = psi.num_qubits();
    std::size_t shift = n - qubit_index;
    std::size_t rest_dim = psi.dimension() / 2;
    auto full_index = [&](std::size_t r, std::size_t bit) {
        std::size_t low = r & ((std::size_t{1} << shift) - 1);
        std::size_t high = r >> shift;
        return (high << (shift + 1)) | (bit << shift) | low;
    };
    std::complex<double> chi0(0.6, 0.1);
    std::complex<double> chi1(0.3, -0.7);
    std::vector<std::complex<double>> phi(rest_dim);
    double best = 0;
    for (int it = 0; it < iterations; it++) {
        double phi_norm = 0;
        for (std::size_t r = 0; r < rest_dim; r++) {
            phi[r] = std::conj(chi0) * psi[full_index(r, 0)] + std::conj(chi1) * psi[full_index(r, 1)];
            phi_norm += std::norm(phi[r]);
        }
        phi_norm = std::sqrt(phi_norm);
        for (auto &x : phi) {
            x /= phi_norm;
        }
        std::complex<double> next0 = 0;
        std::complex<double> next1 = 0;
        for (std::size_t r = 0; r < rest_dim; r++) {
            next0 += std::conj(phi[r]) * psi[full_index(r, 0)];
            next1 += std::conj(phi[r]) * psi[full_index(r, 1)];
        }
        double chi_norm = std::sqrt(std::norm(next0) + std::norm(next1));
        best = chi_norm * chi_norm;
        chi0 = next0 / chi_norm;
        chi1 = next1 / chi_norm;
    }
    return 1.0 - best;
}

}  // namespace qgeo::testing

#endif
