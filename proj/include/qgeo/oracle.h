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

#ifndef QGEO_ORACLE_H
#define QGEO_ORACLE_H

#include <cstddef>

#include "qgeo/statevector.h"

namespace qgeo {

/// Single-qubit reduced density matrix [[r00, r01], [conj(r01), r11]].
struct ReducedDensity {
    double r00;
    double r11;
    Amplitude r01;
};

struct GridSearchReport {
    double E_est;
    double theta_best;
    double alpha_best;
    std::size_t grid_points;
    std::size_t refinement_rounds;
};

struct GridOptions {
    std::size_t coarse_points = 64;
    std::size_t refinement_rounds = 8;
};

/// Partial trace of |psi><psi| over every qubit except `qubit_index`.
ReducedDensity reduced_density(const StateVector &psi, std::size_t qubit_index);

/// Smaller eigenvalue of the reduced density matrix, clamped into [0, 1/2].
double eigen_oracle(const StateVector &psi, std::size_t qubit_index);

/// Brute-force maximization of the product-state overlap over the qubit direction.
///
/// For a fixed qubit state chi(theta, alpha) = cos(theta/2)|0> + sin(theta/2)e^{i alpha}|1>,
/// the best companion state gives overlap ||(<chi| (x) 1)|psi>||^2, so only the two angles
/// need searching. The search starts on a coarse_points x coarse_points grid over
/// [0, pi] x [0, 2pi) and each refinement round re-grids a box 4x smaller around the
/// incumbent. The incumbent is only replaced by a strictly better point, and ties keep
/// the lexicographically smallest (theta, alpha).
GridSearchReport grid_oracle(const StateVector &psi, std::size_t qubit_index,
                             std::size_t coarse_points, std::size_t refinement_rounds);

inline GridSearchReport grid_oracle(const StateVector &psi, std::size_t qubit_index,
                                    const GridOptions &options = {}) {
    return grid_oracle(psi, qubit_index, options.coarse_points, options.refinement_rounds);
}

/// ||(<chi(theta, alpha)| (x) 1)|psi>||^2 evaluated directly on the amplitudes.
double projected_weight(const StateVector &psi, std::size_t qubit_index, double theta,
                        double alpha);

}  // namespace qgeo

#endif
