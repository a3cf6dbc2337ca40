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

#ifndef QGEO_MEASURE_H
#define QGEO_MEASURE_H

#include <cstddef>
#include <optional>
#include <vector>

#include "qgeo/decompose.h"
#include "qgeo/statevector.h"

namespace qgeo {

/// Geometric entanglement of one qubit with the rest, plus the product state attaining it.
struct EntanglementResult {
    double E;
    double theta_opt;  // polar angle of the optimal qubit state, [0, pi]
    double alpha_opt;  // relative phase of the optimal qubit state, [0, 2pi)
    std::optional<StateVector> phi_tilde;
    double max_overlap_sq;

    /// cos(theta/2)|chi1> + sin(theta/2) e^{i alpha}|chi2> in the computational basis.
    QubitKet optimal_qubit() const;
};

struct EntanglementProfile {
    std::vector<double> per_qubit;
    double total;
};

/// 1/2 (1 - sqrt((a^2-b^2)^2 + 4 a^2 b^2 s^2)), clamped into [0, 1/2].
///
/// Requires |a^2 + b^2 - 1| <= 1e-9; overlap_abs is clamped to [0, 1].
double entanglement_closed_form(double a, double b, double overlap_abs);

/// Closed form applied to an existing split, in whatever basis it was taken.
double entanglement_of_split(const QubitSplit &split);

/// Entanglement of qubit `qubit_index` (1-based) with the remaining qubits of psi.
EntanglementResult geometric_entanglement(const StateVector &psi, std::size_t qubit_index);

/// |<psi| chi (x) phi_tilde>|^2 with chi placed at `qubit_index`.
double separable_overlap_sq(const StateVector &psi, std::size_t qubit_index,
                            const EntanglementResult &result);

EntanglementProfile entanglement_profile(const StateVector &psi);

/// Pure-state concurrence 2 sqrt(l+ l-) of a two-qubit state.
double concurrence_two_qubit(const StateVector &psi);

/// 1/2 (1 - sqrt(1 - C^2)).
double entanglement_from_concurrence(double concurrence);

}  // namespace qgeo

#endif
