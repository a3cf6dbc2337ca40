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

#ifndef QGEO_DECOMPOSE_H
#define QGEO_DECOMPOSE_H

#include <cstddef>
#include <optional>
#include <vector>

#include "qgeo/statevector.h"

namespace qgeo {

/// Weight below which a companion state is treated as absent.
inline constexpr double kDegenerateWeight = 1e-12;

/// Orthonormal basis {chi1, chi2} of the distinguished qubit.
struct QubitBasis {
    QubitKet chi1;
    QubitKet chi2;

    /// (|0>, |1>)
    static QubitBasis computational();
    /// (|1>, |0>)
    static QubitBasis flipped();
    /// ((|0>+|1>)/sqrt2, (|0>-|1>)/sqrt2)
    static QubitBasis hadamard();

    /// Throws InvalidBasis unless both kets are unit and mutually orthogonal within 1e-12.
    void validate() const;
};

/// Computational, flipped and X bases.
std::vector<QubitBasis> standard_bases();

/// |psi> = a |chi1>|phi1> + b |chi2>|phi2> with a, b >= 0 and all phases in phi1/phi2.
struct QubitSplit {
    std::size_t qubit_index;  // 1-based
    QubitBasis basis;
    double a;
    double b;
    std::optional<StateVector> phi1;
    std::optional<StateVector> phi2;
    Amplitude overlap;  // <phi1|phi2>, or 0 when either companion is absent
};

/// Decomposes psi with respect to qubit `qubit_index` (1-based) in `basis`.
///
/// Projects the distinguished qubit onto chi1 and chi2; the norms of the projected
/// (n-1)-qubit vectors are a and b and the normalized vectors are phi1 and phi2.
QubitSplit split_qubit(const StateVector &psi, std::size_t qubit_index, const QubitBasis &basis);

/// Inverse of split_qubit: rebuilds a|chi1>|phi1> + b|chi2>|phi2> as an n-qubit state.
StateVector reassemble(const QubitSplit &split, std::size_t n);

}  // namespace qgeo

#endif
