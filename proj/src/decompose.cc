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

#include "qgeo/decompose.h"

#include <cmath>
#include <numbers>

#include "qgeo/error.h"

namespace qgeo {

namespace {

Amplitude ket_inner(const QubitKet &bra, const QubitKet &ket) {
    return std::conj(bra[0]) * ket[0] + std::conj(bra[1]) * ket[1];
}

}  // namespace

QubitBasis QubitBasis::computational() {
    return {{1.0, 0.0}, {0.0, 1.0}};
}

QubitBasis QubitBasis::flipped() {
    return {{0.0, 1.0}, {1.0, 0.0}};
}

QubitBasis QubitBasis::hadamard() {
    double h = std::numbers::sqrt2 / 2;
    return {{h, h}, {h, -h}};
}

void QubitBasis::validate() const {
    if (std::abs(std::real(ket_inner(chi1, chi1)) - 1.0) > kNormTolerance ||
        std::abs(std::real(ket_inner(chi2, chi2)) - 1.0) > kNormTolerance) {
        throw Error(ErrorCode::InvalidBasis, "basis kets must be normalized");
    }
    if (std::abs(ket_inner(chi1, chi2)) > kNormTolerance) {
        throw Error(ErrorCode::InvalidBasis, "basis kets must be orthogonal");
    }
}

std::vector<QubitBasis> standard_bases() {
    return {QubitBasis::computational(), QubitBasis::flipped(), QubitBasis::hadamard()};
}

QubitSplit split_qubit(const StateVector &psi, std::size_t qubit_index, const QubitBasis &basis) {
    std::size_t n = psi.num_qubits();
    if (n < 2) {
        throw Error(ErrorCode::SingleQubitState, "a one-qubit state has no remainder to split off");
    }
    if (qubit_index < 1 || qubit_index > n) {
        throw Error(ErrorCode::IndexOutOfRange, "qubit index " + std::to_string(qubit_index) +
                                                    " outside 1.." + std::to_string(n));
    }
    basis.validate();

    std::size_t rest_dim = std::size_t{1} << (n - 1);
    std::vector<Amplitude> v1(rest_dim);
    std::vector<Amplitude> v2(rest_dim);
    Amplitude c10 = std::conj(basis.chi1[0]);
    Amplitude c11 = std::conj(basis.chi1[1]);
    Amplitude c20 = std::conj(basis.chi2[0]);
    Amplitude c21 = std::conj(basis.chi2[1]);
    for (std::size_t r = 0; r < rest_dim; r++) {
        Amplitude zero = psi[insert_bit(r, 0, qubit_index, n)];
        Amplitude one = psi[insert_bit(r, 1, qubit_index, n)];
        v1[r] = c10 * zero + c11 * one;
        v2[r] = c20 * zero + c21 * one;
    }

    QubitSplit split{qubit_index, basis, norm(v1), norm(v2), std::nullopt, std::nullopt, 0.0};
    if (split.a >= kDegenerateWeight) {
        split.phi1 = make_state(n - 1, std::move(v1), true);
    }
    if (split.b >= kDegenerateWeight) {
        split.phi2 = make_state(n - 1, std::move(v2), true);
    }
    if (split.phi1 && split.phi2) {
        split.overlap = inner_product(*split.phi1, *split.phi2);
    }
    return split;
}

StateVector reassemble(const QubitSplit &split, std::size_t n) {
    if (n < 2 || n > kMaxQubits || split.qubit_index < 1 || split.qubit_index > n) {
        throw Error(ErrorCode::InconsistentSplit, "qubit index or size out of range");
    }
    for (const auto *phi : {&split.phi1, &split.phi2}) {
        if (phi->has_value() && (*phi)->num_qubits() != n - 1) {
            throw Error(ErrorCode::InconsistentSplit,
                        "companion state has " + std::to_string((*phi)->num_qubits()) +
                            " qubits, expected " + std::to_string(n - 1));
        }
    }
    if (!split.phi1 && !split.phi2) {
        throw Error(ErrorCode::InconsistentSplit, "both companion states are absent");
    }
    if (std::abs(split.a * split.a + split.b * split.b - 1.0) > 1e-9) {
        throw Error(ErrorCode::InconsistentSplit, "weights do not satisfy a^2 + b^2 = 1");
    }

    std::size_t rest_dim = std::size_t{1} << (n - 1);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    auto add = [&](double weight, const QubitKet &chi, const std::optional<StateVector> &phi) {
        if (!phi) {
            return;
        }
        for (std::size_t r = 0; r < rest_dim; r++) {
            Amplitude term = weight * (*phi)[r];
            amps[insert_bit(r, 0, split.qubit_index, n)] += chi[0] * term;
            amps[insert_bit(r, 1, split.qubit_index, n)] += chi[1] * term;
        }
    };
    add(split.a, split.basis.chi1, split.phi1);
    add(split.b, split.basis.chi2, split.phi2);
    return make_state(n, std::move(amps), true);
}

}  // namespace qgeo
