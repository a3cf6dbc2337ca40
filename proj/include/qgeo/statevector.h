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

#ifndef QGEO_STATEVECTOR_H
#define QGEO_STATEVECTOR_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qgeo {

using Amplitude = std::complex<double>;

/// A single-qubit ket (amplitude of |0>, amplitude of |1>).
using QubitKet = std::array<Amplitude, 2>;

inline constexpr std::size_t kMaxQubits = 24;
inline constexpr double kNormTolerance = 1e-12;

/// Normalized pure state of n qubits stored densely over the computational basis.
///
/// Basis convention: qubit 1 is the most significant bit of the amplitude index, so the
/// ket string |b1 b2 ... bn> maps to index sum_i b_i * 2^(n-i). All operations in this
/// library assume that convention.
///
/// Instances are immutable once built; use make_state() to construct one.
class StateVector {
   public:
    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t dimension() const noexcept {
        return amps_.size();
    }
    std::span<const Amplitude> amps() const noexcept {
        return amps_;
    }
    const Amplitude &operator[](std::size_t index) const {
        return amps_[index];
    }

    bool operator==(const StateVector &other) const = default;

   private:
    friend StateVector make_state(std::size_t n, std::vector<Amplitude> amps, bool normalize);

    StateVector(std::size_t num_qubits, std::vector<Amplitude> amps)
        : num_qubits_(num_qubits), amps_(std::move(amps)) {
    }

    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
};

/// Builds a state from 2^n amplitudes.
///
/// With normalize=false the amplitudes must already have unit norm (within 1e-12);
/// with normalize=true they are divided by their Euclidean norm, which must exceed 1e-15.
StateVector make_state(std::size_t n, std::vector<Amplitude> amps, bool normalize);

/// The computational basis state |index> of n qubits.
StateVector basis_state(std::size_t n, std::size_t index);

/// Index of a basis label; bits[0] is qubit 1.
std::size_t basis_index(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> basis_bits(std::size_t index, std::size_t n);

/// "010" style label of a basis index.
std::string ket_label(std::size_t index, std::size_t n);

/// Euclidean norm of a raw amplitude sequence.
double norm(std::span<const Amplitude> amps);

/// <bra|ket>, conjugate-linear in the bra.
Amplitude inner_product(const StateVector &bra, const StateVector &ket);

/// left (x) right; the left factor occupies the more significant bits.
StateVector tensor(const StateVector &left, const StateVector &right);

/// Index of the full n-qubit basis state obtained by inserting `bit` into `rest_index`
/// at 1-based qubit position `qubit_index`.
inline std::size_t insert_bit(std::size_t rest_index, std::size_t bit, std::size_t qubit_index,
                              std::size_t n) {
    std::size_t shift = n - qubit_index;
    std::size_t low_mask = (std::size_t{1} << shift) - 1;
    return ((rest_index & ~low_mask) << 1) | (bit << shift) | (rest_index & low_mask);
}

/// Product state with `qubit` placed at 1-based position `qubit_index` and `rest`
/// filling the other positions in order.
StateVector embed_qubit(const QubitKet &qubit, const StateVector &rest, std::size_t qubit_index);

/// Haar-random state: independent standard normal real and imaginary parts, normalized.
StateVector random_state(std::size_t n, std::mt19937_64 &rng);

/// Serializes to the state file format: {"n": <int>, "amps": [[re, im], ...]} with
/// 17 significant digits per component.
std::string to_json(const StateVector &state);
StateVector from_json(std::string_view text);

void write_state_file(const std::string &path, const StateVector &state);
StateVector read_state_file(const std::string &path);

}  // namespace qgeo

#endif
