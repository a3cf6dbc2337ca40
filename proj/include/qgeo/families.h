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

#ifndef QGEO_FAMILIES_H
#define QGEO_FAMILIES_H

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qgeo/statevector.h"

namespace qgeo {

/// c_1|10...0> + c_2|010...0> + ... + c_n|0...01>, with sum |c_i|^2 = 1.
struct WernerSpec {
    std::vector<Amplitude> c;
};

/// Equal superposition of all n-qubit basis states carrying exactly k ones.
struct DickeSpec {
    std::size_t n;
    std::size_t k;
};

/// c1|0...0> + c2|1...1> on n qubits.
struct GhzSpec {
    std::size_t n;
    Amplitude c1;
    Amplitude c2;
};

/// Odd-weight support, sign (-1)^((w-1)/2), amplitude 2^{-(n-1)/2}.
struct TrigSinSpec {
    std::size_t n;
};

/// Even-weight support, sign (-1)^(w/2), amplitude 2^{-(n-1)/2}.
struct TrigCosSpec {
    std::size_t n;
};

using FamilySpec = std::variant<WernerSpec, DickeSpec, GhzSpec, TrigSinSpec, TrigCosSpec>;

StateVector werner(const WernerSpec &spec);
StateVector dicke(const DickeSpec &spec);
StateVector ghz(const GhzSpec &spec);
StateVector trig_sin(std::size_t n);
StateVector trig_cos(std::size_t n);

StateVector build_family(const FamilySpec &spec);
std::size_t family_qubits(const FamilySpec &spec);

/// Analytic single-qubit entanglement of a family member at 1-based `qubit_index`.
double predicted_entanglement(const FamilySpec &spec, std::size_t qubit_index);

/// C(n, k) as a double; exact for the sizes this library supports.
double binomial(std::size_t n, std::size_t k);

/// Parses "re", "re+imi", "re-imi", "imi" into a complex number.
Amplitude parse_complex(std::string_view text);

/// Parses the family grammar: "werner:c1,c2,...", "dicke:n,k", "ghz:n,c1", "sin:n", "cos:n".
/// For ghz, c2 = sqrt(1 - |c1|^2) is real and nonnegative.
FamilySpec parse_family(std::string_view text);

/// Short human-readable form, e.g. "dicke:6,3".
std::string describe_family(const FamilySpec &spec);

}  // namespace qgeo

#endif
