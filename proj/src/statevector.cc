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

#include "qgeo/statevector.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qgeo/error.h"
#include "qgeo/format.h"

namespace qgeo {

namespace {

void check_qubit_count(std::size_t n) {
    if (n == 0 || n > kMaxQubits) {
        throw Error(ErrorCode::LengthMismatch,
                    "qubit count must be in 1.." + std::to_string(kMaxQubits) + ", got " +
                        std::to_string(n));
    }
}

}  // namespace

StateVector make_state(std::size_t n, std::vector<Amplitude> amps, bool normalize) {
    check_qubit_count(n);
    std::size_t expected = std::size_t{1} << n;
    if (amps.size() != expected) {
        throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(expected) +
                                                   " amplitudes, got " +
                                                   std::to_string(amps.size()));
    }
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::NotNormalized, "amplitude is not finite");
        }
    }
    double nrm = norm(amps);
    if (normalize) {
        if (nrm <= 1e-15) {
            throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
        }
        for (auto &a : amps) {
            a /= nrm;
        }
    } else if (std::abs(nrm * nrm - 1.0) > kNormTolerance) {
        std::ostringstream msg;
        msg << "squared norm deviates from 1 by " << std::abs(nrm * nrm - 1.0);
        throw Error(ErrorCode::NotNormalized, msg.str());
    }
    return StateVector(n, std::move(amps));
}

StateVector basis_state(std::size_t n, std::size_t index) {
    check_qubit_count(n);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    if (index >= amps.size()) {
        throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(index));
    }
    amps[index] = 1.0;
    return make_state(n, std::move(amps), false);
}

std::size_t basis_index(std::span<const std::uint8_t> bits) {
    std::size_t index = 0;
    for (auto b : bits) {
        index = (index << 1) | (b & 1u);
    }
    return index;
}

std::vector<std::uint8_t> basis_bits(std::size_t index, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (std::size_t i = 0; i < n; i++) {
        bits[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1u);
    }
    return bits;
}

std::string ket_label(std::size_t index, std::size_t n) {
    std::string label(n, '0');
    for (std::size_t i = 0; i < n; i++) {
        if ((index >> (n - 1 - i)) & 1u) {
            label[i] = '1';
        }
    }
    return label;
}

double norm(std::span<const Amplitude> amps) {
    double total = 0;
    for (const auto &a : amps) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

Amplitude inner_product(const StateVector &bra, const StateVector &ket) {
    if (bra.num_qubits() != ket.num_qubits()) {
        throw Error(ErrorCode::DimensionMismatch, "inner product of " +
                                                      std::to_string(bra.num_qubits()) +
                                                      "-qubit and " +
                                                      std::to_string(ket.num_qubits()) +
                                                      "-qubit states");
    }
    Amplitude total = 0;
    for (std::size_t j = 0; j < bra.dimension(); j++) {
        total += std::conj(bra[j]) * ket[j];
    }
    return total;
}

StateVector tensor(const StateVector &left, const StateVector &right) {
    std::size_t n = left.num_qubits() + right.num_qubits();
    check_qubit_count(n);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    std::size_t right_dim = right.dimension();
    for (std::size_t i = 0; i < left.dimension(); i++) {
        for (std::size_t j = 0; j < right_dim; j++) {
            amps[i * right_dim + j] = left[i] * right[j];
        }
    }
    return make_state(n, std::move(amps), true);
}

StateVector embed_qubit(const QubitKet &qubit, const StateVector &rest, std::size_t qubit_index) {
    std::size_t n = rest.num_qubits() + 1;
    check_qubit_count(n);
    if (qubit_index < 1 || qubit_index > n) {
        throw Error(ErrorCode::IndexOutOfRange, "qubit index " + std::to_string(qubit_index) +
                                                    " outside 1.." + std::to_string(n));
    }
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (std::size_t r = 0; r < rest.dimension(); r++) {
        amps[insert_bit(r, 0, qubit_index, n)] = qubit[0] * rest[r];
        amps[insert_bit(r, 1, qubit_index, n)] = qubit[1] * rest[r];
    }
    return make_state(n, std::move(amps), true);
}

StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    check_qubit_count(n);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        double re = gauss(rng);
        double im = gauss(rng);
        a = Amplitude(re, im);
    }
    return make_state(n, std::move(amps), true);
}

std::string to_json(const StateVector &state) {
    std::string out = "{\"n\": " + std::to_string(state.num_qubits()) + ", \"amps\": [";
    for (std::size_t j = 0; j < state.dimension(); j++) {
        if (j) {
            out += ", ";
        }
        out += "[" + format_real(state[j].real(), 17) + ", " + format_real(state[j].imag(), 17) +
               "]";
    }
    out += "]}\n";
    return out;
}

StateVector from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw Error(ErrorCode::ParseError, std::string("state file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("amps") ||
        !doc["n"].is_number_integer() || !doc["amps"].is_array()) {
        throw Error(ErrorCode::ParseError, "state file needs integer 'n' and array 'amps'");
    }
    auto n = doc["n"].get<long long>();
    if (n <= 0 || n > static_cast<long long>(kMaxQubits)) {
        throw Error(ErrorCode::ParseError, "state file: n out of range");
    }
    std::vector<Amplitude> amps;
    amps.reserve(doc["amps"].size());
    for (const auto &pair : doc["amps"]) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw Error(ErrorCode::ParseError, "state file: each amplitude must be [re, im]");
        }
        amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return make_state(static_cast<std::size_t>(n), std::move(amps), false);
}

void write_state_file(const std::string &path, const StateVector &state) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "' for writing");
    }
    out << to_json(state);
    if (!out) {
        throw Error(ErrorCode::IoError, "failed writing '" + path + "'");
    }
}

StateVector read_state_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

}  // namespace qgeo
