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

#include "qgeo/families.h"

#include <bit>
#include <charconv>
#include <cmath>

#include "qgeo/error.h"
#include "qgeo/format.h"

namespace qgeo {

namespace {

void require_qubits(std::size_t n, std::size_t minimum, const char *family) {
    if (n < minimum) {
        throw Error(ErrorCode::NTooSmall, std::string(family) + " needs at least " +
                                              std::to_string(minimum) + " qubits");
    }
    if (n > kMaxQubits) {
        throw Error(ErrorCode::OutOfRange, std::string(family) + ": too many qubits");
    }
}

void require_unit_weight(double total, const char *family) {
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw Error(ErrorCode::BadNormalization,
                    std::string(family) + " coefficients must satisfy sum |c|^2 = 1 (got " +
                        format_real(total, 17) + ")");
    }
}

StateVector trig_state(std::size_t n, bool odd) {
    require_qubits(n, 2, odd ? "sin" : "cos");
    double amplitude = std::pow(2.0, -0.5 * static_cast<double>(n - 1));
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (std::size_t j = 0; j < amps.size(); j++) {
        int w = std::popcount(j);
        if ((w % 2 == 1) != odd) {
            continue;
        }
        int half = odd ? (w - 1) / 2 : w / 2;
        amps[j] = half % 2 == 0 ? amplitude : -amplitude;
    }
    return make_state(n, std::move(amps), false);
}

std::size_t parse_size(std::string_view text) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw Error(ErrorCode::ParseError, "expected a nonnegative integer, got '" +
                                               std::string(text) + "'");
    }
    return value;
}

double parse_double(std::string_view text) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw Error(ErrorCode::ParseError, "expected a real number, got '" + std::string(text) +
                                               "'");
    }
    return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    while (true) {
        auto pos = text.find(',');
        parts.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) {
            break;
        }
        text.remove_prefix(pos + 1);
    }
    return parts;
}

std::string describe_complex(Amplitude c) {
    if (c.imag() == 0.0) {
        return format_real(c.real(), 17);
    }
    std::string im = format_real(c.imag(), 17);
    if (im.front() != '-') {
        im = "+" + im;
    }
    return format_real(c.real(), 17) + im + "i";
}

}  // namespace

double binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double result = 1.0;
    for (std::size_t i = 1; i <= k; i++) {
        result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return std::round(result);
}

StateVector werner(const WernerSpec &spec) {
    std::size_t n = spec.c.size();
    require_qubits(n, 2, "werner");
    double total = 0;
    for (const auto &c : spec.c) {
        total += std::norm(c);
    }
    require_unit_weight(total, "werner");
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (std::size_t i = 0; i < n; i++) {
        amps[std::size_t{1} << (n - 1 - i)] = spec.c[i];
    }
    return make_state(n, std::move(amps), true);
}

StateVector dicke(const DickeSpec &spec) {
    require_qubits(spec.n, 1, "dicke");
    if (spec.k > spec.n) {
        throw Error(ErrorCode::KOutOfRange, "dicke needs 0 <= k <= n, got k=" +
                                                std::to_string(spec.k) + ", n=" +
                                                std::to_string(spec.n));
    }
    double amplitude = 1.0 / std::sqrt(binomial(spec.n, spec.k));
    std::vector<Amplitude> amps(std::size_t{1} << spec.n);
    for (std::size_t j = 0; j < amps.size(); j++) {
        if (static_cast<std::size_t>(std::popcount(j)) == spec.k) {
            amps[j] = amplitude;
        }
    }
    return make_state(spec.n, std::move(amps), false);
}

StateVector ghz(const GhzSpec &spec) {
    require_qubits(spec.n, 2, "ghz");
    require_unit_weight(std::norm(spec.c1) + std::norm(spec.c2), "ghz");
    std::vector<Amplitude> amps(std::size_t{1} << spec.n);
    amps.front() = spec.c1;
    amps.back() = spec.c2;
    return make_state(spec.n, std::move(amps), true);
}

StateVector trig_sin(std::size_t n) {
    return trig_state(n, true);
}

StateVector trig_cos(std::size_t n) {
    return trig_state(n, false);
}

StateVector build_family(const FamilySpec &spec) {
    return std::visit(
        [](const auto &s) -> StateVector {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WernerSpec>) {
                return werner(s);
            } else if constexpr (std::is_same_v<T, DickeSpec>) {
                return dicke(s);
            } else if constexpr (std::is_same_v<T, GhzSpec>) {
                return ghz(s);
            } else if constexpr (std::is_same_v<T, TrigSinSpec>) {
                return trig_sin(s.n);
            } else {
                return trig_cos(s.n);
            }
        },
        spec);
}

std::size_t family_qubits(const FamilySpec &spec) {
    return std::visit(
        [](const auto &s) -> std::size_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WernerSpec>) {
                return s.c.size();
            } else {
                return s.n;
            }
        },
        spec);
}

double predicted_entanglement(const FamilySpec &spec, std::size_t qubit_index) {
    std::size_t n = family_qubits(spec);
    if (qubit_index < 1 || qubit_index > n) {
        throw Error(ErrorCode::IndexOutOfRange, "qubit index " + std::to_string(qubit_index) +
                                                    " outside 1.." + std::to_string(n));
    }
    auto tent = [](double weight) { return 0.5 * (1.0 - std::abs(1.0 - 2.0 * weight)); };
    return std::visit(
        [&](const auto &s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WernerSpec>) {
                return tent(std::norm(s.c[qubit_index - 1]));
            } else if constexpr (std::is_same_v<T, DickeSpec>) {
                return tent(static_cast<double>(s.k) / static_cast<double>(s.n));
            } else if constexpr (std::is_same_v<T, GhzSpec>) {
                return tent(std::norm(s.c1));
            } else {
                return 0.5;
            }
        },
        spec);
}

Amplitude parse_complex(std::string_view text) {
    if (text.empty()) {
        throw Error(ErrorCode::ParseError, "empty coefficient");
    }
    if (text.back() != 'i') {
        return {parse_double(text), 0.0};
    }
    std::string_view body = text.substr(0, text.size() - 1);
    // Last sign that is not the leading sign and not part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t p = body.size(); p-- > 1;) {
        if ((body[p] == '+' || body[p] == '-') && body[p - 1] != 'e' && body[p - 1] != 'E') {
            split = p;
            break;
        }
    }
    auto imag_part = [](std::string_view s) {
        if (s.empty() || s == "+") {
            return 1.0;
        }
        if (s == "-") {
            return -1.0;
        }
        return parse_double(s);
    };
    if (split == std::string_view::npos) {
        return {0.0, imag_part(body)};
    }
    return {parse_double(body.substr(0, split)), imag_part(body.substr(split))};
}

FamilySpec parse_family(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorCode::ParseError, "family spec must look like 'tag:args', got '" +
                                               std::string(text) + "'");
    }
    std::string_view tag = text.substr(0, colon);
    auto args = split_commas(text.substr(colon + 1));
    auto expect_args = [&](std::size_t count) {
        if (args.size() != count) {
            throw Error(ErrorCode::ParseError, std::string(tag) + " takes " +
                                                   std::to_string(count) + " argument(s)");
        }
    };

    if (tag == "werner") {
        WernerSpec spec;
        for (auto arg : args) {
            spec.c.push_back(parse_complex(arg));
        }
        return spec;
    }
    if (tag == "dicke") {
        expect_args(2);
        return DickeSpec{parse_size(args[0]), parse_size(args[1])};
    }
    if (tag == "ghz") {
        expect_args(2);
        Amplitude c1 = parse_complex(args[1]);
        double rest = 1.0 - std::norm(c1);
        if (rest < -kNormTolerance) {
            throw Error(ErrorCode::BadNormalization, "ghz needs |c1| <= 1");
        }
        return GhzSpec{parse_size(args[0]), c1, std::sqrt(std::max(rest, 0.0))};
    }
    if (tag == "sin") {
        expect_args(1);
        return TrigSinSpec{parse_size(args[0])};
    }
    if (tag == "cos") {
        expect_args(1);
        return TrigCosSpec{parse_size(args[0])};
    }
    throw Error(ErrorCode::UnknownFamily, "unknown family '" + std::string(tag) + "'");
}

std::string describe_family(const FamilySpec &spec) {
    return std::visit(
        [](const auto &s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, WernerSpec>) {
                std::string out = "werner:";
                for (std::size_t i = 0; i < s.c.size(); i++) {
                    out += (i ? "," : "") + describe_complex(s.c[i]);
                }
                return out;
            } else if constexpr (std::is_same_v<T, DickeSpec>) {
                return "dicke:" + std::to_string(s.n) + "," + std::to_string(s.k);
            } else if constexpr (std::is_same_v<T, GhzSpec>) {
                return "ghz:" + std::to_string(s.n) + "," + describe_complex(s.c1);
            } else if constexpr (std::is_same_v<T, TrigSinSpec>) {
                return "sin:" + std::to_string(s.n);
            } else {
                return "cos:" + std::to_string(s.n);
            }
        },
        spec);
}

}  // namespace qgeo
