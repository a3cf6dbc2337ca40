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

#include "qgeo/format.h"

#include <array>
#include <charconv>
#include <stdexcept>

namespace qgeo {

std::string format_real(double value, int significant_digits) {
    if (value == 0.0) {
        value = 0.0;
    }
    std::array<char, 64> buffer{};
    auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                   std::chars_format::general, significant_digits);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_real: buffer too small");
    }
    return std::string(buffer.data(), end);
}

}  // namespace qgeo
