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

#ifndef QGEO_FORMAT_H
#define QGEO_FORMAT_H

#include <string>

namespace qgeo {

/// Locale-independent shortest "%.<digits>g"-style rendering of a real number.
/// Negative zero is printed as "0".
std::string format_real(double value, int significant_digits);

}  // namespace qgeo

#endif
