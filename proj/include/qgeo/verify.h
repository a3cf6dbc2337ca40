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

#ifndef QGEO_VERIFY_H
#define QGEO_VERIFY_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qgeo/families.h"
#include "qgeo/oracle.h"
#include "qgeo/statevector.h"

namespace qgeo {

struct VerifyOptions {
    std::size_t max_n = 12;
    std::uint64_t seed = 42;
    GridOptions grid{};
};

/// Outcome of one checked claim. `max_deviation` is the worst observed error against the
/// claim's reference value and `tolerance` is the bound it must stay within.
struct ClaimResult {
    int id;
    std::string name;
    bool passed;
    double max_deviation;
    double tolerance;
    std::size_t cases;
    std::string detail;
};

/// A state under test, labelled for diagnostics.
struct CorpusEntry {
    std::string label;
    StateVector state;
};

/// Werner (proper and random-coefficient), Dicke (all k), 21-point GHZ sweep and trig
/// states for n = 2..max_n.
std::vector<CorpusEntry> family_corpus(std::size_t max_n, std::uint64_t seed);

/// `count` random states with n cycling through 2..max_n.
std::vector<CorpusEntry> random_corpus(std::size_t count, std::size_t max_n, std::uint64_t seed);

/// Runs every claim check. max_n must lie in 2..14.
std::vector<ClaimResult> run_claims(const VerifyOptions &options);

/// "PASS  [ 1] name  max_dev=... tol=... cases=..." style line.
std::string format_claim(const ClaimResult &claim);

}  // namespace qgeo

#endif
