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

#include "qgeo/verify.h"

#include "doctest.h"
#include "qgeo/error.h"

using namespace qgeo;

TEST_CASE("corpora are reproducible from the seed") {
    auto a = random_corpus(20, 6, 9);
    auto b = random_corpus(20, 6, 9);
    auto c = random_corpus(20, 6, 10);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); i++) {
        CHECK(a[i].state == b[i].state);
        CHECK(a[i].state.num_qubits() == 2 + i % 5);
    }
    CHECK_FALSE(a[0].state == c[0].state);

    auto fam = family_corpus(4, 1);
    // per n: proper + 3 random Werner, n+1 Dicke, 21 GHZ, sin, cos
    CHECK(fam.size() == (4 + 3 + 21 + 2) + (4 + 4 + 21 + 2) + (4 + 5 + 21 + 2));
}

TEST_CASE("claims on a small run") {
    VerifyOptions options;
    options.max_n = 4;
    options.seed = 5;
    auto results = run_claims(options);
    REQUIRE(results.size() == 13);
    for (const auto &claim : results) {
        INFO(format_claim(claim));
        CHECK(claim.passed);
        CHECK(claim.id == static_cast<int>(&claim - results.data()) + 1);
    }
    CHECK(format_claim(results[0]).rfind("PASS  [ 1] ", 0) == 0);
}

TEST_CASE("max_n outside 2..14 is rejected") {
    VerifyOptions options;
    options.max_n = 1;
    CHECK_THROWS_AS(run_claims(options), Error);
    options.max_n = 15;
    CHECK_THROWS_AS(run_claims(options), Error);
}
