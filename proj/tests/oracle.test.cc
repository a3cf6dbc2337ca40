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

#include "qgeo/oracle.h"

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qgeo/decompose.h"
#include "qgeo/error.h"
#include "qgeo/families.h"
#include "qgeo/measure.h"
#include "test_util.h"

using namespace qgeo;

TEST_CASE("reduced density of simple states") {
    auto rho = reduced_density(basis_state(2, 0), 1);
    CHECK(rho.r00 == 1.0);
    CHECK(rho.r11 == 0.0);
    CHECK(rho.r01 == Amplitude(0.0));

    double h = std::numbers::sqrt2 / 2;
    auto g = reduced_density(ghz({3, h, h}), 2);
    CHECK(g.r00 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(g.r11 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(g.r01) == 0.0);

    CHECK_THROWS_AS(reduced_density(basis_state(2, 0), 3), Error);
    CHECK_THROWS_AS(reduced_density(basis_state(1, 0), 1), Error);
}

TEST_CASE("reduced density agrees with the split weights") {
    auto rng = testing::rng_for(31);
    for (int t = 0; t < 200; t++) {
        std::size_t n = 2 + t % 6;
        auto psi = random_state(n, rng);
        for (std::size_t q = 1; q <= n; q++) {
            auto rho = reduced_density(psi, q);
            auto split = split_qubit(psi, q, QubitBasis::computational());
            CHECK(std::abs(rho.r00 - split.a * split.a) <= 1e-12);
            CHECK(std::abs(rho.r11 - split.b * split.b) <= 1e-12);
            CHECK(std::abs(std::abs(rho.r01) - split.a * split.b * std::abs(split.overlap)) <=
                  1e-12);
            CHECK(std::abs(rho.r00 + rho.r11 - 1.0) <= 1e-12);
            CHECK(rho.r00 * rho.r11 - std::norm(rho.r01) >= -1e-12);
        }
    }
}

TEST_CASE("eigen oracle") {
    for (std::size_t n = 2; n <= 12; n++) {
        std::vector<Amplitude> c(n, 1.0 / std::sqrt(static_cast<double>(n)));
        auto w = werner({c});
        for (std::size_t q = 1; q <= n; q++) {
            CHECK(std::abs(eigen_oracle(w, q) - 1.0 / static_cast<double>(n)) <= 1e-12);
        }
    }
    auto rng = testing::rng_for(55);
    auto product = tensor(random_state(1, rng), random_state(3, rng));
    CHECK(eigen_oracle(product, 1) <= 1e-12);
    auto tail = tensor(random_state(3, rng), random_state(1, rng));
    CHECK(eigen_oracle(tail, 4) <= 1e-12);

    for (int t = 0; t < 20; t++) {
        auto psi = random_state(5, rng);
        for (std::size_t q = 1; q <= 5; q++) {
            double e = eigen_oracle(psi, q);
            CHECK(e >= 0.0);
            CHECK(e <= 0.5);
            CHECK(std::abs(e - geometric_entanglement(psi, q).E) <= 1e-10);
            CHECK(std::abs(e - testing::alternating_entanglement(psi, q)) <= 1e-10);
        }
    }
}

TEST_CASE("grid oracle on family states") {
    double h = std::numbers::sqrt2 / 2;
    auto g4 = grid_oracle(ghz({4, h, h}), 1, 64, 6);
    CHECK(std::abs(g4.E_est - 0.5) <= 1e-6);
    CHECK(g4.grid_points == 64);
    CHECK(g4.refinement_rounds == 6);

    CHECK(std::abs(grid_oracle(dicke({6, 3}), 1).E_est - 0.5) <= 1e-6);
    CHECK(grid_oracle(basis_state(3, 5), 2).E_est <= 1e-12);
}

TEST_CASE("grid oracle agrees with the eigen oracle on random states") {
    auto rng = testing::rng_for(4);
    for (int t = 0; t < 30; t++) {
        auto psi = random_state(4, rng);
        std::size_t q = 1 + t % 4;
        auto report = grid_oracle(psi, q, 64, 8);
        CHECK(std::abs(report.E_est - eigen_oracle(psi, q)) <= 1e-6);
        CHECK(std::abs(1.0 - projected_weight(psi, q, report.theta_best, report.alpha_best) -
                       report.E_est) <= 1e-12);
    }
}

TEST_CASE("grid oracle is monotone in refinement rounds and deterministic") {
    auto rng = testing::rng_for(12);
    for (int t = 0; t < 10; t++) {
        auto psi = random_state(3 + t % 3, rng);
        double previous = 1.0;
        for (std::size_t rounds = 0; rounds <= 8; rounds++) {
            double e = grid_oracle(psi, 1, 16, rounds).E_est;
            CHECK(e <= previous);
            previous = e;
        }
        auto a = grid_oracle(psi, 2, 40, 5);
        auto b = grid_oracle(psi, 2, 40, 5);
        CHECK(a.E_est == b.E_est);
        CHECK(a.theta_best == b.theta_best);
        CHECK(a.alpha_best == b.alpha_best);
    }
}

TEST_CASE("grid oracle rejects coarse grids") {
    try {
        grid_oracle(basis_state(2, 0), 1, 15, 2);
        FAIL("expected BadResolution");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::BadResolution);
    }
}
