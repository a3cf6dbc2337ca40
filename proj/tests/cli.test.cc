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

#include "cli.h"

#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qgeo/families.h"
#include "qgeo/statevector.h"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = qgeo::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        result.push_back(line);
    }
    return result;
}

}  // namespace

TEST_CASE("state --pretty prints kets") {
    auto r = run({"state", "sin:3", "--pretty"});
    CHECK(r.code == 0);
    CHECK(lines(r.out) ==
          std::vector<std::string>{"+0.5 |001⟩", "+0.5 |010⟩", "+0.5 |100⟩", "-0.5 |111⟩"});

    auto d = run({"state", "dicke:4,2", "--pretty"});
    auto rows = lines(d.out);
    REQUIRE(rows.size() == 6);
    for (const auto &row : rows) {
        CHECK(row.rfind("+0.408248290464 |", 0) == 0);
    }
}

TEST_CASE("state writes the state file") {
    auto r = run({"state", "werner:1,0"});
    CHECK(r.code == 0);
    CHECK(qgeo::from_json(r.out) == qgeo::basis_state(2, 2));

    auto path = (std::filesystem::temp_directory_path() / "qgeo_cli_state.json").string();
    CHECK(run({"state", "ghz:3,0.6", "-o", path}).code == 0);
    auto loaded = qgeo::read_state_file(path);
    CHECK(loaded[0].real() == doctest::Approx(0.6));
    CHECK(loaded[7].real() == doctest::Approx(0.8));

    auto m = run({"measure", path, "--format", "csv"});
    CHECK(m.code == 0);
    CHECK(lines(m.out)[1] == "1,0.36");
    std::filesystem::remove(path);
}

TEST_CASE("state input errors exit 2") {
    CHECK(run({"state", "dicke:3,5"}).code == 2);
    CHECK(run({"state", "bogus:1"}).code == 2);
    CHECK(run({"state", "werner:0.5,0.5"}).code == 2);
    CHECK(run({"state"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"measure", "/nonexistent/state.json"}).code == 2);
}

TEST_CASE("measure table") {
    auto r = run({"measure", "dicke:6,3"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == "source: dicke:6,3");
    for (int q = 1; q <= 6; q++) {
        CHECK(rows[static_cast<std::size_t>(q) + 1].find("0.5") != std::string::npos);
    }
    CHECK(rows.back().rfind("total", 0) == 0);
    CHECK(rows.back().find("3") != std::string::npos);
}

TEST_CASE("measure json and csv") {
    auto r = run({"measure", "ghz:5,0.7071067811865476", "--format", "json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 5);
    for (const auto &e : doc["per_qubit"]) {
        CHECK(e.get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    }

    auto w = run({"measure",
                  "werner:0.8366600265340756,0.31622776601683794,0.31622776601683794,"
                  "0.31622776601683794",
                  "--format", "csv"});
    CHECK(w.code == 0);
    auto rows = lines(w.out);
    CHECK(rows.front() == "qubit,E");
    CHECK(rows.back() == "total,0.6");
}

TEST_CASE("measure --check-oracles") {
    auto r = run({"measure", "dicke:5,2", "--check-oracles", "--format", "json"});
    CHECK(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["max_deviation"].get<double>() <= 1e-6);
    CHECK(doc["eigen_oracle"].size() == 5);

    // An impossible tolerance trips the claim-failure exit code.
    auto strict = run({"--tol", "0", "measure", "werner:0.6,0.8i,0", "--check-oracles"});
    CHECK(strict.code == 1);
    CHECK(strict.err.find("exceeds tolerance") != std::string::npos);
}

TEST_CASE("sweep ghz") {
    auto r = run({"sweep", "ghz", "--n", "4", "--steps", "5"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0] == "param,E_1,E_2,E_3,E_4,total,predicted");
    std::vector<std::string> predicted{"0", "0.25", "0.5", "0.25", "0"};
    std::vector<std::string> params{"0", "0.25", "0.5", "0.75", "1"};
    for (std::size_t i = 0; i < 5; i++) {
        const auto &row = rows[i + 1];
        CHECK(row.substr(row.rfind(',') + 1) == predicted[i]);
        CHECK(row.substr(0, row.find(',')) == params[i]);
    }
}

TEST_CASE("sweep dicke") {
    auto r = run({"sweep", "dicke", "--n", "8"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 10);
    std::vector<double> expected{0, 0.125, 0.25, 0.375, 0.5, 0.375, 0.25, 0.125, 0};
    for (std::size_t k = 0; k <= 8; k++) {
        const auto &row = rows[k + 1];
        auto first = row.find(',');
        double e1 = std::stod(row.substr(first + 1, row.find(',', first + 1) - first - 1));
        CHECK(e1 == doctest::Approx(expected[k]).epsilon(1e-12));
    }

    auto small = run({"sweep", "dicke", "--n", "2"});
    CHECK(lines(small.out) == std::vector<std::string>{"param,E_1,E_2,total,predicted",
                                                       "0,0,0,0,0", "1,0.5,0.5,1,0.5",
                                                       "2,0,0,0,0"});
}

TEST_CASE("sweep werner-symmetric and errors") {
    auto r = run({"sweep", "werner-symmetric", "--n", "3", "--steps", "3"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[2].rfind("0.5,0.5,0.25,0.25,1,0.5", 0) == 0);

    CHECK(run({"sweep", "ghz", "--n", "4", "--steps", "1"}).code == 2);
    CHECK(run({"sweep", "ghz", "--n", "1"}).code == 2);
    CHECK(run({"sweep", "sin", "--n", "3"}).code == 2);
}

TEST_CASE("sweep output is byte-identical across runs and honours --digits") {
    auto a = run({"sweep", "ghz", "--n", "3", "--steps", "7"});
    auto b = run({"sweep", "ghz", "--n", "3", "--steps", "7"});
    CHECK(a.out == b.out);
    auto short_digits = run({"--digits", "3", "sweep", "ghz", "--n", "3", "--steps", "4"});
    CHECK(lines(short_digits.out)[2].rfind("0.333,0.333,", 0) == 0);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--max-n", "3", "--seed", "7"});
    CHECK(r.code == 0);
    auto rows = lines(r.out);
    CHECK(rows.front() == "verify: max_n=3 seed=7");
    CHECK(rows.back() == "13/13 claims passed");

    auto bad = run({"verify", "--max-n", "1"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("BadRange") != std::string::npos);
    CHECK(run({"verify", "--max-n", "15"}).code == 2);
}
