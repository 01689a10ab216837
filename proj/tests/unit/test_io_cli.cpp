// Copyright 2026 The twirlent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "../test_util.hpp"
#include "twirlent/cli.hpp"
#include "twirlent/matrix_io.hpp"
#include "twirlent/measures.hpp"
#include "twirlent/sweep.hpp"

using namespace twirlent;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch_dir() {
  const fs::path p = fs::temp_directory_path() / "twirlent_unit";
  fs::create_directories(p);
  return p;
}

fs::path write_matrix(const std::string& name, const ComplexMatrix& m) {
  const fs::path p = scratch_dir() / name;
  write_text_file(p, matrix_to_json(m).dump());
  return p;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

}  // namespace

TEST_CASE("matrix JSON round trip") {
  std::mt19937_64 rng(61);
  const ComplexMatrix m = twirlent::testing::random_density({2, 3}, rng).matrix();
  const auto j = matrix_to_json(m);
  CHECK(j["dim"] == 6);
  CHECK(j["entries"].size() == 36);
  CHECK(matrix_from_json(nlohmann::json::parse(j.dump())) == m);

  const fs::path p = write_matrix("roundtrip.json", m);
  CHECK(read_matrix_file(p) == m);
}

TEST_CASE("matrix JSON validation") {
  using nlohmann::json;
  CHECK_THROWS_AS(matrix_from_json(json::array()), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json{{"dim", 2}}), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json{{"dim", 0}, {"entries", json::array()}}), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json{{"dim", 1}, {"entries", {{1.0, 0.0}, {0.0, 0.0}}}}), DimensionError);
  CHECK_THROWS_AS(matrix_from_json(json{{"dim", 1}, {"entries", {{1.0}}}}), std::invalid_argument);
  CHECK_THROWS_AS(matrix_from_json(json{{"dim", 1}, {"entries", {{"1", 0}}}}), std::invalid_argument);
  CHECK(matrix_from_json(json{{"dim", 1}, {"entries", {{1.0, 0.0}}}, {"note", "x"}})(0, 0) == Complex(1.0));

  const fs::path bad = scratch_dir() / "bad.json";
  write_text_file(bad, "{\"dim\": 2, \"entries\": [");
  CHECK_THROWS_AS(read_matrix_file(bad), std::invalid_argument);
  CHECK_THROWS_AS(read_matrix_file(scratch_dir() / "does_not_exist.json"), IoError);
}

TEST_CASE("sweep rows") {
  SweepSpec spec;
  spec.n = 4;
  const auto rows = run_sweep(spec);
  // 41 γ values per α row, truncated where β < 0.
  CHECK(rows.front().alpha == 0.0);
  CHECK(rows.front().gamma == 0.0);
  for (const auto& r : rows) {
    TwoParamState p{4, r.alpha, r.gamma};
    CHECK_NOTHROW(p.validate());
    CHECK(r.value == sweep_value(SweepQuantity::Negativity, 4, r.alpha, r.gamma));
    if (p.s() <= 0.5) CHECK(r.value == 0.0);
  }

  spec.region_filter = RegionLabel::NptEntangled;
  for (const auto& r : run_sweep(spec)) CHECK(r.region == RegionLabel::NptEntangled);

  spec.quantity = SweepQuantity::EofUpper;
  spec.region_filter.reset();
  for (const auto& r : run_sweep(spec)) {
    if (std::abs(4.0 * r.alpha + r.gamma - 1.0) <= 1e-12 && r.gamma > 0.5) {
      CHECK(r.value == doctest::Approx(r.gamma).epsilon(1e-12));
    }
  }

  CHECK_THROWS_AS(run_sweep(SweepSpec{2}), std::invalid_argument);
  CHECK_THROWS_AS(quantity_from_string("entropy"), std::invalid_argument);
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(1.0) == "1");
}

TEST_CASE("cli sweep") {
  const auto r = cli({"sweep", "--n", "4", "--quantity", "eof_lower", "-o", "-"});
  REQUIRE(r.code == 0);
  const auto lines = split(r.out, '\n');
  REQUIRE(lines.size() > 2);
  CHECK(lines[0] == "alpha,gamma,value");
  // Every row matches a direct library call bit-for-bit.
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    REQUIRE(cols.size() == 3);
    const double a = std::stod(cols[0]);
    const double g = std::stod(cols[1]);
    CHECK(cols[2] == format_real(sweep_value(SweepQuantity::EofLower, 4, a, g)));
  }

  const auto region = cli({"sweep", "--n", "3", "--quantity", "region", "--alpha-steps", "3", "--gamma-steps", "3",
                           "-o", "-"});
  CHECK(region.code == 0);
  CHECK(region.out.find("PPT_SEPARABLE") != std::string::npos);
  CHECK(region.out.find("NPT_ENTANGLED") != std::string::npos);

  const fs::path file = scratch_dir() / "sweep.csv";
  CHECK(cli({"sweep", "--n", "4", "-o", file.string()}).code == 0);
  CHECK(read_text_file(file) == cli({"sweep", "--n", "4", "-o", "-"}).out);

  CHECK(cli({"sweep", "--n", "2", "-o", "-"}).code == 1);
  CHECK(cli({"sweep", "--n", "4", "--alpha-steps", "1", "-o", "-"}).code == 1);
  CHECK(cli({"sweep", "--n", "4", "--quantity", "nope", "-o", "-"}).code == 1);
  CHECK(cli({"sweep", "--n", "4"}).code == 1);
  CHECK(cli({"sweep", "--n", "4", "-o", "/nonexistent_dir/x.csv"}).code == 2);
}

TEST_CASE("cli measure") {
  const auto r = cli({"measure", "--n", "3", "--alpha", "0", "--gamma", "1"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["negativity_closed"] == 1.0);
  CHECK(j["region"] == "NPT_ENTANGLED");
  CHECK(j["eof_exact"].get<double>() == doctest::Approx(1.0));

  const auto interior = nlohmann::json::parse(cli({"measure", "--n", "3", "--alpha", "0.1", "--gamma", "0.7"}).out);
  CHECK(interior["eof_exact"].is_null());
  CHECK(interior["eof_upper"].get<double>() <= interior["negativity_closed"].get<double>());

  const fs::path params = scratch_dir() / "params.json";
  write_text_file(params, R"({"n": 3, "alpha": 0.15, "gamma": 0.7})");
  const auto oracle = cli({"measure", "--params", params.string(), "--oracles", "--seed", "3"});
  REQUIRE(oracle.code == 0);
  const auto oj = nlohmann::json::parse(oracle.out);
  CHECK(std::abs(oj["eof_roof"].get<double>() - 0.7) <= 1e-3);
  CHECK(std::abs(oj["cllh_bound"].get<double>() - oj["eof_lower"].get<double>()) <= 1e-9);

  CHECK(cli({"measure", "--n", "3", "--alpha", "0.1", "--gamma", "0.7", "--oracles"}).code == 1);
  CHECK(cli({"measure", "--n", "3", "--alpha", "0.5", "--gamma", "0.7"}).code == 1);
  CHECK(cli({"measure", "--n", "3"}).code == 1);
  write_text_file(params, R"({"n": "three"})");
  CHECK(cli({"measure", "--params", params.string()}).code == 1);
  CHECK(cli({"measure", "--params", (scratch_dir() / "missing.json").string()}).code == 2);
}

TEST_CASE("cli state and twirl") {
  const auto st = cli({"state", "--n", "3", "--alpha", "0.1", "--gamma", "0.5"});
  REQUIRE(st.code == 0);
  const ComplexMatrix m = matrix_from_json(nlohmann::json::parse(st.out));
  CHECK(m == build_two_param_state(3, 0.1, 0.5).matrix());

  const auto hd = cli({"state", "--m", "3", "--n", "4", "--alpha", "0.1", "--gamma", "0.2"});
  REQUIRE(hd.code == 0);
  CHECK(nlohmann::json::parse(hd.out)["dim"] == 12);

  const fs::path fixture = write_matrix("member.json", m);
  const auto tw = cli({"twirl", "--input", fixture.string(), "--n", "3"});
  REQUIRE(tw.code == 0);
  const auto tj = nlohmann::json::parse(tw.out);
  CHECK(tj["class_residual"].get<double>() <= 1e-10);
  CHECK(tj["alpha"].get<double>() == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(tj["gamma"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));

  CHECK(cli({"twirl", "--input", fixture.string(), "--n", "3", "--mc-samples", "20"}).code == 1);
  CHECK(cli({"twirl", "--input", fixture.string(), "--n", "3", "--mc-samples", "20", "--seed", "1"}).code == 0);
  CHECK(cli({"twirl", "--input", fixture.string(), "--n", "4"}).code == 1);

  const fs::path bad = scratch_dir() / "bad_twirl.json";
  write_text_file(bad, "not json");
  CHECK(cli({"twirl", "--input", bad.string(), "--n", "3"}).code == 1);
  CHECK(cli({"twirl", "--input", (scratch_dir() / "none.json").string(), "--n", "3"}).code == 2);
}

TEST_CASE("cli roof and invariance") {
  const fs::path fixture = write_matrix("varrho.json", build_varrho(3, 0.5).matrix());
  const auto r = cli({"roof", "--input", fixture.string(), "--k", "3", "--restarts", "20", "--seed", "5"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["estimate"].get<double>() - 0.5) <= 1e-3);
  CHECK(j["iterations"].get<int>() > 0);

  CHECK(cli({"roof", "--input", fixture.string(), "--k", "2", "--restarts", "2", "--seed", "5"}).code == 1);
  CHECK(cli({"roof", "--input", fixture.string(), "--k", "3", "--restarts", "2"}).code == 1);
  CHECK(cli({"roof", "--input", fixture.string(), "--k", "3", "--restarts", "2", "--seed", "1", "--dims-a", "4"})
            .code == 1);

  const auto inv = cli({"invariance", "--n", "4", "--alpha", "0.1", "--gamma", "0.4", "--seed", "2"});
  REQUIRE(inv.code == 0);
  const auto ij = nlohmann::json::parse(inv.out);
  CHECK(ij["max_deviation"].get<double>() <= 1e-10);
  CHECK(ij["samples"] == 200);

  ComplexMatrix zero = ComplexMatrix::Zero(6, 6);
  zero(0, 0) = 1.0;
  const fs::path prod = write_matrix("product.json", zero);
  const auto w = cli({"invariance", "--input", prod.string(), "--n", "3", "--seed", "2", "--samples", "20"});
  REQUIRE(w.code == 0);
  CHECK(nlohmann::json::parse(w.out)["max_deviation"].get<double>() > 0.1);
  CHECK(cli({"invariance", "--n", "4", "--alpha", "0.1", "--gamma", "0.4"}).code == 1);
}

TEST_CASE("cli usage") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"bogus"}).code == 1);
  const auto help = cli({"--help"});
  CHECK(help.code == 0);
  for (const char* sub : {"sweep", "measure", "twirl", "roof", "invariance"}) {
    CHECK(help.out.find(sub) != std::string::npos);
  }
  CHECK(cli({"roof", "--help"}).code == 0);
}
