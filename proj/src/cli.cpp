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

#include "twirlent/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twirlent/convex_roof.hpp"
#include "twirlent/matrix_io.hpp"
#include "twirlent/measures.hpp"
#include "twirlent/state_family.hpp"
#include "twirlent/sweep.hpp"
#include "twirlent/twirl.hpp"

namespace twirlent {

namespace {

using ojson = nlohmann::ordered_json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void emit(const std::string& text, const std::string& output, std::ostream& out) {
  if (output.empty() || output == "-") {
    out << text;
  } else {
    write_text_file(output, text);
  }
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson report_to_json(const EntanglementReport& r) {
  ojson j;
  j["n"] = r.n;
  j["alpha"] = r.alpha;
  j["gamma"] = r.gamma;
  j["beta"] = r.beta;
  j["region"] = std::string(to_string(r.region));
  j["negativity_spectral"] = r.negativity_spectral;
  j["negativity_closed"] = r.negativity_closed;
  j["negativity_halved"] = r.negativity_halved;
  j["eof_lower"] = r.eof_lower;
  j["eof_upper"] = r.eof_upper;
  j["eof_exact"] = r.eof_exact ? ojson(*r.eof_exact) : ojson(nullptr);
  if (r.cllh_bound) j["cllh_bound"] = *r.cllh_bound;
  if (r.eof_roof) j["eof_roof"] = *r.eof_roof;
  return j;
}

// Parameter file schema: {"n": int, "alpha": float, "gamma": float, "m"?: int}.
struct ParamArgs {
  std::string params_path;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<double> alpha;
  std::optional<double> gamma;

  void add_to(CLI::App& sub) {
    sub.add_option("--params", params_path, "JSON parameter file {\"n\",\"alpha\",\"gamma\"[,\"m\"]}");
    sub.add_option("--n", n, "dimension of subsystem B");
    sub.add_option("--alpha", alpha, "alpha parameter");
    sub.add_option("--gamma", gamma, "gamma parameter");
  }

  void resolve() {
    if (!params_path.empty()) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(read_text_file(params_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(std::string("malformed parameter JSON: ") + e.what());
      }
      if (!j.is_object()) throw UsageError("parameter JSON must be an object");
      try {
        if (j.contains("n")) n = j.at("n").get<int>();
        if (j.contains("m")) m = j.at("m").get<int>();
        if (j.contains("alpha")) alpha = j.at("alpha").get<double>();
        if (j.contains("gamma")) gamma = j.at("gamma").get<double>();
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("parameter JSON has a field of the wrong type: ") + e.what());
      }
    }
    if (!n || !alpha || !gamma) throw UsageError("need --n, --alpha and --gamma (or --params)");
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-parameter 2⊗n state family: construction, twirling and entanglement measures",
               "twirlent"};
  app.require_subcommand(1);

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Write a CSV grid of a closed-form quantity");
  SweepSpec spec;
  std::string quantity = "negativity";
  std::string region_filter;
  std::string sweep_out;
  sweep->add_option("--n", spec.n, "dimension of subsystem B")->required();
  sweep->add_option("--quantity", quantity, "negativity | eof_lower | eof_upper | region");
  sweep->add_option("--alpha-steps", spec.alpha_steps, "grid points along alpha (>= 2)");
  sweep->add_option("--gamma-steps", spec.gamma_steps, "grid points along gamma (>= 2)");
  sweep->add_option("--region", region_filter, "keep only PPT_SEPARABLE | NPT_ENTANGLED | BOUNDARY");
  sweep->add_option("--output,-o", sweep_out, "CSV path ('-' for stdout)")->required();

  // measure
  auto* measure = app.add_subcommand("measure", "Entanglement report for a family member");
  ParamArgs measure_params;
  measure_params.add_to(*measure);
  bool oracles = false;
  std::optional<std::uint64_t> measure_seed;
  int measure_restarts = 20;
  std::string measure_out;
  measure->add_flag("--oracles", oracles, "also run the spectral and convex-roof oracles");
  measure->add_option("--seed", measure_seed, "RNG seed (required with --oracles)");
  measure->add_option("--restarts", measure_restarts, "convex-roof restarts for --oracles");
  measure->add_option("--output,-o", measure_out, "JSON path (default stdout)");

  // state
  auto* state = app.add_subcommand("state", "Emit the density matrix of a family member as JSON");
  ParamArgs state_params;
  state_params.add_to(*state);
  state->add_option("--m", state_params.m, "use the m⊗n generalization");
  std::string state_out;
  state->add_option("--output,-o", state_out, "JSON path (default stdout)");

  // twirl
  auto* twirl = app.add_subcommand("twirl", "Project a 2⊗n state onto the family");
  std::string twirl_in;
  int twirl_n = 0;
  std::optional<int> mc_samples;
  std::optional<std::uint64_t> twirl_seed;
  std::string twirl_out;
  twirl->add_option("--input,-i", twirl_in, "matrix JSON")->required();
  twirl->add_option("--n", twirl_n, "dimension of subsystem B")->required();
  twirl->add_option("--mc-samples", mc_samples, "use a Haar Monte-Carlo twirl with this many samples");
  twirl->add_option("--seed", twirl_seed, "RNG seed (required with --mc-samples)");
  twirl->add_option("--output,-o", twirl_out, "JSON path (default stdout)");

  // roof
  auto* roof = app.add_subcommand("roof", "Convex-roof estimate of the entanglement of formation");
  std::string roof_in;
  ConvexRoofConfig roof_cfg;
  int dims_a = 2;
  std::string roof_out;
  roof->add_option("--input,-i", roof_in, "matrix JSON")->required();
  roof->add_option("--k", roof_cfg.K, "decomposition size K (>= rank)")->required();
  roof->add_option("--restarts", roof_cfg.restarts, "random restarts")->required();
  roof->add_option("--seed", roof_cfg.rng_seed, "RNG seed")->required();
  roof->add_option("--max-iterations", roof_cfg.max_iterations, "iteration cap per restart");
  roof->add_option("--tolerance", roof_cfg.step_tolerance, "stop when a pass improves less than this");
  roof->add_option("--dims-a", dims_a, "dimension of subsystem A");
  roof->add_option("--output,-o", roof_out, "JSON path (default stdout)");

  // invariance
  auto* inv = app.add_subcommand("invariance", "Max deviation under sampled bilateral G(2,n) unitaries");
  ParamArgs inv_params;
  inv_params.add_to(*inv);
  std::string inv_in;
  int inv_samples = 200;
  std::uint64_t inv_seed = 0;
  std::string inv_out;
  inv->add_option("--input,-i", inv_in, "matrix JSON (instead of family parameters; needs --n)");
  inv->add_option("--samples", inv_samples, "number of Haar samples");
  inv->add_option("--seed", inv_seed, "RNG seed")->required();
  inv->add_option("--output,-o", inv_out, "JSON path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*sweep) {
      spec.quantity = quantity_from_string(quantity);
      if (!region_filter.empty()) spec.region_filter = region_from_string(region_filter);
      const auto rows = run_sweep(spec);
      std::ostringstream csv;
      write_sweep_csv(spec, rows, csv);
      emit(csv.str(), sweep_out, out);
    } else if (*measure) {
      measure_params.resolve();
      if (oracles && !measure_seed) throw UsageError("--oracles requires --seed");
      ReportOptions opts;
      opts.with_oracles = oracles;
      opts.rng_seed = measure_seed.value_or(0);
      opts.roof_restarts = measure_restarts;
      const auto r = report(*measure_params.n, *measure_params.alpha, *measure_params.gamma, opts);
      emit(dump(report_to_json(r)), measure_out, out);
    } else if (*state) {
      state_params.resolve();
      ComplexMatrix m;
      if (state_params.m) {
        m = build_higher_dim_state({*state_params.m, *state_params.n, *state_params.alpha,
                                    *state_params.gamma})
                .matrix();
      } else {
        m = build_two_param_state(*state_params.n, *state_params.alpha, *state_params.gamma).matrix();
      }
      emit(dump(matrix_to_json(m)), state_out, out);
    } else if (*twirl) {
      if (mc_samples && !twirl_seed) throw UsageError("--mc-samples requires --seed");
      if (twirl_n < 3) throw UsageError("--n must be >= 3");
      const DensityMatrix rho(read_matrix_file(twirl_in), BipartiteDims{2, static_cast<std::size_t>(twirl_n)});
      const DensityMatrix result = mc_samples ? monte_carlo_twirl(rho, *mc_samples, *twirl_seed)
                                              : twirl_pipeline(rho, twirl_n);
      const auto params = extract_parameters(result, twirl_n);
      ojson j = matrix_to_json(result.matrix());
      j["alpha"] = params.alpha;
      j["gamma"] = params.gamma;
      j["class_residual"] = class_residual(result.matrix(), twirl_n);
      emit(dump(j), twirl_out, out);
    } else if (*roof) {
      const ComplexMatrix m = read_matrix_file(roof_in);
      if (dims_a < 1 || m.rows() % dims_a != 0) throw UsageError("--dims-a must divide the matrix dimension");
      const BipartiteDims dims{static_cast<std::size_t>(dims_a), static_cast<std::size_t>(m.rows() / dims_a)};
      const auto res = convex_roof_estimate(DensityMatrix(m, dims), roof_cfg);
      ojson j;
      j["estimate"] = res.estimate;
      j["iterations"] = res.iterations;
      emit(dump(j), roof_out, out);
    } else if (*inv) {
      std::optional<DensityMatrix> rho;
      if (!inv_in.empty()) {
        if (!inv_params.n) throw UsageError("--input requires --n");
        rho.emplace(read_matrix_file(inv_in), BipartiteDims{2, static_cast<std::size_t>(*inv_params.n)});
      } else {
        inv_params.resolve();
        rho.emplace(build_two_param_state(*inv_params.n, *inv_params.alpha, *inv_params.gamma));
      }
      ojson j;
      j["max_deviation"] = check_uu_invariance(*rho, inv_samples, inv_seed);
      j["samples"] = inv_samples;
      emit(dump(j), inv_out, out);
    }
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace twirlent
