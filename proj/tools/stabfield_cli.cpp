// Copyright 2026 The stabfield Authors
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

// Batch runner for the stabfield library.
//
//   stabfield trace    --config cfg.json [--seed S] [--out DIR] [--jobs J] [--dt DT] [--t-max T] [--alpha A]
//   stabfield sweep    --config cfg.json ...
//   stabfield scaling  --config cfg.json ... | --points points.json --out DIR
//   stabfield defects  --config cfg.json ...
//   stabfield spectrum --model model.json [--out DIR]
//   stabfield oracle-check [--draws N] [--seed S] [--out DIR]
//
// Exit codes: 0 success, 2 configuration error, 3 numeric failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "stabfield.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct Args {
  std::string config;
  std::string model;
  std::string points;
  std::size_t draws = 100;
  stabfield::Overrides overrides;
};

void add_overrides(CLI::App* cmd, Args& a) {
  cmd->add_option("--config,-c", a.config, "experiment config (JSON)")->required();
  cmd->add_option_function<std::uint64_t>("--seed", [&a](const std::uint64_t& v) { a.overrides.seed = v; },
                                          "RNG seed");
  cmd->add_option_function<std::string>("--out", [&a](const std::string& v) { a.overrides.output = v; },
                                        "output directory");
  cmd->add_option_function<std::size_t>("--jobs", [&a](const std::size_t& v) { a.overrides.jobs = v; },
                                        "worker threads (default: hardware concurrency)");
  cmd->add_option_function<double>("--dt", [&a](const double& v) { a.overrides.dt = v; }, "time step");
  cmd->add_option_function<double>("--t-max", [&a](const double& v) { a.overrides.t_max = v; }, "horizon");
  cmd->add_option_function<double>("--alpha", [&a](const double& v) { a.overrides.alpha = v; },
                                    "optical-potential decay rate");
}

int run(const std::string& name, const Args& a) {
  using namespace stabfield;
  if (name == "spectrum") {
    const auto model = load_model(a.model);
    const auto levels = spectrum(model);
    io::write_spectrum_csv(std::cout, levels);
    if (a.overrides.output) {
      auto out = io::open_out(*a.overrides.output / "spectrum.csv");
      io::write_spectrum_csv(out, levels);
    }
    return 0;
  }
  if (name == "oracle-check") {
    const auto checks = oracle_check(a.draws, a.overrides.seed.value_or(0));
    bool ok = true;
    nlohmann::json report = nlohmann::json::array();
    for (const auto& c : checks) {
      std::cout << (c.informational ? "[INFO] " : c.pass() ? "[PASS] " : "[FAIL] ") << c.name
                << ": max error " << io::fmt(c.max_error);
      if (!c.informational) std::cout << " (tol " << c.tolerance << ")";
      std::cout << '\n';
      ok = ok && c.pass();
      report.push_back({{"name", c.name}, {"max_error", c.max_error}, {"tolerance", c.tolerance},
                        {"informational", c.informational}, {"pass", c.pass()}});
    }
    if (a.overrides.output) write_json(*a.overrides.output / "oracle_check.json", report);
    return ok ? 0 : kExitNumeric;
  }
  if (name == "scaling" && !a.points.empty()) {
    const auto fit = fit_points_file(a.points, a.overrides.output.value_or("."));
    std::cout << "slope " << io::fmt(fit.slope) << " intercept " << io::fmt(fit.intercept);
    if (fit.n_max) std::cout << " N_max " << io::fmt(*fit.n_max);
    std::cout << '\n';
    return 0;
  }
  if (a.config.empty()) throw ConfigError(name + ": --config is required");
  const auto cfg = load_config(a.config, a.overrides);
  if (name == "trace") {
    run_trace(cfg);
  } else if (name == "sweep") {
    run_sweep(cfg);
  } else if (name == "scaling") {
    const auto r = run_scaling(cfg);
    for (std::size_t w = 0; w < r.fits.size(); ++w) {
      if (r.fits[w] && r.fits[w]->n_max) {
        std::cout << cfg.analysis.windows[w].name << ": N_max " << io::fmt(*r.fits[w]->n_max) << '\n';
      }
    }
  } else if (name == "defects") {
    const auto r = run_defects(cfg);
    std::cout << "pearson_r " << io::fmt(r.pearson_r) << '\n';
  }
  std::cout << "wrote " << cfg.output.string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fidelity of stabilizer states under random local fields"};
  app.require_subcommand(1);
  Args args;
  for (const char* name : {"trace", "sweep", "defects"}) {
    add_overrides(app.add_subcommand(name, std::string("run the ") + name + " experiment"), args);
  }
  auto* scaling = app.add_subcommand("scaling", "threshold delta versus N and its linear extrapolation");
  add_overrides(scaling, args);
  scaling->get_option("--config")->required(false);
  scaling->add_option("--points", args.points, "fit precomputed {\"points\": [[N, delta*], ...]}");
  auto* spec = app.add_subcommand("spectrum", "dense spectrum of a model's H0");
  spec->add_option("--model,-m", args.model, "model file (JSON)")->required();
  spec->add_option_function<std::string>("--out", [&](const std::string& v) { args.overrides.output = v; },
                                         "output directory");
  auto* oc = app.add_subcommand("oracle-check", "compare closed forms for N=2 with dense diagonalization");
  oc->add_option("--draws", args.draws, "random field draws");
  oc->add_option_function<std::uint64_t>("--seed", [&](const std::uint64_t& v) { args.overrides.seed = v; },
                                         "RNG seed");
  oc->add_option_function<std::string>("--out", [&](const std::string& v) { args.overrides.output = v; },
                                       "output directory");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }
  try {
    return run(app.get_subcommands().front()->get_name(), args);
  } catch (const stabfield::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const stabfield::ModelError& e) {
    std::cerr << "model error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const stabfield::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
