/*
 * Copyright 2026 The fracpair Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracpair/comparison.hpp"
#include "fracpair/errors.hpp"
#include "fracpair/io.hpp"
#include "fracpair/limit_density.hpp"
#include "fracpair/pair_correlation.hpp"
#include "fracpair/verification.hpp"

namespace fs = std::filesystem;
using namespace fracpair;

namespace {

enum ExitCode : int { kOk = 0, kValidation = 1, kIo = 2, kVerification = 3 };

struct RunOptions {
  double alpha = 0.5;
  std::string basis = "1,0,0,1";
  std::string offset = "0,0";
  std::int64_t n = 20;
  int np = 0;
  int ns = 1;
  std::optional<double> gamma;
  std::optional<double> lambda;
  double a = 1.5;
  std::string mode = "level";
  int b = 2;
  std::string enumeration = "pruned";
  double safety = 2.0;
  int bins = 60;
  int res = 60;
  std::string out = ".";
  std::string format = "csv";
  int threads = 1;
  bool deterministic = false;
  std::uint64_t seed = 20260101;
  std::vector<std::int64_t> n_list{10, 30, 50, 80};
  std::string window;
  bool corrupt_branch_cut = false;
  std::string manifest;
};

struct Field {
  std::string key;
  std::string flag;
  std::function<std::string()> get;
  std::function<void(const std::string&)> set;
};

std::string join(const std::vector<std::int64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::int64_t> split_ints(const std::string& s) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    out.push_back(std::stoll(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

std::vector<Field> fields(RunOptions& o) {
  auto real = [](double& x) {
    return std::pair{std::function<std::string()>([&x] { return format_double(x); }),
                     std::function<void(const std::string&)>([&x](const std::string& s) { x = parse_double(s); })};
  };
  auto opt_real = [](std::optional<double>& x) {
    return std::pair{std::function<std::string()>([&x] { return x ? format_double(*x) : std::string(); }),
                     std::function<void(const std::string&)>([&x](const std::string& s) {
                       x = s.empty() ? std::nullopt : std::optional<double>(parse_double(s));
                     })};
  };
  auto text = [](std::string& x) {
    return std::pair{std::function<std::string()>([&x] { return x; }),
                     std::function<void(const std::string&)>([&x](const std::string& s) { x = s; })};
  };
  auto integer = [](auto& x) {
    using T = std::remove_reference_t<decltype(x)>;
    return std::pair{std::function<std::string()>([&x] { return std::to_string(x); }),
                     std::function<void(const std::string&)>([&x](const std::string& s) {
                       x = static_cast<T>(std::stoll(s));
                     })};
  };
  std::vector<Field> f;
  auto add = [&f](std::string key, std::string flag, auto accessors) {
    f.push_back({std::move(key), std::move(flag), accessors.first, accessors.second});
  };
  add("alpha", "--alpha", real(o.alpha));
  add("basis", "--basis", text(o.basis));
  add("offset", "--offset", text(o.offset));
  add("N", "--N", integer(o.n));
  add("Np", "--Np", integer(o.np));
  add("Ns", "--Ns", integer(o.ns));
  add("gamma", "--gamma", opt_real(o.gamma));
  add("lambda", "--lambda", opt_real(o.lambda));
  add("A", "--A", real(o.a));
  add("mode", "--mode", text(o.mode));
  add("b", "--b", integer(o.b));
  add("enum", "--enum", text(o.enumeration));
  add("safety", "--safety", real(o.safety));
  add("bins", "--bins", integer(o.bins));
  add("res", "--res", integer(o.res));
  add("format", "--format", text(o.format));
  add("threads", "--threads", integer(o.threads));
  add("seed", "--seed", integer(o.seed));
  add("window", "--window", text(o.window));
  f.push_back({"N_list", "--N-list", [&o] { return join(o.n_list); },
               [&o](const std::string& s) { o.n_list = split_ints(s); }});
  f.push_back({"deterministic", "--deterministic", [&o] { return std::string(o.deterministic ? "1" : "0"); },
               [&o](const std::string& s) { o.deterministic = s == "1" || s == "true"; }});
  f.push_back({"corrupt_branch_cut", "--corrupt-branch-cut",
               [&o] { return std::string(o.corrupt_branch_cut ? "1" : "0"); },
               [&o](const std::string& s) { o.corrupt_branch_cut = s == "1" || s == "true"; }});
  return f;
}

void add_options(CLI::App* app, RunOptions& o) {
  app->add_option("--alpha", o.alpha, "exponent alpha in (0,1)");
  app->add_option("--basis", o.basis, "lattice basis re1,im1,re2,im2");
  app->add_option("--offset", o.offset, "grid offset re,im");
  app->add_option("--N", o.n, "points with 0 < |m| <= N");
  app->add_option("--Np", o.np, "levels below zero (N')");
  app->add_option("--Ns", o.ns, "levels from zero (N'')");
  auto* g = app->add_option("--gamma", o.gamma, "scaling phi(N) = N^gamma");
  auto* l = app->add_option("--lambda", o.lambda, "scaling phi(N) = lambda N^(1-alpha)");
  g->excludes(l);
  app->add_option("--A", o.a, "support radius");
  app->add_option("--mode", o.mode, "level | full | roots")->check(CLI::IsMember({"level", "full", "roots"}));
  app->add_option("--b", o.b, "root order for roots mode (alpha = 1/b)");
  app->add_option("--enum", o.enumeration, "pruned | brute")->check(CLI::IsMember({"pruned", "brute"}));
  app->add_option("--safety", o.safety, "pruning safety factor >= 1");
  app->add_option("--bins", o.bins, "radial bins over [0, A]");
  app->add_option("--res", o.res, "planar resolution R (R x R cells)");
  app->add_option("--out", o.out, "output directory");
  app->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--threads", o.threads, "worker threads (0 = hardware)");
  app->add_flag("--deterministic", o.deterministic, "bit-identical output (timings reported as 0)");
  app->add_option("--seed", o.seed, "random seed for Monte-Carlo properties");
  app->add_option("--N-list", o.n_list, "N values for compare")->delimiter(',');
  app->add_option("--window", o.window, "comparison window r_min,r_max");
  app->add_flag("--corrupt-branch-cut", o.corrupt_branch_cut, "verify with theta in (-pi, pi] (negative control)");
  app->add_option("--manifest", o.manifest, "read parameters from a previous run's manifest.json");
}

void apply_manifest(const CLI::App* app, RunOptions& o) {
  if (o.manifest.empty()) return;
  const auto doc = read_json(o.manifest);
  auto fs_list = fields(o);
  for (const auto& [key, value] : doc.manifest) {
    for (auto& f : fs_list) {
      if (f.key == key && app->count(f.flag) == 0) f.set(value);
    }
  }
}

CorrelationConfig make_config(const RunOptions& o) {
  CorrelationConfig c;
  c.alpha = o.alpha;
  c.grid = GridSpec{parse_basis(o.basis), parse_offset(o.offset)};
  c.n = o.n;
  c.n_prime = o.np;
  c.n_second = o.ns;
  if (o.gamma) {
    c.scaling = ScalingRegime::power_law(*o.gamma);
  } else if (o.lambda) {
    c.scaling = ScalingRegime::proportional(*o.lambda);
  } else {
    throw ValidationError("one of --gamma or --lambda is required");
  }
  c.support_radius = o.a;
  c.mode = o.mode == "full" ? MeasureMode::full_riemann
                            : (o.mode == "roots" ? MeasureMode::roots_intro : MeasureMode::level_separated);
  c.b = o.b;
  c.enumeration = o.enumeration == "brute" ? Enumeration::brute_force : Enumeration::pruned;
  c.safety = o.safety;
  c.threads = o.threads;
  return c;
}

Manifest base_manifest(const std::string& command, RunOptions& o) {
  Manifest m{{"command", command}};
  for (const auto& f : fields(o)) m.emplace_back(f.key, f.get());
  return m;
}

fs::path prepare_out(const RunOptions& o) {
  const fs::path dir(o.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + o.out + "'");
  return dir;
}

void emit(const fs::path& dir, const std::string& stem, const RunOptions& o, const Manifest& m,
          const Table& t) {
  if (o.format == "json") {
    write_json(dir / (stem + ".json"), m, t);
  } else {
    write_csv(dir / (stem + ".csv"), t);
  }
}

void emit_manifest(const fs::path& dir, const Manifest& m) { write_json(dir / "manifest.json", m, Table{}); }

int cmd_simulate(RunOptions& o) {
  if (o.mode == "roots" && o.ns == 1) o.ns = o.b;
  const auto config = make_config(o);
  validate(config);
  if (o.bins < 1 || o.res < 1) throw ValidationError("--bins and --res must be >= 1");
  const fs::path dir = prepare_out(o);
  const auto s = scaling_values(config);
  const auto cloud = build_measure(config);
  const auto edges = uniform_edges(config.support_radius, o.bins);
  const auto radial = radial_histogram(cloud, edges);
  const auto planar = planar_histogram(cloud, config.support_radius, o.res);

  Manifest m = base_manifest("simulate", o);
  m.emplace_back("phi", format_double(s.phi));
  m.emplace_back("psi", format_double(s.psi));
  m.emplace_back("limit_class", to_string(s.limit));
  m.emplace_back("lambda_limit", format_double(s.lambda));
  m.emplace_back("weight", format_double(cloud.weight));
  m.emplace_back("point_count", std::to_string(cloud.points.size()));
  if (config.enumeration == Enumeration::pruned) m.emplace_back("prune_radius", format_double(prune_radius(config)));
  if (cloud.total_raw_pairs) m.emplace_back("total_raw_pairs", std::to_string(*cloud.total_raw_pairs));

  emit(dir, "cloud", o, m, cloud_table(cloud));
  emit(dir, "radial", o, m, radial_table(radial));
  emit(dir, "planar", o, m, planar_table(planar));
  emit_manifest(dir, m);
  std::cout << "points " << cloud.points.size() << " mass " << format_double(cloud.mass()) << " phi "
            << format_double(s.phi) << " psi " << format_double(s.psi) << " class " << to_string(s.limit)
            << "\n";
  return kOk;
}

int cmd_density(RunOptions& o) {
  const auto config = make_config(o);
  validate(config.scaling);
  if (!(config.support_radius > 0.0)) throw ValidationError("--A must be > 0");
  const fs::path dir = prepare_out(o);
  const auto model = DensityModel::from_scaling(config.alpha, config.grid.basis, config.scaling,
                                                std::max(config.support_radius, 1.0));
  Manifest m = base_manifest("density", o);
  m.emplace_back("limit_class", to_string(model.regime()));
  m.emplace_back("covolume", format_double(model.covolume()));
  if (model.regime() != LimitClass::infinite) m.emplace_back("asymptote", format_double(model.asymptote()));
  if (model.regime() == LimitClass::finite) {
    m.emplace_back("repulsion_radius", format_double(model.repulsion_radius()));
  }
  emit(dir, "density", o, m, density_table(model, config.support_radius, o.bins));
  emit_manifest(dir, m);
  std::cout << "density " << to_string(model.regime()) << " discontinuities "
            << model.discontinuity_radii(config.support_radius).size() << "\n";
  return kOk;
}

int cmd_compare(RunOptions& o) {
  if (o.mode == "roots" && o.ns == 1) o.ns = o.b;
  const auto config = make_config(o);
  validate(config);
  if (o.n_list.empty()) throw ValidationError("--N-list is empty");
  std::optional<RadialWindow> window;
  if (!o.window.empty()) {
    const Complex w = parse_offset(o.window);
    if (!(w.imag() > w.real())) throw ValidationError("--window needs r_min < r_max");
    window = RadialWindow{w.real(), w.imag()};
  }
  const fs::path dir = prepare_out(o);
  auto report = compare_convergence(config, o.n_list, o.bins, window);
  if (o.deterministic) {
    for (auto& row : report.rows) row.seconds = 0.0;
  }
  Manifest m = base_manifest("compare", o);
  m.emplace_back("window_min", format_double(report.window.r_min));
  m.emplace_back("window_max", format_double(report.window.r_max));
  m.emplace_back("slope", format_double(report.slope));
  emit(dir, "comparison", o, m, comparison_table(report));
  emit_manifest(dir, m);
  for (const auto& row : report.rows) {
    std::cout << "N " << row.n << " l1 " << format_double(row.l1) << " sup " << format_double(row.sup) << "\n";
  }
  std::cout << "slope " << format_double(report.slope) << "\n";
  return kOk;
}

int cmd_verify(RunOptions& o, const CLI::App* app) {
  VerifyOptions v;
  v.grid = GridSpec{parse_basis(o.basis), parse_offset(o.offset)};
  v.branch_cut = o.corrupt_branch_cut ? BranchCut::principal : BranchCut::positive_real;
  v.seed = o.seed;
  v.n = app->count("--N") ? o.n : 12;
  v.threads = o.threads;
  const auto results = run_verification(v);
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " " << r.detail << "\n";
  }
  if (app->count("--out")) {
    const fs::path dir = prepare_out(o);
    Manifest m = base_manifest("verify", o);
    emit(dir, "verify", o, m, verification_table(results));
    emit_manifest(dir, m);
  }
  return all_passed(results) ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fracpair: pair correlations of fractional powers of complex grid points"};
  app.require_subcommand(1);
  RunOptions opts;
  auto* simulate = app.add_subcommand("simulate", "build a measure and write cloud and histograms");
  auto* density = app.add_subcommand("density", "sample the limit density");
  auto* compare = app.add_subcommand("compare", "discrepancy to the limit density over several N");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  for (auto* sub : {simulate, density, compare, verify}) add_options(sub, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kValidation;
  }

  try {
    CLI::App* used = app.get_subcommands().front();
    apply_manifest(used, opts);
    if (used == simulate) return cmd_simulate(opts);
    if (used == density) return cmd_density(opts);
    if (used == compare) return cmd_compare(opts);
    return cmd_verify(opts, used);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
