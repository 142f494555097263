#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "cohomlab/errors.hpp"
#include "cohomlab/io.hpp"
#include "cohomlab/suites.hpp"

namespace {

using namespace cohomlab;

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct SpaceArgs {
  std::string space_file;
  std::string edges_file;
  std::string family;
  std::int64_t size = -1;
  std::int64_t dim = -1;
  std::int64_t rank = -1;
  std::int64_t radius = -1;
  std::int64_t n = -1;
  std::int64_t k = -1;
  std::uint64_t seed = 0;
};

struct LoadedSpace {
  SpaceRef space;
  std::string source;
  std::string hash;
};

void add_space_options(CLI::App* cmd, SpaceArgs& a, bool allow_file) {
  if (allow_file) {
    cmd->add_option("--space", a.space_file, "Space JSON file");
    cmd->add_option("--edges", a.edges_file, "Edge-list text file, one \"u v\" per line");
  }
  cmd->add_option("--family", a.family,
                  "Generator: cycle, path, torus, free_ball, random_regular, complete");
  cmd->add_option("--size", a.size, "cycle/path/complete size, torus side length");
  cmd->add_option("--dim", a.dim, "torus dimension (default 2)");
  cmd->add_option("--rank", a.rank, "free group rank");
  cmd->add_option("--radius", a.radius, "free group ball radius");
  cmd->add_option("--n", a.n, "random_regular vertex count");
  cmd->add_option("--k", a.k, "random_regular degree");
  cmd->add_option("--seed", a.seed, "seed for randomized generators and audits");
}

FamilySpec family_spec(const SpaceArgs& a) {
  FamilySpec spec{a.family, {}, a.seed};
  auto put = [&](const char* key, std::int64_t v) {
    if (v >= 0) spec.params[key] = v;
  };
  put("size", a.size);
  put("dim", a.dim);
  put("rank", a.rank);
  put("radius", a.radius);
  put("n", a.n);
  put("k", a.k);
  return spec;
}

LoadedSpace load_space(const SpaceArgs& a) {
  const int sources = !a.space_file.empty() + !a.edges_file.empty() + !a.family.empty();
  if (sources != 1) throw Error("give exactly one of --space, --edges or --family");
  if (!a.space_file.empty()) {
    return {share(read_space(a.space_file)), a.space_file, file_hash(a.space_file)};
  }
  if (!a.edges_file.empty()) {
    std::istringstream in(read_text(a.edges_file));
    auto space = read_edge_list(in);
    return {share(std::move(space)), a.edges_file, file_hash(a.edges_file)};
  }
  auto space = generate_family(family_spec(a));
  const std::string text = dump_json(space_to_json(space));
  return {share(std::move(space)), "generated", git_blob_hash(text)};
}

Json space_json_summary(const LoadedSpace& s) {
  Json j;
  j["source"] = s.source;
  j["hash"] = s.hash;
  j["kind"] = s.space->provenance().kind;
  j["params"] = Json::object();
  for (const auto& [k, v] : s.space->provenance().params) j["params"][k] = v;
  j["seed"] = s.space->provenance().seed;
  j["n"] = s.space->size();
  j["diameter"] = s.space->diameter();
  return j;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text(path, text);
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw Error("cannot parse '" + item + "' as a number");
    out.push_back(v);
  }
  if (out.empty()) throw Error("empty number list '" + text + "'");
  return out;
}

int cmd_gen(const SpaceArgs& a, const std::string& out) {
  if (a.family.empty()) throw Error("gen needs --family");
  const auto space = generate_family(family_spec(a));
  const std::string text = dump_json(space_to_json(space));
  emit(out, text);
  std::ostream& log = (out.empty() || out == "-") ? std::cerr : std::cout;
  const auto deg = space.degrees();
  log << "n=" << space.size() << " diameter=" << space.diameter();
  if (!deg.empty() && space.edges()) {
    const auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
    double mean = 0;
    for (const auto d : deg) mean += static_cast<double>(d);
    mean /= static_cast<double>(deg.size());
    log << " degree_min=" << *lo << " degree_max=" << *hi << " degree_mean=" << mean;
  }
  if (space.provenance().retries > 0) log << " retries=" << space.provenance().retries;
  log << " hash=" << git_blob_hash(text) << "\n";
  return 0;
}

struct ProfileArgs {
  int smax = 0;
  std::string schedule;
  std::string radii = "1";
  std::string builder = "ball";
  std::string out;
  std::string report;
  unsigned workers = 1;
};

int cmd_profile(const SpaceArgs& a, const ProfileArgs& p) {
  const LoadedSpace s = load_space(a);
  std::vector<double> schedule;
  if (!p.schedule.empty()) {
    schedule = parse_list(p.schedule);
  } else {
    if (p.smax < 1) throw Error("profile needs --smax >= 1 or --schedule");
    for (int i = 1; i <= p.smax; ++i) schedule.push_back(i);
  }
  const std::vector<double> radii = parse_list(p.radii);
  FamilyBuilder builder;
  if (p.builder == "ball") {
    builder = ball_average;
  } else if (p.builder == "walk") {
    builder = lazy_random_walk;
  } else {
    throw Error("unknown family builder '" + p.builder + "' (ball, walk)");
  }
  const ProfileTable table = variation_profile(s.space, schedule, radii, builder, p.workers);
  emit(p.out, profile_csv(table));

  Json verdicts = Json::array();
  DecayThresholds thresholds;
  thresholds.against_axis = true;
  if (schedule.size() >= 2) {
    for (const double r : radii) {
      std::vector<double> values;
      for (const auto& row : table.rows) {
        if (row.R == r) values.push_back(row.nu);
      }
      DecayDiagnostic d = classify_decay(values, schedule, thresholds);
      d.radius = r;
      verdicts.push_back(to_json(d));
    }
  }
  Json report;
  report["command"] = "profile";
  report["config"] = {{"space", space_json_summary(s)},
                      {"builder", p.builder},
                      {"schedule", schedule},
                      {"R", radii},
                      {"workers", p.workers}};
  report["verdicts"] = std::move(verdicts);
  if (!p.report.empty()) {
    write_text(p.report, dump_json(report));
  } else if (!p.out.empty() && p.out != "-") {
    std::cout << dump_json(report);
  }
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> suites;
  std::string radii = "1,2";
  std::size_t budget = kDefaultBudget;
  std::size_t samples = kDefaultSamples;
  double tol = kIdentityTolerance;
  std::size_t count = 0;
  unsigned workers = 1;
  std::string out;
};

int cmd_verify(const SpaceArgs& a, const VerifyArgs& v) {
  const LoadedSpace s = load_space(a);
  VerifyConfig config;
  config.space = s.space;
  config.seed = a.seed;
  config.radii = parse_list(v.radii);
  config.options.budget = v.budget;
  config.options.samples = v.samples;
  config.options.seed = a.seed;
  config.options.workers = v.workers;
  config.tolerance = v.tol;
  config.count = v.count;

  std::vector<std::string> suites = v.suites;
  if (suites.empty() || std::find(suites.begin(), suites.end(), "all") != suites.end()) {
    suites = suite_names();
  }
  for (const auto& name : suites) {
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
      throw Error("unknown suite '" + name + "'");
    }
  }

  Json results = Json::array();
  bool all = true;
  for (const auto& name : suites) {
    const SuiteReport r = run_suite(name, config);
    all = all && r.passed();
    std::cerr << (r.passed() ? "PASS " : "FAIL ") << name << "\n";
    results.push_back(to_json(r));
  }
  Json report;
  report["command"] = "verify";
  report["config"] = {{"space", space_json_summary(s)}, {"seed", a.seed},
                      {"suites", suites},               {"R", config.radii},
                      {"budget", v.budget},             {"samples", v.samples},
                      {"tol", v.tol},                   {"count", v.count},
                      {"workers", v.workers}};
  report["passed"] = all;
  report["suites"] = std::move(results);
  emit(v.out, dump_json(report));
  return all ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohomlab: controlled-support cochain laboratory for finite metric spaces"};
  app.require_subcommand(1);

  SpaceArgs gen_space;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a space file");
  add_space_options(gen, gen_space, false);
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  SpaceArgs prof_space;
  ProfileArgs prof;
  auto* profile = app.add_subcommand("profile", "Variation profile of a Reiter family");
  add_space_options(profile, prof_space, true);
  profile->add_option("--smax", prof.smax, "Schedule S = 1..smax");
  profile->add_option("--schedule", prof.schedule, "Comma-separated S values");
  profile->add_option("--r", prof.radii, "Comma-separated radii R (default 1)");
  profile->add_option("--family-builder", prof.builder, "ball (default) or walk");
  profile->add_option("--out", prof.out, "CSV output path (default stdout)");
  profile->add_option("--report", prof.report, "Verdict JSON output path");
  profile->add_option("--workers", prof.workers, "Worker threads");

  SpaceArgs ver_space;
  ver_space.seed = 42;
  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  add_space_options(verify, ver_space, true);
  verify->add_option("--suite", ver.suites, "Suite name (repeatable; default all)");
  verify->add_option("--r", ver.radii, "Comma-separated radii R (default 1,2)");
  verify->add_option("--budget", ver.budget, "Max tuples for exhaustive audits");
  verify->add_option("--samples", ver.samples, "Sample size beyond the budget");
  verify->add_option("--tol", ver.tol, "Identity tolerance");
  verify->add_option("--count", ver.count, "Random instances per suite (0: suite default)");
  verify->add_option("--workers", ver.workers, "Worker threads");
  verify->add_option("--out,--report", ver.out, "Report JSON path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_space, gen_out);
    if (*profile) return cmd_profile(prof_space, prof);
    if (*verify) return cmd_verify(ver_space, ver);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
