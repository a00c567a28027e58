// skelsum: weighted barycenter decompositions on polytope skeleta.
//
//   skelsum decompose FILE [--out PATH] [--jobs N] [--no-deterministic]
//   skelsum probe FILE [--index I] [--out PATH]
//   skelsum instance NAME [--n --k --d --r --s --t] [--out PATH]
//   skelsum check PROBLEM REPORT
//   skelsum verify-paper [--scale smoke|default]
//
// Exit codes: 0 certificate (or pass), 1 refutation (or fail), 2 input error.

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skelsum/instances.hpp"
#include "skelsum/acceptance.hpp"
#include "skelsum/problem_io.hpp"

namespace {

using namespace skelsum;

constexpr int kCertificate = 0;
constexpr int kRefutation = 1;
constexpr int kInputError = 2;

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("skelsum");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* level = std::getenv("SKELSUM_LOG");
  spdlog::set_level(level != nullptr ? spdlog::level::from_str(level) : spdlog::level::warn);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) {
    throw InputError("cannot write " + out);
  }
  f << text;
  spdlog::info("wrote {}", out);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct DecomposeArgs {
  std::string file;
  std::string out;
  unsigned jobs = 1;
  bool deterministic = true;
};

int cmd_decompose(const DecomposeArgs& a) {
  const auto file = parse_problem(slurp(a.file));
  if (file.mode != Mode::decompose) {
    throw InputError("problem file is in probe mode; use the probe command");
  }
  const auto problem = to_problem(file);
  spdlog::info("polytope: {} vertices, dimension {}", problem.polytope.vertices().size(),
               problem.polytope.intrinsic_dim());
  const auto start = std::chrono::steady_clock::now();
  const auto result = decompose(problem, SearchOptions{a.deterministic, a.jobs});
  const RunInfo info{seconds_since(start), a.deterministic};
  emit(write_report(result, info), a.out);
  if (const auto* ref = std::get_if<Refutation>(&result)) {
    spdlog::info("refuted over {} tuples ({})", ref->tuple_count, ref->digest());
    return kRefutation;
  }
  return kCertificate;
}

struct ProbeArgs {
  std::string file;
  std::string out;
  int index = -1;
};

int cmd_probe(const ProbeArgs& a) {
  const auto file = parse_problem(slurp(a.file));
  std::size_t index = file.probe_index;
  if (a.index >= 0) {
    index = static_cast<std::size_t>(a.index);
  } else if (file.mode != Mode::probe) {
    throw InputError("decompose-mode file needs --index");
  }
  const auto polytope = canonicalize(file.vertices);
  const auto start = std::chrono::steady_clock::now();
  const auto result = max_weight_probe(polytope, file.target, file.dims, index);
  emit(write_probe_report(result, index, RunInfo{seconds_since(start), true}), a.out);
  return result ? kCertificate : kRefutation;
}

struct InstanceArgs {
  std::string name;
  std::string out;
  int n = 2;
  int k = 1;
  int d = 1;
  int r = 1;
  int s = 1;
  int t = 1;
};

ProblemFile build_instance(const InstanceArgs& a) {
  if (a.name == "lemma24") {
    return problem_file(lemma_instance(a.d, a.n));
  }
  if (a.name == "propA") {
    return problem_file(propA_instance(a.n, a.k, a.d));
  }
  if (a.name == "propB") {
    return problem_file(propB_instance(a.n, a.k, a.r));
  }
  if (a.name == "propB-relaxed") {
    return problem_file(propB_relaxed_instance(a.n, a.k, a.r));
  }
  if (a.name == "lift") {
    // Delta^{nk+r} at its barycenter, lifted; every position capped at k+1.
    const auto p = standard_simplex(a.n * a.k + a.r);
    const auto lifted = lift_instance(p, a.n, a.k, a.r);
    const auto target = a.r == 0 ? vertex_barycenter(p) : concat(vertex_barycenter(p), lifted.simplex_target);
    return problem_file(
        balanced_problem(lifted.polytope, target, std::vector<int>(static_cast<std::size_t>(a.n), a.k + 1)));
  }
  if (a.name == "weight-family") {
    const auto w = weight_family(a.s, a.t, a.k);
    const auto p = standard_simplex(static_cast<int>(w.size()));
    return problem_file(DecompositionProblem{p, vertex_barycenter(p), std::vector<int>(w.size(), 1), w.entries()});
  }
  if (a.name == "bound") {
    const auto p = standard_simplex(a.n * a.k);
    auto file = problem_file(
        balanced_problem(p, vertex_barycenter(p), std::vector<int>(static_cast<std::size_t>(a.n), a.k)));
    file.mode = Mode::probe;
    file.probe_index = 0;
    return file;
  }
  throw InputError("unknown instance '" + a.name +
                   "' (expected lemma24, propA, propB, propB-relaxed, lift, weight-family, bound)");
}

int cmd_check(const std::string& problem_path, const std::string& report_path) {
  const auto file = parse_problem(slurp(problem_path));
  const auto report = slurp(report_path);
  const bool ok = revalidate_report(file, report);
  std::cout << report_outcome(report) << (ok ? " valid\n" : " INVALID\n");
  return ok ? 0 : 1;
}

int cmd_verify_paper(const std::string& scale) {
  std::cout << csv_header() << '\n';
  const auto results = run_acceptance_checks(scale == "smoke" ? Scale::smoke : Scale::full, [](const CheckResult& r) {
    std::cout << csv_row(r) << std::endl;
    spdlog::info("criterion {} took {:.3f} s", r.id, r.seconds);
  });
  int failures = 0;
  for (const auto& r : results) {
    if (!r.passed) {
      std::cerr << "failed: " << r.id << ' ' << r.name << '\n';
      ++failures;
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Weighted barycenter decompositions on polytope skeleta"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* decompose_cmd = app.add_subcommand("decompose", "Search for a certificate or a refutation");
  decompose_cmd->add_option("file", dec.file, "Problem file (JSON)")->required();
  decompose_cmd->add_option("--out", dec.out, "Report path (default stdout)");
  decompose_cmd->add_option("--jobs", dec.jobs, "Worker threads in non-deterministic mode")->check(CLI::PositiveNumber);
  decompose_cmd->add_flag("--deterministic,!--no-deterministic", dec.deterministic,
                          "First feasible tuple in scan order (default on)");

  ProbeArgs pr;
  auto* probe_cmd = app.add_subcommand("probe", "Largest feasible weight at one position");
  probe_cmd->add_option("file", pr.file, "Problem file (JSON)")->required();
  probe_cmd->add_option("--index", pr.index, "Probe position (default from file)");
  probe_cmd->add_option("--out", pr.out, "Report path (default stdout)");

  InstanceArgs inst;
  auto* instance_cmd = app.add_subcommand("instance", "Export a named construction as a problem file");
  instance_cmd->add_option("name", inst.name, "lemma24, propA, propB, propB-relaxed, lift, weight-family, bound")
      ->required();
  for (auto [flag, target] : {std::pair{"--n", &inst.n}, std::pair{"--k", &inst.k}, std::pair{"--d", &inst.d},
                              std::pair{"--r", &inst.r}, std::pair{"--s", &inst.s}, std::pair{"--t", &inst.t}}) {
    instance_cmd->add_option(flag, *target);
  }
  instance_cmd->add_option("--out", inst.out, "Output path (default stdout)");

  std::string check_problem;
  std::string check_report;
  auto* check_cmd = app.add_subcommand("check", "Re-validate a report against its problem without searching");
  check_cmd->add_option("problem", check_problem)->required();
  check_cmd->add_option("report", check_report)->required();

  std::string scale = "default";
  auto* verify_cmd = app.add_subcommand("verify-paper", "Run every acceptance check and print a CSV summary");
  verify_cmd->add_option("--scale", scale)->check(CLI::IsMember({"smoke", "default"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*decompose_cmd) {
      return cmd_decompose(dec);
    }
    if (*probe_cmd) {
      return cmd_probe(pr);
    }
    if (*instance_cmd) {
      emit(write_problem(build_instance(inst)), inst.out);
      return 0;
    }
    if (*check_cmd) {
      return cmd_check(check_problem, check_report);
    }
    return cmd_verify_paper(scale);
  } catch (const InputError& e) {
    spdlog::error("{}", e.what());
  } catch (const PreconditionError& e) {
    spdlog::error("precondition failed: {}", e.what());
  } catch (const std::invalid_argument& e) {
    spdlog::error("invalid argument: {}", e.what());
  } catch (const std::exception& e) {
    spdlog::critical("internal error: {}", e.what());
    return 3;
  }
  return kInputError;
}
