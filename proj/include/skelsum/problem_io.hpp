#pragma once

// JSON problem and report files. Rationals travel as strings ("3/7").

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "skelsum/search.hpp"

namespace skelsum {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Malformed JSON, a non-rational token, or a shape error in a file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { decompose, probe };

struct ProblemFile {
  std::size_t ambient_dim = 0;
  std::vector<Point> vertices;
  Point target;
  std::vector<int> dims;
  std::vector<Rational> weights;  // may be empty in probe mode
  Mode mode = Mode::decompose;
  std::size_t probe_index = 0;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

ProblemFile parse_problem(std::string_view text);
std::string write_problem(const ProblemFile& file);

/// Serializes a problem; vertices are the polytope's canonical vertex list.
ProblemFile problem_file(const DecompositionProblem& problem);
/// Canonicalizes the vertices and builds the problem (decompose mode only).
DecompositionProblem to_problem(const ProblemFile& file);

struct RunInfo {
  double seconds = 0;
  bool deterministic = true;
};

std::string write_report(const Decomposition& result, const RunInfo& info);
/// probe_index is recorded so the report re-validates on its own.
std::string write_probe_report(const std::optional<ProbeResult>& result, std::size_t probe_index,
                               const RunInfo& info);

/// Outcome name from a report ("certificate", "refutation" or "probe").
std::string report_outcome(std::string_view report);

/// Re-checks a report against its problem by arithmetic only: certificates
/// via the barycenter system, refutations via every Farkas witness, probe
/// reports via the weights realized on the recorded tuple.
bool revalidate_report(const ProblemFile& problem, std::string_view report);

}  // namespace skelsum
