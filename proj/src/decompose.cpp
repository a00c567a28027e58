#include <atomic>
#include <cstdint>
#include <cstdio>
#include <mutex>
#include <thread>

#include "skelsum/search.hpp"

namespace skelsum {

namespace {

std::vector<Face> pick(const FaceTuples& tuples, const std::vector<std::size_t>& tuple) {
  std::vector<Face> faces;
  faces.reserve(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    faces.push_back(tuples.lists[i][tuple[i]]);
  }
  return faces;
}

BarycenterSystem system_for(const DecompositionProblem& problem, std::vector<Face> faces) {
  return assemble_fixed(problem.polytope, std::move(faces), problem.weights, problem.target);
}

Certificate make_certificate(const DecompositionProblem& problem, const BarycenterSystem& system,
                             const LpOptimal& solution, bool order_independent) {
  Certificate cert{problem, system.faces(), system.split(solution.values), {}, order_independent};
  cert.points = system.realize(cert.mu);
  if (!check_certificate(system, cert.mu)) {
    throw InternalError("solver solution failed the certificate check");
  }
  return cert;
}

std::map<int, std::size_t> face_counts(const FaceTuples& tuples, const DecompositionProblem& problem) {
  std::map<int, std::size_t> out;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    out[problem.search_dim(i)] = tuples.lists[i].size();
  }
  return out;
}

Decomposition decompose_sequential(const DecompositionProblem& problem, FaceTuples tuples) {
  Refutation refutation;
  refutation.face_counts = face_counts(tuples, problem);
  while (auto tuple = tuples.stream.next()) {
    auto system = system_for(problem, pick(tuples, *tuple));
    auto outcome = lp_solve(system.program());
    if (auto* opt = std::get_if<LpOptimal>(&outcome)) {
      return make_certificate(problem, system, *opt, false);
    }
    auto& infeasible = std::get<LpInfeasible>(outcome);
    refutation.witnesses.push_back(TupleWitness{std::move(*tuple), std::move(infeasible.farkas)});
    ++refutation.tuple_count;
  }
  return refutation;
}

Decomposition decompose_parallel(const DecompositionProblem& problem, FaceTuples tuples,
                                 unsigned jobs) {
  std::vector<std::vector<std::size_t>> all;
  while (auto tuple = tuples.stream.next()) {
    all.push_back(std::move(*tuple));
  }
  std::vector<std::optional<LpOutcome>> outcomes(all.size());
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> found{false};
  std::mutex winner_mutex;
  std::optional<std::size_t> winner;

  auto worker = [&] {
    for (;;) {
      if (found.load()) {
        return;
      }
      const std::size_t t = cursor.fetch_add(1);
      if (t >= all.size()) {
        return;
      }
      auto system = system_for(problem, pick(tuples, all[t]));
      outcomes[t] = lp_solve(system.program());
      if (std::holds_alternative<LpOptimal>(*outcomes[t])) {
        std::lock_guard lock(winner_mutex);
        if (!winner) {
          winner = t;
        }
        found.store(true);
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned j = 0; j < jobs; ++j) {
    threads.emplace_back(worker);
  }
  for (auto& th : threads) {
    th.join();
  }

  if (winner) {
    auto system = system_for(problem, pick(tuples, all[*winner]));
    return make_certificate(problem, system, std::get<LpOptimal>(*outcomes[*winner]), true);
  }
  Refutation refutation;
  refutation.face_counts = face_counts(tuples, problem);
  refutation.tuple_count = all.size();
  for (std::size_t t = 0; t < all.size(); ++t) {
    refutation.witnesses.push_back(
        TupleWitness{std::move(all[t]), std::move(std::get<LpInfeasible>(*outcomes[t]).farkas)});
  }
  return refutation;
}

}  // namespace

Decomposition decompose(const DecompositionProblem& problem, const SearchOptions& options) {
  validate(problem);
  auto tuples = enumerate_face_tuples(problem);
  if (options.deterministic || options.jobs <= 1) {
    auto result = decompose_sequential(problem, std::move(tuples));
    if (!options.deterministic) {
      if (auto* cert = std::get_if<Certificate>(&result)) {
        cert->order_independent = true;
      }
    }
    return result;
  }
  return decompose_parallel(problem, std::move(tuples), options.jobs);
}

std::string Refutation::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& w : witnesses) {
    for (auto i : w.tuple) {
      feed(std::to_string(i));
      feed(",");
    }
    feed(":");
    for (const auto& y : w.farkas) {
      feed(y.str());
      feed(",");
    }
    feed(";");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

bool validate_certificate(const Certificate& certificate) {
  const auto& problem = certificate.problem;
  if (certificate.faces.size() != problem.size() || certificate.points.size() != problem.size()) {
    return false;
  }
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (!is_face(problem.polytope, certificate.faces[i].vertices)) {
      return false;
    }
    const auto verts = face_vertices(problem.polytope, certificate.faces[i]);
    if (affine_dimension(verts) > problem.dims[i]) {
      return false;
    }
  }
  const auto system =
      assemble_fixed(problem.polytope, certificate.faces, problem.weights, problem.target);
  if (!check_certificate(system, certificate.mu)) {
    return false;
  }
  return system.realize(certificate.mu) == certificate.points;
}

bool validate_refutation(const DecompositionProblem& problem, const Refutation& refutation) {
  auto tuples = enumerate_face_tuples(problem);
  if (refutation.tuple_count != tuples.stream.count() ||
      refutation.witnesses.size() != refutation.tuple_count) {
    return false;
  }
  std::size_t t = 0;
  while (auto tuple = tuples.stream.next()) {
    const auto& w = refutation.witnesses[t++];
    if (w.tuple != *tuple) {
      return false;
    }
    const auto system = system_for(problem, pick(tuples, *tuple));
    if (!is_farkas_witness(system.program(), w.farkas)) {
      return false;
    }
  }
  return t == refutation.tuple_count;
}

}  // namespace skelsum
