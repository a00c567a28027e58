#include "skelsum/acceptance.hpp"

#include <chrono>
#include <numeric>
#include <random>
#include <sstream>

#include "reference_lp.hpp"
#include "skelsum/instances.hpp"

namespace skelsum {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  double each = 0;   // 0: no per-run limit
  double total = 0;  // 0: no total limit

  [[nodiscard]] std::string str() const {
    std::ostringstream os;
    if (each > 0) {
      os << "each < " << each << " s";
    }
    if (total > 0) {
      os << (each > 0 ? ", " : "") << "total < " << total << " s";
    }
    return os.str();
  }
};

// Collects per-run timings and the verdict of one criterion.
class Run {
 public:
  template <class F>
  auto timed(F&& f) {
    const auto start = Clock::now();
    if constexpr (std::is_void_v<decltype(f())>) {
      f();
      record(start);
    } else {
      auto out = f();
      record(start);
      return out;
    }
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      if (!failures_.empty()) {
        failures_ += "; ";
      }
      failures_ += what;
    }
  }

  [[nodiscard]] double total() const { return total_; }
  [[nodiscard]] double slowest() const { return slowest_; }
  [[nodiscard]] bool ok() const { return ok_; }
  [[nodiscard]] const std::string& failures() const { return failures_; }

 private:
  void record(Clock::time_point start) {
    const double s = std::chrono::duration<double>(Clock::now() - start).count();
    total_ += s;
    slowest_ = std::max(slowest_, s);
  }

  double total_ = 0;
  double slowest_ = 0;
  bool ok_ = true;
  std::string failures_;
};

Point random_point(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < dim; ++i) {
    const int q = den(rng);
    std::uniform_int_distribution<int> num(-3 * q, 3 * q);
    c.emplace_back(num(rng), q);
  }
  return Point(std::move(c));
}

std::vector<Rational> positive_weights(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(1, 6);
  std::vector<int> raw(n);
  long total = 0;
  for (auto& r : raw) {
    total += (r = d(rng));
  }
  std::vector<Rational> out;
  for (int r : raw) {
    out.emplace_back(r, total);
  }
  return out;
}

Polytope random_3_polytope(std::mt19937_64& rng) {
  for (;;) {
    std::vector<Point> pts;
    for (int i = 0; i < 6; ++i) {
      pts.push_back(random_point(rng, 3));
    }
    auto p = canonicalize(pts);
    if (p.intrinsic_dim() == 3) {
      return p;
    }
  }
}

Point combination(const Polytope& p, const std::vector<std::size_t>& verts, const std::vector<Rational>& w) {
  Point x = Point::zero(p.ambient_dim());
  for (std::size_t j = 0; j < verts.size(); ++j) {
    x += w[j] * p.vertex(verts[j]);
  }
  return x;
}

Point interior_point(std::mt19937_64& rng, const Polytope& p) {
  std::vector<std::size_t> all(p.vertices().size());
  std::iota(all.begin(), all.end(), 0);
  return combination(p, all, positive_weights(rng, all.size()));
}

int carrier_dim(const Polytope& p, const Point& x) {
  return affine_dimension(face_vertices(p, minimal_face(p, x)));
}

DecompositionProblem simplex_barycenter_problem(int n, int k) {
  auto p = standard_simplex(n * k);
  auto target = vertex_barycenter(p);
  return balanced_problem(std::move(p), std::move(target), std::vector<int>(static_cast<std::size_t>(n), k));
}

std::string nk(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

// Criterion bodies fill `run` and return (expected, observed).
std::pair<std::string, std::string> skeleton_existence(Run& run, Scale scale) {
  std::vector<std::pair<int, int>> cases{{2, 1}};
  if (scale == Scale::full) {
    cases = {{2, 1}, {3, 1}, {4, 1}, {2, 2}, {3, 2}};
  }
  std::string observed;
  for (const auto& [n, k] : cases) {
    const auto problem = simplex_barycenter_problem(n, k);
    const auto tuples = enumerate_face_tuples(problem);
    if (n == 3 && k == 2) {
      run.expect(tuples.lists[0].size() == 35, "(3,2) face count");
      run.expect(tuples.stream.count() <= 7770, "(3,2) tuple count");
    }
    const auto out = run.timed([&] { return decompose(problem); });
    const auto* cert = std::get_if<Certificate>(&out);
    const bool ok = cert != nullptr && validate_certificate(*cert);
    run.expect(ok, nk(n, k) + " certificate");
    observed += nk(n, k) + (ok ? " cert " : " FAIL ");
  }
  return {"validating certificate for every (n,k)", observed};
}

std::pair<std::string, std::string> lifted_mixed_faces(Run& run, Scale scale) {
  std::mt19937_64 rng(20250101);
  const int count = scale == Scale::full ? 20 : 2;
  int good = 0;
  for (int i = 0; i < count; ++i) {
    const auto p = random_3_polytope(rng);
    const auto target = interior_point(rng, p);
    const auto cert = run.timed([&] { return lifted_decompose(p, target, 2, 1); });
    int edges = 0;
    bool capped = true;
    for (const auto& x : cert.points) {
      const int d = carrier_dim(p, x);
      edges += d <= 1 ? 1 : 0;
      capped = capped && d <= 2;
    }
    const bool ok = validate_certificate(cert) && edges >= 1 && capped &&
                    Rational(1, 2) * (cert.points[0] + cert.points[1]) == target;
    run.expect(ok, "polytope " + std::to_string(i));
    good += ok ? 1 : 0;
  }
  return {std::to_string(count) + "/" + std::to_string(count) + " valid",
          std::to_string(good) + "/" + std::to_string(count) + " valid"};
}

std::pair<std::string, std::string> refuted_family(Run& run, const std::vector<DecompositionProblem>& problems,
                                                    const std::vector<std::string>& labels) {
  std::string observed;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto out = run.timed([&] { return decompose(problems[i]); });
    const auto* ref = std::get_if<Refutation>(&out);
    const bool ok = ref != nullptr && validate_refutation(problems[i], *ref);
    run.expect(ok, labels[i]);
    observed += labels[i] + (ok ? " refuted(" + std::to_string(ref->tuple_count) + ") " : " FAIL ");
  }
  return {"refutation with valid witnesses", observed};
}

std::pair<std::string, std::string> low_face_refutation(Run& run, Scale scale) {
  std::vector<std::tuple<int, int, int>> cases{{2, 1, 2}};
  if (scale == Scale::full) {
    cases = {{2, 1, 2}, {3, 1, 3}, {2, 2, 4}};
  }
  std::vector<DecompositionProblem> problems;
  std::vector<std::string> labels;
  for (const auto& [n, k, d] : cases) {
    problems.push_back(propA_instance(n, k, d));
    labels.push_back("(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + ")");
  }
  return refuted_family(run, problems, labels);
}

std::pair<std::string, std::string> vertex_heavy_refutation(Run& run, Scale scale) {
  std::vector<std::pair<int, int>> cases{{1, 2}};
  if (scale == Scale::full) {
    cases = {{1, 2}, {1, 3}, {2, 3}, {3, 4}};
  }
  std::vector<DecompositionProblem> problems;
  std::vector<std::string> labels;
  for (const auto& [d, n] : cases) {
    problems.push_back(lemma_instance(d, n));
    labels.push_back("d=" + std::to_string(d) + ",n=" + std::to_string(n));
  }
  return refuted_family(run, problems, labels);
}

std::pair<std::string, std::string> product_tightness(Run& run, Scale) {
  const auto strict = propB_instance(2, 1, 1);
  const auto relaxed = propB_relaxed_instance(2, 1, 1);
  const auto a = run.timed([&] { return decompose(strict); });
  const auto b = run.timed([&] { return decompose(relaxed); });
  const bool refuted = std::holds_alternative<Refutation>(a) &&
                       validate_refutation(strict, std::get<Refutation>(a));
  const bool solved = std::holds_alternative<Certificate>(b) &&
                      validate_certificate(std::get<Certificate>(b));
  run.expect(refuted, "dims (1,1) refutation");
  run.expect(solved, "dims (1,2) certificate");
  return {"(1,1) refuted, (1,2) certificate",
          std::string(refuted ? "(1,1) refuted" : "(1,1) FAIL") + ", " +
              (solved ? "(1,2) certificate" : "(1,2) FAIL")};
}

std::pair<std::string, std::string> bound_tightness(Run& run, Scale scale) {
  std::vector<std::pair<int, int>> cases{{2, 1}};
  if (scale == Scale::full) {
    cases = {{2, 1}, {3, 1}, {2, 2}};
  }
  std::string expected;
  std::string observed;
  for (const auto& [n, k] : cases) {
    const auto p = standard_simplex(n * k);
    const auto probe = run.timed([&] {
      return max_weight_probe(p, vertex_barycenter(p), std::vector<int>(static_cast<std::size_t>(n), k), 0);
    });
    const auto want = coeff_bound(n, k);
    const bool ok = probe && probe->value == want;
    run.expect(ok, nk(n, k));
    expected += nk(n, k) + "=" + want.str() + " ";
    observed += nk(n, k) + "=" + (probe ? probe->value.str() : "none") + " ";
  }
  bool all = true;
  run.timed([&] {
    for (int n = 2; n <= 5; ++n) {
      for (int k = 1; k <= 5; ++k) {
        all = all && bound_certificate(n, k).validate();
      }
    }
  });
  run.expect(all, "bound certificates");
  return {expected + "; bound data valid", observed + (all ? "; bound data valid" : "; bound data FAIL")};
}

std::pair<std::string, std::string> polytope_dependence(Run& run, Scale) {
  struct Case {
    std::string label;
    Polytope p;
    Point target;
    Rational want;
  };
  auto square = canonicalize(std::vector<Point>{{Rational(0), Rational(0)},
                                                {Rational(1), Rational(0)},
                                                {Rational(0), Rational(1)},
                                                {Rational(1), Rational(1)}});
  auto tri = standard_simplex(2);
  auto tri_center = vertex_barycenter(tri);
  std::vector<Case> cases{{"square", std::move(square), Point{Rational(1, 2), Rational(1, 2)}, Rational(1, 2)},
                          {"octagon", rational_circle_polygon(8, true), Point::zero(2), Rational(1, 2)},
                          {"triangle", std::move(tri), std::move(tri_center), Rational(2, 3)}};
  std::string expected;
  std::string observed;
  for (const auto& c : cases) {
    const auto probe = run.timed([&] { return max_weight_probe(c.p, c.target, {1, 1}, 0); });
    run.expect(probe && probe->value == c.want, c.label);
    expected += c.label + "=" + c.want.str() + " ";
    observed += c.label + "=" + (probe ? probe->value.str() : "none") + " ";
  }
  return {expected, observed};
}

std::pair<std::string, std::string> edge_split(Run& run, Scale scale) {
  std::mt19937_64 rng(7);
  std::vector<std::pair<Polytope, Point>> cases;
  auto tet = standard_simplex(3);
  auto center = vertex_barycenter(tet);
  cases.emplace_back(std::move(tet), std::move(center));
  const int randoms = scale == Scale::full ? 5 : 0;
  for (int i = 0; i < randoms; ++i) {
    auto p = random_3_polytope(rng);
    auto x = interior_point(rng, p);
    cases.emplace_back(std::move(p), std::move(x));
  }
  const auto weights = weight_family(1, 1, 1).entries();
  int good = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [p, x] = cases[i];
    const auto cert = run.timed([&] { return edge_split_certificate(p, x, 1, 1, 1); });
    bool ok = validate_certificate(cert) && cert.problem.weights == weights;
    for (const auto& y : cert.points) {
      ok = ok && carrier_dim(p, y) <= 1;
    }
    run.expect(ok, i == 0 ? "simplex" : "polytope " + std::to_string(i));
    good += ok ? 1 : 0;
  }
  const auto n = std::to_string(cases.size());
  return {n + "/" + n + " edge certificates", std::to_string(good) + "/" + n + " edge certificates"};
}

std::pair<std::string, std::string> schedule(Run& run, Scale) {
  const WeightVector skew({Rational(2, 3), Rational(1, 3)});
  const auto k = balanced_limit_schedule(skew);
  run.expect(k == std::variant<Balanced, int>(2), "schedule value");

  auto problem = simplex_barycenter_problem(2, 2);
  problem.weights = skew.entries();
  const auto out = run.timed([&] { return decompose(problem); });
  const auto* ref = std::get_if<Refutation>(&out);
  const bool refuted = ref != nullptr && ref->tuple_count == 100 && validate_refutation(problem, *ref);
  run.expect(refuted, "exhaustive refutation");

  const bool balanced =
      std::holds_alternative<Balanced>(balanced_limit_schedule(WeightVector({Rational(1, 2), Rational(1, 2)}))) &&
      std::holds_alternative<Balanced>(
          balanced_limit_schedule(WeightVector(std::vector<Rational>(3, Rational(1, 3)))));
  run.expect(balanced, "balanced vectors");
  const std::string ks = std::holds_alternative<int>(k) ? std::to_string(std::get<int>(k)) : "balanced";
  return {"k=2, refuted over 100 tuples, balanced",
          "k=" + ks + ", " + (refuted ? "refuted over 100 tuples" : "FAIL") + ", " +
              (balanced ? "balanced" : "FAIL")};
}

std::pair<std::string, std::string> solver_trust(Run& run, Scale scale) {
  std::mt19937_64 rng(2718);
  const int lps = scale == Scale::full ? 50 : 10;
  const int instances = scale == Scale::full ? 100 : 10;

  int agree = 0;
  run.timed([&] {
    std::uniform_int_distribution<int> vars(1, 6);
    std::uniform_int_distribution<int> rows(1, 4);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int t = 0; t < lps; ++t) {
      LinearProgram lp;
      lp.num_vars = static_cast<std::size_t>(vars(rng));
      const int m = rows(rng);
      for (int i = 0; i < m; ++i) {
        std::vector<Rational> row;
        for (std::size_t j = 0; j < lp.num_vars; ++j) {
          row.emplace_back(entry(rng));
        }
        lp.add_row(std::move(row), entry(rng));
      }
      for (std::size_t j = 0; j < lp.num_vars; ++j) {
        lp.objective.emplace_back(entry(rng));
      }
      const auto ref = detail::reference_lp(lp);
      const auto out = lp_solve(lp);
      bool ok = false;
      switch (ref.verdict) {
        case detail::ReferenceVerdict::optimal:
          ok = std::holds_alternative<LpOptimal>(out) && std::get<LpOptimal>(out).objective == ref.value;
          break;
        case detail::ReferenceVerdict::infeasible:
          ok = std::holds_alternative<LpInfeasible>(out) &&
               is_farkas_witness(lp, std::get<LpInfeasible>(out).farkas);
          break;
        case detail::ReferenceVerdict::unbounded:
          ok = std::holds_alternative<LpUnbounded>(out) && is_improving_ray(lp, std::get<LpUnbounded>(out).ray);
          break;
      }
      agree += ok ? 1 : 0;
    }
  });
  run.expect(agree == lps, "LP agreement");

  std::vector<Polytope> pool{standard_simplex(2), standard_simplex(3),
                             product(standard_simplex(1), standard_simplex(2))};
  pool.push_back(random_3_polytope(rng));
  pool.push_back(random_3_polytope(rng));
  int solved = 0;
  run.timed([&] {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> size(1, 3);
    for (int t = 0; t < instances; ++t) {
      const auto& p = pool[pick(rng)];
      const std::size_t n = size(rng);
      DecompositionProblem problem{p, Point::zero(p.ambient_dim()), {}, positive_weights(rng, n)};
      std::uniform_int_distribution<int> dim(0, p.intrinsic_dim());
      for (std::size_t i = 0; i < n; ++i) {
        const int k = dim(rng);
        const auto faces = faces_of_dim(p, k);
        std::uniform_int_distribution<std::size_t> f(0, faces.size() - 1);
        const auto& face = faces[f(rng)];
        const auto x = combination(p, face.vertices, positive_weights(rng, face.vertices.size()));
        problem.dims.push_back(k);
        problem.target += problem.weights[i] * x;
      }
      const auto out = decompose(problem);
      solved += std::holds_alternative<Certificate>(out) && validate_certificate(std::get<Certificate>(out)) ? 1 : 0;
    }
  });
  run.expect(solved == instances, "completeness");
  return {std::to_string(lps) + "/" + std::to_string(lps) + " LPs agree, " + std::to_string(instances) + "/" +
              std::to_string(instances) + " solved",
          std::to_string(agree) + "/" + std::to_string(lps) + " LPs agree, " + std::to_string(solved) + "/" +
              std::to_string(instances) + " solved"};
}

struct Criterion {
  int id;
  const char* name;
  Budget budget;
  std::pair<std::string, std::string> (*body)(Run&, Scale);
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "skeleton-existence", {60, 0}, skeleton_existence},
      {2, "lifted-mixed-faces", {0, 120}, lifted_mixed_faces},
      {3, "low-face-refutation", {10, 0}, low_face_refutation},
      {4, "vertex-heavy-refutation", {10, 0}, vertex_heavy_refutation},
      {5, "product-tightness-gap", {0, 10}, product_tightness},
      {6, "coefficient-bound-tight", {0, 60}, bound_tightness},
      {7, "two-point-polytope-dependence", {0, 10}, polytope_dependence},
      {8, "edge-split-weights", {0, 30}, edge_split},
      {9, "balanced-limit-schedule", {0, 30}, schedule},
      {10, "solver-trust", {0, 60}, solver_trust},
  };
  return all;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  }
  return out + "\"";
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(Scale scale, const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> results;
  for (const auto& c : criteria()) {
    Run run;
    CheckResult r{c.id, c.name, "", "", false, 0, 0, c.budget.str()};
    try {
      std::tie(r.expected, r.observed) = c.body(run, scale);
    } catch (const std::exception& e) {
      run.expect(false, std::string("exception: ") + e.what());
    }
    for (auto* text : {&r.expected, &r.observed}) {
      text->erase(text->find_last_not_of(' ') + 1);
    }
    r.seconds = run.total();
    r.slowest = run.slowest();
    const bool in_time = (c.budget.each == 0 || r.slowest < c.budget.each) &&
                         (c.budget.total == 0 || r.seconds < c.budget.total);
    r.passed = run.ok() && in_time;
    if (!run.ok()) {
      r.observed += " [" + run.failures() + "]";
    }
    if (!in_time) {
      r.observed += " [over time budget]";
    }
    if (on_result) {
      on_result(r);
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string csv_header() { return "criterion,expected,observed,status,runtime"; }

std::string csv_row(const CheckResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << csv_field(std::to_string(r.id) + " " + r.name) << ',' << csv_field(r.expected) << ','
     << csv_field(r.observed) << ',' << (r.passed ? "pass" : "fail") << ',' << r.seconds;
  return os.str();
}

}  // namespace skelsum
