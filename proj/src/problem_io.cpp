#include "skelsum/problem_io.hpp"

#include <json.hpp>

namespace skelsum {

namespace {

using json = nlohmann::ordered_json;

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

Rational to_rational(const json& token) {
  if (token.is_number_integer()) {
    return token.is_number_unsigned() ? Rational(token.get<unsigned long long>())
                                      : Rational(token.get<long long>());
  }
  if (!token.is_string()) {
    throw InputError("expected a rational string, got " + token.dump());
  }
  try {
    return Rational::parse(token.get<std::string>());
  } catch (const std::exception&) {
    throw InputError("not a rational: " + token.dump());
  }
}

std::vector<Rational> to_rationals(const json& arr) {
  if (!arr.is_array()) {
    throw InputError("expected an array, got " + arr.dump());
  }
  std::vector<Rational> out;
  for (const auto& t : arr) {
    out.push_back(to_rational(t));
  }
  return out;
}

std::size_t to_index(const json& token) {
  if (!token.is_number_integer() || token.get<long long>() < 0) {
    throw InputError("expected a nonnegative integer, got " + token.dump());
  }
  return token.get<std::size_t>();
}

json strings(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& x : v) {
    out.push_back(x.str());
  }
  return out;
}

json strings(const Point& p) { return strings(p.coords()); }

json points(const std::vector<Point>& pts) {
  json out = json::array();
  for (const auto& p : pts) {
    out.push_back(strings(p));
  }
  return out;
}

json matrix(const CoefficientMatrix& mu) {
  json out = json::array();
  for (const auto& row : mu) {
    out.push_back(strings(row));
  }
  return out;
}

CoefficientMatrix to_matrix(const json& arr) {
  if (!arr.is_array()) {
    throw InputError("expected an array of arrays");
  }
  CoefficientMatrix out;
  for (const auto& row : arr) {
    out.push_back(to_rationals(row));
  }
  return out;
}

json faces_json(const std::vector<Face>& faces) {
  json out = json::array();
  for (const auto& f : faces) {
    out.push_back({{"vertices", f.vertices}, {"dim", f.dim}});
  }
  return out;
}

std::vector<Face> to_faces(const json& arr) {
  if (!arr.is_array()) {
    throw InputError("expected an array of faces");
  }
  std::vector<Face> out;
  for (const auto& f : arr) {
    Face face;
    for (const auto& v : field(f, "vertices")) {
      face.vertices.push_back(to_index(v));
    }
    face.dim = static_cast<int>(to_index(field(f, "dim")));
    out.push_back(std::move(face));
  }
  return out;
}

json envelope(const char* outcome, const RunInfo& info) {
  return {{"tool", "skelsum"},
          {"version", std::string(kToolVersion)},
          {"deterministic", info.deterministic},
          {"seconds", info.seconds},
          {"outcome", outcome}};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  const json doc = parse_json(text);
  ProblemFile out;
  out.ambient_dim = to_index(field(doc, "ambient_dim"));
  const auto& verts = field(doc, "vertices");
  if (!verts.is_array() || verts.empty()) {
    throw InputError("vertices must be a nonempty array");
  }
  for (const auto& v : verts) {
    Point p(to_rationals(v));
    if (p.dim() != out.ambient_dim) {
      throw InputError("vertex " + v.dump() + " does not have ambient_dim coordinates");
    }
    out.vertices.push_back(std::move(p));
  }
  out.target = Point(to_rationals(field(doc, "target")));
  if (out.target.dim() != out.ambient_dim) {
    throw InputError("target does not have ambient_dim coordinates");
  }
  const auto& dims = field(doc, "dims");
  if (!dims.is_array() || dims.empty()) {
    throw InputError("dims must be a nonempty array");
  }
  for (const auto& d : dims) {
    out.dims.push_back(static_cast<int>(to_index(d)));
  }
  const std::string mode = doc.value("mode", std::string("decompose"));
  if (mode == "decompose") {
    out.mode = Mode::decompose;
  } else if (mode == "probe") {
    out.mode = Mode::probe;
    out.probe_index = to_index(field(doc, "probe_index"));
    if (out.probe_index >= out.dims.size()) {
      throw InputError("probe_index out of range");
    }
  } else {
    throw InputError("unknown mode '" + mode + "'");
  }
  if (doc.contains("weights")) {
    out.weights = to_rationals(doc.at("weights"));
  }
  if (out.mode == Mode::decompose) {
    if (out.weights.size() != out.dims.size()) {
      throw InputError("weights and dims differ in length");
    }
    Rational total;
    for (const auto& w : out.weights) {
      if (w.sign() < 0) {
        throw InputError("negative weight " + w.str());
      }
      total += w;
    }
    if (total != Rational(1)) {
      throw InputError("weights sum to " + total.str() + ", not 1");
    }
  }
  return out;
}

std::string write_problem(const ProblemFile& file) {
  json doc{{"ambient_dim", file.ambient_dim},
           {"vertices", points(file.vertices)},
           {"target", strings(file.target)},
           {"dims", file.dims}};
  if (file.mode == Mode::decompose || !file.weights.empty()) {
    doc["weights"] = strings(file.weights);
  }
  doc["mode"] = file.mode == Mode::decompose ? "decompose" : "probe";
  if (file.mode == Mode::probe) {
    doc["probe_index"] = file.probe_index;
  }
  return doc.dump(2) + "\n";
}

ProblemFile problem_file(const DecompositionProblem& problem) {
  return ProblemFile{problem.polytope.ambient_dim(), problem.polytope.vertices(), problem.target,
                     problem.dims, problem.weights, Mode::decompose, 0};
}

DecompositionProblem to_problem(const ProblemFile& file) {
  return DecompositionProblem{canonicalize(file.vertices), file.target, file.dims, file.weights};
}

std::string write_report(const Decomposition& result, const RunInfo& info) {
  json doc;
  if (const auto* cert = std::get_if<Certificate>(&result)) {
    doc = envelope("certificate", info);
    doc["certificate"] = {{"faces", faces_json(cert->faces)},
                          {"points", points(cert->points)},
                          {"mu", matrix(cert->mu)},
                          {"order_independent", cert->order_independent}};
  } else {
    const auto& ref = std::get<Refutation>(result);
    doc = envelope("refutation", info);
    json counts = json::object();
    for (const auto& [dim, count] : ref.face_counts) {
      counts[std::to_string(dim)] = count;
    }
    json witnesses = json::array();
    for (const auto& w : ref.witnesses) {
      witnesses.push_back({{"tuple", w.tuple}, {"farkas", strings(w.farkas)}});
    }
    doc["refutation"] = {{"tuple_count", ref.tuple_count},
                         {"witness_digest", ref.digest()},
                         {"face_counts", counts},
                         {"witnesses", witnesses}};
  }
  return doc.dump(2) + "\n";
}

std::string write_probe_report(const std::optional<ProbeResult>& result, std::size_t probe_index,
                               const RunInfo& info) {
  json doc = envelope("probe", info);
  json probe{{"probe_index", probe_index}};
  if (!result) {
    probe["value"] = nullptr;
  } else {
    probe["value"] = result->value.str();
    probe["tuples_examined"] = result->tuples_examined;
    probe["faces"] = faces_json(result->faces);
    probe["weights"] = strings(result->weights);
    probe["mu"] = matrix(result->mu);
    probe["points"] = points(result->points);
  }
  doc["probe"] = probe;
  return doc.dump(2) + "\n";
}

std::string report_outcome(std::string_view report) {
  const json doc = parse_json(report);
  const auto& outcome = field(doc, "outcome");
  if (!outcome.is_string()) {
    throw InputError("outcome must be a string");
  }
  return outcome.get<std::string>();
}

bool revalidate_report(const ProblemFile& problem, std::string_view report) {
  const json doc = parse_json(report);
  const std::string outcome = report_outcome(report);
  const Polytope polytope = canonicalize(problem.vertices);
  if (outcome == "certificate") {
    const auto& c = field(doc, "certificate");
    Certificate cert{to_problem(problem), to_faces(field(c, "faces")), to_matrix(field(c, "mu")), {},
                     field(c, "order_independent").get<bool>()};
    for (const auto& p : field(c, "points")) {
      cert.points.emplace_back(to_rationals(p));
    }
    return validate_certificate(cert);
  }
  if (outcome == "refutation") {
    const auto& r = field(doc, "refutation");
    Refutation ref;
    ref.tuple_count = to_index(field(r, "tuple_count"));
    for (const auto& w : field(r, "witnesses")) {
      TupleWitness tw;
      for (const auto& i : field(w, "tuple")) {
        tw.tuple.push_back(to_index(i));
      }
      tw.farkas = to_rationals(field(w, "farkas"));
      ref.witnesses.push_back(std::move(tw));
    }
    if (ref.digest() != field(r, "witness_digest").get<std::string>()) {
      return false;
    }
    return validate_refutation(to_problem(problem), ref);
  }
  if (outcome == "probe") {
    const auto& p = field(doc, "probe");
    const auto& value = field(p, "value");
    if (value.is_null()) {
      // Absence of any feasible tuple is not checkable without re-solving.
      return true;
    }
    const auto index = to_index(field(p, "probe_index"));
    const auto faces = to_faces(field(p, "faces"));
    const auto weights = to_rationals(field(p, "weights"));
    if (index >= weights.size() || weights[index] != to_rational(value) ||
        faces.size() != problem.dims.size()) {
      return false;
    }
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (!is_face(polytope, faces[i].vertices) ||
          affine_dimension(face_vertices(polytope, faces[i])) > problem.dims[i]) {
        return false;
      }
    }
    const auto system = assemble_fixed(polytope, faces, weights, problem.target);
    return check_certificate(system, to_matrix(field(p, "mu")));
  }
  throw InputError("unknown outcome '" + outcome + "'");
}

}  // namespace skelsum
