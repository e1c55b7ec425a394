#include "laxforge/serialize.hpp"

#include "laxforge/error.hpp"

namespace laxforge {

namespace {

Json rational_json(const Rational& r) { return format_rational(r); }

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidInput& e) {
      throw SchemaError(e.what());
    }
  }
  throw SchemaError("expected a rational, got " + j.dump());
}

LaurentPoly laurent_from(const Json& j) {
  if (!j.is_string()) throw SchemaError("expected a Laurent string, got " + j.dump());
  try {
    return LaurentPoly::parse(j.get<std::string>());
  } catch (const InvalidInput& e) {
    throw SchemaError(e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

Json weight_json(const Weight& w) {
  Json eps = Json::array(), delta = Json::array();
  for (const auto& x : w.eps) eps.push_back(rational_json(x));
  for (const auto& x : w.delta) delta.push_back(rational_json(x));
  return Json{{"eps", eps}, {"delta", delta}};
}

Weight weight_from(const Json& j, const AlgebraData& alg) {
  const Json& eps = field(j, "eps");
  const Json& delta = field(j, "delta");
  if (!eps.is_array() || !delta.is_array() || eps.size() != static_cast<std::size_t>(alg.l) ||
      delta.size() != static_cast<std::size_t>(alg.k)) {
    throw SchemaError("weight must have " + std::to_string(alg.l) + " eps and " + std::to_string(alg.k) + " delta coordinates");
  }
  Weight w(static_cast<std::size_t>(alg.l), static_cast<std::size_t>(alg.k));
  for (std::size_t i = 0; i < eps.size(); ++i) w.eps[i] = rational_from(eps[i]);
  for (std::size_t i = 0; i < delta.size(); ++i) w.delta[i] = rational_from(delta[i]);
  return w;
}

Json algebra_ref(const AlgebraData& alg) { return Json{{"m", alg.m}, {"n", alg.n}}; }

AlgebraPtr algebra_from_ref(const Json& j) { return build_algebra(int_field(j, "m"), int_field(j, "n")); }

template <class S, class Parse>
GradedMatrixT<S> parse_entries(const Json& j, const GradedSpace& space, Parse&& parse) {
  if (!j.is_array()) throw SchemaError("matrix entries must be an array");
  GradedMatrixT<S> X(space);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw SchemaError("matrix entry must be [row, col, value], got " + e.dump());
    }
    const int r = e[0].get<int>(), c = e[1].get<int>();
    if (r < 1 || r > space.dim() || c < 1 || c > space.dim()) {
      throw SchemaError("matrix entry " + e.dump() + " out of range for dimension " + std::to_string(space.dim()));
    }
    X.add_to(r - 1, c - 1, parse(e[2]));
  }
  return X;
}

std::pair<int, int> pair_from_key(const AlgebraData& alg, const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos) throw SchemaError("sigma key '" + key + "' must be 'b,a'");
  try {
    return {alg.position(key.substr(0, comma)), alg.position(key.substr(comma + 1))};
  } catch (const InvalidInput& e) {
    throw SchemaError(e.what());
  }
}

Json zpoly_json(const ZPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.to_string());
  return out;
}

ZPoly zpoly_from(const Json& j) {
  if (!j.is_array()) throw SchemaError("z-polynomial must be an array of Laurent strings");
  std::vector<LaurentPoly> coeffs;
  for (const auto& c : j) coeffs.push_back(laurent_from(c));
  return ZPoly(std::move(coeffs));
}

RKind rkind_from(const std::string& s) {
  if (s == "lax") return RKind::lax;
  if (s == "vector") return RKind::vector;
  if (s == "opposite") return RKind::opposite;
  throw SchemaError("unknown R kind '" + s + "'");
}

}  // namespace

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

Json algebra_to_json(const AlgebraData& alg) {
  Json roots = Json::array();
  for (const auto& r : alg.simple_roots) {
    Json w = weight_json(r.weight);
    roots.push_back(Json{{"label", r.label}, {"eps", w["eps"]}, {"delta", w["delta"]}});
  }
  Json cartan = Json::array();
  for (const auto& row : alg.cartan) {
    Json out = Json::array();
    for (const auto& x : row) out.push_back(rational_json(x));
    cartan.push_back(out);
  }
  std::vector<int> bar;
  for (int b : alg.bar) bar.push_back(b + 1);
  return Json{{"m", alg.m},         {"n", alg.n},   {"layout", alg.labels},  {"gradings", alg.grading},
              {"bar", bar},         {"xi", alg.xi}, {"simple_roots", roots}, {"cartan", cartan},
              {"rho", weight_json(alg.rho)}};
}

AlgebraPtr algebra_from_json(const Json& j) {
  AlgebraPtr alg = algebra_from_ref(j);
  if (algebra_to_json(*alg) != j) throw SchemaError("algebra document does not match osp(" + std::to_string(alg->m) + "|" + std::to_string(alg->n) + ")");
  return alg;
}

Json entries_to_json(const GradedMatrix& X) {
  Json out = Json::array();
  X.for_each([&](int r, int c, const LaurentPoly& v) { out.push_back(Json::array({r + 1, c + 1, v.to_string()})); });
  return out;
}

GradedMatrix entries_from_json(const Json& j, const GradedSpace& space) {
  return parse_entries<LaurentPoly>(j, space, laurent_from);
}

Json rational_entries_to_json(const RationalMatrix& X) {
  Json out = Json::array();
  X.for_each([&](int r, int c, const Rational& v) { out.push_back(Json::array({r + 1, c + 1, format_rational(v)})); });
  return out;
}

RationalMatrix rational_entries_from_json(const Json& j, const GradedSpace& space) {
  return parse_entries<Rational>(j, space, rational_from);
}

Json representation_to_json(const Representation& rep) {
  const AlgebraData& A = *rep.algebra;
  Json weights = Json::array();
  for (const auto& w : rep.weights) weights.push_back(weight_json(w));
  Json e = Json::object(), f = Json::object();
  for (std::size_t r = 0; r < A.simple_roots.size(); ++r) {
    e[A.simple_roots[r].label] = entries_to_json(rep.e[r]);
    f[A.simple_roots[r].label] = entries_to_json(rep.f[r]);
  }
  return Json{{"algebra", algebra_ref(A)}, {"name", rep.name},       {"dim", rep.dim()}, {"gradings", rep.space.grading()},
              {"weights", weights},        {"e", e},                 {"f", f}};
}

RepresentationPtr representation_from_json(const Json& j) {
  auto rep = std::make_shared<Representation>();
  rep->algebra = algebra_from_ref(field(j, "algebra"));
  const AlgebraData& A = *rep->algebra;
  rep->name = string_field(j, "name");
  const int dim = int_field(j, "dim");
  if (dim < 1) throw SchemaError("dim must be positive");
  const Json& gradings = field(j, "gradings");
  if (!gradings.is_array() || gradings.size() != static_cast<std::size_t>(dim)) throw SchemaError("gradings must have dim entries");
  std::vector<int> grading;
  for (const auto& g : gradings) {
    if (!g.is_number_integer() || (g.get<int>() != 0 && g.get<int>() != 1)) throw SchemaError("gradings must be 0 or 1");
    grading.push_back(g.get<int>());
  }
  rep->space = GradedSpace(grading);
  const Json& weights = field(j, "weights");
  if (!weights.is_array() || weights.size() != static_cast<std::size_t>(dim)) throw SchemaError("weights must have dim entries");
  for (const auto& w : weights) rep->weights.push_back(weight_from(w, A));

  const Json& e = field(j, "e");
  const Json& f = field(j, "f");
  if (!e.is_object() || !f.is_object()) throw SchemaError("e and f must be objects keyed by root label");
  for (const auto& root : A.simple_roots) {
    if (!e.contains(root.label) || !f.contains(root.label)) throw SchemaError("missing generator for root " + root.label);
    rep->e.push_back(entries_from_json(e.at(root.label), rep->space));
    rep->f.push_back(entries_from_json(f.at(root.label), rep->space));
  }
  if (e.size() != A.simple_roots.size() || f.size() != A.simple_roots.size()) throw SchemaError("unknown root label in e or f");
  validate_representation(*rep);
  return rep;
}

Json sigma_to_json(const SigmaSet& s) {
  const AlgebraData& A = *s.algebra;
  Json entries = Json::object();
  for (const auto& [key, X] : s.sigma) {
    const auto& prov = s.provenance.at(key);
    Json p{{"kind", to_string(prov.kind)}, {"via", prov.via < 0 ? Json(nullptr) : Json(A.labels[static_cast<std::size_t>(prov.via)])}};
    entries[A.labels[static_cast<std::size_t>(key.first)] + "," + A.labels[static_cast<std::size_t>(key.second)]] =
        Json{{"matrix", entries_to_json(X)}, {"provenance", p}};
  }
  return Json{{"algebra", algebra_ref(A)}, {"rep_name", s.rep->name}, {"entries", entries}};
}

SigmaSet sigma_from_json(const Json& j, const RepresentationPtr& rep) {
  const AlgebraPtr alg = algebra_from_ref(field(j, "algebra"));
  if (alg->m != rep->algebra->m || alg->n != rep->algebra->n) throw SchemaError("sigma file and module belong to different algebras");
  if (string_field(j, "rep_name") != rep->name) throw SchemaError("sigma file was built for module '" + string_field(j, "rep_name") + "'");
  SigmaSet s;
  s.algebra = rep->algebra;
  s.rep = rep;
  const AlgebraData& A = *s.algebra;
  const Json& entries = field(j, "entries");
  if (!entries.is_object()) throw SchemaError("entries must be an object");
  for (const auto& [key, value] : entries.items()) {
    const auto [b, a] = pair_from_key(A, key);
    if (b >= a) throw SchemaError("sigma key '" + key + "' must have eps_b > eps_a");
    GradedMatrix X = entries_from_json(field(value, "matrix"), rep->space);
    try {
      X.with_parity((A.grading[static_cast<std::size_t>(b)] + A.grading[static_cast<std::size_t>(a)]) % 2);
    } catch (const InvalidInput&) {
      throw SchemaError("sigma(" + key + ") is not homogeneous of the expected parity");
    }
    const Json& p = field(value, "provenance");
    Provenance prov{provenance_from_string(string_field(p, "kind")), -1};
    const Json& via = field(p, "via");
    if (!via.is_null()) {
      if (!via.is_string()) throw SchemaError("provenance via must be a label or null");
      try {
        prov.via = A.position(via.get<std::string>());
      } catch (const InvalidInput& e) {
        throw SchemaError(e.what());
      }
    }
    s.sigma[{b, a}] = std::move(X);
    s.provenance[{b, a}] = prov;
  }
  return s;
}

Json rtensor_to_json(const RTensor& r, const AlgebraData& alg, const std::string& rep_name) {
  return Json{{"algebra", algebra_ref(alg)}, {"rep_name", rep_name},  {"kind", to_string(r.kind)},
              {"v_dim", r.v_dim},            {"w_dim", r.w_dim},      {"entries", entries_to_json(r.matrix)}};
}

RTensor rtensor_from_json(const Json& j, const RepresentationPtr& rep) {
  const AlgebraPtr alg = algebra_from_ref(field(j, "algebra"));
  if (alg->m != rep->algebra->m || alg->n != rep->algebra->n) throw SchemaError("R file and module belong to different algebras");
  RTensor r;
  r.kind = rkind_from(string_field(j, "kind"));
  r.v_dim = int_field(j, "v_dim");
  r.w_dim = int_field(j, "w_dim");
  if (r.v_dim != alg->dim() || r.w_dim != rep->dim()) throw SchemaError("R file dimensions do not match the module");
  r.matrix = entries_from_json(field(j, "entries"), GradedSpace::tensor(vector_space(*alg), rep->space));
  return r;
}

Json report_to_json(const CheckReport& r) {
  Json out{{"check", r.check}, {"status", r.status()}, {"relations_checked", r.relations_checked}};
  if (r.witness) {
    out["witness"] = Json{{"relation", r.witness->relation}, {"row", r.witness->row}, {"col", r.witness->col},
                          {"lhs", r.witness->lhs},           {"rhs", r.witness->rhs}};
  }
  return out;
}

CheckReport report_from_json(const Json& j) {
  CheckReport r;
  r.check = string_field(j, "check");
  const std::string status = string_field(j, "status");
  if (status != "pass" && status != "fail" && status != "vacuous") throw SchemaError("unknown status '" + status + "'");
  r.passed = status != "fail";
  r.vacuous = status == "vacuous";
  r.relations_checked = field(j, "relations_checked").get<std::size_t>();
  if (j.contains("witness")) {
    const Json& w = j.at("witness");
    r.witness = Witness{string_field(w, "relation"), int_field(w, "row"), int_field(w, "col"), string_field(w, "lhs"),
                        string_field(w, "rhs")};
  }
  return r;
}

Json spectral_to_json(const SpectralRMatrix& r) {
  Json entries = Json::array();
  r.matrix.for_each([&](int row, int col, const RatFunc& f) {
    entries.push_back(Json::array({row + 1, col + 1, Json{{"num", zpoly_json(f.num())}, {"den", zpoly_json(f.den())}}}));
  });
  return Json{{"algebra", algebra_ref(*r.algebra)}, {"kind", to_string(r.kind)}, {"dim", r.matrix.dim()}, {"entries", entries}};
}

SpectralRMatrix spectral_from_json(const Json& j) {
  SpectralRMatrix r;
  r.algebra = algebra_from_ref(field(j, "algebra"));
  try {
    r.kind = spectral_kind_from_string(string_field(j, "kind"));
  } catch (const InvalidInput& e) {
    throw SchemaError(e.what());
  }
  const GradedSpace V = vector_space(*r.algebra);
  const GradedSpace VV = GradedSpace::tensor(V, V);
  if (int_field(j, "dim") != VV.dim()) throw SchemaError("spectral matrix dimension does not match the algebra");
  r.matrix = parse_entries<RatFunc>(field(j, "entries"), VV, [](const Json& v) {
    try {
      return RatFunc(zpoly_from(field(v, "num")), zpoly_from(field(v, "den")));
    } catch (const InvalidInput& e) {
      throw SchemaError(e.what());
    }
  });
  return r;
}

Json rational_matrix_doc(const AlgebraData& alg, const std::string& kind, const RationalMatrix& X, const std::string& s0,
                         const std::string& z0) {
  Json out{{"algebra", algebra_ref(alg)}, {"kind", kind}, {"s", s0}, {"dim", X.dim()}, {"entries", rational_entries_to_json(X)}};
  if (!z0.empty()) out["z"] = z0;
  return out;
}

}  // namespace laxforge
