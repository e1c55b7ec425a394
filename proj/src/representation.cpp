#include "laxforge/representation.hpp"

#include "laxforge/error.hpp"

namespace laxforge {

namespace {

std::string short_name(const std::string& root_label) {
  const std::string prefix = "alpha_";
  return root_label.rfind(prefix, 0) == 0 ? root_label.substr(prefix.size()) : root_label;
}

}  // namespace

GradedSpace vector_space(const AlgebraData& alg) { return GradedSpace(alg.grading); }

GradedMatrix pi_sigma(const AlgebraData& alg, int a, int b) {
  const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
  const GradedSpace V = vector_space(alg);
  const int ga = alg.grading[ua], gb = alg.grading[ub];
  int sign = alg.xi[ua] * alg.xi[ub];
  if (ga * (ga + gb) % 2 == 1) sign = -sign;
  GradedMatrix M = GradedMatrix::elementary(V, a, b);
  M.add_to(alg.bar[ub], alg.bar[ua], LaurentPoly(-sign));
  return M;
}

GradedMatrix qh_diag(const GradedSpace& space, const std::vector<Weight>& weights, const Weight& w, const Rational& t) {
  GradedMatrix D(space);
  for (int b = 0; b < space.dim(); ++b) {
    D.set(b, b, LaurentPoly::q_power(t * bilinear(w, weights[static_cast<std::size_t>(b)])));
  }
  D.with_parity(0);
  return D;
}

GradedMatrix qh_diag(const Representation& rep, const Weight& w, const Rational& t) {
  return qh_diag(rep.space, rep.weights, w, t);
}

GradedMatrix raise_op(const Representation& rep, std::size_t root) {
  return rep.e[root] * qh_diag(rep, rep.algebra->simple_roots[root].weight, Rational(1, 2));
}

GradedMatrix lower_op(const Representation& rep, std::size_t root) {
  return rep.f[root] * qh_diag(rep, rep.algebra->simple_roots[root].weight, Rational(1, 2));
}

GradedMatrix adjoint(const Representation& rep, const GradedMatrix& x, const Weight& w, int px, const GradedMatrix& X,
                     int pX) {
  const GradedMatrix conj = qh_diag(rep, w, 1) * X * qh_diag(rep, w, -1);
  const LaurentPoly sign((px * pX) % 2 == 1 ? 1 : -1);
  return x * X + sign * (conj * x);
}

std::vector<Relation> serre_relations(const Representation& rep) {
  const AlgebraData& A = *rep.algebra;
  std::vector<Relation> out;
  const GradedMatrix zero(rep.space);
  for (std::size_t b = 0; b < A.simple_roots.size(); ++b) {
    const SimpleRoot& rb = A.simple_roots[b];
    if (is_zero(bilinear(rb.weight, rb.weight))) continue;
    for (std::size_t c = 0; c < A.simple_roots.size(); ++c) {
      if (c == b) continue;
      const SimpleRoot& rc = A.simple_roots[c];
      const Rational power = 1 - A.cartan[b][c];
      const long times = power.get_num().get_si();
      for (int lowering = 0; lowering < 2; ++lowering) {
        const GradedMatrix x = lowering ? lower_op(rep, b) : raise_op(rep, b);
        GradedMatrix X = lowering ? lower_op(rep, c) : raise_op(rep, c);
        int pX = rc.parity;
        for (long t = 0; t < times; ++t) {
          X = adjoint(rep, x, rb.weight, rb.parity, X, pX);
          pX = (pX + rb.parity) % 2;
        }
        const std::string op = lowering ? "F" : "E";
        out.push_back({"serre(ad " + op + "_" + short_name(rb.label) + ")^" + std::to_string(times) + " " + op + "_" +
                           short_name(rc.label),
                       std::move(X), zero});
      }
    }
  }
  return out;
}

std::vector<Relation> defining_relations(const Representation& rep) {
  const AlgebraData& A = *rep.algebra;
  std::vector<Relation> out;
  const LaurentPoly qmqi = LaurentPoly::q_minus_qinv();
  const GradedMatrix zero(rep.space);
  for (std::size_t a = 0; a < A.simple_roots.size(); ++a) {
    const SimpleRoot& ra = A.simple_roots[a];
    for (std::size_t b = 0; b < A.simple_roots.size(); ++b) {
      const SimpleRoot& rb = A.simple_roots[b];
      const LaurentPoly sign((ra.parity * rb.parity) % 2 == 1 ? 1 : -1);
      GradedMatrix lhs = qmqi * (rep.e[a] * rep.f[b] + sign * (rep.f[b] * rep.e[a]));
      GradedMatrix rhs = a == b ? qh_diag(rep, ra.weight, 1) - qh_diag(rep, ra.weight, -1) : zero;
      out.push_back({"[e_" + short_name(ra.label) + ",f_" + short_name(rb.label) + "]", std::move(lhs), std::move(rhs)});
    }
    if (is_zero(bilinear(ra.weight, ra.weight))) {
      out.push_back({"e_" + short_name(ra.label) + "^2", rep.e[a] * rep.e[a], zero});
      out.push_back({"f_" + short_name(ra.label) + "^2", rep.f[a] * rep.f[a], zero});
    }
  }
  for (auto& r : serre_relations(rep)) out.push_back(std::move(r));
  return out;
}

void validate_representation(const Representation& rep) {
  if (!rep.algebra) throw SchemaError("representation has no algebra");
  const AlgebraData& A = *rep.algebra;
  const auto roots = A.simple_roots.size();
  if (rep.weights.size() != static_cast<std::size_t>(rep.dim())) throw SchemaError("one weight per basis vector required");
  if (rep.e.size() != roots || rep.f.size() != roots) throw SchemaError("e and f must be given for every simple root");
  for (const auto& w : rep.weights) {
    if (w.eps.size() != static_cast<std::size_t>(A.l) || w.delta.size() != static_cast<std::size_t>(A.k)) {
      throw SchemaError("weight has the wrong number of coordinates");
    }
  }
  for (std::size_t a = 0; a < roots; ++a) {
    const SimpleRoot& r = A.simple_roots[a];
    for (int lowering = 0; lowering < 2; ++lowering) {
      const GradedMatrix& M = lowering ? rep.f[a] : rep.e[a];
      const std::string name = (lowering ? "f_" : "e_") + short_name(r.label);
      if (M.space() != rep.space) throw SchemaError(name + " does not act on the module");
      const Weight shift = lowering ? -r.weight : r.weight;
      M.for_each([&](int row, int col, const LaurentPoly&) {
        const Weight d = rep.weights[static_cast<std::size_t>(row)] - rep.weights[static_cast<std::size_t>(col)];
        if (d != shift) throw RelationViolation(name + " shifts weight by " + r.label, "entry " + std::to_string(row + 1) + "," + std::to_string(col + 1));
        if ((rep.space.grade(row) + rep.space.grade(col)) % 2 != r.parity) {
          throw RelationViolation(name + " has parity " + std::to_string(r.parity), "entry " + std::to_string(row + 1) + "," + std::to_string(col + 1));
        }
      });
    }
  }
  for (const auto& rel : defining_relations(rep)) {
    if (auto pos = first_difference(rel.lhs, rel.rhs)) {
      throw RelationViolation(rel.id, "entry " + std::to_string(pos->first + 1) + "," + std::to_string(pos->second + 1) +
                                          ": " + rel.lhs.get(pos->first, pos->second).to_string() + " vs " +
                                          rel.rhs.get(pos->first, pos->second).to_string());
    }
  }
}

RepresentationPtr build_vector_rep(const AlgebraPtr& alg) {
  auto rep = std::make_shared<Representation>();
  rep->algebra = alg;
  rep->name = "vector";
  rep->space = vector_space(*alg);
  rep->weights = alg->weights;
  for (const auto& r : alg->simple_roots) {
    GradedMatrix e = pi_sigma(*alg, r.upper, r.lower);
    GradedMatrix f = LaurentPoly(r.f_sign) * pi_sigma(*alg, r.lower, r.upper);
    e.with_parity(r.parity);
    f.with_parity(r.parity);
    rep->e.push_back(std::move(e));
    rep->f.push_back(std::move(f));
  }
  validate_representation(*rep);
  return rep;
}

RepresentationPtr trivial_rep(const AlgebraPtr& alg) {
  auto rep = std::make_shared<Representation>();
  rep->algebra = alg;
  rep->name = "trivial";
  rep->space = GradedSpace({0});
  rep->weights.assign(1, Weight(static_cast<std::size_t>(alg->l), static_cast<std::size_t>(alg->k)));
  rep->e.assign(alg->simple_roots.size(), GradedMatrix(rep->space));
  rep->f.assign(alg->simple_roots.size(), GradedMatrix(rep->space));
  validate_representation(*rep);
  return rep;
}

RepresentationPtr tensor_module(const Representation& a, const Representation& b) {
  auto rep = std::make_shared<Representation>();
  rep->algebra = a.algebra;
  rep->name = a.name + "(x)" + b.name;
  rep->space = GradedSpace::tensor(a.space, b.space);
  for (const auto& wa : a.weights) {
    for (const auto& wb : b.weights) rep->weights.push_back(wa + wb);
  }
  const Rational half(1, 2);
  for (std::size_t r = 0; r < a.algebra->simple_roots.size(); ++r) {
    const Weight& w = a.algebra->simple_roots[r].weight;
    const GradedMatrix Ka = qh_diag(a, w, half);
    const GradedMatrix Kb = qh_diag(b, w, -half);
    rep->e.push_back(graded_kron(Ka, b.e[r]) + graded_kron(a.e[r], Kb));
    rep->f.push_back(graded_kron(Ka, b.f[r]) + graded_kron(a.f[r], Kb));
  }
  return rep;
}

}  // namespace laxforge
