#pragma once

// Finite-dimensional modules of U_q[osp(m|n)]: the undeformed vector
// representation, the trivial one, and anything loaded from a file. Every
// module is checked against the defining relations before it is used.

#include <memory>
#include <string>
#include <vector>

#include "laxforge/gradedmat.hpp"
#include "laxforge/superroot.hpp"

namespace laxforge {

struct Representation {
  AlgebraPtr algebra;
  std::string name;
  GradedSpace space;
  std::vector<Weight> weights;  // per basis position
  std::vector<GradedMatrix> e;  // per simple root, in AlgebraData order
  std::vector<GradedMatrix> f;

  int dim() const { return space.dim(); }
};

using RepresentationPtr = std::shared_ptr<const Representation>;

/// The vector module space of the algebra (its grading, one factor).
GradedSpace vector_space(const AlgebraData& alg);

/// pi(sigma^a_b) = E^a_b - (-1)^{[a]([a]+[b])} xi_a xi_b E^{bbar}_{abar}.
GradedMatrix pi_sigma(const AlgebraData& alg, int a, int b);

/// diag_b q^{t (w, wt_b)} on the module.
GradedMatrix qh_diag(const Representation& rep, const Weight& w, const Rational& t);
GradedMatrix qh_diag(const GradedSpace& space, const std::vector<Weight>& weights, const Weight& w, const Rational& t);

/// E_a = e_a q^{h_a / 2}, F_a = f_a q^{h_a / 2}.
GradedMatrix raise_op(const Representation& rep, std::size_t root);
GradedMatrix lower_op(const Representation& rep, std::size_t root);

/// ad(x) X = x X - (-1)^{px pX} (q^{h_w} X q^{-h_w}) x.
GradedMatrix adjoint(const Representation& rep, const GradedMatrix& x, const Weight& w, int px, const GradedMatrix& X,
                     int pX);

/// A matrix identity lhs = rhs with a printable identifier.
struct Relation {
  std::string id;
  GradedMatrix lhs;
  GradedMatrix rhs;
};

/// (ad E_b)^{1 - a_bc} E_c = 0 and the same for F, for b != c with (alpha_b, alpha_b) != 0.
std::vector<Relation> serre_relations(const Representation& rep);

/// [e_a, f_b] = delta_ab (q^{h_a} - q^{-h_a}) / (q - 1/q) (cleared of the
/// denominator), e_s^2 = f_s^2 = 0 for the isotropic root, and the Serre relations.
std::vector<Relation> defining_relations(const Representation& rep);

/// Shape, weight and parity checks followed by defining_relations.
/// Throws SchemaError for shape problems and RelationViolation otherwise.
void validate_representation(const Representation& rep);

RepresentationPtr build_vector_rep(const AlgebraPtr& alg);

/// The module a (x) b with generators acting through the coproduct
///   Delta(e) = q^{h/2} (x) e + e (x) q^{-h/2}, Delta(f) likewise.
/// Not re-validated: the coproduct is an algebra homomorphism.
RepresentationPtr tensor_module(const Representation& a, const Representation& b);
RepresentationPtr trivial_rep(const AlgebraPtr& alg);

}  // namespace laxforge
