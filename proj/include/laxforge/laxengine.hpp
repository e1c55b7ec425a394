#pragma once

// The operators sigma_ba of the Lax ansatz
//
//   R = sum_a E^a_a (x) q^{h_{eps_a}}
//     + (q - 1/q) sum_{eps_a < eps_b} (-1)^{[b]} E^a_b (x) q^{h_{eps_a}} sigma_ba,
//
// seeded on simple roots and extended through the induction relations.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laxforge/representation.hpp"

namespace laxforge {

enum class ProvenanceKind { simple, recursed, closed_form, forced_zero };

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::simple;
  int via = -1;  // intermediate position for recursed entries
};

std::string to_string(ProvenanceKind k);
ProvenanceKind provenance_from_string(const std::string& s);

using PairKey = std::pair<int, int>;  // (b, a), positions in the vector module, b < a

struct SigmaSet {
  AlgebraPtr algebra;     // indexes the pairs
  RepresentationPtr rep;  // the module the operators act on
  std::map<PairKey, GradedMatrix> sigma;
  std::map<PairKey, Provenance> provenance;

  bool contains(int b, int a) const { return sigma.count({b, a}) != 0; }
  const GradedMatrix& at(int b, int a) const;
  bool complete() const;
};

/// The pairs seeded directly from simple roots, together with sigma_{l lbar} = 0 for even m.
SigmaSet init_simple_sigma(const RepresentationPtr& rep);

/// Step (1..6) of the construction order a pair belongs to.
int construction_step(const AlgebraData& alg, int b, int a);

/// q^{-(eps_b, eps_a)} s_bc s_ca - q^{-(eps_c, eps_c)} (-1)^{([b]+[c])([a]+[c])} s_ca s_bc.
GradedMatrix induction_step(const SigmaSet& s, int b, int a, int c);

/// c strictly between b and a and different from bbar, abar.
bool admissible_intermediate(const AlgebraData& alg, int b, int a, int c);

/// Completes a seeded set following steps 1-6; each pair takes the first
/// admissible intermediate whose factors are already known.
SigmaSet extend_sigma(SigmaSet partial);

/// sigma_ba = q^{-h_{eps_a}} (E^b_a - (-1)^{[b]([a]+[b])} xi_a xi_b q^{(rho, eps_a - eps_b)} E^abar_bbar),
/// valid in the vector module only.
SigmaSet closed_form_sigma(const AlgebraPtr& alg);

enum class RKind { lax, vector, opposite };

struct RTensor {
  RKind kind = RKind::lax;
  GradedMatrix matrix;  // on V (x) W
  int v_dim = 0;
  int w_dim = 0;
};

std::string to_string(RKind k);

/// Throws InvalidInput for an incomplete set and RelationViolation if the
/// result is not weightless.
RTensor assemble_R(const SigmaSet& sigma);

/// sigma_ab = (-1)^{[b]([a]+[b])} sigma_ba^dagger.
GradedMatrix opposite_sigma(const SigmaSet& sigma, int b, int a);

/// The opposite operator built from sigma, without any assertion.
GradedMatrix opposite_matrix(const SigmaSet& sigma);

/// R^T = sum E^a_a (x) q^{h} + (q - 1/q) sum (-1)^{[a]} E^b_a (x) sigma_ab q^{h_{eps_a}};
/// asserts R^T = dagger(R) = P R P for the vector module.
RTensor opposite_R(const SigmaSet& sigma);

}  // namespace laxforge
