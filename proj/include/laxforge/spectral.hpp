#pragma once

// Baxterised R-matrices on V (x) V:
//
//   r(z) = c1(z) P + c2(z) E + c3(z) r,
//   c1 = (q - 1/q) z / (q - z/q),
//   c2 = -(q - 1/q) z (z - 1) / ((q - z/q)(z - xi)),
//   c3 = -(z - 1) / (q - z/q),
//
// with xi = q^{m-n-2} (untwisted) or xi = -q^{m-n} (twisted).

#include <cstdint>
#include <string>
#include <vector>

#include "laxforge/verifier.hpp"

namespace laxforge {

enum class SpectralKind { untwisted, twisted };

std::string to_string(SpectralKind k);
SpectralKind spectral_kind_from_string(const std::string& s);

using RatFuncMatrix = GradedMatrixT<RatFunc>;

struct SpectralRMatrix {
  AlgebraPtr algebra;
  SpectralKind kind = SpectralKind::untwisted;
  RatFuncMatrix matrix;
};

/// sigma^a_a = q^{(eps_a,eps_a)/2} E^a_a - q^{-(eps_a,eps_a)/2} E^abar_abar, one per position.
std::vector<GradedMatrix> sigma_hat_diag(const AlgebraData& alg);

/// sum_{a,b} (-1)^{[a][b]} xi_a xi_b q^{(rho, eps_a - eps_b)} E^a_b (x) E^abar_bbar.
GradedMatrix build_E_tensor(const AlgebraData& alg);

/// I + (q^{1/2} - q^{-1/2}) sum_a (-1)^{[a]} E^a_a (x) sigma^a_a
///   + (q - 1/q) sum_{eps_a < eps_b} (-1)^{[b]} E^a_b (x) q^{h_{eps_a}} sigma_ba.
GradedMatrix braces_operator(const SigmaSet& sigma, const std::vector<GradedMatrix>& diag);

LaurentPoly spectral_xi(const AlgebraData& alg, SpectralKind kind);

SpectralRMatrix build_spectral_R(const AlgebraPtr& alg, SpectralKind kind, const GradedMatrix& r, const GradedMatrix& E);
SpectralRMatrix build_spectral_R(const AlgebraPtr& alg, SpectralKind kind);

/// Entries at z = z0 (a Laurent polynomial in s), as (num, den) pairs cleared
/// into a single matrix equality test: returns the first position where
/// num != expected * den, if any. Throws PoleError for an identically vanishing denominator.
CheckReport check_spectral_endpoint(const SpectralRMatrix& r, const LaurentPoly& z0, const GradedMatrix& expected,
                                    const std::string& relation);

/// Braces identity, r(1) = P, r(0) = r/q, and the z-degree bound.
CheckReport check_spectral_identities(const SpectralRMatrix& r, const SigmaSet& sigma);

/// Exact evaluation. Throws PoleError naming the vanishing denominator.
RationalMatrix evaluate_spectral(const SpectralRMatrix& r, const Rational& s0, const Rational& z0);

/// r12(z) r13(zw) r23(w) = r23(w) r13(zw) r12(z) at seeded pseudo-random
/// rational points off the pole divisor.
CheckReport check_spectral_ybe(const SpectralRMatrix& r, int samples, std::uint64_t seed);

/// Convenience wrapper building the matrix first.
CheckReport check_spectral_ybe(const AlgebraPtr& alg, SpectralKind kind, int samples, std::uint64_t seed);

}  // namespace laxforge
