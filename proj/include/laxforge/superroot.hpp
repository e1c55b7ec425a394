#pragma once

// Combinatorial data of osp(m|n): basis layout, gradings, bar map, metric
// signs, weights, simple roots, Cartan matrix and rho.
//
// Basis positions are 0-based internally and run in descending weight order:
//   odd mu = 1..k, even i = 1..m, odd mu = k+1..n.
// Files and labels ("mu1", "i3") are 1-based.

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laxforge/qring.hpp"

namespace laxforge {

/// Coordinates in the basis eps_1..eps_l, delta_1..delta_k.
struct Weight {
  std::vector<Rational> eps;
  std::vector<Rational> delta;

  Weight() = default;
  Weight(std::size_t l, std::size_t k) : eps(l), delta(k) {}

  bool is_zero() const;
  Weight operator-() const;
  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator*(const Rational& c, const Weight& w);
  friend bool operator==(const Weight& a, const Weight& b) { return a.eps == b.eps && a.delta == b.delta; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

  /// e.g. "1/2*e1 - 1/2*d1", "0" for the zero weight.
  std::string to_string() const;
};

/// (eps_i, eps_j) = delta_ij, (delta_mu, delta_nu) = -delta_mu,nu, mixed pairings vanish.
Rational bilinear(const Weight& w1, const Weight& w2);

/// Simple root alpha with e = pi(sigma^upper_lower) and f = f_sign * pi(sigma^lower_upper).
struct SimpleRoot {
  std::string label;  // alpha_mu<j>, alpha_s, alpha_i<j>, alpha_l
  Weight weight;
  int parity = 0;
  int upper = 0;  // basis positions
  int lower = 0;
  int f_sign = 1;
};

enum class Order { lt, gt };

class AlgebraData {
 public:
  int m = 0, n = 0, l = 0, k = 0;

  int dim() const { return static_cast<int>(grading.size()); }

  std::vector<int> grading;
  std::vector<int> bar;
  std::vector<int> xi;
  std::vector<Weight> weights;
  std::vector<std::string> labels;
  std::vector<SimpleRoot> simple_roots;
  std::vector<std::vector<Rational>> cartan;
  Weight rho;
  std::vector<int> order;  // positions sorted by descending weight

  /// Position of even index i (1..m) and odd index mu (1..n).
  int even_pos(int i) const;
  int odd_pos(int mu) const;

  /// "i3" -> position, "mu2" -> position; throws InvalidInput.
  int position(const std::string& label) const;

  const SimpleRoot& root(const std::string& label) const;
  std::optional<std::size_t> root_index(const std::string& label) const;

  /// Weight of eps_b - eps_a for basis positions.
  Weight difference(int b, int a) const { return weights[static_cast<std::size_t>(b)] - weights[static_cast<std::size_t>(a)]; }

  /// gt iff eps_a > eps_b. Throws InvalidInput for a == b.
  Order compare(int a, int b) const;

  /// First nonzero coordinate in the order delta_1..delta_k, eps_1..eps_l is positive.
  static bool is_positive(const Weight& w);
};

using AlgebraPtr = std::shared_ptr<const AlgebraData>;

/// Throws UnsupportedRank for m <= 2 and InvalidInput for odd or negative n.
AlgebraPtr build_algebra(int m, int n);

inline const Weight& rho(const AlgebraData& alg) { return alg.rho; }
inline const std::vector<int>& weight_order(const AlgebraData& alg) { return alg.order; }

/// All (b, a) with eps_b > eps_a, i.e. position b < position a.
std::vector<std::pair<int, int>> extended_pairs(const AlgebraData& alg);

}  // namespace laxforge
