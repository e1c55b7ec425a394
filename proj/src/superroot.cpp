#include "laxforge/superroot.hpp"

#include <algorithm>

#include "laxforge/error.hpp"

namespace laxforge {

bool Weight::is_zero() const {
  auto z = [](const Rational& r) { return laxforge::is_zero(r); };
  return std::all_of(eps.begin(), eps.end(), z) && std::all_of(delta.begin(), delta.end(), z);
}

Weight Weight::operator-() const { return Rational(-1) * *this; }

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (std::size_t i = 0; i < r.eps.size(); ++i) r.eps[i] += b.eps[i];
  for (std::size_t i = 0; i < r.delta.size(); ++i) r.delta[i] += b.delta[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

Weight operator*(const Rational& c, const Weight& w) {
  Weight r = w;
  for (auto& x : r.eps) x *= c;
  for (auto& x : r.delta) x *= c;
  return r;
}

std::string Weight::to_string() const {
  std::string out;
  auto put = [&out](const Rational& c, const std::string& name) {
    if (laxforge::is_zero(c)) return;
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    const Rational a = abs(c);
    if (a != 1) out += format_rational(a) + "*";
    out += name;
  };
  for (std::size_t i = 0; i < eps.size(); ++i) put(eps[i], "e" + std::to_string(i + 1));
  for (std::size_t i = 0; i < delta.size(); ++i) put(delta[i], "d" + std::to_string(i + 1));
  return out.empty() ? "0" : out;
}

Rational bilinear(const Weight& w1, const Weight& w2) {
  Rational r = 0;
  for (std::size_t i = 0; i < w1.eps.size(); ++i) r += w1.eps[i] * w2.eps[i];
  for (std::size_t i = 0; i < w1.delta.size(); ++i) r -= w1.delta[i] * w2.delta[i];
  return r;
}

int AlgebraData::even_pos(int i) const {
  if (i < 1 || i > m) throw InvalidInput("even index out of range: " + std::to_string(i));
  return k + i - 1;
}

int AlgebraData::odd_pos(int mu) const {
  if (mu < 1 || mu > n) throw InvalidInput("odd index out of range: " + std::to_string(mu));
  return mu <= k ? mu - 1 : m + mu - 1;
}

int AlgebraData::position(const std::string& label) const {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InvalidInput("unknown basis label '" + label + "'");
  return static_cast<int>(it - labels.begin());
}

std::optional<std::size_t> AlgebraData::root_index(const std::string& label) const {
  for (std::size_t r = 0; r < simple_roots.size(); ++r) {
    if (simple_roots[r].label == label) return r;
  }
  return std::nullopt;
}

const SimpleRoot& AlgebraData::root(const std::string& label) const {
  auto r = root_index(label);
  if (!r) throw InvalidInput("unknown simple root '" + label + "'");
  return simple_roots[*r];
}

Order AlgebraData::compare(int a, int b) const {
  if (a == b) throw InvalidInput("compare: identical indices");
  return a < b ? Order::gt : Order::lt;
}

bool AlgebraData::is_positive(const Weight& w) {
  for (const auto& x : w.delta) {
    if (!laxforge::is_zero(x)) return sgn(x) > 0;
  }
  for (const auto& x : w.eps) {
    if (!laxforge::is_zero(x)) return sgn(x) > 0;
  }
  return false;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw RelationViolation(what, "");
}

}  // namespace

AlgebraPtr build_algebra(int m, int n) {
  if (m <= 2) throw UnsupportedRank("this construction is only valid for m > 2 (got m = " + std::to_string(m) + ")");
  if (n < 0 || n % 2 != 0) throw InvalidInput("n must be even and non-negative (got n = " + std::to_string(n) + ")");

  auto alg = std::make_shared<AlgebraData>();
  AlgebraData& A = *alg;
  A.m = m;
  A.n = n;
  A.l = m / 2;
  A.k = n / 2;
  const int l = A.l, k = A.k, N = m + n;
  const auto L = static_cast<std::size_t>(l), K = static_cast<std::size_t>(k);

  A.grading.assign(static_cast<std::size_t>(N), 0);
  A.bar.assign(static_cast<std::size_t>(N), 0);
  A.xi.assign(static_cast<std::size_t>(N), 1);
  A.weights.assign(static_cast<std::size_t>(N), Weight(L, K));
  A.labels.resize(static_cast<std::size_t>(N));

  for (int i = 1; i <= m; ++i) {
    const auto p = static_cast<std::size_t>(A.even_pos(i));
    A.labels[p] = "i" + std::to_string(i);
    A.bar[p] = A.even_pos(m + 1 - i);
    if (i <= l) A.weights[p].eps[static_cast<std::size_t>(i - 1)] = 1;
    else if (i >= m + 1 - l) A.weights[p].eps[static_cast<std::size_t>(m - i)] = -1;
  }
  for (int mu = 1; mu <= n; ++mu) {
    const auto p = static_cast<std::size_t>(A.odd_pos(mu));
    A.labels[p] = "mu" + std::to_string(mu);
    A.grading[p] = 1;
    A.bar[p] = A.odd_pos(n + 1 - mu);
    A.xi[p] = mu % 2 == 0 ? 1 : -1;
    if (mu <= k) A.weights[p].delta[static_cast<std::size_t>(mu - 1)] = 1;
    else A.weights[p].delta[static_cast<std::size_t>(n - mu)] = -1;
  }

  auto eps = [&](int i) { return A.weights[static_cast<std::size_t>(A.even_pos(i))]; };
  auto del = [&](int mu) { return A.weights[static_cast<std::size_t>(A.odd_pos(mu))]; };
  for (int mu = 1; mu < k; ++mu) {
    A.simple_roots.push_back({"alpha_mu" + std::to_string(mu), del(mu) - del(mu + 1), 0, A.odd_pos(mu), A.odd_pos(mu + 1), -1});
  }
  if (k > 0) A.simple_roots.push_back({"alpha_s", del(k) - eps(1), 1, A.odd_pos(k), A.even_pos(1), -1});
  for (int i = 1; i < l; ++i) {
    A.simple_roots.push_back({"alpha_i" + std::to_string(i), eps(i) - eps(i + 1), 0, A.even_pos(i), A.even_pos(i + 1), 1});
  }
  if (m == 2 * l) {
    A.simple_roots.push_back({"alpha_l", eps(l - 1) + eps(l), 0, A.even_pos(l - 1), A.even_pos(m + 1 - l), 1});
  } else {
    A.simple_roots.push_back({"alpha_l", eps(l), 0, A.even_pos(l), A.even_pos(l + 1), 1});
  }

  const std::size_t R = A.simple_roots.size();
  A.cartan.assign(R, std::vector<Rational>(R));
  for (std::size_t b = 0; b < R; ++b) {
    const Weight& ab = A.simple_roots[b].weight;
    const Rational norm = bilinear(ab, ab);
    for (std::size_t c = 0; c < R; ++c) {
      const Rational p = bilinear(ab, A.simple_roots[c].weight);
      A.cartan[b][c] = laxforge::is_zero(norm) ? p : Rational(2 * p / norm);
    }
  }

  A.rho = Weight(L, K);
  for (int i = 1; i <= l; ++i) A.rho.eps[static_cast<std::size_t>(i - 1)] = make_rational(m - 2 * i, 2);
  for (int mu = 1; mu <= k; ++mu) A.rho.delta[static_cast<std::size_t>(mu - 1)] = make_rational(n - m + 2 - 2 * mu, 2);

  A.order.resize(static_cast<std::size_t>(N));
  for (int p = 0; p < N; ++p) A.order[static_cast<std::size_t>(p)] = p;

  // invariants
  int zero_weights = 0;
  for (int p = 0; p < N; ++p) {
    const auto up = static_cast<std::size_t>(p);
    const auto bp = static_cast<std::size_t>(A.bar[up]);
    require(A.bar[bp] == p, "bar is an involution");
    require(A.weights[bp] == -A.weights[up], "weight(bar a) = -weight(a)");
    if (A.weights[up].is_zero()) {
      ++zero_weights;
      require(A.bar[up] == p, "zero weight index is self-barred");
    }
    for (int q = p + 1; q < N; ++q) {
      require(AlgebraData::is_positive(A.difference(p, q)), "layout is in descending weight order");
    }
  }
  require(zero_weights == (m % 2), "exactly one zero weight iff m is odd");
  for (std::size_t b = 0; b < R; ++b) {
    const auto& r = A.simple_roots[b];
    require(bilinear(A.rho, r.weight) == bilinear(r.weight, r.weight) / 2, "(rho, alpha) = (alpha, alpha)/2 for " + r.label);
    require(AlgebraData::is_positive(r.weight), r.label + " is positive");
    require(laxforge::is_zero(bilinear(r.weight, r.weight)) == (r.label == "alpha_s"), "alpha_s is the only isotropic simple root");
    if (!laxforge::is_zero(bilinear(r.weight, r.weight))) require(A.cartan[b][b] == 2, "a_bb = 2");
  }
  return alg;
}

std::vector<std::pair<int, int>> extended_pairs(const AlgebraData& alg) {
  std::vector<std::pair<int, int>> out;
  for (int b = 0; b < alg.dim(); ++b) {
    for (int a = b + 1; a < alg.dim(); ++a) out.emplace_back(b, a);
  }
  return out;
}

}  // namespace laxforge
