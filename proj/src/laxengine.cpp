#include "laxforge/laxengine.hpp"

#include <algorithm>
#include <stdexcept>

#include "laxforge/error.hpp"

namespace laxforge {

std::string to_string(ProvenanceKind k) {
  switch (k) {
    case ProvenanceKind::simple: return "simple";
    case ProvenanceKind::recursed: return "recursed";
    case ProvenanceKind::closed_form: return "closed_form";
    case ProvenanceKind::forced_zero: return "forced_zero";
  }
  return "?";
}

ProvenanceKind provenance_from_string(const std::string& s) {
  if (s == "simple") return ProvenanceKind::simple;
  if (s == "recursed") return ProvenanceKind::recursed;
  if (s == "closed_form") return ProvenanceKind::closed_form;
  if (s == "forced_zero") return ProvenanceKind::forced_zero;
  throw SchemaError("unknown provenance '" + s + "'");
}

std::string to_string(RKind k) {
  switch (k) {
    case RKind::lax: return "lax";
    case RKind::vector: return "vector";
    case RKind::opposite: return "opposite";
  }
  return "?";
}

const GradedMatrix& SigmaSet::at(int b, int a) const {
  auto it = sigma.find({b, a});
  if (it == sigma.end()) {
    throw InvalidInput("sigma(" + algebra->labels[static_cast<std::size_t>(b)] + "," +
                       algebra->labels[static_cast<std::size_t>(a)] + ") is not available");
  }
  return it->second;
}

bool SigmaSet::complete() const {
  for (const auto& p : extended_pairs(*algebra)) {
    if (!sigma.count(p)) return false;
  }
  return true;
}

SigmaSet init_simple_sigma(const RepresentationPtr& rep) {
  const AlgebraData& A = *rep->algebra;
  SigmaSet S;
  S.algebra = rep->algebra;
  S.rep = rep;
  const int m = A.m, n = A.n, l = A.l, k = A.k;
  auto I = [&](int i) { return A.even_pos(i); };
  auto Ib = [&](int i) { return A.even_pos(m + 1 - i); };
  auto M = [&](int mu) { return A.odd_pos(mu); };
  auto Mb = [&](int mu) { return A.odd_pos(n + 1 - mu); };
  auto put = [&](int b, int a, GradedMatrix X, ProvenanceKind kind = ProvenanceKind::simple) {
    X.with_parity((A.grading[static_cast<std::size_t>(b)] + A.grading[static_cast<std::size_t>(a)]) % 2);
    S.sigma[{b, a}] = std::move(X);
    S.provenance[{b, a}] = {kind, -1};
  };
  auto Eop = [&](const std::string& label) { return raise_op(*rep, *A.root_index(label)); };
  const LaurentPoly qh = LaurentPoly::q_power(Rational(1, 2));
  const LaurentPoly qmh = LaurentPoly::q_power(Rational(-1, 2));

  for (int i = 1; i < l; ++i) {
    const GradedMatrix v = qh * Eop("alpha_i" + std::to_string(i));
    put(I(i), I(i + 1), v);
    put(Ib(i + 1), Ib(i), -v);
  }
  if (m == 2 * l) {
    const GradedMatrix v = qh * Eop("alpha_l");
    put(I(l - 1), Ib(l), v);
    put(I(l), Ib(l - 1), -v);
    put(I(l), Ib(l), GradedMatrix(rep->space), ProvenanceKind::forced_zero);
  } else {
    const GradedMatrix v = Eop("alpha_l");
    put(I(l), I(l + 1), v);
    put(I(l + 1), Ib(l), -qh * v);
  }
  for (int mu = 1; mu < k; ++mu) {
    const GradedMatrix v = qmh * Eop("alpha_mu" + std::to_string(mu));
    put(M(mu), M(mu + 1), v);
    put(Mb(mu + 1), Mb(mu), v);
  }
  if (k > 0) {
    const GradedMatrix v = qh * Eop("alpha_s");
    put(M(k), I(1), v);
    put(Ib(1), Mb(k), LaurentPoly::monomial(-2, k % 2 == 0 ? 1 : -1) * v);
  }
  return S;
}

int construction_step(const AlgebraData& alg, int b, int a) {
  const int m = alg.m, k = alg.k;
  const int half = (m + 1) / 2;
  auto even_index = [&](int p) { return p - k + 1; };
  auto upper = [&](int p) { return even_index(p) <= half; };
  auto lower = [&](int p) { return even_index(p) >= m + 1 - half; };
  auto low_odd = [&](int p) { return p < k; };
  const int gb = alg.grading[static_cast<std::size_t>(b)];
  const int ga = alg.grading[static_cast<std::size_t>(a)];
  if (gb == 0 && ga == 0) return ((upper(b) && upper(a)) || (lower(b) && lower(a))) ? 1 : 4;
  if (gb == 1 && ga == 1) return low_odd(b) == low_odd(a) ? 2 : 6;
  if (gb == 1) return upper(a) ? 3 : 5;  // b = mu <= k, a even
  return lower(b) ? 3 : 5;               // b even, a = mu > k
}

bool admissible_intermediate(const AlgebraData& alg, int b, int a, int c) {
  return b < c && c < a && c != alg.bar[static_cast<std::size_t>(b)] && c != alg.bar[static_cast<std::size_t>(a)];
}

GradedMatrix induction_step(const SigmaSet& s, int b, int a, int c) {
  const AlgebraData& A = *s.algebra;
  const auto ub = static_cast<std::size_t>(b), ua = static_cast<std::size_t>(a), uc = static_cast<std::size_t>(c);
  const GradedMatrix& sbc = s.at(b, c);
  const GradedMatrix& sca = s.at(c, a);
  const LaurentPoly t1 = LaurentPoly::q_power(-bilinear(A.weights[ub], A.weights[ua]));
  const int sign = ((A.grading[ub] + A.grading[uc]) * (A.grading[ua] + A.grading[uc])) % 2 == 1 ? -1 : 1;
  const LaurentPoly t2 = LaurentPoly::q_power(-bilinear(A.weights[uc], A.weights[uc])) * LaurentPoly(-sign);
  return t1 * (sbc * sca) + t2 * (sca * sbc);
}

SigmaSet extend_sigma(SigmaSet S) {
  const AlgebraData& A = *S.algebra;
  for (int step = 1; step <= 6; ++step) {
    std::vector<PairKey> todo;
    for (const auto& [b, a] : extended_pairs(A)) {
      if (construction_step(A, b, a) == step && !S.contains(b, a)) todo.emplace_back(b, a);
    }
    std::stable_sort(todo.begin(), todo.end(),
                     [](const PairKey& x, const PairKey& y) { return x.second - x.first < y.second - y.first; });
    for (const auto& [b, a] : todo) {
      int via = -1;
      for (int c = b + 1; c < a; ++c) {
        if (admissible_intermediate(A, b, a, c) && S.contains(b, c) && S.contains(c, a)) {
          via = c;
          break;
        }
      }
      if (via < 0) {
        throw std::logic_error("no admissible intermediate for sigma(" + A.labels[static_cast<std::size_t>(b)] + "," +
                               A.labels[static_cast<std::size_t>(a)] + ") in step " + std::to_string(step));
      }
      GradedMatrix X = induction_step(S, b, a, via);
      X.with_parity((A.grading[static_cast<std::size_t>(b)] + A.grading[static_cast<std::size_t>(a)]) % 2);
      S.sigma[{b, a}] = std::move(X);
      S.provenance[{b, a}] = {ProvenanceKind::recursed, via};
    }
  }
  return S;
}

SigmaSet closed_form_sigma(const AlgebraPtr& alg) {
  const AlgebraData& A = *alg;
  SigmaSet S;
  S.algebra = alg;
  S.rep = build_vector_rep(alg);
  const GradedSpace V = vector_space(A);
  for (const auto& [b, a] : extended_pairs(A)) {
    const auto ub = static_cast<std::size_t>(b), ua = static_cast<std::size_t>(a);
    int sign = A.xi[ua] * A.xi[ub];
    if (A.grading[ub] * (A.grading[ua] + A.grading[ub]) % 2 == 1) sign = -sign;
    const Rational ex = bilinear(A.rho, A.difference(a, b));
    GradedMatrix tilde = GradedMatrix::elementary(V, b, a);
    tilde.add_to(A.bar[ua], A.bar[ub], LaurentPoly::q_power(ex) * LaurentPoly(-sign));
    GradedMatrix X = qh_diag(*S.rep, A.weights[ua], -1) * tilde;
    X.with_parity((A.grading[ub] + A.grading[ua]) % 2);
    S.sigma[{b, a}] = std::move(X);
    S.provenance[{b, a}] = {ProvenanceKind::closed_form, -1};
  }
  return S;
}

namespace {

GradedMatrix sign_times(int sign, const GradedMatrix& X) { return sign < 0 ? -X : X; }

}  // namespace

RTensor assemble_R(const SigmaSet& sigma) {
  if (!sigma.complete()) throw InvalidInput("sigma set is incomplete");
  const AlgebraData& A = *sigma.algebra;
  const Representation& W = *sigma.rep;
  const GradedSpace V = vector_space(A);
  const LaurentPoly qmqi = LaurentPoly::q_minus_qinv();

  GradedMatrix R(GradedSpace::tensor(V, W.space));
  for (int a = 0; a < A.dim(); ++a) {
    R += graded_kron(GradedMatrix::elementary(V, a, a), qh_diag(W, A.weights[static_cast<std::size_t>(a)], 1));
  }
  for (const auto& [b, a] : extended_pairs(A)) {
    const GradedMatrix X = qh_diag(W, A.weights[static_cast<std::size_t>(a)], 1) * sigma.at(b, a);
    R += qmqi * sign_times(A.grading[static_cast<std::size_t>(b)] ? -1 : 1, graded_kron(GradedMatrix::elementary(V, a, b), X));
  }

  // weightless: commutes with q^{h_w} (x) q^{h_w}
  for (const auto& r : A.simple_roots) {
    const GradedMatrix D = graded_kron(qh_diag(V, A.weights, r.weight, 1), qh_diag(W, r.weight, 1));
    if (auto pos = first_difference(R * D, D * R)) {
      throw RelationViolation("R is weightless", "q^{h} for " + r.label + " at entry " + std::to_string(pos->first + 1) + "," +
                                                     std::to_string(pos->second + 1));
    }
  }

  RTensor out;
  out.kind = (W.space == V && W.weights == A.weights && W.name == "vector") ? RKind::vector : RKind::lax;
  out.matrix = std::move(R);
  out.v_dim = A.dim();
  out.w_dim = W.dim();
  return out;
}

GradedMatrix opposite_sigma(const SigmaSet& sigma, int b, int a) {
  const AlgebraData& A = *sigma.algebra;
  const int gb = A.grading[static_cast<std::size_t>(b)], ga = A.grading[static_cast<std::size_t>(a)];
  return sign_times((gb * (ga + gb)) % 2 ? -1 : 1, graded_dagger(sigma.at(b, a)));
}

GradedMatrix opposite_matrix(const SigmaSet& sigma) {
  if (!sigma.complete()) throw InvalidInput("sigma set is incomplete");
  const AlgebraData& A = *sigma.algebra;
  const Representation& W = *sigma.rep;
  const GradedSpace V = vector_space(A);
  const LaurentPoly qmqi = LaurentPoly::q_minus_qinv();

  GradedMatrix RT(GradedSpace::tensor(V, W.space));
  for (int a = 0; a < A.dim(); ++a) {
    RT += graded_kron(GradedMatrix::elementary(V, a, a), qh_diag(W, A.weights[static_cast<std::size_t>(a)], 1));
  }
  for (const auto& [b, a] : extended_pairs(A)) {
    const GradedMatrix X = opposite_sigma(sigma, b, a) * qh_diag(W, A.weights[static_cast<std::size_t>(a)], 1);
    RT += qmqi * sign_times(A.grading[static_cast<std::size_t>(a)] ? -1 : 1, graded_kron(GradedMatrix::elementary(V, b, a), X));
  }
  return RT;
}

RTensor opposite_R(const SigmaSet& sigma) {
  const AlgebraData& A = *sigma.algebra;
  const Representation& W = *sigma.rep;
  const GradedSpace V = vector_space(A);
  GradedMatrix RT = opposite_matrix(sigma);
  const RTensor R = assemble_R(sigma);
  if (auto pos = first_difference(RT, graded_dagger(R.matrix))) {
    throw RelationViolation("R^T = dagger(R)", "entry " + std::to_string(pos->first + 1) + "," + std::to_string(pos->second + 1));
  }
  if (R.kind == RKind::vector) {
    const GradedMatrix P = graded_permutation(V);
    if (auto pos = first_difference(RT, P * R.matrix * P)) {
      throw RelationViolation("R^T = P R P", "entry " + std::to_string(pos->first + 1) + "," + std::to_string(pos->second + 1));
    }
  }
  RTensor out;
  out.kind = RKind::opposite;
  out.matrix = std::move(RT);
  out.v_dim = A.dim();
  out.w_dim = W.dim();
  return out;
}

}  // namespace laxforge
