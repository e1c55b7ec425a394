#include "laxforge/spectral.hpp"

#include <random>

#include "laxforge/error.hpp"

namespace laxforge {

std::string to_string(SpectralKind k) { return k == SpectralKind::untwisted ? "untwisted" : "twisted"; }

SpectralKind spectral_kind_from_string(const std::string& s) {
  if (s == "untwisted") return SpectralKind::untwisted;
  if (s == "twisted") return SpectralKind::twisted;
  throw InvalidInput("unknown spectral kind '" + s + "' (expected untwisted or twisted)");
}

std::vector<GradedMatrix> sigma_hat_diag(const AlgebraData& alg) {
  const GradedSpace V = vector_space(alg);
  std::vector<GradedMatrix> out;
  for (int a = 0; a < alg.dim(); ++a) {
    const auto ua = static_cast<std::size_t>(a);
    const Rational norm = bilinear(alg.weights[ua], alg.weights[ua]);
    GradedMatrix X = GradedMatrix::elementary(V, a, a, LaurentPoly::q_power(norm / 2));
    X.add_to(alg.bar[ua], alg.bar[ua], -LaurentPoly::q_power(-norm / 2));
    out.push_back(std::move(X));
  }
  return out;
}

GradedMatrix build_E_tensor(const AlgebraData& alg) {
  const GradedSpace V = vector_space(alg);
  GradedMatrix E(GradedSpace::tensor(V, V));
  for (int a = 0; a < alg.dim(); ++a) {
    for (int b = 0; b < alg.dim(); ++b) {
      const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
      int sign = alg.xi[ua] * alg.xi[ub];
      if (alg.grading[ua] * alg.grading[ub] == 1) sign = -sign;
      const LaurentPoly c = LaurentPoly::q_power(bilinear(alg.rho, alg.difference(a, b))) * LaurentPoly(sign);
      E += c * graded_kron(GradedMatrix::elementary(V, a, b), GradedMatrix::elementary(V, alg.bar[ua], alg.bar[ub]));
    }
  }
  return E;
}

GradedMatrix braces_operator(const SigmaSet& sigma, const std::vector<GradedMatrix>& diag) {
  const AlgebraData& A = *sigma.algebra;
  const Representation& W = *sigma.rep;
  const GradedSpace V = vector_space(A);
  const LaurentPoly half = LaurentPoly::q_power(Rational(1, 2)) - LaurentPoly::q_power(Rational(-1, 2));
  const LaurentPoly qmqi = LaurentPoly::q_minus_qinv();
  GradedMatrix out = GradedMatrix::identity(GradedSpace::tensor(V, W.space));
  for (int a = 0; a < A.dim(); ++a) {
    const LaurentPoly c = half * LaurentPoly(A.grading[static_cast<std::size_t>(a)] ? -1 : 1);
    out += c * graded_kron(GradedMatrix::elementary(V, a, a), diag[static_cast<std::size_t>(a)]);
  }
  for (const auto& [b, a] : extended_pairs(A)) {
    const GradedMatrix tilde = qh_diag(W, A.weights[static_cast<std::size_t>(a)], 1) * sigma.at(b, a);
    const LaurentPoly c = qmqi * LaurentPoly(A.grading[static_cast<std::size_t>(b)] ? -1 : 1);
    out += c * graded_kron(GradedMatrix::elementary(V, a, b), tilde);
  }
  return out;
}

LaurentPoly spectral_xi(const AlgebraData& alg, SpectralKind kind) {
  return kind == SpectralKind::untwisted ? LaurentPoly::q_power(alg.m - alg.n - 2) : -LaurentPoly::q_power(alg.m - alg.n);
}

namespace {

struct Coefficients {
  RatFunc c1, c2, c3;
};

Coefficients coefficients(const AlgebraData& alg, SpectralKind kind) {
  const LaurentPoly q = LaurentPoly::q_power(1);
  const LaurentPoly qi = LaurentPoly::q_power(-1);
  const LaurentPoly qmqi = LaurentPoly::q_minus_qinv();
  const ZPoly z = ZPoly::z_power(1);
  const ZPoly one(LaurentPoly(1));
  const ZPoly d1 = ZPoly(q) - z * ZPoly(qi);  // q - z/q
  const ZPoly d2 = z - ZPoly(spectral_xi(alg, kind));
  Coefficients c;
  c.c1 = RatFunc(ZPoly(qmqi) * z, d1);
  c.c2 = RatFunc(ZPoly(-qmqi) * z * (z - one), d1 * d2);
  c.c3 = RatFunc(-(z - one), d1);
  return c;
}

}  // namespace

SpectralRMatrix build_spectral_R(const AlgebraPtr& alg, SpectralKind kind, const GradedMatrix& r, const GradedMatrix& E) {
  const GradedSpace V = vector_space(*alg);
  const GradedMatrix P = graded_permutation(V);
  const Coefficients c = coefficients(*alg, kind);
  SpectralRMatrix out;
  out.algebra = alg;
  out.kind = kind;
  out.matrix = RatFuncMatrix(GradedSpace::tensor(V, V));
  auto add = [&](const RatFunc& coeff, const GradedMatrix& M) {
    M.for_each([&](int row, int col, const LaurentPoly& v) { out.matrix.add_to(row, col, coeff * RatFunc(v)); });
  };
  add(c.c1, P);
  add(c.c2, E);
  add(c.c3, r);
  return out;
}

SpectralRMatrix build_spectral_R(const AlgebraPtr& alg, SpectralKind kind) {
  const SigmaSet sigma = extend_sigma(init_simple_sigma(build_vector_rep(alg)));
  const GradedMatrix r = assemble_R(sigma).matrix;
  SpectralRMatrix out = build_spectral_R(alg, kind, r, build_E_tensor(*alg));
  const CheckReport at1 = check_spectral_endpoint(out, LaurentPoly(1), graded_permutation(vector_space(*alg)), "r(1) = P");
  if (!at1.passed) throw RelationViolation("r(1) = P", at1.summary());
  const CheckReport at0 = check_spectral_endpoint(out, LaurentPoly(0), LaurentPoly::q_power(-1) * r, "r(0) = r/q");
  if (!at0.passed) throw RelationViolation("r(0) = r/q", at0.summary());
  return out;
}

CheckReport check_spectral_endpoint(const SpectralRMatrix& r, const LaurentPoly& z0, const GradedMatrix& expected,
                                    const std::string& relation) {
  ReportBuilder rb("spectral-" + to_string(r.kind));
  GradedMatrix lhs(r.matrix.space());
  GradedMatrix rhs = expected;
  r.matrix.for_each([&](int row, int col, const RatFunc& f) {
    auto [num, den] = f.substitute(z0);
    lhs.set(row, col, num);
    rhs.set(row, col, expected.get(row, col) * den);
  });
  rb.compare(relation, lhs, rhs);
  return rb.finish();
}

CheckReport check_spectral_identities(const SpectralRMatrix& r, const SigmaSet& sigma) {
  ReportBuilder rb("spectral-" + to_string(r.kind));
  const AlgebraData& A = *r.algebra;
  const GradedMatrix rconst = assemble_R(sigma).matrix;
  rb.compare("braces = r", braces_operator(sigma, sigma_hat_diag(A)), rconst);

  for (const auto& rep : {check_spectral_endpoint(r, LaurentPoly(1), graded_permutation(vector_space(A)), "r(1) = P"),
                          check_spectral_endpoint(r, LaurentPoly(0), LaurentPoly::q_power(-1) * rconst, "r(0) = r/q")}) {
    rb.expect(rep.passed, rep.witness.value_or(Witness{}));
  }
  r.matrix.for_each([&](int row, int col, const RatFunc& f) {
    rb.expect(f.num().degree() <= 2 && f.den().degree() <= 2,
              Witness{"z-degree <= 2", row + 1, col + 1, f.num().to_string(), f.den().to_string()});
  });
  return rb.finish();
}

RationalMatrix evaluate_spectral(const SpectralRMatrix& r, const Rational& s0, const Rational& z0) {
  RationalMatrix out(r.matrix.space());
  r.matrix.for_each([&](int row, int col, const RatFunc& f) { out.set(row, col, f.eval(s0, z0)); });
  return out;
}

CheckReport check_spectral_ybe(const SpectralRMatrix& r, int samples, std::uint64_t seed) {
  if (samples < 1) throw InvalidInput("samples must be at least 1");
  ReportBuilder rb("spectral-" + to_string(r.kind));
  const GradedSpace V = vector_space(*r.algebra);
  const RationalMatrix I = RationalMatrix::identity(V);
  const RationalMatrix P12 = graded_kron(graded_permutation<Rational>(V), I);

  std::mt19937_64 rng(seed);
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  static const int bases[] = {2, 3, 5, 7};
  auto random_nonzero = [&]() {
    int p = 0;
    while (p == 0) p = pick(-9, 9);
    return make_rational(p, pick(1, 5));
  };

  const long max_attempts = 50L * samples;
  int done = 0;
  for (long attempt = 0; attempt < max_attempts && done < samples; ++attempt) {
    const Rational s0 = Rational(bases[pick(0, 3)]) * make_rational(pick(1, 3), pick(1, 3));
    if (s0 == 0 || s0 == 1 || s0 == -1) continue;
    const Rational z0 = random_nonzero();
    const Rational w0 = random_nonzero();
    const Rational zw = z0 * w0;
    RationalMatrix Rz, Rw, Rzw;
    try {
      Rz = evaluate_spectral(r, s0, z0);
      Rw = evaluate_spectral(r, s0, w0);
      Rzw = evaluate_spectral(r, s0, zw);
    } catch (const PoleError&) {
      continue;
    }
    const RationalMatrix R12 = graded_kron(Rz, I);
    const RationalMatrix R23 = graded_kron(I, Rw);
    const RationalMatrix R13 = P12 * graded_kron(I, Rzw) * P12;
    rb.compare("r12(z) r13(zw) r23(w) = r23(w) r13(zw) r12(z) at s=" + format_rational(s0) + " z=" + format_rational(z0) +
                   " w=" + format_rational(w0),
               R12 * R13 * R23, R23 * R13 * R12);
    ++done;
  }
  if (done < samples) {
    throw SamplingError("only " + std::to_string(done) + " of " + std::to_string(samples) +
                        " samples avoided the poles; retry with another seed");
  }
  return rb.finish();
}

CheckReport check_spectral_ybe(const AlgebraPtr& alg, SpectralKind kind, int samples, std::uint64_t seed) {
  return check_spectral_ybe(build_spectral_R(alg, kind), samples, seed);
}

}  // namespace laxforge
