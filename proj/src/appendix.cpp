// Families of identities among the sigma operators: consequences of the
// induction and q-commutation relations specialised to each simple root.
// "common" families hold for every m, "even"/"odd" families only for that
// parity of m.

#include "laxforge/verifier.hpp"

namespace laxforge {

std::vector<Relation> appendix_relations(const SigmaSet& sigma) {
  const AlgebraData& A = *sigma.algebra;
  const int m = A.m, n = A.n, l = A.l, k = A.k, N = A.dim();
  const GradedMatrix zero(sigma.rep->space);
  std::vector<Relation> out;

  auto I = [&](int x) { return A.even_pos(x); };
  auto Ib = [&](int x) { return A.even_pos(m + 1 - x); };
  auto M = [&](int x) { return A.odd_pos(x); };
  auto Mb = [&](int x) { return A.odd_pos(n + 1 - x); };
  auto s = [&](int b, int a) -> const GradedMatrix& { return sigma.at(b, a); };
  auto g = [&](int p) { return A.grading[static_cast<std::size_t>(p)]; };
  auto bl = [&](const Weight& w, int p) { return bilinear(w, A.weights[static_cast<std::size_t>(p)]); };
  auto Q = [](const Rational& t, int c = 1) { return LaurentPoly::q_power(t) * LaurentPoly(c); };
  auto sgn = [](int e) { return e % 2 ? -1 : 1; };
  auto lab = [&](int p) { return A.labels[static_cast<std::size_t>(p)]; };
  auto chk = [&](const std::string& id, GradedMatrix lhs, GradedMatrix rhs) {
    out.push_back({id, std::move(lhs), std::move(rhs)});
  };
  auto at_b = [&](const std::string& fam, int b) { return fam + "[b=" + lab(b) + "]"; };
  auto at_a = [&](const std::string& fam, int a) { return fam + "[a=" + lab(a) + "]"; };
  auto at_ba = [&](const std::string& fam, int b, int a) { return fam + "[" + lab(b) + "," + lab(a) + "]"; };
  const auto pairs = extended_pairs(A);
  const LaurentPoly qinv = Q(-1, -1);  // -1/q
  const LaurentPoly mq = Q(1, -1);     // -q

  for (int i = 1; i < l; ++i) {
    const std::string tag = "(i=" + std::to_string(i) + ")";
    const Weight& ai = A.root("alpha_i" + std::to_string(i)).weight;
    const GradedMatrix& si = s(I(i), I(i + 1));
    const GradedMatrix& sib = s(Ib(i + 1), Ib(i));
    for (int b = 0; b < N; ++b) {
      if (b < I(i)) chk(at_b("common-1" + tag, b), s(b, I(i + 1)), s(b, I(i)) * si + qinv * (si * s(b, I(i))));
      if (b < Ib(i + 1) && b != I(i + 1)) {
        chk(at_b("common-3" + tag, b), s(b, Ib(i)), Q(bl(ai, b)) * (s(b, Ib(i + 1)) * sib) + qinv * (sib * s(b, Ib(i + 1))));
      }
    }
    for (int a = 0; a < N; ++a) {
      if (a > Ib(i)) chk(at_a("common-2" + tag, a), s(Ib(i + 1), a), sib * s(Ib(i), a) + qinv * (s(Ib(i), a) * sib));
      if (a > I(i + 1) && a != Ib(i + 1)) {
        chk(at_a("common-4" + tag, a), s(I(i), a), Q(-bl(ai, a)) * (si * s(I(i + 1), a)) + qinv * (s(I(i + 1), a) * si));
      }
    }
    const GradedMatrix& mid = s(I(i + 1), Ib(i + 1));
    chk("common-5" + tag, s(I(i + 1), Ib(i)) + s(I(i), Ib(i + 1)), Q(-1) * (si * mid - mid * si));
    for (const auto& [b, a] : pairs) {
      if (a == I(i) || a == Ib(i + 1) || b == I(i + 1) || b == Ib(i)) continue;
      chk(at_ba("common-6" + tag, b, a), Q(bl(ai, b)) * (s(b, a) * si) + Q(-bl(ai, a), -1) * (si * s(b, a)), zero);
    }
  }

  for (int mu = 1; mu < k; ++mu) {
    const std::string tag = "(mu=" + std::to_string(mu) + ")";
    const Weight& am = A.root("alpha_mu" + std::to_string(mu)).weight;
    const GradedMatrix& sm = s(M(mu), M(mu + 1));
    const GradedMatrix& smb = s(Mb(mu + 1), Mb(mu));
    for (int nu = 1; nu < mu; ++nu) {
      chk("common-7" + tag + "[nu=" + std::to_string(nu) + "]", s(M(nu), M(mu + 1)),
          s(M(nu), M(mu)) * sm + mq * (sm * s(M(nu), M(mu))));
      chk("common-8" + tag + "[nu=" + std::to_string(nu) + "]", s(Mb(mu + 1), Mb(nu)),
          smb * s(Mb(mu), Mb(nu)) + mq * (s(Mb(mu), Mb(nu)) * smb));
    }
    for (int b = 0; b < N; ++b) {
      if (b < Mb(mu + 1) && b != M(mu + 1)) {
        chk(at_b("common-9" + tag, b), s(b, Mb(mu)), Q(bl(am, b)) * (s(b, Mb(mu + 1)) * smb) + mq * (smb * s(b, Mb(mu + 1))));
      }
    }
    for (int a = 0; a < N; ++a) {
      if (a > M(mu + 1) && a != Mb(mu + 1)) {
        chk(at_a("common-10" + tag, a), s(M(mu), a), Q(-bl(am, a)) * (sm * s(M(mu + 1), a)) + mq * (s(M(mu + 1), a) * sm));
      }
    }
    const GradedMatrix& mid = s(M(mu + 1), Mb(mu + 1));
    chk("common-11" + tag, s(M(mu + 1), Mb(mu)) - s(M(mu), Mb(mu + 1)), Q(1) * (mid * sm - sm * mid));
    for (const auto& [b, a] : pairs) {
      if (a == M(mu) || a == Mb(mu + 1) || b == M(mu + 1) || b == Mb(mu)) continue;
      chk(at_ba("common-12" + tag, b, a), Q(bl(am, b)) * (s(b, a) * sm) + Q(-bl(am, a), -1) * (sm * s(b, a)), zero);
    }
  }

  if (k > 0) {
    const Weight& as = A.root("alpha_s").weight;
    const GradedMatrix& ss = s(M(k), I(1));
    const GradedMatrix& ssb = s(Ib(1), Mb(k));
    for (int nu = 1; nu < k; ++nu) {
      chk("common-13[nu=" + std::to_string(nu) + "]", s(M(nu), I(1)), s(M(nu), M(k)) * ss + mq * (ss * s(M(nu), M(k))));
      chk("common-14[nu=" + std::to_string(nu) + "]", s(Ib(1), Mb(nu)), ssb * s(Mb(k), Mb(nu)) + mq * (s(Mb(k), Mb(nu)) * ssb));
    }
    for (int a = 0; a < N; ++a) {
      if (a > I(1) && a != Ib(1)) {
        chk(at_a("common-15", a), s(M(k), a), Q(-bl(as, a)) * (ss * s(I(1), a)) + Q(-1, -sgn(g(a))) * (s(I(1), a) * ss));
      }
    }
    for (int b = 0; b < N; ++b) {
      if (b < Ib(1) && b != I(1)) {
        chk(at_b("common-16", b), s(b, Mb(k)), Q(bl(as, b)) * (s(b, Ib(1)) * ssb) + Q(-1, -sgn(g(b))) * (ssb * s(b, Ib(1))));
      }
    }
    const GradedMatrix& mid = s(I(1), Ib(1));
    chk("common-17", s(M(k), Ib(1)) + Q(1, -sgn(k)) * s(I(1), Mb(k)), Q(-1) * (ss * mid - mid * ss));
    for (const auto& [b, a] : pairs) {
      if (a == M(k) || a == Ib(1) || b == I(1) || b == Mb(k)) continue;
      chk(at_ba("common-18", b, a), Q(bl(as, b)) * (s(b, a) * ss) + Q(-bl(as, a), -sgn(g(a) + g(b))) * (ss * s(b, a)), zero);
    }
  }

  const Weight& al = A.root("alpha_l").weight;
  if (m == 2 * l) {
    const GradedMatrix& s1 = s(I(l), Ib(l - 1));
    const GradedMatrix& s2 = s(I(l - 1), Ib(l));
    for (int b = 0; b < N; ++b) {
      if (b < I(l)) chk(at_b("even-1", b), s(b, Ib(l - 1)), Q(bl(al, b)) * (s(b, I(l)) * s1) + qinv * (s1 * s(b, I(l))));
      if (b < I(l - 1)) chk(at_b("even-2", b), s(b, Ib(l)), s(b, I(l - 1)) * s2 + qinv * (s2 * s(b, I(l - 1))));
    }
    for (int a = 0; a < N; ++a) {
      if (a > Ib(l - 1)) chk(at_a("even-3", a), s(I(l), a), s1 * s(Ib(l - 1), a) + qinv * (s(Ib(l - 1), a) * s1));
      if (a > Ib(l)) chk(at_a("even-4", a), s(I(l - 1), a), Q(-bl(al, a)) * (s2 * s(Ib(l), a)) + qinv * (s(Ib(l), a) * s2));
    }
    for (const auto& [b, a] : pairs) {
      if (a == I(l) || a == I(l - 1) || b == Ib(l - 1) || b == Ib(l)) continue;
      chk(at_ba("even-5", b, a), Q(bl(al, b)) * (s(b, a) * s2) + Q(-bl(al, a), -1) * (s2 * s(b, a)), zero);
    }
  } else {
    const int z = I(l + 1);
    const GradedMatrix& s1 = s(I(l), z);
    const GradedMatrix& s2 = s(z, Ib(l));
    for (int b = 0; b < N; ++b) {
      if (b < I(l)) chk(at_b("odd-1", b), s(b, z), s(b, I(l)) * s1 + qinv * (s1 * s(b, I(l))));
      if (b < z) chk(at_b("odd-2", b), s(b, Ib(l)), Q(bl(al, b)) * (s(b, z) * s2) - s2 * s(b, z));
    }
    for (int a = 0; a < N; ++a) {
      if (a > z) chk(at_a("odd-3", a), s(I(l), a), Q(-bl(al, a)) * (s1 * s(z, a)) - s(z, a) * s1);
      if (a > Ib(l)) chk(at_a("odd-4", a), s(z, a), s2 * s(Ib(l), a) + qinv * (s(Ib(l), a) * s2));
    }
    for (const auto& [b, a] : pairs) {
      if (a == I(l) || a == z || b == z || b == Ib(l)) continue;
      chk(at_ba("odd-5", b, a), Q(bl(al, b)) * (s(b, a) * s1) + Q(-bl(al, a), -1) * (s1 * s(b, a)), zero);
    }
  }
  return out;
}

}  // namespace laxforge
