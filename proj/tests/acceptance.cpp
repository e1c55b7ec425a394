// Acceptance run: one PASS/FAIL line per criterion over the acceptance set.
//
//   acceptance [--known-failure N ...]
//
// Without --known-failure the exit status is 0 iff every criterion passes.
// With it, the exit status is 0 iff exactly the listed criteria fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "laxforge/error.hpp"
#include "laxforge/spectral.hpp"

using namespace laxforge;

namespace {

const std::vector<std::pair<int, int>> kA = {{3, 0}, {4, 0}, {5, 0}, {6, 0}, {3, 2}, {4, 2}, {5, 2}, {3, 4}, {5, 4}};

struct Case {
  AlgebraPtr alg;
  SigmaSet sigma;
  RTensor R;
};

const Case& get(int m, int n) {
  static std::map<std::pair<int, int>, Case> cache;
  auto it = cache.find({m, n});
  if (it == cache.end()) {
    const AlgebraPtr alg = build_algebra(m, n);
    SigmaSet s = extend_sigma(init_simple_sigma(build_vector_rep(alg)));
    RTensor R = assemble_R(s);
    it = cache.emplace(std::make_pair(m, n), Case{alg, std::move(s), std::move(R)}).first;
  }
  return it->second;
}

std::string tag(int m, int n) { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }

// Collects the first problem of a criterion; detail lines are informational.
struct Outcome {
  bool ok = true;
  std::string why;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
  void report(const CheckReport& r, const std::string& where) { require(r.passed, where + " " + r.summary()); }
};

RTensor opposite_of(const SigmaSet& s) {
  RTensor rT;
  rT.kind = RKind::opposite;
  rT.matrix = opposite_matrix(s);
  rT.v_dim = s.algebra->dim();
  rT.w_dim = s.rep->dim();
  return rT;
}

SpectralRMatrix spectral_of(const Case& c, SpectralKind k) {
  return build_spectral_R(c.alg, k, c.R.matrix, build_E_tensor(*c.alg));
}

Outcome c1() {
  Outcome o;
  for (auto [m, n] : kA) {
    const Case& c = get(m, n);
    const SigmaSet closed = closed_form_sigma(c.alg);
    for (const auto& [key, X] : closed.sigma) {
      o.require(c.sigma.contains(key.first, key.second) && c.sigma.at(key.first, key.second) == X,
                tag(m, n) + " sigma(" + c.alg->labels[key.first] + "," + c.alg->labels[key.second] + ") differs");
    }
    o.require(closed.sigma.size() == c.sigma.sigma.size(), tag(m, n) + " pair count differs");
  }
  return o;
}

Outcome c2() {
  Outcome o;
  const auto P = [](const char* t) { return LaurentPoly::parse(t); };
  {
    const Case& c = get(3, 0);
    const GradedSpace V = vector_space(*c.alg);
    GradedMatrix a = GradedMatrix::elementary(V, 0, 1);
    a.add_to(1, 2, -P("s^-1"));
    o.require(c.sigma.at(0, 1) == a, "(3,0) sigma_12");
    o.require(c.sigma.at(0, 2) == GradedMatrix::elementary(V, 0, 2, P("s^2 + -1")), "(3,0) sigma_13");
  }
  {
    const Case& c = get(3, 2);
    const GradedSpace V = vector_space(*c.alg);
    const int mu1 = c.alg->position("mu1"), mu2 = c.alg->position("mu2");
    const int i1 = c.alg->position("i1"), i3 = c.alg->position("i3");
    GradedMatrix a = GradedMatrix::elementary(V, mu1, i1);
    a.add_to(i3, mu2, -P("s^2"));
    o.require(c.sigma.at(mu1, i1) == a, "(3,2) sigma_mu1,i1");
    o.require(c.sigma.at(mu1, mu2) == GradedMatrix::elementary(V, mu1, mu2, P("s^-2 + s^-4")), "(3,2) sigma_mu1,mu2");
  }
  return o;
}

Outcome c3() {
  Outcome o;
  for (auto [m, n] : kA) o.report(check_ybe(get(m, n).R), tag(m, n));
  return o;
}

Outcome c4() {
  Outcome o;
  for (auto [m, n] : kA) o.report(check_intertwining(get(m, n).R, *get(m, n).sigma.rep), tag(m, n));
  return o;
}

Outcome c5() {
  Outcome o;
  for (auto [m, n] : kA) o.report(check_delta_property(get(m, n).sigma), tag(m, n));
  return o;
}

Outcome c6() {
  Outcome o;
  for (auto [m, n] : kA) o.report(check_opposite(get(m, n).R, opposite_of(get(m, n).sigma)), tag(m, n));
  return o;
}

Outcome c7() {
  Outcome o;
  std::size_t total = 0;
  for (auto [m, n] : kA) {
    const CheckReport r = check_path_independence(get(m, n).sigma);
    o.report(r, tag(m, n));
    total += r.relations_checked;
  }
  o.detail = std::to_string(total) + " paths";
  return o;
}

Outcome c8() {
  Outcome o;
  std::size_t total = 0;
  for (auto [m, n] : kA) {
    const SigmaSet& s = get(m, n).sigma;
    for (const CheckReport& r : {check_appendix(s), check_qcom(s)}) {
      o.report(r, tag(m, n));
      total += r.relations_checked;
    }
    bool even = false, odd = false;
    for (const auto& rel : appendix_relations(s)) {
      even |= rel.id.rfind("even-", 0) == 0;
      odd |= rel.id.rfind("odd-", 0) == 0;
    }
    o.require(!(m % 2 == 0 ? odd : even), tag(m, n) + " relation family for the wrong parity of m");
  }
  o.detail = std::to_string(total) + " relations";
  return o;
}

Outcome c9() {
  Outcome o;
  for (auto [m, n] : kA) o.report(check_qserre(*get(m, n).sigma.rep), tag(m, n));
  const Case& c = get(5, 4);
  const CheckReport onV = check_extra_serre(c.sigma);
  o.report(onV, "(5,4)");
  const SigmaSet vv = extend_sigma(init_simple_sigma(tensor_module(*c.sigma.rep, *c.sigma.rep)));
  const CheckReport onVV = check_extra_serre(vv);
  o.report(onVV, "(5,4) on V (x) V");
  o.require(!onVV.vacuous, "(5,4) extra q-Serre relations are vacuous");
  o.detail = "extra q-Serre on (5,4): " + std::to_string(onV.relations_checked + onVV.relations_checked) + " relations";
  return o;
}

Outcome c10() {
  Outcome o;
  for (auto [m, n] : kA) {
    const Case& c = get(m, n);
    o.require(evaluate(c.R.matrix, 1) == RationalMatrix::identity(c.R.matrix.space()), tag(m, n) + " R(s=1) != I");
    for (const SimpleRoot& a : c.alg->simple_roots) {
      o.require(bilinear(c.alg->rho, a.weight) == bilinear(a.weight, a.weight) / 2,
                tag(m, n) + " (rho, " + a.label + ") != (a, a)/2");
    }
  }
  return o;
}

Outcome c11() {
  Outcome o;
  for (auto [m, n] : kA) {
    const Case& c = get(m, n);
    for (SpectralKind k : {SpectralKind::untwisted, SpectralKind::twisted}) {
      o.report(check_spectral_identities(spectral_of(c, k), c.sigma), tag(m, n) + " " + to_string(k));
    }
  }
  std::size_t samples = 0;
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}}) {
    for (SpectralKind k : {SpectralKind::untwisted, SpectralKind::twisted}) {
      const CheckReport r = check_spectral_ybe(spectral_of(get(m, n), k), 20, 1);
      o.report(r, tag(m, n) + " " + to_string(k) + " YBE");
      samples += r.relations_checked;
    }
  }
  o.detail = std::to_string(samples) + " YBE samples";
  return o;
}

Outcome c12() {
  Outcome o;
  const Case& c = get(3, 2);
  const AlgebraData& A = *c.alg;
  std::vector<std::pair<std::string, std::function<CheckReport()>>> probes = {
      {"ybe", [&] { return check_ybe(mutate(c.R, Mutation::sign_flip)); }},
      {"intertwine", [&] { return check_intertwining(mutate(c.R, Mutation::sign_flip), *c.sigma.rep); }},
      {"delta", [&] { return check_delta_property(mutate(c.sigma, {0, 1}, Mutation::sign_flip)); }},
      {"opposite",
       [&] {
         RTensor rT = opposite_of(c.sigma);
         rT.matrix = mutate(rT.matrix, Mutation::sign_flip);
         return check_opposite(c.R, rT);
       }},
      {"path-independence", [&] { return check_path_independence(mutate(c.sigma, {0, 2}, Mutation::q_square)); }},
      {"appendix", [&] { return check_appendix(mutate(c.sigma, {0, 1}, Mutation::sign_flip)); }},
      {"qcom",
       [&] { return check_qcom(mutate(c.sigma, {A.position("mu1"), A.position("mu2")}, Mutation::spurious)); }},
      {"serre",
       [&] {
         Representation bad = *get(4, 2).sigma.rep;
         bad.e[2] = mutate(bad.e[2], Mutation::spurious);
         return check_qserre(bad);
       }},
      {"extra-serre",
       [&] {
         const Case& d = get(5, 4);
         const SigmaSet vv = extend_sigma(init_simple_sigma(tensor_module(*d.sigma.rep, *d.sigma.rep)));
         return check_extra_serre(mutate(vv, {d.alg->odd_pos(d.alg->k), d.alg->even_pos(1)}, Mutation::sign_flip));
       }},
      {"spectral",
       [&] {
         const GradedMatrix r = mutate(c.R.matrix, Mutation::sign_flip);
         return check_spectral_ybe(build_spectral_R(c.alg, SpectralKind::untwisted, r, build_E_tensor(A)), 5, 1);
       }},
      {"spectral-braces",
       [&] {
         return check_spectral_identities(spectral_of(c, SpectralKind::twisted),
                                          mutate(c.sigma, {0, 1}, Mutation::sign_flip));
       }},
  };
  int detected = 0;
  for (auto& [name, run] : probes) {
    const CheckReport r = run();
    const bool hit = !r.passed && r.witness.has_value();
    detected += hit;
    o.require(hit, name + " missed its mutation");
  }
  o.detail = std::to_string(detected) + "/" + std::to_string(probes.size()) + " mutations detected";
  return o;
}

Outcome c13() {
  Outcome o;
  const Case& c = get(3, 2);
  const RTensor rw = assemble_R(extend_sigma(init_simple_sigma(trivial_rep(c.alg))));
  o.report(check_lax_ybe(c.R, rw), "(3,2) trivial W");
  const CheckReport lax = check_lax_ybe(c.R, c.R);
  o.report(lax, "(3,2) vector W");
  o.require(lax.passed == check_ybe(c.R).passed, "(3,2) vector W disagrees with the YBE");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria 1-13"};
  std::vector<int> known;
  app.add_option("--known-failure", known, "criteria expected to fail")->check(CLI::Range(1, 13));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closed-form oracle equivalence", c1},
      {"anchor values", c2},
      {"Yang-Baxter equation", c3},
      {"intertwining", c4},
      {"coproduct identity", c5},
      {"opposite R-matrix", c6},
      {"path independence", c7},
      {"relation tables and q-commutation", c8},
      {"q-Serre relations", c9},
      {"specializations", c10},
      {"spectral R-matrix", c11},
      {"negative controls", c12},
      {"mixed Lax YBE", c13},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.why = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) failed.insert(id);
    std::ostringstream line;
    line << "criterion " << id << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!o.detail.empty()) line << " [" << o.detail << "]";
    line.precision(2);
    line << std::fixed << " (" << secs << " s)";
    if (!o.ok) line << " -- " << o.why;
    std::cout << line.str() << std::endl;
  }

  const std::set<int> expected(known.begin(), known.end());
  std::cout << failed.size() << " of " << criteria.size() << " criteria failed";
  if (!expected.empty()) std::cout << (failed == expected ? " (as expected)" : " (differs from --known-failure)");
  std::cout << std::endl;
  return failed == expected ? 0 : 1;
}
