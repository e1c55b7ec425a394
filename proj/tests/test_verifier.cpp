#include <gtest/gtest.h>

#include "laxforge/error.hpp"
#include "laxforge/verifier.hpp"

using namespace laxforge;

namespace {

const std::vector<std::pair<int, int>> kAcceptance = {{3, 0}, {4, 0}, {5, 0}, {6, 0}, {3, 2},
                                                      {4, 2}, {5, 2}, {3, 4}, {5, 4}};

SigmaSet vector_sigma(int m, int n) { return extend_sigma(init_simple_sigma(build_vector_rep(build_algebra(m, n)))); }

RTensor opposite_of(const SigmaSet& s) {
  RTensor rT;
  rT.kind = RKind::opposite;
  rT.matrix = opposite_matrix(s);
  rT.v_dim = s.algebra->dim();
  rT.w_dim = s.rep->dim();
  return rT;
}

void expect_fail(const CheckReport& r) {
  EXPECT_FALSE(r.passed) << r.summary();
  EXPECT_EQ(r.status(), "fail");
  ASSERT_TRUE(r.witness.has_value()) << r.check;
  EXPECT_GE(r.witness->row, 1);
  EXPECT_GE(r.witness->col, 1);
  EXPECT_NE(r.witness->lhs, r.witness->rhs);
}

void expect_pass(const CheckReport& r) { EXPECT_TRUE(r.passed) << r.summary(); }

}  // namespace

class AcceptanceCase : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(AcceptanceCase, AllConstantSuitesPass) {
  const auto [m, n] = GetParam();
  const SigmaSet s = vector_sigma(m, n);
  const RTensor R = assemble_R(s);
  expect_pass(check_ybe(R));
  expect_pass(check_lax_ybe(R, R));
  expect_pass(check_intertwining(R, *s.rep));
  expect_pass(check_delta_property(s));
  expect_pass(check_qcom(s));
  expect_pass(check_qserre(*s.rep));
  expect_pass(check_extra_serre(s));
  expect_pass(check_appendix(s));
  expect_pass(check_path_independence(s));
  expect_pass(check_opposite(R, opposite_of(s)));
}

INSTANTIATE_TEST_SUITE_P(Verifier, AcceptanceCase, ::testing::ValuesIn(kAcceptance),
                         [](const auto& info) {
                           return "osp" + std::to_string(info.param.first) + "_" + std::to_string(info.param.second);
                         });

TEST(Verifier, SuiteNames) {
  EXPECT_EQ(suite_names().size(), 12u);
  EXPECT_EQ(suite_names().front(), "ybe");
}

TEST(Verifier, VacuousReports) {
  const CheckReport r = check_extra_serre(vector_sigma(3, 2));
  EXPECT_TRUE(r.vacuous);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.status(), "vacuous");
  EXPECT_EQ(r.relations_checked, 0u);
}

TEST(Verifier, AppendixFamiliesFollowParityOfM) {
  auto has_family = [](const SigmaSet& s, const std::string& prefix) {
    for (const auto& rel : appendix_relations(s)) {
      if (rel.id.rfind(prefix, 0) == 0) return true;
    }
    return false;
  };
  const SigmaSet even = vector_sigma(4, 2), odd = vector_sigma(5, 2);
  EXPECT_TRUE(has_family(even, "common-"));
  EXPECT_TRUE(has_family(even, "even-"));
  EXPECT_FALSE(has_family(even, "odd-"));
  EXPECT_TRUE(has_family(odd, "odd-"));
  EXPECT_FALSE(has_family(odd, "even-"));
}

TEST(Verifier, TrivialModuleLaxYbe) {
  const auto alg = build_algebra(3, 2);
  const RTensor rv = assemble_R(vector_sigma(3, 2));
  const RTensor rw = assemble_R(extend_sigma(init_simple_sigma(trivial_rep(alg))));
  expect_pass(check_lax_ybe(rv, rw));
}

// ---------------------------------------------------------------------------
// Negative controls: one entry changed, the suite must fail with a witness.

TEST(NegativeControl, Ybe) {
  const RTensor R = assemble_R(vector_sigma(3, 2));
  expect_fail(check_ybe(mutate(R, Mutation::sign_flip)));
  expect_fail(check_ybe(mutate(R, Mutation::q_square)));
}

TEST(NegativeControl, LaxYbe) {
  const RTensor R = assemble_R(vector_sigma(3, 2));
  expect_fail(check_lax_ybe(R, mutate(R, Mutation::sign_flip)));
}

TEST(NegativeControl, Intertwining) {
  const SigmaSet s = vector_sigma(4, 2);
  expect_fail(check_intertwining(mutate(assemble_R(s), Mutation::sign_flip), *s.rep));
}

TEST(NegativeControl, Opposite) {
  const SigmaSet s = vector_sigma(3, 2);
  const RTensor R = assemble_R(s);
  RTensor rT = opposite_of(s);
  rT.matrix = mutate(rT.matrix, Mutation::sign_flip, 0, true);
  expect_fail(check_opposite(R, rT));
}

TEST(NegativeControl, SigmaSuites) {
  const SigmaSet s = vector_sigma(3, 2);
  for (const auto& p : extended_pairs(*s.algebra)) {
    const SigmaSet bad = mutate(s, p, Mutation::sign_flip);
    expect_fail(check_delta_property(bad));
    expect_fail(check_appendix(bad));
    expect_fail(check_path_independence(bad));
  }
}

TEST(NegativeControl, Qcom) {
  // A coefficient change keeps every weight component consistent; an entry of the wrong weight does not.
  const SigmaSet s = vector_sigma(3, 2);
  const AlgebraData& A = *s.algebra;
  expect_fail(check_qcom(mutate(s, {A.position("mu1"), A.position("mu2")}, Mutation::spurious)));
}

TEST(NegativeControl, Serre) {
  RepresentationPtr V = build_vector_rep(build_algebra(4, 2));
  Representation bad = *V;
  bad.e[2] = mutate(bad.e[2], Mutation::spurious, 0, true);
  expect_fail(check_qserre(bad));
}

TEST(NegativeControl, ExtraSerre) {
  const auto alg = build_algebra(5, 4);
  const RepresentationPtr V = build_vector_rep(alg);
  const SigmaSet s = extend_sigma(init_simple_sigma(tensor_module(*V, *V)));
  expect_pass(check_extra_serre(s));
  const AlgebraData& A = *alg;
  expect_fail(check_extra_serre(mutate(s, {A.odd_pos(A.k), A.even_pos(1)}, Mutation::sign_flip)));
}

TEST(NegativeControl, NoEligibleEntry) {
  const GradedMatrix Z(GradedSpace(std::vector<int>{0, 1}));
  EXPECT_THROW(mutate(Z, Mutation::sign_flip), InvalidInput);
}
