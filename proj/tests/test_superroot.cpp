#include <gtest/gtest.h>

#include "laxforge/error.hpp"
#include "laxforge/superroot.hpp"

using namespace laxforge;

namespace {

const std::vector<std::pair<int, int>> kAcceptance = {{3, 0}, {4, 0}, {5, 0}, {6, 0}, {3, 2},
                                                      {4, 2}, {5, 2}, {3, 4}, {5, 4}};

Rational R(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST(Algebra, LayoutOf3_2) {
  const auto A = build_algebra(3, 2);
  EXPECT_EQ(A->labels, (std::vector<std::string>{"mu1", "i1", "i2", "i3", "mu2"}));
  EXPECT_EQ(A->grading, (std::vector<int>{1, 0, 0, 0, 1}));
  EXPECT_EQ(A->bar, (std::vector<int>{4, 3, 2, 1, 0}));
  EXPECT_EQ(A->xi, (std::vector<int>{-1, 1, 1, 1, 1}));
  EXPECT_EQ(A->position("i3"), 3);
  EXPECT_THROW(A->position("i4"), InvalidInput);
}

TEST(Algebra, LayoutOf5_4) {
  const auto A = build_algebra(5, 4);
  EXPECT_EQ(A->labels, (std::vector<std::string>{"mu1", "mu2", "i1", "i2", "i3", "i4", "i5", "mu3", "mu4"}));
  EXPECT_EQ(A->bar[static_cast<std::size_t>(A->position("mu2"))], A->position("mu3"));
  EXPECT_TRUE(A->weights[static_cast<std::size_t>(A->position("i3"))].is_zero());
}

TEST(Algebra, SimpleRootsAndCartan) {
  const auto A = build_algebra(3, 2);
  ASSERT_EQ(A->simple_roots.size(), 2u);
  EXPECT_EQ(A->simple_roots[0].label, "alpha_s");
  EXPECT_EQ(A->simple_roots[0].weight.to_string(), "-e1 + d1");
  EXPECT_EQ(A->simple_roots[1].label, "alpha_l");
  EXPECT_EQ(A->simple_roots[1].weight.to_string(), "e1");
  EXPECT_EQ(A->cartan, (std::vector<std::vector<Rational>>{{0, -1}, {-2, 2}}));

  const auto B = build_algebra(5, 0);
  EXPECT_EQ(B->cartan, (std::vector<std::vector<Rational>>{{2, -1}, {-2, 2}}));
  const auto C = build_algebra(4, 0);
  EXPECT_EQ(C->simple_roots[1].weight.to_string(), "e1 + e2");
  EXPECT_EQ(C->cartan, (std::vector<std::vector<Rational>>{{2, 0}, {0, 2}}));
}

TEST(Algebra, Rho) {
  EXPECT_EQ(build_algebra(3, 0)->rho.eps, (std::vector<Rational>{R(1, 2)}));
  const auto A = build_algebra(3, 2);
  EXPECT_EQ(A->rho.eps, (std::vector<Rational>{R(1, 2)}));
  EXPECT_EQ(A->rho.delta, (std::vector<Rational>{R(-1, 2)}));
  EXPECT_EQ(build_algebra(6, 0)->rho.eps, (std::vector<Rational>{2, 1, 0}));
}

TEST(Algebra, RhoPairsHalfNormOnEverySimpleRoot) {
  for (auto [m, n] : kAcceptance) {
    const auto A = build_algebra(m, n);
    for (const auto& r : A->simple_roots) {
      EXPECT_EQ(bilinear(A->rho, r.weight), bilinear(r.weight, r.weight) / 2) << m << "," << n << " " << r.label;
    }
  }
}

TEST(Algebra, DescendingWeightOrder) {
  for (auto [m, n] : kAcceptance) {
    const auto A = build_algebra(m, n);
    for (int b = 0; b < A->dim(); ++b) {
      for (int a = b + 1; a < A->dim(); ++a) {
        EXPECT_TRUE(AlgebraData::is_positive(A->difference(b, a)));
        EXPECT_EQ(A->compare(b, a), Order::gt);
      }
    }
    EXPECT_EQ(extended_pairs(*A).size(), static_cast<std::size_t>(A->dim() * (A->dim() - 1) / 2));
  }
}

TEST(Algebra, Bilinear) {
  const auto A = build_algebra(3, 2);
  const Weight& d1 = A->weights[0];
  const Weight& e1 = A->weights[1];
  EXPECT_EQ(bilinear(e1, e1), 1);
  EXPECT_EQ(bilinear(d1, d1), -1);
  EXPECT_EQ(bilinear(d1, e1), 0);
}

TEST(Algebra, Errors) {
  try {
    build_algebra(2, 2);
    FAIL();
  } catch (const UnsupportedRank& e) {
    EXPECT_NE(std::string(e.what()).find("m > 2"), std::string::npos);
  }
  EXPECT_THROW(build_algebra(3, 3), InvalidInput);
  EXPECT_THROW(build_algebra(4, -2), InvalidInput);
  EXPECT_THROW(build_algebra(3, 0)->compare(1, 1), InvalidInput);
}
