#include "laxforge/gradedmat.hpp"

namespace laxforge {

GradedSpace::GradedSpace(std::vector<int> grading) : grading_(std::move(grading)) {
  for (int g : grading_) {
    if (g != 0 && g != 1) throw InvalidInput("grading entries must be 0 or 1");
  }
  factors_.push_back(grading_);
}

GradedSpace GradedSpace::tensor(const GradedSpace& a, const GradedSpace& b) {
  GradedSpace out;
  out.grading_.reserve(a.grading_.size() * b.grading_.size());
  for (int x : a.grading_) {
    for (int y : b.grading_) out.grading_.push_back((x + y) % 2);
  }
  out.factors_ = a.factors_;
  out.factors_.insert(out.factors_.end(), b.factors_.begin(), b.factors_.end());
  return out;
}

std::vector<int> GradedSpace::split(int pos) const {
  std::vector<int> digits(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const int d = static_cast<int>(factors_[i].size());
    digits[i] = pos % d;
    pos /= d;
  }
  return digits;
}

namespace {

// Koszul sign exponent of the Kronecker embedding of an elementary tensor.
int kron_exponent(const std::vector<int>& row, const std::vector<int>& col) {
  int e = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    for (std::size_t j = i + 1; j < row.size(); ++j) e += col[i] * (row[j] + col[j]);
  }
  return e;
}

}  // namespace

int dagger_sign(const GradedSpace& space, int row, int col) {
  const auto& f = space.factors();
  const auto r = space.split(row);
  const auto c = space.split(col);
  std::vector<int> gr(f.size()), gc(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    gr[i] = f[i][static_cast<std::size_t>(r[i])];
    gc[i] = f[i][static_cast<std::size_t>(c[i])];
  }
  int e = kron_exponent(gr, gc) + kron_exponent(gc, gr);
  for (std::size_t i = 0; i < f.size(); ++i) e += gr[i] * (gr[i] + gc[i]);
  return e % 2 == 0 ? 1 : -1;
}

RationalMatrix evaluate(const GradedMatrix& X, const Rational& s0) {
  return X.map([&](const LaurentPoly& p) { return p.eval(s0); });
}

LaurentPoly square_variable(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out += LaurentPoly::monomial(2 * e, c);
  return out;
}

}  // namespace laxforge
