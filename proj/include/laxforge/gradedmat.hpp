#pragma once

// Sparse matrices on a Z2-graded basis.
//
// Products are ordinary matrix products; Koszul signs enter only through
// graded_kron, graded_permutation and graded_dagger. A space remembers its
// tensor factors so that the dagger can act factorwise.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laxforge/error.hpp"
#include "laxforge/qring.hpp"

namespace laxforge {

class GradedSpace {
 public:
  GradedSpace() = default;
  explicit GradedSpace(std::vector<int> grading);

  static GradedSpace tensor(const GradedSpace& a, const GradedSpace& b);

  int dim() const noexcept { return static_cast<int>(grading_.size()); }
  int grade(int pos) const { return grading_[static_cast<std::size_t>(pos)]; }
  const std::vector<int>& grading() const noexcept { return grading_; }
  /// Gradings of each tensor factor (a single entry for a simple space).
  const std::vector<std::vector<int>>& factors() const noexcept { return factors_; }

  /// Splits a composite position into one position per factor.
  std::vector<int> split(int pos) const;

  friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.factors_ == b.factors_; }
  friend bool operator!=(const GradedSpace& a, const GradedSpace& b) { return !(a == b); }

 private:
  std::vector<int> grading_;
  std::vector<std::vector<int>> factors_;
};

template <class S>
class GradedMatrixT {
 public:
  using Row = std::map<int, S>;

  GradedMatrixT() = default;
  explicit GradedMatrixT(GradedSpace space) : space_(std::move(space)), rows_(static_cast<std::size_t>(space_.dim())) {}

  static GradedMatrixT identity(const GradedSpace& space) {
    GradedMatrixT r(space);
    for (int i = 0; i < space.dim(); ++i) r.set(i, i, S(1));
    return r;
  }

  static GradedMatrixT elementary(const GradedSpace& space, int a, int b, const S& c = S(1)) {
    GradedMatrixT r(space);
    r.set(a, b, c);
    return r;
  }

  const GradedSpace& space() const noexcept { return space_; }
  int dim() const noexcept { return space_.dim(); }
  const std::vector<Row>& rows() const noexcept { return rows_; }

  std::optional<int> parity() const noexcept { return parity_; }

  /// Tags the matrix as homogeneous; throws InvalidInput if an entry disagrees.
  GradedMatrixT& with_parity(int p) {
    if (auto h = homogeneous_parity(); !is_zero() && h && *h != p) {
      throw InvalidInput("entry parity disagrees with tagged parity");
    }
    parity_ = p;
    return *this;
  }

  /// Parity shared by all entries, nullopt for mixed; zero matrices report 0.
  std::optional<int> homogeneous_parity() const {
    std::optional<int> p;
    for (int r = 0; r < dim(); ++r) {
      for (const auto& kv : rows_[static_cast<std::size_t>(r)]) {
        const int e = (space_.grade(r) + space_.grade(kv.first)) % 2;
        if (p && *p != e) return std::nullopt;
        p = e;
      }
    }
    return p ? p : std::optional<int>(0);
  }

  bool is_zero() const {
    for (const auto& row : rows_) {
      if (!row.empty()) return false;
    }
    return true;
  }

  std::size_t nnz() const {
    std::size_t c = 0;
    for (const auto& row : rows_) c += row.size();
    return c;
  }

  S get(int r, int c) const {
    const auto& row = rows_[static_cast<std::size_t>(r)];
    auto it = row.find(c);
    return it == row.end() ? S() : it->second;
  }

  void set(int r, int c, const S& v) {
    check_index(r, c);
    auto& row = rows_[static_cast<std::size_t>(r)];
    if (is_zero_scalar(v)) {
      row.erase(c);
    } else {
      row[c] = v;
      check_parity(r, c);
    }
  }

  void add_to(int r, int c, const S& v) {
    if (is_zero_scalar(v)) return;
    check_index(r, c);
    auto& row = rows_[static_cast<std::size_t>(r)];
    auto [it, fresh] = row.try_emplace(c, v);
    if (!fresh) {
      it->second = it->second + v;
      if (is_zero_scalar(it->second)) row.erase(it);
    } else {
      check_parity(r, c);
    }
  }

  /// Visits nonzero entries in row-major order.
  void for_each(const std::function<void(int, int, const S&)>& fn) const {
    for (int r = 0; r < dim(); ++r) {
      for (const auto& [c, v] : rows_[static_cast<std::size_t>(r)]) fn(r, c, v);
    }
  }

  template <class F>
  auto map(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    GradedMatrixT<T> out(space_);
    for_each([&](int r, int c, const S& v) { out.set(r, c, f(v)); });
    return out;
  }

  GradedMatrixT operator-() const {
    GradedMatrixT out = *this;
    for (auto& row : out.rows_) {
      for (auto& kv : row) kv.second = -kv.second;
    }
    return out;
  }

  GradedMatrixT& operator+=(const GradedMatrixT& o) {
    require_same(o);
    o.for_each([this](int r, int c, const S& v) { add_to(r, c, v); });
    if (parity_ != o.parity_) parity_.reset();
    return *this;
  }
  GradedMatrixT& operator-=(const GradedMatrixT& o) { return *this += -o; }
  friend GradedMatrixT operator+(GradedMatrixT a, const GradedMatrixT& b) { return a += b; }
  friend GradedMatrixT operator-(GradedMatrixT a, const GradedMatrixT& b) { return a -= b; }

  friend GradedMatrixT operator*(const GradedMatrixT& a, const GradedMatrixT& b) {
    a.require_same(b);
    GradedMatrixT out(a.space_);
    for (int r = 0; r < a.dim(); ++r) {
      Row acc;
      for (const auto& [c, v] : a.rows_[static_cast<std::size_t>(r)]) {
        for (const auto& [c2, w] : b.rows_[static_cast<std::size_t>(c)]) {
          auto [it, fresh] = acc.try_emplace(c2, v * w);
          if (!fresh) it->second = it->second + v * w;
        }
      }
      for (auto it = acc.begin(); it != acc.end();) {
        it = is_zero_scalar(it->second) ? acc.erase(it) : std::next(it);
      }
      out.rows_[static_cast<std::size_t>(r)] = std::move(acc);
    }
    if (a.parity_ && b.parity_) out.parity_ = (*a.parity_ + *b.parity_) % 2;
    return out;
  }

  friend GradedMatrixT operator*(const S& c, const GradedMatrixT& m) {
    GradedMatrixT out(m.space_);
    if (is_zero_scalar(c)) return out;
    m.for_each([&](int r, int col, const S& v) { out.set(r, col, c * v); });
    out.parity_ = m.parity_;
    return out;
  }

  friend bool operator==(const GradedMatrixT& a, const GradedMatrixT& b) {
    return a.space_ == b.space_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const GradedMatrixT& a, const GradedMatrixT& b) { return !(a == b); }

  /// First (row, col) where a and b differ, row-major.
  friend std::optional<std::pair<int, int>> first_difference(const GradedMatrixT& a, const GradedMatrixT& b) {
    a.require_same(b);
    for (int r = 0; r < a.dim(); ++r) {
      const auto& ra = a.rows_[static_cast<std::size_t>(r)];
      const auto& rb = b.rows_[static_cast<std::size_t>(r)];
      if (ra == rb) continue;
      auto ia = ra.begin();
      auto ib = rb.begin();
      while (ia != ra.end() || ib != rb.end()) {
        if (ib == rb.end() || (ia != ra.end() && ia->first < ib->first)) return std::make_pair(r, ia->first);
        if (ia == ra.end() || ib->first < ia->first) return std::make_pair(r, ib->first);
        if (!(ia->second == ib->second)) return std::make_pair(r, ia->first);
        ++ia;
        ++ib;
      }
    }
    return std::nullopt;
  }

 private:
  static bool is_zero_scalar(const S& v) { return laxforge::is_zero(v); }

  void check_index(int r, int c) const {
    if (r < 0 || c < 0 || r >= dim() || c >= dim()) throw InvalidInput("matrix index out of range");
  }
  void check_parity(int r, int c) const {
    if (parity_ && (space_.grade(r) + space_.grade(c)) % 2 != *parity_) {
      throw InvalidInput("entry breaks homogeneous parity");
    }
  }
  void require_same(const GradedMatrixT& o) const {
    if (space_ != o.space_) throw InvalidInput("dimension or grading mismatch");
  }

  GradedSpace space_;
  std::vector<Row> rows_;
  std::optional<int> parity_;
};

using GradedMatrix = GradedMatrixT<LaurentPoly>;
using RationalMatrix = GradedMatrixT<Rational>;

/// Entries (-1)^{([b]+[d])[c]} A^a_c B^b_d on the tensor space.
template <class S>
GradedMatrixT<S> graded_kron(const GradedMatrixT<S>& A, const GradedMatrixT<S>& B) {
  GradedMatrixT<S> out(GradedSpace::tensor(A.space(), B.space()));
  const int nb = B.dim();
  A.for_each([&](int a, int c, const S& x) {
    const int gc = A.space().grade(c);
    B.for_each([&](int b, int d, const S& y) {
      const bool neg = gc == 1 && (B.space().grade(b) + B.space().grade(d)) % 2 == 1;
      const S v = x * y;
      out.set(a * nb + b, c * nb + d, neg ? S(-v) : v);
    });
  });
  if (A.parity() && B.parity()) out.with_parity((*A.parity() + *B.parity()) % 2);
  return out;
}

/// Graded twist on V (x) V: v_a (x) v_b -> (-1)^{[a][b]} v_b (x) v_a.
template <class S = LaurentPoly>
GradedMatrixT<S> graded_permutation(const GradedSpace& V) {
  GradedMatrixT<S> P(GradedSpace::tensor(V, V));
  const int N = V.dim();
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      P.set(b * N + a, a * N + b, S(V.grade(a) * V.grade(b) == 1 ? -1 : 1));
    }
  }
  P.with_parity(0);
  return P;
}

/// Sign of the dagger acting on entry (row, col), factor by factor.
int dagger_sign(const GradedSpace& space, int row, int col);

/// Graded conjugation, (E^a_b)^dagger = (-1)^{[a]([a]+[b])} E^b_a on each
/// tensor factor, extended as (x (x) y)^dagger = x^dagger (x) y^dagger.
/// Coefficients are left unchanged.
template <class S>
GradedMatrixT<S> graded_dagger(const GradedMatrixT<S>& X) {
  GradedMatrixT<S> out(X.space());
  X.for_each([&](int r, int c, const S& v) { out.set(c, r, dagger_sign(X.space(), r, c) < 0 ? S(-v) : v); });
  return out;
}

template <class S>
GradedMatrixT<S> kron_identity_right(const GradedMatrixT<S>& A, const GradedSpace& W) {
  return graded_kron(A, GradedMatrixT<S>::identity(W));
}

template <class S>
GradedMatrixT<S> kron_identity_left(const GradedSpace& V, const GradedMatrixT<S>& B) {
  return graded_kron(GradedMatrixT<S>::identity(V), B);
}

inline GradedMatrix elementary(const GradedSpace& space, int a, int b) { return GradedMatrix::elementary(space, a, b); }
inline GradedMatrix mat_add(const GradedMatrix& a, const GradedMatrix& b) { return a + b; }
inline GradedMatrix mat_mul(const GradedMatrix& a, const GradedMatrix& b) { return a * b; }
inline GradedMatrix scalar_mul(const LaurentPoly& c, const GradedMatrix& a) { return c * a; }

/// Exact specialization s = s0.
RationalMatrix evaluate(const GradedMatrix& X, const Rational& s0);

/// Substitutes s -> s^2 (q -> q^2) in one coefficient; used for mutation controls.
LaurentPoly square_variable(const LaurentPoly& p);

}  // namespace laxforge
