#pragma once

// Exact coefficient arithmetic.
//
// All matrix entries live in Q[s, 1/s] with s = q^(1/2), so every half-integer
// power of q is a monomial. Spectral-parameter dependence is carried by RatFunc,
// a quotient of polynomials in z whose coefficients are Laurent polynomials.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace laxforge {

using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// n/d in lowest terms (mpq_class does not reduce on construction).
inline Rational make_rational(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// Element of Q[s, 1/s]. Terms are kept sorted by exponent with no zero
/// coefficients, so structural equality is mathematical equality.
class LaurentPoly {
 public:
  using Term = std::pair<int, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exponent, const Rational& coeff = 1);

  /// q^t = s^(2t). Throws InvalidInput unless 2t is an integer.
  static LaurentPoly q_power(const Rational& t);
  static LaurentPoly q_power(int t) { return monomial(2 * t); }

  /// q - 1/q, the ubiquitous prefactor.
  static LaurentPoly q_minus_qinv();

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  Rational coefficient(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Multiply by c * s^k.
  LaurentPoly shifted(int k, const Rational& c = 1) const;

  /// Inverse of a monomial; throws InvalidInput for anything else.
  LaurentPoly monomial_inverse() const;

  /// Exact value at s = s0. Throws InvalidInput for s0 = 0.
  Rational eval(const Rational& s0) const;

  /// Canonical text, e.g. "-1*s^-2 + 3 + 1/2*s^4".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text);

 private:
  void normalize();
  std::vector<Term> terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

// Named forms of the ring operations.
inline LaurentPoly lp_from_qpower(const Rational& t) { return LaurentPoly::q_power(t); }
inline LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly lp_neg(const LaurentPoly& a) { return -a; }
inline Rational lp_eval(const LaurentPoly& p, const Rational& s0) { return p.eval(s0); }

/// Polynomial in z with LaurentPoly coefficients; coeffs()[d] multiplies z^d.
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<LaurentPoly> coeffs);
  ZPoly(const LaurentPoly& c);  // NOLINT(google-explicit-constructor)

  static ZPoly z_power(int d, const LaurentPoly& c = LaurentPoly(1));

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<LaurentPoly>& coeffs() const noexcept { return coeffs_; }
  const LaurentPoly& leading() const { return coeffs_.back(); }
  LaurentPoly coeff(int d) const;

  ZPoly operator-() const;
  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const ZPoly& a, const ZPoly& b) { return !(a == b); }

  LaurentPoly substitute(const LaurentPoly& z) const;
  Rational eval(const Rational& s0, const Rational& z0) const;

  /// Division by a divisor whose leading coefficient is a monomial (a unit of
  /// the coefficient ring). Returns nullopt if that precondition fails.
  std::optional<std::pair<ZPoly, ZPoly>> divmod(const ZPoly& divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<LaurentPoly> coeffs_;
};

/// num(z) / den(z) over Q(s). Normalization is best effort (common z-power,
/// unit leading denominator coefficient, Euclidean GCD when it stays within
/// unit leading coefficients); equality always cross-multiplies.
class RatFunc {
 public:
  RatFunc() : den_(LaurentPoly(1)) {}
  RatFunc(const LaurentPoly& c) : num_(c), den_(LaurentPoly(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(ZPoly num, ZPoly den);  // throws InvalidInput for a zero denominator

  const ZPoly& num() const noexcept { return num_; }
  const ZPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b);
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc reciprocal() const;  // throws InvalidInput for zero

  /// Exact value at (s0, z0). Throws PoleError naming the denominator.
  Rational eval(const Rational& s0, const Rational& z0) const;

  /// Substitutes a Laurent polynomial for z; returns (numerator, denominator)
  /// values in Q[s, 1/s]. Throws PoleError if the denominator vanishes.
  std::pair<LaurentPoly, LaurentPoly> substitute(const LaurentPoly& z) const;

  std::string to_string() const;

 private:
  void normalize();
  ZPoly num_;
  ZPoly den_;
};

inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

inline RatFunc rf_make(ZPoly num, ZPoly den) { return RatFunc(std::move(num), std::move(den)); }
inline RatFunc rf_add(const RatFunc& a, const RatFunc& b) { return a + b; }
inline RatFunc rf_mul(const RatFunc& a, const RatFunc& b) { return a * b; }
inline Rational rf_eval(const RatFunc& r, const Rational& s0, const Rational& z0) { return r.eval(s0, z0); }

}  // namespace laxforge
