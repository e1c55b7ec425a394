#include "laxforge/qring.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "laxforge/error.hpp"

namespace laxforge {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  }
  return out;
}

bool is_integer_literal(std::string_view t) {
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
  return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Rational rational_pow(const Rational& base, int exponent) {
  mpz_class num, den;
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -static_cast<long>(exponent) : exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string t = strip_spaces(text);
  const auto slash = t.find('/');
  const std::string_view num = std::string_view(t).substr(0, slash);
  const std::string_view den = slash == std::string::npos ? std::string_view("1") : std::string_view(t).substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw InvalidInput("not a rational literal: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den.front() == '+' ? den.substr(1) : den), 10);
  if (d == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(10); }

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!laxforge::is_zero(c)) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Rational& coeff) {
  LaurentPoly p;
  if (!laxforge::is_zero(coeff)) p.terms_.emplace_back(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::q_power(const Rational& t) {
  const Rational twice = 2 * t;
  if (twice.get_den() != 1) {
    throw InvalidInput("q^t needs 2t integral, got t = " + format_rational(t));
  }
  if (!twice.get_num().fits_sint_p()) throw InvalidInput("exponent out of range");
  return monomial(static_cast<int>(twice.get_num().get_si()));
}

LaurentPoly LaurentPoly::q_minus_qinv() { return monomial(2) - monomial(-2); }

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  return (it != terms_.end() && it->first == exponent) ? it->second : Rational(0);
}

int LaurentPoly::min_exponent() const { return terms_.front().first; }
int LaurentPoly::max_exponent() const { return terms_.back().first; }

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      if (!merged.empty() && laxforge::is_zero(merged.back().second)) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && laxforge::is_zero(merged.back().second)) merged.pop_back();
  terms_ = std::move(merged);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (!laxforge::is_zero(c)) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.terms_.emplace_back(ea + eb, ca * cb);
  }
  if (a.terms_.size() > 1 && b.terms_.size() > 1) r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly LaurentPoly::shifted(int k, const Rational& c) const {
  if (laxforge::is_zero(c)) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    t.first += k;
    t.second *= c;
  }
  return r;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_monomial()) throw InvalidInput("not an invertible monomial: " + to_string());
  return monomial(-terms_.front().first, 1 / terms_.front().second);
}

Rational LaurentPoly::eval(const Rational& s0) const {
  if (laxforge::is_zero(s0)) throw InvalidInput("cannot evaluate a Laurent polynomial at s = 0");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * rational_pow(s0, e);
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += format_rational(c);
    if (e != 0) out += "*s^" + std::to_string(e);
  }
  return out;
}

LaurentPoly LaurentPoly::parse(std::string_view text) {
  const std::string t = strip_spaces(text);
  if (t.empty()) throw InvalidInput("empty Laurent polynomial");
  LaurentPoly result;
  std::size_t start = 0;
  while (start <= t.size()) {
    const std::size_t plus = t.find('+', start);
    const std::string token = t.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    if (token.empty()) throw InvalidInput("malformed Laurent polynomial: '" + std::string(text) + "'");
    const std::size_t spos = token.find('s');
    Rational coeff = 1;
    int exponent = 0;
    if (spos == std::string::npos) {
      coeff = parse_rational(token);
    } else {
      std::string c = token.substr(0, spos);
      if (!c.empty() && c.back() == '*') c.pop_back();
      if (c.empty()) {
        coeff = 1;
      } else if (c == "-") {
        coeff = -1;
      } else {
        coeff = parse_rational(c);
      }
      const std::string rest = token.substr(spos + 1);
      if (rest.empty()) {
        exponent = 1;
      } else if (rest.front() == '^' && is_integer_literal(rest.substr(1))) {
        exponent = std::stoi(rest.substr(1));
      } else {
        throw InvalidInput("malformed exponent in '" + token + "'");
      }
    }
    result += monomial(exponent, coeff);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return result;
}

// ---------------------------------------------------------------------------
// ZPoly

ZPoly::ZPoly(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ZPoly::ZPoly(const LaurentPoly& c) {
  if (!c.is_zero()) coeffs_.push_back(c);
}

ZPoly ZPoly::z_power(int d, const LaurentPoly& c) {
  std::vector<LaurentPoly> v(static_cast<std::size_t>(d) + 1);
  v.back() = c;
  return ZPoly(std::move(v));
}

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

LaurentPoly ZPoly::coeff(int d) const {
  return (d >= 0 && d < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(d)] : LaurentPoly();
}

ZPoly ZPoly::operator-() const {
  ZPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  std::vector<LaurentPoly> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ZPoly(std::move(v));
}

LaurentPoly ZPoly::substitute(const LaurentPoly& z) const {
  LaurentPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Rational ZPoly::eval(const Rational& s0, const Rational& z0) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z0 + it->eval(s0);
  return acc;
}

std::optional<std::pair<ZPoly, ZPoly>> ZPoly::divmod(const ZPoly& divisor) const {
  if (divisor.is_zero() || !divisor.leading().is_monomial()) return std::nullopt;
  const LaurentPoly lc_inv = divisor.leading().monomial_inverse();
  std::vector<LaurentPoly> quot(coeffs_.size() >= divisor.coeffs_.size() ? coeffs_.size() - divisor.coeffs_.size() + 1 : 0);
  ZPoly rem = *this;
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const int shift = rem.degree() - divisor.degree();
    const LaurentPoly factor = rem.leading() * lc_inv;
    quot[static_cast<std::size_t>(shift)] += factor;
    rem = rem - z_power(shift, factor) * divisor;
  }
  return std::make_pair(ZPoly(std::move(quot)), std::move(rem));
}

std::string ZPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (coeffs_[d].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[d].to_string() + ")";
    if (d == 1) out += "*z";
    if (d > 1) out += "*z^" + std::to_string(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// RatFunc

namespace {

// Univariate helpers over Q[s, 1/s]: units are the nonzero rational monomials.

using Dense = std::vector<Rational>;  // ascending coefficients of a polynomial in s

Dense to_dense(const LaurentPoly& p) {
  Dense d(static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1));
  for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - p.min_exponent())] = c;
  return d;
}

LaurentPoly from_dense(const Dense& d) {
  LaurentPoly out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!is_zero(d[i])) out += LaurentPoly::monomial(static_cast<int>(i), d[i]);
  }
  return out;
}

void trim_dense(Dense& d) {
  while (!d.empty() && is_zero(d.back())) d.pop_back();
}

// Monic gcd in Q[s] of the polynomial parts, as a Laurent polynomial with constant term.
LaurentPoly lp_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.is_zero() ? LaurentPoly() : from_dense(to_dense(b));
  if (b.is_zero()) return lp_gcd(b, a);
  Dense x = to_dense(a), y = to_dense(b);
  while (!y.empty()) {
    while (x.size() >= y.size() && !x.empty()) {
      const Rational f = x.back() / y.back();
      const std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] -= f * y[i];
      trim_dense(x);
    }
    std::swap(x, y);
  }
  const Rational lead = x.back();
  for (auto& c : x) c /= lead;
  return from_dense(x);
}

// a / b when b divides a in Q[s, 1/s].
std::optional<LaurentPoly> lp_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return LaurentPoly();
  const int lo = a.min_exponent() - b.min_exponent();
  LaurentPoly rem = a, quot;
  const auto [be, bc] = b.terms().back();
  while (!rem.is_zero()) {
    const auto [re, rc] = rem.terms().back();
    if (re - be < lo) return std::nullopt;
    const LaurentPoly t = LaurentPoly::monomial(re - be, rc / bc);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

LaurentPoly content(const ZPoly& p) {
  LaurentPoly g;
  for (const auto& c : p.coeffs()) g = lp_gcd(g, c);
  return g;
}

std::optional<ZPoly> divide_coeffs(const ZPoly& p, const LaurentPoly& c) {
  std::vector<LaurentPoly> out;
  for (const auto& x : p.coeffs()) {
    auto q = lp_divide(x, c);
    if (!q) return std::nullopt;
    out.push_back(std::move(*q));
  }
  return ZPoly(std::move(out));
}

ZPoly primitive(const ZPoly& p) {
  if (p.is_zero()) return p;
  return *divide_coeffs(p, content(p));
}

// lc(b)^j a mod b for the smallest j that keeps the arithmetic in the ring.
ZPoly pseudo_remainder(ZPoly a, const ZPoly& b) {
  const LaurentPoly lc = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    a = a * ZPoly(lc) - ZPoly::z_power(a.degree() - b.degree(), a.leading()) * b;
  }
  return a;
}

// gcd in Q(s)[z], returned primitive.
ZPoly z_gcd(ZPoly a, ZPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  a = primitive(a);
  b = primitive(b);
  while (!b.is_zero()) {
    ZPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return a;
}

// p / g when g divides p in Q[s, 1/s][z].
std::optional<ZPoly> z_divide(ZPoly p, const ZPoly& g) {
  std::vector<LaurentPoly> quot(static_cast<std::size_t>(std::max(0, p.degree() - g.degree() + 1)));
  while (!p.is_zero()) {
    if (p.degree() < g.degree()) return std::nullopt;
    auto c = lp_divide(p.leading(), g.leading());
    if (!c) return std::nullopt;
    const int shift = p.degree() - g.degree();
    quot[static_cast<std::size_t>(shift)] += *c;
    p = p - ZPoly::z_power(shift, *c) * g;
  }
  return ZPoly(std::move(quot));
}

ZPoly scale(const ZPoly& p, const LaurentPoly& c) { return p * ZPoly(c); }

}  // namespace

RatFunc::RatFunc(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidInput("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = ZPoly(LaurentPoly(1));
    return;
  }
  // common power of z
  auto low = [](const ZPoly& p) {
    int d = 0;
    while (p.coeffs()[static_cast<std::size_t>(d)].is_zero()) ++d;
    return d;
  };
  const int shift = std::min(low(num_), low(den_));
  if (shift > 0) {
    num_ = ZPoly(std::vector<LaurentPoly>(num_.coeffs().begin() + shift, num_.coeffs().end()));
    den_ = ZPoly(std::vector<LaurentPoly>(den_.coeffs().begin() + shift, den_.coeffs().end()));
  }
  if (den_.degree() >= 1 && num_.degree() >= 1) {
    const ZPoly g = z_gcd(num_, den_);
    if (g.degree() >= 1) {
      auto qn = z_divide(num_, g);
      auto qd = z_divide(den_, g);
      if (qn && qd) {
        num_ = std::move(*qn);
        den_ = std::move(*qd);
      }
    }
  }
  const LaurentPoly c = lp_gcd(content(num_), content(den_));
  if (!c.is_monomial()) {
    auto qn = divide_coeffs(num_, c);
    auto qd = divide_coeffs(den_, c);
    if (qn && qd) {
      num_ = std::move(*qn);
      den_ = std::move(*qd);
    }
  }
  // unit normalization: leading z-coefficient of den is monic with lowest s-exponent 0
  const LaurentPoly& lc = den_.leading();
  const LaurentPoly unit = LaurentPoly::monomial(-lc.min_exponent(), 1 / lc.terms().back().second);
  num_ = scale(num_, unit);
  den_ = scale(den_, unit);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (auto q = b.den_.divmod(a.den_); q && q->second.is_zero()) {
    return RatFunc(a.num_ * q->first + b.num_, b.den_);
  }
  if (auto q = a.den_.divmod(b.den_); q && q->second.is_zero()) {
    return RatFunc(a.num_ + b.num_ * q->first, a.den_);
  }
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFunc RatFunc::reciprocal() const {
  if (is_zero()) throw InvalidInput("reciprocal of zero rational function");
  return RatFunc(den_, num_);
}

Rational RatFunc::eval(const Rational& s0, const Rational& z0) const {
  const Rational d = den_.eval(s0, z0);
  if (laxforge::is_zero(d)) throw PoleError(den_.to_string());
  return num_.eval(s0, z0) / d;
}

std::pair<LaurentPoly, LaurentPoly> RatFunc::substitute(const LaurentPoly& z) const {
  LaurentPoly d = den_.substitute(z);
  if (d.is_zero()) throw PoleError(den_.to_string());
  return {num_.substitute(z), std::move(d)};
}

std::string RatFunc::to_string() const { return "[" + num_.to_string() + "] / [" + den_.to_string() + "]"; }

}  // namespace laxforge
