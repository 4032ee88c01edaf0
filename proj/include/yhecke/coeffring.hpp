#pragma once

// Exact coefficient arithmetic: rationals, the d-th cyclotomic field
// Q[z]/Phi_d(z), and sparse multivariate Laurent polynomials whose exponents
// live on the lattice (1/2)Z (stored doubled).

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "yhecke/errors.hpp"

namespace yh {

using Rational = mpq_class;

/// Largest supported cyclotomic order.
inline constexpr int kMaxCyclotomicOrder = 64;

int euler_phi(int d);

/// Coefficients of the d-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int d);

/// An element of Q(zeta_d), zeta_d = exp(2 pi i / d), in the power basis
/// 1, zeta, ..., zeta^{phi(d)-1}. Always reduced modulo Phi_d.
///
/// Order 1 numbers are plain rationals; they combine with numbers of any
/// order. Combining two numbers of different orders > 1 throws OrderMismatch.
class CycNumber {
 public:
  CycNumber() : d_(1), c_(1) {}
  CycNumber(long v) : d_(1), c_{Rational(v)} {}  // NOLINT(implicit)
  CycNumber(Rational r, int d = 1);

  static CycNumber zeta_power(int d, long k);
  static CycNumber from_coords(int d, std::vector<Rational> coords);

  int order() const { return d_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (only the constant coordinate may be set).
  bool is_rational() const;
  const Rational& rational() const { return c_[0]; }

  /// Multiplicative inverse of a nonzero rational value.
  CycNumber inverse() const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);

  friend bool operator==(const CycNumber& a, const CycNumber& b);

  /// Power-basis rendering, e.g. "1 + z", "-1/2*z^2", "z".
  std::string to_string() const;

 private:
  int d_;
  std::vector<Rational> c_;

  void promote_to(int d);
  static int common_order(int a, int b);
};

CycNumber cyc_mul(const CycNumber& a, const CycNumber& b);

enum class VarKind : std::uint8_t { U = 0, V = 1, Gamma = 2, XParam = 3, Named = 4 };

/// A polynomial variable: u, v, gamma, a trace parameter x_a^{(k)} (a != 0),
/// or an auxiliary named symbol (used for changes of variables).
class VarId {
 public:
  static VarId u() { return VarId(VarKind::U, 0, 0, nullptr); }
  static VarId v() { return VarId(VarKind::V, 0, 0, nullptr); }
  static VarId gamma() { return VarId(VarKind::Gamma, 0, 0, nullptr); }
  /// x_a^{(k)}; a == 0 is rejected (x_0 is the constant 1).
  static VarId xparam(int k, int a);
  static VarId named(std::string_view name);

  VarKind kind() const { return kind_; }
  int color() const { return i_; }
  int winding() const { return j_; }
  const std::string& name() const;
  std::string to_string() const;

  friend bool operator==(const VarId& a, const VarId& b) {
    return a.kind_ == b.kind_ && a.i_ == b.i_ && a.j_ == b.j_ && a.name_ == b.name_;
  }
  friend bool operator<(const VarId& a, const VarId& b);

 private:
  VarId(VarKind k, int i, int j, const std::string* name) : kind_(k), i_(i), j_(j), name_(name) {}
  VarKind kind_;
  int i_;
  int j_;
  const std::string* name_;  // interned; stable for program lifetime
};

/// Sorted (variable, doubled exponent) pairs with no zero exponent.
using Monomial = std::vector<std::pair<VarId, int>>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
/// Exponent (doubled) of var in m, 0 when absent.
int monomial_exponent(const Monomial& m, const VarId& var);

class LaurentPoly {
 public:
  using Terms = std::map<Monomial, CycNumber>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(implicit)
  LaurentPoly(const Rational& c);  // NOLINT(implicit)
  LaurentPoly(const CycNumber& c);  // NOLINT(implicit)

  static LaurentPoly var(const VarId& v, int power = 1);
  /// var^(doubled/2)
  static LaurentPoly var_half(const VarId& v, int doubled_power);
  static LaurentPoly term(const CycNumber& c, Monomial m);
  static LaurentPoly u(int p = 1) { return var(VarId::u(), p); }
  static LaurentPoly v(int p = 1) { return var(VarId::v(), p); }
  static LaurentPoly gamma(int p = 1) { return var(VarId::gamma(), p); }
  /// Trace parameter x_a^{(k)}, with x_0 = 1.
  static LaurentPoly x(int k, int a);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  /// Single term c * m.
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term (possibly zero).
  CycNumber constant() const;
  bool contains(const VarId& v) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  /// Adds c*m in place.
  void add_term(const Monomial& m, const CycNumber& c);
  /// this * (c * m).
  LaurentPoly times_term(const Monomial& m, const CycNumber& c) const;

  /// Integer power; negative powers require a monomial with rational coefficient.
  LaurentPoly pow(int e) const;
  /// Power e/2 (e = doubled exponent). Odd e requires a monomial with
  /// coefficient 1 and even doubled exponents.
  LaurentPoly pow_half(int doubled) const;
  /// Inverse of a unit monomial (nonzero rational coefficient).
  LaurentPoly inverse() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);

/// Simultaneous substitution. Variables missing from the map are kept.
LaurentPoly poly_substitute(const LaurentPoly& p, const std::map<VarId, LaurentPoly>& map);

/// Deterministic rendering: terms in lexicographic order of their
/// (variable, exponent) lists under the order u < v < gamma < x < named.
std::string poly_canonical_string(const LaurentPoly& p);

/// Parses the grammar emitted by poly_canonical_string (and ordinary infix
/// arithmetic with + - * ^ and parentheses). The identifier `z` denotes
/// zeta_d for the supplied order.
LaurentPoly parse_poly(std::string_view text, int d = 1);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const CycNumber& c);

/// The scalar v^{-1}(1 - u^2) forced by the Markov conditions.
LaurentPoly markov_z();

}  // namespace yh
