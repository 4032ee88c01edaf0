#pragma once

// Canonical-form arithmetic in the affine Yokonuma-Hecke algebra with basis
// t^a X^lambda g_w. With d = 1 this is the affine Hecke algebra.
//
// Products are computed by right multiplication with one generator at a
// time. Generator indices are 1-based.

#include <map>
#include <string>
#include <vector>

#include "yhecke/coeffring.hpp"
#include "yhecke/combinatorics.hpp"

namespace yh {

struct AlgebraContext {
  int d = 1;
  int n = 1;
  friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;
  friend auto operator<=>(const AlgebraContext&, const AlgebraContext&) = default;
};

/// A single generator (or generator power, for t and X).
struct Letter {
  enum class Kind { T, X, G, GInv };
  Kind kind;
  int index;      // j for T/X, i for G/GInv
  int power = 1;  // T: any integer (read mod d); X: any integer; G/GInv: ignored

  static Letter t(int j, int p = 1) { return {Kind::T, j, p}; }
  static Letter x(int j, int p = 1) { return {Kind::X, j, p}; }
  static Letter g(int i) { return {Kind::G, i, 1}; }
  static Letter g_inv(int i) { return {Kind::GInv, i, 1}; }
};

class YElement {
 public:
  /// Packed basis index: a_1..a_n (mod d), lambda_1..lambda_n, 0-based
  /// one-line images of w.
  using Key = std::vector<int>;
  using Terms = std::map<Key, LaurentPoly>;

  explicit YElement(AlgebraContext ctx) : ctx_(ctx) {}

  static YElement one(AlgebraContext ctx) { return scalar(ctx, LaurentPoly(1)); }
  static YElement scalar(AlgebraContext ctx, const LaurentPoly& c);
  static YElement basis(AlgebraContext ctx, const std::vector<int>& a, const std::vector<int>& lambda, const Perm& w,
                        const LaurentPoly& c = LaurentPoly(1));

  static Key make_key(const std::vector<int>& a, const std::vector<int>& lambda, const Perm& w);
  std::vector<int> key_a(const Key& k) const { return {k.begin(), k.begin() + ctx_.n}; }
  std::vector<int> key_lambda(const Key& k) const { return {k.begin() + ctx_.n, k.begin() + 2 * ctx_.n}; }
  Perm key_perm(const Key& k) const;

  const AlgebraContext& ctx() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const Key& k, const LaurentPoly& c);
  void add_scaled(const YElement& x, const LaurentPoly& c);

  YElement operator-() const;
  YElement& operator+=(const YElement& o);
  YElement& operator-=(const YElement& o);
  friend YElement operator+(YElement a, const YElement& b) { return a += b; }
  friend YElement operator-(YElement a, const YElement& b) { return a -= b; }
  friend YElement operator*(const YElement& a, const YElement& b);
  friend YElement operator*(const LaurentPoly& c, const YElement& x);
  friend bool operator==(const YElement& a, const YElement& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }

  YElement mul_letter(const Letter& l) const;
  YElement mul_word(const std::vector<Letter>& word) const;
  YElement pow(int k) const;

  /// Largest sum of |lambda_j| over the terms.
  int max_x_degree() const;

  std::string to_string() const;

 private:
  AlgebraContext ctx_;
  Terms terms_;
};

YElement y_from_generator(AlgebraContext ctx, const Letter& gen);
YElement y_mul(const YElement& x, const YElement& y);

/// e_i = (1/d) sum_s t_i^s t_{i+1}^{-s}
YElement e_idempotent(AlgebraContext ctx, int i);
/// e_{j,k} = (1/d) sum_s t_j^s t_k^{-s}
YElement e_pair(AlgebraContext ctx, int j, int k);
/// E_chi = prod_j (1/d) sum_s xi_{chi_j}^{-s} t_j^s
YElement idempotent_E(AlgebraContext ctx, const Character& chi);
YElement t_elem(AlgebraContext ctx, int j, int p = 1);
/// X_j^k (a basis element).
YElement x_elem(AlgebraContext ctx, int j, int k = 1);
YElement g_elem(AlgebraContext ctx, const Perm& w);
/// X~_1 = X_1, X~_{i+1} = g_i^{-1} X~_i g_i (cached).
const YElement& xtilde(AlgebraContext ctx, int i);
/// Pads every term to n' strands (a = 0, lambda = 0, w fixing the new points).
YElement embed(const YElement& x, int new_n);

/// xi_a = zeta_d^{a-1} for a color a in 1..d.
CycNumber xi(int d, int a);

/// Element written in the basis E_chi X^lambda g_w.
class ChiElement {
 public:
  /// chi colors (1-based) followed by lambda and w as in YElement::Key.
  using Key = std::vector<int>;
  using Terms = std::map<Key, LaurentPoly>;

  explicit ChiElement(AlgebraContext ctx) : ctx_(ctx) {}
  static ChiElement basis(AlgebraContext ctx, const Character& chi, const std::vector<int>& lambda, const Perm& w,
                          const LaurentPoly& c = LaurentPoly(1));
  static Key make_key(const Character& chi, const std::vector<int>& lambda, const Perm& w);

  Character key_chi(const Key& k) const { return Character{{k.begin(), k.begin() + ctx_.n}}; }
  std::vector<int> key_lambda(const Key& k) const { return {k.begin() + ctx_.n, k.begin() + 2 * ctx_.n}; }
  Perm key_perm(const Key& k) const;

  const AlgebraContext& ctx() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Key& k, const LaurentPoly& c);
  ChiElement& operator+=(const ChiElement& o);
  friend bool operator==(const ChiElement& a, const ChiElement& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }
  std::string to_string() const;

 private:
  AlgebraContext ctx_;
  Terms terms_;
};

ChiElement to_chi_basis(const YElement& x);
YElement from_chi_basis(const ChiElement& x);

}  // namespace yh
