#include "yhecke/yokonuma.hpp"

#include <mutex>
#include <tuple>

#include "yhecke/errors.hpp"

namespace yh {

namespace {

int mod(int x, int d) {
  const int r = x % d;
  return r < 0 ? r + d : r;
}

void check_index(bool ok, const char* what, int idx, int n) {
  if (!ok) throw IndexError(std::string(what) + " index " + std::to_string(idx) + " out of range for n=" + std::to_string(n));
}

// e_{p,q} applied on the left of a single basis term (p, q 0-based).
void add_e_shifted(YElement& out, const YElement::Key& k, int p, int q, const LaurentPoly& c, int d) {
  if (d == 1) {
    out.add_term(k, c);
    return;
  }
  const LaurentPoly scaled = c * LaurentPoly(Rational(1, d));
  YElement::Key kk = k;
  for (int s = 0; s < d; ++s) {
    kk[p] = mod(k[p] + s, d);
    kk[q] = mod(k[q] - s, d);
    out.add_term(kk, scaled);
  }
}

// Left multiplication by e_{p,q}.
YElement e_left(const YElement& x, int p, int q) {
  YElement out(x.ctx());
  for (const auto& [k, c] : x.terms()) add_e_shifted(out, k, p, q, c, x.ctx().d);
  return out;
}

// Right multiplication by g_i, i 0-based (swaps positions i, i+1).
void mul_g_term(YElement& out, const YElement::Key& k, const LaurentPoly& c, int i, int n, int d) {
  const int wi = 2 * n + i;
  YElement::Key swapped = k;
  std::swap(swapped[wi], swapped[wi + 1]);
  if (k[wi] < k[wi + 1]) {
    out.add_term(swapped, c);
    return;
  }
  out.add_term(swapped, c * LaurentPoly::u(2));
  add_e_shifted(out, k, k[wi], k[wi + 1], c * LaurentPoly::v(), d);
}

void mul_ginv_term(YElement& out, const YElement::Key& k, const LaurentPoly& c, int i, int n, int d) {
  const LaurentPoly cu = c * LaurentPoly::u(-2);
  mul_g_term(out, k, cu, i, n, d);
  const int wi = 2 * n + i;
  add_e_shifted(out, k, k[wi], k[wi + 1], -(cu * LaurentPoly::v()), d);
}

YElement mul_g(const YElement& x, int i) {
  YElement out(x.ctx());
  for (const auto& [k, c] : x.terms()) mul_g_term(out, k, c, i, x.ctx().n, x.ctx().d);
  return out;
}

using GxKey = std::tuple<int, int, std::vector<int>, int, int>;

std::mutex g_gx_mutex;
std::map<GxKey, YElement>& gx_cache() {
  static std::map<GxKey, YElement> cache;
  return cache;
}

// g_w X_j^eps as an element (j 0-based, eps = +-1).
const YElement& g_times_x(AlgebraContext ctx, const std::vector<int>& w, int j, int eps) {
  GxKey key{ctx.d, ctx.n, w, j, eps};
  {
    std::lock_guard lock(g_gx_mutex);
    auto it = gx_cache().find(key);
    if (it != gx_cache().end()) return it->second;
  }
  const int n = ctx.n;
  int i = 0;
  while (i + 1 < n && w[i] < w[i + 1]) ++i;
  YElement result(ctx);
  if (i + 1 >= n) {
    YElement::Key k(3 * n, 0);
    k[n + j] = eps;
    for (int p = 0; p < n; ++p) k[2 * n + p] = w[p];
    result.add_term(k, LaurentPoly(1));
  } else {
    std::vector<int> wp = w;
    std::swap(wp[i], wp[i + 1]);
    const int p = wp[i], q = wp[i + 1];
    if (j != i && j != i + 1) {
      result = mul_g(g_times_x(ctx, wp, j, eps), i);
    } else {
      const int swapped = j == i ? i + 1 : i;
      result = mul_g(g_times_x(ctx, wp, swapped, eps), i);
      // e-term: sign and the X index it carries
      const int sign = (j == i) == (eps > 0) ? -1 : 1;
      const int carried = eps > 0 ? i + 1 : i;
      const LaurentPoly coeff = sign > 0 ? LaurentPoly::v() : -LaurentPoly::v();
      result.add_scaled(e_left(g_times_x(ctx, wp, carried, eps), p, q), coeff);
    }
  }
  std::lock_guard lock(g_gx_mutex);
  return gx_cache().emplace(std::move(key), std::move(result)).first->second;
}

YElement mul_x_once(const YElement& x, int j, int eps) {
  const AlgebraContext ctx = x.ctx();
  const int n = ctx.n;
  YElement out(ctx);
  std::vector<int> w(n);
  for (const auto& [k, c] : x.terms()) {
    std::copy(k.begin() + 2 * n, k.end(), w.begin());
    const YElement& r = g_times_x(ctx, w, j, eps);
    for (const auto& [rk, rc] : r.terms()) {
      YElement::Key nk = rk;
      for (int p = 0; p < n; ++p) {
        nk[p] = mod(k[p] + rk[p], ctx.d);
        nk[n + p] = k[n + p] + rk[n + p];
      }
      out.add_term(nk, c * rc);
    }
  }
  return out;
}

}  // namespace

CycNumber xi(int d, int a) { return CycNumber::zeta_power(d, a - 1); }

// ------------------------------------------------------------------ YElement

YElement YElement::scalar(AlgebraContext ctx, const LaurentPoly& c) {
  return basis(ctx, std::vector<int>(ctx.n, 0), std::vector<int>(ctx.n, 0), Perm(ctx.n), c);
}

YElement::Key YElement::make_key(const std::vector<int>& a, const std::vector<int>& lambda, const Perm& w) {
  Key k;
  k.reserve(3 * w.size());
  k.insert(k.end(), a.begin(), a.end());
  k.insert(k.end(), lambda.begin(), lambda.end());
  k.insert(k.end(), w.images0().begin(), w.images0().end());
  return k;
}

YElement YElement::basis(AlgebraContext ctx, const std::vector<int>& a, const std::vector<int>& lambda, const Perm& w,
                         const LaurentPoly& c) {
  if (static_cast<int>(a.size()) != ctx.n || static_cast<int>(lambda.size()) != ctx.n || w.size() != ctx.n)
    throw std::invalid_argument("basis index does not match the algebra size");
  std::vector<int> am(a);
  for (int& x : am) x = mod(x, ctx.d);
  YElement y(ctx);
  y.add_term(make_key(am, lambda, w), c);
  return y;
}

Perm YElement::key_perm(const Key& k) const {
  return Perm::from_images0(std::vector<int>(k.begin() + 2 * ctx_.n, k.end()));
}

void YElement::add_term(const Key& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void YElement::add_scaled(const YElement& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : x.terms_) add_term(k, c.is_one() ? v : v * c);
}

YElement YElement::operator-() const {
  YElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

YElement& YElement::operator+=(const YElement& o) {
  if (!(o.ctx_ == ctx_)) throw std::invalid_argument("context mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

YElement& YElement::operator-=(const YElement& o) {
  if (!(o.ctx_ == ctx_)) throw std::invalid_argument("context mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

YElement operator*(const LaurentPoly& c, const YElement& x) {
  YElement r(x.ctx());
  r.add_scaled(x, c);
  return r;
}

YElement YElement::mul_letter(const Letter& l) const {
  const int n = ctx_.n, d = ctx_.d;
  switch (l.kind) {
    case Letter::Kind::T: {
      check_index(l.index >= 1 && l.index <= n, "t", l.index, n);
      YElement out(ctx_);
      for (const auto& [k, c] : terms_) {
        Key nk = k;
        const int target = k[2 * n + l.index - 1];
        nk[target] = mod(k[target] + l.power, d);
        out.add_term(nk, c);
      }
      return out;
    }
    case Letter::Kind::X: {
      check_index(l.index >= 1 && l.index <= n, "X", l.index, n);
      YElement out = *this;
      const int eps = l.power > 0 ? 1 : -1;
      for (int r = 0; r < std::abs(l.power); ++r) out = mul_x_once(out, l.index - 1, eps);
      return out;
    }
    case Letter::Kind::G:
    case Letter::Kind::GInv: {
      check_index(l.index >= 1 && l.index < n, "g", l.index, n);
      YElement out(ctx_);
      for (const auto& [k, c] : terms_) {
        if (l.kind == Letter::Kind::G)
          mul_g_term(out, k, c, l.index - 1, n, d);
        else
          mul_ginv_term(out, k, c, l.index - 1, n, d);
      }
      return out;
    }
  }
  return *this;
}

YElement YElement::mul_word(const std::vector<Letter>& word) const {
  YElement r = *this;
  for (const auto& l : word) r = r.mul_letter(l);
  return r;
}

YElement operator*(const YElement& x, const YElement& y) {
  if (!(x.ctx_ == y.ctx_)) throw std::invalid_argument("context mismatch in product");
  const int n = x.ctx_.n;
  YElement out(x.ctx_);
  for (const auto& [k, c] : y.terms_) {
    YElement part = x;
    // t^a
    {
      YElement shifted(x.ctx_);
      for (const auto& [xk, xc] : part.terms_) {
        YElement::Key nk = xk;
        for (int j = 0; j < n; ++j) {
          const int target = xk[2 * n + j];
          nk[target] = mod(nk[target] + k[j], x.ctx_.d);
        }
        shifted.add_term(nk, xc);
      }
      part = std::move(shifted);
    }
    for (int j = 0; j < n; ++j)
      if (k[n + j] != 0) part = part.mul_letter(Letter::x(j + 1, k[n + j]));
    const Perm w = y.key_perm(k);
    for (int i : w.reduced_word()) part = part.mul_letter(Letter::g(i));
    out.add_scaled(part, c);
  }
  return out;
}

YElement YElement::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative element power");
  YElement r = one(ctx_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

int YElement::max_x_degree() const {
  int best = 0;
  for (const auto& [k, c] : terms_) {
    int s = 0;
    for (int j = 0; j < ctx_.n; ++j) s += std::abs(k[ctx_.n + j]);
    best = std::max(best, s);
  }
  return best;
}

std::string YElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const int n = ctx_.n;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + poly_canonical_string(c) + ")*[t";
    for (int j = 0; j < n; ++j) s += (j ? "," : "(") + std::to_string(k[j]);
    s += ") X";
    for (int j = 0; j < n; ++j) s += (j ? "," : "(") + std::to_string(k[n + j]);
    s += ") g" + key_perm(k).to_string() + "]";
  }
  return s;
}

YElement y_from_generator(AlgebraContext ctx, const Letter& gen) {
  if (gen.kind == Letter::Kind::X && gen.index != 1)
    throw IndexError("the affine generator is X_1; use x_elem for X_j");
  return YElement::one(ctx).mul_letter(gen);
}

YElement y_mul(const YElement& x, const YElement& y) { return x * y; }

YElement e_pair(AlgebraContext ctx, int j, int k) {
  check_index(j >= 1 && j <= ctx.n, "e", j, ctx.n);
  check_index(k >= 1 && k <= ctx.n, "e", k, ctx.n);
  YElement out(ctx);
  add_e_shifted(out, YElement::one(ctx).terms().begin()->first, j - 1, k - 1, LaurentPoly(1), ctx.d);
  return out;
}

YElement e_idempotent(AlgebraContext ctx, int i) {
  check_index(i >= 1 && i < ctx.n, "e", i, ctx.n);
  return e_pair(ctx, i, i + 1);
}

YElement idempotent_E(AlgebraContext ctx, const Character& chi) {
  if (chi.n() != ctx.n) throw std::invalid_argument("character size mismatch");
  YElement out = YElement::one(ctx);
  const LaurentPoly inv_d(Rational(1, ctx.d));
  for (int j = 1; j <= ctx.n; ++j) {
    YElement factor(ctx);
    for (int s = 0; s < ctx.d; ++s) {
      const CycNumber c = CycNumber::zeta_power(ctx.d, -static_cast<long>(s) * (chi.colors[j - 1] - 1));
      factor.add_scaled(t_elem(ctx, j, s), inv_d * LaurentPoly(c));
    }
    out = out * factor;
  }
  return out;
}

YElement t_elem(AlgebraContext ctx, int j, int p) {
  check_index(j >= 1 && j <= ctx.n, "t", j, ctx.n);
  std::vector<int> a(ctx.n, 0);
  a[j - 1] = p;
  return YElement::basis(ctx, a, std::vector<int>(ctx.n, 0), Perm(ctx.n));
}

YElement x_elem(AlgebraContext ctx, int j, int k) {
  check_index(j >= 1 && j <= ctx.n, "X", j, ctx.n);
  std::vector<int> lam(ctx.n, 0);
  lam[j - 1] = k;
  return YElement::basis(ctx, std::vector<int>(ctx.n, 0), lam, Perm(ctx.n));
}

YElement g_elem(AlgebraContext ctx, const Perm& w) {
  return YElement::basis(ctx, std::vector<int>(ctx.n, 0), std::vector<int>(ctx.n, 0), w);
}

const YElement& xtilde(AlgebraContext ctx, int i) {
  static std::mutex mtx;
  static std::map<std::tuple<int, int, int>, YElement> cache;
  check_index(i >= 1 && i <= ctx.n, "X~", i, ctx.n);
  const auto key = std::make_tuple(ctx.d, ctx.n, i);
  {
    std::lock_guard lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  YElement val = i == 1 ? x_elem(ctx, 1)
                        : y_from_generator(ctx, Letter::g_inv(i - 1)) * xtilde(ctx, i - 1) *
                              y_from_generator(ctx, Letter::g(i - 1));
  std::lock_guard lock(mtx);
  return cache.emplace(key, std::move(val)).first->second;
}

YElement embed(const YElement& x, int new_n) {
  const int n = x.ctx().n;
  if (new_n < n) throw std::invalid_argument("embedding must not shrink the algebra");
  YElement out(AlgebraContext{x.ctx().d, new_n});
  for (const auto& [k, c] : x.terms()) {
    YElement::Key nk(3 * new_n, 0);
    for (int j = 0; j < n; ++j) {
      nk[j] = k[j];
      nk[new_n + j] = k[n + j];
      nk[2 * new_n + j] = k[2 * n + j];
    }
    for (int j = n; j < new_n; ++j) nk[2 * new_n + j] = j;
    out.add_term(nk, c);
  }
  return out;
}

// ---------------------------------------------------------------- ChiElement

ChiElement::Key ChiElement::make_key(const Character& chi, const std::vector<int>& lambda, const Perm& w) {
  Key k(chi.colors);
  k.insert(k.end(), lambda.begin(), lambda.end());
  k.insert(k.end(), w.images0().begin(), w.images0().end());
  return k;
}

ChiElement ChiElement::basis(AlgebraContext ctx, const Character& chi, const std::vector<int>& lambda, const Perm& w,
                             const LaurentPoly& c) {
  ChiElement e(ctx);
  e.add_term(make_key(chi, lambda, w), c);
  return e;
}

Perm ChiElement::key_perm(const Key& k) const {
  return Perm::from_images0(std::vector<int>(k.begin() + 2 * ctx_.n, k.end()));
}

void ChiElement::add_term(const Key& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ChiElement& ChiElement::operator+=(const ChiElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

std::string ChiElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const int n = ctx_.n;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + poly_canonical_string(c) + ")*[E" + key_chi(k).to_string() + " X";
    for (int j = 0; j < n; ++j) s += (j ? "," : "(") + std::to_string(k[n + j]);
    s += ") g" + key_perm(k).to_string() + "]";
  }
  return s;
}

ChiElement to_chi_basis(const YElement& x) {
  const AlgebraContext ctx = x.ctx();
  const int n = ctx.n;
  const auto chis = enumerate_characters(ctx.d, n);
  ChiElement out(ctx);
  for (const auto& [k, c] : x.terms()) {
    for (const auto& chi : chis) {
      long e = 0;
      for (int j = 0; j < n; ++j) e += static_cast<long>(chi.colors[j] - 1) * k[j];
      ChiElement::Key nk(k);
      std::copy(chi.colors.begin(), chi.colors.end(), nk.begin());
      out.add_term(nk, c * LaurentPoly(CycNumber::zeta_power(ctx.d, e)));
    }
  }
  return out;
}

YElement from_chi_basis(const ChiElement& x) {
  const AlgebraContext ctx = x.ctx();
  const int n = ctx.n, d = ctx.d;
  Rational norm(1);
  for (int j = 0; j < n; ++j) norm /= d;
  YElement out(ctx);
  for (const auto& [k, c] : x.terms()) {
    std::vector<int> a(n, 0);
    const LaurentPoly base = c * LaurentPoly(norm);
    for (;;) {
      long e = 0;
      for (int j = 0; j < n; ++j) e -= static_cast<long>(k[j] - 1) * a[j];
      YElement::Key nk(k);
      std::copy(a.begin(), a.end(), nk.begin());
      out.add_term(nk, base * LaurentPoly(CycNumber::zeta_power(d, e)));
      int j = n - 1;
      while (j >= 0 && a[j] == d - 1) a[j--] = 0;
      if (j < 0) break;
      ++a[j];
    }
  }
  return out;
}

}  // namespace yh
