#pragma once

// Evaluates every defining relation of the affine Yokonuma-Hecke algebra on
// a family of generator images. Works for any element type with +, -, *
// and is_zero().

#include <string>
#include <vector>

#include "yhecke/coeffring.hpp"
#include "yhecke/yokonuma.hpp"

namespace yh {

struct RelationResult {
  std::string name;
  bool ok;
};

template <class Elem, class GenFn, class ScalarFn>
std::vector<RelationResult> check_defining_relations(int d, int n, GenFn gen, ScalarFn scalar) {
  std::vector<RelationResult> out;
  auto record = [&](std::string name, const Elem& lhs, const Elem& rhs) {
    out.push_back({std::move(name), (lhs - rhs).is_zero()});
  };
  auto si = [](int i) { return "_" + std::to_string(i); };
  const Elem one = scalar(LaurentPoly(1));
  std::vector<Elem> g, ginv, t;
  for (int i = 1; i < n; ++i) {
    g.push_back(gen(Letter::g(i)));
    ginv.push_back(gen(Letter::g_inv(i)));
  }
  for (int j = 1; j <= n; ++j) t.push_back(gen(Letter::t(j)));
  const Elem x = gen(Letter::x(1, 1));
  const Elem xinv = gen(Letter::x(1, -1));
  auto e = [&](int i) {
    Elem acc = scalar(LaurentPoly(0));
    for (int s = 1; s <= d; ++s) acc = acc + gen(Letter::t(i, s)) * gen(Letter::t(i + 1, -s));
    return scalar(LaurentPoly(Rational(1, d))) * acc;
  };

  for (int i = 1; i < n; ++i)
    for (int j = i + 2; j < n; ++j) record("g" + si(i) + "g" + si(j) + " commute", g[i - 1] * g[j - 1], g[j - 1] * g[i - 1]);
  for (int i = 1; i + 1 < n; ++i)
    record("braid g" + si(i) + "g" + si(i + 1), g[i - 1] * g[i] * g[i - 1], g[i] * g[i - 1] * g[i]);
  if (n >= 2) record("X_1 g_1 X_1 g_1 = g_1 X_1 g_1 X_1", x * g[0] * x * g[0], g[0] * x * g[0] * x);
  for (int i = 2; i < n; ++i) record("X_1 g" + si(i) + " commute", x * g[i - 1], g[i - 1] * x);
  record("X_1 X_1^-1 = 1", x * xinv, one);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) record("t" + si(i) + " t" + si(j) + " commute", t[i - 1] * t[j - 1], t[j - 1] * t[i - 1]);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int sj = j == i ? i + 1 : (j == i + 1 ? i : j);
      record("g" + si(i) + " t" + si(j) + " = t" + si(sj) + " g" + si(i), g[i - 1] * t[j - 1], t[sj - 1] * g[i - 1]);
    }
  for (int j = 1; j <= n; ++j) {
    Elem p = one;
    for (int s = 0; s < d; ++s) p = p * t[j - 1];
    record("t" + si(j) + "^d = 1", p, one);
    record("X_1 t" + si(j) + " commute", x * t[j - 1], t[j - 1] * x);
  }
  for (int i = 1; i < n; ++i) {
    const Elem ei = e(i);
    record("g" + si(i) + "^2 = u^2 + v e" + si(i) + " g" + si(i), g[i - 1] * g[i - 1],
           scalar(LaurentPoly::u(2)) + scalar(LaurentPoly::v()) * ei * g[i - 1]);
    record("g" + si(i) + " g" + si(i) + "^-1 = 1", g[i - 1] * ginv[i - 1], one);
  }
  return out;
}

}  // namespace yh
