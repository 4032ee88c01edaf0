#include <random>

#include "doctest.h"
#include "yhecke/errors.hpp"
#include "yhecke/relations.hpp"
#include "yhecke/yokonuma.hpp"

using namespace yh;

namespace {

const LaurentPoly U2 = LaurentPoly::u(2);
const LaurentPoly V = LaurentPoly::v();

YElement gen(AlgebraContext c, Letter l) { return y_from_generator(c, l); }
YElement sc(AlgebraContext c, const LaurentPoly& p) { return YElement::scalar(c, p); }

YElement random_monomial(std::mt19937& rng, AlgebraContext ctx, int max_abs_lambda) {
  std::uniform_int_distribution<int> ad(0, ctx.d - 1), ld(-max_abs_lambda, max_abs_lambda);
  std::vector<int> a(ctx.n), lam(ctx.n);
  for (auto& x : a) x = ad(rng);
  for (auto& x : lam) x = ld(rng);
  const auto perms = all_perms(ctx.n);
  std::uniform_int_distribution<std::size_t> pd(0, perms.size() - 1);
  return YElement::basis(ctx, a, lam, perms[pd(rng)]);
}

// Finite Hecke algebra product via left multiplication by T_s:
// T_s T_w = T_{sw} if l(sw) > l(w), else u^2 T_{sw} + v T_w.
std::map<Perm, LaurentPoly> hecke_left_mul(int s, const std::map<Perm, LaurentPoly>& x, int n) {
  std::map<Perm, LaurentPoly> out;
  const Perm sp = Perm::simple(n, s);
  auto add = [&](const Perm& w, const LaurentPoly& c) {
    auto& slot = out[w];
    slot += c;
    if (slot.is_zero()) out.erase(w);
  };
  for (const auto& [w, c] : x) {
    const Perm sw = sp * w;
    if (sw.length() > w.length()) {
      add(sw, c);
    } else {
      add(sw, c * U2);
      add(w, c * V);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("generators and the documented small products") {
  const AlgebraContext c22{2, 2};
  const YElement e1 = e_idempotent(c22, 1);
  // e_1 = 1/2 (1 + t_1 t_2^{-1})
  CHECK(e1 == sc(c22, Rational(1, 2)) * (YElement::one(c22) + t_elem(c22, 1) * t_elem(c22, 2, -1)));
  CHECK(gen(c22, Letter::g_inv(1)) ==
        sc(c22, LaurentPoly::u(-2)) * gen(c22, Letter::g(1)) - sc(c22, LaurentPoly::u(-2) * V) * e1);
  CHECK(gen(c22, Letter::g(1)) * gen(c22, Letter::g(1)) == sc(c22, U2) + sc(c22, V) * e1 * gen(c22, Letter::g(1)));
  CHECK(gen(c22, Letter::g(1)) * t_elem(c22, 1) == t_elem(c22, 2) * gen(c22, Letter::g(1)));
  // R1 and the definition of X_2
  const YElement g1 = gen(c22, Letter::g(1)), x1 = gen(c22, Letter::x(1));
  CHECK(g1 * x1 == x_elem(c22, 2) * g1 - sc(c22, V) * e1 * x_elem(c22, 2));
  CHECK(sc(c22, LaurentPoly::u(-2)) * g1 * x1 * g1 == x_elem(c22, 2));
  CHECK(gen(c22, Letter::t(1)).size() == 1);
  CHECK(gen(c22, Letter::x(1, -1)) == x_elem(c22, 1, -1));
  CHECK_THROWS_AS(gen(c22, Letter::g(2)), IndexError);
  CHECK_THROWS_AS(gen(c22, Letter::t(3)), IndexError);
  CHECK_THROWS_AS(e_idempotent(c22, 2), IndexError);
}

TEST_CASE("idempotents") {
  for (int d = 1; d <= 3; ++d) {
    const AlgebraContext ctx{d, 3};
    for (int i = 1; i < 3; ++i) {
      const YElement e = e_idempotent(ctx, i);
      CHECK(e * e == e);
      if (d == 1) CHECK(e == YElement::one(ctx));
    }
  }
  const AlgebraContext c21{2, 1};
  CHECK(idempotent_E(c21, Character{{1}}) == sc(c21, Rational(1, 2)) * (YElement::one(c21) + t_elem(c21, 1)));
  for (int d = 2; d <= 3; ++d) {
    const AlgebraContext ctx{d, 2};
    YElement sum(ctx);
    const auto chis = enumerate_characters(d, 2);
    for (const auto& a : chis) {
      const YElement ea = idempotent_E(ctx, a);
      sum += ea;
      for (const auto& b : chis) {
        const YElement prod = ea * idempotent_E(ctx, b);
        if (a == b)
          CHECK(prod == ea);
        else
          CHECK(prod.is_zero());
      }
      // E_chi t_j = xi_{chi_j} E_chi
      CHECK(ea * t_elem(ctx, 2) == sc(ctx, LaurentPoly(xi(d, a.colors[1]))) * ea);
    }
    CHECK(sum == YElement::one(ctx));
  }
}

TEST_CASE("defining relations hold in the engine") {
  for (int d = 1; d <= 3; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const AlgebraContext ctx{d, n};
      const auto results = check_defining_relations<YElement>(
          d, n, [&](const Letter& l) { return gen(ctx, l); }, [&](const LaurentPoly& p) { return sc(ctx, p); });
      for (const auto& r : results) {
        INFO("d=" << d << " n=" << n << " " << r.name);
        CHECK(r.ok);
      }
    }
  }
}

TEST_CASE("X elements: definition, commutation and passing rules") {
  for (int d = 1; d <= 2; ++d) {
    for (int n = 2; n <= 4; ++n) {
      const AlgebraContext ctx{d, n};
      // X_{i+1} = u^{-2} g_i X_i g_i evaluated as a word in generators only
      YElement xi_word = gen(ctx, Letter::x(1));
      for (int i = 1; i < n; ++i) {
        xi_word = sc(ctx, LaurentPoly::u(-2)) * gen(ctx, Letter::g(i)) * xi_word * gen(ctx, Letter::g(i));
        CHECK(xi_word == x_elem(ctx, i + 1));
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          CHECK(x_elem(ctx, i) * x_elem(ctx, j) == x_elem(ctx, j) * x_elem(ctx, i));
          CHECK(x_elem(ctx, i, -1) * x_elem(ctx, j) == x_elem(ctx, j) * x_elem(ctx, i, -1));
          CHECK(x_elem(ctx, i) * t_elem(ctx, j) == t_elem(ctx, j) * x_elem(ctx, i));
        }
        for (int k = 1; k < n; ++k) {
          if (i == k || i == k + 1) continue;
          CHECK(gen(ctx, Letter::g(k)) * x_elem(ctx, i) == x_elem(ctx, i) * gen(ctx, Letter::g(k)));
        }
      }
      // the four passing rules
      for (int i = 1; i < n; ++i) {
        const YElement g = gen(ctx, Letter::g(i)), e = e_idempotent(ctx, i);
        const YElement xi = x_elem(ctx, i), xn = x_elem(ctx, i + 1);
        const YElement xii = x_elem(ctx, i, -1), xni = x_elem(ctx, i + 1, -1);
        CHECK(g * xi == xn * g - sc(ctx, V) * e * xn);
        CHECK(g * xn == xi * g + sc(ctx, V) * e * xn);
        CHECK(g * xii == xni * g + sc(ctx, V) * e * xii);
        CHECK(g * xni == xii * g - sc(ctx, V) * e * xii);
      }
    }
  }
}

TEST_CASE("associativity on random monomials") {
  std::mt19937 rng(2024);
  for (int k = 0; k < 200; ++k) {
    const AlgebraContext ctx{1 + k % 2, 2 + (k / 2) % 2};
    const YElement a = random_monomial(rng, ctx, 1), b = random_monomial(rng, ctx, 1), c = random_monomial(rng, ctx, 1);
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("g_w g_w' = g_{ww'} when lengths add") {
  for (int d = 1; d <= 2; ++d) {
    const AlgebraContext ctx{d, 3};
    for (const auto& w : all_perms(3))
      for (const auto& w2 : all_perms(3))
        if ((w * w2).length() == w.length() + w2.length()) CHECK(g_elem(ctx, w) * g_elem(ctx, w2) == g_elem(ctx, w * w2));
    // g_w equals the product along every reduced word
    const Perm longest = Perm::from_one_line({3, 2, 1});
    CHECK(g_elem(ctx, longest) == gen(ctx, Letter::g(2)) * gen(ctx, Letter::g(1)) * gen(ctx, Letter::g(2)));
  }
}

TEST_CASE("d = 1 without X reproduces finite Hecke multiplication") {
  const int n = 3;
  const AlgebraContext ctx{1, n};
  for (const auto& w1 : all_perms(n)) {
    for (const auto& w2 : all_perms(n)) {
      // oracle: T_{w1} T_{w2} by left multiplication with the letters of w1
      std::map<Perm, LaurentPoly> acc{{w2, LaurentPoly(1)}};
      const auto word = w1.reduced_word();
      for (auto it = word.rbegin(); it != word.rend(); ++it) acc = hecke_left_mul(*it, acc, n);
      YElement expect(ctx);
      for (const auto& [w, c] : acc) expect += sc(ctx, c) * g_elem(ctx, w);
      CHECK(g_elem(ctx, w1) * g_elem(ctx, w2) == expect);
    }
  }
}

TEST_CASE("X tilde elements") {
  const AlgebraContext c12{1, 2};
  CHECK(xtilde(c12, 1) == x_elem(c12, 1));
  CHECK(xtilde(c12, 2) == x_elem(c12, 2) - sc(c12, LaurentPoly::u(-2) * V) * x_elem(c12, 1) * gen(c12, Letter::g(1)));
  for (int d = 1; d <= 2; ++d) {
    const AlgebraContext ctx{d, 3};
    for (int i = 1; i < 3; ++i)
      CHECK(gen(ctx, Letter::g(i)) * xtilde(ctx, i + 1) == xtilde(ctx, i) * gen(ctx, Letter::g(i)));
  }
}

TEST_CASE("embedding") {
  const AlgebraContext c2{2, 2}, c3{2, 3};
  CHECK(embed(gen(c2, Letter::g(1)), 3) == gen(c3, Letter::g(1)));
  CHECK(embed(YElement::one(c2), 3) == YElement::one(c3));
  CHECK(embed(embed(gen(c2, Letter::x(1)), 3), 4) == embed(gen(c2, Letter::x(1)), 4));
  // embedding is multiplicative
  const YElement a = gen(c2, Letter::g(1)) * gen(c2, Letter::x(1)) * gen(c2, Letter::t(2));
  const YElement b = gen(c2, Letter::g_inv(1)) * gen(c2, Letter::x(1, -1));
  CHECK(embed(a * b, 3) == embed(a, 3) * embed(b, 3));
}

TEST_CASE("character basis conversions are inverse") {
  std::mt19937 rng(5);
  for (int d = 2; d <= 3; ++d) {
    const AlgebraContext ctx{d, 2};
    for (int k = 0; k < 20; ++k) {
      const YElement y = random_monomial(rng, ctx, 1) + sc(ctx, LaurentPoly::v()) * random_monomial(rng, ctx, 1);
      CHECK(from_chi_basis(to_chi_basis(y)) == y);
    }
    for (const auto& chi : enumerate_characters(d, 2)) {
      const ChiElement e = ChiElement::basis(ctx, chi, {0, 0}, Perm(2));
      CHECK(from_chi_basis(e) == idempotent_E(ctx, chi));
      CHECK(to_chi_basis(from_chi_basis(e)) == e);
    }
  }
}
