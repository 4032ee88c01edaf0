#include <random>

#include "doctest.h"
#include "yhecke/errors.hpp"
#include "yhecke/isomorphism.hpp"

using namespace yh;

namespace {

YElement hecke(int n, std::vector<int> lam, const Perm& w, const LaurentPoly& c = LaurentPoly(1)) {
  return YElement::basis(AlgebraContext{1, n}, std::vector<int>(n, 0), std::move(lam), w, c);
}

ChiElement random_chi_monomial(std::mt19937& rng, AlgebraContext ctx) {
  const auto chars = enumerate_characters(ctx.d, ctx.n);
  const auto perms = all_perms(ctx.n);
  std::uniform_int_distribution<std::size_t> cd(0, chars.size() - 1), pd(0, perms.size() - 1);
  std::uniform_int_distribution<int> ld(-1, 1);
  std::vector<int> lam(ctx.n);
  for (auto& x : lam) x = ld(rng);
  return ChiElement::basis(ctx, chars[cd(rng)], lam, perms[pd(rng)]);
}

}  // namespace

TEST_CASE("generator images at d=2, n=2") {
  const AlgebraContext ctx{2, 2};
  const Character c12{{1, 2}}, c21{{2, 1}}, c11{{1, 1}}, c22{{2, 2}};
  const BlockMatrix g = psi_generator_image(ctx, Letter::g(1));
  CHECK(*g.entry(c11, c11) == hecke(2, {0, 0}, Perm::simple(2, 1)));
  CHECK(*g.entry(c22, c22) == hecke(2, {0, 0}, Perm::simple(2, 1)));
  CHECK(*g.entry(c12, c21) == hecke(2, {0, 0}, Perm(2), LaurentPoly::u()));
  CHECK(*g.entry(c21, c12) == hecke(2, {0, 0}, Perm(2), LaurentPoly::u()));
  CHECK(g.entry(c12, c12) == nullptr);
  CHECK(g.entry_count() == 4);

  const BlockMatrix t = psi_generator_image(ctx, Letter::t(1));
  CHECK(*t.entry(c11, c11) == hecke(2, {0, 0}, Perm(2)));
  CHECK(*t.entry(c22, c22) == hecke(2, {0, 0}, Perm(2), -1));
  CHECK(*t.entry(c12, c12) == hecke(2, {0, 0}, Perm(2)));
  CHECK(*t.entry(c21, c21) == hecke(2, {0, 0}, Perm(2), -1));

  const BlockMatrix x = psi_generator_image(ctx, Letter::x(1));
  CHECK(*x.entry(c11, c11) == hecke(2, {1, 0}, Perm(2)));
  CHECK(*x.entry(c22, c22) == hecke(2, {1, 0}, Perm(2)));
  CHECK(*x.entry(c12, c12) == hecke(2, {1, 0}, Perm(2)));
  CHECK(*x.entry(c21, c21) == hecke(2, {0, 1}, Perm(2)));
}

TEST_CASE("generator images agree with the basis map") {
  for (const AlgebraContext ctx : {AlgebraContext{2, 2}, AlgebraContext{2, 3}, AlgebraContext{3, 2}}) {
    std::vector<Letter> gens{Letter::x(1), Letter::x(1, -1)};
    for (int j = 1; j <= ctx.n; ++j) gens.push_back(Letter::t(j));
    for (int i = 1; i < ctx.n; ++i) {
      gens.push_back(Letter::g(i));
      gens.push_back(Letter::g_inv(i));
    }
    for (const auto& l : gens) CHECK(psi_generator_image(ctx, l) == psi_forward(y_from_generator(ctx, l)));
  }
}

TEST_CASE("basis map examples") {
  const AlgebraContext ctx{2, 2};
  const Character c12{{1, 2}}, c21{{2, 1}};
  // E_chi 1 -> 1_{chi,chi}
  const BlockMatrix e = psi_forward(ChiElement::basis(ctx, c21, {0, 0}, Perm(2)));
  CHECK(e.entry_count() == 1);
  CHECK(*e.entry(c21, c21) == hecke(2, {0, 0}, Perm(2)));
  // E_(2,1) g_1 -> u 1_{(2,1),(1,2)}
  const BlockMatrix eg = psi_forward(ChiElement::basis(ctx, c21, {0, 0}, Perm::simple(2, 1)));
  CHECK(eg.entry_count() == 1);
  CHECK(*eg.entry(c21, c12) == hecke(2, {0, 0}, Perm(2), LaurentPoly::u()));
  // E_(2,1) X_1 -> 1_{chi,chi} Xbar_2
  const BlockMatrix ex = psi_forward(ChiElement::basis(ctx, c21, {1, 0}, Perm(2)));
  CHECK(*ex.entry(c21, c21) == hecke(2, {0, 1}, Perm(2)));

  // inverse examples
  BlockMatrix unit(ctx);
  unit.add_entry(c21, c21, hecke(2, {0, 0}, Perm(2)));
  CHECK(psi_inverse(unit) == ChiElement::basis(ctx, c21, {0, 0}, Perm(2)));
  BlockMatrix off(ctx);
  off.add_entry(c21, c12, hecke(2, {0, 0}, Perm(2)));
  CHECK(psi_inverse(off) == ChiElement::basis(ctx, c21, {0, 0}, Perm::simple(2, 1), LaurentPoly::u(-1)));

  BlockMatrix bad(ctx);
  bad.add_entry(c21, c12, hecke(2, {0, 0}, Perm::simple(2, 1)));
  CHECK_THROWS(psi_inverse(bad));
}

TEST_CASE("block arithmetic") {
  const AlgebraContext ctx{2, 2};
  const Character c12{{1, 2}}, c21{{2, 1}};
  BlockMatrix a(ctx);
  a.add_entry(c12, c21, hecke(2, {0, 0}, Perm(2), LaurentPoly::u()));
  a.add_entry(c21, c12, hecke(2, {0, 0}, Perm(2), LaurentPoly::u()));
  BlockMatrix sq(ctx);
  sq.add_entry(c12, c12, hecke(2, {0, 0}, Perm(2), LaurentPoly::u(2)));
  sq.add_entry(c21, c21, hecke(2, {0, 0}, Perm(2), LaurentPoly::u(2)));
  CHECK(block_mul(a, a) == sq);
  CHECK(a * BlockMatrix::identity(ctx) == a);
  CHECK(BlockMatrix::identity(ctx) * a == a);
  CHECK((a - a).is_zero());

  const BlockMatrix g = psi_generator_image(ctx, Letter::g(1));
  const YElement rhs = YElement::scalar(ctx, LaurentPoly::u(2)) +
                       YElement::scalar(ctx, LaurentPoly::v()) * e_idempotent(ctx, 1) * y_from_generator(ctx, Letter::g(1));
  CHECK(g * g == psi_forward(rhs));

  const Composition mu11{{1, 1}};
  CHECK(block_diag_trace(psi_generator_image(ctx, Letter::t(1)), mu11).elem.is_zero());
  CHECK(block_diag_trace(a, mu11).elem.is_zero());
  CHECK(block_diag_trace(BlockMatrix::identity(ctx), mu11).elem == hecke(2, {0, 0}, Perm(2), 2));
}

TEST_CASE("defining relations on the images") {
  for (const AlgebraContext ctx : {AlgebraContext{2, 2}, AlgebraContext{3, 2}, AlgebraContext{2, 3}}) {
    for (const auto& r : verify_relations(ctx)) {
      INFO("d=" << ctx.d << " n=" << ctx.n << " " << r.name);
      CHECK(r.ok);
    }
  }
  CHECK_THROWS_AS(verify_relations(AlgebraContext{3, 3}, 100), ResourceError);
}

TEST_CASE("round trip on the full basis, d=2 n=2, |lambda| <= 1") {
  const AlgebraContext ctx{2, 2};
  int count = 0;
  for (const auto& chi : enumerate_characters(2, 2))
    for (const auto& w : all_perms(2))
      for (int l1 = -1; l1 <= 1; ++l1)
        for (int l2 = -1; l2 <= 1; ++l2) {
          const ChiElement b = ChiElement::basis(ctx, chi, {l1, l2}, w);
          REQUIRE(psi_inverse(psi_forward(b)) == b);
          ++count;
        }
  CHECK(count == 4 * 2 * 9);
}

TEST_CASE("morphism property on random pairs") {
  std::mt19937 rng(11);
  for (const AlgebraContext ctx : {AlgebraContext{2, 2}, AlgebraContext{3, 2}}) {
    for (int k = 0; k < 30; ++k) {
      const ChiElement a = random_chi_monomial(rng, ctx), b = random_chi_monomial(rng, ctx);
      const YElement prod = from_chi_basis(a) * from_chi_basis(b);
      REQUIRE(psi_forward(prod) == psi_forward(a) * psi_forward(b));
    }
  }
}

TEST_CASE("braid images have one entry per row") {
  std::mt19937 rng(3);
  const AlgebraContext ctx{2, 3};
  std::uniform_int_distribution<int> kind(0, 4), idx(1, 2), strand(1, 3);
  for (int k = 0; k < 20; ++k) {
    BlockMatrix m = BlockMatrix::identity(ctx);
    for (int step = 0; step < 6; ++step) {
      Letter l = Letter::t(1);
      switch (kind(rng)) {
        case 0: l = Letter::g(idx(rng)); break;
        case 1: l = Letter::g_inv(idx(rng)); break;
        case 2: l = Letter::x(1); break;
        case 3: l = Letter::x(1, -1); break;
        default: l = Letter::t(strand(rng)); break;
      }
      m = m * psi_generator_image(ctx, l);
      REQUIRE(m.max_row_support() <= 1);
    }
  }
}
