#include <random>
#include <sstream>

#include "doctest.h"
#include "yhecke/errors.hpp"
#include "yhecke/invariants.hpp"

using namespace yh;

namespace {

const LaurentPoly Z = markov_z();
const LaurentPoly U = LaurentPoly::u(), V = LaurentPoly::v();

BraidWord random_word(std::mt19937& rng, int n, int len, int d, bool loops, bool framed) {
  BraidWord b{n, {}};
  std::uniform_int_distribution<int> kind(0, 3), sign(0, 1), strand(1, n), power(1, std::max(1, d - 1));
  while (static_cast<int>(b.letters.size()) < len) {
    const int k = kind(rng);
    if (k <= 1 && n >= 2) {
      std::uniform_int_distribution<int> idx(1, n - 1);
      b.letters.push_back(BraidLetter::sigma(idx(rng), sign(rng) ? 1 : -1));
    } else if (k == 2 && loops) {
      b.letters.push_back(BraidLetter::sigma0(sign(rng) ? 1 : -1));
    } else if (k == 3 && framed && d > 1) {
      b.letters.push_back(BraidLetter::tee(strand(rng), power(rng)));
    } else if (n < 2 && !loops && !(framed && d > 1)) {
      break;
    }
  }
  return b;
}

// Product of engine generators for the word with gamma = 1.
YElement engine_word(const BraidWord& b, int d) {
  YElement y = YElement::one(AlgebraContext{d, b.n});
  for (const auto& l : b.letters) {
    switch (l.kind) {
      case BraidLetter::Kind::Sigma: y = y.mul_letter(l.power > 0 ? Letter::g(l.index) : Letter::g_inv(l.index)); break;
      case BraidLetter::Kind::SigmaZero: y = y.mul_letter(Letter::x(1, l.power)); break;
      case BraidLetter::Kind::Tee: y = y.mul_letter(Letter::t(l.index, l.power)); break;
    }
  }
  return y;
}

}  // namespace

TEST_CASE("braid parsing") {
  const BraidWord tre = parse_braid("B2: s1 s1 s1");
  CHECK(tre.n == 2);
  CHECK(tre.letters.size() == 3);
  CHECK(parse_braid("B1: x").letters == std::vector<BraidLetter>{BraidLetter::sigma0()});
  const BraidWord mixed = parse_braid("B3: s1 s2^-1 t1^2 x^-1");
  CHECK(mixed.letters ==
        std::vector<BraidLetter>{BraidLetter::sigma(1), BraidLetter::sigma(2, -1), BraidLetter::tee(1, 2), BraidLetter::sigma0(-1)});
  CHECK(mixed.to_string() == "B3: s1 s2^-1 t1^2 x^-1");
  CHECK(parse_braid("B2: t2^-1", 3).letters.front().power == 2);
  CHECK(parse_braid("B3:").letters.empty());
  CHECK_THROWS_AS(parse_braid("B2: s2"), IndexError);
  CHECK_THROWS_AS(parse_braid("B2: t3"), IndexError);
  CHECK_THROWS_AS(parse_braid("B2: s1^2"), ParseError);
  CHECK_THROWS_AS(parse_braid("s1 s1"), ParseError);
  CHECK_THROWS_AS(parse_braid("B2: y1"), ParseError);
  CHECK_THROWS_AS(parse_braid("Bx: s1"), ParseError);
}

TEST_CASE("components and underlying permutation") {
  CHECK(components(parse_braid("B2: s1")) == 1);
  CHECK(components(parse_braid("B3:")) == 3);
  CHECK(components(parse_braid("B2: s1 s1")) == 2);
  CHECK(components(parse_braid("B3: s1 x t2 s2")) == 1);
  CHECK(underlying_perm(parse_braid("B3: s1 s2")) == Perm::from_word(3, {1, 2}));
}

TEST_CASE("delta images") {
  for (const AlgebraContext ctx : {AlgebraContext{2, 2}, AlgebraContext{3, 2}, AlgebraContext{2, 3}, AlgebraContext{3, 3}}) {
    const LaurentPoly g = LaurentPoly::gamma();
    for (int i = 1; i < ctx.n; ++i) {
      const BlockMatrix s = delta_letter_image(ctx, BraidLetter::sigma(i));
      const BlockMatrix e = psi_forward(e_idempotent(ctx, i));
      const BlockMatrix lhs = s * s;
      const BlockMatrix rhs = BlockMatrix::scalar(ctx, U.pow(2) * g.pow(2)) +
                              (U.pow(2) * (LaurentPoly(1) - g.pow(2))) * e + V * (e * s);
      CHECK(lhs == rhs);
      CHECK(s * delta_letter_image(ctx, BraidLetter::sigma(i, -1)) == BlockMatrix::identity(ctx));
      CHECK(delta_letter_image(ctx, BraidLetter::sigma(i), LaurentPoly(1)) == psi_generator_image(ctx, Letter::g(i)));
    }
    CHECK(delta_letter_image(ctx, BraidLetter::sigma0()) == psi_generator_image(ctx, Letter::x(1)));
    CHECK(delta_letter_image(ctx, BraidLetter::tee(2, 2)) == psi_generator_image(ctx, Letter::t(2, 2)));
  }

  // At gamma = 1 the image of a word is Psi of the engine product.
  std::mt19937 rng(5);
  for (int k = 0; k < 20; ++k) {
    const int d = 2 + k % 2, n = 2 + k % 2;
    const BraidWord b = random_word(rng, n, 6, d, true, true);
    DeltaOptions o;
    o.gamma = LaurentPoly(1);
    REQUIRE(delta_image(b, d, o) == psi_forward(engine_word(b, d)));
  }
}

TEST_CASE("pruned evaluation agrees with the full trace") {
  std::mt19937 rng(6);
  for (int k = 0; k < 15; ++k) {
    const int d = 2, n = 2 + k % 2;
    const BraidWord b = random_word(rng, n, 5, d, true, true);
    for (const auto& s : std::vector<std::vector<int>>{{1}, {2}, {1, 2}}) {
      const MarkovSpec spec = MarkovSpec::symbolic(d, s);
      REQUIRE(invariant_basic(b, spec) == rho_basic(delta_image(b, d), spec));
    }
  }
}

TEST_CASE("classical values") {
  const MarkovSpec d1 = MarkovSpec::symbolic(1, {1});
  // g^3 = u^2 v + (u^2 + v^2) g, then tau_2(1) = z and tau_2(g) = 1
  CHECK(invariant_basic(parse_braid("B2: s1 s1 s1"), d1) == 2 * U.pow(2) - U.pow(4) + V.pow(2));
  // g^2 = u^2 + v g
  CHECK(invariant_basic(parse_braid("B2: s1 s1"), d1) == U.pow(2) * Z + V);
  CHECK(invariant_basic(parse_braid("B2: s1 s1"), d1) == U.pow(2) * V.pow(-1) * (LaurentPoly(1) - U.pow(2)) + V);
  for (int d = 1; d <= 4; ++d) {
    for (int k = 1; k <= d; ++k) CHECK(invariant_basic(parse_braid("B1:"), MarkovSpec::symbolic(d, {k})).is_one());
    if (d >= 2) CHECK(invariant_basic(parse_braid("B1:"), MarkovSpec::symbolic(d, {1, 2})).is_zero());
  }
  // two-strand unlink
  CHECK(invariant_basic(parse_braid("B2:"), MarkovSpec::symbolic(2, {1, 2})) == LaurentPoly(2));
  CHECK(invariant_basic(parse_braid("B2:"), MarkovSpec::symbolic(2, {1})) == Z);
}

TEST_CASE("gamma is invisible at d = 1 and on one-component closures of |S| = 1") {
  const BraidWord b = parse_braid("B3: s1 s2^-1 s1 s2^-1");
  const LaurentPoly p = invariant_basic(b, MarkovSpec::symbolic(1, {1}));
  CHECK(!p.contains(VarId::gamma()));
  CHECK(invariant_basic(b, MarkovSpec::symbolic(2, {2})) == p);
}

TEST_CASE("skein relation at d = 1") {
  std::mt19937 rng(13);
  const MarkovSpec spec = MarkovSpec::symbolic(1, {1});
  for (int k = 0; k < 20; ++k) {
    const int n = 2 + k % 3;
    const BraidWord b = random_word(rng, n, 5, 1, false, false);
    std::uniform_int_distribution<int> idx(1, n - 1);
    const int i = idx(rng);
    BraidWord plus = b, minus = b;
    plus.letters.push_back(BraidLetter::sigma(i));
    minus.letters.push_back(BraidLetter::sigma(i, -1));
    REQUIRE(invariant_basic(plus, spec) - U.pow(2) * invariant_basic(minus, spec) == V * invariant_basic(b, spec));
  }
}

TEST_CASE("Markov moves") {
  const BraidWord tre = parse_braid("B2: s1 s1 s1");
  CHECK(conjugate(tre, BraidLetter::sigma(1)).to_string() == "B2: s1^-1 s1 s1 s1 s1");
  const BraidWord st = stabilize(parse_braid("B2: s1 s1"), 1);
  CHECK(st.to_string() == "B3: s1 s1 s2");
  CHECK(destabilize(st).to_string() == "B2: s1 s1");
  CHECK_THROWS(destabilize(parse_braid("B3: s2 s1 s2")));
  CHECK_THROWS(destabilize(parse_braid("B3: t3 s2")));
  CHECK_THROWS(destabilize(parse_braid("B2: s1 x")));

  std::mt19937 rng(17);
  for (int k = 0; k < 8; ++k) {
    const int d = 1 + k % 3;
    const BraidWord b = random_word(rng, 2, 5, d, true, true);
    const MarkovSpec spec = MarkovSpec::symbolic(d, d >= 2 ? std::vector<int>{1, 2} : std::vector<int>{1});
    const LaurentPoly p = invariant_basic(b, spec);
    REQUIRE(invariant_basic(conjugate(b, BraidLetter::sigma(1, -1)), spec) == p);
    REQUIRE(invariant_basic(conjugate(b, BraidLetter::sigma0()), spec) == p);
    REQUIRE(invariant_basic(conjugate(b, BraidLetter::tee(1)), spec) == p);
    REQUIRE(invariant_basic(stabilize(b, 1), spec) == p);
    REQUIRE(invariant_basic(stabilize(b, -1), spec) == p);
  }
}

TEST_CASE("framed and solid-torus unknots for rho~") {
  for (int d = 2; d <= 3; ++d) {
    const std::vector<int> dset = d == 2 ? std::vector<int>{1, 2} : std::vector<int>{1, 3};
    const auto params = symbolic_params(dset);
    LaurentPoly loop, frame;
    for (int k : dset) {
      loop += LaurentPoly::x(k, 1);
      frame += LaurentPoly(xi(d, k));
    }
    const LaurentPoly inv(Rational(1, static_cast<long>(dset.size())));
    CHECK(invariant_htilde(parse_braid("B1: x"), d, dset, params) == inv * loop);
    CHECK(invariant_htilde(parse_braid("B1: t1"), d, dset, params) == inv * frame);
    CHECK(invariant_htilde(parse_braid("B1:"), d, {1}, params).is_one());
  }
  // D = {1} on a classical word gives the d = 1 value
  const BraidWord b = parse_braid("B3: s1 s2 s1 s2");
  CHECK(invariant_htilde(b, 2, {1}, symbolic_params({1})) == invariant_basic(b, MarkovSpec::symbolic(1, {1})));
}

TEST_CASE("changes of variables") {
  CHECK(jl_specialize(LaurentPoly(7), JLConvention::Phi) == LaurentPoly(7));
  CHECK(jl_specialize(LaurentPoly::x(1, 2), JLConvention::Gamma) == LaurentPoly::x(1, 2));
  const LaurentPoly root = LaurentPoly::var_half(VarId::named("lambda"), 1);
  CHECK(jl_specialize(U, JLConvention::Phi) == root);
  CHECK(jl_specialize(V * LaurentPoly::gamma(), JLConvention::Phi) == root * jl_delta());
  CHECK(jl_specialize(LaurentPoly::gamma(), JLConvention::Gamma) == jl_q().pow(-1));
  CHECK(jl_specialize(U.pow(2), JLConvention::Phi) == jl_lambda());
}

TEST_CASE("structural checks") {
  const BraidWord tre = parse_braid("B2: s1 s1 s1"), hopf = parse_braid("B2: s1 s1");
  CHECK(check_component_vanishing(tre, MarkovSpec::symbolic(2, {1, 2})).ok);
  CHECK(check_component_vanishing(hopf, MarkovSpec::symbolic(3, {1, 2, 3})).ok);
  const CheckReport hopf2 = check_component_vanishing(hopf, MarkovSpec::symbolic(2, {1, 2}));
  CHECK(!hopf2.applicable);
  CHECK(!hopf2.lhs.is_zero());

  CHECK(check_prop_d_reduction(hopf, {2}, 2).ok);
  CHECK(check_prop_d_reduction(parse_braid("B3: s1 x s2 s1^-1 x"), {1, 3}, 3).ok);
  CHECK(check_prop_d_reduction(tre, {1, 2}, 2).ok);
  CHECK_THROWS(check_prop_d_reduction(parse_braid("B2: s1 t1"), {1, 2}, 2));

  // single component: the rescaling identity reduces to the |D| = 1 statement
  CHECK(check_phi_rescaling(tre, 2).ok);
  CHECK(check_phi_rescaling(parse_braid("B3: s1 s2"), 3).ok);
  CHECK_THROWS(check_phi_rescaling(hopf, 2));
  CHECK_THROWS(check_phi_rescaling(parse_braid("B1: x"), 2));

  // Two-component unlink at d = 3: rho^{{1}} = z, rho^{{1,2}} = 2 give
  // lhs = (1/3)(3 z + 3 z * 2) = 3z and rhs = 2 * (1/2)(2 z + z * 2) = 4z.
  const CheckReport unlink = check_phi_rescaling(parse_braid("B2:"), 3);
  CHECK(unlink.lhs == 3 * jl_specialize(Z, JLConvention::Phi));
  CHECK(unlink.rhs == 4 * jl_specialize(Z, JLConvention::Phi));
  CHECK(!unlink.ok);
}

TEST_CASE("link files") {
  std::istringstream in("# corpus\ntrefoil = B2: s1 s1 s1\n\nB2: s1 s1  # hopf\nloop= B1: x\n");
  const auto links = parse_link_file(in);
  REQUIRE(links.size() == 3);
  CHECK(links[0].name == "trefoil");
  CHECK(links[1].name == "line4");
  CHECK(links[1].braid.letters.size() == 2);
  CHECK(links[2].name == "loop");

  std::istringstream bad("B2: s1\nB2: s5\n");
  try {
    parse_link_file(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream empty("");
  CHECK(parse_link_file(empty).empty());
}
