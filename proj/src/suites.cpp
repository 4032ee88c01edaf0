#include "yhecke/suites.hpp"

#include <sstream>

#include "yhecke/errors.hpp"

namespace yh {

namespace {

constexpr std::size_t kMaxFailures = 8;

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<int> random_subset(std::mt19937_64& rng, int d, int max_size) {
  for (;;) {
    std::vector<int> s;
    for (int k = 1; k <= d; ++k)
      if (uniform(rng, 0, 1)) s.push_back(k);
    if (!s.empty() && static_cast<int>(s.size()) <= max_size) return s;
  }
}

// t^a X^lambda g_w with a in Z/d, lambda_j in [-1, 1].
YElement random_monomial(std::mt19937_64& rng, AlgebraContext ctx) {
  std::vector<int> a(ctx.n), lam(ctx.n);
  for (auto& x : a) x = uniform(rng, 0, ctx.d - 1);
  for (auto& x : lam) x = uniform(rng, -1, 1);
  const auto perms = all_perms(ctx.n);
  return YElement::basis(ctx, a, lam, perms[uniform(rng, 0, static_cast<int>(perms.size()) - 1)]);
}

ChiElement random_chi_monomial(std::mt19937_64& rng, AlgebraContext ctx) {
  const auto chars = enumerate_characters(ctx.d, ctx.n);
  const auto perms = all_perms(ctx.n);
  std::vector<int> lam(ctx.n);
  for (auto& x : lam) x = uniform(rng, -1, 1);
  return ChiElement::basis(ctx, chars[uniform(rng, 0, static_cast<int>(chars.size()) - 1)], lam,
                           perms[uniform(rng, 0, static_cast<int>(perms.size()) - 1)]);
}

BraidLetter random_letter(std::mt19937_64& rng, int n, int d) {
  for (;;) {
    switch (uniform(rng, 0, 2)) {
      case 0:
        if (n >= 2) return BraidLetter::sigma(uniform(rng, 1, n - 1), uniform(rng, 0, 1) ? 1 : -1);
        break;
      case 1: return BraidLetter::sigma0(uniform(rng, 0, 1) ? 1 : -1);
      default:
        if (d >= 2) return BraidLetter::tee(uniform(rng, 1, n), uniform(rng, 1, d - 1));
        break;
    }
  }
}

// X~_n^{-1} = g_{n-1}^{-1} X~_{n-1}^{-1} g_{n-1}, X~_1^{-1} = X_1^{-1}.
YElement xtilde_inverse(AlgebraContext ctx, int n) {
  YElement r = x_elem(ctx, 1, -1);
  for (int i = 1; i < n; ++i)
    r = y_from_generator(ctx, Letter::g_inv(i)) * r * y_from_generator(ctx, Letter::g(i));
  return r;
}

TraceOptions trace_options(const SuiteConfig& cfg) {
  TraceOptions o;
  o.degree_budget = cfg.degree_budget;
  return o;
}

std::string set_string(const std::vector<int>& s) {
  std::string r = "{";
  for (std::size_t i = 0; i < s.size(); ++i) r += (i ? "," : "") + std::to_string(s[i]);
  return r + "}";
}

}  // namespace

void SuiteResult::record(bool ok, const std::string& what) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (failures.size() < kMaxFailures) failures.push_back(what);
}

void SuiteResult::merge(const SuiteResult& o) {
  passed += o.passed;
  failed += o.failed;
  for (const auto& f : o.failures)
    if (failures.size() < kMaxFailures) failures.push_back(f);
}

std::string SuiteResult::summary() const {
  std::ostringstream os;
  os << name << ": " << passed << " passed, " << failed << " failed";
  for (const auto& f : failures) os << "\n  FAIL " << f;
  return os.str();
}

BraidWord random_braid(std::mt19937_64& rng, int n, int length, int d, int max_loops, bool framed) {
  BraidWord b{n, {}};
  int loops = 0;
  const bool can_cross = n >= 2, can_frame = framed && d >= 2;
  if (!can_cross && max_loops == 0 && !can_frame) return b;
  while (static_cast<int>(b.letters.size()) < length) {
    const int kind = uniform(rng, 0, 3);
    if (kind <= 1 && can_cross) {
      b.letters.push_back(BraidLetter::sigma(uniform(rng, 1, n - 1), uniform(rng, 0, 1) ? 1 : -1));
    } else if (kind == 2 && loops < max_loops) {
      b.letters.push_back(BraidLetter::sigma0(uniform(rng, 0, 1) ? 1 : -1));
      ++loops;
    } else if (kind == 3 && can_frame) {
      b.letters.push_back(BraidLetter::tee(uniform(rng, 1, n), uniform(rng, 1, d - 1)));
    } else if (!can_cross && !can_frame && loops >= max_loops) {
      break;
    }
  }
  return b;
}

SuiteResult suite_normalization(int max_d) {
  SuiteResult r{"normalization"};
  const BraidWord unknot = parse_braid("B1:");
  for (int d = 1; d <= max_d; ++d) {
    std::vector<int> all(d);
    for (int k = 0; k < d; ++k) all[k] = k + 1;
    for (const auto& s : nonempty_subsets(all)) {
      const LaurentPoly p = invariant_basic(unknot, MarkovSpec::symbolic(d, s));
      const bool ok = s.size() == 1 ? p.is_one() : p.is_zero();
      r.record(ok, "unknot d=" + std::to_string(d) + " S=" + set_string(s) + " gave " + p.to_string());
    }
  }
  return r;
}

SuiteResult suite_classical() {
  SuiteResult r{"classical"};
  const LaurentPoly u = LaurentPoly::u(), v = LaurentPoly::v();
  const MarkovSpec spec = MarkovSpec::symbolic(1, {1});
  const LaurentPoly trefoil = invariant_basic(parse_braid("B2: s1 s1 s1"), spec);
  r.record(trefoil == 2 * u.pow(2) - u.pow(4) + v.pow(2), "trefoil gave " + trefoil.to_string());
  const LaurentPoly hopf = invariant_basic(parse_braid("B2: s1 s1"), spec);
  r.record(hopf == u.pow(2) * v.pow(-1) * (LaurentPoly(1) - u.pow(2)) + v, "Hopf link gave " + hopf.to_string());
  return r;
}

SuiteResult suite_skein(const SuiteConfig& cfg, int max_n, int max_len) {
  SuiteResult r{"skein"};
  std::mt19937_64 rng(cfg.seed);
  const MarkovSpec spec = MarkovSpec::symbolic(1, {1});
  const LaurentPoly u2 = LaurentPoly::u(2), v = LaurentPoly::v();
  for (int k = 0; k < cfg.samples; ++k) {
    const int n = uniform(rng, 2, max_n);
    const BraidWord b = random_braid(rng, n, uniform(rng, 0, max_len - 1), 1, 0, false);
    const int pos = uniform(rng, 0, static_cast<int>(b.letters.size()));
    const int i = uniform(rng, 1, n - 1);
    BraidWord plus = b, minus = b;
    plus.letters.insert(plus.letters.begin() + pos, BraidLetter::sigma(i));
    minus.letters.insert(minus.letters.begin() + pos, BraidLetter::sigma(i, -1));
    const LaurentPoly lhs = invariant_basic(plus, spec) - u2 * invariant_basic(minus, spec) - v * invariant_basic(b, spec);
    r.record(lhs.is_zero(), plus.to_string() + " vs " + minus.to_string());
  }
  return r;
}

SuiteResult suite_isomorphism(AlgebraContext ctx, const SuiteConfig& cfg, bool round_trip) {
  SuiteResult r{"isomorphism d=" + std::to_string(ctx.d) + " n=" + std::to_string(ctx.n)};
  for (const auto& rel : verify_relations(ctx, cfg.budget)) r.record(rel.ok, "relation " + rel.name);
  if (round_trip) {
    std::vector<int> lam(ctx.n, -1);
    const auto chars = enumerate_characters(ctx.d, ctx.n);
    const auto perms = all_perms(ctx.n);
    for (;;) {
      for (const auto& chi : chars)
        for (const auto& w : perms) {
          const ChiElement b = ChiElement::basis(ctx, chi, lam, w);
          r.record(psi_inverse(psi_forward(b)) == b, "round trip " + b.to_string());
        }
      int j = ctx.n - 1;
      while (j >= 0 && lam[j] == 1) lam[j--] = -1;
      if (j < 0) break;
      ++lam[j];
    }
  }
  std::mt19937_64 rng(cfg.seed);
  for (int k = 0; k < cfg.samples; ++k) {
    const ChiElement a = random_chi_monomial(rng, ctx), b = random_chi_monomial(rng, ctx);
    r.record(psi_forward(from_chi_basis(a) * from_chi_basis(b)) == psi_forward(a) * psi_forward(b),
             "morphism on " + a.to_string() + " * " + b.to_string());
  }
  return r;
}

SuiteResult suite_trace_axioms(int d, int n, const SuiteConfig& cfg) {
  SuiteResult r{"trace axioms d=" + std::to_string(d) + " n=" + std::to_string(n)};
  std::mt19937_64 rng(cfg.seed);
  const AlgebraContext ctx{d, n}, up{d, n + 1};
  std::vector<int> all(d);
  for (int k = 0; k < d; ++k) all[k] = k + 1;
  const TraceOptions opts = trace_options(cfg);
  for (const auto& s : nonempty_subsets(all)) {
    BasicTrace rho(MarkovSpec::symbolic(d, s), opts);
    const std::string tag = " S=" + set_string(s);
    for (int k = 0; k < cfg.samples; ++k) {
      const YElement x = random_monomial(rng, ctx), y = random_monomial(rng, ctx);
      r.record(rho(x * y) == rho(y * x), "trace property on monomials" + tag);
      const LaurentPoly base = rho(x);
      const YElement xe = embed(x, n + 1);
      r.record(rho(xe * y_from_generator(up, Letter::g(n))) == base, "Markov with g_n" + tag);
      r.record(rho(xe * y_from_generator(up, Letter::g_inv(n))) == base, "Markov with g_n^-1" + tag);

      const BraidWord b1 = random_braid(rng, n, 5, d, 1, true), b2 = random_braid(rng, n, 5, d, 1, true);
      const BlockMatrix m1 = delta_image(b1, d), m2 = delta_image(b2, d);
      r.record(rho(m1 * m2) == rho(m2 * m1), "trace property on " + b1.to_string() + ", " + b2.to_string() + tag);
      for (const bool symbolic : {true, false}) {
        DeltaOptions o;
        if (!symbolic) o.gamma = LaurentPoly(1);
        const LaurentPoly p = rho(delta_image(b1, d, o));
        for (int sign : {1, -1})
          r.record(rho(delta_image(stabilize(b1, sign), d, o)) == p,
                   "Markov on delta image of " + b1.to_string() + (symbolic ? " (gamma symbolic)" : " (gamma=1)") + tag);
      }
    }
  }
  return r;
}

SuiteResult suite_markov_moves(const SuiteConfig& cfg, int max_n, int max_len, int max_d, int max_loops) {
  SuiteResult r{"Markov moves"};
  std::mt19937_64 rng(cfg.seed);
  const TraceOptions opts = trace_options(cfg);
  for (int k = 0; k < cfg.samples; ++k) {
    const int d = uniform(rng, 1, max_d), n = uniform(rng, 1, max_n);
    const BraidWord b = random_braid(rng, n, uniform(rng, 0, max_len), d, max_loops, true);
    const MarkovSpec spec = MarkovSpec::symbolic(d, random_subset(rng, d, 2));
    const std::string tag = b.to_string() + " d=" + std::to_string(d) + " S=" + set_string(spec.subset);
    const BraidLetter by = random_letter(rng, n, d);
    const int sign = uniform(rng, 0, 1) ? 1 : -1;
    try {
      const LaurentPoly p = invariant_basic(b, spec, std::nullopt, opts);
      r.record(invariant_basic(conjugate(b, by), spec, std::nullopt, opts) == p, "conjugation of " + tag);
      r.record(invariant_basic(stabilize(b, sign), spec, std::nullopt, opts) == p,
               std::string("stabilization ") + (sign > 0 ? "+" : "-") + " of " + tag);
    } catch (const ResourceError& e) {
      throw ResourceError(std::string(e.what()) + " (on " + tag + ")");
    }
  }
  return r;
}

SuiteResult suite_tilde_condition(int d, const std::vector<int>& dset, int max_n, const SuiteConfig& cfg) {
  SuiteResult r{"rho~ condition d=" + std::to_string(d) + " D=" + set_string(dset)};
  std::mt19937_64 rng(cfg.seed);
  const auto params = symbolic_params(dset);
  TildeTrace rho(d, dset, params, trace_options(cfg));
  for (int n = 1; n <= max_n; ++n) {
    const AlgebraContext ctx{d, n};
    const YElement xt_pos = xtilde(ctx, n), xt_neg = xtilde_inverse(ctx, n);
    for (int k = 0; k < cfg.samples; ++k) {
      const YElement h = n == 1 ? YElement::one(ctx) : embed(random_monomial(rng, AlgebraContext{d, n - 1}), n);
      const LaurentPoly base = rho(h);
      for (int a = -1; a <= 1; ++a) {
        const YElement xa = a == 0 ? YElement::one(ctx) : (a > 0 ? xt_pos : xt_neg);
        for (int b = 1; b <= d; ++b) {
          const LaurentPoly lhs = rho(xa * t_elem(ctx, n, b) * h);
          r.record(lhs == x_ab(d, dset, params, a, b) * base,
                   "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b) + " h=" + h.to_string());
        }
      }
      if (n == 1) break;
    }
  }
  return r;
}

SuiteResult suite_d_reduction(int d, const std::vector<int>& subset, int max_n, const SuiteConfig& cfg) {
  SuiteResult r{"d-reduction d=" + std::to_string(d) + " S=" + set_string(subset)};
  std::mt19937_64 rng(cfg.seed);
  const TraceOptions opts = trace_options(cfg);
  for (int k = 0; k < cfg.samples; ++k) {
    const BraidWord b = random_braid(rng, uniform(rng, 1, max_n), uniform(rng, 0, 6), d, 2, false);
    const CheckReport rep = check_prop_d_reduction(b, subset, d, opts);
    r.record(rep.ok, rep.detail + ": " + rep.lhs.to_string() + " != " + rep.rhs.to_string());
  }
  return r;
}

SuiteResult suite_component_vanishing(int max_d, int max_n, const SuiteConfig& cfg) {
  SuiteResult r{"component vanishing"};
  std::mt19937_64 rng(cfg.seed);
  const TraceOptions opts = trace_options(cfg);
  for (int k = 0; k < cfg.samples; ++k) {
    const int d = uniform(rng, 2, max_d);
    const BraidWord b = random_braid(rng, uniform(rng, 1, max_n), uniform(rng, 0, 6), d, 1, true);
    const int n_comp = components(b);
    std::vector<int> all(d);
    for (int j = 0; j < d; ++j) all[j] = j + 1;
    for (const auto& s : nonempty_subsets(all)) {
      if (static_cast<int>(s.size()) <= n_comp) continue;
      const CheckReport rep = check_component_vanishing(b, MarkovSpec::symbolic(d, s), opts);
      r.record(rep.ok, rep.detail + " gave " + rep.lhs.to_string());
    }
  }
  return r;
}

SuiteResult suite_phi_rescaling(int d, int n_comp, int max_n, const SuiteConfig& cfg) {
  SuiteResult r{"Phi rescaling d=" + std::to_string(d) + " N=" + std::to_string(n_comp)};
  std::mt19937_64 rng(cfg.seed);
  const TraceOptions opts = trace_options(cfg);
  int done = 0;
  for (int attempt = 0; done < cfg.samples && attempt < 1000 * cfg.samples; ++attempt) {
    const BraidWord b = random_braid(rng, uniform(rng, n_comp, max_n), uniform(rng, 0, 6), d, 0, false);
    if (components(b) != n_comp) continue;
    ++done;
    const CheckReport rep = check_phi_rescaling(b, d, opts);
    r.record(rep.ok, rep.detail + ": lhs " + rep.lhs.to_string() + ", rhs " + rep.rhs.to_string());
  }
  return r;
}

SuiteResult suite_affine_trace(int n, const SuiteConfig& cfg) {
  SuiteResult r{"affine trace n=" + std::to_string(n)};
  const AlgebraContext ctx{1, n};
  const TraceParams params{1, {}};
  AffineTrace tau(params, trace_options(cfg));
  for (const auto& w : all_perms(n)) {
    const YElement g = g_elem(ctx, w);
    r.record(tau(g) == ocneanu_trace(g), "X-free basis element " + w.to_string());
  }
  std::mt19937_64 rng(cfg.seed);
  for (int k = 0; k < cfg.samples; ++k) {
    const YElement x = random_monomial(rng, ctx) * random_monomial(rng, ctx);
    const LaurentPoly expect = tau(x);
    TraceOptions o = trace_options(cfg);
    o.random_seed = rng();
    r.record(affine_trace(x, params, o) == expect, "reduction order on " + x.to_string());
  }
  return r;
}

}  // namespace yh
