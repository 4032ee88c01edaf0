#include "yhecke/traces.hpp"

#include <algorithm>
#include <mutex>

#include "yhecke/errors.hpp"

namespace yh {

namespace {

struct CycleError : std::logic_error {
  using std::logic_error::logic_error;
};

AlgebraContext hecke(int m) { return AlgebraContext{1, m}; }

// Splits the basis element X^lambda g_w of level m (m >= 2) as
// X_m^k * X^lambda' g_w' * (g_{m-1} g_{m-2} ... g_j), w' in S_{m-1}.
struct TowerSplit {
  int k;
  int j0;  // 0-based position with w(j0) = m-1; j0 == m-1 means no tail
  YElement head;  // X^lambda' g_w' at level m-1
};

TowerSplit split_top(int m, const YElement::Key& key) {
  std::vector<int> lam(key.begin() + m, key.begin() + 2 * m);
  std::vector<int> w(key.begin() + 2 * m, key.end());
  const int j0 = static_cast<int>(std::find(w.begin(), w.end(), m - 1) - w.begin());
  w.erase(w.begin() + j0);
  const int k = lam.back();
  lam.pop_back();
  return {k, j0, YElement::basis(hecke(m - 1), std::vector<int>(m - 1, 0), lam, Perm::from_images0(w))};
}

// g_{m-2} g_{m-3} ... g_{j0+1} applied on the right of x (level m-1).
YElement times_tail(const YElement& x, int m, int j0) {
  YElement r = x;
  for (int i = m - 2; i >= j0 + 1; --i) r = r.mul_letter(Letter::g(i));
  return r;
}

// Same word applied on the left.
YElement tail_times(const YElement& x, int m, int j0) {
  YElement b = YElement::one(hecke(m - 1));
  for (int i = m - 2; i >= j0 + 1; --i) b = b.mul_letter(Letter::g(i));
  return b * x;
}

int l1_degree(int m, const YElement::Key& key) {
  int s = 0;
  for (int j = 0; j < m; ++j) s += std::abs(key[m + j]);
  return s;
}

LaurentPoly ocneanu_key(int m, const YElement::Key& key, std::map<YElement::Key, LaurentPoly>& memo) {
  if (m == 1) return LaurentPoly(1);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const TowerSplit s = split_top(m, key);
  LaurentPoly value;
  if (s.j0 == m - 1) {
    for (const auto& [k, c] : s.head.terms()) value += c * ocneanu_key(m - 1, k, memo);
    value *= markov_z();
  } else {
    const YElement reduced = times_tail(s.head, m, s.j0);
    for (const auto& [k, c] : reduced.terms()) value += c * ocneanu_key(m - 1, k, memo);
  }
  memo.emplace(key, value);
  return value;
}

}  // namespace

// ------------------------------------------------------------------- params

LaurentPoly TraceParams::value(int a) const {
  if (a == 0) return LaurentPoly(1);
  auto it = values.find(a);
  return it != values.end() ? it->second : LaurentPoly::x(color, a);
}

MarkovSpec MarkovSpec::symbolic(int d, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  subset_to_socle(subset, d);  // validates
  MarkovSpec s{d, subset, {}};
  for (int k : s.subset) s.params[k] = TraceParams{k, {}};
  return s;
}

MarkovSpec MarkovSpec::from_params(int d, std::vector<int> subset, const std::map<int, TraceParams>& all) {
  MarkovSpec s = symbolic(d, std::move(subset));
  for (int k : s.subset) {
    auto it = all.find(k);
    if (it != all.end()) s.params[k] = it->second;
  }
  return s;
}

std::vector<std::vector<int>> nonempty_subsets(const std::vector<int>& set) {
  std::vector<std::vector<int>> out;
  const int n = static_cast<int>(set.size());
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(set[i]);
    out.push_back(std::move(s));
  }
  return out;
}

std::map<int, TraceParams> symbolic_params(const std::vector<int>& set) {
  std::map<int, TraceParams> p;
  for (int k : set) p[k] = TraceParams{k, {}};
  return p;
}

// ------------------------------------------------------------------ Ocneanu

LaurentPoly ocneanu_trace(const YElement& h) {
  if (h.ctx().d != 1) throw std::invalid_argument("the Ocneanu trace lives on the Hecke algebra (d = 1)");
  const int m = h.ctx().n;
  std::map<YElement::Key, LaurentPoly> memo;
  LaurentPoly value;
  for (const auto& [k, c] : h.terms()) {
    for (int j = 0; j < m; ++j)
      if (k[m + j] != 0) throw std::invalid_argument("the Ocneanu trace is defined on elements without X powers");
    value += c * ocneanu_key(m, k, memo);
  }
  return value;
}

// --------------------------------------------------------------- X~ powers

const YElement& xtilde_power(int m, int k) {
  static std::mutex mtx;
  static std::map<std::pair<int, int>, YElement> cache;
  const auto key = std::make_pair(m, k);
  {
    std::lock_guard lock(mtx);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  const AlgebraContext ctx = hecke(m);
  YElement val(ctx);
  if (k == 0) {
    val = YElement::one(ctx);
  } else if (k == 1) {
    val = xtilde(ctx, m);
  } else if (k == -1) {
    val = m == 1 ? x_elem(ctx, 1, -1)
                 : y_from_generator(ctx, Letter::g_inv(m - 1)) * embed(xtilde_power(m - 1, -1), m) *
                       y_from_generator(ctx, Letter::g(m - 1));
  } else {
    const int step = k > 0 ? 1 : -1;
    val = xtilde_power(m, k - step) * xtilde_power(m, step);
  }
  std::lock_guard lock(mtx);
  return cache.emplace(key, std::move(val)).first->second;
}

// ------------------------------------------------------------ affine trace

struct AffineTrace::Impl {
  TraceParams params;
  TraceOptions opts;
  std::map<YElement::Key, LaurentPoly> memo;
  std::set<YElement::Key> in_progress;
  std::mt19937_64 rng;
  int conjugation_depth = 0;

  Impl(TraceParams p, TraceOptions o) : params(std::move(p)), opts(o), rng(o.random_seed.value_or(0)) {}

  bool randomized() const { return opts.random_seed.has_value(); }
  bool coin() { return (rng() & 1) != 0; }

  LaurentPoly trace(const YElement& h) {
    LaurentPoly value;
    const int m = h.ctx().n;
    if (!randomized()) {
      for (const auto& [k, c] : h.terms()) value += c * trace_key(m, k);
      return value;
    }
    std::vector<std::pair<YElement::Key, LaurentPoly>> terms(h.terms().begin(), h.terms().end());
    std::shuffle(terms.begin(), terms.end(), rng);
    for (const auto& [k, c] : terms) value += c * trace_key(m, k);
    return value;
  }

  struct ProgressGuard {
    std::set<YElement::Key>& set;
    YElement::Key key;
    ~ProgressGuard() { set.erase(key); }
  };

  LaurentPoly trace_key(int m, const YElement::Key& key) {
    if (!randomized()) {
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
    }
    if (l1_degree(m, key) > opts.degree_budget)
      throw ResourceError("affine trace: X-degree " + std::to_string(l1_degree(m, key)) + " exceeds the budget " +
                          std::to_string(opts.degree_budget));
    if (!in_progress.insert(key).second) throw CycleError("affine trace reduction revisited a basis element");
    ProgressGuard guard{in_progress, key};
    LaurentPoly value = compute(m, key);
    if (!randomized()) memo.emplace(key, value);
    return value;
  }

  LaurentPoly compute(int m, const YElement::Key& key) {
    if (m == 1) return params.value(key[1]);
    if (randomized() && conjugation_depth < 2 && coin()) {
      // tau(h) = tau(g_i^{-1} h g_i)
      std::uniform_int_distribution<int> pick(1, m - 1);
      const int i = pick(rng);
      const YElement h = YElement::basis(hecke(m), std::vector<int>(m, 0),
                                         std::vector<int>(key.begin() + m, key.begin() + 2 * m),
                                         Perm::from_images0(std::vector<int>(key.begin() + 2 * m, key.end())));
      const YElement conj = coin() ? y_from_generator(hecke(m), Letter::g_inv(i)) * h.mul_letter(Letter::g(i))
                                   : y_from_generator(hecke(m), Letter::g(i)) * h.mul_letter(Letter::g_inv(i));
      if (!conj.terms().count(key)) {
        ++conjugation_depth;
        try {
          LaurentPoly v = trace(conj);
          --conjugation_depth;
          return v;
        } catch (const CycleError&) {
          --conjugation_depth;
        }
      }
    }
    const TowerSplit s = split_top(m, key);
    if (s.j0 == m - 1) {
      if (s.k == 0) return markov_z() * trace(s.head);
      if (randomized() && coin()) {
        try {
          return solve_top_power(m, s, true);
        } catch (const CycleError&) {
        }
      }
      return solve_top_power(m, s, false);
    }
    // cycle the tail to the front: tau(X_m^k a g_{m-1} b) = tau(X_m^k (b a) g_{m-1})
    return with_top_crossing(m, s.k, tail_times(s.head, m, s.j0));
  }

  // tau(X_m^k a) from tau(X~_m^k a) = x_k z tau(a). The other terms T of
  // X~_m^k are traced as products T a without normal ordering, so the
  // reduction only reaches X_m-exponents closer to zero.
  LaurentPoly solve_top_power(int m, const TowerSplit& s, bool right_side) {
    const YElement& xt = xtilde_power(m, s.k);
    YElement::Key lead_key(3 * m, 0);
    lead_key[2 * m - 1] = s.k;
    for (int j = 0; j < m; ++j) lead_key[2 * m + j] = j;
    auto lead = xt.terms().find(lead_key);
    if (lead == xt.terms().end() || !lead->second.is_one())
      throw std::logic_error("affine trace: X~ power lacks the leading term X_m^k");
    LaurentPoly value = params.value(s.k) * markov_z() * trace(s.head);
    for (const auto& [tk, c] : xt.terms()) {
      if (tk == lead_key) continue;
      const TowerSplit t = split_top(m, tk);
      LaurentPoly part;
      if (t.j0 == m - 1) {
        const YElement inner = right_side ? s.head * t.head : t.head * s.head;
        part = trace(x_elem(hecke(m), m, t.k) * embed(inner, m));
      } else {
        part = with_top_crossing(m, t.k, tail_times(s.head, m, t.j0) * t.head);
      }
      value -= c * part;
    }
    return value;
  }

  // tau(X_m^k h g_{m-1}) for h at level m-1.
  LaurentPoly with_top_crossing(int m, int k, const YElement& h) {
    if (k == 0) return trace(h);
    const AlgebraContext low = hecke(m - 1), top = hecke(m);
    const LaurentPoly v = LaurentPoly::v();
    LaurentPoly value = trace(x_elem(low, m - 1, k) * h);
    if (k > 0) {
      for (int i = 1; i <= k; ++i) value += v * trace(x_elem(top, m, i) * embed(x_elem(low, m - 1, k - i) * h, m));
    } else {
      const int big = -k;
      for (int i = 0; i < big; ++i)
        value -= v * trace(x_elem(top, m, -i) * embed(x_elem(low, m - 1, -(big - i)) * h, m));
    }
    return value;
  }
};

AffineTrace::AffineTrace(TraceParams params, TraceOptions options)
    : impl_(std::make_unique<Impl>(std::move(params), options)) {}
AffineTrace::~AffineTrace() = default;
AffineTrace::AffineTrace(AffineTrace&&) noexcept = default;
AffineTrace& AffineTrace::operator=(AffineTrace&&) noexcept = default;

const TraceParams& AffineTrace::params() const { return impl_->params; }

LaurentPoly AffineTrace::operator()(const YElement& h) {
  if (h.ctx().d != 1) throw std::invalid_argument("the affine trace lives on the affine Hecke algebra (d = 1)");
  for (const auto& [k, c] : h.terms())
    for (int j = 0; j < h.ctx().n; ++j)
      if (k[j] != 0) throw std::invalid_argument("affine Hecke elements carry no t powers");
  return impl_->trace(h);
}

LaurentPoly affine_trace(const YElement& h, const TraceParams& params, const TraceOptions& options) {
  AffineTrace t(params, options);
  return t(h);
}

// -------------------------------------------------------------- basic trace

BasicTrace::BasicTrace(MarkovSpec spec, TraceOptions options) : spec_(std::move(spec)), options_(options) {
  for (int k : spec_.subset) {
    auto it = spec_.params.find(k);
    TraceParams p = it != spec_.params.end() ? it->second : TraceParams{k, {}};
    factor_.emplace(k, AffineTrace(std::move(p), options_));
  }
}

LaurentPoly BasicTrace::tensor_trace(const HeckeTensor& t) {
  if (!(socle_of(t.mu) == spec_.socle())) return LaurentPoly(0);
  const int n = t.elem.ctx().n;
  LaurentPoly total;
  for (const auto& [key, c] : t.elem.terms()) {
    const Perm w = t.elem.key_perm(key);
    if (!in_young_subgroup(w, t.mu)) throw std::invalid_argument("tensor entry is not in the parabolic subalgebra");
    LaurentPoly prod = c;
    for (int a = 1; a <= t.mu.d() && !prod.is_zero(); ++a) {
      const int size = t.mu.parts[a - 1];
      if (size == 0) continue;
      const int off = t.mu.offset(a);
      std::vector<int> lam(key.begin() + n + off, key.begin() + n + off + size);
      std::vector<int> img(size);
      for (int i = 0; i < size; ++i) img[i] = key[2 * n + off + i] - off;
      const YElement factor = YElement::basis(hecke(size), std::vector<int>(size, 0), lam, Perm::from_images0(img));
      prod *= factor_.at(a)(factor);
    }
    total += prod;
  }
  return total;
}

LaurentPoly BasicTrace::operator()(const BlockMatrix& m) {
  if (m.ctx().d != spec_.d) throw std::invalid_argument("trace spec and matrix disagree on d");
  const Composition soc = spec_.socle();
  LaurentPoly total;
  for (const auto& [mu, block] : m.blocks())
    if (socle_of(mu) == soc) total += tensor_trace(block_diag_trace(m, mu));
  return total;
}

LaurentPoly tensor_trace(const HeckeTensor& t, const MarkovSpec& spec, const TraceOptions& options) {
  BasicTrace b(spec, options);
  return b.tensor_trace(t);
}

LaurentPoly rho_basic(const BlockMatrix& m, const MarkovSpec& spec, const TraceOptions& options) {
  BasicTrace b(spec, options);
  return b(m);
}

LaurentPoly rho_basic(const YElement& x, const MarkovSpec& spec, const TraceOptions& options) {
  return rho_basic(psi_forward(x), spec, options);
}

// -------------------------------------------------------------- tilde trace

TildeTrace::TildeTrace(int d, std::vector<int> dset, std::map<int, TraceParams> params, TraceOptions options)
    : d_(d), dset_(std::move(dset)), params_(std::move(params)), options_(options) {
  std::sort(dset_.begin(), dset_.end());
  dset_.erase(std::unique(dset_.begin(), dset_.end()), dset_.end());
  if (dset_.empty()) throw std::invalid_argument("the color set D must be non-empty");
  subset_to_socle(dset_, d_);
}

BasicTrace& TildeTrace::basic(const std::vector<int>& subset) {
  auto it = basic_.find(subset);
  if (it == basic_.end())
    it = basic_.emplace(subset, BasicTrace(MarkovSpec::from_params(d_, subset, params_), options_)).first;
  return it->second;
}

LaurentPoly TildeTrace::operator()(const BlockMatrix& m) {
  LaurentPoly total;
  for (const auto& s : nonempty_subsets(dset_)) {
    const LaurentPoly coeff = markov_z().pow(static_cast<int>(s.size()) - 1);
    total += coeff * basic(s)(m);
  }
  return LaurentPoly(Rational(1, static_cast<long>(dset_.size()))) * total;
}

LaurentPoly rho_tilde(const YElement& x, int d, const std::vector<int>& dset, const std::map<int, TraceParams>& params,
                      const TraceOptions& options) {
  TildeTrace t(d, dset, params, options);
  return t(x);
}

LaurentPoly x_ab(int d, const std::vector<int>& dset, const std::map<int, TraceParams>& params, int a, int b) {
  LaurentPoly total;
  for (int k : dset) {
    auto it = params.find(k);
    const LaurentPoly xa = it != params.end() ? it->second.value(a) : TraceParams{k, {}}.value(a);
    total += xa * LaurentPoly(CycNumber::zeta_power(d, static_cast<long>(k - 1) * b));
  }
  return LaurentPoly(Rational(1, static_cast<long>(dset.size()))) * total;
}

}  // namespace yh
