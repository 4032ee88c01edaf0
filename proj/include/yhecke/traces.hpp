#pragma once

// Markov traces: the Ocneanu trace on finite Hecke algebras, the family of
// traces tau^x on affine Hecke algebras fixed by tau(X~_m^a h) = x_a tau(h),
// and the basic traces on affine Yokonuma-Hecke algebras obtained through
// the block decomposition.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "yhecke/isomorphism.hpp"

namespace yh {

/// Values x_a of an affine Hecke trace. Missing entries default to the
/// symbol x(color, a); x_0 is always 1.
struct TraceParams {
  int color = 1;
  std::map<int, LaurentPoly> values;

  LaurentPoly value(int a) const;
};

struct MarkovSpec {
  int d = 1;
  std::vector<int> subset;             // S, sorted, 1-based colors
  std::map<int, TraceParams> params;   // one entry per color in S

  /// Symbolic parameters x(k, a) for every k in S.
  static MarkovSpec symbolic(int d, std::vector<int> subset);
  /// Uses `all` (keyed by color) for the colors of `subset`.
  static MarkovSpec from_params(int d, std::vector<int> subset, const std::map<int, TraceParams>& all);
  Composition socle() const { return subset_to_socle(subset, d); }
};

/// v^{-1}(1 - u^2), the value tau_{m+1}(h) / tau_m(h) for h in level m.
inline LaurentPoly trace_scalar() { return markov_z(); }

/// Ocneanu trace of an element of the finite Hecke algebra H_m (the d = 1
/// engine, no X powers), normalized by tau_1(1) = 1.
LaurentPoly ocneanu_trace(const YElement& h);

struct TraceOptions {
  /// Largest allowed sum of |lambda_j| on any basis element reached.
  int degree_budget = 6;
  /// When set, reduction choices (conjugations, order of the X~ relation)
  /// are randomized and memoization is disabled.
  std::optional<std::uint64_t> random_seed;
};

/// Evaluator for tau^x on the affine Hecke algebras. Holds a memo table;
/// use one instance per thread.
class AffineTrace {
 public:
  explicit AffineTrace(TraceParams params, TraceOptions options = {});
  ~AffineTrace();
  AffineTrace(AffineTrace&&) noexcept;
  AffineTrace& operator=(AffineTrace&&) noexcept;

  /// h must live in the d = 1 engine; the level is h.ctx().n.
  LaurentPoly operator()(const YElement& h);

  const TraceParams& params() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

LaurentPoly affine_trace(const YElement& h, const TraceParams& params, const TraceOptions& options = {});

/// X~_m^k in the d = 1 engine on m strands (k may be negative).
const YElement& xtilde_power(int m, int k);

/// Evaluates the basic trace for a fixed spec, caching one AffineTrace per color.
class BasicTrace {
 public:
  explicit BasicTrace(MarkovSpec spec, TraceOptions options = {});

  const MarkovSpec& spec() const { return spec_; }

  /// Product over colors of the factor traces, summed over the terms of t.
  /// Zero unless the socle of t.mu corresponds to S.
  LaurentPoly tensor_trace(const HeckeTensor& t);
  LaurentPoly operator()(const BlockMatrix& m);
  LaurentPoly operator()(const YElement& x) { return (*this)(psi_forward(x)); }

 private:
  MarkovSpec spec_;
  TraceOptions options_;
  std::map<int, AffineTrace> factor_;
};

LaurentPoly tensor_trace(const HeckeTensor& t, const MarkovSpec& spec, const TraceOptions& options = {});
LaurentPoly rho_basic(const BlockMatrix& m, const MarkovSpec& spec, const TraceOptions& options = {});
LaurentPoly rho_basic(const YElement& x, const MarkovSpec& spec, const TraceOptions& options = {});

/// (1/|D|) sum over non-empty S in D of z^{|S|-1} rho^S, z = v^{-1}(1-u^2).
class TildeTrace {
 public:
  TildeTrace(int d, std::vector<int> dset, std::map<int, TraceParams> params, TraceOptions options = {});
  LaurentPoly operator()(const BlockMatrix& m);
  LaurentPoly operator()(const YElement& x) { return (*this)(psi_forward(x)); }
  /// rho^S for S a non-empty subset of D (cached evaluators).
  BasicTrace& basic(const std::vector<int>& subset);
  const std::vector<int>& dset() const { return dset_; }

 private:
  int d_;
  std::vector<int> dset_;
  std::map<int, TraceParams> params_;
  TraceOptions options_;
  std::map<std::vector<int>, BasicTrace> basic_;
};

LaurentPoly rho_tilde(const YElement& x, int d, const std::vector<int>& dset, const std::map<int, TraceParams>& params,
                      const TraceOptions& options = {});

/// x_{a,b} = (1/|D|) sum_{k in D} x_a^{(k)} xi_k^b.
LaurentPoly x_ab(int d, const std::vector<int>& dset, const std::map<int, TraceParams>& params, int a, int b);

/// Non-empty subsets of `set` in order of increasing bitmask.
std::vector<std::vector<int>> nonempty_subsets(const std::vector<int>& set);

/// Default symbolic parameters for the colors of `set`.
std::map<int, TraceParams> symbolic_params(const std::vector<int>& set);

}  // namespace yh
