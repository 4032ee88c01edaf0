#pragma once

// Verification suites shared by the command-line tool and the acceptance
// runner. Each suite counts individual checks; sampled suites draw their
// inputs from a seeded generator so runs are reproducible.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "yhecke/invariants.hpp"

namespace yh {

struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;  // first few failing checks

  bool ok() const { return failed == 0 && passed > 0; }
  void record(bool ok, const std::string& what);
  void merge(const SuiteResult& o);
  std::string summary() const;
};

struct SuiteConfig {
  int samples = 20;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;  // relation-check budget d^n * n!
  int degree_budget = 6;          // affine-trace X-degree budget
};

/// Random framed affine braid word; `max_loops` bounds the number of sigma_0
/// letters, `framed` allows t letters.
BraidWord random_braid(std::mt19937_64& rng, int n, int length, int d, int max_loops, bool framed);

/// Unknot values for d <= max_d: 1 when |S| = 1, 0 when |S| >= 2.
SuiteResult suite_normalization(int max_d);
/// Trefoil and Hopf link at d = 1 against their hand-derived values.
SuiteResult suite_classical();
/// P(b s_i c) - u^2 P(b s_i^-1 c) - v P(b c) = 0 at d = 1.
SuiteResult suite_skein(const SuiteConfig& cfg, int max_n, int max_len);
/// Relations, basis round trip (|lambda_j| <= 1) and the morphism property.
SuiteResult suite_isomorphism(AlgebraContext ctx, const SuiteConfig& cfg, bool round_trip);
/// Trace and Markov axioms of rho^{S,tau} for every S, on basis monomials and
/// on delta images with symbolic gamma and with gamma = 1.
SuiteResult suite_trace_axioms(int d, int n, const SuiteConfig& cfg);
/// Invariance of invariant_basic under conjugation and both stabilizations.
SuiteResult suite_markov_moves(const SuiteConfig& cfg, int max_n, int max_len, int max_d, int max_loops);
/// rho~(X~_n^a t_n^b h) = x_{a,b} rho~(h) for h in level n-1, a in [-1,1], b in 1..d.
SuiteResult suite_tilde_condition(int d, const std::vector<int>& dset, int max_n, const SuiteConfig& cfg);
/// P^{d,S} = P^{|S|,{1..|S|}} on random non-framed affine words.
SuiteResult suite_d_reduction(int d, const std::vector<int>& subset, int max_n, const SuiteConfig& cfg);
/// Vanishing for |S| > N on random framed affine words.
SuiteResult suite_component_vanishing(int max_d, int max_n, const SuiteConfig& cfg);
/// The Phi rescaling identity on random classical links with `n_comp` components.
SuiteResult suite_phi_rescaling(int d, int n_comp, int max_n, const SuiteConfig& cfg);
/// Affine trace vs Ocneanu on X-free basis elements of level n, and
/// independence of the reduction order on sampled products.
SuiteResult suite_affine_trace(int n, const SuiteConfig& cfg);

}  // namespace yh
