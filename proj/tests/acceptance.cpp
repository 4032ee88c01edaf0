// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Usage: acceptance [criterion numbers...] (default: all).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "yhecke/suites.hpp"

using namespace yh;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::function<SuiteResult()> run;
};

SuiteConfig config(int samples, std::uint64_t seed, int degree_budget = 6) {
  SuiteConfig c;
  c.samples = samples;
  c.seed = seed;
  c.degree_budget = degree_budget;
  return c;
}

std::vector<Criterion> criteria() {
  return {
      {1, "unknot is 1 for |S| = 1 and 0 for |S| >= 2, d <= 4", [] { return suite_normalization(4); }},
      {2, "trefoil and Hopf link at d = 1", [] { return suite_classical(); }},
      {3, "skein relation on 100 random classical words (n <= 4, length <= 8)",
       [] { return suite_skein(config(100, 3), 4, 8); }},
      {4, "block isomorphism: relations, basis round trip, morphism on 100 pairs",
       [] {
         SuiteResult r("isomorphism");
         for (const AlgebraContext ctx : {AlgebraContext{2, 2}, AlgebraContext{2, 3}, AlgebraContext{3, 2}, AlgebraContext{3, 3}})
           r.merge(suite_isomorphism(ctx, config(100, 4), ctx.d == 2));
         return r;
       }},
      {5, "trace and Markov axioms of the basic traces, d <= 2, n <= 3",
       [] {
         SuiteResult r("trace axioms");
         for (int d = 1; d <= 2; ++d)
           for (int n = 1; n <= 3; ++n) r.merge(suite_trace_axioms(d, n, config(4, 50 + 10 * d + n)));
         return r;
       }},
      {6, "Markov-move invariance on 200 random framed affine words",
       [] { return suite_markov_moves(config(200, 6, 4), 4, 10, 3, 2); }},
      {7, "rho~ condition with x_{a,b}, d = 2, D = {1,2}, n <= 3",
       [] { return suite_tilde_condition(2, {1, 2}, 3, config(6, 7)); }},
      {8, "P^{3,{1,3}} = P^{2,{1,2}} on 20 random non-framed affine words",
       [] { return suite_d_reduction(3, {1, 3}, 3, config(20, 8)); }},
      {9, "Phi rescaling identity, d = 3, N = 2, on 10 random links",
       [] { return suite_phi_rescaling(3, 2, 4, config(10, 9)); }},
      {10, "affine trace vs Ocneanu on H_3 and reduction-order independence",
       [] { return suite_affine_trace(3, config(100, 10)); }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  int failures = 0;
  for (const auto& c : criteria()) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    std::string error;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && r.ok();
    failures += ok ? 0 : 1;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", secs);
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << " ("
              << r.passed << "/" << r.passed + r.failed << " checks, " << timing << ")" << std::endl;
    if (!error.empty()) std::cout << "  error: " << error << std::endl;
    for (const auto& f : r.failures) std::cout << "  failed: " << f << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
