#include "yhecke/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "yhecke/errors.hpp"
#include "yhecke/invariants.hpp"
#include "yhecke/suites.hpp"

namespace yh::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
  int d = 0;  // 0: per-command default
  int n = 0;
  std::vector<int> subset;
  std::vector<int> dset;
  std::string gamma = "sym";
  std::string braid;
  std::string input;
  std::string output;
  std::string params;
  int budget = 6;
  int threads = 1;
  std::uint64_t seed = 1;
  int samples = 20;
  std::string suite;
  std::string prop = "all";
};

// Flag and data errors that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int or_default(int v, int def) { return v > 0 ? v : def; }

std::optional<LaurentPoly> gamma_value(const std::string& mode, int d) {
  if (mode == "sym") return std::nullopt;
  return parse_poly(mode, d);
}

std::string gamma_label(const std::optional<LaurentPoly>& g) {
  return g ? poly_canonical_string(*g) : std::string("symbolic");
}

// {"k,a": "<poly>", ...}
std::map<int, TraceParams> read_params(const std::string& path, int d) {
  std::map<int, TraceParams> out;
  if (path.empty()) return out;
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read parameter file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (!j.is_object()) throw UsageError(path + ": expected an object of \"k,a\": polynomial entries");
  for (const auto& [key, value] : j.items()) {
    int k = 0, a = 0;
    char comma = 0;
    std::istringstream ks(key);
    if (!(ks >> k >> comma >> a) || comma != ',' || !(ks >> std::ws).eof())
      throw UsageError(path + ": bad key \"" + key + "\", expected \"k,a\"");
    if (k < 1 || k > d) throw UsageError(path + ": color " + std::to_string(k) + " outside 1.." + std::to_string(d));
    if (!value.is_string()) throw UsageError(path + ": value of \"" + key + "\" must be a string");
    auto& p = out.try_emplace(k, TraceParams{k, {}}).first->second;
    p.values[a] = parse_poly(value.get<std::string>(), d);
  }
  return out;
}

struct Evaluator {
  int d = 1;
  std::vector<int> subset;
  std::vector<int> dset;
  std::optional<LaurentPoly> gamma;
  std::map<int, TraceParams> params;
  TraceOptions options;

  Json record(const std::string& name, const BraidWord& b) const {
    const bool tilde = !dset.empty();
    const LaurentPoly p = tilde ? invariant_htilde(b, d, dset, params, gamma, options)
                                : invariant_basic(b, MarkovSpec::from_params(d, subset, params), gamma, options);
    Json j;
    if (!name.empty()) j["name"] = name;
    j["braid"] = b.to_string();
    j["n"] = b.n;
    j["d"] = d;
    j[tilde ? "D" : "S"] = tilde ? dset : subset;
    j["gamma"] = gamma_label(gamma);
    j["components"] = components(b);
    j["polynomial"] = poly_canonical_string(p);
    return j;
  }
};

Evaluator make_evaluator(const RunConfig& c) {
  Evaluator e;
  e.d = or_default(c.d, 1);
  if (!c.subset.empty() && !c.dset.empty()) throw UsageError("--set and --dset are mutually exclusive");
  e.subset = c.subset.empty() && c.dset.empty() ? std::vector<int>{1} : c.subset;
  e.dset = c.dset;
  for (auto* v : {&e.subset, &e.dset}) {
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
    for (int k : *v)
      if (k < 1 || k > e.d) throw UsageError("color " + std::to_string(k) + " outside 1.." + std::to_string(e.d));
  }
  e.gamma = gamma_value(c.gamma, e.d);
  e.params = read_params(c.params, e.d);
  e.options.degree_budget = c.budget;
  return e;
}

int cmd_compute(const RunConfig& c, std::ostream& out) {
  if (c.braid.empty()) throw UsageError("compute needs --braid");
  const Evaluator e = make_evaluator(c);
  out << e.record("", parse_braid(c.braid, e.d)).dump() << '\n';
  return 0;
}

int cmd_table(const RunConfig& c, std::ostream& out) {
  if (c.input.empty()) throw UsageError("table needs --input");
  const Evaluator e = make_evaluator(c);
  std::ifstream in(c.input);
  if (!in) throw UsageError("cannot read " + c.input);
  const std::vector<LinkEntry> links = parse_link_file(in, e.d);

  std::vector<std::string> lines(links.size());
  std::vector<std::exception_ptr> errors(links.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < links.size();) {
      try {
        lines[i] = e.record(links[i].name, links[i].braid).dump();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int nthreads = std::clamp(c.threads, 1, std::max(1, static_cast<int>(links.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const ResourceError& ex) {
      throw ResourceError("line " + std::to_string(links[i].line) + ": " + ex.what());
    } catch (const std::exception& ex) {
      throw UsageError("line " + std::to_string(links[i].line) + ": " + ex.what());
    }
  }

  std::string text;
  for (const auto& l : lines) text += l + '\n';
  if (c.output.empty() || c.output == "-") {
    out << text;
  } else {
    std::ofstream f(c.output, std::ios::binary | std::ios::trunc);
    if (!f || !(f << text) || !f.flush()) throw UsageError("cannot write " + c.output);
  }
  return 0;
}

SuiteConfig suite_config(const RunConfig& c) {
  SuiteConfig s;
  s.samples = c.samples;
  s.seed = c.seed;
  s.degree_budget = c.budget;
  return s;
}

std::vector<SuiteResult> run_props(const RunConfig& c) {
  const SuiteConfig cfg = suite_config(c);
  const std::string& p = c.prop;
  const bool all = p == "all";
  std::vector<SuiteResult> out;
  if (all || p == "d-reduction" || p == "6.1")
    out.push_back(suite_d_reduction(or_default(c.d, 3), {1, 3}, or_default(c.n, 3), cfg));
  if (all || p == "vanishing")
    out.push_back(suite_component_vanishing(or_default(c.d, 3), or_default(c.n, 3), cfg));
  if (all || p == "tilde")
    out.push_back(suite_tilde_condition(or_default(c.d, 2), {1, 2}, or_default(c.n, 3), cfg));
  if (all || p == "rescaling")
    out.push_back(suite_phi_rescaling(or_default(c.d, 3), 2, or_default(c.n, 4), cfg));
  if (out.empty()) throw UsageError("unknown --prop " + p + " (d-reduction, vanishing, tilde, rescaling, all)");
  return out;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const SuiteConfig cfg = suite_config(c);
  std::vector<SuiteResult> results;
  if (c.suite == "iso") {
    const AlgebraContext ctx{or_default(c.d, 2), or_default(c.n, 3)};
    std::uint64_t size = 1;
    for (int i = 1; i <= ctx.n; ++i) size *= static_cast<std::uint64_t>(ctx.d) * i * 3;
    results.push_back(suite_isomorphism(ctx, cfg, size <= 20000));
  } else if (c.suite == "traces") {
    results.push_back(suite_trace_axioms(or_default(c.d, 2), or_default(c.n, 3), cfg));
  } else if (c.suite == "markov") {
    results.push_back(suite_markov_moves(cfg, or_default(c.n, 4), 10, or_default(c.d, 3), 2));
  } else if (c.suite == "props") {
    results = run_props(c);
  } else if (c.suite == "skein") {
    results.push_back(suite_skein(cfg, or_default(c.n, 4), 8));
  }
  bool ok = true;
  std::ostringstream report;
  for (const auto& r : results) {
    ok = ok && r.ok();
    report << r.summary() << '\n';
  }
  report << (ok ? "PASS" : "FAIL") << '\n';
  out << report.str();
  return ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Invariants of framed links from the affine Yokonuma-Hecke algebras", "yhinv"};
  app.require_subcommand(1);

  auto add_eval_flags = [&c](CLI::App* s) {
    s->add_option("--d", c.d, "number of colors")->check(CLI::Range(1, 12));
    s->add_option("--set", c.subset, "S, comma separated")->delimiter(',');
    s->add_option("--dset", c.dset, "D for the rho~ invariant, comma separated")->delimiter(',');
    s->add_option("--gamma", c.gamma, "sym, 1, or a polynomial");
    s->add_option("--params", c.params, "JSON file {\"k,a\": polynomial}");
    s->add_option("--budget", c.budget, "affine-trace X-degree budget")->check(CLI::PositiveNumber);
  };

  auto* compute = app.add_subcommand("compute", "invariant of one braid word, as a JSON record");
  add_eval_flags(compute);
  compute->add_option("--braid", c.braid, "e.g. \"B3: s1 s2^-1 x t1^2\"")->required();

  auto* table = app.add_subcommand("table", "JSON lines for every link of a file");
  add_eval_flags(table);
  table->add_option("--input", c.input, "link file, one \"name= B<n>: ...\" per line")->required();
  table->add_option("--output", c.output, "output file (standard output when omitted)");
  table->add_option("--threads", c.threads)->check(CLI::Range(1, 256));

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", c.suite)->required()->check(CLI::IsMember({"iso", "traces", "markov", "props", "skein"}));
  verify->add_option("--d", c.d)->check(CLI::Range(1, 12));
  verify->add_option("--n", c.n)->check(CLI::Range(1, 8));
  verify->add_option("--samples", c.samples)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", c.seed);
  verify->add_option("--budget", c.budget)->check(CLI::PositiveNumber);
  verify->add_option("--threads", c.threads, "accepted for symmetry; suites run sequentially")->check(CLI::Range(1, 256));
  verify->add_option("--prop", c.prop, "d-reduction, vanishing, tilde, rescaling or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::ostringstream buffer;
  try {
    int code = 0;
    if (*compute) code = cmd_compute(c, buffer);
    else if (*table) code = cmd_table(c, buffer);
    else code = cmd_verify(c, buffer);
    out << buffer.str();
    return code;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"yhinv"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace yh::cli
