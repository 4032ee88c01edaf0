#include "yhecke/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

#include "yhecke/errors.hpp"

namespace yh {

namespace {

int mod(int a, int d) { return ((a % d) + d) % d; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view token) {
  int value = 0;
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || p != end || s.empty()) throw ParseError("bad number in braid token '" + std::string(token) + "'");
  return value;
}

// Splits "name^k" into name and k (k = 1 without a caret).
std::pair<std::string_view, int> split_power(std::string_view tok) {
  const auto caret = tok.find('^');
  if (caret == std::string_view::npos) return {tok, 1};
  return {tok.substr(0, caret), parse_int(tok.substr(caret + 1), tok)};
}

struct RowState {
  Character col;
  YElement entry;
};

class LetterStepper {
 public:
  LetterStepper(int d, const std::optional<LaurentPoly>& gamma)
      : d_(d), gamma_(gamma ? *gamma : LaurentPoly::gamma()) {
    gamma_inv_ = gamma ? gamma->inverse() : LaurentPoly::gamma(-1);
  }

  // Right-multiplies the row state by the image of l in row `state.col`.
  void apply(RowState& s, const BraidLetter& l) {
    switch (l.kind) {
      case BraidLetter::Kind::Tee: {
        const CycNumber c = CycNumber::zeta_power(d_, static_cast<long>(l.power) * (s.col.colors[l.index - 1] - 1));
        s.entry = LaurentPoly(c) * s.entry;
        return;
      }
      case BraidLetter::Kind::SigmaZero: {
        const int j = pi_inverse(s.col)[0] + 1;
        s.entry = s.entry.mul_letter(Letter::x(j, l.power));
        return;
      }
      case BraidLetter::Kind::Sigma: {
        const int i = l.index;
        auto& colors = s.col.colors;
        if (colors[i - 1] != colors[i]) {
          s.entry = (l.power > 0 ? gamma_ * LaurentPoly::u() : gamma_inv_ * LaurentPoly::u(-1)) * s.entry;
          std::swap(colors[i - 1], colors[i]);
          return;
        }
        const int k = pi_inverse(s.col)[i - 1] + 1;
        if (l.power > 0) {
          s.entry = s.entry.mul_letter(Letter::g(k));
        } else {
          s.entry = LaurentPoly::u(-2) * s.entry.mul_letter(Letter::g(k)) -
                    (LaurentPoly::u(-2) * LaurentPoly::v()) * s.entry;
        }
        return;
      }
    }
  }

 private:
  const Perm& pi_inverse(const Character& chi) {
    auto it = pi_inv_.find(chi);
    if (it == pi_inv_.end()) it = pi_inv_.emplace(chi, pi_chi(chi, d_).inverse()).first;
    return it->second;
  }

  int d_;
  LaurentPoly gamma_;
  LaurentPoly gamma_inv_;
  std::map<Character, Perm> pi_inv_;
};

Character final_column(const BraidWord& b, Character chi) {
  for (const auto& l : b.letters)
    if (l.kind == BraidLetter::Kind::Sigma) std::swap(chi.colors[l.index - 1], chi.colors[l.index]);
  return chi;
}

bool has_framing(const BraidWord& b, int d) { return b.is_framed(d); }

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<int> iota_set(int k) {
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  return s;
}

}  // namespace

// ---------------------------------------------------------------- braid words

void BraidWord::validate() const {
  if (n < 1) throw IndexError("a braid needs at least one strand");
  for (const auto& l : letters) {
    switch (l.kind) {
      case BraidLetter::Kind::Sigma:
        if (l.index < 1 || l.index >= n)
          throw IndexError("s" + std::to_string(l.index) + " out of range on " + std::to_string(n) + " strands");
        if (l.power != 1 && l.power != -1) throw ParseError("crossings have exponent +-1");
        break;
      case BraidLetter::Kind::SigmaZero:
        if (l.power != 1 && l.power != -1) throw ParseError("the loop generator has exponent +-1");
        break;
      case BraidLetter::Kind::Tee:
        if (l.index < 1 || l.index > n)
          throw IndexError("t" + std::to_string(l.index) + " out of range on " + std::to_string(n) + " strands");
        break;
    }
  }
}

bool BraidWord::has_loops() const {
  return std::any_of(letters.begin(), letters.end(),
                     [](const BraidLetter& l) { return l.kind == BraidLetter::Kind::SigmaZero; });
}

bool BraidWord::is_framed(int d) const {
  return std::any_of(letters.begin(), letters.end(), [d](const BraidLetter& l) {
    return l.kind == BraidLetter::Kind::Tee && (d <= 0 ? l.power != 0 : mod(l.power, d) != 0);
  });
}

BraidWord BraidWord::normalized(int d) const {
  BraidWord out{n, {}};
  for (auto l : letters) {
    if (l.kind == BraidLetter::Kind::Tee) {
      l.power = mod(l.power, d);
      if (l.power == 0) continue;
    }
    out.letters.push_back(l);
  }
  return out;
}

std::string BraidWord::to_string() const {
  std::string s = "B" + std::to_string(n) + ":";
  for (const auto& l : letters) {
    s += ' ';
    switch (l.kind) {
      case BraidLetter::Kind::Sigma: s += "s" + std::to_string(l.index); break;
      case BraidLetter::Kind::SigmaZero: s += "x"; break;
      case BraidLetter::Kind::Tee: s += "t" + std::to_string(l.index); break;
    }
    if (l.power != 1) s += "^" + std::to_string(l.power);
  }
  return s;
}

BraidWord parse_braid(std::string_view text, int d) {
  text = trim(text);
  const auto colon = text.find(':');
  if (text.empty() || text.front() != 'B' || colon == std::string_view::npos)
    throw ParseError("braid words start with 'B<n>:'");
  BraidWord b;
  b.n = parse_int(text.substr(1, colon - 1), text.substr(0, colon + 1));
  std::istringstream in{std::string(text.substr(colon + 1))};
  std::string tok;
  while (in >> tok) {
    const auto [head, power] = split_power(tok);
    if (head == "x") {
      b.letters.push_back(BraidLetter::sigma0(power));
    } else if (head.size() >= 2 && (head[0] == 's' || head[0] == 't')) {
      const int idx = parse_int(head.substr(1), tok);
      if (head[0] == 's')
        b.letters.push_back(BraidLetter::sigma(idx, power));
      else
        b.letters.push_back(BraidLetter::tee(idx, d > 0 ? mod(power, d) : power));
    } else {
      throw ParseError("unknown braid token '" + tok + "'");
    }
  }
  b.validate();
  return b;
}

Perm underlying_perm(const BraidWord& b) {
  std::vector<int> word;
  for (const auto& l : b.letters)
    if (l.kind == BraidLetter::Kind::Sigma) word.push_back(l.index);
  return Perm::from_word(b.n, word);
}

int components(const BraidWord& b) { return static_cast<int>(underlying_perm(b).cycle_type().size()); }

// -------------------------------------------------------------- delta images

BlockMatrix delta_image(const BraidWord& b, int d, const DeltaOptions& options) {
  b.validate();
  const AlgebraContext ctx{d, b.n};
  const AlgebraContext hecke{1, b.n};
  BlockMatrix out(ctx);
  LetterStepper step(d, options.gamma);
  for (const auto& mu : all_compositions(d, b.n)) {
    if (options.keep_block && !options.keep_block(mu)) continue;
    for (const auto& chi : enumerate_characters(d, b.n, mu)) {
      if (options.diagonal_only && !(final_column(b, chi) == chi)) continue;
      RowState s{chi, YElement::one(hecke)};
      for (const auto& l : b.letters) {
        step.apply(s, l);
        if (s.entry.is_zero()) break;
      }
      out.add_entry(chi, s.col, s.entry);
    }
  }
  return out;
}

BlockMatrix delta_letter_image(AlgebraContext ctx, const BraidLetter& l, const std::optional<LaurentPoly>& gamma) {
  DeltaOptions o;
  o.gamma = gamma;
  return delta_image(BraidWord{ctx.n, {l}}, ctx.d, o);
}

// ---------------------------------------------------------------- invariants

namespace {

DeltaOptions pruned_options(const BraidWord& b, const Composition& socle) {
  const std::vector<int> cycles = underlying_perm(b).cycle_type();
  DeltaOptions o;
  o.diagonal_only = true;
  o.keep_block = [socle, cycles](const Composition& mu) {
    return socle_of(mu) == socle && is_refinement(cycles, mu);
  };
  return o;
}

LaurentPoly with_gamma(const LaurentPoly& p, const std::optional<LaurentPoly>& gamma) {
  if (!gamma) return p;
  return poly_substitute(p, {{VarId::gamma(), *gamma}});
}

}  // namespace

LaurentPoly invariant_basic(const BraidWord& b, const MarkovSpec& spec, const std::optional<LaurentPoly>& gamma,
                            const TraceOptions& options) {
  BasicTrace rho(spec, options);
  return with_gamma(rho(delta_image(b, spec.d, pruned_options(b, spec.socle()))), gamma);
}

LaurentPoly invariant_htilde(const BraidWord& b, int d, const std::vector<int>& dset,
                             const std::map<int, TraceParams>& params, const std::optional<LaurentPoly>& gamma,
                             const TraceOptions& options) {
  TildeTrace rho(d, dset, params, options);
  LaurentPoly total;
  for (const auto& s : nonempty_subsets(rho.dset())) {
    const LaurentPoly coeff = markov_z().pow(static_cast<int>(s.size()) - 1);
    BasicTrace& basic = rho.basic(s);
    total += coeff * basic(delta_image(b, d, pruned_options(b, basic.spec().socle())));
  }
  total = LaurentPoly(Rational(1, static_cast<long>(rho.dset().size()))) * total;
  return with_gamma(total, gamma);
}

MarkovSpec positional_spec(int d, const std::vector<int>& subset) {
  MarkovSpec s = MarkovSpec::symbolic(d, subset);
  for (std::size_t i = 0; i < s.subset.size(); ++i)
    s.params[s.subset[i]] = TraceParams{static_cast<int>(i) + 1, {}};
  return s;
}

LaurentPoly jl_lambda() { return LaurentPoly::var(VarId::named("lambda")); }
LaurentPoly jl_q() { return LaurentPoly::var(VarId::named("q")); }
LaurentPoly jl_delta() { return LaurentPoly::var(VarId::named("delta")); }

LaurentPoly jl_specialize(const LaurentPoly& p, JLConvention target) {
  const LaurentPoly root = LaurentPoly::var_half(VarId::named("lambda"), 1);
  std::map<VarId, LaurentPoly> map{
      {VarId::u(), root},
      {VarId::v(), root * jl_delta()},
      {VarId::gamma(), target == JLConvention::Phi ? LaurentPoly(1) : jl_q().pow(-1)},
  };
  return poly_substitute(p, map);
}

// ------------------------------------------------------------- Markov moves

BraidWord conjugate(const BraidWord& b, const BraidLetter& by) {
  BraidWord out{b.n, {}};
  out.letters.push_back(by.inverse());
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  out.letters.push_back(by);
  out.validate();
  return out;
}

BraidWord stabilize(const BraidWord& b, int sign) {
  BraidWord out = b;
  ++out.n;
  out.letters.push_back(BraidLetter::sigma(b.n, sign > 0 ? 1 : -1));
  return out;
}

BraidWord destabilize(const BraidWord& b) {
  if (b.n < 2 || b.letters.empty()) throw std::invalid_argument("nothing to destabilize");
  const BraidLetter last = b.letters.back();
  if (last.kind != BraidLetter::Kind::Sigma || last.index != b.n - 1)
    throw std::invalid_argument("destabilization needs a final s" + std::to_string(b.n - 1) + "^+-1");
  BraidWord out{b.n - 1, {b.letters.begin(), b.letters.end() - 1}};
  for (const auto& l : out.letters) {
    if ((l.kind == BraidLetter::Kind::Sigma && l.index == b.n - 1) || (l.kind == BraidLetter::Kind::Tee && l.index == b.n))
      throw std::invalid_argument("strand " + std::to_string(b.n) + " is used before the final crossing");
  }
  return out;
}

// ------------------------------------------------------------- structural checks

CheckReport check_prop_d_reduction(const BraidWord& b, const std::vector<int>& subset, int d,
                                   const TraceOptions& options) {
  if (has_framing(b, d)) throw std::invalid_argument("the d-reduction applies to non-framed links");
  const MarkovSpec big = positional_spec(d, subset);
  const int dp = static_cast<int>(big.subset.size());
  CheckReport r;
  r.name = "d-reduction";
  r.lhs = invariant_basic(b, big, std::nullopt, options);
  r.rhs = invariant_basic(b, positional_spec(dp, iota_set(dp)), std::nullopt, options);
  r.ok = r.lhs == r.rhs;
  r.detail = b.to_string() + ": d=" + std::to_string(d) + " vs d=" + std::to_string(dp);
  return r;
}

CheckReport check_component_vanishing(const BraidWord& b, const MarkovSpec& spec, const TraceOptions& options) {
  CheckReport r;
  r.name = "component-vanishing";
  const int n_comp = components(b);
  r.lhs = invariant_basic(b, spec, std::nullopt, options);
  r.applicable = static_cast<int>(spec.subset.size()) > n_comp;
  r.ok = !r.applicable || r.lhs.is_zero();
  r.detail = b.to_string() + ": " + std::to_string(n_comp) + " component(s), |S|=" + std::to_string(spec.subset.size());
  return r;
}

CheckReport check_phi_rescaling(const BraidWord& b, int d, const TraceOptions& options) {
  if (b.has_loops() || has_framing(b, d)) throw std::invalid_argument("the rescaling identity is for classical non-framed links");
  const int n_comp = components(b);
  if (d <= n_comp)
    throw std::invalid_argument("the rescaling identity needs d > N (d=" + std::to_string(d) +
                                ", N=" + std::to_string(n_comp) + ")");
  CheckReport r;
  r.name = "phi-rescaling";
  const LaurentPoly big = invariant_htilde(b, d, iota_set(d), symbolic_params(iota_set(d)), std::nullopt, options);
  const LaurentPoly small =
      invariant_htilde(b, n_comp, iota_set(n_comp), symbolic_params(iota_set(n_comp)), std::nullopt, options);
  const LaurentPoly factor(Rational(static_cast<long>(n_comp) * binomial(d, n_comp), d));
  r.lhs = jl_specialize(big, JLConvention::Phi);
  r.rhs = factor * jl_specialize(small, JLConvention::Phi);
  r.ok = r.lhs == r.rhs;
  r.detail = b.to_string() + ": d=" + std::to_string(d) + ", N=" + std::to_string(n_comp);
  return r;
}

// ----------------------------------------------------------------- link files

std::vector<LinkEntry> parse_link_file(std::istream& in, int d) {
  std::vector<LinkEntry> out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    text = trim(text);
    if (text.empty()) continue;
    LinkEntry e;
    e.line = line;
    const auto eq = text.find('=');
    if (eq != std::string_view::npos) {
      e.name = std::string(trim(text.substr(0, eq)));
      text = trim(text.substr(eq + 1));
    } else {
      e.name = "line" + std::to_string(line);
    }
    try {
      e.braid = parse_braid(text, d);
    } catch (const std::exception& ex) {
      throw ParseError("line " + std::to_string(line) + ": " + ex.what());
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace yh
