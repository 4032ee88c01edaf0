#pragma once

// Framed affine braid words, their gamma-deformed images in the block
// decomposition, and the link invariants obtained from the basic traces.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "yhecke/traces.hpp"

namespace yh {

struct BraidLetter {
  enum class Kind { Sigma, SigmaZero, Tee };
  Kind kind;
  int index = 0;  // i for Sigma, j for Tee, unused for SigmaZero
  int power = 1;  // +-1 for Sigma and SigmaZero, any integer for Tee

  static BraidLetter sigma(int i, int sign = 1) { return {Kind::Sigma, i, sign}; }
  static BraidLetter sigma0(int sign = 1) { return {Kind::SigmaZero, 0, sign}; }
  static BraidLetter tee(int j, int p = 1) { return {Kind::Tee, j, p}; }

  BraidLetter inverse() const { return {kind, index, -power}; }
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
  int n = 1;
  std::vector<BraidLetter> letters;

  /// Throws IndexError when a letter does not fit on n strands.
  void validate() const;
  bool has_loops() const;
  /// True when some t_j power is non-zero mod d.
  bool is_framed(int d) const;
  /// Reduces every t power into 0..d-1 and drops t letters that become trivial.
  BraidWord normalized(int d) const;
  std::string to_string() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Grammar: "B<n>:" followed by whitespace-separated tokens
/// s<i>, s<i>^-1, x, x^-1, t<j>, t<j>^<k>. When d > 0, t powers are
/// reduced mod d. Throws ParseError or IndexError.
BraidWord parse_braid(std::string_view text, int d = 0);

/// The permutation with sigma_i -> s_i, sigma_0 -> 1, t_j -> 1.
Perm underlying_perm(const BraidWord& b);
/// Number of cycles of the underlying permutation.
int components(const BraidWord& b);

/// Image of one letter under Psi o delta; gamma == nullopt keeps the symbol.
BlockMatrix delta_letter_image(AlgebraContext ctx, const BraidLetter& l,
                               const std::optional<LaurentPoly>& gamma = std::nullopt);

struct DeltaOptions {
  std::optional<LaurentPoly> gamma;  // symbolic when empty
  /// Restrict to blocks accepted here (all blocks when empty).
  std::function<bool(const Composition&)> keep_block;
  /// Only compute diagonal entries (enough for traces).
  bool diagonal_only = false;
};

/// Psi(delta(b)) as a block matrix on d colors and b.n strands.
BlockMatrix delta_image(const BraidWord& b, int d, const DeltaOptions& options = {});

/// rho^{S,tau}(delta(b)). Blocks whose socle differs from that of S, and
/// blocks mu such that the cycle type of the underlying permutation is not a
/// refinement of mu, are skipped (their diagonal vanishes).
LaurentPoly invariant_basic(const BraidWord& b, const MarkovSpec& spec,
                            const std::optional<LaurentPoly>& gamma = std::nullopt, const TraceOptions& options = {});

/// rho~^{D,x}(delta(b)).
LaurentPoly invariant_htilde(const BraidWord& b, int d, const std::vector<int>& dset,
                             const std::map<int, TraceParams>& params,
                             const std::optional<LaurentPoly>& gamma = std::nullopt, const TraceOptions& options = {});

/// Trace parameters assigned by position: the i-th color of `subset` gets
/// the symbols x(i, a). Used to compare invariants across different d.
MarkovSpec positional_spec(int d, const std::vector<int>& subset);

enum class JLConvention { Phi, Gamma };

/// Rewrites a polynomial in (u, v, gamma) in the variables of the framed
/// invariants Phi (gamma = 1) or Gamma (gamma = q^{-1}):
/// u = lambda^{1/2}, v = lambda^{1/2} delta, where delta stands for q - q^{-1}
/// and lambda for (|D| z - delta) / (|D| z).
LaurentPoly jl_specialize(const LaurentPoly& p, JLConvention target);
/// The symbols introduced by jl_specialize.
LaurentPoly jl_lambda();
LaurentPoly jl_q();
LaurentPoly jl_delta();

// Markov moves. Each returns a word with the same closure.
BraidWord conjugate(const BraidWord& b, const BraidLetter& by);
BraidWord stabilize(const BraidWord& b, int sign);
/// Requires a final sigma_{n-1}^{+-1} and no other use of strand n.
BraidWord destabilize(const BraidWord& b);

struct CheckReport {
  std::string name;
  bool ok = false;
  bool applicable = true;
  LaurentPoly lhs;
  LaurentPoly rhs;
  std::string detail;
};

/// P^{d,S,tau} against P^{|S|,{1..|S|},tau} with positional parameters.
/// Rejects framed words.
CheckReport check_prop_d_reduction(const BraidWord& b, const std::vector<int>& subset, int d,
                                   const TraceOptions& options = {});
/// P^{d,S,tau} = 0 whenever |S| exceeds the number of components.
CheckReport check_component_vanishing(const BraidWord& b, const MarkovSpec& spec, const TraceOptions& options = {});
/// Phi_{d,{1..d}}(q,z) = (N/d) binom(d,N) Phi_{N,{1..N}}(q,(d/N) z) for a
/// classical non-framed link with N < d components. Both sides share the
/// symbol lambda, since lambda_D(z) with |D| = d equals lambda_D((d/N) z)
/// with |D| = N.
CheckReport check_phi_rescaling(const BraidWord& b, int d, const TraceOptions& options = {});

/// One entry of a link file.
struct LinkEntry {
  std::string name;
  BraidWord braid;
  int line = 0;
};

/// Reads "name= B<n>: ..." lines (the name prefix is optional); '#' starts a
/// comment and blank lines are skipped. Errors name the offending line.
std::vector<LinkEntry> parse_link_file(std::istream& in, int d = 0);

}  // namespace yh
