#pragma once

// The isomorphism from the affine Yokonuma-Hecke algebra onto a direct sum,
// over d-compositions mu of n, of m_mu x m_mu matrix algebras with entries in
// the parabolic subalgebra H^mu of the affine Hecke algebra on n strands.
//
// Rows and columns of block mu are the characters of composition mu.
// Entries are elements of the d = 1 engine on n strands whose permutations
// lie in the Young subgroup S^mu.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "yhecke/relations.hpp"
#include "yhecke/yokonuma.hpp"

namespace yh {

/// An element of H^mu, carried by the affine Hecke engine on n strands.
struct HeckeTensor {
  Composition mu;
  YElement elem;
};

class BlockMatrix {
 public:
  using Row = std::map<Character, YElement>;
  using Block = std::map<Character, Row>;
  using Blocks = std::map<Composition, Block>;

  explicit BlockMatrix(AlgebraContext ctx) : ctx_(ctx) {}

  /// c times the identity, restricted to `only` when given.
  static BlockMatrix scalar(AlgebraContext ctx, const LaurentPoly& c,
                            const std::optional<std::set<Composition>>& only = std::nullopt);
  static BlockMatrix identity(AlgebraContext ctx) { return scalar(ctx, LaurentPoly(1)); }

  AlgebraContext ctx() const { return ctx_; }
  /// Context of the entries (d = 1, same n).
  AlgebraContext entry_ctx() const { return AlgebraContext{1, ctx_.n}; }
  const Blocks& blocks() const { return blocks_; }
  bool is_zero() const { return blocks_.empty(); }

  /// Adds `value` to the entry (row, col); both characters must have the same composition.
  void add_entry(const Character& row, const Character& col, const YElement& value);
  const YElement* entry(const Character& row, const Character& col) const;
  std::size_t entry_count() const;
  /// Largest number of non-zero entries in a row.
  std::size_t max_row_support() const;

  /// Keeps only the blocks accepted by `keep`.
  BlockMatrix restricted(const std::function<bool(const Composition&)>& keep) const;

  BlockMatrix operator-() const;
  BlockMatrix& operator+=(const BlockMatrix& o);
  BlockMatrix& operator-=(const BlockMatrix& o);
  friend BlockMatrix operator+(BlockMatrix a, const BlockMatrix& b) { return a += b; }
  friend BlockMatrix operator-(BlockMatrix a, const BlockMatrix& b) { return a -= b; }
  friend BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b);
  friend BlockMatrix operator*(const LaurentPoly& c, const BlockMatrix& m);
  friend bool operator==(const BlockMatrix& a, const BlockMatrix& b) {
    return a.ctx_ == b.ctx_ && a.blocks_ == b.blocks_;
  }

  std::string to_string() const;

 private:
  AlgebraContext ctx_;
  Blocks blocks_;
};

BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b);

/// Sum of the diagonal entries of block mu (zero when absent).
HeckeTensor block_diag_trace(const BlockMatrix& m, const Composition& mu);

/// Images of g_i, g_i^{-1}, t_j^k and X_1^{+-1}, from the closed formulas.
BlockMatrix psi_generator_image(AlgebraContext ctx, const Letter& gen);

BlockMatrix psi_forward(const ChiElement& x);
BlockMatrix psi_forward(const YElement& x);
/// Throws std::invalid_argument when an entry permutation leaves S^mu.
ChiElement psi_inverse(const BlockMatrix& m);

/// Checks every defining relation on the generator images. Throws
/// ResourceError when d^n * n! exceeds `budget`.
std::vector<RelationResult> verify_relations(AlgebraContext ctx, std::uint64_t budget = 100000);

}  // namespace yh
