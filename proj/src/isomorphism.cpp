#include "yhecke/isomorphism.hpp"

#include <sstream>

#include "yhecke/errors.hpp"

namespace yh {

namespace {

YElement hecke_basis(int n, const std::vector<int>& lambda, const Perm& w, const LaurentPoly& c) {
  return YElement::basis(AlgebraContext{1, n}, std::vector<int>(n, 0), lambda, w, c);
}

Character swap_colors(const Character& chi, int i) {
  Character r = chi;
  std::swap(r.colors[i - 1], r.colors[i]);
  return r;
}

}  // namespace

BlockMatrix BlockMatrix::scalar(AlgebraContext ctx, const LaurentPoly& c,
                                const std::optional<std::set<Composition>>& only) {
  BlockMatrix m(ctx);
  if (c.is_zero()) return m;
  const YElement entry = YElement::scalar(m.entry_ctx(), c);
  for (const auto& chi : enumerate_characters(ctx.d, ctx.n)) {
    if (only && !only->count(chi.composition(ctx.d))) continue;
    m.add_entry(chi, chi, entry);
  }
  return m;
}

void BlockMatrix::add_entry(const Character& row, const Character& col, const YElement& value) {
  if (value.is_zero()) return;
  const Composition mu = row.composition(ctx_.d);
  if (!(col.composition(ctx_.d) == mu)) throw std::invalid_argument("matrix entry crosses blocks");
  auto& r = blocks_[mu][row];
  auto [it, inserted] = r.try_emplace(col, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) {
      r.erase(it);
      if (r.empty()) {
        auto& block = blocks_[mu];
        block.erase(row);
        if (block.empty()) blocks_.erase(mu);
      }
    }
  }
}

const YElement* BlockMatrix::entry(const Character& row, const Character& col) const {
  auto b = blocks_.find(row.composition(ctx_.d));
  if (b == blocks_.end()) return nullptr;
  auto r = b->second.find(row);
  if (r == b->second.end()) return nullptr;
  auto e = r->second.find(col);
  return e == r->second.end() ? nullptr : &e->second;
}

std::size_t BlockMatrix::entry_count() const {
  std::size_t n = 0;
  for (const auto& [mu, block] : blocks_)
    for (const auto& [row, r] : block) n += r.size();
  return n;
}

std::size_t BlockMatrix::max_row_support() const {
  std::size_t best = 0;
  for (const auto& [mu, block] : blocks_)
    for (const auto& [row, r] : block) best = std::max(best, r.size());
  return best;
}

BlockMatrix BlockMatrix::restricted(const std::function<bool(const Composition&)>& keep) const {
  BlockMatrix m(ctx_);
  for (const auto& [mu, block] : blocks_)
    if (keep(mu)) m.blocks_.emplace(mu, block);
  return m;
}

BlockMatrix BlockMatrix::operator-() const {
  BlockMatrix m = *this;
  for (auto& [mu, block] : m.blocks_)
    for (auto& [row, r] : block)
      for (auto& [col, e] : r) e = -e;
  return m;
}

BlockMatrix& BlockMatrix::operator+=(const BlockMatrix& o) {
  if (!(ctx_ == o.ctx_)) throw std::invalid_argument("context mismatch");
  for (const auto& [mu, block] : o.blocks_)
    for (const auto& [row, r] : block)
      for (const auto& [col, e] : r) add_entry(row, col, e);
  return *this;
}

BlockMatrix& BlockMatrix::operator-=(const BlockMatrix& o) { return *this += -o; }

BlockMatrix operator*(const BlockMatrix& a, const BlockMatrix& b) {
  if (!(a.ctx_ == b.ctx_)) throw std::invalid_argument("context mismatch in block product");
  BlockMatrix out(a.ctx_);
  for (const auto& [mu, block] : a.blocks_) {
    auto bb = b.blocks_.find(mu);
    if (bb == b.blocks_.end()) continue;
    for (const auto& [row, r] : block) {
      for (const auto& [mid, x] : r) {
        auto br = bb->second.find(mid);
        if (br == bb->second.end()) continue;
        for (const auto& [col, y] : br->second) out.add_entry(row, col, x * y);
      }
    }
  }
  return out;
}

BlockMatrix operator*(const LaurentPoly& c, const BlockMatrix& m) {
  BlockMatrix out(m.ctx_);
  if (c.is_zero()) return out;
  for (const auto& [mu, block] : m.blocks_)
    for (const auto& [row, r] : block)
      for (const auto& [col, e] : r) out.add_entry(row, col, c * e);
  return out;
}

BlockMatrix block_mul(const BlockMatrix& a, const BlockMatrix& b) { return a * b; }

std::string BlockMatrix::to_string() const {
  std::ostringstream os;
  for (const auto& [mu, block] : blocks_) {
    os << "block " << mu.to_string() << ":\n";
    for (const auto& [row, r] : block)
      for (const auto& [col, e] : r) os << "  " << row.to_string() << "," << col.to_string() << ": " << e.to_string() << "\n";
  }
  return os.str();
}

HeckeTensor block_diag_trace(const BlockMatrix& m, const Composition& mu) {
  HeckeTensor t{mu, YElement(m.entry_ctx())};
  auto b = m.blocks().find(mu);
  if (b == m.blocks().end()) return t;
  for (const auto& [row, r] : b->second) {
    auto e = r.find(row);
    if (e != r.end()) t.elem += e->second;
  }
  return t;
}

BlockMatrix psi_generator_image(AlgebraContext ctx, const Letter& gen) {
  const int n = ctx.n, d = ctx.d;
  BlockMatrix m(ctx);
  const auto chars = enumerate_characters(d, n);
  const std::vector<int> zero(n, 0);
  switch (gen.kind) {
    case Letter::Kind::T: {
      if (gen.index < 1 || gen.index > n) throw IndexError("t index out of range");
      for (const auto& chi : chars) {
        const CycNumber c = CycNumber::zeta_power(d, static_cast<long>(gen.power) * (chi.colors[gen.index - 1] - 1));
        m.add_entry(chi, chi, hecke_basis(n, zero, Perm(n), LaurentPoly(c)));
      }
      return m;
    }
    case Letter::Kind::X: {
      if (gen.index != 1) throw IndexError("the affine generator is X_1");
      for (const auto& chi : chars) {
        std::vector<int> lam(n, 0);
        lam[pi_chi(chi, d).inverse()[0]] = gen.power;
        m.add_entry(chi, chi, hecke_basis(n, lam, Perm(n), LaurentPoly(1)));
      }
      return m;
    }
    case Letter::Kind::G:
    case Letter::Kind::GInv: {
      const int i = gen.index;
      if (i < 1 || i >= n) throw IndexError("g index out of range");
      const bool inverse = gen.kind == Letter::Kind::GInv;
      for (const auto& chi : chars) {
        if (chi.colors[i - 1] != chi.colors[i]) {
          m.add_entry(chi, swap_colors(chi, i), hecke_basis(n, zero, Perm(n), LaurentPoly::u(inverse ? -1 : 1)));
        } else {
          const int k = pi_chi(chi, d).inverse()[i - 1] + 1;
          const YElement gk = hecke_basis(n, zero, Perm::simple(n, k), LaurentPoly(1));
          if (!inverse) {
            m.add_entry(chi, chi, gk);
          } else {
            m.add_entry(chi, chi, LaurentPoly::u(-2) * gk);
            m.add_entry(chi, chi, hecke_basis(n, zero, Perm(n), -(LaurentPoly::u(-2) * LaurentPoly::v())));
          }
        }
      }
      return m;
    }
  }
  return m;
}

BlockMatrix psi_forward(const ChiElement& x) {
  const AlgebraContext ctx = x.ctx();
  const int n = ctx.n, d = ctx.d;
  BlockMatrix m(ctx);
  for (const auto& [k, c] : x.terms()) {
    const Character chi = x.key_chi(k);
    const std::vector<int> lambda = x.key_lambda(k);
    const Perm v = x.key_perm(k);
    Character col;
    col.colors.resize(n);
    for (int i = 0; i < n; ++i) col.colors[i] = chi.colors[v[i]];
    const Perm pi_inv = pi_chi(chi, d).inverse();
    const Perm sigma = pi_inv * v * pi_chi(col, d);
    std::vector<int> lam(n, 0);
    for (int j = 0; j < n; ++j) lam[pi_inv[j]] = lambda[j];
    m.add_entry(chi, col, hecke_basis(n, lam, sigma, c * LaurentPoly::u(v.length() - sigma.length())));
  }
  return m;
}

BlockMatrix psi_forward(const YElement& x) { return psi_forward(to_chi_basis(x)); }

ChiElement psi_inverse(const BlockMatrix& m) {
  const AlgebraContext ctx = m.ctx();
  const int n = ctx.n, d = ctx.d;
  ChiElement out(ctx);
  for (const auto& [mu, block] : m.blocks()) {
    for (const auto& [row, r] : block) {
      const Perm pi = pi_chi(row, d), pi_inv = pi.inverse();
      for (const auto& [col, e] : r) {
        const Perm pi_col_inv = pi_chi(col, d).inverse();
        for (const auto& [key, c] : e.terms()) {
          const Perm sigma = e.key_perm(key);
          if (!in_young_subgroup(sigma, mu))
            throw std::invalid_argument("entry permutation " + sigma.to_string() + " is not in the Young subgroup of " +
                                        mu.to_string());
          const std::vector<int> nu = e.key_lambda(key);
          const Perm v = pi * sigma * pi_col_inv;
          std::vector<int> lambda(n);
          for (int j = 0; j < n; ++j) lambda[j] = nu[pi_inv[j]];
          out.add_term(ChiElement::make_key(row, lambda, v), c * LaurentPoly::u(sigma.length() - v.length()));
        }
      }
    }
  }
  return out;
}

std::vector<RelationResult> verify_relations(AlgebraContext ctx, std::uint64_t budget) {
  std::uint64_t cost = 1;
  for (int j = 0; j < ctx.n; ++j) cost *= static_cast<std::uint64_t>(ctx.d);
  for (int j = 2; j <= ctx.n; ++j) cost *= static_cast<std::uint64_t>(j);
  if (cost > budget)
    throw ResourceError("relation check needs d^n * n! = " + std::to_string(cost) + " > budget " + std::to_string(budget));
  return check_defining_relations<BlockMatrix>(
      ctx.d, ctx.n, [&](const Letter& l) { return psi_generator_image(ctx, l); },
      [&](const LaurentPoly& p) { return BlockMatrix::scalar(ctx, p); });
}

}  // namespace yh
