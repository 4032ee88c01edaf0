#include "yhecke/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "yhecke/errors.hpp"

namespace yh {

Perm::Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }

Perm Perm::from_images0(std::vector<int> images) {
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 0 || x >= static_cast<int>(images.size()) || seen[x])
      throw std::invalid_argument("not a permutation");
    seen[x] = 1;
  }
  return Perm(std::move(images));
}

Perm Perm::from_one_line(const std::vector<int>& images) {
  std::vector<int> z(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) z[i] = images[i] - 1;
  return from_images0(std::move(z));
}

Perm Perm::simple(int n, int i) {
  if (i < 1 || i >= n) throw IndexError("s_" + std::to_string(i) + " out of range for n=" + std::to_string(n));
  Perm p(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::from_word(int n, const std::vector<int>& word) {
  Perm p(n);
  for (int i : word) {
    if (i < 1 || i >= n) throw IndexError("letter " + std::to_string(i) + " out of range");
    std::swap(p.img_[i - 1], p.img_[i]);
  }
  return p;
}

std::vector<int> Perm::one_line() const {
  std::vector<int> r(img_);
  for (int& x : r) ++x;
  return r;
}

int Perm::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Perm::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> r(img_.size());
  for (int i = 0; i < size(); ++i) r[img_[i]] = i;
  return Perm(std::move(r));
}

Perm Perm::times_simple(int i) const {
  Perm p = *this;
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

std::vector<int> Perm::reduced_word() const {
  std::vector<int> word;
  std::vector<int> w = img_;
  for (;;) {
    int i = 0;
    while (i + 1 < size() && w[i] < w[i + 1]) ++i;
    if (i + 1 >= size()) break;
    word.push_back(i + 1);
    std::swap(w[i], w[i + 1]);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> cycles;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    cycles.push_back(len);
  }
  std::sort(cycles.rbegin(), cycles.rend());
  return cycles;
}

Perm operator*(const Perm& v, const Perm& w) {
  if (v.size() != w.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> r(w.img_.size());
  for (int i = 0; i < w.size(); ++i) r[i] = v.img_[w.img_[i]];
  return Perm(std::move(r));
}

std::string Perm::to_string() const {
  std::string s = "[";
  for (int i = 0; i < size(); ++i) s += (i ? "," : "") + std::to_string(img_[i] + 1);
  return s + "]";
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(Perm::from_images0(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// -------------------------------------------------------------- compositions

int Composition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Composition::offset(int a) const { return std::accumulate(parts.begin(), parts.begin() + (a - 1), 0); }

int Composition::support_size() const {
  return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int p) { return p > 0; }));
}

std::string Composition::to_string() const {
  std::string s = "(";
  for (int i = 0; i < d(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

std::uint64_t m_mu(const Composition& mu) {
  // product of binomials keeps intermediates exact and small
  std::uint64_t r = 1;
  int total = 0;
  for (int p : mu.parts) {
    for (int k = 1; k <= p; ++k) {
      ++total;
      r = r * total / k;
    }
  }
  return r;
}

Composition socle_of(const Composition& mu) {
  Composition s = mu;
  for (int& p : s.parts) p = p > 0 ? 1 : 0;
  return s;
}

Composition subset_to_socle(const std::vector<int>& subset, int d) {
  if (subset.empty()) throw std::invalid_argument("the color subset must be non-empty");
  Composition c{std::vector<int>(d, 0)};
  for (int a : subset) {
    if (a < 1 || a > d) throw IndexError("color " + std::to_string(a) + " outside 1.." + std::to_string(d));
    c.parts[a - 1] = 1;
  }
  return c;
}

std::vector<int> socle_to_subset(const Composition& socle) {
  std::vector<int> s;
  for (int a = 1; a <= socle.d(); ++a)
    if (socle.parts[a - 1] > 0) s.push_back(a);
  return s;
}

std::vector<Composition> all_compositions(int d, int n) {
  std::vector<Composition> out;
  std::vector<int> parts(d, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == d - 1) {
      parts[pos] = left;
      out.push_back(Composition{parts});
      return;
    }
    for (int k = 0; k <= left; ++k) {
      parts[pos] = k;
      rec(pos + 1, left - k);
    }
  };
  if (d >= 1) rec(0, n);
  return out;
}

bool in_young_subgroup(const Perm& w, const Composition& mu) {
  int start = 0;
  for (int p : mu.parts) {
    for (int i = start; i < start + p; ++i)
      if (w[i] < start || w[i] >= start + p) return false;
    start += p;
  }
  return true;
}

bool is_refinement(const std::vector<int>& parts, const Composition& mu) {
  std::vector<int> items;
  for (int p : parts)
    if (p > 0) items.push_back(p);
  std::sort(items.rbegin(), items.rend());
  std::vector<int> room = mu.parts;
  if (std::accumulate(items.begin(), items.end(), 0) != mu.n()) return false;
  std::function<bool(std::size_t)> place = [&](std::size_t k) {
    if (k == items.size()) return true;
    for (std::size_t b = 0; b < room.size(); ++b) {
      if (room[b] < items[k]) continue;
      // skip bins equivalent to one already tried
      bool dup = false;
      for (std::size_t c = 0; c < b; ++c)
        if (room[c] == room[b]) dup = true;
      if (dup) continue;
      room[b] -= items[k];
      if (place(k + 1)) return true;
      room[b] += items[k];
    }
    return false;
  };
  return place(0);
}

// ---------------------------------------------------------------- characters

Composition Character::composition(int d) const {
  Composition c{std::vector<int>(d, 0)};
  for (int a : colors) {
    if (a < 1 || a > d) throw IndexError("color " + std::to_string(a) + " outside 1.." + std::to_string(d));
    ++c.parts[a - 1];
  }
  return c;
}

std::string Character::to_string() const {
  std::string s = "(";
  for (int i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(colors[i]);
  return s + ")";
}

Character chi0(const Composition& mu) {
  Character c;
  for (int a = 1; a <= mu.d(); ++a) c.colors.insert(c.colors.end(), mu.parts[a - 1], a);
  return c;
}

Character act(const Perm& w, const Character& chi) {
  Character r;
  r.colors.resize(chi.colors.size());
  for (int i = 0; i < w.size(); ++i) r.colors[w[i]] = chi.colors[i];
  return r;
}

Perm pi_chi(const Character& chi, int d) {
  const Composition mu = chi.composition(d);
  std::vector<int> next(d);
  for (int a = 1; a <= d; ++a) next[a - 1] = mu.offset(a);
  std::vector<int> inv(chi.colors.size());
  for (int j = 0; j < chi.n(); ++j) inv[j] = next[chi.colors[j] - 1]++;
  return Perm::from_images0(std::move(inv)).inverse();
}

std::vector<Character> enumerate_characters(int d, int n, const std::optional<Composition>& mu) {
  std::vector<Character> out;
  Character c{std::vector<int>(n, 1)};
  for (;;) {
    if (!mu || c.composition(d) == *mu) out.push_back(c);
    int j = n - 1;
    while (j >= 0 && c.colors[j] == d) c.colors[j--] = 1;
    if (j < 0) break;
    ++c.colors[j];
  }
  return out;
}

}  // namespace yh
