#pragma once

// Type A combinatorics: permutations, d-compositions and their socles,
// characters of (Z/d)^n and minimal coset representatives.
//
// Conventions used throughout the library:
//  * permutations act on positions 0..n-1 internally; every public index that
//    names a generator s_i, a strand t_j or a color is 1-based;
//  * composition is (vw)(i) = v(w(i));
//  * a permutation acts on characters by w(chi)_i = chi_{w^{-1}(i)}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace yh {

class Perm {
 public:
  Perm() = default;
  explicit Perm(int n);  // identity
  /// From 1-based one-line notation.
  static Perm from_one_line(const std::vector<int>& images);
  /// From 0-based images (no validation beyond bijectivity).
  static Perm from_images0(std::vector<int> images);
  /// Adjacent transposition s_i, 1 <= i < n.
  static Perm simple(int n, int i);
  /// Product s_{w_1} s_{w_2} ... of 1-based letters.
  static Perm from_word(int n, const std::vector<int>& word);

  int size() const { return static_cast<int>(img_.size()); }
  /// 0-based image of 0-based position.
  int operator[](int i) const { return img_[i]; }
  const std::vector<int>& images0() const { return img_; }
  std::vector<int> one_line() const;

  int length() const;  // number of inversions
  bool is_identity() const;
  Perm inverse() const;
  /// Does w s_i have smaller length (w(i) > w(i+1), 1-based)?
  bool right_descent(int i) const { return img_[i - 1] > img_[i]; }
  /// w s_i
  Perm times_simple(int i) const;
  /// Reduced word in 1-based letters; multiplies back to *this.
  std::vector<int> reduced_word() const;
  /// Cycle lengths in non-increasing order.
  std::vector<int> cycle_type() const;

  friend Perm operator*(const Perm& v, const Perm& w);
  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }
  std::string to_string() const;

 private:
  explicit Perm(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

/// All permutations of size n in lexicographic one-line order.
std::vector<Perm> all_perms(int n);

/// A d-composition of n: d non-negative parts summing to n.
struct Composition {
  std::vector<int> parts;

  int d() const { return static_cast<int>(parts.size()); }
  int n() const;
  /// Sum of parts before color a (1-based).
  int offset(int a) const;
  /// Number of non-zero parts.
  int support_size() const;
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
  std::string to_string() const;
};

/// Multinomial n!/(mu_1!...mu_d!).
std::uint64_t m_mu(const Composition& mu);
Composition socle_of(const Composition& mu);
/// S (1-based colors) -> 0/1 composition; S must be non-empty.
Composition subset_to_socle(const std::vector<int>& subset, int d);
std::vector<int> socle_to_subset(const Composition& socle);
/// All d-compositions of n in lexicographic order of parts.
std::vector<Composition> all_compositions(int d, int n);
/// Does w preserve each block {offset(a), ..., offset(a)+mu_a-1}?
bool in_young_subgroup(const Perm& w, const Composition& mu);

/// Can the parts of `parts` be grouped so that the group sums equal mu's parts?
bool is_refinement(const std::vector<int>& parts, const Composition& mu);

/// A character of (Z/d)^n: colors[j] = a means chi(t_{j+1}) = xi_a, a in 1..d.
struct Character {
  std::vector<int> colors;

  int n() const { return static_cast<int>(colors.size()); }
  Composition composition(int d) const;
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
  std::string to_string() const;
};

/// The character with colors in non-decreasing order and composition mu.
Character chi0(const Composition& mu);
/// w(chi)_i = chi_{w^{-1}(i)}.
Character act(const Perm& w, const Character& chi);
/// The minimal-length permutation with pi(chi0(Comp chi)) = chi.
Perm pi_chi(const Character& chi, int d);
/// All characters (or those with composition mu), lexicographic.
std::vector<Character> enumerate_characters(int d, int n, const std::optional<Composition>& mu = std::nullopt);

}  // namespace yh
