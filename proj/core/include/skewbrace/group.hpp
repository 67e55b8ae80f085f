#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "skewbrace/error.hpp"

namespace skewbrace {

/// A finite group stored as its full Cayley table over 0..n-1 with identity 0.
///
/// Instances only come out of validate_table() (or the built-in constructors,
/// which go through it), so every GroupTable in the program satisfies the
/// group axioms. Immutable after construction.
class GroupTable {
 public:
  int order() const noexcept { return n_; }

  Element operator()(Element a, Element b) const noexcept {
    return cells_[static_cast<std::size_t>(a) * n_ + b];
  }
  /// Range-checked product; throws Error(kOutOfRange).
  Element multiply(Element a, Element b) const;
  /// Range-checked two-sided inverse; throws Error(kOutOfRange).
  Element inverse(Element a) const;
  Element inverse_unchecked(Element a) const noexcept { return inverses_[a]; }

  bool contains(Element a) const noexcept { return a >= 0 && a < n_; }
  bool is_abelian() const noexcept;
  /// Order of `a` in the group.
  int element_order(Element a) const;

  /// Row-major n*n cells.
  std::span<const Element> cells() const noexcept { return cells_; }
  std::vector<std::vector<Element>> rows() const;

  friend bool operator==(const GroupTable& lhs, const GroupTable& rhs) {
    return lhs.n_ == rhs.n_ && lhs.cells_ == rhs.cells_;
  }
  /// Orders first by size, then lexicographically on row-major cells.
  friend std::strong_ordering operator<=>(const GroupTable& lhs, const GroupTable& rhs);

 private:
  friend GroupTable validate_table(int n, std::span<const Element> cells);

  GroupTable(int n, std::vector<Element> cells);

  int n_ = 0;
  std::vector<Element> cells_;
  std::vector<Element> inverses_;
};

/// A bijection on 0..n-1.
class PermMap {
 public:
  /// Throws Error(kNotBijective) if `image` is not a permutation of 0..n-1.
  explicit PermMap(std::vector<Element> image);

  static PermMap identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  Element operator()(Element x) const noexcept { return image_[x]; }
  std::span<const Element> image() const noexcept { return image_; }

  /// (this * other)(x) = this(other(x)).
  PermMap compose(const PermMap& other) const;
  PermMap inverse() const;
  bool is_identity() const noexcept;

  friend bool operator==(const PermMap&, const PermMap&) = default;
  friend auto operator<=>(const PermMap&, const PermMap&) = default;

 private:
  std::vector<Element> image_;
};

/// Validates a row-major n*n table. Checks run in this order and the first
/// failure is reported: shape, range (row-major), identity row/column, Latin
/// rows then columns, associativity (lexicographically first triple).
GroupTable validate_table(int n, std::span<const Element> cells);
GroupTable validate_table(const std::vector<std::vector<Element>>& rows);

/// Free-function spellings of the table lookups.
inline Element multiply(const GroupTable& g, Element a, Element b) { return g.multiply(a, b); }
inline Element inverse(const GroupTable& g, Element a) { return g.inverse(a); }

/// Whether `p` fixes 0 and satisfies p(a*b) = p(a)*p(b).
bool is_automorphism(const GroupTable& g, const PermMap& p);

/// All automorphisms of `g`, sorted lexicographically by image array.
/// Orders up to 8 scan every permutation fixing 0; larger orders extend
/// assignments of a generating set.
std::vector<PermMap> automorphisms(const GroupTable& g);

namespace detail {
std::vector<PermMap> automorphisms_brute_force(const GroupTable& g);
std::vector<PermMap> automorphisms_by_generators(const GroupTable& g);
}  // namespace detail

/// Greedy generating set: repeatedly adds the smallest element outside the
/// subgroup generated so far.
std::vector<Element> generating_set(const GroupTable& g);

/// Relabels `g` through `p`: result(p(a), p(b)) = p(a*b). `p` must fix 0.
GroupTable relabel(const GroupTable& g, const PermMap& p);

// Built-in groups with fixed element numbering.

/// Z/n under addition mod n; element k is the residue k.
GroupTable cyclic_group(int n);

/// Klein four-group {0,1,2,3} under bitwise xor.
GroupTable klein_four_group();

/// Symmetric group on {0,1,2}. Elements, written as image arrays of the
/// permutation they stand for:
///   0 = [0,1,2] identity
///   1 = [1,0,2] transposition (0 1)
///   2 = [2,1,0] transposition (0 2)
///   3 = [0,2,1] transposition (1 2)
///   4 = [1,2,0] 3-cycle 0->1->2->0
///   5 = [2,0,1] 3-cycle 0->2->1->0
/// The product a*b is composition "b first, then a".
GroupTable symmetric_group_3();

/// Table of a binary operation given as a callable, validated.
template <typename Op>
GroupTable table_from_operation(int n, Op op) {
  std::vector<Element> cells(static_cast<std::size_t>(n) * n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      cells[static_cast<std::size_t>(a) * n + b] = op(a, b);
    }
  }
  return validate_table(n, cells);
}

}  // namespace skewbrace
