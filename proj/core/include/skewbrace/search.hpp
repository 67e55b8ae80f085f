#pragma once

#include <cstddef>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/group.hpp"

namespace skewbrace {

inline constexpr int kMaxSearchOrder = 8;
inline constexpr int kMaxOracleOrder = 5;

/// Skew braces of one order in canonical order (circ table, then dot table).
///
/// Raw catalogs hold every brace whose dot table is one of the canonical group
/// representatives from enumerate_groups(). Up-to-isomorphism catalogs hold
/// the canonical form of each isomorphism class.
struct BraceCatalog {
  int order = 0;
  std::vector<SkewBrace> braces;
  bool up_to_iso = false;

  friend bool operator==(const BraceCatalog&, const BraceCatalog&) = default;
};

/// All groups of the given order up to isomorphism. Each is represented by the
/// lexicographically smallest Cayley table among its relabelings fixing 0, and
/// the list is sorted. Throws Error(kOrderTooLarge) above kMaxSearchOrder.
std::vector<GroupTable> enumerate_groups(int order);

/// Every circ making (g, circ) a skew brace, sorted by circ table.
///
/// Backtracks over maps x -> sigma_x in Aut(g), with x o y := x . sigma_x(y),
/// propagating sigma_{x o y} = sigma_x sigma_y as soon as both factors are
/// assigned. Each result is re-checked with check_compatibility().
std::vector<SkewBrace> enumerate_braces_on_group(const GroupTable& g, int jobs = 1);

/// Union of enumerate_braces_on_group() over enumerate_groups(order),
/// optionally reduced to canonical forms of isomorphism classes.
BraceCatalog enumerate_braces(int order, bool up_to_iso, int jobs = 1);

/// Naive cross-check for enumerate_braces(): generates every group table on
/// the carrier by Latin-square search, pairs them, and keeps the pairs that
/// satisfy the compatibility law. Throws Error(kOrderTooLarge) above
/// kMaxOracleOrder.
BraceCatalog oracle_enumerate(int order, bool up_to_iso);

/// Whether some permutation fixing 0 carries both operations of `lhs` onto
/// those of `rhs`.
bool brace_isomorphic(const SkewBrace& lhs, const SkewBrace& rhs);

/// Relabels both tables through `p` (which must fix 0).
SkewBrace relabel(const SkewBrace& b, const PermMap& p);

/// The lexicographically smallest (circ, dot) pair among all relabelings of
/// `b` fixing 0.
SkewBrace canonical_form(const SkewBrace& b);

/// One canonical form per isomorphism class, sorted. The result does not
/// depend on the order of `braces`.
std::vector<SkewBrace> dedup_up_to_iso(const std::vector<SkewBrace>& braces);

}  // namespace skewbrace
