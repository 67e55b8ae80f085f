#pragma once

#include <utility>
#include <vector>

#include "skewbrace/brace.hpp"
#include "skewbrace/error.hpp"
#include "skewbrace/sweep.hpp"

namespace skewbrace {

using ElementPair = std::pair<Element, Element>;

/// A map R: B x B -> B x B on 0..n-1, stored as an n*n table of pairs.
/// Not assumed to solve anything; the check_* functions decide that.
class YbeMap {
 public:
  /// `entries[a * n + b]` = R(a, b). Throws Error(kMalformed) on a wrong size
  /// and Error(kOutOfRange) on an entry outside the carrier.
  YbeMap(int n, std::vector<ElementPair> entries);

  int order() const noexcept { return n_; }
  const ElementPair& operator()(Element a, Element b) const noexcept {
    return entries_[static_cast<std::size_t>(a) * n_ + b];
  }
  const std::vector<ElementPair>& entries() const noexcept { return entries_; }

  friend bool operator==(const YbeMap&, const YbeMap&) = default;

 private:
  int n_;
  std::vector<ElementPair> entries_;
};

/// R(a, b) = (sigma_a(b), tau_b(a)).
YbeMap build_r(const SkewBrace& b);
/// The same construction from precomputed (possibly non-brace) maps.
YbeMap build_r(const BraceMaps& maps);

/// R(a, b) = (b, a).
YbeMap swap_map(int n);

/// Compares (R x id)(id x R)(R x id) with (id x R)(R x id)(id x R) on every
/// triple (a, b, c), rightmost factor applied first. The witness is the
/// lexicographically first (a, b, c) where the two sides differ.
CheckResult check_ybe(const YbeMap& r, const SweepOptions& options = {});

/// Both sides of the braid relation at one triple, as evaluated by check_ybe.
struct YbeSides {
  std::vector<Element> left;
  std::vector<Element> right;
};
YbeSides evaluate_ybe_sides(const YbeMap& r, Element a, Element b, Element c);

/// b -> first(R(a, b)) bijective for each a, and a -> second(R(a, b))
/// bijective for each b. Witness: {0, a} for a failing left family,
/// {1, b} for a failing right family.
CheckResult check_nondegenerate(const YbeMap& r);

/// R is a bijection of B x B. Witness: the two smallest input pairs
/// (a1, b1, a2, b2) sharing an output.
CheckResult check_bijective(const YbeMap& r);

/// first(R(a, b)) o second(R(a, b)) = a o b. Witness: (a, b).
CheckResult check_product_preservation(const SkewBrace& b, const YbeMap& r,
                                       const SweepOptions& options = {});

}  // namespace skewbrace
