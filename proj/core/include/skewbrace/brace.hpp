#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "skewbrace/error.hpp"
#include "skewbrace/group.hpp"
#include "skewbrace/sweep.hpp"

namespace skewbrace {

/// A skew left brace: two group structures `dot` and `circ` on 0..n-1 that
/// share the identity 0 and satisfy
///
///   x o (y . z) = (x o y) . x^-1 . (x o z)   for all x, y, z,
///
/// where x^-1 is the dot-inverse. Only make_brace() and the named
/// constructors create instances, so the law always holds.
class SkewBrace {
 public:
  int order() const noexcept { return dot_.order(); }
  const GroupTable& dot() const noexcept { return dot_; }
  const GroupTable& circ() const noexcept { return circ_; }

  /// Total order used by catalogs: circ table first, then dot table.
  friend std::strong_ordering operator<=>(const SkewBrace& lhs, const SkewBrace& rhs) {
    if (auto c = lhs.circ_ <=> rhs.circ_; c != 0) return c;
    return lhs.dot_ <=> rhs.dot_;
  }
  friend bool operator==(const SkewBrace& lhs, const SkewBrace& rhs) {
    return lhs.circ_ == rhs.circ_ && lhs.dot_ == rhs.dot_;
  }

 private:
  friend SkewBrace make_brace(GroupTable dot, GroupTable circ);

  SkewBrace(GroupTable dot, GroupTable circ) : dot_(std::move(dot)), circ_(std::move(circ)) {}

  GroupTable dot_;
  GroupTable circ_;
};

/// Checks the compatibility law over all n^3 triples. The witness is the
/// lexicographically first failing (x, y, z).
/// Throws Error(kCarrierMismatch) or Error(kIdentityMismatch).
CheckResult check_compatibility(const GroupTable& dot, const GroupTable& circ,
                                const SweepOptions& options = {});

/// Throws Error(kNotABrace) carrying the failing triple.
SkewBrace make_brace(GroupTable dot, GroupTable circ);

/// circ = dot.
SkewBrace trivial_brace(const GroupTable& g);
/// x circ y = y dot x.
SkewBrace opposite_brace(const GroupTable& g);

/// sigma_x(y) = x^-1 . (x o y). Range-checked.
Element sigma(const SkewBrace& b, Element x, Element y);
/// tau_y(x) = inv_o(sigma_x(y)) o x o y, evaluated left to right. Range-checked.
Element tau(const SkewBrace& b, Element y, Element x);

PermMap sigma_perm(const SkewBrace& b, Element x);
PermMap tau_perm(const SkewBrace& b, Element y);

/// Precomputed sigma and tau tables for sweeps that evaluate them n^3 times.
class BraceMaps {
 public:
  explicit BraceMaps(const SkewBrace& b);
  /// The same formulas evaluated on any pair of groups over one carrier.
  BraceMaps(const GroupTable& dot, const GroupTable& circ);

  int order() const noexcept { return n_; }
  /// sigma_x(y)
  Element sigma(Element x, Element y) const noexcept { return sigma_[x * n_ + y]; }
  /// tau_y(x)
  Element tau(Element y, Element x) const noexcept { return tau_[y * n_ + x]; }

  PermMap sigma_perm(Element x) const;
  PermMap tau_perm(Element y) const;

 private:
  int n_;
  std::vector<Element> sigma_;
  std::vector<Element> tau_;
};

// Exhaustive identity checks. Pair checks report (a, b); triple checks
// report (x, y, z) with the letters as written below.

/// a^-1 . (a o b^-1) . a^-1 = (a o b)^-1
CheckResult check_lemma_inverse(const SkewBrace& b, const SweepOptions& options = {});
/// sigma_{x o y}(z) = sigma_x(sigma_y(z))
CheckResult check_sigma_homomorphism(const SkewBrace& b, const SweepOptions& options = {});
/// tau_{y o z}(x) = tau_z(tau_y(x))
CheckResult check_tau_antihomomorphism(const SkewBrace& b, const SweepOptions& options = {});
/// sigma_x(y o z) = sigma_x(y) o sigma_{tau_y(x)}(z)
CheckResult check_sigma_twisted_product(const SkewBrace& b, const SweepOptions& options = {});
/// sigma_x(y . z) = sigma_x(y) . sigma_x(z)
CheckResult check_sigma_automorphism(const SkewBrace& b, const SweepOptions& options = {});
/// sigma_x(y) o tau_y(x) = x o y, reported as (x, y).
CheckResult check_sigma_tau_factorization(const SkewBrace& b, const SweepOptions& options = {});

/// The sigma composition law sigma_{x o y}(z) = sigma_x(sigma_y(z)) for an
/// arbitrary pair of groups on the same carrier (no brace assumed).
CheckResult sigma_composition_law(const GroupTable& dot, const GroupTable& circ,
                                  const SweepOptions& options = {});

/// Names used in reports, in suite order.
inline constexpr const char* kCompatibility = "compatibility";
inline constexpr const char* kInverseLemma = "inverse lemma";
inline constexpr const char* kSigmaHomomorphism = "sigma homomorphism";
inline constexpr const char* kTauAntiHomomorphism = "tau anti-homomorphism";
inline constexpr const char* kSigmaTwistedProduct = "sigma twisted product";
inline constexpr const char* kSigmaAutomorphism = "sigma automorphism";
inline constexpr const char* kProductPreservation = "product preservation";

struct IdentityOutcome {
  const char* name;
  CheckResult result;
};

struct SuiteOptions {
  int jobs = 1;
  /// Streams every failure of every identity when set.
  std::function<void(const char* name, const std::vector<Element>&)> on_failure;
};

/// Runs every brace identity above, plus product preservation of the R-map
/// (same witness convention as check_sigma_tau_factorization), on an
/// arbitrary pair of groups. On a genuine brace all of them hold.
std::vector<IdentityOutcome> identity_suite(const GroupTable& dot, const GroupTable& circ,
                                            const SuiteOptions& options = {});

/// True when the compatibility law and the sigma composition law agree on
/// (dot, circ): both hold or both fail.
bool check_gv_equivalence(const GroupTable& dot, const GroupTable& circ);

}  // namespace skewbrace
